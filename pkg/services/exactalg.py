# services/exactalg.py
"""
Exact arithmetic: polynomials in q, Laurent polynomials in t over Z[q],
q-integers and their factorials/binomials, and determinants over the
fraction field of Z[q].

All values are immutable once built. Coefficients are Python ints, so there
is no overflow; division and gcd go through sympy's ``Poly`` over ``ZZ``.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Any, Iterable, Mapping, Sequence

from sympy import Poly, Symbol, ZZ

from frameworks.errors import InternalArithmeticError

logger = logging.getLogger(__name__)

_Q = Symbol("q")


# =========================
# QPoly
# =========================


class QPoly:
    """A polynomial in q with integer coefficients, stored as {exponent: coeff}."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if coeffs:
            for exp, c in coeffs.items():
                exp = int(exp)
                if exp < 0:
                    raise ValueError(f"negative q-exponent {exp}")
                c = int(c)
                if c:
                    clean[exp] = c
        self._coeffs = clean
        self._hash: int | None = None

    # ---- constructors ----
    @classmethod
    def zero(cls) -> QPoly:
        return cls()

    @classmethod
    def one(cls) -> QPoly:
        return cls({0: 1})

    @classmethod
    def constant(cls, c: int) -> QPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> QPoly:
        return cls({exp: c})

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> QPoly:
        """Coefficients listed from q^0 upward."""
        return cls(dict(enumerate(coeffs)))

    # ---- access ----
    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    @property
    def low_degree(self) -> int:
        return min(self._coeffs) if self._coeffs else -1

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def leading_coeff(self) -> int:
        return self._coeffs[self.degree] if self._coeffs else 0

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def eval(self, q: int) -> int:
        return sum(c * q**e for e, c in self._coeffs.items())

    # ---- arithmetic ----
    def __add__(self, other: Any) -> QPoly:
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Any) -> QPoly:
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> QPoly:
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> QPoly:
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> QPoly:
        """Multiply by q^k (k may be negative if the result stays polynomial)."""
        return QPoly({e + k: c for e, c in self._coeffs.items()})

    def reflect(self, d: int) -> QPoly:
        """q^d * p(1/q)."""
        if self._coeffs and d < self.degree:
            raise ValueError(f"reflection degree {d} below polynomial degree {self.degree}")
        return QPoly({d - e: c for e, c in self._coeffs.items()})

    def exact_div(self, other: QPoly | int) -> QPoly:
        """Quotient in Z[q]; any remainder is an arithmetic bug and aborts."""
        divisor = _as_qpoly(other)
        if divisor is None or divisor.is_zero:
            raise InternalArithmeticError("division by the zero polynomial", module="exactalg")
        quotient, remainder = _to_sympy(self).div(_to_sympy(divisor))
        if not remainder.is_zero:
            raise InternalArithmeticError(
                f"non-exact division of {self} by {divisor}", module="exactalg"
            )
        return _from_sympy(quotient)

    # ---- comparison ----
    def __eq__(self, other: object) -> bool:
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = ""
        for e, c in self.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else ("+" if out else "")
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"QPoly({self})"


def _as_qpoly(value: Any) -> QPoly | None:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly.constant(value)
    return None


def _to_sympy(p: QPoly) -> Poly:
    if p.is_zero:
        return Poly(0, _Q, domain=ZZ)
    return Poly.from_dict({(e,): c for e, c in p.items()}, _Q, domain=ZZ)


def _from_sympy(poly: Poly) -> QPoly:
    coeffs: dict[int, int] = {}
    for (exp,), c in poly.terms():
        if not c.is_Integer:
            raise InternalArithmeticError(f"non-integer coefficient {c} in {poly}", module="exactalg")
        coeffs[int(exp)] = int(c)
    return QPoly(coeffs)


# =========================
# LaurentQT
# =========================


class LaurentQT:
    """A Laurent polynomial in t with QPoly coefficients, stored as {t_exponent: QPoly}."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, QPoly | int] | None = None):
        clean: dict[int, QPoly] = {}
        if terms:
            for k, c in terms.items():
                c = _as_qpoly(c)
                if c is None:
                    raise TypeError(f"unsupported LaurentQT coefficient {c!r}")
                if not c.is_zero:
                    clean[int(k)] = c
        self._terms = clean
        self._hash: int | None = None

    # ---- constructors ----
    @classmethod
    def zero(cls) -> LaurentQT:
        return cls()

    @classmethod
    def one(cls) -> LaurentQT:
        return cls({0: QPoly.one()})

    @classmethod
    def constant(cls, c: QPoly | int) -> LaurentQT:
        return cls({0: c})

    @classmethod
    def t_power(cls, k: int, coeff: QPoly | int = 1) -> LaurentQT:
        return cls({k: coeff})

    @classmethod
    def t_range(cls, lo: int, hi: int) -> LaurentQT:
        """t^lo + t^(lo+1) + ... + t^hi; zero when hi < lo."""
        return cls({k: 1 for k in range(lo, hi + 1)})

    @classmethod
    def from_counts(cls, counts: Mapping[tuple[int, int], int]) -> LaurentQT:
        """Build from {(t_exp, q_exp): count}."""
        grouped: dict[int, dict[int, int]] = {}
        for (t_exp, q_exp), c in counts.items():
            row = grouped.setdefault(t_exp, {})
            row[q_exp] = row.get(q_exp, 0) + c
        return cls({k: QPoly(v) for k, v in grouped.items()})

    # ---- access ----
    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> list[tuple[int, QPoly]]:
        return sorted(self._terms.items())

    def coeff(self, k: int) -> QPoly:
        return self._terms.get(k, QPoly.zero())

    @property
    def min_t(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_t(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_q_free(self) -> bool:
        return all(c.degree <= 0 for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c.is_nonnegative() for c in self._terms.values())

    def coeff_q(self, k: int) -> LaurentQT:
        """Coefficient of q^k, as a q-free Laurent polynomial in t."""
        return LaurentQT({t: c.coeff(k) for t, c in self._terms.items()})

    # ---- arithmetic ----
    def __add__(self, other: Any) -> LaurentQT:
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentQT(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentQT:
        return LaurentQT({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Any) -> LaurentQT:
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> LaurentQT:
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> LaurentQT:
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        out: dict[int, QPoly] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                prod = c1 * c2
                out[k1 + k2] = out[k1 + k2] + prod if k1 + k2 in out else prod
        return LaurentQT(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentQT:
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentQT.one()
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentQT:
        """Multiply by t^k."""
        return LaurentQT({e + k: c for e, c in self._terms.items()})

    def reflect(self, d: int) -> LaurentQT:
        """t^d * f(1/t)."""
        return LaurentQT({d - e: c for e, c in self._terms.items()})

    def is_palindromic(self, d: int) -> bool:
        return self.reflect(d) == self

    # ---- specialization ----
    def eval_t(self, t: int) -> QPoly:
        """Substitute an integer for t. Negative exponents need t = 1 or -1."""
        total = QPoly.zero()
        for k, c in self._terms.items():
            if k < 0 and t not in (1, -1):
                raise ValueError(f"cannot evaluate t^{k} at t={t}")
            factor = t**k if k >= 0 else t ** (-k)
            total = total + c * factor
        return total

    def eval_q(self, q: int) -> LaurentQT:
        return LaurentQT({k: c.eval(q) for k, c in self._terms.items()})

    def at_q1(self) -> LaurentQT:
        return self.eval_q(1)

    def as_int(self) -> int:
        """The value of a q-free constant."""
        if self.is_zero:
            return 0
        if set(self._terms) != {0} or self._terms[0].degree > 0:
            raise ValueError(f"{self} is not an integer constant")
        return self._terms[0].coeff(0)

    # ---- serialization ----
    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"t": k, "q": [[e, str(c)] for e, c in coeff.items()]}
            for k, coeff in self.items()
        ]

    @classmethod
    def from_json(cls, payload: Iterable[Mapping[str, Any]]) -> LaurentQT:
        terms: dict[int, QPoly] = {}
        for term in payload:
            terms[int(term["t"])] = QPoly({int(e): int(c) for e, c in term["q"]})
        return cls(terms)

    # ---- comparison ----
    def __eq__(self, other: object) -> bool:
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            parts.append(f"({c})" if k == 0 else f"({c})t^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentQT({self})"


def _as_laurent(value: Any) -> LaurentQT | None:
    if isinstance(value, LaurentQT):
        return value
    if isinstance(value, (QPoly, int)):
        return LaurentQT.constant(value)
    return None


# =========================
# QFrac
# =========================


class QFrac:
    """A reduced fraction of QPolys; the denominator has positive leading coefficient."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: QPoly | int, denominator: QPoly | int = 1):
        num = _as_qpoly(numerator)
        den = _as_qpoly(denominator)
        if num is None or den is None:
            raise TypeError("QFrac parts must be QPoly or int")
        if den.is_zero:
            raise InternalArithmeticError("zero denominator", module="exactalg")
        self.numerator, self.denominator = _reduce(num, den)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __add__(self, other: Any) -> QFrac:
        other = _as_qfrac(other)
        if other is None:
            return NotImplemented
        return QFrac(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> QFrac:
        return QFrac(-self.numerator, self.denominator)

    def __sub__(self, other: Any) -> QFrac:
        other = _as_qfrac(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> QFrac:
        other = _as_qfrac(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> QFrac:
        other = _as_qfrac(other)
        if other is None:
            return NotImplemented
        return QFrac(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> QFrac:
        other = _as_qfrac(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise InternalArithmeticError("division by a zero fraction", module="exactalg")
        return QFrac(self.numerator * other.denominator, self.denominator * other.numerator)

    def to_qpoly(self) -> QPoly:
        """The fraction as a polynomial; fails unless the denominator is 1."""
        if self.denominator != 1:
            raise InternalArithmeticError(
                f"{self} is not a polynomial", module="exactalg"
            )
        return self.numerator

    def __eq__(self, other: object) -> bool:
        other = _as_qfrac(other)
        if other is None:
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"QFrac(({self.numerator})/({self.denominator}))"


def _as_qfrac(value: Any) -> QFrac | None:
    if isinstance(value, QFrac):
        return value
    if isinstance(value, (QPoly, int)):
        return QFrac(value)
    return None


def _reduce(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if num.is_zero:
        return QPoly.zero(), QPoly.one()
    g = _from_sympy(_to_sympy(num).gcd(_to_sympy(den)))
    if g != 1:
        num, den = num.exact_div(g), den.exact_div(g)
    if den.leading_coeff() < 0:
        num, den = -num, -den
    return num, den


# =========================
# q-integers
# =========================


def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return QPoly({i: 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    result = QPoly.one()
    for i in range(2, n + 1):
        result = result * q_int(i)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


@lru_cache(maxsize=None)
def _q_multinomial(parts: tuple[int, ...]) -> QPoly:
    denominator = QPoly.one()
    for part in parts:
        denominator = denominator * q_factorial(part)
    return q_factorial(sum(parts)).exact_div(denominator)


def q_multinomial(parts: Sequence[int]) -> QPoly:
    """[n]_q! / prod [nu_i]_q! for a composition nu of n (zero parts allowed)."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"q_multinomial needs nonnegative parts, got {parts}")
    # The value does not depend on part order or on zero parts.
    return _q_multinomial(tuple(sorted((p for p in parts if p), reverse=True)))


def inverse_q_factorial(m: int) -> QFrac:
    """1/[m]_q! with the conventions 1/[0]_q! = 1 and 1/[m]_q! = 0 for m < 0."""
    if m < 0:
        return QFrac(0)
    return QFrac(1, q_factorial(m))


# =========================
# Determinants
# =========================


def det_qfrac(matrix: Sequence[Sequence[QFrac | QPoly | int]]) -> QFrac:
    """Determinant over Frac(Z[q]) by Gaussian elimination with nonzero pivots."""
    size = len(matrix)
    if size == 0:
        raise ValueError("det_qfrac needs a matrix of size >= 1")
    rows: list[list[QFrac]] = []
    for row in matrix:
        if len(row) != size:
            raise ValueError("det_qfrac needs a square matrix")
        converted = []
        for entry in row:
            value = _as_qfrac(entry)
            if value is None:
                raise TypeError(f"unsupported matrix entry {entry!r}")
            converted.append(value)
        rows.append(converted)

    det = QFrac(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if not rows[r][col].is_zero), None)
        if pivot is None:
            return QFrac(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        for r in range(col + 1, size):
            if rows[r][col].is_zero:
                continue
            factor = rows[r][col] / p
            rows[r] = [rows[r][c] - factor * rows[col][c] for c in range(size)]
    return det
