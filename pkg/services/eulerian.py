# services/eulerian.py
"""
Eulerian and binomial Eulerian quasisymmetric functions.

Q_n, Q_n^0 and Qtilde_n are computed by enumeration; the closed forms
(h.Q definitions, the generating function, the difference formulas) are
computed separately and compared against them.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable, Iterable, Optional

from frameworks.config import check_guard
from frameworks.errors import IdentityFailure, InternalArithmeticError
from services.exactalg import LaurentQT, QPoly
from services.permstat import (
    Word,
    dex,
    dex_decorated,
    exc_decorated,
    fix2,
    gen_decorated,
    gen_derangements,
    gen_permutations,
    stats,
)
from services.qsym import (
    QSymElem,
    coefficient_of_q,
    coefficient_of_t,
    h_complete,
    h_of_composition,
    multiply,
    shift_t,
)

logger = logging.getLogger(__name__)

# (subset, t exponent, q exponent) or None to skip the word
Weight = Callable[[Word], Optional[tuple[frozenset[int], int, int]]]


def _f_expansion(n: int, words: Iterable[Word], weight: Weight) -> QSymElem:
    rows: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for w in words:
        value = weight(w)
        if value is None:
            continue
        subset, t_exp, q_exp = value
        counts = rows.setdefault(tuple(sorted(subset)), {})
        counts[(t_exp, q_exp)] = counts.get((t_exp, q_exp), 0) + 1
    return QSymElem({n: {s: LaurentQT.from_counts(c) for s, c in rows.items()}})


def _mismatch(what: str, witness: dict) -> IdentityFailure:
    logger.error(f"{what}: {witness}")
    return IdentityFailure(what, module="eulerian", witness=witness)


# =========================
# Eulerian quasisymmetric functions
# =========================


@lru_cache(maxsize=None)
def Q(n: int) -> QSymElem:
    """Q_n(x,t) = sum over S_n of F_{DEX,n} t^exc."""
    check_guard("eulerian", n, module="eulerian")
    return _f_expansion(n, gen_permutations(n), lambda w: (dex(w), stats(w).exc, 0))


@lru_cache(maxsize=None)
def Q0(n: int) -> QSymElem:
    """Derangement version of Q_n."""
    check_guard("eulerian", n, module="eulerian")
    return _f_expansion(n, gen_derangements(n), lambda w: (dex(w), stats(w).exc, 0))


@lru_cache(maxsize=None)
def _Q_marked_by_fix(n: int) -> QSymElem:
    # t carries exc, q carries fix
    check_guard("eulerian", n, module="eulerian")
    return _f_expansion(n, gen_permutations(n), lambda w: (dex(w), stats(w).exc, stats(w).fix))


def Q_fix_refined(n: int) -> dict[int, QSymElem]:
    """{k: sum over S_n with fix = k of F_{DEX,n} t^exc}."""
    marked = _Q_marked_by_fix(n)
    parts = {k: coefficient_of_q(marked, k) for k in range(n + 1)}
    return {k: x for k, x in parts.items() if not x.is_zero}


def Q_njk(n: int, j: int, k: int) -> QSymElem:
    """Sum of F_{DEX,n} over permutations with exc = j and fix = k."""
    if not (0 <= j <= n and 0 <= k <= n):
        raise ValueError(f"Q_njk needs 0 <= j, k <= n, got n={n}, j={j}, k={k}")
    return coefficient_of_t(coefficient_of_q(_Q_marked_by_fix(n), k), j)


def Q_nj(n: int, j: int) -> QSymElem:
    return coefficient_of_t(Q(n), j)


def recurrence_Q(n: int) -> QSymElem:
    """Q_n = h_n + t sum_{j=0}^{n-2} h_{n-j} Q_j (1 + t + ... + t^(n-j-2))."""
    total = h_complete(n)
    for j in range(n - 1):
        block = multiply(h_complete(n - j), Q(j)).scale(LaurentQT.t_range(1, n - j - 1))
        total = total + block
    return total


# =========================
# Binomial Eulerian quasisymmetric functions
# =========================


def Qtilde_by_definition(n: int) -> QSymElem:
    """h_n + t sum_{k=1}^n h_{n-k} Q_k."""
    total = h_complete(n)
    for k in range(1, n + 1):
        total = total + shift_t(multiply(h_complete(n - k), Q(k)), 1)
    return total


def Qtilde_by_words(n: int) -> QSymElem:
    """Sum over decorated permutations of F_{DEX,n} t^(exc+1)."""
    return _f_expansion(n, gen_decorated(n), lambda w: (dex_decorated(w), exc_decorated(w) + 1, 0))


@lru_cache(maxsize=None)
def Qtilde(n: int) -> QSymElem:
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_guard("eulerian", n, module="eulerian")
    by_definition = Qtilde_by_definition(n)
    by_words = Qtilde_by_words(n)
    if by_definition != by_words:
        raise _mismatch(f"Qtilde routes disagree at n={n}", {"n": n})
    return by_definition


def Qtilde_refined_by_definition(n: int) -> dict[int, QSymElem]:
    """{k: coefficient of r^k in h_n r^n + t sum_{k=1}^n h_{n-k} Q_k r^(n-k)}."""
    out: dict[int, QSymElem] = {n: h_complete(n)}
    for k in range(1, n + 1):
        term = shift_t(multiply(h_complete(n - k), Q(k)), 1)
        out[n - k] = out.get(n - k, QSymElem.zero()) + term
    return {r: x for r, x in out.items() if not x.is_zero}


def Qtilde_refined_by_words(n: int) -> dict[int, QSymElem]:
    marked = _f_expansion(
        n, gen_decorated(n), lambda w: (dex_decorated(w), exc_decorated(w) + 1, fix2(w))
    )
    parts = {r: coefficient_of_q(marked, r) for r in range(n + 1)}
    return {r: x for r, x in parts.items() if not x.is_zero}


@lru_cache(maxsize=None)
def _Qtilde_refined(n: int) -> tuple[tuple[int, QSymElem], ...]:
    check_guard("eulerian", n, module="eulerian")
    by_definition = Qtilde_refined_by_definition(n)
    by_words = Qtilde_refined_by_words(n)
    if by_definition != by_words:
        raise _mismatch(f"refined Qtilde routes disagree at n={n}", {"n": n})
    return tuple(sorted(by_definition.items()))


def Qtilde_refined(n: int) -> dict[int, QSymElem]:
    """Qtilde_n graded by fix_2: {r exponent: QSymElem in t}."""
    if n < 1:
        raise ValueError("Qtilde_refined needs n >= 1")
    return dict(_Qtilde_refined(n))


def Qtilde_njk(n: int, j: int, k: int) -> QSymElem:
    if not (0 <= j <= n and 0 <= k <= n):
        raise ValueError(f"Qtilde_njk needs 0 <= j, k <= n, got n={n}, j={j}, k={k}")
    if n == 0:
        return QSymElem.one() if j == k == 0 else QSymElem.zero()
    return coefficient_of_t(Qtilde_refined(n).get(k, QSymElem.zero()), j)


# =========================
# Generating function
# =========================

HPoly = dict[tuple[int, ...], LaurentQT]


def divide_by_one_minus_t(f: LaurentQT) -> LaurentQT:
    """g with (1 - t) g = f; aborts unless the division is exact."""
    if f.is_zero:
        return f
    out: dict[int, QPoly] = {}
    running = QPoly.zero()
    for k in range(f.min_t, f.max_t + 1):
        running = running + f.coeff(k)
        out[k] = running
    if not running.is_zero:
        raise InternalArithmeticError(f"{f} is not divisible by 1 - t", module="eulerian")
    return LaurentQT(out)


class HSeries:
    """A power series in z, truncated at ``order``, over polynomials in h_1, h_2, ...

    Each coefficient maps a partition (a monomial in the h's) to a LaurentQT.
    """

    def __init__(self, order: int, coeffs: list[HPoly]):
        self.order = order
        self.coeffs = [
            {nu: c for nu, c in (coeffs[i] if i < len(coeffs) else {}).items() if not c.is_zero}
            for i in range(order + 1)
        ]

    @classmethod
    def complete(cls, order: int, scale: LaurentQT) -> HSeries:
        """H(scale * z) = sum_n h_n scale^n z^n."""
        return cls(order, [{(n,) if n else (): scale**n} for n in range(order + 1)])

    def __sub__(self, other: HSeries) -> HSeries:
        out = []
        for a, b in zip(self.coeffs, other.coeffs):
            merged = dict(a)
            for nu, c in b.items():
                merged[nu] = merged[nu] - c if nu in merged else -c
            out.append(merged)
        return HSeries(self.order, out)

    def scale(self, factor: LaurentQT) -> HSeries:
        return HSeries(self.order, [{nu: c * factor for nu, c in row.items()} for row in self.coeffs])

    def map_coeffs(self, fn: Callable[[LaurentQT], LaurentQT]) -> HSeries:
        return HSeries(self.order, [{nu: fn(c) for nu, c in row.items()} for row in self.coeffs])

    @staticmethod
    def _mul_poly(a: HPoly, b: HPoly) -> HPoly:
        out: HPoly = {}
        for nu1, c1 in a.items():
            for nu2, c2 in b.items():
                nu = tuple(sorted(nu1 + nu2, reverse=True))
                out[nu] = out[nu] + c1 * c2 if nu in out else c1 * c2
        return out

    def divide(self, divisor: HSeries) -> HSeries:
        """self / divisor, for a divisor with constant term exactly 1."""
        const = divisor.coeffs[0]
        if const != {(): LaurentQT.one()}:
            raise InternalArithmeticError(
                "series divisor must have constant term 1", module="eulerian"
            )
        quotient: list[HPoly] = []
        for n in range(self.order + 1):
            current = dict(self.coeffs[n])
            for i in range(1, n + 1):
                for nu, c in self._mul_poly(divisor.coeffs[i], quotient[n - i]).items():
                    current[nu] = current[nu] - c if nu in current else -c
            quotient.append({nu: c for nu, c in current.items() if not c.is_zero})
        return HSeries(self.order, quotient)

    def to_qsym(self, n: int) -> QSymElem:
        total = QSymElem.zero()
        for nu, c in self.coeffs[n].items():
            total = total + h_of_composition(nu).scale(c)
        return total


def eulerian_series(order: int, *, refined: bool = False) -> HSeries:
    """(1-t) H(z) / (H(tz) - t H(z)), with H(rz) upstairs when refined.

    The marker r rides in the q slot of the coefficients.
    """
    t = LaurentQT.t_power(1)
    one_minus_t = LaurentQT.one() - t
    numerator_h = HSeries.complete(order, LaurentQT.constant(QPoly.monomial(1)) if refined else LaurentQT.one())
    numerator = numerator_h.scale(one_minus_t)
    denominator = HSeries.complete(order, t) - HSeries.complete(order, LaurentQT.one()).scale(t)
    numerator = numerator.map_coeffs(divide_by_one_minus_t)
    denominator = denominator.map_coeffs(divide_by_one_minus_t)
    return numerator.divide(denominator)


def gf_check(order: int) -> bool:
    """Compare the generating function and its fixed-point refinement with enumeration."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    check_guard("gf_order", order, module="eulerian")
    plain = eulerian_series(order)
    refined = eulerian_series(order, refined=True)
    ok = True
    for n in range(order + 1):
        if plain.to_qsym(n) != Q(n):
            logger.warning(f"Generating function disagrees with Q_{n}")
            ok = False
        series_n = refined.to_qsym(n)
        for k in range(n + 1):
            expected = QSymElem.zero()
            for j in range(n + 1):
                expected = expected + Q_njk(n, j, k).scale(LaurentQT.t_power(j))
            if coefficient_of_q(series_n, k) != expected:
                logger.warning(f"Refined generating function disagrees at n={n}, fix={k}")
                ok = False
    return ok


# =========================
# Differences between consecutive ranks
# =========================


def delta_chow_by_products(n: int, r: int) -> QSymElem:
    """sum_{i=0}^r h_{n-r+i} Q^0_{r-i} t^i."""
    total = QSymElem.zero()
    for i in range(r + 1):
        total = total + shift_t(multiply(h_complete(n - r + i), Q0(r - i)), i)
    return total


def delta_chow_by_words(n: int, r: int) -> QSymElem:
    """Sum over permutations with fix >= n - r of F_{DEX,n} t^(r-exc)."""

    def weight(w: Word):
        s = stats(w)
        if s.fix < n - r:
            return None
        return dex(w), r - s.exc, 0

    return _f_expansion(n, gen_permutations(n), weight)


def delta_chow(n: int, r: int) -> QSymElem:
    if not 1 <= r <= n - 1:
        raise ValueError(f"delta_chow needs 1 <= r <= n-1, got n={n}, r={r}")
    check_guard("eulerian", n, module="eulerian")
    by_products = delta_chow_by_products(n, r)
    by_words = delta_chow_by_words(n, r)
    if by_products != by_words:
        raise _mismatch(f"Chow difference expressions disagree at n={n}, r={r}", {"n": n, "r": r})
    return by_products


def delta_aug_by_products(n: int, r: int) -> QSymElem:
    """sum_{j=0}^r h_{n-j} Q_j t^(r-j+1)."""
    total = QSymElem.zero()
    for j in range(r + 1):
        total = total + shift_t(multiply(h_complete(n - j), Q(j)), r - j + 1)
    return total


def delta_aug_by_words(n: int, r: int) -> QSymElem:
    """Sum over decorated permutations with fix_2 >= n - r of F_{DEX,n} t^(r-exc)."""

    def weight(w: Word):
        if fix2(w) < n - r:
            return None
        return dex_decorated(w), r - exc_decorated(w), 0

    return _f_expansion(n, gen_decorated(n), weight)


def delta_aug(n: int, r: int) -> QSymElem:
    if not 1 <= r <= n - 1:
        raise ValueError(f"delta_aug needs 1 <= r <= n-1, got n={n}, r={r}")
    check_guard("eulerian", n, module="eulerian")
    by_products = delta_aug_by_products(n, r)
    by_words = delta_aug_by_words(n, r)
    if by_products != by_words:
        raise _mismatch(f"augmented difference expressions disagree at n={n}, r={r}", {"n": n, "r": r})
    return by_products
