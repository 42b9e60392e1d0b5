# services/qsym.py
"""
Quasisymmetric functions in the fundamental basis.

A ``QSymElem`` maps a degree n to a map from descent subsets S of [n-1]
(sorted tuples) to LaurentQT coefficients. Complete homogeneous, Schur and
ribbon Schur functions are embedded into the F-basis; all equality tests
happen there.
"""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from frameworks.config import max_shuffle_degree
from frameworks.errors import IdentityFailure, ResourceGuardError
from services.exactalg import LaurentQT, QPoly

logger = logging.getLogger(__name__)

Subset = tuple[int, ...]
Coeff = LaurentQT | QPoly | int


def _as_coeff(value: Coeff) -> LaurentQT:
    if isinstance(value, LaurentQT):
        return value
    return LaurentQT.constant(value)


class QSymElem:
    """A graded quasisymmetric function in the F-basis."""

    __slots__ = ("_graded", "_hash")

    def __init__(self, graded: Mapping[int, Mapping[Iterable[int], Coeff]] | None = None):
        clean: dict[int, dict[Subset, LaurentQT]] = {}
        for n, terms in (graded or {}).items():
            if n < 0:
                raise ValueError(f"negative degree {n}")
            row: dict[Subset, LaurentQT] = {}
            for subset, c in terms.items():
                key = tuple(sorted(subset))
                if len(set(key)) != len(key) or any(not 1 <= i <= n - 1 for i in key):
                    raise ValueError(f"{set(key)} is not a subset of [{n - 1}]")
                c = _as_coeff(c)
                total = row[key] + c if key in row else c
                if total.is_zero:
                    row.pop(key, None)
                else:
                    row[key] = total
            if row:
                clean[n] = row
        self._graded = clean
        self._hash: int | None = None

    # ---- constructors ----
    @classmethod
    def zero(cls) -> QSymElem:
        return cls()

    @classmethod
    def one(cls) -> QSymElem:
        return cls({0: {(): 1}})

    # ---- access ----
    @property
    def is_zero(self) -> bool:
        return not self._graded

    @property
    def degrees(self) -> list[int]:
        return sorted(self._graded)

    def terms(self) -> Iterator[tuple[int, Subset, LaurentQT]]:
        """(degree, subset, coefficient) sorted by degree then subset."""
        for n in sorted(self._graded):
            for subset in sorted(self._graded[n]):
                yield n, subset, self._graded[n][subset]

    def coeff(self, subset: Iterable[int], n: int) -> LaurentQT:
        return self._graded.get(n, {}).get(tuple(sorted(subset)), LaurentQT.zero())

    def homogeneous_part(self, n: int) -> QSymElem:
        return QSymElem({n: self._graded.get(n, {})})

    def map_coeffs(self, fn: Callable[[LaurentQT], Coeff]) -> QSymElem:
        return QSymElem({n: {s: fn(c) for s, c in row.items()} for n, row in self._graded.items()})

    # ---- arithmetic ----
    def __add__(self, other: Any) -> QSymElem:
        if not isinstance(other, QSymElem):
            if other == 0:
                return self
            return NotImplemented
        merged: dict[int, dict[Subset, LaurentQT]] = {n: dict(row) for n, row in self._graded.items()}
        for n, row in other._graded.items():
            target = merged.setdefault(n, {})
            for s, c in row.items():
                target[s] = target[s] + c if s in target else c
        return QSymElem(merged)

    __radd__ = __add__

    def __neg__(self) -> QSymElem:
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: Any) -> QSymElem:
        if not isinstance(other, QSymElem):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Coeff) -> QSymElem:
        factor = _as_coeff(factor)
        return self.map_coeffs(lambda c: c * factor)

    def __mul__(self, other: Any) -> QSymElem:
        if isinstance(other, QSymElem):
            return multiply(self, other)
        if isinstance(other, (LaurentQT, QPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> QSymElem:
        if isinstance(other, (LaurentQT, QPoly, int)):
            return self.scale(other)
        return NotImplemented

    # ---- comparison ----
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero
        if not isinstance(other, QSymElem):
            return NotImplemented
        return self._graded == other._graded

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((n, s, c) for n, s, c in self.terms()))
        return self._hash

    def __repr__(self) -> str:
        body = " + ".join(f"[{c}]F_{{{set(s) or '{}'},{n}}}" for n, s, c in self.terms())
        return f"QSymElem({body or '0'})"

    # ---- serialization ----
    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"degree": n, "subset": list(s), "coeff": c.to_json()} for n, s, c in self.terms()
        ]

    @classmethod
    def from_json(cls, payload: Iterable[Mapping[str, Any]]) -> QSymElem:
        graded: dict[int, dict[Subset, LaurentQT]] = {}
        for term in payload:
            row = graded.setdefault(int(term["degree"]), {})
            row[tuple(term["subset"])] = LaurentQT.from_json(term["coeff"])
        return cls(graded)


# =========================
# Basis elements and products
# =========================


def f_basis(subset: Iterable[int], n: int) -> QSymElem:
    subset = tuple(sorted(subset))
    if n < 0 or any(not 1 <= i <= n - 1 for i in subset) or len(set(subset)) != len(subset):
        raise ValueError(f"{set(subset)} is not a subset of [{n - 1}]")
    return QSymElem({n: {subset: 1}})


def descent_word(subset: Iterable[int], n: int, *, offset: int = 0) -> tuple[int, ...]:
    """A word on offset+1..offset+n with descent set ``subset``.

    Runs between descents take consecutive blocks of letters, the first run
    getting the largest block.
    """
    cuts = [0, *sorted(subset), n]
    runs = [cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)]
    word: list[int] = []
    top = n
    for length in runs:
        word.extend(range(top - length + 1, top + 1))
        top -= length
    return tuple(offset + x for x in word)


def shuffle_words(u: Sequence[int], v: Sequence[int]) -> dict[Subset, int]:
    """Multiset of descent sets over all shuffles of two words on disjoint letters."""
    a, b = len(u), len(v)
    counts: dict[Subset, int] = {}
    for slots in itertools.combinations(range(a + b), a):
        chosen = set(slots)
        iu, iv = iter(u), iter(v)
        w = [next(iu) if pos in chosen else next(iv) for pos in range(a + b)]
        key = tuple(i for i in range(1, a + b) if w[i - 1] > w[i])
        counts[key] = counts.get(key, 0) + 1
    return counts


@lru_cache(maxsize=None)
def _shuffle_fundamentals(s: Subset, a: int, t: Subset, b: int) -> tuple[tuple[Subset, int], ...]:
    logger.debug(f"Shuffle product F_{s},{a} * F_{t},{b}")
    u = descent_word(s, a)
    v = descent_word(t, b, offset=a)
    return tuple(sorted(shuffle_words(u, v).items()))


def multiply(x: QSymElem, y: QSymElem) -> QSymElem:
    """Bilinear shuffle product of F-basis expansions."""
    out: dict[int, dict[Subset, LaurentQT]] = {}
    for a, s, cx in x.terms():
        for b, t, cy in y.terms():
            if a + b > max_shuffle_degree():
                raise ResourceGuardError(
                    guard="shuffle degree", limit=max_shuffle_degree(), requested=a + b, module="qsym"
                )
            c = cx * cy
            row = out.setdefault(a + b, {})
            for key, count in _shuffle_fundamentals(s, a, t, b):
                term = c * count
                row[key] = row[key] + term if key in row else term
    return QSymElem(out)


def h_complete(n: int) -> QSymElem:
    if n < 0:
        raise ValueError("h_n needs n >= 0")
    return f_basis((), n)


@lru_cache(maxsize=None)
def _h_partition(parts: tuple[int, ...]) -> QSymElem:
    result = QSymElem.one()
    for part in parts:
        result = multiply(result, h_complete(part))
    return result


def h_of_composition(parts: Sequence[int]) -> QSymElem:
    """h_nu = h_nu1 h_nu2 ...; zero parts contribute the unit."""
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be nonnegative, got {tuple(parts)}")
    return _h_partition(tuple(sorted((p for p in parts if p), reverse=True)))


def composition_of(subset: Iterable[int], n: int) -> tuple[int, ...]:
    """nu(S) = (s1, s2 - s1, ..., n - s_last)."""
    cuts = [0, *sorted(subset), n]
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def subset_of(composition: Sequence[int]) -> Subset:
    return tuple(itertools.accumulate(composition))[:-1] if composition else ()


# =========================
# Schur and ribbon Schur functions
# =========================


def _syt_descent_sets(cells: Sequence[tuple[int, int]]) -> dict[Subset, int]:
    """Descent sets of standard fillings of a (skew) shape given by (row, col) cells."""
    shape = set(cells)
    n = len(shape)
    filled: set[tuple[int, int]] = set()
    rows: list[int] = []
    counts: dict[Subset, int] = {}

    def place() -> None:
        if len(filled) == n:
            key = tuple(i for i in range(1, n) if rows[i] > rows[i - 1])
            counts[key] = counts.get(key, 0) + 1
            return
        for cell in sorted(shape - filled):
            r, c = cell
            left, up = (r, c - 1), (r - 1, c)
            if (left in shape and left not in filled) or (up in shape and up not in filled):
                continue
            filled.add(cell)
            rows.append(r)
            place()
            rows.pop()
            filled.remove(cell)

    place()
    return counts


def _validate_partition(shape: Sequence[int]) -> tuple[int, ...]:
    shape = tuple(shape)
    if any(p <= 0 for p in shape) or any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"{shape} is not a partition")
    return shape


@lru_cache(maxsize=None)
def _schur(shape: tuple[int, ...]) -> QSymElem:
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    return QSymElem({sum(shape): _syt_descent_sets(cells)})


def schur(shape: Sequence[int]) -> QSymElem:
    """s_lambda as the sum of F_{DES(T)} over standard Young tableaux T."""
    return _schur(_validate_partition(shape))


def ribbon_cells(subset: Iterable[int], n: int) -> list[tuple[int, int]]:
    """Cells of the ribbon H_{R,n}: cell i+1 sits directly above cell i iff i is in R."""
    marks = set(subset)
    cells = [(0, 0)] if n else []
    for i in range(1, n):
        r, c = cells[-1]
        cells.append((r - 1, c) if i in marks else (r, c + 1))
    return cells


def ribbon_by_tableaux(subset: Iterable[int], n: int) -> QSymElem:
    return QSymElem({n: _syt_descent_sets(ribbon_cells(subset, n))})


def ribbon_by_inclusion_exclusion(subset: Iterable[int], n: int) -> QSymElem:
    subset = tuple(sorted(subset))
    total = QSymElem.zero()
    for size in range(len(subset) + 1):
        for t in itertools.combinations(subset, size):
            term = h_of_composition(composition_of(t, n))
            total = total + (term if (len(subset) - size) % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def _ribbon(subset: Subset, n: int) -> QSymElem:
    by_tableaux = ribbon_by_tableaux(subset, n)
    by_ie = ribbon_by_inclusion_exclusion(subset, n)
    if by_tableaux != by_ie:
        logger.error(f"Ribbon routes disagree for R={subset}, n={n}")
        raise IdentityFailure(
            f"ribbon Schur routes disagree for R={set(subset)}, n={n}",
            module="qsym",
            witness={"R": list(subset), "n": n},
        )
    return by_tableaux


def ribbon_schur(subset: Iterable[int], n: int) -> QSymElem:
    subset = tuple(sorted(subset))
    if any(not 1 <= i <= n - 1 for i in subset):
        raise ValueError(f"{set(subset)} is not a subset of [{n - 1}]")
    return _ribbon(subset, n)


def kostka_number(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    shape = _validate_partition(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return 0

    # fill value by value; each value adds a horizontal strip
    def count(current: tuple[int, ...], v: int) -> int:
        if v == len(content):
            return 1 if current == shape else 0
        total = 0
        for new in _horizontal_strips(current, shape, content[v]):
            total += count(new, v + 1)
        return total

    return count(tuple(0 for _ in shape), 0)


def _horizontal_strips(current: tuple[int, ...], bound: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    def grow(i: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(current):
            if remaining == 0:
                yield tuple(acc)
            return
        cap = bound[i] if i == 0 else min(bound[i], current[i - 1])
        for new in range(current[i], min(cap, current[i] + remaining) + 1):
            acc.append(new)
            yield from grow(i + 1, remaining - (new - current[i]), acc)
            acc.pop()

    return grow(0, size, [])


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""

    def build(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - part, part):
                yield (part, *rest)

    return build(n, n)


# =========================
# Monomial expansion and specializations
# =========================


def to_monomial(x: QSymElem) -> dict[tuple[int, ...], LaurentQT]:
    """Monomial-basis coefficients, keyed by composition."""
    out: dict[tuple[int, ...], LaurentQT] = {}
    for n in x.degrees:
        for size in range(n):
            for t in itertools.combinations(range(1, n), size):
                total = LaurentQT.zero()
                for k in range(len(t) + 1):
                    for s in itertools.combinations(t, k):
                        total = total + x.coeff(s, n)
                if not total.is_zero:
                    out[composition_of(t, n)] = total
        if n == 0:
            c = x.coeff((), 0)
            if not c.is_zero:
                out[()] = c
    return out


def is_symmetric(x: QSymElem) -> bool:
    monomials = to_monomial(x)
    for n in x.degrees:
        seen: dict[tuple[int, ...], LaurentQT] = {}
        for size in range(n):
            for t in itertools.combinations(range(1, n), size):
                comp = composition_of(t, n)
                key = tuple(sorted(comp, reverse=True))
                value = monomials.get(comp, LaurentQT.zero())
                if key in seen and seen[key] != value:
                    return False
                seen.setdefault(key, value)
    return True


def ps_normalized(x: QSymElem, n: int) -> LaurentQT:
    """prod_{i<=n}(1-q^i) * ps_q(x): each F_{S,n} contributes q^(sum S)."""
    if any(d != n for d in x.degrees):
        raise ValueError(f"ps_normalized needs a homogeneous element of degree {n}, got degrees {x.degrees}")
    total = LaurentQT.zero()
    for _, s, c in x.terms():
        total = total + c * QPoly.monomial(sum(s))
    return total


def eval_t(x: QSymElem, t: int = -1) -> QSymElem:
    return x.map_coeffs(lambda c: c.eval_t(t))


def coefficient_of_t(x: QSymElem, j: int) -> QSymElem:
    return x.map_coeffs(lambda c: c.coeff(j))


def reflect_t(x: QSymElem, d: int) -> QSymElem:
    """t^d x(1/t), coefficientwise."""
    return x.map_coeffs(lambda c: c.reflect(d))


def coefficient_of_q(x: QSymElem, k: int) -> QSymElem:
    return x.map_coeffs(lambda c: c.coeff_q(k))


def shift_t(x: QSymElem, k: int) -> QSymElem:
    return x.map_coeffs(lambda c: c.shift(k))
