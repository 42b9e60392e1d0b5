# services/chowfy.py
"""
Matroids as lattices of flats, Feichtner-Yuzvinsky bases of Chow and
augmented Chow rings, Hilbert series, q-uniform Hilbert series by Gaussian
chain counting, and graded Frobenius series of uniform matroids.
"""
from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator, Mapping

from pydantic import ValidationError

from frameworks.config import check_flats, check_guard
from frameworks.errors import IdentityFailure, InputValidationError
from models.flats import FlatsFile
from services.eulerian import Q_njk, Qtilde_njk
from services.exactalg import LaurentQT, q_multinomial
from services.qsym import QSymElem, composition_of, h_of_composition

logger = logging.getLogger(__name__)

Flat = frozenset[int]


def _fmt(flat: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(flat)) + "}"


# =========================
# Matroids
# =========================


class MatroidFlats:
    """A loopless matroid on [n] held as its lattice of flats with ranks."""

    def __init__(self, n: int, rank: Mapping[Flat, int]):
        self.n = n
        self.ground: Flat = frozenset(range(1, n + 1))
        self.rank: dict[Flat, int] = dict(rank)
        self.flats: tuple[Flat, ...] = tuple(sorted(self.rank, key=lambda f: (self.rank[f], len(f), sorted(f))))
        self._flat_set = frozenset(self.flats)
        self._above: dict[Flat, tuple[Flat, ...]] = {}

    @property
    def rk(self) -> int:
        return self.rank[self.ground]

    def __contains__(self, flat: object) -> bool:
        return flat in self._flat_set

    def __len__(self) -> int:
        return len(self.flats)

    def above(self, flat: Flat) -> tuple[Flat, ...]:
        """Flats strictly containing ``flat``."""
        if flat not in self._above:
            self._above[flat] = tuple(g for g in self.flats if flat < g)
        return self._above[flat]

    def flats_of_rank(self, k: int) -> list[Flat]:
        return [f for f in self.flats if self.rank[f] == k]

    def summary(self) -> dict[int, int]:
        """Number of flats of each rank."""
        counts: dict[int, int] = {}
        for f in self.flats:
            counts[self.rank[f]] = counts.get(self.rank[f], 0) + 1
        return dict(sorted(counts.items()))

    def __repr__(self) -> str:
        return f"MatroidFlats(n={self.n}, rank={self.rk}, flats={len(self.flats)})"


def uniform(r: int, n: int) -> MatroidFlats:
    """U_{r,n}: proper flats are the subsets of size at most r-1."""
    if not 1 <= r <= n:
        raise ValueError(f"uniform matroid needs 1 <= r <= n, got r={r}, n={n}")
    check_flats(sum(comb(n, k) for k in range(r)) + 1)
    rank: dict[Flat, int] = {}
    for size in range(r):
        for subset in itertools.combinations(range(1, n + 1), size):
            rank[frozenset(subset)] = size
    rank[frozenset(range(1, n + 1))] = r
    return MatroidFlats(n, rank)


def boolean(n: int) -> MatroidFlats:
    return uniform(n, n)


def _closure(flats: list[Flat], ground: Flat, subset: Flat) -> Flat:
    closed = ground
    for f in flats:
        if subset <= f:
            closed = closed & f
    return closed


def _validate_lattice(n: int, flats: list[Flat]) -> dict[Flat, int]:
    ground = frozenset(range(1, n + 1))
    flat_set = set(flats)
    if ground not in flat_set:
        raise InputValidationError(
            f"axiom F1 violated: the ground set {_fmt(ground)} is not a flat",
            axiom="F1",
            witness={"missing": sorted(ground)},
        )
    if frozenset() not in flat_set:
        raise InputValidationError(
            "matroid has loops: the empty set is not a flat",
            axiom="loopless",
            witness={"missing": []},
        )
    for a, b in itertools.combinations(flats, 2):
        if a & b not in flat_set:
            raise InputValidationError(
                f"axiom F2 violated: {_fmt(a)} ∩ {_fmt(b)} = {_fmt(a & b)} is not a flat",
                axiom="F2",
                witness={"flats": [sorted(a), sorted(b)], "intersection": sorted(a & b)},
            )

    covers: dict[Flat, list[Flat]] = {}
    for f in flats:
        candidates = {_closure(flats, ground, f | {e}) for e in ground - f}
        minimal = [g for g in candidates if not any(h < g for h in candidates)]
        seen: dict[int, Flat] = {}
        for g in minimal:
            for e in g - f:
                if e in seen:
                    raise InputValidationError(
                        f"axiom F3 violated: element {e} lies in two covers {_fmt(seen[e])} and "
                        f"{_fmt(g)} of flat {_fmt(f)}",
                        axiom="F3",
                        witness={"flat": sorted(f), "element": e, "covers": [sorted(seen[e]), sorted(g)]},
                    )
                seen[e] = g
        for e in sorted(ground - f):
            if e not in seen:
                raise InputValidationError(
                    f"axiom F3 violated: element {e} outside flat {_fmt(f)} lies in no cover of it",
                    axiom="F3",
                    witness={"flat": sorted(f), "element": e},
                )
        covers[f] = minimal

    rank: dict[Flat, int] = {frozenset(): 0}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for f in frontier:
            for g in covers[f]:
                if g in rank:
                    if rank[g] != rank[f] + 1:
                        raise InputValidationError(
                            f"lattice is not graded: {_fmt(g)} is reached at ranks {rank[g]} and {rank[f] + 1}",
                            axiom="graded",
                            witness={"flat": sorted(g)},
                        )
                    continue
                rank[g] = rank[f] + 1
                nxt.append(g)
        frontier = nxt
    unreached = [f for f in flats if f not in rank]
    if unreached:
        raise InputValidationError(
            f"flat {_fmt(unreached[0])} is not reachable from the empty flat",
            axiom="graded",
            witness={"flat": sorted(unreached[0])},
        )
    return rank


def from_flats(payload: FlatsFile | Mapping[str, Any]) -> MatroidFlats:
    """Validate a flats payload and build the matroid."""
    if not isinstance(payload, FlatsFile):
        try:
            payload = FlatsFile.model_validate(payload)
        except ValidationError as e:
            raise InputValidationError(f"malformed flats file: {e}", axiom="schema")
    check_flats(len(payload.flats))
    flats = [frozenset(f) for f in payload.flats]
    rank = _validate_lattice(payload.ground, flats)
    matroid = MatroidFlats(payload.ground, rank)
    logger.info(f"Validated matroid on {payload.ground} elements: rank {matroid.rk}, {len(flats)} flats")
    return matroid


def load_flats_file(path: str | Path) -> MatroidFlats:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputValidationError(f"cannot read flats file {path}: {e}", axiom="schema")
    try:
        payload = FlatsFile.model_validate_json(raw)
    except ValidationError as e:
        raise InputValidationError(f"malformed flats file {path}: {e}", axiom="schema")
    return from_flats(payload)


def dump_flats(matroid: MatroidFlats) -> str:
    payload = FlatsFile(ground=matroid.n, flats=[sorted(f) for f in matroid.flats])
    return json.dumps(payload.model_dump(), sort_keys=True)


# =========================
# FY bases
# =========================


@dataclass(frozen=True)
class FYMonomial:
    chain: tuple[Flat, ...]
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __str__(self) -> str:
        if not self.chain:
            return "1"
        return "".join(
            f"x_{_fmt(f)}" + (f"^{a}" if a > 1 else "") for f, a in zip(self.chain, self.exponents)
        )


def _exponent_bound(matroid: MatroidFlats, prev: Flat, flat: Flat, *, first: bool, augmented: bool) -> int:
    if first and augmented:
        return matroid.rank[flat]
    return matroid.rank[flat] - matroid.rank[prev] - 1


def top_degree(matroid: MatroidFlats, augmented: bool) -> int:
    return matroid.rk if augmented else matroid.rk - 1


def fy_basis(matroid: MatroidFlats, augmented: bool, *, degree: int | None = None) -> Iterator[FYMonomial]:
    """FY monomials, streamed degree by degree (or only the given degree)."""
    check_flats(len(matroid))
    degrees = range(top_degree(matroid, augmented) + 1) if degree is None else [degree]
    for d in degrees:
        yield from _fy_of_degree(matroid, augmented, d)


def _fy_of_degree(matroid: MatroidFlats, augmented: bool, target: int) -> Iterator[FYMonomial]:
    chain: list[Flat] = []
    exps: list[int] = []

    def extend(prev: Flat, remaining: int) -> Iterator[FYMonomial]:
        if remaining == 0:
            yield FYMonomial(tuple(chain), tuple(exps))
            return
        for g in matroid.above(prev):
            bound = _exponent_bound(matroid, prev, g, first=not chain, augmented=augmented)
            for a in range(1, min(bound, remaining) + 1):
                chain.append(g)
                exps.append(a)
                yield from extend(g, remaining - a)
                chain.pop()
                exps.pop()

    if target >= 0:
        yield from extend(frozenset(), target)


def graded_count(
    matroid: MatroidFlats,
    augmented: bool,
    *,
    allowed: Callable[[Flat], bool] | None = None,
) -> LaurentQT:
    """Sum of t^degree over FY monomials whose flats all pass ``allowed``."""
    memo: dict[Flat, LaurentQT] = {}

    def tail(flat: Flat) -> LaurentQT:
        if flat in memo:
            return memo[flat]
        total = LaurentQT.one()
        for g in matroid.above(flat):
            if allowed is not None and not allowed(g):
                continue
            bound = _exponent_bound(matroid, flat, g, first=False, augmented=augmented)
            if bound >= 1:
                total = total + LaurentQT.t_range(1, bound) * tail(g)
        memo[flat] = total
        return total

    start = frozenset()
    total = LaurentQT.one()
    for g in matroid.above(start):
        if allowed is not None and not allowed(g):
            continue
        bound = _exponent_bound(matroid, start, g, first=True, augmented=augmented)
        if bound >= 1:
            total = total + LaurentQT.t_range(1, bound) * tail(g)
    return total


def hilb(matroid: MatroidFlats, augmented: bool) -> LaurentQT:
    check_flats(len(matroid))
    return graded_count(matroid, augmented)


def hilb_by_enumeration(matroid: MatroidFlats, augmented: bool) -> LaurentQT:
    counts: dict[tuple[int, int], int] = {}
    for mono in fy_basis(matroid, augmented):
        counts[(mono.degree, 0)] = counts.get((mono.degree, 0), 0) + 1
    return LaurentQT.from_counts(counts)


# =========================
# Uniform and q-uniform matroids
# =========================


def uniform_chain_terms(r: int, n: int, augmented: bool) -> list[tuple[tuple[int, ...], LaurentQT]]:
    """(nu, exponent polynomial) for each proper-flat dimension sequence of U_{r,n}.

    The polynomial counts admissible FY exponents along the chain, including
    the optional top flat (exponent 0 meaning it is absent).
    """
    if not 1 <= r <= n:
        raise ValueError(f"uniform matroid needs 1 <= r <= n, got r={r}, n={n}")
    terms: list[tuple[tuple[int, ...], LaurentQT]] = []
    for size in range(r):
        for dims in itertools.combinations(range(1, r), size):
            poly = LaurentQT.one()
            prev = 0
            for idx, s in enumerate(dims):
                bound = s if (augmented and idx == 0) else s - prev - 1
                if bound < 1:
                    poly = LaurentQT.zero()
                    break
                poly = poly * LaurentQT.t_range(1, bound)
                prev = s
            if poly.is_zero:
                continue
            top = r if (augmented and not dims) else r - prev - 1
            poly = poly * LaurentQT.t_range(0, top)
            terms.append((composition_of(dims, n), poly))
    return terms


def hilb_q_uniform(r: int, n: int, augmented: bool, *, q_value: int | None = None) -> LaurentQT:
    """Hilbert series of the (augmented) Chow ring of U_{r,n}(q), q symbolic unless given."""
    check_guard("q_uniform", n, module="chowfy")
    total = LaurentQT.zero()
    for nu, poly in uniform_chain_terms(r, n, augmented):
        total = total + poly * q_multinomial(nu)
    return total if q_value is None else total.eval_q(q_value)


def grfrob_uniform(r: int, n: int, augmented: bool) -> QSymElem:
    """Graded Frobenius series of the (augmented) Chow ring of U_{r,n}."""
    check_guard("uniform", n, module="chowfy")
    total = QSymElem.zero()
    for nu, poly in uniform_chain_terms(r, n, augmented):
        total = total + h_of_composition(nu).scale(poly)
    return total


def grfrob_refined_by_orbits(n: int, j: int, k: int, augmented: bool) -> QSymElem:
    """Frobenius characteristic of degree-j FY monomials of B_n whose top flat has complement size k."""
    total = QSymElem.zero()
    for size in range(n + 1):
        for dims in itertools.combinations(range(1, n + 1), size):
            top = dims[-1] if dims else 0
            if n - top != k:
                continue
            poly = LaurentQT.one()
            prev = 0
            for idx, s in enumerate(dims):
                bound = s if (augmented and idx == 0) else s - prev - 1
                if bound < 1:
                    poly = LaurentQT.zero()
                    break
                poly = poly * LaurentQT.t_range(1, bound)
                prev = s
            count = poly.coeff(j).coeff(0)
            if count:
                total = total + h_of_composition(composition_of(dims, n)).scale(count)
    return total


def grfrob_refined(n: int, j: int, k: int, augmented: bool) -> QSymElem:
    if not (0 <= j <= n and 0 <= k <= n):
        raise ValueError(f"grfrob_refined needs 0 <= j, k <= n, got n={n}, j={j}, k={k}")
    check_guard("eulerian", n, module="chowfy")
    by_orbits = grfrob_refined_by_orbits(n, j, k, augmented)
    expected = Qtilde_njk(n, j, k) if augmented else Q_njk(n, j, k)
    if by_orbits != expected:
        logger.error(f"Refined Frobenius mismatch at n={n}, j={j}, k={k}, augmented={augmented}")
        raise IdentityFailure(
            f"refined Frobenius series disagrees with the Eulerian side at n={n}, j={j}, k={k}",
            module="chowfy",
            witness={"n": n, "j": j, "k": k, "augmented": augmented},
        )
    return by_orbits


# =========================
# Charney-Davis quantity
# =========================


def cd_sign(degree: int) -> int:
    return -1 if (degree // 2) % 2 else 1


def cd_from_hilbert(series: LaurentQT, degree: int) -> LaurentQT:
    """(-1)^floor(degree/2) * Hilb(-1)."""
    return LaurentQT.constant(series.eval_t(-1) * cd_sign(degree))


def cd(matroid: MatroidFlats, augmented: bool) -> LaurentQT:
    return cd_from_hilbert(hilb(matroid, augmented), top_degree(matroid, augmented))
