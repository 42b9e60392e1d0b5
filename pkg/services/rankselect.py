# services/rankselect.py
"""
Rank-selected subposets of lattices of flats: flag f- and h-vectors by
chain counting and Moebius inversion, their symmetric-function forms for the
Boolean lattice, and equivariant Charney-Davis checks at the level of
character values (fixed-point counts).
"""
from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from frameworks.config import check_guard
from frameworks.errors import IdentityFailure
from models.cd_report import Variant
from models.matroid import CharacterRow, FlagEntry, MatroidReport
from services.chowfy import Flat, MatroidFlats, cd, graded_count, hilb
from services.exactalg import LaurentQT
from services.qsym import QSymElem, composition_of, h_of_composition, ribbon_schur
from services.render_service import laurent_terms

logger = logging.getLogger(__name__)

# images (g(1), ..., g(n)) of a ground-set permutation
GroundPerm = tuple[int, ...]

_CYCLE = re.compile(r"\(([^()]*)\)")


def even_set(m: int) -> tuple[int, ...]:
    """{2, 4, ...} inside [m]."""
    return tuple(range(2, m + 1, 2))


def odd_set(m: int) -> tuple[int, ...]:
    """{1, 3, ...} inside [m]."""
    return tuple(range(1, m + 1, 2))


@dataclass(frozen=True)
class RankSelection:
    matroid: MatroidFlats
    subset: tuple[int, ...]

    def __post_init__(self) -> None:
        r = self.matroid.rk
        if any(not 1 <= s <= r - 1 for s in self.subset) or len(set(self.subset)) != len(self.subset):
            raise ValueError(f"{set(self.subset)} is not a subset of [{r - 1}]")
        object.__setattr__(self, "subset", tuple(sorted(self.subset)))

    def elements(self) -> list[Flat]:
        """Flats of the selected ranks, plus the bottom and top."""
        ranks = set(self.subset) | {0, self.matroid.rk}
        return [f for f in self.matroid.flats if self.matroid.rank[f] in ranks]


# =========================
# Ground-set permutations
# =========================


def identity(n: int) -> GroundPerm:
    return tuple(range(1, n + 1))


def parse_cycles(text: str, n: int) -> GroundPerm:
    """Parse cycle notation such as "(1 2)(3 4)" into images on [n]."""
    leftover = _CYCLE.sub("", text).strip()
    if leftover:
        raise ValueError(f"cannot parse {text!r} as cycle notation")
    images = list(range(n + 1))
    used: set[int] = set()
    for body in _CYCLE.findall(text):
        tokens = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
        try:
            cycle = [int(tok) for tok in tokens]
        except ValueError:
            raise ValueError(f"non-integer entry in cycle ({body})")
        for x in cycle:
            if not 1 <= x <= n:
                raise ValueError(f"cycle entry {x} outside the ground set [{n}]")
            if x in used:
                raise ValueError(f"element {x} appears twice in {text!r}")
            used.add(x)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return tuple(images[1:])


def format_cycles(g: GroundPerm) -> str:
    seen: set[int] = set()
    out = ""
    for start in range(1, len(g) + 1):
        if start in seen or g[start - 1] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = g[start - 1]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = g[x - 1]
        out += "(" + " ".join(str(x) for x in cycle) + ")"
    return out or "()"


def image(g: GroundPerm, flat: Iterable[int]) -> Flat:
    return frozenset(g[x - 1] for x in flat)


def check_automorphism(matroid: MatroidFlats, g: GroundPerm) -> None:
    if sorted(g) != list(range(1, matroid.n + 1)):
        raise ValueError(f"{g} is not a permutation of the ground set [{matroid.n}]")
    for f in matroid.flats:
        moved = image(g, f)
        if moved not in matroid or matroid.rank[moved] != matroid.rank[f]:
            raise ValueError(
                f"{format_cycles(g)} is not an automorphism: flat {sorted(f)} maps to {sorted(moved)}"
            )


def _fixed_by(g: GroundPerm) -> Callable[[Flat], bool]:
    return lambda f: image(g, f) == f


# =========================
# Flag vectors
# =========================


def _count_chains(matroid: MatroidFlats, subset: Sequence[int], allowed: Callable[[Flat], bool] | None) -> int:
    counts: dict[Flat, int] = {frozenset(): 1}
    for k in sorted(subset):
        layer: dict[Flat, int] = {}
        for g in matroid.flats_of_rank(k):
            if allowed is not None and not allowed(g):
                continue
            total = sum(c for f, c in counts.items() if f < g)
            if total:
                layer[g] = total
        counts = layer
    return sum(counts.values())


def flag_f(matroid: MatroidFlats, subset: Iterable[int]) -> int:
    """Number of maximal chains of the rank-selected subposet."""
    selection = RankSelection(matroid, tuple(subset))
    return _count_chains(matroid, selection.subset, None)


def _moebius(subset: tuple[int, ...], alpha: Callable[[tuple[int, ...]], int]) -> int:
    total = 0
    for size in range(len(subset) + 1):
        for t in itertools.combinations(subset, size):
            sign = -1 if (len(subset) - size) % 2 else 1
            total += sign * alpha(t)
    return total


def flag_h(matroid: MatroidFlats, subset: Iterable[int]) -> int:
    selection = RankSelection(matroid, tuple(subset))
    return _moebius(selection.subset, lambda t: _count_chains(matroid, t, None))


def flag_h_vector(matroid: MatroidFlats) -> dict[tuple[int, ...], int]:
    """flag_h for every S in [r-1], keyed by sorted tuple."""
    ranks = range(1, matroid.rk)
    f_vector = {
        t: _count_chains(matroid, t, None)
        for size in range(len(ranks) + 1)
        for t in itertools.combinations(ranks, size)
    }
    return {s: _moebius(s, f_vector.__getitem__) for s in f_vector}


# =========================
# Boolean lattice
# =========================


def alpha_boolean(subset: Iterable[int], n: int) -> QSymElem:
    return h_of_composition(composition_of(subset, n))


def beta_boolean(subset: Iterable[int], n: int) -> QSymElem:
    subset = tuple(sorted(subset))
    if any(not 1 <= s <= n - 1 for s in subset):
        raise ValueError(f"{set(subset)} is not a subset of [{n - 1}]")
    check_guard("eulerian", n, module="rankselect")
    total = QSymElem.zero()
    for size in range(len(subset) + 1):
        for t in itertools.combinations(subset, size):
            term = alpha_boolean(t, n)
            total = total + (term if (len(subset) - size) % 2 == 0 else -term)
    ribbon = ribbon_schur(subset, n)
    if total != ribbon:
        logger.error(f"beta of the Boolean lattice differs from the ribbon Schur function, S={subset}, n={n}")
        raise IdentityFailure(
            f"beta_B{n}({set(subset)}) differs from the ribbon Schur function",
            module="rankselect",
            witness={"S": list(subset), "n": n},
        )
    return total


# =========================
# Characters
# =========================


def fixed_chain_count(matroid: MatroidFlats, g: GroundPerm, subset: Iterable[int]) -> int:
    """Maximal chains of the rank-selected subposet fixed elementwise by g."""
    check_automorphism(matroid, g)
    selection = RankSelection(matroid, tuple(subset))
    return _count_chains(matroid, selection.subset, _fixed_by(g))


def beta_character(matroid: MatroidFlats, g: GroundPerm, subset: Iterable[int]) -> int:
    check_automorphism(matroid, g)
    selection = RankSelection(matroid, tuple(subset))
    return _moebius(selection.subset, lambda t: _count_chains(matroid, t, _fixed_by(g)))


def fixed_monomial_series(matroid: MatroidFlats, g: GroundPerm, augmented: bool) -> LaurentQT:
    """Sum of t^degree over FY monomials whose flats g fixes setwise."""
    check_automorphism(matroid, g)
    return graded_count(matroid, augmented, allowed=_fixed_by(g))


def cd_character_expected(matroid: MatroidFlats, g: GroundPerm, augmented: bool) -> int:
    """The signed beta-character predicted for sum_i (-1)^i chi_{A^i}(g)."""
    r = matroid.rk
    if augmented:
        if r % 2:
            return 0
        sign = -1 if (r // 2) % 2 else 1
        return sign * beta_character(matroid, g, odd_set(r - 1))
    if r % 2 == 0:
        return 0
    sign = -1 if ((r - 1) // 2) % 2 else 1
    return sign * beta_character(matroid, g, even_set(r - 1))


def cd_character_sides(matroid: MatroidFlats, g: GroundPerm, augmented: bool) -> tuple[int, int]:
    """(fixed-monomial side, beta side) of the character identity; raises if they differ."""
    value = fixed_monomial_series(matroid, g, augmented).eval_t(-1).coeff(0)
    expected = cd_character_expected(matroid, g, augmented)
    if value != expected:
        logger.error(f"Equivariant CD mismatch for {matroid!r}, g={format_cycles(g)}")
        raise IdentityFailure(
            f"character identity fails at g={format_cycles(g)}: fixed-monomial side {value}, beta side {expected}",
            module="rankselect",
            witness={
                "flats": [sorted(f) for f in matroid.flats],
                "g": format_cycles(g),
                "augmented": augmented,
                "fixed_side": value,
                "beta_side": expected,
            },
        )
    return value, expected


def cd_character(matroid: MatroidFlats, g: GroundPerm, augmented: bool) -> int:
    """sum_i (-1)^i (number of degree-i FY monomials fixed by g), checked against beta."""
    return cd_character_sides(matroid, g, augmented)[0]


# =========================
# Report
# =========================


def matroid_report(matroid: MatroidFlats, augmented: bool, automorphisms: Sequence[GroundPerm] = ()) -> MatroidReport:
    """Everything ``mcq matroid`` prints about a validated matroid."""
    series = hilb(matroid, augmented)
    h_vector = flag_h_vector(matroid)
    rows = []
    for g in automorphisms:
        fixed_side, beta_side = cd_character_sides(matroid, g, augmented)
        rows.append(CharacterRow(g=format_cycles(g), fixed_side=fixed_side, beta_side=beta_side))
    return MatroidReport(
        ground=matroid.n,
        rank=matroid.rk,
        flats_by_rank=matroid.summary(),
        variant=Variant.aug if augmented else Variant.chow,
        hilbert=laurent_terms(series),
        cd=cd(matroid, augmented).as_int(),
        flag_vectors=[
            FlagEntry(subset=list(s), flag_f=_count_chains(matroid, s, None), flag_h=value)
            for s, value in h_vector.items()
        ],
        characters=rows,
    )
