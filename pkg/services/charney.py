# services/charney.py
"""
Charney-Davis quantities of the Chow ring and augmented Chow ring of the
q-uniform matroid U_{r,n}(q), computed along four independent routes:

* ``eval``: the q-uniform Hilbert series at t = -1;
* ``descents``: signed inversion counts over one descent class of S_n;
* ``secant``: alternating sums of q-binomials times q-secant numbers;
* ``determinant``: descent-class determinants with entries 1/[m]_q!.

Every route returns the raw value Hilb(-1); ``cd_normalized`` applies the
sign (-1)^floor(D/2) where D is the top degree of the ring.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

from frameworks.config import check_guard, workers
from frameworks.errors import IdentityFailure
from models.cd_report import CDMethod, CDReport, CDRoute, Variant
from services.chowfy import boolean, cd_sign, hilb, hilb_q_uniform, top_degree
from services.exactalg import (
    LaurentQT,
    QFrac,
    QPoly,
    det_qfrac,
    inverse_q_factorial,
    q_binomial,
    q_factorial,
)
from services.permstat import (
    alternating_count,
    descent_class_inv,
    gen_alternating,
    gen_reverse_alternating,
    gen_up_down,
    inversions,
)
from services.rankselect import even_set, odd_set
from services.render_service import laurent_terms

logger = logging.getLogger(__name__)


def _check_range(r: int, n: int) -> None:
    if not 1 <= r <= n:
        raise ValueError(f"Charney-Davis routes need 1 <= r <= n, got r={r}, n={n}")
    check_guard("eulerian", n, module="charney")


def _vanishes(r: int, augmented: bool) -> bool:
    """The ring has odd top degree, so Hilb(-1) = 0."""
    return (r % 2 == 1) if augmented else (r % 2 == 0)


def _parity_sign(k: int) -> int:
    return -1 if k % 2 else 1


def top_cd_degree(r: int, augmented: bool) -> int:
    return r if augmented else r - 1


def cd_normalized(value: LaurentQT, r: int, augmented: bool) -> LaurentQT:
    return value * cd_sign(top_cd_degree(r, augmented))


# =========================
# Route: Hilbert series
# =========================


def cd_eval(r: int, n: int, augmented: bool) -> LaurentQT:
    _check_range(r, n)
    return LaurentQT.constant(hilb_q_uniform(r, n, augmented).eval_t(-1))


# =========================
# Route: descent classes
# =========================


def cd_descents(r: int, n: int, augmented: bool) -> LaurentQT:
    _check_range(r, n)
    if _vanishes(r, augmented):
        return LaurentQT.zero()
    if augmented:
        sign = _parity_sign(r // 2)
        klass = odd_set(r - 1)
    else:
        sign = _parity_sign((r - 1) // 2)
        klass = even_set(r - 1)
    return LaurentQT.constant(descent_class_inv(klass, n) * sign)


# =========================
# Route: q-secant numbers
# =========================


def _inv_polynomial(words: Iterable[Sequence[int]]) -> QPoly:
    counts: dict[int, int] = {}
    for w in words:
        i = inversions(w)
        counts[i] = counts.get(i, 0) + 1
    return QPoly(counts)


@lru_cache(maxsize=None)
def secant_numbers(k: int) -> tuple[LaurentQT, LaurentQT]:
    """(E_{2k}(q), E*_{2k+1}(q)): inversion polynomials over RAlt_{2k} and Alt_{2k+1}.

    E*_m(q) is checked against q^C(m,2) E_m(1/q), where E_m(q) runs over the
    up-down permutations of the same odd length.
    """
    if k < 0:
        raise ValueError(f"secant_numbers needs k >= 0, got {k}")
    check_guard("eulerian", 2 * k + 1, module="charney")
    even = _inv_polynomial(gen_reverse_alternating(2 * k))
    m = 2 * k + 1
    starred = _inv_polynomial(gen_alternating(m))
    up_down = _inv_polynomial(gen_up_down(m, first_ascent=True))
    if starred != up_down.reflect(comb(m, 2)):
        logger.error(f"Alternating/up-down inversion relation fails at length {m}")
        raise IdentityFailure(
            f"E*_{m}(q) differs from q^{comb(m, 2)} E_{m}(1/q)",
            module="charney",
            witness={"m": m, "alternating": str(starred), "up_down": str(up_down)},
        )
    return LaurentQT.constant(even), LaurentQT.constant(starred)


def cd_secant(r: int, n: int, augmented: bool) -> LaurentQT:
    _check_range(r, n)
    if _vanishes(r, augmented):
        return LaurentQT.zero()
    if augmented:
        total = LaurentQT.one()
        for k in range((r - 2) // 2 + 1):
            starred = secant_numbers(k)[1]
            total = total + starred * q_binomial(n, 2 * k + 1) * _parity_sign(k + 1)
        return total
    total = LaurentQT.zero()
    for k in range((r - 1) // 2 + 1):
        even = secant_numbers(k)[0]
        total = total + even * q_binomial(n, 2 * k) * _parity_sign(k)
    return total


# =========================
# Route: determinants
# =========================


def descent_class_matrix(points: Sequence[int]) -> list[list[QFrac]]:
    """Entries 1/[p_{i+1} - p_j]_q! for 0 = p_0 < p_1 < ... < p_{k+1}."""
    size = len(points) - 1
    return [
        [inverse_q_factorial(points[i + 1] - points[j]) for j in range(size)]
        for i in range(size)
    ]


def descent_class_det(subset: Iterable[int], n: int) -> QPoly:
    """Sum of q^inv over S_n with descent set exactly ``subset``, as [n]_q! times a determinant."""
    subset = sorted(set(subset))
    if any(not 1 <= s <= n - 1 for s in subset):
        raise ValueError(f"{set(subset)} is not a subset of [{n - 1}]")
    points = [0, *subset, n]
    return (det_qfrac(descent_class_matrix(points)) * q_factorial(n)).to_qpoly()


def _falling_q_factorial(n: int, m: int) -> QPoly:
    """[n]_q! / [n-m]_q!."""
    return q_factorial(n).exact_div(q_factorial(n - m))


def cd_alternating_determinants(r: int, n: int, augmented: bool) -> LaurentQT:
    """The alternating sum of determinants, one per prefix of the descent class."""
    _check_range(r, n)
    if _vanishes(r, augmented):
        return LaurentQT.zero()
    total = QPoly.one()
    if augmented:
        for k in range((r - 2) // 2 + 1):
            points = [0, *range(1, 2 * k + 2, 2)]
            det = det_qfrac(descent_class_matrix(points))
            term = (det * _falling_q_factorial(n, 2 * k + 1)).to_qpoly()
            total = total + term * _parity_sign(k + 1)
    else:
        for k in range(1, (r - 1) // 2 + 1):
            points = list(range(0, 2 * k + 1, 2))
            det = det_qfrac(descent_class_matrix(points))
            term = (det * _falling_q_factorial(n, 2 * k)).to_qpoly()
            total = total + term * _parity_sign(k)
    return LaurentQT.constant(total)


def cd_determinant(r: int, n: int, augmented: bool) -> LaurentQT:
    """Single-determinant form, checked against the alternating sum of determinants."""
    _check_range(r, n)
    if _vanishes(r, augmented):
        raise ValueError(
            f"the determinant route needs r {'even' if augmented else 'odd'} "
            f"for the {'augmented ' if augmented else ''}Chow ring, got r={r}"
        )
    if augmented:
        value = descent_class_det(odd_set(r - 1), n) * _parity_sign(r // 2)
    else:
        value = descent_class_det(even_set(r - 1), n) * _parity_sign((r - 1) // 2)
    single = LaurentQT.constant(value)
    alternating = cd_alternating_determinants(r, n, augmented)
    if single != alternating:
        logger.error(f"Determinant forms disagree at r={r}, n={n}, augmented={augmented}")
        raise IdentityFailure(
            f"single determinant {value} differs from the alternating sum {alternating.eval_t(1)}",
            module="charney",
            witness={"r": r, "n": n, "augmented": augmented},
        )
    return single


# =========================
# Report
# =========================

_ROUTES: dict[CDMethod, Callable[[int, int, bool], LaurentQT]] = {
    CDMethod.eval: cd_eval,
    CDMethod.descents: cd_descents,
    CDMethod.secant: cd_secant,
    CDMethod.determinant: cd_determinant,
}


def cd_route(method: CDMethod | str, r: int, n: int, augmented: bool) -> LaurentQT:
    return _ROUTES[CDMethod(method)](r, n, augmented)


def cd_report(
    r: int,
    n: int,
    augmented: bool,
    *,
    methods: Sequence[CDMethod | str] | None = None,
) -> CDReport:
    """Run the requested routes concurrently and compare their raw values."""
    _check_range(r, n)
    requested = sorted({CDMethod(m) for m in (methods or list(CDMethod))}, key=lambda m: m.value)
    skipped = [m for m in requested if m is CDMethod.determinant and _vanishes(r, augmented)]
    active = [m for m in requested if m not in skipped]

    values: dict[CDMethod, LaurentQT] = {}
    with ThreadPoolExecutor(max_workers=workers()) as executor:
        future_to_method = {executor.submit(_ROUTES[m], r, n, augmented): m for m in active}
        for future in as_completed(future_to_method):
            method = future_to_method[future]
            values[method] = future.result()
            logger.info(f"CD route {method.value} done for r={r}, n={n}, augmented={augmented}")

    routes = [
        CDRoute(
            method=m,
            raw=laurent_terms(values[m]),
            normalized=laurent_terms(cd_normalized(values[m], r, augmented)),
        )
        for m in active
    ]
    agreement = len(set(values.values())) <= 1
    if not agreement:
        logger.error(f"CD routes disagree at r={r}, n={n}, augmented={augmented}")
    return CDReport(
        r=r,
        n=n,
        variant=Variant.aug if augmented else Variant.chow,
        routes=routes,
        skipped=skipped,
        agreement=agreement,
    )


# =========================
# Permutahedron and stellohedron
# =========================


def tangent_secant_check(n: int) -> int:
    """Normalized CD of the Boolean matroid at q = 1 against the zigzag number of n.

    Odd n uses the Chow ring (tangent numbers), even n the augmented Chow
    ring (secant numbers). The Hilbert series comes from the FY basis, so
    the comparison does not reuse any q-uniform route.
    """
    if n < 1:
        raise ValueError(f"tangent_secant_check needs n >= 1, got {n}")
    check_guard("eulerian", n, module="charney")
    augmented = n % 2 == 0
    matroid = boolean(n)
    series = hilb(matroid, augmented)
    value = series.eval_t(-1).coeff(0) * cd_sign(top_degree(matroid, augmented))
    expected = alternating_count(n)
    if value != expected:
        logger.error(f"Zigzag specialization fails at n={n}")
        raise IdentityFailure(
            f"CD of the Boolean matroid at n={n} is {value}, zigzag number is {expected}",
            module="charney",
            witness={"n": n, "augmented": augmented, "cd": value, "zigzag": expected},
        )
    return value
