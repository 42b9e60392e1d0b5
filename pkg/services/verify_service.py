# services/verify_service.py
"""
Deterministic verification suites.

Each check is a plain function taking a ``SuiteContext``; it returns on
success and raises ``IdentityFailure`` (or another ``MCQError``) with a
witness on the first failing instance. ``run_suite`` fans the checks out on
a thread pool and sorts the outcomes by name.
"""
from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from math import comb, factorial
from typing import Any, Callable

from frameworks import config
from frameworks.errors import IdentityFailure, MCQError, ResourceGuardError
from models.verify import CheckOutcome, SuiteName, VerifyReport
from services import charney, chowfy, eulerian, permstat, qsym, rankselect
from services.exactalg import LaurentQT, QFrac, QPoly, det_qfrac, q_binomial, q_factorial, q_multinomial
from services.qsym import QSymElem, f_basis, h_complete, multiply, shift_t

logger = logging.getLogger(__name__)

# Non-uniform matroids ingested through the flats-file schema, with automorphisms.
SAMPLE_MATROIDS: dict[str, dict[str, Any]] = {
    "line_plus_point": {
        "flats_file": {
            "ground": 4,
            "flats": [[], [1], [2], [3], [4], [1, 2, 3], [1, 4], [2, 4], [3, 4], [1, 2, 3, 4]],
        },
        "automorphisms": ["(1 2)", "(1 2 3)", "(1 3)"],
    },
    "two_lines": {
        "flats_file": {
            "ground": 5,
            "flats": [
                [], [1], [2], [3], [4], [5],
                [1, 2, 3], [3, 4, 5], [1, 4], [1, 5], [2, 4], [2, 5],
                [1, 2, 3, 4, 5],
            ],
        },
        "automorphisms": ["(1 2)", "(4 5)", "(1 4)(2 5)", "(1 5 2 4)"],
    },
    "parallel_pair": {
        "flats_file": {"ground": 3, "flats": [[], [1, 2], [3], [1, 2, 3]]},
        "automorphisms": ["(1 2)"],
    },
}


@dataclass(frozen=True)
class SuiteContext:
    max_n: int
    seed: int | None

    def rng(self) -> random.Random:
        return random.Random(0 if self.seed is None else self.seed)

    def bound(self, cap: int) -> int:
        return min(self.max_n, cap)


Check = Callable[[SuiteContext], None]


def _require(ok: bool, message: str, *, module: str, **witness: Any) -> None:
    if not ok:
        raise IdentityFailure(message, module=module, witness={k: _plain(v) for k, v in witness.items()})


def _plain(value: Any) -> Any:
    if isinstance(value, (LaurentQT, QSymElem)):
        return value.to_json()
    if isinstance(value, QPoly):
        return str(value)
    if isinstance(value, (tuple, frozenset, set)):
        return sorted(value) if isinstance(value, (frozenset, set)) else list(value)
    return value


def _ranks(n_max: int, *, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        for r in range(1, n + 1):
            yield r, n


def _subsets(m: int):
    for size in range(m + 1):
        yield from itertools.combinations(range(1, m + 1), size)


def _sample_matroids() -> dict[str, tuple[chowfy.MatroidFlats, list[rankselect.GroundPerm]]]:
    out = {}
    for name, entry in SAMPLE_MATROIDS.items():
        matroid = chowfy.from_flats(entry["flats_file"])
        auts = [rankselect.parse_cycles(text, matroid.n) for text in entry["automorphisms"]]
        out[name] = (matroid, auts)
    return out


# =========================
# arith
# =========================


def check_q_binomial_at_one(ctx: SuiteContext) -> None:
    for n in range(11):
        for k in range(n + 1):
            value = q_binomial(n, k).eval(1)
            _require(value == comb(n, k), "q-binomial at q=1 is not the binomial", module="exactalg", n=n, k=k, value=value)


def check_q_binomial_symmetry(ctx: SuiteContext) -> None:
    for n in range(11):
        for k in range(n + 1):
            _require(q_binomial(n, k) == q_binomial(n, n - k), "q-binomial symmetry fails", module="exactalg", n=n, k=k)


def check_q_pascal(ctx: SuiteContext) -> None:
    for n in range(2, 11):
        for k in range(1, n):
            rhs = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
            _require(q_binomial(n, k) == rhs, "q-Pascal recurrence fails", module="exactalg", n=n, k=k)


def _random_laurent(rng: random.Random) -> LaurentQT:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        t_exp = rng.randint(-2, 3)
        terms[t_exp] = QPoly({rng.randint(0, 3): rng.randint(-5, 5) for _ in range(rng.randint(1, 3))})
    return LaurentQT(terms)


def check_ring_axioms(ctx: SuiteContext) -> None:
    rng = ctx.rng()
    for trial in range(25):
        a, b, c = (_random_laurent(rng) for _ in range(3))
        _require((a * b) * c == a * (b * c), "multiplication is not associative", module="exactalg", trial=trial)
        _require(a * (b + c) == a * b + a * c, "distributivity fails", module="exactalg", trial=trial)
        _require(a * b == b * a, "multiplication is not commutative", module="exactalg", trial=trial)
        _require((a + b) + c == a + (b + c), "addition is not associative", module="exactalg", trial=trial)


def check_determinants(ctx: SuiteContext) -> None:
    two = QFrac(1, q_factorial(2))
    three = QFrac(1, q_factorial(3))
    _require(det_qfrac([[two]]) == two, "1x1 determinant", module="exactalg")
    _require(det_qfrac([[two, 1], [three, 1]]) == two - three, "2x2 determinant", module="exactalg")
    identity = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    _require(det_qfrac(identity) == QFrac(1), "identity determinant", module="exactalg")
    _require(q_multinomial((1, 1, 1)) == q_factorial(3), "q-multinomial of (1,1,1)", module="exactalg")


# =========================
# perms
# =========================


def check_generator_counts(ctx: SuiteContext) -> None:
    derangements = [1, 0]
    for n in range(2, ctx.bound(8) + 1):
        derangements.append((n - 1) * (derangements[-1] + derangements[-2]))
    for n in range(ctx.bound(8) + 1):
        count = sum(1 for _ in permstat.gen_permutations(n))
        _require(count == factorial(n), "|S_n| != n!", module="permstat", n=n, count=count)
        count = sum(1 for _ in permstat.gen_derangements(n))
        _require(count == derangements[n], "wrong number of derangements", module="permstat", n=n, count=count)
    for n in range(ctx.bound(7) + 1):
        count = sum(1 for _ in permstat.gen_decorated(n))
        expected = sum(comb(n, k) * factorial(k) for k in range(n + 1))
        _require(count == expected, "wrong number of decorated permutations", module="permstat", n=n, count=count)


def check_dex_sum(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(8) + 1):
        for w in permstat.gen_permutations(n):
            s = permstat.stats(w)
            d = permstat.dex(w)
            _require(sum(d) == s.maj - s.exc, "sum DEX != maj - exc", module="permstat", word=w, dex=d)
            size = s.des if (n == 0 or w[0] == 1) else s.des - 1
            _require(len(d) == size, "|DEX| does not match des", module="permstat", word=w, dex=d)


def check_decorated_dex_sum(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(7) + 1):
        for w in permstat.gen_decorated(n):
            s = permstat.stats_decorated(w)
            _require(sum(s.dex) == s.maj - s.exc, "decorated sum DEX != maj - exc", module="permstat", word=w, dex=s.dex)


def check_exc_des_equidistribution(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(8) + 1):
        by_exc: dict[int, int] = {}
        by_des: dict[int, int] = {}
        for w in permstat.gen_permutations(n):
            s = permstat.stats(w)
            by_exc[s.exc] = by_exc.get(s.exc, 0) + 1
            by_des[s.des] = by_des.get(s.des, 0) + 1
        _require(by_exc == by_des, "exc and des are not equidistributed", module="permstat", n=n)


def check_eulerian_palindromes(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(8) + 1):
        a = permstat.eulerian_A(n)
        _require(a.is_palindromic(n - 1), "A_n(t) is not palindromic", module="permstat", n=n, value=a)
        d = permstat.eulerian_d(n)
        _require(d.reflect(n) == d.shift(1), "t^n d_n(1/t) != t d_n(t)", module="permstat", n=n, value=d)
    for n in range(1, ctx.bound(7) + 1):
        b = permstat.eulerian_binomial(n)
        _require(b.is_palindromic(n), "binomial Eulerian polynomial is not palindromic", module="permstat", n=n, value=b)


def check_binomial_eulerian_routes(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(7) + 1):
        permstat.eulerian_binomial_q(n)


# =========================
# qsym
# =========================


def _random_qsym(rng: random.Random, degree: int) -> QSymElem:
    terms = {}
    for _ in range(2):
        subset = tuple(sorted(rng.sample(range(1, degree), rng.randint(0, max(0, degree - 1))))) if degree > 1 else ()
        terms[subset] = LaurentQT.t_power(rng.randint(0, 2), rng.randint(1, 3))
    return QSymElem({degree: terms})


def check_shuffle_laws(ctx: SuiteContext) -> None:
    rng = ctx.rng()
    for trial in range(10):
        a, b, c = (_random_qsym(rng, rng.randint(0, 4)) for _ in range(3))
        _require(multiply(a, b) == multiply(b, a), "shuffle product is not commutative", module="qsym", trial=trial)
        _require(
            multiply(multiply(a, b), c) == multiply(a, multiply(b, c)),
            "shuffle product is not associative",
            module="qsym",
            trial=trial,
        )
        _require(multiply(a, QSymElem.one()) == a, "1 is not a unit", module="qsym", trial=trial)


def check_descent_word_independence(ctx: SuiteContext) -> None:
    for a in range(1, 4):
        for b in range(1, 4):
            for s in _subsets(a - 1):
                u = max(w for w in permstat.gen_permutations(a) if permstat.descent_set(w) == frozenset(s))
                for t in _subsets(b - 1):
                    v = tuple(a + x for x in min(w for w in permstat.gen_permutations(b) if permstat.descent_set(w) == frozenset(t)))
                    alternative = QSymElem({a + b: qsym.shuffle_words(u, v)})
                    product = multiply(f_basis(s, a), f_basis(t, b))
                    _require(product == alternative, "shuffle product depends on the descent words", module="qsym", S=s, T=t)


def check_kostka(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(5) + 1):
        for nu in qsym.partitions(n):
            total = QSymElem.zero()
            for lam in qsym.partitions(n):
                k = qsym.kostka_number(lam, nu)
                if k:
                    total = total + qsym.schur(lam).scale(k)
            _require(qsym.h_of_composition(nu) == total, "h_nu != sum K s_lambda", module="qsym", nu=nu)


def check_dimension_consistency(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        for s in _subsets(n - 1):
            nu = qsym.composition_of(s, n)
            dim = qsym.ps_normalized(qsym.h_of_composition(nu), n).at_q1().as_int()
            expected = factorial(n)
            for part in nu:
                expected //= factorial(part)
            _require(dim == expected, "ps at q=1 of h_nu is not the multinomial", module="qsym", nu=nu, dim=dim)


def check_ribbon_routes(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        for s in _subsets(n - 1):
            qsym.ribbon_schur(s, n)


def check_qsym_specializations(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        ps = qsym.ps_normalized(eulerian.Q(n), n)
        _require(ps == permstat.eulerian_A_q(n), "ps of Q_n is not A_n(q,t)", module="qsym", n=n)
    expected = -(f_basis((1,), 3) + f_basis((2,), 3))
    _require(qsym.eval_t(eulerian.Q(3)) == expected, "Q_3 at t=-1", module="qsym")


# =========================
# eulerian
# =========================


def check_Q_palindromes(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(7) + 1):
        for k in range(n + 1):
            for j in range(n - k + 1):
                _require(
                    eulerian.Q_njk(n, j, k) == eulerian.Q_njk(n, n - k - j, k),
                    "Q_{n,j,k} != Q_{n,n-k-j,k}",
                    module="eulerian",
                    n=n,
                    j=j,
                    k=k,
                )


def check_extraction(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(7) + 1):
        for k in range(n + 1):
            for j in range(n - k + 1):
                lhs = eulerian.Q_njk(n, j, k)
                rhs = multiply(h_complete(k), eulerian.Q_njk(n - k, j, 0))
                _require(lhs == rhs, "Q_{n,j,k} != h_k Q_{n-k,j,0}", module="eulerian", n=n, j=j, k=k)
                lhs = eulerian.Qtilde_njk(n, j, k)
                rhs = multiply(h_complete(k), eulerian.Qtilde_njk(n - k, j, 0))
                _require(lhs == rhs, "Qtilde_{n,j,k} != h_k Qtilde_{n-k,j,0}", module="eulerian", n=n, j=j, k=k)


def check_Qtilde(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        q = eulerian.Qtilde(n)
        _require(qsym.reflect_t(q, n) == q, "Qtilde_n is not palindromic", module="eulerian", n=n)
        for j in range(1, n + 1):
            _require(
                eulerian.Qtilde_njk(n, j, 0) == eulerian.Q_nj(n, j - 1),
                "Qtilde_{n,j,0} != Q_{n,j-1}",
                module="eulerian",
                n=n,
                j=j,
            )


def check_recurrence(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(7) + 1):
        _require(eulerian.recurrence_Q(n) == eulerian.Q(n), "recurrence for Q_n fails", module="eulerian", n=n)


def check_symmetry(ctx: SuiteContext) -> None:
    for n in range(ctx.bound(6) + 1):
        for k in range(n + 1):
            for j in range(n - k + 1):
                x = eulerian.Q_njk(n, j, k)
                _require(qsym.is_symmetric(x), "Q_{n,j,k} is not symmetric", module="eulerian", n=n, j=j, k=k)


def check_generating_function(ctx: SuiteContext) -> None:
    order = min(ctx.max_n, config.max_n("gf_order"))
    _require(eulerian.gf_check(order), "generating function disagrees with enumeration", module="eulerian", order=order)


def check_differences(ctx: SuiteContext) -> None:
    for n in range(2, ctx.bound(7) + 1):
        for r in range(1, n):
            eulerian.delta_chow(n, r)
            eulerian.delta_aug(n, r)
    _require(eulerian.delta_chow(3, 1) == h_complete(3) * LaurentQT.t_power(1), "Delta_{3,1} != h_3 t", module="eulerian")


# =========================
# hilbert
# =========================


def _fixed_point_correction(n: int, j: int) -> LaurentQT:
    counts: dict[tuple[int, int], int] = {}
    for w in permstat.gen_permutations(n):
        s = permstat.stats(w)
        if s.fix >= n - j:
            key = (j - s.exc, s.maj - s.exc)
            counts[key] = counts.get(key, 0) + 1
    return LaurentQT.from_counts(counts)


def _decorated_correction(n: int, j: int) -> LaurentQT:
    counts: dict[tuple[int, int], int] = {}
    for w in permstat.gen_decorated(n):
        s = permstat.stats_decorated(w)
        if s.fix2 >= n - j:
            key = (j - s.exc, s.maj - s.exc)
            counts[key] = counts.get(key, 0) + 1
    return LaurentQT.from_counts(counts)


def check_hilbert_permutation_forms(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        chow = permstat.eulerian_A_q(n)
        aug = permstat.eulerian_binomial_q(n)
        for j in range(r, n):
            chow = chow - _fixed_point_correction(n, j)
            aug = aug - _decorated_correction(n, j)
        _require(chow == chowfy.hilb_q_uniform(r, n, False), "Chow permutation form", module="chowfy", r=r, n=n)
        _require(aug == chowfy.hilb_q_uniform(r, n, True), "augmented decorated form", module="chowfy", r=r, n=n)


def check_hilbert_binomial_forms(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        chow = LaurentQT.zero()
        aug = LaurentQT.zero()
        for j in range(r):
            chow = chow + permstat.eulerian_d_q(j) * q_binomial(n, j) * LaurentQT.t_range(0, r - j - 1)
            aug = aug + permstat.eulerian_A_q(j) * q_binomial(n, j) * LaurentQT.t_range(0, r - j - 1)
        aug = LaurentQT.one() + aug.shift(1)
        _require(chow == chowfy.hilb_q_uniform(r, n, False), "Chow derangement form", module="chowfy", r=r, n=n)
        _require(aug == chowfy.hilb_q_uniform(r, n, True), "augmented binomial form", module="chowfy", r=r, n=n)


def check_hilbert_specials(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        _require(chowfy.hilb_q_uniform(n, n, False) == permstat.eulerian_A_q(n), "Hilb A(U_nn(q)) != A_n", module="chowfy", n=n)
        _require(chowfy.hilb_q_uniform(n, n, True) == permstat.eulerian_binomial_q(n), "Hilb of augmented U_nn(q)", module="chowfy", n=n)
        if n >= 2:
            _require(
                chowfy.hilb_q_uniform(n - 1, n, False) == permstat.eulerian_d_q(n).shift(-1),
                "Hilb A(U_{n-1,n}(q)) != d_n / t",
                module="chowfy",
                n=n,
            )
            _require(
                chowfy.hilb_q_uniform(n - 1, n, True) == permstat.eulerian_A_q(n),
                "Hilb of augmented U_{n-1,n}(q) != A_n",
                module="chowfy",
                n=n,
            )


def check_hilbert_differences(ctx: SuiteContext) -> None:
    for n in range(2, ctx.bound(7) + 1):
        for r in range(1, n):
            for augmented in (False, True):
                diff = chowfy.hilb_q_uniform(r + 1, n, augmented) - chowfy.hilb_q_uniform(r, n, augmented)
                closed = LaurentQT.zero()
                for i in range(r + 1):
                    if augmented:
                        closed = closed + permstat.eulerian_A_q(i) * q_binomial(n, i) * LaurentQT.t_power(r + 1 - i)
                    else:
                        closed = closed + permstat.eulerian_d_q(i) * q_binomial(n, i) * LaurentQT.t_power(r - i)
                words = _decorated_correction(n, r) if augmented else _fixed_point_correction(n, r)
                _require(diff == closed, "difference vs q-binomial form", module="chowfy", r=r, n=n, augmented=augmented)
                _require(diff == words, "difference vs permutation form", module="chowfy", r=r, n=n, augmented=augmented)


def check_hilbert_fy(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(6)):
        matroid = chowfy.uniform(r, n)
        for augmented in (False, True):
            fy = chowfy.hilb(matroid, augmented)
            _require(
                fy == chowfy.hilb_q_uniform(r, n, augmented).at_q1(),
                "q-uniform series at q=1 differs from the FY count",
                module="chowfy",
                r=r,
                n=n,
                augmented=augmented,
            )
            if n <= 4:
                _require(fy == chowfy.hilb_by_enumeration(matroid, augmented), "FY stream vs count", module="chowfy", r=r, n=n)


def check_hilbert_palindromes(ctx: SuiteContext) -> None:
    matroids = [chowfy.uniform(r, n) for r, n in _ranks(ctx.bound(6))]
    matroids += [m for m, _ in _sample_matroids().values()]
    for m in matroids:
        _require(chowfy.hilb(m, False).is_palindromic(m.rk - 1), "Chow series not palindromic", module="chowfy", flats=[sorted(f) for f in m.flats])
        _require(chowfy.hilb(m, True).is_palindromic(m.rk), "augmented series not palindromic", module="chowfy", flats=[sorted(f) for f in m.flats])


# =========================
# frobenius
# =========================


def check_frobenius_chow(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        target = chowfy.grfrob_uniform(r, n, False)
        products = QSymElem.zero()
        for j in range(r):
            products = products + multiply(h_complete(n - j), eulerian.Q0(j)).scale(LaurentQT.t_range(0, r - j - 1))
        words = eulerian.Q(n)
        for j in range(r, n):
            words = words - eulerian.delta_chow_by_words(n, j)
        _require(products == target, "Chow Frobenius product form", module="chowfy", r=r, n=n)
        _require(words == target, "Chow Frobenius permutation form", module="chowfy", r=r, n=n)


def check_frobenius_aug(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        target = chowfy.grfrob_uniform(r, n, True)
        products = QSymElem.zero()
        for j in range(r):
            products = products + multiply(h_complete(n - j), eulerian.Q(j)).scale(LaurentQT.t_range(0, r - j - 1))
        products = h_complete(n) + shift_t(products, 1)
        words = eulerian.Qtilde(n)
        for j in range(r, n):
            words = words - eulerian.delta_aug_by_words(n, j)
        _require(products == target, "augmented Frobenius product form", module="chowfy", r=r, n=n)
        _require(words == target, "augmented Frobenius decorated form", module="chowfy", r=r, n=n)


def check_frobenius_specials(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        _require(chowfy.grfrob_uniform(n, n, False) == eulerian.Q(n), "grFrob A(U_nn) != Q_n", module="chowfy", n=n)
        _require(chowfy.grfrob_uniform(n, n, True) == eulerian.Qtilde(n), "grFrob of augmented U_nn", module="chowfy", n=n)
        if n >= 2:
            _require(
                chowfy.grfrob_uniform(n - 1, n, False) == shift_t(eulerian.Q0(n), -1),
                "grFrob A(U_{n-1,n}) != Q0_n / t",
                module="chowfy",
                n=n,
            )
            _require(chowfy.grfrob_uniform(n - 1, n, True) == eulerian.Q(n), "grFrob of augmented U_{n-1,n}", module="chowfy", n=n)


def check_ps_bridge(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        for augmented in (False, True):
            ps = qsym.ps_normalized(chowfy.grfrob_uniform(r, n, augmented), n)
            hilb_q = chowfy.hilb_q_uniform(r, n, augmented)
            _require(ps == hilb_q, "ps of grFrob differs from the q-uniform series", module="chowfy", r=r, n=n, augmented=augmented)
            if n <= 6:
                fy = chowfy.hilb(chowfy.uniform(r, n), augmented)
                _require(ps.at_q1() == fy, "ps at q=1 differs from the FY count", module="chowfy", r=r, n=n, augmented=augmented)


def check_refined_frobenius(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        for j in range(n + 1):
            for k in range(n + 1):
                for augmented in (False, True):
                    chowfy.grfrob_refined(n, j, k, augmented)


# =========================
# rankselect
# =========================


def check_beta_ribbon(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(7) + 1):
        for s in _subsets(n - 1):
            rankselect.beta_boolean(s, n)


def _all_matroids(ctx: SuiteContext) -> list[chowfy.MatroidFlats]:
    out = [chowfy.uniform(r, n) for r, n in _ranks(ctx.bound(5))]
    return out + [m for m, _ in _sample_matroids().values()]


def check_moebius(ctx: SuiteContext) -> None:
    for m in _all_matroids(ctx):
        h = rankselect.flag_h_vector(m)
        for s in _subsets(m.rk - 1):
            total = sum(h[t] for size in range(len(s) + 1) for t in itertools.combinations(s, size))
            f = rankselect.flag_f(m, s)
            _require(total == f, "flag f is not the sum of flag h", module="rankselect", S=s, flats=[sorted(x) for x in m.flats])
            _require(h[s] >= 0, "negative flag h entry", module="rankselect", S=s, flats=[sorted(x) for x in m.flats])


def _group_sample(n: int, rng: random.Random) -> list[rankselect.GroundPerm]:
    elements = [rankselect.identity(n)]
    if n >= 2:
        elements.append(rankselect.parse_cycles("(1 2)", n))
        elements.append(tuple(list(range(2, n + 1)) + [1]))
    for _ in range(20):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        elements.append(tuple(images))
    return elements


def check_character_uniform(ctx: SuiteContext) -> None:
    rng = ctx.rng()
    for r, n in _ranks(ctx.bound(6)):
        m = chowfy.uniform(r, n)
        for g in _group_sample(n, rng):
            for augmented in (False, True):
                rankselect.cd_character(m, g, augmented)


def check_character_files(ctx: SuiteContext) -> None:
    for name, (m, auts) in _sample_matroids().items():
        for g in [rankselect.identity(m.n), *auts]:
            for augmented in (False, True):
                rankselect.cd_character(m, g, augmented)
        for augmented in (False, True):
            value = rankselect.cd_character(m, rankselect.identity(m.n), augmented)
            _require(
                value == chowfy.hilb(m, augmented).eval_t(-1).coeff(0),
                "character at the identity differs from Hilb(-1)",
                module="rankselect",
                matroid=name,
                augmented=augmented,
            )


def check_ribbon_evaluation(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        for augmented in (False, True):
            value = qsym.eval_t(chowfy.grfrob_uniform(r, n, augmented), -1)
            if augmented:
                expected = (
                    QSymElem.zero() if r % 2 else qsym.ribbon_schur(rankselect.odd_set(r - 1), n).scale(-1 if (r // 2) % 2 else 1)
                )
            else:
                expected = (
                    QSymElem.zero()
                    if r % 2 == 0
                    else qsym.ribbon_schur(rankselect.even_set(r - 1), n).scale(-1 if ((r - 1) // 2) % 2 else 1)
                )
            _require(value == expected, "grFrob at t=-1 is not the signed ribbon", module="rankselect", r=r, n=n, augmented=augmented)


# =========================
# cd
# =========================


def check_cd_routes(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        for augmented in (False, True):
            value = charney.cd_eval(r, n, augmented)
            others = {
                "descents": charney.cd_descents(r, n, augmented),
                "secant": charney.cd_secant(r, n, augmented),
            }
            if r % 2 == (0 if augmented else 1):
                others["determinant"] = charney.cd_determinant(r, n, augmented)
            for method, other in others.items():
                _require(other == value, f"{method} route differs from Hilb(-1)", module="charney", r=r, n=n, augmented=augmented)


def check_cd_nonnegative(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(7)):
        for augmented in (False, True):
            value = charney.cd_normalized(charney.cd_eval(r, n, augmented), r, augmented)
            _require(value.is_nonnegative(), "normalized CD has a negative coefficient", module="charney", r=r, n=n, augmented=augmented)


def check_cd_descent_counts(ctx: SuiteContext) -> None:
    for r, n in _ranks(ctx.bound(6)):
        for augmented in (False, True):
            value = charney.cd_normalized(charney.cd_eval(r, n, augmented), r, augmented).at_q1()
            _require(
                value == chowfy.cd(chowfy.uniform(r, n), augmented),
                "q=1 CD differs from the uniform matroid",
                module="charney",
                r=r,
                n=n,
                augmented=augmented,
            )
            if r % 2 == (0 if augmented else 1):
                klass = frozenset(rankselect.odd_set(r - 1) if augmented else rankselect.even_set(r - 1))
                count = sum(1 for w in permstat.gen_permutations(n) if permstat.descent_set(w) == klass)
                _require(value.as_int() == count, "q=1 CD is not the descent-class size", module="charney", r=r, n=n)


def check_secant_numbers(ctx: SuiteContext) -> None:
    for k in range((ctx.bound(8) - 1) // 2 + 1):
        even, _ = charney.secant_numbers(k)
        _require(even.at_q1().as_int() == permstat.alternating_count(2 * k), "E_2k(1) is not the secant number", module="charney", k=k)


def check_descent_class_determinants(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(6) + 1):
        for s in _subsets(n - 1):
            _require(
                charney.descent_class_det(s, n) == permstat.descent_class_inv(s, n),
                "descent-class determinant",
                module="charney",
                S=s,
                n=n,
            )


def check_tangent_secant(ctx: SuiteContext) -> None:
    for n in range(1, ctx.bound(8) + 1):
        charney.tangent_secant_check(n)


# =========================
# Runner
# =========================

SUITES: dict[SuiteName, dict[str, Check]] = {
    SuiteName.arith: {
        "q_binomial_at_one": check_q_binomial_at_one,
        "q_binomial_symmetry": check_q_binomial_symmetry,
        "q_pascal": check_q_pascal,
        "ring_axioms": check_ring_axioms,
        "determinants": check_determinants,
    },
    SuiteName.perms: {
        "generator_counts": check_generator_counts,
        "dex_sum": check_dex_sum,
        "decorated_dex_sum": check_decorated_dex_sum,
        "exc_des_equidistribution": check_exc_des_equidistribution,
        "eulerian_palindromes": check_eulerian_palindromes,
        "binomial_eulerian_routes": check_binomial_eulerian_routes,
    },
    SuiteName.qsym: {
        "shuffle_laws": check_shuffle_laws,
        "descent_word_independence": check_descent_word_independence,
        "kostka": check_kostka,
        "dimension_consistency": check_dimension_consistency,
        "ribbon_routes": check_ribbon_routes,
        "specializations": check_qsym_specializations,
    },
    SuiteName.eulerian: {
        "Q_palindromes": check_Q_palindromes,
        "extraction": check_extraction,
        "Qtilde": check_Qtilde,
        "recurrence": check_recurrence,
        "symmetry": check_symmetry,
        "generating_function": check_generating_function,
        "differences": check_differences,
    },
    SuiteName.hilbert: {
        "permutation_forms": check_hilbert_permutation_forms,
        "binomial_forms": check_hilbert_binomial_forms,
        "specials": check_hilbert_specials,
        "differences": check_hilbert_differences,
        "fy_count": check_hilbert_fy,
        "palindromes": check_hilbert_palindromes,
    },
    SuiteName.frobenius: {
        "chow_forms": check_frobenius_chow,
        "aug_forms": check_frobenius_aug,
        "specials": check_frobenius_specials,
        "ps_bridge": check_ps_bridge,
        "refined": check_refined_frobenius,
    },
    SuiteName.rankselect: {
        "beta_ribbon": check_beta_ribbon,
        "moebius": check_moebius,
        "character_uniform": check_character_uniform,
        "character_files": check_character_files,
        "ribbon_evaluation": check_ribbon_evaluation,
    },
    SuiteName.cd: {
        "four_routes": check_cd_routes,
        "nonnegative": check_cd_nonnegative,
        "descent_counts": check_cd_descent_counts,
        "secant_numbers": check_secant_numbers,
        "descent_class_determinants": check_descent_class_determinants,
        "tangent_secant": check_tangent_secant,
    },
}


def checks_for(suite: SuiteName | str) -> dict[str, Check]:
    suite = SuiteName(suite)
    if suite is SuiteName.all:
        return {f"{s.value}.{name}": fn for s, table in SUITES.items() for name, fn in table.items()}
    return {f"{suite.value}.{name}": fn for name, fn in SUITES[suite].items()}


def _run_check(name: str, check: Check, ctx: SuiteContext) -> CheckOutcome:
    start = time.perf_counter()
    try:
        check(ctx)
    except ResourceGuardError:
        raise
    except IdentityFailure as e:
        logger.error(f"Check {name} failed: {e.tagged()}")
        return CheckOutcome(
            name=name, passed=False, seconds=time.perf_counter() - start, message=e.tagged(), witness=e.witness or None
        )
    except MCQError as e:
        logger.error(f"Check {name} aborted: {e.tagged()}")
        return CheckOutcome(name=name, passed=False, seconds=time.perf_counter() - start, message=e.tagged())
    except Exception as e:
        logger.error(f"Check {name} raised {type(e).__name__}: {e}")
        return CheckOutcome(
            name=name, passed=False, seconds=time.perf_counter() - start, message=f"{type(e).__name__}: {e}"
        )
    elapsed = time.perf_counter() - start
    logger.info(f"Check {name} passed in {elapsed:.3f}s")
    return CheckOutcome(name=name, passed=True, seconds=elapsed)


def run_suite(suite: SuiteName | str, *, max_n: int = 6, seed: int | None = None) -> VerifyReport:
    """Run every check of ``suite`` up to ``max_n``; randomized checks use ``seed`` (0 when absent)."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    suite = SuiteName(suite)
    ctx = SuiteContext(max_n=max_n, seed=seed)
    checks = checks_for(suite)
    logger.info(f"Running {len(checks)} checks of suite {suite.value} with max_n={max_n}")

    outcomes: list[CheckOutcome] = []
    with ThreadPoolExecutor(max_workers=config.workers()) as executor:
        future_to_name = {executor.submit(_run_check, name, fn, ctx): name for name, fn in checks.items()}
        for future in as_completed(future_to_name):
            outcomes.append(future.result())

    outcomes.sort(key=lambda o: o.name)
    return VerifyReport(
        suite=suite,
        max_n=max_n,
        seed=seed,
        passed=all(o.passed for o in outcomes),
        checks=outcomes,
    )
