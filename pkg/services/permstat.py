# services/permstat.py
"""
Permutations, derangements, decorated permutations and (reverse) alternating
permutations, with their statistics and the Eulerian polynomial families.

Words are tuples of ints in one-line notation. A decorated permutation of
length n is a word over {0, 1, ..., n} whose nonzero letters form a bijection
of the set of positions holding them; the all-zero word is theta.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from frameworks.config import check_guard
from frameworks.errors import IdentityFailure
from services.exactalg import LaurentQT, QPoly, q_binomial

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@dataclass(frozen=True)
class PermStats:
    exc: int
    des_set: frozenset[int]
    maj: int
    inv: int
    fix: int

    @property
    def des(self) -> int:
        return len(self.des_set)


@dataclass(frozen=True)
class DecoratedStats:
    exc: int
    des_set: frozenset[int]
    dex: frozenset[int]
    maj: int
    fix2: int


# =========================
# Validation
# =========================


def validate_permutation(word: Sequence[int]) -> Word:
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
    return word


def validate_decorated(word: Sequence[int]) -> Word:
    word = tuple(word)
    n = len(word)
    if any(not 0 <= x <= n for x in word):
        raise ValueError(f"{word} has letters outside 0..{n}")
    letters = [x for x in word if x]
    positions = {i for i, x in enumerate(word, start=1) if x}
    if len(set(letters)) != len(letters) or set(letters) != positions:
        raise ValueError(f"{word} is not a decorated permutation")
    return word


# =========================
# Generators
# =========================


def gen_permutations(n: int) -> Iterator[Word]:
    """All of S_n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_guard("permutations", n, module="permstat")
    return itertools.permutations(range(1, n + 1))


def gen_derangements(n: int) -> Iterator[Word]:
    return (w for w in gen_permutations(n) if all(x != i for i, x in enumerate(w, start=1)))


def gen_decorated(n: int) -> Iterator[Word]:
    """All decorated permutations of length n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_guard("decorated", n, module="permstat")
    return _decorated_words(n)


def _decorated_words(n: int) -> Iterator[Word]:
    word: list[int] = []
    used = [False] * (n + 1)

    def extend(pos: int) -> Iterator[Word]:
        if pos > n:
            yield tuple(word)
            return
        # a zero here is only allowed if the letter pos is not already used
        if not used[pos]:
            word.append(0)
            yield from extend(pos + 1)
            word.pop()
        for letter in range(1, n + 1):
            if used[letter]:
                continue
            # letters below pos must sit on positions that are nonzero
            if letter < pos and word[letter - 1] == 0:
                continue
            used[letter] = True
            word.append(letter)
            yield from extend(pos + 1)
            word.pop()
            used[letter] = False

    return extend(1)


def _is_up_down(word: Word, first_ascent: bool) -> bool:
    up = first_ascent
    for a, b in zip(word, word[1:]):
        if (a < b) != up:
            return False
        up = not up
    return True


def gen_up_down(n: int, *, first_ascent: bool) -> Iterator[Word]:
    """Permutations whose consecutive comparisons alternate, starting up or down."""
    return (w for w in gen_permutations(n) if _is_up_down(w, first_ascent))


def gen_reverse_alternating(m: int) -> Iterator[Word]:
    """RAlt_m: s1 < s2 > s3 < ... for even m."""
    if m < 0 or m % 2:
        raise ValueError(f"reverse alternating permutations are generated for even length, got {m}")
    return gen_up_down(m, first_ascent=True)


def gen_alternating(m: int) -> Iterator[Word]:
    """Alt_m: s1 > s2 < s3 > ... for odd m."""
    if m < 0 or m % 2 == 0:
        raise ValueError(f"alternating permutations are generated for odd length, got {m}")
    return gen_up_down(m, first_ascent=False)


def alternating_count(n: int) -> int:
    """Euler zigzag number: secant number for even n, tangent number for odd n."""
    return sum(1 for _ in gen_up_down(n, first_ascent=True))


# =========================
# Statistics
# =========================


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def inversions(word: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(word)), 2) if word[i] > word[j])


def stats(word: Sequence[int]) -> PermStats:
    des = descent_set(word)
    return PermStats(
        exc=sum(1 for i, x in enumerate(word, start=1) if x > i),
        des_set=des,
        maj=sum(des),
        inv=inversions(word),
        fix=sum(1 for i, x in enumerate(word, start=1) if x == i),
    )


def _barred_keys(word: Sequence[int]) -> list[tuple[int, int]]:
    # barred letters come first; 0 sorts between barred and unbarred letters
    return [(0, x) if x > i else (1, x) for i, x in enumerate(word, start=1)]


def dex(word: Sequence[int]) -> frozenset[int]:
    """Descent set of the word with excedance letters barred (1bar<...<nbar<1<...<n)."""
    return descent_set(_barred_keys(word))


def is_theta(word: Sequence[int]) -> bool:
    return all(x == 0 for x in word)


def dex_decorated(word: Sequence[int]) -> frozenset[int]:
    if is_theta(word):
        return frozenset()
    return dex(word)


def exc_decorated(word: Sequence[int]) -> int:
    if is_theta(word):
        return -1
    return sum(1 for i, x in enumerate(word, start=1) if x > i)


def maj_decorated(word: Sequence[int]) -> int:
    """Descent-convention major index; -1 on theta."""
    if is_theta(word):
        return -1
    return sum(descent_set(word))


def fix2(word: Sequence[int]) -> int:
    return sum(1 for x in word if x == 0)


def stats_decorated(word: Sequence[int]) -> DecoratedStats:
    return DecoratedStats(
        exc=exc_decorated(word),
        des_set=descent_set(word),
        dex=dex_decorated(word),
        maj=maj_decorated(word),
        fix2=fix2(word),
    )


def format_word(word: Sequence[int]) -> str:
    if len(word) <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def descent_class_inv(des: Iterable[int], n: int) -> QPoly:
    """Sum of q^inv over permutations of [n] with descent set exactly ``des``."""
    target = frozenset(des)
    return QPoly(_tally(inversions(w) for w in gen_permutations(n) if descent_set(w) == target))


# =========================
# Eulerian polynomials
# =========================


def _tally(values: Iterable) -> dict:
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return counts


def _collect(words: Iterable[Word], weight: Callable[[Word], tuple[int, int]]) -> LaurentQT:
    return LaurentQT.from_counts(_tally(weight(w) for w in words))


def _maj_exc_weight(word: Word) -> tuple[int, int]:
    s = stats(word)
    return s.exc, s.maj - s.exc


def _decorated_weight(word: Word) -> tuple[int, int]:
    exc = exc_decorated(word)
    return exc + 1, maj_decorated(word) - exc


@lru_cache(maxsize=None)
def eulerian_A_q(n: int) -> LaurentQT:
    """A_n(q,t) = sum over S_n of q^(maj-exc) t^exc."""
    check_guard("eulerian", n, module="permstat")
    return _collect(gen_permutations(n), _maj_exc_weight)


@lru_cache(maxsize=None)
def eulerian_d_q(n: int) -> LaurentQT:
    check_guard("eulerian", n, module="permstat")
    return _collect(gen_derangements(n), _maj_exc_weight)


def eulerian_A(n: int) -> LaurentQT:
    return eulerian_A_q(n).at_q1()


def eulerian_d(n: int) -> LaurentQT:
    return eulerian_d_q(n).at_q1()


def eulerian_binomial_q_by_formula(n: int) -> LaurentQT:
    """1 + t * sum_{k=1}^n [n choose k]_q A_k(q,t)."""
    total = LaurentQT.zero()
    for k in range(1, n + 1):
        total = total + eulerian_A_q(k) * q_binomial(n, k)
    return LaurentQT.one() + total.shift(1)


def eulerian_binomial_q_by_words(n: int) -> LaurentQT:
    """Sum over decorated permutations of q^(maj-exc) t^(exc+1)."""
    return _collect(gen_decorated(n), _decorated_weight)


@lru_cache(maxsize=None)
def eulerian_binomial_q(n: int) -> LaurentQT:
    check_guard("eulerian", n, module="permstat")
    by_formula = eulerian_binomial_q_by_formula(n)
    by_words = eulerian_binomial_q_by_words(n)
    if by_formula != by_words:
        logger.error(f"Binomial Eulerian routes disagree at n={n}")
        raise IdentityFailure(
            f"binomial Eulerian polynomial routes disagree at n={n}",
            module="permstat",
            witness={"n": n, "formula": by_formula.to_json(), "words": by_words.to_json()},
        )
    return by_formula


def eulerian_binomial(n: int) -> LaurentQT:
    return eulerian_binomial_q(n).at_q1()
