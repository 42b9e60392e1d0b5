from math import factorial

import pytest

from frameworks import config
from frameworks.errors import ResourceGuardError
from services import permstat
from services.exactalg import LaurentQT, QPoly


def test_generator_sizes():
    assert sum(1 for _ in permstat.gen_permutations(4)) == factorial(4)
    assert sum(1 for _ in permstat.gen_derangements(4)) == 9
    assert [sum(1 for _ in permstat.gen_decorated(n)) for n in range(4)] == [1, 2, 5, 16]


def test_decorated_words_of_length_two():
    assert sorted(permstat.gen_decorated(2)) == [(0, 0), (0, 2), (1, 0), (1, 2), (2, 1)]


def test_decorated_words_are_valid():
    for w in permstat.gen_decorated(3):
        assert permstat.validate_decorated(w) == w
    assert (0, 0, 0) in set(permstat.gen_decorated(3))


def test_validation_errors():
    with pytest.raises(ValueError):
        permstat.validate_permutation((1, 1, 2))
    with pytest.raises(ValueError):
        permstat.validate_decorated((2, 0))
    assert permstat.validate_decorated((1, 0)) == (1, 0)


def test_alternating_counts():
    assert [permstat.alternating_count(n) for n in range(1, 7)] == [1, 1, 2, 5, 16, 61]
    assert sorted(permstat.gen_alternating(3)) == [(2, 1, 3), (3, 1, 2)]
    with pytest.raises(ValueError):
        list(permstat.gen_reverse_alternating(3))


def test_stats_of_321():
    s = permstat.stats((3, 2, 1))
    assert (s.exc, s.maj, s.inv, s.fix, s.des) == (1, 3, 3, 1, 2)
    assert permstat.dex((3, 2, 1)) == frozenset({2})


def test_stats_of_231():
    s = permstat.stats((2, 3, 1))
    assert (s.exc, s.des_set, s.maj, s.inv, s.fix) == (2, frozenset({2}), 2, 2, 0)


def test_dex_of_132():
    assert permstat.dex((1, 3, 2)) == frozenset({1})


def test_decorated_stats_of_4013():
    s = permstat.stats_decorated((4, 0, 1, 3))
    assert s.dex == frozenset()
    assert (s.exc, s.maj, s.fix2) == (1, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_dex_sums_to_maj_minus_exc(n):
    for w in permstat.gen_permutations(n):
        s = permstat.stats(w)
        assert sum(permstat.dex(w)) == s.maj - s.exc


def test_theta_conventions():
    theta = (0, 0)
    assert permstat.is_theta(theta)
    assert permstat.exc_decorated(theta) == -1
    assert permstat.maj_decorated(theta) == -1
    assert permstat.dex_decorated(theta) == frozenset()
    assert permstat.stats_decorated(theta).fix2 == 2


def test_format_word():
    assert permstat.format_word((3, 1, 2)) == "312"
    assert permstat.format_word(tuple(range(1, 11))) == "1,2,3,4,5,6,7,8,9,10"


def test_descent_class_inv():
    assert permstat.descent_class_inv({1}, 3) == QPoly.from_list([0, 1, 1])
    assert permstat.descent_class_inv(set(), 3) == QPoly.one()


def test_eulerian_polynomials():
    assert permstat.eulerian_A(3) == LaurentQT({0: 1, 1: 4, 2: 1})
    assert permstat.eulerian_d_q(3) == LaurentQT({1: 1, 2: 1})
    assert permstat.eulerian_binomial_q(2) == LaurentQT({0: 1, 1: QPoly.from_list([2, 1]), 2: 1})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_binomial_eulerian_routes_agree(n):
    assert permstat.eulerian_binomial_q_by_formula(n) == permstat.eulerian_binomial_q_by_words(n)


def test_permutation_guard():
    config.set_max_n_override(3)
    with pytest.raises(ResourceGuardError) as info:
        permstat.gen_permutations(4)
    assert info.value.limit == 3
    assert info.value.requested == 4
