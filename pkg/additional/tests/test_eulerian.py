import pytest

from services import eulerian, permstat
from services.exactalg import LaurentQT
from services.qsym import QSymElem, f_basis, h_complete, ps_normalized, reflect_t

T = LaurentQT.t_power(1)
T_PLUS_T2 = LaurentQT({1: 1, 2: 1})


def test_Q2_and_Q0_2():
    assert eulerian.Q(2) == f_basis((), 2).scale(LaurentQT({0: 1, 1: 1}))
    assert eulerian.Q0(2) == f_basis((), 2).scale(LaurentQT.t_power(1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_Q_specializes_to_q_eulerian(n):
    assert ps_normalized(eulerian.Q(n), n) == permstat.eulerian_A_q(n)
    assert ps_normalized(eulerian.Q0(n), n) == permstat.eulerian_d_q(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_Qtilde_specializes_to_binomial_eulerian(n):
    assert ps_normalized(eulerian.Qtilde(n), n) == permstat.eulerian_binomial_q(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_palindromes(n):
    assert reflect_t(eulerian.Q(n), n - 1) == eulerian.Q(n)
    assert reflect_t(eulerian.Q0(n), n) == eulerian.Q0(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_recurrence(n):
    assert eulerian.recurrence_Q(n) == eulerian.Q(n)


def test_fix_refinement_sums_to_Q():
    parts = eulerian.Q_fix_refined(3)
    assert sum(parts.values(), QSymElem.zero()) == eulerian.Q(3)
    assert eulerian.Q_njk(3, 0, 3) == f_basis((), 3)
    assert parts[0] == eulerian.Q0(3)


def test_Qtilde_refined_extremes():
    refined = eulerian.Qtilde_refined(3)
    assert refined[3] == f_basis((), 3)
    assert eulerian.Qtilde_njk(3, 0, 3) == f_basis((), 3)
    with pytest.raises(ValueError):
        eulerian.Qtilde_refined(0)


def test_generating_function():
    assert eulerian.gf_check(4)


def test_divide_by_one_minus_t():
    assert eulerian.divide_by_one_minus_t(LaurentQT({0: 1, 2: -1})) == LaurentQT({0: 1, 1: 1})


def test_delta_chow_first_difference_is_h_n():
    assert eulerian.delta_chow(3, 1) == h_complete(3).scale(T)


def test_delta_chow_second_difference():
    expected = f_basis((), 3).scale(T_PLUS_T2) + (f_basis((1,), 3) + f_basis((2,), 3)).scale(T)
    assert eulerian.delta_chow(3, 2) == expected


def test_delta_aug_first_difference():
    assert eulerian.delta_aug(2, 1) == f_basis((), 2).scale(T_PLUS_T2) + f_basis((1,), 2).scale(T)


@pytest.mark.parametrize("n,r", [(3, 1), (3, 2), (4, 2)])
def test_differences_are_nonzero_and_homogeneous(n, r):
    for delta in (eulerian.delta_chow(n, r), eulerian.delta_aug(n, r)):
        assert not delta.is_zero
        assert delta.degrees == [n]


def test_difference_range():
    with pytest.raises(ValueError):
        eulerian.delta_chow(3, 3)


def test_Q_njk_small_case():
    assert eulerian.Q_njk(3, 1, 1) == f_basis((), 3) + f_basis((1,), 3) + f_basis((2,), 3)


def test_Qtilde_2():
    expected = f_basis((), 2).scale(LaurentQT({0: 1, 1: 2, 2: 1})) + f_basis((1,), 2).scale(LaurentQT.t_power(1))
    assert eulerian.Qtilde(2) == expected
