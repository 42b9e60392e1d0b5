import itertools

import pytest

from models.cd_report import CDMethod
from services import charney, permstat
from services.exactalg import LaurentQT, QPoly

MINUS_Q_MINUS_Q2 = LaurentQT.constant(QPoly.from_list([0, -1, -1]))


@pytest.mark.parametrize("method", ["eval", "descents", "secant", "determinant"])
def test_permutahedron_rank_three(method):
    assert charney.cd_route(method, 3, 3, False) == MINUS_Q_MINUS_Q2


@pytest.mark.parametrize("method", ["eval", "descents", "secant", "determinant"])
def test_stellahedron_like_rank_two(method):
    assert charney.cd_route(method, 2, 3, True) == MINUS_Q_MINUS_Q2


def test_normalized_value_is_nonnegative():
    value = charney.cd_normalized(MINUS_Q_MINUS_Q2, 3, False)
    assert value == LaurentQT.constant(QPoly.from_list([0, 1, 1]))
    assert value.is_nonnegative()


@pytest.mark.parametrize("augmented", [False, True])
@pytest.mark.parametrize("r,n", [(1, 1), (1, 4), (2, 4), (3, 4), (4, 4), (3, 5), (5, 5)])
def test_routes_agree(r, n, augmented):
    report = charney.cd_report(r, n, augmented)
    assert report.agreement
    expected_skips = [CDMethod.determinant] if charney._vanishes(r, augmented) else []
    assert report.skipped == expected_skips
    assert [route.method for route in report.routes] == sorted(
        (m for m in CDMethod if m not in expected_skips), key=lambda m: m.value
    )


def test_vanishing_parity():
    assert charney.cd_eval(2, 3, False).is_zero
    assert charney.cd_secant(3, 4, True).is_zero
    with pytest.raises(ValueError):
        charney.cd_determinant(2, 3, False)


def test_report_method_subset():
    report = charney.cd_report(3, 3, False, methods=["secant", "eval"])
    assert [route.method for route in report.routes] == [CDMethod.eval, CDMethod.secant]
    assert report.routes[0].normalized == report.routes[1].normalized


def test_range_errors():
    with pytest.raises(ValueError):
        charney.cd_eval(0, 3, False)
    with pytest.raises(ValueError):
        charney.cd_route("descents", 4, 3, True)
    with pytest.raises(ValueError):
        charney.cd_route("bogus", 3, 3, True)


def test_secant_numbers():
    even, starred = charney.secant_numbers(1)
    assert even == LaurentQT.one()
    assert starred == LaurentQT.constant(QPoly.from_list([0, 1, 1]))
    assert charney.secant_numbers(2)[0].at_q1().as_int() == permstat.alternating_count(4)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_descent_class_determinants(n):
    for size in range(n):
        for subset in itertools.combinations(range(1, n), size):
            assert charney.descent_class_det(subset, n) == permstat.descent_class_inv(subset, n)


def test_descent_class_det_rejects_bad_subset():
    with pytest.raises(ValueError):
        charney.descent_class_det((3,), 3)


@pytest.mark.parametrize("n,zigzag", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 16)])
def test_tangent_and_secant_numbers(n, zigzag):
    assert charney.tangent_secant_check(n) == zigzag
