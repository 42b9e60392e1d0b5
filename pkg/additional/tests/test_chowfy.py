from collections import Counter

import pytest

from frameworks import config
from frameworks.errors import InputValidationError, ResourceGuardError
from services import chowfy, eulerian
from services.exactalg import LaurentQT, QPoly
from services.qsym import QSymElem, f_basis, h_complete, ps_normalized

from conftest import LINE_PLUS_POINT, U23

ONE_FOUR_ONE = LaurentQT({0: 1, 1: 4, 2: 1})


# =========================
# Flats files
# =========================


def test_uniform_matroid_shape():
    m = chowfy.uniform(2, 3)
    assert m.rk == 2
    assert m.summary() == {0: 1, 1: 3, 2: 1}
    with pytest.raises(ValueError):
        chowfy.uniform(4, 3)


def test_from_flats_matches_uniform():
    m = chowfy.from_flats(U23)
    assert m.summary() == chowfy.uniform(2, 3).summary()
    assert chowfy.hilb(m, True) == chowfy.hilb(chowfy.uniform(2, 3), True)


def test_line_plus_point():
    m = chowfy.from_flats(LINE_PLUS_POINT)
    assert m.rk == 3
    assert m.summary() == {0: 1, 1: 4, 2: 4, 3: 1}


@pytest.mark.parametrize(
    "flats,axiom",
    [
        ({"ground": 3, "flats": [[], [1], [2], [3]]}, "F1"),
        ({"ground": 2, "flats": [[1], [2], [1, 2]]}, "loopless"),
        ({"ground": 3, "flats": [[], [1, 2], [2, 3], [1, 2, 3]]}, "F2"),
        ({"ground": 3, "flats": [[], [1], [1, 2, 3]]}, "F3"),
        ({"ground": 3, "flats": [[], [2, 1], [1, 2, 3]]}, "schema"),
        ({"ground": 2, "flats": [[], [], [1, 2]]}, "schema"),
    ],
)
def test_axiom_violations(flats, axiom):
    with pytest.raises(InputValidationError) as info:
        chowfy.from_flats(flats)
    assert info.value.axiom == axiom
    assert info.value.exit_code == 3


def test_load_flats_file(write_flats):
    assert chowfy.load_flats_file(write_flats(U23)).rk == 2
    with pytest.raises(InputValidationError):
        chowfy.load_flats_file(write_flats("{not json"))
    with pytest.raises(InputValidationError):
        chowfy.load_flats_file("/nonexistent/flats.json")


def test_dump_flats_is_sorted_json():
    assert chowfy.dump_flats(chowfy.uniform(1, 1)) == '{"flats": [[], [1]], "ground": 1}'


# =========================
# Hilbert series
# =========================


def test_permutahedron_and_stellahedron():
    assert chowfy.hilb(chowfy.uniform(3, 3), False) == ONE_FOUR_ONE
    assert chowfy.hilb(chowfy.uniform(2, 3), True) == ONE_FOUR_ONE


def test_q_uniform_example():
    expected = LaurentQT({0: 1, 1: QPoly.from_list([2, 1, 1]), 2: 1})
    assert chowfy.hilb_q_uniform(3, 3, False) == expected


@pytest.mark.parametrize("augmented", [False, True])
@pytest.mark.parametrize("r,n", [(1, 1), (1, 3), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)])
def test_three_routes_at_q_equal_one(r, n, augmented):
    m = chowfy.uniform(r, n)
    by_chains = chowfy.hilb_q_uniform(r, n, augmented, q_value=1)
    assert by_chains == chowfy.hilb(m, augmented)
    assert by_chains == chowfy.hilb_by_enumeration(m, augmented)
    assert ps_normalized(chowfy.grfrob_uniform(r, n, augmented), n) == chowfy.hilb_q_uniform(r, n, augmented)


@pytest.mark.parametrize("augmented", [False, True])
def test_file_matroid_hilbert_is_palindromic(augmented):
    m = chowfy.from_flats(LINE_PLUS_POINT)
    series = chowfy.hilb(m, augmented)
    assert series == chowfy.hilb_by_enumeration(m, augmented)
    assert series.is_palindromic(chowfy.top_degree(m, augmented))


def test_fy_basis_degree_filter():
    m = chowfy.uniform(3, 3)
    assert sum(1 for _ in chowfy.fy_basis(m, False, degree=1)) == 4
    assert [str(mono) for mono in chowfy.fy_basis(m, False, degree=0)] == ["1"]


def test_fy_basis_counts_by_degree_augmented():
    counts = Counter(mono.degree for mono in chowfy.fy_basis(chowfy.uniform(2, 3), True))
    assert counts == {0: 1, 1: 4, 2: 1}


def test_fy_basis_rank_one_is_only_the_empty_monomial():
    assert list(chowfy.fy_basis(chowfy.uniform(1, 3), False)) == [chowfy.FYMonomial(chain=(), exponents=())]
    assert chowfy.hilb(chowfy.uniform(1, 3), False) == LaurentQT.one()


def test_q_uniform_rank_two_on_two_points():
    assert chowfy.hilb_q_uniform(2, 2, False) == LaurentQT({0: 1, 1: 1})


def test_q_value_counts_over_a_field():
    # U_{2,2}(2): the three lines of F_2^2 are the rank-1 flats
    assert chowfy.hilb_q_uniform(2, 2, True, q_value=2) == LaurentQT({0: 1, 1: 4, 2: 1})


# =========================
# Frobenius series
# =========================


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_frobenius_specials(n):
    assert chowfy.grfrob_uniform(n, n, False) == eulerian.Q(n)
    assert chowfy.grfrob_uniform(n, n, True) == eulerian.Qtilde(n)


def test_frobenius_rank_two_on_three_points():
    assert chowfy.grfrob_uniform(2, 3, False) == h_complete(3).scale(LaurentQT({0: 1, 1: 1}))
    assert chowfy.grfrob_uniform(2, 2, True) == eulerian.Qtilde(2)


def test_refined_frobenius_examples():
    assert chowfy.grfrob_refined(3, 1, 1, False) == eulerian.Q_njk(3, 1, 1)
    assert chowfy.grfrob_refined(3, 1, 1, False) == f_basis((), 3) + f_basis((1,), 3) + f_basis((2,), 3)
    assert chowfy.grfrob_refined(3, 0, 3, False) == f_basis((), 3)
    assert chowfy.grfrob_refined(2, 1, 0, True) == f_basis((), 2)


@pytest.mark.parametrize("augmented", [False, True])
def test_refined_frobenius_sums_to_graded_frobenius(augmented):
    total = QSymElem.zero()
    for j in range(4):
        for k in range(4):
            total = total + chowfy.grfrob_refined(3, j, k, augmented).scale(LaurentQT.t_power(j))
    assert total == chowfy.grfrob_uniform(3, 3, augmented)


def test_frobenius_guard():
    config.set_max_n_override(3)
    with pytest.raises(ResourceGuardError):
        chowfy.grfrob_uniform(2, 4, False)


# =========================
# Charney-Davis
# =========================


def test_cd_of_small_matroids():
    assert chowfy.cd(chowfy.uniform(2, 3), True).as_int() == 2
    assert chowfy.cd(chowfy.uniform(3, 3), False).as_int() == 2
    assert chowfy.cd_sign(2) == -1
    assert chowfy.cd_sign(4) == 1
