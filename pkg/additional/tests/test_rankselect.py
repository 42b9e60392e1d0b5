import pytest

from frameworks.errors import IdentityFailure
from services import chowfy, rankselect
from services.qsym import ribbon_schur
from services.rankselect import parse_cycles

from conftest import LINE_PLUS_POINT


@pytest.fixture
def line_plus_point():
    return chowfy.from_flats(LINE_PLUS_POINT)


# =========================
# Cycle notation
# =========================


def test_parse_and_format_cycles():
    g = parse_cycles("(1 2)(3 4)", 4)
    assert g == (2, 1, 4, 3)
    assert rankselect.format_cycles(g) == "(1 2)(3 4)"
    assert parse_cycles("(1,3,2)", 3) == (3, 1, 2)
    assert rankselect.format_cycles(rankselect.identity(3)) == "()"
    assert parse_cycles("", 2) == (1, 2)


@pytest.mark.parametrize("text", ["(1 5)", "(1 2", "(1 2)(2 3)", "(a b)"])
def test_parse_cycles_errors(text):
    with pytest.raises(ValueError):
        parse_cycles(text, 4)


def test_non_automorphism_is_rejected(line_plus_point):
    with pytest.raises(ValueError):
        rankselect.check_automorphism(line_plus_point, parse_cycles("(1 4)", 4))
    rankselect.check_automorphism(line_plus_point, parse_cycles("(1 2 3)", 4))


# =========================
# Flag vectors
# =========================


def test_boolean_flag_h_counts_descent_classes():
    h = rankselect.flag_h_vector(chowfy.uniform(3, 3))
    assert h == {(): 1, (1,): 2, (2,): 2, (1, 2): 1}


def test_line_plus_point_flag_vectors(line_plus_point):
    assert rankselect.flag_f(line_plus_point, (1, 2)) == 9
    assert rankselect.flag_h_vector(line_plus_point) == {(): 1, (1,): 3, (2,): 3, (1, 2): 2}


def test_rank_selection_bounds(line_plus_point):
    with pytest.raises(ValueError):
        rankselect.flag_h(line_plus_point, (3,))


def test_fixed_chain_count_on_boolean():
    b3 = chowfy.boolean(3)
    assert rankselect.fixed_chain_count(b3, parse_cycles("(1 2)", 3), (2,)) == 1
    assert rankselect.fixed_chain_count(b3, parse_cycles("(1 2 3)", 3), (1,)) == 0
    assert rankselect.fixed_chain_count(b3, rankselect.identity(3), (1, 2)) == rankselect.flag_f(b3, (1, 2))


@pytest.mark.parametrize("subset", [(), (1,), (2,), (1, 3), (1, 2, 3)])
def test_beta_of_boolean_is_ribbon(subset):
    assert rankselect.beta_boolean(subset, 4) == ribbon_schur(subset, 4)


# =========================
# Characters
# =========================


def test_character_at_identity_is_hilbert_at_minus_one(line_plus_point):
    for augmented in (False, True):
        value = rankselect.cd_character(line_plus_point, rankselect.identity(4), augmented)
        assert value == chowfy.hilb(line_plus_point, augmented).eval_t(-1).coeff(0)
    assert rankselect.cd_character(line_plus_point, rankselect.identity(4), False) == -3


@pytest.mark.parametrize("cycles", ["(1 2)", "(1 2 3)", "(1 3)"])
@pytest.mark.parametrize("augmented", [False, True])
def test_character_identity_on_file_matroid(line_plus_point, cycles, augmented):
    g = parse_cycles(cycles, 4)
    assert rankselect.cd_character(line_plus_point, g, augmented) == rankselect.cd_character_expected(
        line_plus_point, g, augmented
    )


@pytest.mark.parametrize("cycles", ["(1 2)", "(1 2 3)", "(1 2 3 4)", "(1 2)(3 4)"])
def test_character_identity_on_boolean(cycles):
    m = chowfy.uniform(4, 4)
    g = parse_cycles(cycles, 4)
    for augmented in (False, True):
        fixed_side, beta_side = rankselect.cd_character_sides(m, g, augmented)
        assert fixed_side == beta_side


def test_boolean_identity_character_is_minus_ribbon_dimension():
    m = chowfy.uniform(3, 3)
    assert rankselect.cd_character(m, rankselect.identity(3), False) == -2
    assert rankselect.cd_character_sides(m, rankselect.identity(3), False) == (-2, -2)


def test_u23_transposition():
    m = chowfy.uniform(2, 3)
    g = parse_cycles("(1 2)", 3)
    assert rankselect.fixed_monomial_series(m, g, True).eval_t(-1).coeff(0) == 0
    assert rankselect.cd_character_expected(m, g, True) == 0


def test_matroid_report():
    m = chowfy.uniform(2, 3)
    report = rankselect.matroid_report(m, True, [parse_cycles("(1 2)", 3)])
    assert report.rank == 2
    assert report.cd == 2
    assert report.flats_by_rank == {0: 1, 1: 3, 2: 1}
    assert [(e.subset, e.flag_f, e.flag_h) for e in report.flag_vectors] == [([], 1, 1), ([1], 3, 2)]
    assert report.characters[0].g == "(1 2)"
    assert report.characters[0].fixed_side == report.characters[0].beta_side == 0
    assert report.variant.value == "aug"


def test_identity_failure_carries_witness():
    failure = IdentityFailure("x", module="rankselect", witness={"g": "(1 2)"})
    assert failure.tagged() == "[rankselect] x"
    assert failure.exit_code == 1
