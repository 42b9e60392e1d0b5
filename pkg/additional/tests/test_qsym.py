import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services import qsym
from services.exactalg import LaurentQT, QPoly
from services.qsym import QSymElem, f_basis, h_complete, multiply


def _subsets_of(n):
    return st.sets(st.integers(1, max(n - 1, 1)), max_size=max(n - 1, 0)).map(
        lambda s: tuple(sorted(x for x in s if x <= n - 1))
    )


fundamentals = st.integers(1, 3).flatmap(lambda n: _subsets_of(n).map(lambda s: f_basis(s, n)))


def test_f_basis_rejects_bad_subsets():
    with pytest.raises(ValueError):
        f_basis((3,), 3)
    with pytest.raises(ValueError):
        QSymElem({2: {(0,): 1}})


def test_h1_squared():
    assert multiply(h_complete(1), h_complete(1)) == f_basis((), 2) + f_basis((1,), 2)


def test_shuffle_words():
    assert qsym.shuffle_words((1,), (2,)) == {(): 1, (1,): 1}


def test_descent_word_has_requested_descents():
    for subset in [(), (1,), (2,), (1, 3)]:
        word = qsym.descent_word(subset, 4)
        assert tuple(i for i in range(1, 4) if word[i - 1] > word[i]) == subset


@pytest.mark.property_based
@settings(max_examples=30)
@given(fundamentals, fundamentals)
def test_product_is_commutative(x, y):
    assert multiply(x, y) == multiply(y, x)


@pytest.mark.property_based
@settings(max_examples=20)
@given(fundamentals, fundamentals, fundamentals)
def test_product_is_associative(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_schur_and_kostka():
    assert qsym.schur((2, 1)) == f_basis((1,), 3) + f_basis((2,), 3)
    assert qsym.kostka_number((2, 1), (1, 1, 1)) == 2
    assert qsym.kostka_number((3,), (1, 1, 1)) == 1
    assert qsym.kostka_number((1, 1, 1), (2, 1)) == 0


@pytest.mark.parametrize("content", [(2, 1), (1, 1, 1), (2, 2), (3, 1)])
def test_h_expands_in_schur_by_kostka(content):
    n = sum(content)
    expected = QSymElem.zero()
    for shape in qsym.partitions(n):
        expected = expected + qsym.schur(shape).scale(qsym.kostka_number(shape, content))
    assert qsym.h_of_composition(content) == expected


def test_ribbons():
    assert qsym.ribbon_schur((1,), 2) == f_basis((1,), 2)
    assert qsym.ribbon_schur((), 3) == h_complete(3)
    for subset in [(1,), (2,), (1, 2), (1, 3)]:
        assert qsym.ribbon_by_tableaux(subset, 4) == qsym.ribbon_by_inclusion_exclusion(subset, 4)


def test_symmetry_detection():
    assert qsym.is_symmetric(qsym.h_of_composition((2, 1)))
    assert not qsym.is_symmetric(f_basis((1,), 3))


def test_ribbon_with_middle_descent_is_symmetric():
    ribbon = qsym.ribbon_schur({2}, 3)
    assert ribbon == f_basis((1,), 3) + f_basis((2,), 3)
    assert qsym.is_symmetric(ribbon)


def test_specializations():
    assert qsym.ps_normalized(f_basis((1,), 2), 2) == LaurentQT.constant(QPoly.monomial(1))
    x = f_basis((), 2).scale(LaurentQT({0: 1, 1: 1}))
    assert qsym.eval_t(x, -1).is_zero
    assert qsym.coefficient_of_t(x, 1) == f_basis((), 2)
    assert qsym.reflect_t(x, 1) == x
    with pytest.raises(ValueError):
        qsym.ps_normalized(f_basis((), 3), 2)


def test_json_shape():
    x = f_basis((1,), 3).scale(LaurentQT.t_power(1))
    assert x.to_json() == [{"degree": 3, "subset": [1], "coeff": [{"t": 1, "q": [[0, "1"]]}]}]
    assert QSymElem.from_json(x.to_json()) == x
