import json

import pytest

from services import eulerian
from services.chowfy import hilb_q_uniform
from services.exactalg import LaurentQT, QPoly
from services.qsym import f_basis
from services.render_service import (
    csv_laurent,
    csv_qsym,
    json_laurent,
    json_qsym,
    latex_laurent,
    latex_qsym,
    render_laurent,
    render_qsym,
)

ONE_FOUR_ONE = LaurentQT({0: 1, 1: 4, 2: 1})


# =========================
# LaTeX
# =========================


def test_latex_laurent():
    assert latex_laurent(ONE_FOUR_ONE) == "1+4t+t^2"
    assert latex_laurent(hilb_q_uniform(3, 3, False)) == "1+(2+q+q^2)t+t^2"
    assert latex_laurent(LaurentQT.constant(QPoly.from_list([0, -1, -1]))) == "-q-q^2"
    assert latex_laurent(LaurentQT({0: 1, 1: -2})) == "1-2t"
    assert latex_laurent(LaurentQT.zero()) == "0"


def test_latex_braces_multi_digit_and_negative_exponents():
    assert latex_laurent(LaurentQT.t_power(12)) == "t^{12}"
    assert latex_laurent(LaurentQT.t_power(-1)) == "t^{-1}"
    assert latex_laurent(LaurentQT.constant(QPoly.monomial(10, 3))) == "3q^{10}"


def test_latex_qsym():
    assert latex_qsym(eulerian.Q(2)) == r"F_{\emptyset,2}(1+t)"
    assert latex_qsym(eulerian.Q0(2)) == r"F_{\emptyset,2}t"
    x = f_basis((1, 2), 3).scale(-2) + f_basis((), 3)
    assert latex_qsym(x) == r"F_{\emptyset,3}-2F_{\{1,2\},3}"


# =========================
# CSV and JSON
# =========================


def test_csv_laurent():
    assert csv_laurent(ONE_FOUR_ONE) == "t,q,coeff\n0,0,1\n1,0,4\n2,0,1\n"


def test_csv_qsym():
    x = f_basis((1, 2), 3) + f_basis((), 3).scale(LaurentQT.t_power(1))
    assert csv_qsym(x) == "degree,subset,t,q,coeff\n3,,1,0,1\n3,1;2,0,0,1\n"


def test_json_matches_wire_form():
    assert json.loads(json_laurent(ONE_FOUR_ONE)) == ONE_FOUR_ONE.to_json()
    x = eulerian.Q(2)
    assert json.loads(json_qsym(x)) == [
        {"degree": 2, "subset": [], "coeff": [{"t": 0, "q": [[0, "1"]]}, {"t": 1, "q": [[0, "1"]]}]}
    ]


def test_dispatch():
    assert render_laurent(ONE_FOUR_ONE, "csv").endswith("2,0,1")
    assert render_qsym(eulerian.Q(2), "latex") == r"F_{\emptyset,2}(1+t)"
    with pytest.raises(ValueError):
        render_laurent(ONE_FOUR_ONE, "xml")
    with pytest.raises(ValueError):
        render_qsym(eulerian.Q(2), "xml")
