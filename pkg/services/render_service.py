# services/render_service.py
"""
Output formats shared by the commands: LaTeX, CSV and JSON.

Every renderer walks terms in sorted order (t ascending, then q ascending;
degree then subset for QSymElem) so identical inputs give identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Any

from pydantic import BaseModel

from models.series import LaurentTerm, QSymTerm
from services.exactalg import LaurentQT, QPoly
from services.qsym import QSymElem

FORMATS = ("json", "csv", "latex")


def _power(var: str, e: int) -> str:
    if e == 1:
        return var
    if 0 <= e <= 9:
        return f"{var}^{e}"
    return f"{var}^{{{e}}}"


# =========================
# LaTeX
# =========================


def latex_qpoly(p: QPoly) -> str:
    if p.is_zero:
        return "0"
    out = ""
    for e, c in p.items():
        mono = "" if e == 0 else _power("q", e)
        body = mono if (mono and abs(c) == 1) else f"{abs(c)}{mono}"
        out += "-" if c < 0 else ("+" if out else "")
        out += body
    return out


def _latex_coeff_times(c: QPoly, tail: str) -> str:
    """Coefficient c multiplied by a nonempty t-power, with its leading sign."""
    terms = c.items()
    if len(terms) == 1:
        e, k = terms[0]
        mono = "" if e == 0 else _power("q", e)
        digits = "" if abs(k) == 1 else str(abs(k))
        return ("-" if k < 0 else "") + digits + mono + tail
    return f"({latex_qpoly(c)}){tail}"


def latex_laurent(value: LaurentQT) -> str:
    """E.g. ``1+(2+q+q^2)t+t^2``."""
    if value.is_zero:
        return "0"
    out = ""
    for k, c in value.items():
        piece = latex_qpoly(c) if k == 0 else _latex_coeff_times(c, _power("t", k))
        if out and not piece.startswith("-"):
            out += "+"
        out += piece
    return out


def _latex_subset(subset: tuple[int, ...]) -> str:
    if not subset:
        return r"\emptyset"
    return r"\{" + ",".join(str(s) for s in subset) + r"\}"


def latex_qsym(x: QSymElem) -> str:
    r"""E.g. ``F_{\emptyset,3}(1+2t+t^2)+F_{\{1\},3}t``."""
    if x.is_zero:
        return "0"
    out = ""
    for n, subset, coeff in x.terms():
        basis = f"F_{{{_latex_subset(subset)},{n}}}"
        terms = coeff.items()
        if len(terms) == 1 and len(terms[0][1].items()) == 1:
            k, coeff_q = terms[0]
            e, c = coeff_q.items()[0]
            mono = ("" if e == 0 else _power("q", e)) + ("" if k == 0 else _power("t", k))
            digits = "" if abs(c) == 1 else str(abs(c))
            piece = ("-" if c < 0 else "") + digits + basis + mono
        else:
            piece = f"{basis}({latex_laurent(coeff)})"
        if out and not piece.startswith("-"):
            out += "+"
        out += piece
    return out


# =========================
# CSV
# =========================


def _write_rows(header: list[str], rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _laurent_rows(value: LaurentQT) -> list[list[Any]]:
    return [[k, e, c] for k, coeff in value.items() for e, c in coeff.items()]


def csv_laurent(value: LaurentQT) -> str:
    return _write_rows(["t", "q", "coeff"], _laurent_rows(value))


def csv_qsym(x: QSymElem) -> str:
    rows = [
        [n, ";".join(str(s) for s in subset), *row]
        for n, subset, coeff in x.terms()
        for row in _laurent_rows(coeff)
    ]
    return _write_rows(["degree", "subset", "t", "q", "coeff"], rows)


# =========================
# JSON
# =========================


def laurent_terms(value: LaurentQT) -> list[LaurentTerm]:
    return [LaurentTerm.model_validate(term) for term in value.to_json()]


def qsym_terms(x: QSymElem) -> list[QSymTerm]:
    return [QSymTerm.model_validate(term) for term in x.to_json()]


def json_dump(payload: BaseModel | list[BaseModel] | dict[str, Any]) -> str:
    if isinstance(payload, BaseModel):
        return payload.model_dump_json(indent=2)
    if isinstance(payload, list):
        return json.dumps([item.model_dump(mode="json") for item in payload], indent=2)
    return json.dumps(payload, indent=2, sort_keys=True)


def json_laurent(value: LaurentQT) -> str:
    return json_dump(laurent_terms(value))


def json_qsym(x: QSymElem) -> str:
    return json_dump(qsym_terms(x))


# =========================
# Dispatch
# =========================


def render_laurent(value: LaurentQT, fmt: str) -> str:
    if fmt == "latex":
        return latex_laurent(value)
    if fmt == "csv":
        return csv_laurent(value).rstrip("\n")
    if fmt == "json":
        return json_laurent(value)
    raise ValueError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")


def render_qsym(x: QSymElem, fmt: str) -> str:
    if fmt == "latex":
        return latex_qsym(x)
    if fmt == "csv":
        return csv_qsym(x).rstrip("\n")
    if fmt == "json":
        return json_qsym(x)
    raise ValueError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")
