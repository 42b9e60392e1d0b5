from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


# ---- LaurentQT wire form ----
class LaurentTerm(BaseModel):
    """One power of t with its q-polynomial coefficient."""

    t: int = Field(..., description="Exponent of t (may be negative)")
    q: list[tuple[int, str]] = Field(
        ...,
        description="(q exponent, decimal coefficient) pairs in ascending exponent order",
    )

    model_config = ConfigDict(
        json_schema_extra={
            "examples": [
                {"t": 1, "q": [[0, "2"], [1, "1"], [2, "1"]]},
            ]
        }
    )


# ---- QSymElem wire form ----
class QSymTerm(BaseModel):
    """Coefficient of one fundamental quasisymmetric function F_{S,n}."""

    degree: int = Field(..., ge=0, description="Degree n of F_{S,n}")
    subset: list[int] = Field(..., description="Descent subset S of [n-1], ascending")
    coeff: list[LaurentTerm] = Field(..., description="LaurentQT coefficient")

    model_config = ConfigDict(
        json_schema_extra={
            "examples": [
                {"degree": 3, "subset": [1], "coeff": [{"t": 1, "q": [[0, "1"]]}]},
            ]
        }
    )
