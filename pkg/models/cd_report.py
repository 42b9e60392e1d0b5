from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from models.series import LaurentTerm


class Variant(str, Enum):
    chow = "chow"
    aug = "aug"


class CDMethod(str, Enum):
    eval = "eval"
    descents = "descents"
    secant = "secant"
    determinant = "determinant"


# =========================
# Charney-Davis report
# =========================


class CDRoute(BaseModel):
    """One route to the Charney-Davis quantity of a q-uniform matroid."""

    method: CDMethod = Field(..., description="How the value was computed")
    raw: list[LaurentTerm] = Field(..., description="Hilb(-1) convention, sign as produced by the route")
    normalized: list[LaurentTerm] = Field(
        ...,
        description="raw multiplied by (-1)^floor(D/2), D the top degree of the ring",
    )


class CDReport(BaseModel):
    r: int = Field(..., ge=1, description="Rank of U_{r,n}(q)")
    n: int = Field(..., ge=1, description="Dimension of the ambient space")
    variant: Variant = Field(..., description="Chow ring or augmented Chow ring")
    routes: list[CDRoute] = Field(..., description="Computed routes, sorted by method name")
    skipped: list[CDMethod] = Field(
        default_factory=list,
        description="Requested routes that are undefined for this parity",
    )
    agreement: bool = Field(..., description="True iff every computed route gives the same raw value")

    model_config = ConfigDict(
        json_schema_extra={
            "examples": [
                {
                    "r": 3,
                    "n": 3,
                    "variant": "chow",
                    "routes": [
                        {
                            "method": "eval",
                            "raw": [{"t": 0, "q": [[1, "-1"], [2, "-1"]]}],
                            "normalized": [{"t": 0, "q": [[1, "1"], [2, "1"]]}],
                        }
                    ],
                    "skipped": [],
                    "agreement": True,
                }
            ]
        }
    )
