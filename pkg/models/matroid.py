from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from models.cd_report import Variant
from models.series import LaurentTerm


class FlagEntry(BaseModel):
    subset: list[int] = Field(..., description="Rank set S, a subset of [r-1]")
    flag_f: int = Field(..., ge=0, description="Maximal chains of the rank-selected subposet")
    flag_h: int = Field(..., description="Moebius-inverted companion of flag_f")


class CharacterRow(BaseModel):
    """Equivariant Charney-Davis identity evaluated at one automorphism."""

    g: str = Field(..., description="Automorphism in cycle notation", json_schema_extra={"example": "(1 2)"})
    fixed_side: int = Field(..., description="sum_i (-1)^i #(degree-i FY monomials fixed by g)")
    beta_side: int = Field(..., description="Signed beta-character on the even or odd rank set")


# =========================
# Matroid summary
# =========================


class MatroidReport(BaseModel):
    ground: int = Field(..., ge=1, description="Size of the ground set")
    rank: int = Field(..., ge=0, description="Rank of the matroid")
    flats_by_rank: dict[int, int] = Field(..., description="Number of flats of each rank")
    variant: Variant = Field(..., description="Ring the Hilbert series and CD refer to")
    hilbert: list[LaurentTerm] = Field(..., description="Hilbert series from the FY basis")
    cd: int = Field(..., description="(-1)^floor(D/2) Hilb(-1), D the top degree")
    flag_vectors: list[FlagEntry] = Field(..., description="Flag f- and h-vector, S by size then lexicographically")
    characters: list[CharacterRow] = Field(default_factory=list, description="One row per supplied automorphism")

    model_config = ConfigDict(
        json_schema_extra={
            "examples": [
                {
                    "ground": 3,
                    "rank": 2,
                    "flats_by_rank": {0: 1, 1: 3, 2: 1},
                    "variant": "aug",
                    "hilbert": [
                        {"t": 0, "q": [[0, "1"]]},
                        {"t": 1, "q": [[0, "4"]]},
                        {"t": 2, "q": [[0, "1"]]},
                    ],
                    "cd": 2,
                    "flag_vectors": [
                        {"subset": [], "flag_f": 1, "flag_h": 1},
                        {"subset": [1], "flag_f": 3, "flag_h": 2},
                    ],
                    "characters": [{"g": "(1 2)", "fixed_side": 0, "beta_side": 0}],
                }
            ]
        }
    )
