from __future__ import annotations

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field


class SuiteName(str, Enum):
    all = "all"
    arith = "arith"
    perms = "perms"
    qsym = "qsym"
    eulerian = "eulerian"
    hilbert = "hilbert"
    frobenius = "frobenius"
    rankselect = "rankselect"
    cd = "cd"


class CheckOutcome(BaseModel):
    """Result of one identity check."""

    name: str = Field(..., description="Dotted check name, suite first", json_schema_extra={"example": "cd.four_routes"})
    passed: bool = Field(..., description="True iff every instance of the identity held")
    seconds: float = Field(..., ge=0, description="Wall-clock time of the check")
    message: Optional[str] = Field(None, description="Module-tagged failure message")
    witness: Optional[dict[str, Any]] = Field(None, description="Smallest failing instance found")


class VerifyReport(BaseModel):
    suite: SuiteName = Field(..., description="Suite that was run")
    max_n: int = Field(..., ge=1, description="Upper bound on n used by the checks")
    seed: Optional[int] = Field(None, description="Seed of the randomized checks, if given")
    passed: bool = Field(..., description="True iff every check passed")
    checks: list[CheckOutcome] = Field(..., description="Outcomes sorted by check name")

    model_config = ConfigDict(
        json_schema_extra={
            "examples": [
                {
                    "suite": "cd",
                    "max_n": 5,
                    "seed": None,
                    "passed": True,
                    "checks": [
                        {"name": "cd.four_routes", "passed": True, "seconds": 0.42, "message": None, "witness": None}
                    ],
                }
            ]
        }
    )
