from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# ---- Flats file (input) ----
class FlatsFile(BaseModel):
    """A matroid given by its lattice of flats."""

    ground: int = Field(..., ge=1, description="Size n of the ground set [n]")
    flats: list[list[int]] = Field(
        ...,
        description="Every flat as an ascending list of 1-based ground-set elements",
    )

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "examples": [
                {"ground": 3, "flats": [[], [1], [2], [3], [1, 2, 3]]},
                {"ground": 4, "flats": [[], [1], [2], [3], [4], [1, 2, 3], [1, 4], [2, 4], [3, 4], [1, 2, 3, 4]]},
            ]
        },
    )

    @field_validator("flats")
    @classmethod
    def _ascending_sets(cls, flats: list[list[int]]) -> list[list[int]]:
        for flat in flats:
            if any(x < 1 for x in flat):
                raise ValueError(f"flat {flat} has elements below 1")
            if any(a >= b for a, b in zip(flat, flat[1:])):
                raise ValueError(f"flat {flat} is not sorted ascending without repeats")
        return flats

    @model_validator(mode="after")
    def _within_ground_and_distinct(self) -> FlatsFile:
        seen: set[tuple[int, ...]] = set()
        for flat in self.flats:
            if flat and flat[-1] > self.ground:
                raise ValueError(f"flat {flat} leaves the ground set [{self.ground}]")
            key = tuple(flat)
            if key in seen:
                raise ValueError(f"duplicate flat {flat}")
            seen.add(key)
        return self
