"""
Pydantic models for Kazhdan-Lusztig outputs.

These models define the structure of cache files, cell exports and the
tableau combinatorics, with validation of their invariants.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class KLCacheHeader(BaseModel):
    """Header of an on-disk KL table."""
    type: str = Field(description="Type letter of the system")
    rank: int = Field(ge=1)
    version: int = Field(description="Cache format version")
    count: int = Field(ge=0, description="Number of (y, w) records")


class KLCacheRecord(BaseModel):
    """One nonzero P_{y,w}, elements given as ShortLex label words."""
    y: List[int]
    w: List[int]
    p: List[int] = Field(description="Coefficients of P_{y,w}, index = power of q")


class CellRecord(BaseModel):
    """One cell of a decomposition, for JSON export."""
    side: Literal["left", "right", "twosided"]
    cell_id: int = Field(ge=0)
    members: List[List[int]] = Field(description="ShortLex label words, canonical order")
    a_value: Optional[int] = Field(default=None, ge=0, description="Lusztig's a (two-sided cells only)")
    below: List[int] = Field(default_factory=list, description="Ids of cells strictly below in the preorder")


class Partition(BaseModel):
    """An integer partition, parts weakly decreasing and positive."""
    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...]

    @field_validator("parts")
    @classmethod
    def _weakly_decreasing(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


class TableauPair(BaseModel):
    """Robinson-Schensted pair (insertion tableau P, recording tableau Q)."""
    P: List[List[int]]
    Q: List[List[int]]

    @model_validator(mode="after")
    def _standard_and_same_shape(self) -> "TableauPair":
        if [len(r) for r in self.P] != [len(r) for r in self.Q]:
            raise ValueError("P and Q must have the same shape")
        for tableau in (self.P, self.Q):
            for r, row in enumerate(tableau):
                if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
                    raise ValueError(f"row {r} is not increasing: {row}")
                if r > 0:
                    above = tableau[r - 1]
                    if len(row) > len(above) or any(above[c] >= row[c] for c in range(len(row))):
                        raise ValueError(f"columns are not increasing at row {r}")
        return self

    @property
    def shape(self) -> Partition:
        return Partition(parts=tuple(len(r) for r in self.P))

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"P": self.P, "Q": self.Q}
