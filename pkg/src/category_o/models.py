"""
Pydantic models for the category O calculator.

These models define the run configuration, the rows of the homological
dimension table, graded Ext entries and the verification report.
"""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, computed_field, field_validator, model_validator

from src.category_o.config import OUTPUT_FORMATS
from src.coxeter.config import ENUMERATION_CAP, SUPPORTED_TYPES
from src.coxeter.system import expected_order

Status = Literal["theorem", "conjecture"]

# families whose entries are Ext groups between standard modules
STANDARD_FAMILIES = {"std-std-linear", "carlin", "ext1-dominant", "from-dominant", "hom", "duality"}


class RunConfig(BaseModel):
    """Validated command-line configuration."""
    command: Literal["pd-table", "verify", "kl", "cells", "ext", "quiver"]
    type_label: Literal["A", "B", "D"] = Field(default="A", description="Weyl type letter")
    rank: int = Field(default=2, ge=1, description="Number of simple reflections")
    output_format: str = Field(default="table", description="table, json, csv or markdown")
    cache_dir: Optional[Path] = Field(default=None, description="Directory of cached KL tables")
    use_cache: bool = True
    workers: int = Field(default=1, ge=1, description="Threads per length stratum of the KL build")
    checks: List[str] = Field(default_factory=list, description="Verification checks to run (all if empty)")
    verify: bool = Field(default=False, description="Cross-check kl output with the independent oracle")
    quiet: bool = False

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in OUTPUT_FORMATS:
            raise ValueError(f"format must be one of {OUTPUT_FORMATS}, got {value!r}")
        return value

    @model_validator(mode="after")
    def _type_and_rank(self) -> "RunConfig":
        minimum = SUPPORTED_TYPES[self.type_label]["min_rank"]
        if self.rank < minimum:
            raise ValueError(f"type {self.type_label} needs rank >= {minimum}, got {self.rank}")
        order = expected_order(self.type_label, self.rank)
        if order > ENUMERATION_CAP:
            raise ValueError(
                f"{self.type_label}{self.rank} has {order} elements, above the enumeration cap of {ENUMERATION_CAP}"
            )
        return self

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"


class HomologyRow(BaseModel):
    """Homological invariants of the modules indexed by one element w."""
    element: List[int] = Field(description="ShortLex word of w in 1-based labels")
    word: str = Field(description="Rendered word, e.g. s1s2")
    length: int = Field(ge=0)
    a_value: int = Field(ge=0, description="Lusztig's a-function")
    pd_standard: int = Field(ge=0)
    pd_simple: int = Field(ge=0)
    pd_costandard: int = Field(ge=0)
    pd_tilting: int = Field(ge=0)
    tilting_status: Status
    pd_injective: int = Field(ge=0)
    injective_status: Status


class GradedExtEntry(BaseModel):
    """dim Ext^i(source, target<j>) for labelled modules; no module is ever built."""
    family: str
    source: str = Field(description="Source module label, e.g. Delta(s1s2)")
    target: str = Field(description="Target module label")
    i: int = Field(description="Homological degree")
    j: int = Field(description="Grading shift")
    dim: Optional[int] = Field(default=None, ge=0, description="None where the value is not determined")

    @computed_field
    @property
    def total_degree(self) -> int:
        """Degree 2i + j in the Z-grading of the Ext algebra of standard modules."""
        return 2 * self.i + self.j

    @model_validator(mode="after")
    def _vanishing(self) -> "GradedExtEntry":
        if self.dim and self.i < 0:
            raise ValueError(f"nonzero Ext in negative degree {self.i}")
        if self.dim and self.family in STANDARD_FAMILIES and self.j < -self.i:
            raise ValueError(f"nonzero standard Ext with j = {self.j} < -i = {-self.i}")
        return self


class CheckResult(BaseModel):
    """Outcome of one named verification check."""
    name: str
    formula: str = Field(description="Statement the check verifies")
    passed: bool
    skipped: bool = False
    cases: int = Field(default=0, ge=0, description="Number of instances tested")
    detail: str = ""


class VerificationReport(BaseModel):
    """All checks run on one system."""
    type_label: str
    rank: int
    order: int
    results: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]
