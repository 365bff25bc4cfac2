"""
Pydantic models for Coxeter system descriptors.

The serializable summary of a built system; the group itself is held by
`CoxeterSystem` in system.py.
"""

from typing import List

from pydantic import BaseModel, Field


class SystemSummary(BaseModel):
    """Serializable summary of an enumerated Coxeter system."""
    type_label: str
    rank: int
    order: int = Field(description="Group cardinality |W|")
    longest_length: int = Field(description="l(w0) = number of positive roots")
    coxeter_matrix: List[List[int]]
    cartan_matrix: List[List[int]]
    w0: List[int] = Field(description="ShortLex word of the longest element")
