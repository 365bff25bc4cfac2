"""
Robinson-Schensted correspondence for the symmetric group (type A only).

Row insertion on the one-line notation w(1) ... w(n). The RS shape of w
labels its two-sided cell, and w0^S corresponds to the partition conjugate
to the parabolic type of S.
"""

from bisect import bisect_right
from functools import reduce
from math import factorial
from operator import mul
from typing import Dict, Iterable, List, Sequence

from src.coxeter.parabolic import parabolic_longest, parabolic_type
from src.coxeter.system import CoxeterSystem, GroupElement
from src.coxeter.words import one_line
from src.kazhdan_lusztig.klpoly import KazhdanLusztigError
from src.kazhdan_lusztig.models import Partition, TableauPair


class RSKError(KazhdanLusztigError):
    """Raised for Robinson-Schensted input outside type A."""


def _require_type_a(system: CoxeterSystem) -> None:
    if system.type_label != "A":
        raise RSKError(f"Robinson-Schensted needs a symmetric group, got {system.label}")


def rs_insert(perm: Sequence[int]) -> TableauPair:
    """
    Row-insert a permutation of 1..n.

    Args:
        perm: one-line notation

    Returns:
        TableauPair (P insertion, Q recording)
    """
    P: List[List[int]] = []
    Q: List[List[int]] = []
    for step, value in enumerate(perm, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([value])
                Q.append([step])
                break
            current = P[row]
            position = bisect_right(current, value)
            if position == len(current):
                current.append(value)
                Q[row].append(step)
                break
            # bump into the next row
            current[position], value = value, current[position]
            row += 1
    return TableauPair(P=P, Q=Q)


def rsk(w: GroupElement) -> TableauPair:
    """RS pair of a type-A element, read through its one-line notation."""
    _require_type_a(w.system)
    return rs_insert(one_line(w))


def shape(w: GroupElement) -> Partition:
    return rsk(w).shape


def shape_fibers(system: CoxeterSystem) -> Dict[Partition, List[GroupElement]]:
    """Elements grouped by RS shape, each fiber in canonical order."""
    _require_type_a(system)
    fibers: Dict[Partition, List[GroupElement]] = {}
    for x in system.elements:
        fibers.setdefault(shape(x), []).append(x)
    return fibers


def conjugate(partition: Partition) -> Partition:
    """Transpose of the Young diagram."""
    parts = partition.parts
    if not parts:
        return partition
    return Partition(parts=tuple(sum(1 for p in parts if p > i) for i in range(parts[0])))


def partitions(n: int) -> List[Partition]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""
    found: List[Partition] = []

    def extend(remaining: int, largest: int, prefix: List[int]) -> None:
        if remaining == 0:
            found.append(Partition(parts=tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + [part])

    extend(n, n, [])
    return found


def count_standard_tableaux(partition: Partition) -> int:
    """Number of standard Young tableaux of the given shape (hook length formula)."""
    parts = partition.parts
    columns = conjugate(partition).parts
    hooks = [
        (parts[r] - c) + (columns[c] - r) - 1
        for r in range(len(parts))
        for c in range(parts[r])
    ]
    return factorial(partition.weight) // reduce(mul, hooks, 1)


def lambda_of(system: CoxeterSystem, subset: Iterable[int]) -> Partition:
    """Parabolic type of S as a partition of n+1."""
    return Partition(parts=tuple(sorted(parabolic_type(system, subset), reverse=True)))


def check_w0S_shape(system: CoxeterSystem, subset: Iterable[int]) -> bool:
    """shape(rsk(w0^S)) == conjugate(lambda(S))."""
    _require_type_a(system)
    subset = list(subset)
    return shape(parabolic_longest(system, subset)) == conjugate(lambda_of(system, subset))
