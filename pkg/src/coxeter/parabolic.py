"""
Parabolic subgroups W_S of a finite Coxeter system.

S is always a set of 0-based generator indices.
"""

from typing import FrozenSet, Iterable, List

from src.coxeter.system import CoxeterError, CoxeterSystem, GroupElement


def _as_subset(system: CoxeterSystem, subset: Iterable[int]) -> FrozenSet[int]:
    subset = frozenset(subset)
    for i in subset:
        if not 0 <= i < system.rank:
            raise CoxeterError(f"generator index {i + 1} out of range 1..{system.rank}")
    return subset


def parabolic_longest(system: CoxeterSystem, subset: Iterable[int]) -> GroupElement:
    """
    Longest element w0^S of the standard parabolic subgroup W_S.

    Climbs by right multiplication with generators of S while the length grows;
    the only element of W_S with every s in S as a right descent is w0^S.
    """
    subset = sorted(_as_subset(system, subset))
    current = 0
    climbing = True
    while climbing:
        climbing = False
        for i in subset:
            nxt = system.right_mult[current, i]
            if system.lengths[nxt] > system.lengths[current]:
                current = nxt
                climbing = True
                break
    return system.elements[current]


def parabolic_subgroup(system: CoxeterSystem, subset: Iterable[int]) -> List[GroupElement]:
    """All elements of W_S, in canonical order."""
    subset = _as_subset(system, subset)
    return [x for x in system.elements if x.support() <= subset]


def min_coset_reps(system: CoxeterSystem, subset: Iterable[int]) -> List[GroupElement]:
    """
    Shortest representatives of the cosets W_S w.

    These are the w with l(sw) > l(w) for every s in S; there are |W| / |W_S|.
    """
    subset = _as_subset(system, subset)
    return [x for x in system.elements if not (system.descents(x, "left") & subset)]


def parabolic_type(system: CoxeterSystem, subset: Iterable[int]) -> List[int]:
    """
    Block sizes of W_S in type A, as a composition of n+1.

    Positions i and i+1 (1-based) lie in one block when s_i is in S.
    """
    if system.type_label != "A":
        raise CoxeterError("parabolic type as a composition is only defined in type A")
    subset = _as_subset(system, subset)
    blocks = [1]
    for i in range(system.rank):
        if i in subset:
            blocks[-1] += 1
        else:
            blocks.append(1)
    return blocks


def all_subsets(rank: int) -> List[FrozenSet[int]]:
    """Every subset of range(rank), smallest first."""
    subsets = [frozenset()]
    for i in range(rank):
        subsets += [s | {i} for s in subsets]
    return sorted(subsets, key=lambda s: (len(s), sorted(s)))
