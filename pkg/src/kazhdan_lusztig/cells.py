"""
Kazhdan-Lusztig cells and Lusztig's a-function.

Edge convention: x <=_L y is generated by mu~(x,y) != 0 together with
L(x) not contained in L(y), where L is the left descent set. Right cells use
right descent sets and two-sided cells use both edge families. With this
convention the identity is the top cell and w0 the bottom cell, and the
two-sided cells of S_n are the Robinson-Schensted shape fibers.

Cells are the strongly connected components of the edge graph; the cell
preorder is the reachability closure of the condensation (`scipy.sparse.csgraph.shortest_path`).
"""

from typing import Dict, FrozenSet, Iterable, List, Literal, Optional, Set, Tuple

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph as csgraph

from src.coxeter.parabolic import parabolic_longest
from src.coxeter.system import GroupElement, MixedSystemError
from src.kazhdan_lusztig.klpoly import KazhdanLusztigError, KLTable
from src.kazhdan_lusztig.models import CellRecord

CellSide = Literal["left", "right", "twosided"]
CELL_SIDES = ("left", "right", "twosided")


class CellConsistencyError(KazhdanLusztigError):
    """Raised when the involutions of one two-sided cell give different a-values."""


class MissingInvolutionError(KazhdanLusztigError):
    """Raised for a two-sided cell without an involution."""


class CellDecomposition:
    """
    Cells of one side together with their preorder.

    Attributes:
        side: "left", "right" or "twosided"
        cell_ids: cell id per element index; ids follow first appearance in canonical order
        cells: member indices per cell id, canonical order
        preorder: preorder[i, j] is True iff cell i <= cell j
        a_values: a per cell id (two-sided only)
    """

    def __init__(self, kl_table: KLTable, side: CellSide, cell_ids: np.ndarray, preorder: np.ndarray):
        self.kl_table = kl_table
        self.system = kl_table.system
        self.side = side
        self.cell_ids = cell_ids
        self.cells: List[List[int]] = [[] for _ in range(int(cell_ids.max()) + 1)]
        for x, c in enumerate(cell_ids):
            self.cells[int(c)].append(x)
        self.preorder = preorder
        self.a_values: Optional[Dict[int, int]] = None
        if side == "twosided":
            self.a_values = self._compute_a_values()

    @property
    def count(self) -> int:
        return len(self.cells)

    def _check(self, *elements: GroupElement) -> None:
        for x in elements:
            if x.system is not self.system:
                raise MixedSystemError(f"element {x!r} does not belong to {self.system.label}")

    def cell_of(self, x: GroupElement) -> int:
        self._check(x)
        return int(self.cell_ids[x.index])

    def members(self, cell_id: int) -> List[GroupElement]:
        return [self.system.elements[x] for x in self.cells[cell_id]]

    def same_cell(self, x: GroupElement, y: GroupElement) -> bool:
        return self.cell_of(x) == self.cell_of(y)

    def leq(self, x: GroupElement, y: GroupElement) -> bool:
        """x <= y in the cell preorder of this side."""
        return bool(self.preorder[self.cell_of(x), self.cell_of(y)])

    def partition(self) -> Set[FrozenSet[GroupElement]]:
        """The cells as a set of frozensets, for comparing decompositions."""
        return {frozenset(self.members(c)) for c in range(self.count)}

    def _compute_a_values(self) -> Dict[int, int]:
        table = self.kl_table
        a_values = {}
        for cell_id in range(self.count):
            values = {
                u.length - 2 * table.delta(u)
                for u in self.members(cell_id)
                if u.is_involution()
            }
            if not values:
                raise MissingInvolutionError(
                    f"two-sided cell {cell_id} of {self.system.label} contains no involution"
                )
            if len(values) > 1:
                raise CellConsistencyError(
                    f"involutions of two-sided cell {cell_id} give a-values {sorted(values)}"
                )
            a_values[cell_id] = values.pop()
        return a_values

    def a_value(self, x: GroupElement) -> int:
        if self.a_values is None:
            raise KazhdanLusztigError("the a-function is only defined on two-sided decompositions")
        return self.a_values[self.cell_of(x)]

    def records(self) -> List[CellRecord]:
        """One CellRecord per cell, in cell-id order."""
        records = []
        for cell_id in range(self.count):
            below = [
                other for other in range(self.count)
                if other != cell_id and self.preorder[other, cell_id]
            ]
            records.append(CellRecord(
                side=self.side,
                cell_id=cell_id,
                members=[x.labels() for x in self.members(cell_id)],
                a_value=None if self.a_values is None else self.a_values[cell_id],
                below=below,
            ))
        return records


def _edges(kl_table: KLTable, sides: Iterable[str]) -> List[Tuple[int, int]]:
    """(x, y) pairs with x <= y generated directly by a W-graph edge."""
    system = kl_table.system
    descent_sets = {side: [system.descents(x, side) for x in system.elements] for side in sides}
    edges = []
    for w in system.elements:
        for y, _ in kl_table.mu_lower(w):
            for descents in descent_sets.values():
                if not descents[y.index] <= descents[w.index]:
                    edges.append((y.index, w.index))
                if not descents[w.index] <= descents[y.index]:
                    edges.append((w.index, y.index))
    return edges


def _reachability(adjacency: np.ndarray) -> np.ndarray:
    """Reflexive transitive closure: reach[i, j] iff j is reachable from i."""
    distances = csgraph.shortest_path(scipy.sparse.csr_matrix(adjacency), directed=True, unweighted=True)
    return np.isfinite(distances)


def cell_decomposition(kl_table: KLTable, side: CellSide = "twosided") -> CellDecomposition:
    """
    Left, right or two-sided cells of the table's system.

    Args:
        kl_table: completed KL table
        side: which preorder to use

    Returns:
        CellDecomposition (with a-values for side == "twosided")

    Raises:
        MissingInvolutionError, CellConsistencyError: on an inconsistent two-sided cell
    """
    if side not in CELL_SIDES:
        raise ValueError(f"unknown cell side {side!r}, expected one of {CELL_SIDES}")
    system = kl_table.system
    n = system.order
    edge_sides = ("left", "right") if side == "twosided" else (side,)
    edges = _edges(kl_table, edge_sides)

    rows = np.array([e[0] for e in edges], dtype=np.int64)
    cols = np.array([e[1] for e in edges], dtype=np.int64)
    graph = scipy.sparse.csr_matrix(
        (np.ones(len(edges), dtype=np.int8), (rows, cols)), shape=(n, n)
    )
    _, labels = csgraph.connected_components(graph, directed=True, connection="strong")

    # relabel by first appearance in canonical order
    relabel: Dict[int, int] = {}
    for label in labels:
        relabel.setdefault(int(label), len(relabel))
    cell_ids = np.array([relabel[int(label)] for label in labels], dtype=np.int64)

    condensed = np.zeros((len(relabel), len(relabel)), dtype=bool)
    if edges:
        condensed[cell_ids[rows], cell_ids[cols]] = True
    return CellDecomposition(kl_table, side, cell_ids, _reachability(condensed))


def a_function(decomposition: CellDecomposition, w: GroupElement) -> int:
    """Lusztig's a(w) = l(u) - 2 delta(u) for any involution u in the two-sided cell of w."""
    return decomposition.a_value(w)


def check_a_parabolic(decomposition: CellDecomposition, subset: Iterable[int]) -> bool:
    """a(w0^S) == l(w0^S) for a set S of 0-based generator indices."""
    longest = parabolic_longest(decomposition.system, subset)
    return decomposition.a_value(longest) == longest.length
