"""
The Bruhat poset of W: intervals, Moebius function, incidence algebra and
the quiver of the endomorphism algebra of the sum of standard modules.
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from src.category_o.homology import HomologyError
from src.coxeter.system import CoxeterSystem, GroupElement, MixedSystemError

Arrow = Tuple[GroupElement, GroupElement]


class IntervalError(HomologyError):
    """Raised for an interval [x, y] with x not below y."""


class BruhatInterval:
    """The closed interval [x, y] of the Bruhat order with its Hasse edges."""

    def __init__(self, system: CoxeterSystem, x: GroupElement, y: GroupElement, leq: np.ndarray):
        self.system = system
        self.bottom = x
        self.top = y
        members = np.flatnonzero(leq[x.index] & leq[:, y.index])
        self.elements: List[GroupElement] = [system.elements[k] for k in members]
        lengths = system.lengths
        self.hasse_edges: List[Arrow] = [
            (system.elements[a], system.elements[b])
            for a in members for b in members
            if lengths[b] == lengths[a] + 1 and leq[a, b]
        ]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self.top.length - self.bottom.length

    def maximal_chain_lengths(self) -> set:
        """Lengths of all maximal chains, by walking the Hasse diagram upward."""
        up: Dict[int, List[int]] = {}
        for a, b in self.hasse_edges:
            up.setdefault(a.index, []).append(b.index)
        memo: Dict[int, set] = {}

        def chains(node: int) -> set:
            if node == self.top.index:
                return {0}
            if node not in memo:
                memo[node] = {1 + c for nxt in up.get(node, []) for c in chains(nxt)}
            return memo[node]

        return chains(self.bottom.index)

    def is_graded(self) -> bool:
        """Every maximal chain has length l(y) - l(x)."""
        return self.maximal_chain_lengths() == {self.rank}

    def has_diamond_property(self) -> bool:
        """A length-2 interval has exactly two intermediate elements."""
        if self.rank != 2:
            return True
        return len(self.elements) == 4


class BruhatPoset:
    """
    Queries on (W, <=) through the Bruhat bit-matrix.

    Moebius rows are memoized per bottom element; a finished row is never
    modified, so lookups are safe from several threads.
    """

    def __init__(self, system: CoxeterSystem):
        leq = system.bruhat_matrix
        if leq is None:
            raise HomologyError(
                f"{system.label} is too large for the Bruhat matrix; poset queries are unavailable"
            )
        self.system = system
        self.leq = leq
        self._mobius_rows: Dict[int, np.ndarray] = {}
        self._mobius_dual_columns: Dict[int, np.ndarray] = {}

    def _check(self, *elements: GroupElement) -> None:
        for x in elements:
            if x.system is not self.system:
                raise MixedSystemError(f"element {x!r} does not belong to {self.system.label}")

    def _require_leq(self, x: GroupElement, y: GroupElement) -> None:
        self._check(x, y)
        if not self.leq[x.index, y.index]:
            raise IntervalError(f"{x} is not below {y} in the Bruhat order")

    def interval(self, x: GroupElement, y: GroupElement) -> BruhatInterval:
        self._require_leq(x, y)
        return BruhatInterval(self.system, x, y, self.leq)

    # ------------------------------------------------------------------
    # Moebius function

    def _mobius_row(self, x: int) -> np.ndarray:
        """mu(x, y) for every y, by mu(x, y) = -sum_{x <= z < y} mu(x, z)."""
        if x not in self._mobius_rows:
            leq = self.leq
            row = np.zeros(self.system.order, dtype=np.int64)
            row[x] = 1
            above = leq[x]
            for y in range(x + 1, self.system.order):
                if above[y]:
                    # row[y] is still 0, so the sum runs over z < y
                    row[y] = -row[above & leq[:, y]].sum()
            self._mobius_rows[x] = row
        return self._mobius_rows[x]

    def _mobius_dual_column(self, y: int) -> np.ndarray:
        """mu(x, y) for every x, by mu(x, y) = -sum_{x < z <= y} mu(z, y)."""
        if y not in self._mobius_dual_columns:
            leq = self.leq
            column = np.zeros(self.system.order, dtype=np.int64)
            column[y] = 1
            below = leq[:, y]
            for x in range(y - 1, -1, -1):
                if below[x]:
                    column[x] = -column[leq[x] & below].sum()
            self._mobius_dual_columns[y] = column
        return self._mobius_dual_columns[y]

    def mobius(self, x: GroupElement, y: GroupElement) -> int:
        """Moebius function of the Bruhat order on [x, y]."""
        self._require_leq(x, y)
        return int(self._mobius_row(x.index)[y.index])

    def mobius_dual(self, x: GroupElement, y: GroupElement) -> int:
        """The same value computed through the opposite order (W, >=)."""
        self._require_leq(x, y)
        return int(self._mobius_dual_column(y.index)[x.index])

    def verify_verma_mobius(self) -> Tuple[bool, Optional[Tuple[GroupElement, GroupElement, int]]]:
        """
        Check mu(x, y) = (-1)^{l(y)-l(x)} on every comparable pair.

        Returns:
            (True, None) or (False, first counterexample (x, y, mu))
        """
        lengths = self.system.lengths
        for x in range(self.system.order):
            row = self._mobius_row(x)
            above = np.flatnonzero(self.leq[x])
            expected = np.where((lengths[above] - lengths[x]) % 2 == 0, 1, -1)
            bad = np.flatnonzero(row[above] != expected)
            if len(bad):
                y = int(above[bad[0]])
                return False, (self.system.elements[x], self.system.elements[y], int(row[y]))
        return True, None

    # ------------------------------------------------------------------
    # incidence algebra and quiver

    def incidence_dimension(self) -> int:
        """Number of comparable pairs x <= y."""
        return int(self.leq.sum())

    def incidence_dimension_by_subwords(self) -> int:
        """The same count through the subword closure of each reduced word."""
        return sum(len(self.system.bruhat_lower_interval(y)) for y in self.system.elements)

    def hasse_edges(self) -> List[Arrow]:
        """All coverings (x, y) with x covered by y."""
        system = self.system
        lengths = system.lengths
        edges = []
        for y in system.elements:
            for x in np.flatnonzero(self.leq[:, y.index] & (lengths == y.length - 1)):
                edges.append((system.elements[int(x)], y))
        return edges

    def end_delta_quiver(self) -> List[Arrow]:
        """
        Arrows x -> y with x = t y > y for a reflection t, ordered by (x, y).

        For a reflection t, t y > y in the Bruhat order exactly when l(t y) > l(y).
        """
        system = self.system
        arrows = set()
        for t in system.reflections():
            for y in system.elements:
                x = system.multiply(t, y)
                if x.length > y.length:
                    arrows.add((x.index, y.index))
        return [(system.elements[a], system.elements[b]) for a, b in sorted(arrows)]
