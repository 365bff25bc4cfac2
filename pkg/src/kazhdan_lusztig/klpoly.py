"""
Kazhdan-Lusztig polynomials by the standard recursion.

For w != e pick the smallest left descent s of w and put v = sw. Then for x <= w

    P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
              - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}

with c = 1 if sx < x and c = 0 otherwise. Columns are built in increasing
l(w), so every dependency of a column lies in a strictly shorter stratum.
Each stratum can be sharded across threads and is merged in canonical order,
so the finished table does not depend on the worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from src.coxeter.system import CoxeterSystem, GroupElement, MixedSystemError
from src.kazhdan_lusztig.polynomials import IntPolynomial

Column = Dict[int, IntPolynomial]
MuList = List[Tuple[int, int]]

ZERO = IntPolynomial.zero()
ONE = IntPolynomial.one()


class KazhdanLusztigError(Exception):
    """Base class for errors in the Kazhdan-Lusztig engine."""


class KLTable:
    """
    Memoized P_{y,w}, mu(y,w) and delta(w) for a whole finite Coxeter group.

    Columns are keyed by element index: `column(w)[y]` is P_{y,w} for y <= w.
    A completed table is never mutated and can be shared between threads.
    """

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._columns: Dict[int, Column] = {}
        self._mu_lower: Dict[int, MuList] = {}
        self._delta: Dict[int, int] = {}

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def build(cls, system: CoxeterSystem, workers: int = 1, progress: bool = False) -> "KLTable":
        """
        Compute the full table.

        Args:
            system: enumerated Coxeter system
            workers: threads per length stratum (results are identical for any value; no speedup under the GIL)
            progress: show a tqdm bar

        Returns:
            Completed KLTable
        """
        table = cls(system)
        strata: Dict[int, List[int]] = {}
        for x in system.elements:
            strata.setdefault(x.length, []).append(x.index)

        bar = tqdm(total=system.order, desc=f"  KL table {system.label}", disable=not progress)
        executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
        try:
            for length in sorted(strata):
                stratum = strata[length]
                if executor is not None:
                    columns = list(executor.map(table._compute_column, stratum))
                else:
                    columns = [table._compute_column(w) for w in stratum]
                # merge point: the stratum becomes visible only once it is complete
                for w, column in zip(stratum, columns):
                    table._store(w, column)
                bar.update(len(stratum))
        finally:
            if executor is not None:
                executor.shutdown()
            bar.close()
        return table

    @classmethod
    def from_columns(cls, system: CoxeterSystem, columns: Dict[int, Column]) -> "KLTable":
        """Rebuild a table from stored columns (used by the on-disk cache)."""
        table = cls(system)
        for w in range(system.order):
            table._store(w, dict(sorted(columns.get(w, {}).items())))
        return table

    def _lower_set(self, w: int) -> List[int]:
        matrix = self.system.bruhat_matrix
        if matrix is not None:
            return [int(x) for x in np.flatnonzero(matrix[:, w])]
        return [x.index for x in self.system.bruhat_lower_interval(self.system.elements[w])]

    def _compute_column(self, w: int) -> Column:
        system = self.system
        if w == 0:
            return {0: ONE}
        lengths, left = system.lengths, system.left_mult
        s = min(i for i in range(system.rank) if lengths[left[w, i]] < lengths[w])
        v = int(left[w, s])
        column_v = self._columns[v]
        length_w = int(lengths[w])
        corrections = [
            (z, mu, (length_w - int(lengths[z])) // 2)
            for z, mu in self._mu_lower[v]
            if lengths[left[z, s]] < lengths[z]
        ]

        column: Column = {}
        for x in self._lower_set(w):
            sx = int(left[x, s])
            if lengths[sx] < lengths[x]:
                p = column_v.get(sx, ZERO) + column_v.get(x, ZERO).shift(1)
            else:
                p = column_v.get(sx, ZERO).shift(1) + column_v.get(x, ZERO)
            for z, mu, power in corrections:
                p_xz = self._columns[z].get(x)
                if p_xz is not None:
                    p = p - p_xz.shift(power) * mu
            if not p.is_zero():
                column[x] = p
        return column

    def _store(self, w: int, column: Column) -> None:
        lengths = self.system.lengths
        length_w = int(lengths[w])
        mu_list = []
        for y, p in column.items():
            gap = length_w - int(lengths[y])
            if gap % 2 == 1:
                mu = p.coefficient((gap - 1) // 2)
                if mu:
                    mu_list.append((y, mu))
        self._columns[w] = column
        self._mu_lower[w] = mu_list
        self._delta[w] = int(column[0].degree) if 0 in column else 0

    # ------------------------------------------------------------------
    # queries

    def _check(self, *elements: GroupElement) -> None:
        for x in elements:
            if x.system is not self.system:
                raise MixedSystemError(f"element {x!r} does not belong to {self.system.label}")

    def column(self, w: GroupElement) -> Column:
        """All nonzero P_{y,w}, keyed by y's index."""
        self._check(w)
        return self._columns[w.index]

    def kl_polynomial(self, y: GroupElement, w: GroupElement) -> IntPolynomial:
        """P_{y,w}; zero unless y <= w."""
        self._check(y, w)
        return self._columns[w.index].get(y.index, ZERO)

    def mu(self, y: GroupElement, w: GroupElement) -> int:
        """Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}; zero when the parity fails."""
        self._check(y, w)
        gap = w.length - y.length
        if gap <= 0 or gap % 2 == 0:
            return 0
        return self.kl_polynomial(y, w).coefficient((gap - 1) // 2)

    def mu_symmetric(self, y: GroupElement, w: GroupElement) -> int:
        """W-graph edge weight: mu(y,w) or mu(w,y), whichever pair is ordered."""
        if y.length <= w.length:
            return self.mu(y, w)
        return self.mu(w, y)

    def mu_lower(self, w: GroupElement) -> List[Tuple[GroupElement, int]]:
        """All y < w with mu(y,w) != 0, in canonical order."""
        self._check(w)
        return [(self.system.elements[y], mu) for y, mu in self._mu_lower[w.index]]

    def delta(self, w: GroupElement) -> int:
        """deg P_{e,w}."""
        self._check(w)
        return self._delta[w.index]

    def records(self) -> Iterator[Tuple[GroupElement, GroupElement, IntPolynomial]]:
        """Every nonzero (y, w, P_{y,w}) ordered by w then y, both by length then ShortLex."""
        elements = self.system.elements
        for w in range(self.system.order):
            for y, p in sorted(self._columns[w].items()):
                yield elements[y], elements[w], p

    def __len__(self) -> int:
        return sum(len(c) for c in self._columns.values())

    # ------------------------------------------------------------------
    # invariants

    def check_invariants(self, limit: Optional[int] = 10) -> List[str]:
        """
        Check the KL table invariants and return a description of each violation.

        P_{w,w} = 1; P_{y,w} = 0 unless y <= w; constant term 1; nonnegative
        coefficients; deg P_{y,w} <= (l(w)-l(y)-1)/2 for y < w.
        """
        problems: List[str] = []
        system = self.system
        for y, w, p in self.records():
            if len(problems) == limit:
                break
            if y == w:
                if p != ONE:
                    problems.append(f"P_{{{y},{w}}} = {p}, expected 1")
                continue
            gap = w.length - y.length
            if not system.bruhat_leq(y, w):
                problems.append(f"P_{{{y},{w}}} = {p} but {y} is not below {w}")
            elif p.coefficient(0) != 1:
                problems.append(f"P_{{{y},{w}}} = {p} has constant term != 1")
            elif any(c < 0 for c in p.coefficients):
                problems.append(f"P_{{{y},{w}}} = {p} has a negative coefficient")
            elif 2 * p.degree > gap - 1:
                problems.append(f"P_{{{y},{w}}} = {p} exceeds the degree bound")
        for w in system.elements:
            if len(problems) == limit:
                break
            for y in self._lower_set(w.index):
                if y not in self._columns[w.index]:
                    problems.append(f"P_{{{system.elements[y]},{w}}} is missing although y <= w")
                    break
        return problems
