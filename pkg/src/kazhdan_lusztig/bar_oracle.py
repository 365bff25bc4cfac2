"""
Independent KL oracle: bar invariance plus triangular elimination.

Writes C'_w = sum_x h_{x,w} H_x with h_{w,w} = 1 and h_{x,w} in v Z[v] for
x < w, and solves bar(C'_w) = C'_w coefficient by coefficient from the top
down. Shares nothing with the recursion in klpoly.py except the group tables,
so the two paths check each other.
"""

from typing import Dict

from src.coxeter.system import CoxeterSystem, GroupElement, MixedSystemError
from src.kazhdan_lusztig.config import ORACLE_CAP
from src.kazhdan_lusztig.klpoly import Column, KazhdanLusztigError
from src.kazhdan_lusztig.polynomials import IntPolynomial, LaurentPolynomial

ONE = LaurentPolynomial.one()
ZERO = LaurentPolynomial.zero()
V_MINUS_V_INV = LaurentPolynomial({1: 1, -1: -1})


class OracleCapError(KazhdanLusztigError):
    """Raised when the group is too large for the oracle."""


class BarInvarianceOracle:
    """Solves KL columns of one system on demand and memoizes them."""

    def __init__(self, system: CoxeterSystem, cap: int = ORACLE_CAP):
        if system.order > cap:
            raise OracleCapError(
                f"{system.label} has {system.order} elements, above the oracle cap of {cap}"
            )
        self.system = system
        # bar(H_x) = sum_z r[x][z] H_z
        self._r: Dict[int, Dict[int, LaurentPolynomial]] = {0: {0: ONE}}
        self._columns: Dict[int, Column] = {}

    def _bar_standard(self, x: int) -> Dict[int, LaurentPolynomial]:
        if x not in self._r:
            system = self.system
            s = system.elements[x].word[-1]
            base = self._bar_standard(int(system.right_mult[x, s]))
            # right multiply by bar(H_s) = H_s + v - v^-1
            result: Dict[int, LaurentPolynomial] = {}
            for z, r in base.items():
                zs = int(system.right_mult[z, s])
                result[zs] = result.get(zs, ZERO) + r
                if system.lengths[zs] > system.lengths[z]:
                    result[z] = result.get(z, ZERO) + r * V_MINUS_V_INV
            self._r[x] = {z: r for z, r in result.items() if not r.is_zero()}
        return self._r[x]

    def column(self, w: GroupElement) -> Column:
        """Every nonzero P_{x,w}, keyed by x's index."""
        if w.system is not self.system:
            raise MixedSystemError(f"element {w!r} does not belong to {self.system.label}")
        if w.index in self._columns:
            return self._columns[w.index]

        system = self.system
        length_w = w.length
        pending: Dict[int, LaurentPolynomial] = {}
        solved: Dict[int, LaurentPolynomial] = {}
        # decreasing index never revisits: bar(H_y) only reaches x < y
        for x in range(system.order - 1, -1, -1):
            if system.lengths[x] > length_w:
                continue
            if x == w.index:
                h = ONE
            else:
                remainder = pending.pop(x, ZERO)
                if remainder.is_zero():
                    continue
                if remainder.coefficient(0) != 0 or remainder.bar() != -remainder:
                    raise KazhdanLusztigError(
                        f"elimination for {system.elements[x]} under {w} is not antisymmetric"
                    )
                h = remainder.positive_part()
            solved[x] = h
            h_bar = h.bar()
            for z, r in self._bar_standard(x).items():
                if z != x:
                    pending[z] = pending.get(z, ZERO) + h_bar * r

        column = {
            x: h.to_kl(length_w - int(system.lengths[x]))
            for x, h in sorted(solved.items())
        }
        self._columns[w.index] = column
        return column

    def kl_polynomial(self, y: GroupElement, w: GroupElement) -> IntPolynomial:
        return self.column(w).get(y.index, IntPolynomial.zero())


def kl_via_bar_invariance(y: GroupElement, w: GroupElement, cap: int = ORACLE_CAP) -> IntPolynomial:
    """
    P_{y,w} computed without the KL recursion.

    Builds a fresh oracle for the call; hold a BarInvarianceOracle instead when
    querying many pairs of one system.

    Raises:
        OracleCapError: if |W| exceeds cap
    """
    if y.system is not w.system:
        raise MixedSystemError("elements of different systems")
    return BarInvarianceOracle(w.system, cap).kl_polynomial(y, w)
