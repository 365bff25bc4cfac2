"""
Homological dimensions in the principal block of category O.

Every value here is a closed formula in the combinatorics of W (length,
Bruhat order, support, the a-function); no module is ever constructed.
Tilting and injective dimensions are tabulated as a(w) and 2a(w0 w) with an
explicit status: proved in type A, conjectural elsewhere.
"""

from typing import List, Optional, Tuple

from src.category_o.config import (
    PROVED_TILTING_TYPES,
    STATUS_CONJECTURE,
    STATUS_THEOREM,
)
from src.category_o.models import GradedExtEntry, HomologyRow
from src.coxeter.system import CoxeterSystem, GroupElement, MixedSystemError
from src.kazhdan_lusztig.cells import CellDecomposition

Quadruple = Tuple[GroupElement, GroupElement, int, int]


class HomologyError(Exception):
    """Base class for errors of the homological calculator."""


def standard(x: GroupElement) -> str:
    return f"Delta({x})"


class HomologyTable:
    """
    Projective dimensions of standard, simple, costandard, tilting and
    injective modules, the shuffled Verma formula and the graded Ext families
    between standard modules.

    Args:
        cells: two-sided cell decomposition (carries the KL table and the a-function)
    """

    def __init__(self, cells: CellDecomposition):
        if cells.side != "twosided":
            raise HomologyError("the homology table needs the two-sided cell decomposition")
        self.cells = cells
        self.system: CoxeterSystem = cells.system
        self.w0 = self.system.w0
        self.longest_length = self.w0.length
        proved = self.system.type_label in PROVED_TILTING_TYPES
        self.tilting_status = STATUS_THEOREM if proved else STATUS_CONJECTURE

    def _check(self, *elements: GroupElement) -> None:
        for x in elements:
            if x.system is not self.system:
                raise MixedSystemError(f"element {x!r} does not belong to {self.system.label}")

    # ------------------------------------------------------------------
    # projective dimensions

    def pd_projective(self, w: GroupElement) -> int:
        self._check(w)
        return 0

    def pd_standard(self, w: GroupElement) -> int:
        self._check(w)
        return w.length

    def pd_simple(self, w: GroupElement) -> int:
        self._check(w)
        return 2 * self.longest_length - w.length

    def pd_costandard(self, w: GroupElement) -> int:
        self._check(w)
        return 2 * self.longest_length - w.length

    def global_dimension(self) -> int:
        return 2 * self.longest_length

    def pd_shuffled(self, x: GroupElement, y: GroupElement) -> int:
        """Projective dimension of the shuffled Verma module Delta(x, y)."""
        self._check(x, y)
        return x.length + y.length

    def pd_tilting(self, w: GroupElement) -> Tuple[int, str]:
        """t(w) = a(w), with its status."""
        self._check(w)
        return self.cells.a_value(w), self.tilting_status

    def pd_injective(self, w: GroupElement) -> Tuple[int, str]:
        """i(w) = 2a(w0 w), with its status."""
        self._check(w)
        return 2 * self.cells.a_value(self.system.multiply(self.w0, w)), self.tilting_status

    def row(self, w: GroupElement) -> HomologyRow:
        t, t_status = self.pd_tilting(w)
        i, i_status = self.pd_injective(w)
        return HomologyRow(
            element=w.labels(),
            word=str(w),
            length=w.length,
            a_value=self.cells.a_value(w),
            pd_standard=self.pd_standard(w),
            pd_simple=self.pd_simple(w),
            pd_costandard=self.pd_costandard(w),
            pd_tilting=t,
            tilting_status=t_status,
            pd_injective=i,
            injective_status=i_status,
        )

    def rows(self) -> List[HomologyRow]:
        """One row per element, canonical order."""
        return [self.row(w) for w in self.system.elements]

    # ------------------------------------------------------------------
    # Ext between standard modules

    def linear_ext_dim(self, x: GroupElement, y: GroupElement, i: int) -> int:
        """dim Ext^i(Delta(x), Delta(y)<-i>): 1 iff x >= y and l(x) - l(y) = i."""
        self._check(x, y)
        return int(x.length - y.length == i and self.system.bruhat_leq(y, x))

    def hom_dim(self, x: GroupElement, y: GroupElement, j: int) -> int:
        """dim Hom(Delta(x), Delta(y)<j>): 1 iff x >= y and l(x) - l(y) = j."""
        self._check(x, y)
        return int(x.length - y.length == j and self.system.bruhat_leq(y, x))

    def carlin_degree(self, x: GroupElement, y: GroupElement) -> int:
        return x.length - y.length

    def carlin_dim(self, x: GroupElement, y: GroupElement) -> int:
        """dim Ext^{l(x)-l(y)}(Delta(x), Delta(y)) (ungraded): 1 iff x >= y; 0 at a negative degree."""
        self._check(x, y)
        if self.carlin_degree(x, y) < 0:
            return 0
        return int(self.system.bruhat_leq(y, x))

    def ext1_to_dominant(self, x: GroupElement, j: int) -> int:
        """dim Ext^1(Delta(x), Delta(e)<j>) = support size of x if j = l(x) - 2, else 0."""
        self._check(x)
        return x.support_size() if j == x.length - 2 else 0

    def ext_from_dominant(self, z: GroupElement, i: int, j: int) -> Optional[int]:
        """
        dim Ext^i(Delta(e), Delta(z)<j>) on the line i + j = 1.

        Obtained from ext1_to_dominant through the duality; None off that line,
        where the value is not determined by these formulas.
        """
        self._check(z)
        if i + j != 1:
            return None
        if i < 0:
            return 0
        return z.support_size() if j == 2 - z.length else 0

    def duality_image(self, x: GroupElement, y: GroupElement, i: int, j: int) -> Quadruple:
        """(x, y, i, j) -> (w0 y^-1 w0, w0 x^-1 w0, i + j, -j); an involution on quadruples."""
        self._check(x, y)
        conjugate = self.system.conjugate_by_w0
        return conjugate(y.inverse), conjugate(x.inverse), i + j, -j

    def reduce_ext_pair(self, x: GroupElement, y: GroupElement) -> Tuple[GroupElement, GroupElement]:
        """
        Strip simple reflections that are descents of both x and y.

        Common left descents go first, then common right descents, smallest
        generator first. The length difference and Bruhat comparability are
        preserved, so the linear and Carlin Ext values are too.
        """
        self._check(x, y)
        system = self.system
        while True:
            common_left = system.descents(x, "left") & system.descents(y, "left")
            if common_left:
                s = system.generators[min(common_left)]
                x, y = system.multiply(s, x), system.multiply(s, y)
                continue
            common_right = system.descents(x, "right") & system.descents(y, "right")
            if common_right:
                s = system.generators[min(common_right)]
                x, y = system.multiply(x, s), system.multiply(y, s)
                continue
            return x, y

    # ------------------------------------------------------------------
    # labelled entries

    def linear_entry(self, x: GroupElement, y: GroupElement, i: int) -> GradedExtEntry:
        return GradedExtEntry(
            family="std-std-linear", source=standard(x), target=standard(y),
            i=i, j=-i, dim=self.linear_ext_dim(x, y, i),
        )

    def carlin_entry(self, x: GroupElement, y: GroupElement) -> GradedExtEntry:
        degree = self.carlin_degree(x, y)
        # ungraded statement; j = -i places it on the linear diagonal
        return GradedExtEntry(
            family="carlin", source=standard(x), target=standard(y),
            i=degree, j=-degree, dim=self.carlin_dim(x, y),
        )

    def ext1_dominant_entry(self, x: GroupElement, j: int) -> GradedExtEntry:
        return GradedExtEntry(
            family="ext1-dominant", source=standard(x), target=standard(self.system.identity),
            i=1, j=j, dim=self.ext1_to_dominant(x, j),
        )

    def from_dominant_entry(self, z: GroupElement, i: int, j: int) -> GradedExtEntry:
        return GradedExtEntry(
            family="from-dominant", source=standard(self.system.identity), target=standard(z),
            i=i, j=j, dim=self.ext_from_dominant(z, i, j),
        )

    def hom_entry(self, x: GroupElement, y: GroupElement, j: int) -> GradedExtEntry:
        return GradedExtEntry(
            family="hom", source=standard(x), target=standard(y),
            i=0, j=j, dim=self.hom_dim(x, y, j),
        )

    def duality_entries(self, x: GroupElement, y: GroupElement, i: int) -> List[GradedExtEntry]:
        """A linear-family entry and its dual, read in the homomorphism family."""
        x_dual, y_dual, i_dual, j_dual = self.duality_image(x, y, i, -i)
        return [
            self.linear_entry(x, y, i).model_copy(update={"family": "duality"}),
            GradedExtEntry(
                family="duality", source=standard(x_dual), target=standard(y_dual),
                i=i_dual, j=j_dual, dim=self.hom_dim(y_dual, x_dual, j_dual),
            ),
        ]

