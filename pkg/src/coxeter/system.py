"""
Finite Weyl group core

Builds a finite Coxeter system from its type and rank: the Cartan matrix, the
positive roots, and a breadth-first enumeration of the whole group. Elements
are stored as exact integer action matrices on the root lattice together with
their ShortLex-minimal reduced word, and are deduplicated by matrix.

Breadth-first closure from the identity visits elements in (length, ShortLex)
order, so an element's position in `CoxeterSystem.elements` is its canonical
index and doubles as the sort key used by every downstream table.

Generators are 0-based internally (s1 is index 0); serialization and the CLI
use the 1-based Bourbaki labels.
"""

from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np

from src.coxeter.config import (
    BRUHAT_MATRIX_CAP,
    CARTAN_FROM_COXETER,
    ENUMERATION_CAP,
    SUPPORTED_TYPES,
)
from src.coxeter.models import SystemSummary

Side = Literal["left", "right"]


class CoxeterError(Exception):
    """Base class for Coxeter system errors."""


class UnknownTypeError(CoxeterError):
    """Raised for a type/rank pair that is not a supported finite type."""


class EnumerationCapError(CoxeterError):
    """Raised when a group would exceed the configured enumeration cap."""


class MixedSystemError(CoxeterError):
    """Raised when elements of different systems are combined."""


def coxeter_matrix_for(type_label: str, rank: int) -> List[List[int]]:
    """
    Coxeter matrix m(i,j) of a finite type in Bourbaki labeling.

    Args:
        type_label: "A", "B" or "D"
        rank: number of generators

    Returns:
        Symmetric rank x rank matrix with 1 on the diagonal
    """
    if type_label not in SUPPORTED_TYPES:
        raise UnknownTypeError(f"unknown type {type_label!r}; expected one of {sorted(SUPPORTED_TYPES)}")
    minimum = SUPPORTED_TYPES[type_label]["min_rank"]
    if rank < minimum:
        raise UnknownTypeError(f"type {type_label} needs rank >= {minimum}, got {rank}")

    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]

    def join(i: int, j: int, label: int = 3) -> None:
        m[i][j] = m[j][i] = label

    if type_label == "A":
        for i in range(rank - 1):
            join(i, i + 1)
    elif type_label == "B":
        for i in range(rank - 2):
            join(i, i + 1)
        join(rank - 2, rank - 1, 4)
    else:
        for i in range(rank - 2):
            join(i, i + 1)
        join(rank - 3, rank - 1)
    return m


def expected_order(type_label: str, rank: int) -> int:
    """Closed-form group order, used to refuse oversized builds up front."""
    if type_label == "A":
        return factorial(rank + 1)
    if type_label == "B":
        return 2 ** rank * factorial(rank)
    if type_label == "D":
        return 2 ** (rank - 1) * factorial(rank)
    raise UnknownTypeError(f"unknown type {type_label!r}")


def cartan_from_coxeter(coxeter_matrix: Sequence[Sequence[int]]) -> np.ndarray:
    """
    Crystallographic Cartan matrix realizing a Coxeter matrix.

    For a label m(i,j) > 3 the longer entry goes below the diagonal, which
    makes the last simple root of B_n short (Bourbaki).
    """
    rank = len(coxeter_matrix)
    cartan = 2 * np.eye(rank, dtype=np.int64)
    for i in range(rank):
        for j in range(i + 1, rank):
            label = coxeter_matrix[i][j]
            if label != coxeter_matrix[j][i]:
                raise CoxeterError("Coxeter matrix must be symmetric")
            if label not in CARTAN_FROM_COXETER:
                raise CoxeterError(f"no crystallographic realization for m({i + 1},{j + 1}) = {label}")
            upper, lower = CARTAN_FROM_COXETER[label]
            cartan[i, j] = upper
            cartan[j, i] = lower
    return cartan


class GroupElement:
    """
    An element of a finite Coxeter group.

    Immutable; equality and hashing go through the action matrix, which the
    enumeration has already deduplicated into the canonical `index`.
    """

    __slots__ = ("system", "index", "action", "word", "length", "_key")

    def __init__(self, system: "CoxeterSystem", index: int, action: np.ndarray, word: Tuple[int, ...]):
        action.setflags(write=False)
        self.system = system
        self.index = index
        self.action = action
        self.word = word
        self.length = len(word)
        self._key = action.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.system is other.system and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.system.multiply(self, other)

    def __repr__(self) -> str:
        return f"GroupElement({self.system.label}, {self.labels()})"

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.word)

    def labels(self) -> List[int]:
        """ShortLex word in 1-based Bourbaki labels (the serialized form)."""
        return [i + 1 for i in self.word]

    @property
    def inverse(self) -> "GroupElement":
        return self.system.inverse(self)

    def support(self) -> FrozenSet[int]:
        """Generators occurring in the reduced word; its size is l-bar(x)."""
        return frozenset(self.word)

    def support_size(self) -> int:
        return len(set(self.word))

    def descents(self, side: Side = "right") -> FrozenSet[int]:
        return self.system.descents(self, side)

    def is_involution(self) -> bool:
        return bool(self.system.inverses[self.index] == self.index)


class CoxeterSystem:
    """
    A fully enumerated finite Coxeter system.

    Holds the Coxeter and Cartan matrices, the positive roots, every group
    element in canonical order, and the multiplication-by-generator tables
    that the KL and cell code run on.
    """

    def __init__(self,
                 type_label: str,
                 coxeter_matrix: Sequence[Sequence[int]],
                 enumeration_cap: int = ENUMERATION_CAP,
                 bruhat_matrix_cap: int = BRUHAT_MATRIX_CAP):
        self.type_label = type_label
        self.coxeter_matrix = np.array(coxeter_matrix, dtype=np.int64)
        self.rank = len(coxeter_matrix)
        self.cartan_matrix = cartan_from_coxeter(coxeter_matrix)
        self.enumeration_cap = enumeration_cap
        self.bruhat_matrix_cap = bruhat_matrix_cap

        self._generator_matrices = [self._simple_reflection_matrix(i) for i in range(self.rank)]
        self.positive_roots = self._positive_roots()
        self.elements: List[GroupElement] = []
        self._index: Dict[bytes, int] = {}
        self._enumerate()

        self.order = len(self.elements)
        self.lengths = np.array([x.length for x in self.elements], dtype=np.int64)
        self.right_mult, self.left_mult = self._generator_tables()
        self.inverses = self._inverse_table()
        self.identity = self.elements[0]
        self.w0 = self.elements[-1]
        self.generators = [self.elements[self.right_mult[0, i]] for i in range(self.rank)]
        self._bruhat: Optional[np.ndarray] = None
        self._reflections: Optional[List[GroupElement]] = None

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    # ------------------------------------------------------------------
    # construction

    def _simple_reflection_matrix(self, i: int) -> np.ndarray:
        # s_i(alpha_j) = alpha_j - a_ij alpha_i; column j is the image of alpha_j
        matrix = np.eye(self.rank, dtype=np.int64)
        matrix[i, :] -= self.cartan_matrix[i, :]
        return matrix

    def _positive_roots(self) -> List[Tuple[int, ...]]:
        simple = [tuple(int(c) for c in np.eye(self.rank, dtype=np.int64)[i]) for i in range(self.rank)]
        roots = set(simple)
        frontier = list(simple)
        while frontier:
            next_frontier = []
            for root in frontier:
                vector = np.array(root, dtype=np.int64)
                for matrix in self._generator_matrices:
                    image = tuple(int(c) for c in matrix @ vector)
                    if image not in roots:
                        roots.add(image)
                        next_frontier.append(image)
            frontier = next_frontier
        positive = [root for root in roots if all(c >= 0 for c in root)]
        return sorted(positive, key=lambda root: (sum(root), root))

    def _enumerate(self) -> None:
        identity = np.eye(self.rank, dtype=np.int64)
        actions = [identity]
        words: List[Tuple[int, ...]] = [()]
        self._index[identity.tobytes()] = 0
        level = [0]
        while level:
            next_level = []
            # parents in ShortLex order, generators ascending: first discovery is ShortLex-minimal
            for parent in level:
                for i, matrix in enumerate(self._generator_matrices):
                    product = actions[parent] @ matrix
                    key = product.tobytes()
                    if key in self._index:
                        continue
                    if len(actions) >= self.enumeration_cap:
                        raise EnumerationCapError(
                            f"{self.label} exceeds the enumeration cap of {self.enumeration_cap} elements"
                        )
                    self._index[key] = len(actions)
                    next_level.append(len(actions))
                    actions.append(product)
                    words.append(words[parent] + (i,))
            level = next_level
        self.elements = [GroupElement(self, k, actions[k], words[k]) for k in range(len(actions))]

    def _generator_tables(self) -> Tuple[np.ndarray, np.ndarray]:
        right = np.empty((len(self.elements), self.rank), dtype=np.int64)
        left = np.empty((len(self.elements), self.rank), dtype=np.int64)
        for x in self.elements:
            for i, matrix in enumerate(self._generator_matrices):
                right[x.index, i] = self._index[(x.action @ matrix).tobytes()]
                left[x.index, i] = self._index[(matrix @ x.action).tobytes()]
        right.setflags(write=False)
        left.setflags(write=False)
        return right, left

    def _inverse_table(self) -> np.ndarray:
        inverses = np.empty(len(self.elements), dtype=np.int64)
        for x in self.elements:
            current = 0
            for i in reversed(x.word):
                current = self.right_mult[current, i]
            inverses[x.index] = current
        inverses.setflags(write=False)
        return inverses

    # ------------------------------------------------------------------
    # element arithmetic

    def _check_same(self, *elements: GroupElement) -> None:
        for x in elements:
            if x.system is not self:
                raise MixedSystemError(f"element {x!r} does not belong to {self.label}")

    def element(self, index: int) -> GroupElement:
        return self.elements[index]

    def from_word(self, word: Iterable[int]) -> GroupElement:
        """Element for a (not necessarily reduced) word of 0-based generator indices."""
        current = 0
        for i in word:
            if not 0 <= i < self.rank:
                raise CoxeterError(f"generator index {i + 1} out of range 1..{self.rank}")
            current = self.right_mult[current, i]
        return self.elements[current]

    def from_labels(self, labels: Iterable[int]) -> GroupElement:
        """Element for a word of 1-based Bourbaki labels."""
        return self.from_word(label - 1 for label in labels)

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self._check_same(x, y)
        return self.elements[self._index[(x.action @ y.action).tobytes()]]

    def inverse(self, x: GroupElement) -> GroupElement:
        self._check_same(x)
        return self.elements[self.inverses[x.index]]

    def conjugate_by_w0(self, x: GroupElement) -> GroupElement:
        """w0 x w0."""
        return self.multiply(self.w0, self.multiply(x, self.w0))

    def inversion_count(self, x: GroupElement) -> int:
        """Number of positive roots sent to negative roots by x."""
        count = 0
        for root in self.positive_roots:
            image = x.action @ np.array(root, dtype=np.int64)
            if (image <= 0).all():
                count += 1
        return count

    # ------------------------------------------------------------------
    # descents, support, Bruhat order

    def descents(self, x: GroupElement, side: Side = "right") -> FrozenSet[int]:
        """Generators s with l(xs) < l(x) (right) or l(sx) < l(x) (left)."""
        self._check_same(x)
        table = self.right_mult if side == "right" else self.left_mult
        return frozenset(
            i for i in range(self.rank)
            if self.lengths[table[x.index, i]] < x.length
        )

    def support(self, x: GroupElement) -> FrozenSet[int]:
        self._check_same(x)
        return x.support()

    @property
    def bruhat_matrix(self) -> Optional[np.ndarray]:
        """
        Boolean matrix with leq[x, y] == (x <= y), or None above the matrix cap.

        Built row by row in canonical order: for a right descent s of w,
        x <= w iff min(x, xs) <= ws.
        """
        if self._bruhat is None and self.order <= self.bruhat_matrix_cap:
            below = np.zeros((self.order, self.order), dtype=bool)
            below[0, 0] = True
            all_x = np.arange(self.order)
            down = []
            for i in range(self.rank):
                xs = self.right_mult[:, i]
                down.append(np.where(self.lengths[xs] < self.lengths, xs, all_x))
            for w in self.elements[1:]:
                s = w.word[-1]
                ws = self.right_mult[w.index, s]
                below[w.index] = below[ws][down[s]]
            leq = np.ascontiguousarray(below.T)
            leq.setflags(write=False)
            self._bruhat = leq
        return self._bruhat

    def bruhat_leq(self, x: GroupElement, y: GroupElement) -> bool:
        self._check_same(x, y)
        matrix = self.bruhat_matrix
        if matrix is not None:
            return bool(matrix[x.index, y.index])
        # same recursion along the fixed reduced word of y
        xi, yi = x.index, y.index
        while self.lengths[yi] > 0:
            if self.lengths[xi] > self.lengths[yi]:
                return False
            s = self.elements[yi].word[-1]
            xs = self.right_mult[xi, s]
            if self.lengths[xs] < self.lengths[xi]:
                xi = xs
            yi = self.right_mult[yi, s]
        return xi == 0

    def bruhat_lower_interval(self, y: GroupElement) -> List[GroupElement]:
        """All x <= y, by closing the identity under subwords of y's reduced word."""
        self._check_same(y)
        reachable = {0}
        for i in y.word:
            reachable |= {int(self.right_mult[r, i]) for r in reachable}
        return [self.elements[k] for k in sorted(reachable)]

    def is_covering(self, x: GroupElement, y: GroupElement) -> bool:
        """x is covered by y in the Bruhat order."""
        return y.length == x.length + 1 and self.bruhat_leq(x, y)

    # ------------------------------------------------------------------
    # reflections

    def reflections(self) -> List[GroupElement]:
        """All conjugates w s w^-1 of simple reflections, in canonical order."""
        if self._reflections is None:
            found = set()
            for w in self.elements:
                w_inv = self.inverse(w)
                for s in self.generators:
                    found.add(self.multiply(self.multiply(w, s), w_inv).index)
            self._reflections = [self.elements[k] for k in sorted(found)]
        return list(self._reflections)

    def summary(self) -> SystemSummary:
        return SystemSummary(
            type_label=self.type_label,
            rank=self.rank,
            order=self.order,
            longest_length=self.w0.length,
            coxeter_matrix=self.coxeter_matrix.tolist(),
            cartan_matrix=self.cartan_matrix.tolist(),
            w0=self.w0.labels(),
        )


def build_system(type_label: str,
                 rank: int,
                 enumeration_cap: int = ENUMERATION_CAP,
                 bruhat_matrix_cap: int = BRUHAT_MATRIX_CAP) -> CoxeterSystem:
    """
    Build and fully enumerate the Weyl group of a finite type.

    Args:
        type_label: "A", "B" or "D"
        rank: number of simple reflections
        enumeration_cap: refuse groups larger than this

    Returns:
        CoxeterSystem with roots, w0 and length table
    """
    coxeter_matrix = coxeter_matrix_for(type_label, rank)
    order = expected_order(type_label, rank)
    if order > enumeration_cap:
        raise EnumerationCapError(
            f"{type_label}{rank} has {order} elements, above the enumeration cap of {enumeration_cap}"
        )
    return CoxeterSystem(type_label, coxeter_matrix, enumeration_cap, bruhat_matrix_cap)


def build_from_coxeter_matrix(coxeter_matrix: Sequence[Sequence[int]],
                              label: str = "X",
                              enumeration_cap: int = ENUMERATION_CAP) -> CoxeterSystem:
    """Build a system from an explicit Coxeter matrix (exceptional types, products)."""
    return CoxeterSystem(label, coxeter_matrix, enumeration_cap)
