"""
Hecke algebra of a finite Coxeter group over Z[v, v^-1].

Normalization (Soergel): H_s^2 = (v^-1 - v) H_s + H_e, C'_s = H_s + v H_e, and

    C'_w = sum_{y <= w} v^{l(w)-l(y)} P_{y,w}(v^-2) H_y.

Projective functors theta_w are modeled by C'_w; an ungraded multiplicity is
the value at v = 1 of a KL-basis structure constant.
"""

from typing import Dict, List, Mapping, Optional, Tuple

from src.coxeter.system import CoxeterSystem, GroupElement, MixedSystemError
from src.kazhdan_lusztig.klpoly import KazhdanLusztigError, KLTable
from src.kazhdan_lusztig.polynomials import LaurentPolynomial

ThetaDecomposition = Dict[GroupElement, int]

V = LaurentPolynomial.v(1)
V_INV = LaurentPolynomial.v(-1)
ONE = LaurentPolynomial.one()
ZERO = LaurentPolynomial.zero()


class HeckeElement:
    """Finite Z[v, v^-1]-combination of standard basis elements H_x (keyed by element index)."""

    __slots__ = ("system", "coefficients")

    def __init__(self, system: CoxeterSystem, coefficients: Optional[Mapping[int, LaurentPolynomial]] = None):
        self.system = system
        self.coefficients: Dict[int, LaurentPolynomial] = {
            x: p for x, p in sorted((coefficients or {}).items()) if not p.is_zero()
        }

    @classmethod
    def standard(cls, x: GroupElement) -> "HeckeElement":
        return cls(x.system, {x.index: ONE})

    @classmethod
    def zero(cls, system: CoxeterSystem) -> "HeckeElement":
        return cls(system)

    def _check(self, other: "HeckeElement") -> None:
        if other.system is not self.system:
            raise MixedSystemError("Hecke elements of different systems")

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, x: GroupElement) -> LaurentPolynomial:
        return self.coefficients.get(x.index, ZERO)

    def support(self) -> List[GroupElement]:
        return [self.system.elements[x] for x in self.coefficients]

    def scale(self, factor: LaurentPolynomial) -> "HeckeElement":
        return HeckeElement(self.system, {x: p * factor for x, p in self.coefficients.items()})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        terms = dict(self.coefficients)
        for x, p in other.coefficients.items():
            terms[x] = terms.get(x, ZERO) + p
        return HeckeElement(self.system, terms)

    def __neg__(self) -> "HeckeElement":
        return self.scale(-ONE)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.system is other.system and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(tuple(self.coefficients.items()))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(
            f"({p}) H_{self.system.elements[x]}" for x, p in self.coefficients.items()
        )

    def to_json(self) -> List[Tuple[List[int], Dict[str, int]]]:
        """List of (ShortLex label word, exponent -> coefficient)."""
        return [
            (self.system.elements[x].labels(), p.to_json())
            for x, p in self.coefficients.items()
        ]


class HeckeAlgebra:
    """
    Standard and KL bases of the Hecke algebra of a system.

    The KL table is only needed for kl_basis and the theta rules.
    """

    def __init__(self, system: CoxeterSystem, kl_table: Optional[KLTable] = None):
        if kl_table is not None and kl_table.system is not system:
            raise MixedSystemError("KL table belongs to another system")
        self.system = system
        self.kl_table = kl_table
        self._bar_cache: Dict[int, HeckeElement] = {}
        self._kl_cache: Dict[int, HeckeElement] = {}

    def _require_table(self) -> KLTable:
        if self.kl_table is None:
            raise KazhdanLusztigError("this operation needs a KL table")
        return self.kl_table

    def standard(self, x: GroupElement) -> HeckeElement:
        return HeckeElement.standard(x)

    # ------------------------------------------------------------------
    # standard basis arithmetic

    def multiply_generator(self, a: HeckeElement, s: int) -> HeckeElement:
        """a * H_s: H_x H_s = H_{xs} if xs > x, else H_{xs} + (v^-1 - v) H_x."""
        right, lengths = self.system.right_mult, self.system.lengths
        terms: Dict[int, LaurentPolynomial] = {}
        for x, p in a.coefficients.items():
            xs = int(right[x, s])
            terms[xs] = terms.get(xs, ZERO) + p
            if lengths[xs] < lengths[x]:
                terms[x] = terms.get(x, ZERO) + p * (V_INV - V)
        return HeckeElement(self.system, terms)

    def multiply_standard(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        """a * b, expanding b along the reduced words of its support."""
        a._check(b)
        result = HeckeElement.zero(self.system)
        for y, coefficient in b.coefficients.items():
            partial = a
            for s in self.system.elements[y].word:
                partial = self.multiply_generator(partial, s)
            result = result + partial.scale(coefficient)
        return result

    def sigma(self, a: HeckeElement) -> HeckeElement:
        """The antiautomorphism H_w -> H_{w^-1}."""
        inverses = self.system.inverses
        return HeckeElement(self.system, {int(inverses[x]): p for x, p in a.coefficients.items()})

    def bar_standard(self, x: GroupElement) -> HeckeElement:
        """bar(H_x) = (H_{s1} + v - v^-1) ... (H_{sk} + v - v^-1) along a reduced word."""
        if x.index not in self._bar_cache:
            if x.length == 0:
                value = HeckeElement.standard(x)
            else:
                s = x.word[-1]
                prefix = self.bar_standard(self.system.elements[self.system.right_mult[x.index, s]])
                value = self.multiply_generator(prefix, s) + prefix.scale(V - V_INV)
            self._bar_cache[x.index] = value
        return self._bar_cache[x.index]

    def bar(self, a: HeckeElement) -> HeckeElement:
        """The bar involution: v -> v^-1 on coefficients, H_x -> H_{x^-1}^-1."""
        result = HeckeElement.zero(self.system)
        for x, p in a.coefficients.items():
            result = result + self.bar_standard(self.system.elements[x]).scale(p.bar())
        return result

    # ------------------------------------------------------------------
    # KL basis

    def kl_basis(self, w: GroupElement) -> HeckeElement:
        """C'_w expanded in the standard basis."""
        if w.index not in self._kl_cache:
            table = self._require_table()
            lengths = self.system.lengths
            self._kl_cache[w.index] = HeckeElement(self.system, {
                y: LaurentPolynomial.from_kl(p, w.length - int(lengths[y]))
                for y, p in table.column(w).items()
            })
        return self._kl_cache[w.index]

    def to_kl_basis(self, a: HeckeElement) -> Dict[GroupElement, LaurentPolynomial]:
        """
        Coordinates of a in the KL basis.

        Peels off the longest standard term each round; C'_x is unitriangular
        with top term H_x, so the largest index in the remainder strictly drops.
        """
        remainder = a
        coordinates: Dict[int, LaurentPolynomial] = {}
        while not remainder.is_zero():
            top = max(remainder.coefficients)
            coefficient = remainder.coefficients[top]
            coordinates[top] = coefficient
            remainder = remainder - self.kl_basis(self.system.elements[top]).scale(coefficient)
        return {self.system.elements[x]: p for x, p in sorted(coordinates.items())}

    # ------------------------------------------------------------------
    # projective functor composition

    def theta_composition_right(self, w: GroupElement, s: int) -> ThetaDecomposition:
        """
        theta_s o theta_w as a multiset of theta_y.

        {w: 2} if ws < w, else {ws: 1} plus mu(y,w) copies of every y < w with ys < y.
        """
        table = self._require_table()
        system = self.system
        ws = system.elements[system.right_mult[w.index, s]]
        if ws.length < w.length:
            return {w: 2}
        decomposition: Dict[int, int] = {ws.index: 1}
        for y, mu in table.mu_lower(w):
            if system.lengths[system.right_mult[y.index, s]] < y.length:
                decomposition[y.index] = decomposition.get(y.index, 0) + mu
        return {system.elements[x]: m for x, m in sorted(decomposition.items())}

    def theta_composition_left(self, w: GroupElement, s: int) -> ThetaDecomposition:
        """Mirror of theta_composition_right with the condition sw < w."""
        table = self._require_table()
        system = self.system
        sw = system.elements[system.left_mult[w.index, s]]
        if sw.length < w.length:
            return {w: 2}
        decomposition: Dict[int, int] = {sw.index: 1}
        for y, mu in table.mu_lower(w):
            if system.lengths[system.left_mult[y.index, s]] < y.length:
                decomposition[y.index] = decomposition.get(y.index, 0) + mu
        return {system.elements[x]: m for x, m in sorted(decomposition.items())}

    def theta_from_product(self, w: GroupElement, s: int, side: str = "right") -> ThetaDecomposition:
        """The same decomposition read off the actual product C'_w C'_s (or C'_s C'_w) at v = 1."""
        c_s = self.kl_basis(self.system.generators[s])
        c_w = self.kl_basis(w)
        product = self.multiply_standard(c_w, c_s) if side == "right" else self.multiply_standard(c_s, c_w)
        return {
            x: p.evaluate_at_one()
            for x, p in self.to_kl_basis(product).items()
            if p.evaluate_at_one() != 0
        }

    def sigma_image(self, decomposition: ThetaDecomposition) -> ThetaDecomposition:
        """Apply sigma to a theta multiset: theta_y -> theta_{y^-1}."""
        image = {self.system.inverse(x): m for x, m in decomposition.items()}
        return dict(sorted(image.items(), key=lambda item: item[0].index))
