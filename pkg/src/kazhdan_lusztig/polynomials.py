"""
Exact-integer polynomial types.

IntPolynomial holds Kazhdan-Lusztig polynomials in q; LaurentPolynomial is the
coefficient ring Z[v, v^-1] of the Hecke algebra (v^2 = q). Coefficients are
Python ints, so overflow cannot happen.
"""

import math
from typing import Dict, Iterable, Mapping, Tuple, Union

# degree of the zero polynomial
ZERO_DEGREE = -math.inf


class IntPolynomial:
    """
    Polynomial in q with integer coefficients; index i holds the q^i coefficient.

    Immutable, with trailing zeros stripped.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients: Tuple[int, ...] = tuple(coefficients)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def shift(self, power: int) -> "IntPolynomial":
        """Multiply by q^power (power >= 0)."""
        if not self.coefficients:
            return self
        return IntPolynomial((0,) * power + self.coefficients)

    def evaluate(self, q: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * q + c
        return total

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        if not self.coefficients or not other.coefficients:
            return IntPolynomial.zero()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return IntPolynomial(product)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coefficients == IntPolynomial((other,)).coefficients
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                base = "q" if power == 1 else f"q^{power}"
                body = base if abs(c) == 1 else f"{abs(c)}{base}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


class LaurentPolynomial:
    """
    Laurent polynomial in v with integer coefficients, stored as exponent -> coefficient.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] = None):
        self.terms: Dict[int, int] = {e: int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def v(cls, power: int = 1, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({power: coefficient})

    @classmethod
    def from_kl(cls, polynomial: IntPolynomial, length_gap: int) -> "LaurentPolynomial":
        """v^{length_gap} P(v^-2): the coefficient of H_y in C'_w for length_gap = l(w) - l(y)."""
        return cls({length_gap - 2 * k: c for k, c in enumerate(polynomial.coefficients)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> int:
        return self.terms.get(exponent, 0)

    @property
    def min_exponent(self) -> Union[int, float]:
        return min(self.terms) if self.terms else math.inf

    @property
    def max_exponent(self) -> Union[int, float]:
        return max(self.terms) if self.terms else ZERO_DEGREE

    def bar(self) -> "LaurentPolynomial":
        """v -> v^-1."""
        return LaurentPolynomial({-e: c for e, c in self.terms.items()})

    def positive_part(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: c for e, c in self.terms.items() if e > 0})

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())

    def to_kl(self, length_gap: int) -> IntPolynomial:
        """Inverse of from_kl: read P(q) off v^{length_gap} P(v^-2)."""
        if not self.terms:
            return IntPolynomial.zero()
        coefficients: Dict[int, int] = {}
        for e, c in self.terms.items():
            k, parity = divmod(length_gap - e, 2)
            if parity or k < 0:
                raise ValueError(f"v^{e} does not fit v^{length_gap} P(v^-2)")
            coefficients[k] = c
        return IntPolynomial(coefficients.get(k, 0) for k in range(max(coefficients) + 1))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()})
        terms: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == LaurentPolynomial({0: other}).terms
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms):
            c = self.terms[e]
            base = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if base == "":
                body = str(abs(c))
            else:
                body = base if abs(c) == 1 else f"{abs(c)}{base}"
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> Dict[str, int]:
        return {str(e): c for e, c in sorted(self.terms.items())}
