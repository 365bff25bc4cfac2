import math

import pytest

from src.kazhdan_lusztig.polynomials import IntPolynomial, LaurentPolynomial


def test_int_polynomial_normal_form():
    assert IntPolynomial([1, 1, 0, 0]).coefficients == (1, 1)
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial.zero().degree == -math.inf
    assert IntPolynomial.monomial(2, 3).coefficients == (0, 0, 3)


@pytest.mark.parametrize("coefficients, text", [
    ([1, 1], "1 + q"),
    ([1, 0, 2], "1 + 2q^2"),
    ([], "0"),
    ([0, -1], "-q"),
    ([1, -3], "1 - 3q"),
])
def test_int_polynomial_str(coefficients, text):
    assert str(IntPolynomial(coefficients)) == text


def test_int_polynomial_arithmetic():
    p = IntPolynomial([1, 1])
    assert p * p == IntPolynomial([1, 2, 1])
    assert p - p == IntPolynomial.zero()
    assert p.shift(2) == IntPolynomial([0, 0, 1, 1])
    assert p * 3 == IntPolynomial([3, 3])
    assert p.evaluate(1) == 2
    assert p.coefficient(5) == 0
    assert IntPolynomial.one() == 1


def test_laurent_bar_and_parts():
    x = LaurentPolynomial({1: 2, -1: 1, 0: 3})
    assert x.bar() == LaurentPolynomial({-1: 2, 1: 1, 0: 3})
    assert x.positive_part() == LaurentPolynomial({1: 2})
    assert x.evaluate_at_one() == 6
    assert x.min_exponent == -1
    assert x.max_exponent == 1
    assert str(LaurentPolynomial({-1: 1, 1: -1})) == "v^-1 - v"


def test_laurent_product():
    v = LaurentPolynomial.v()
    v_inv = LaurentPolynomial.v(-1)
    assert (v + v_inv) * (v + v_inv) == LaurentPolynomial({2: 1, 0: 2, -2: 1})
    assert v * v_inv == LaurentPolynomial.one()
    assert (v - v).is_zero()


def test_kl_normalization():
    p = IntPolynomial([1, 1])
    h = LaurentPolynomial.from_kl(p, 3)
    assert h == LaurentPolynomial({3: 1, 1: 1})
    assert h.to_kl(3) == p
    with pytest.raises(ValueError):
        LaurentPolynomial({0: 1}).to_kl(3)


def test_laurent_json():
    assert LaurentPolynomial({-1: 1, 2: 4}).to_json() == {"-1": 1, "2": 4}
