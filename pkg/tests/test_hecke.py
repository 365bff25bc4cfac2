import pytest

from src.coxeter.system import MixedSystemError
from src.kazhdan_lusztig.hecke import HeckeAlgebra, HeckeElement
from src.kazhdan_lusztig.klpoly import KazhdanLusztigError
from src.kazhdan_lusztig.polynomials import LaurentPolynomial

V = LaurentPolynomial.v()
V_INV = LaurentPolynomial.v(-1)


@pytest.fixture(scope="module")
def hecke_a2(kl_a2):
    return HeckeAlgebra(kl_a2.system, kl_a2)


@pytest.fixture(scope="module")
def hecke_b3(kl_b3):
    return HeckeAlgebra(kl_b3.system, kl_b3)


def test_quadratic_relation(hecke_a2):
    a2 = hecke_a2.system
    s = a2.generators[0]
    h_s = hecke_a2.standard(s)
    square = hecke_a2.multiply_standard(h_s, h_s)
    assert square == h_s.scale(V_INV - V) + hecke_a2.standard(a2.identity)


def test_kl_basis_of_a_generator(hecke_a2):
    a2 = hecke_a2.system
    s = a2.generators[1]
    c_s = hecke_a2.kl_basis(s)
    assert c_s == hecke_a2.standard(s) + hecke_a2.standard(a2.identity).scale(V)
    assert hecke_a2.multiply_standard(c_s, c_s) == c_s.scale(V + V_INV)


def test_kl_basis_of_longest_element(hecke_a2):
    a2 = hecke_a2.system
    c_w0 = hecke_a2.kl_basis(a2.w0)
    for y in a2.elements:
        assert c_w0.coefficient(y) == LaurentPolynomial.v(3 - y.length)


def test_bar_invariance(hecke_b3):
    for w in hecke_b3.system.elements[::3]:
        c_w = hecke_b3.kl_basis(w)
        assert hecke_b3.bar(c_w) == c_w
        assert hecke_b3.sigma(c_w) == hecke_b3.kl_basis(w.inverse)


def test_bar_is_an_involution(hecke_a2):
    a2 = hecke_a2.system
    x = hecke_a2.standard(a2.w0).scale(V) + hecke_a2.standard(a2.generators[0])
    assert hecke_a2.bar(hecke_a2.bar(x)) == x


def test_to_kl_basis(hecke_a2):
    a2 = hecke_a2.system
    c_s = hecke_a2.kl_basis(a2.generators[0])
    c_t = hecke_a2.kl_basis(a2.generators[1])
    product = hecke_a2.multiply_standard(c_s, c_t)
    assert hecke_a2.to_kl_basis(product) == {a2.from_labels([1, 2]): LaurentPolynomial.one()}
    # C'_s C'_t C'_s = C'_sts + C'_s
    triple = hecke_a2.multiply_standard(product, c_s)
    assert hecke_a2.to_kl_basis(triple) == {
        a2.generators[0]: LaurentPolynomial.one(),
        a2.w0: LaurentPolynomial.one(),
    }


def test_theta_rules(hecke_a2):
    a2 = hecke_a2.system
    s1, s2 = a2.generators
    assert hecke_a2.theta_composition_right(s1, 0) == {s1: 2}
    assert hecke_a2.theta_composition_right(a2.identity, 0) == {s1: 1}
    assert hecke_a2.theta_composition_right(a2.from_labels([1, 2]), 0) == {s1: 1, a2.w0: 1}
    assert hecke_a2.theta_composition_left(a2.from_labels([1, 2]), 1) == {s2: 1, a2.w0: 1}


def test_theta_rules_match_products(hecke_b3):
    system = hecke_b3.system
    for w in system.elements[::4]:
        for s in range(system.rank):
            assert hecke_b3.theta_composition_right(w, s) == hecke_b3.theta_from_product(w, s, "right")
            assert hecke_b3.theta_composition_left(w, s) == hecke_b3.theta_from_product(w, s, "left")


def test_sigma_swaps_theta_sides(hecke_b3):
    system = hecke_b3.system
    for w in system.elements:
        for s in range(system.rank):
            mirrored = hecke_b3.sigma_image(hecke_b3.theta_composition_right(w.inverse, s))
            assert hecke_b3.theta_composition_left(w, s) == mirrored


def test_requires_table(a2):
    with pytest.raises(KazhdanLusztigError):
        HeckeAlgebra(a2).kl_basis(a2.w0)


def test_mixed_systems(a2, a3):
    with pytest.raises(MixedSystemError):
        HeckeElement.standard(a2.w0) + HeckeElement.standard(a3.w0)


def test_json_form(hecke_a2):
    c_s = hecke_a2.kl_basis(hecke_a2.system.generators[0])
    assert c_s.to_json() == [([], {"1": 1}), ([1], {"0": 1})]
