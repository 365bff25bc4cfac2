import pytest

from src.coxeter.words import parse_element
from src.kazhdan_lusztig.klpoly import KLTable
from src.kazhdan_lusztig.polynomials import IntPolynomial

ONE = IntPolynomial.one()
ONE_PLUS_Q = IntPolynomial([1, 1])


def test_dihedral_polynomials_are_trivial(kl_a2, kl_b2):
    for table in (kl_a2, kl_b2):
        system = table.system
        for y in system.elements:
            for w in system.elements:
                expected = ONE if system.bruhat_leq(y, w) else IntPolynomial.zero()
                assert table.kl_polynomial(y, w) == expected


def test_singular_elements_of_s4(kl_a3):
    a3 = kl_a3.system
    w_3412 = parse_element(a3, "3412")
    w_4231 = parse_element(a3, "4231")
    assert kl_a3.kl_polynomial(parse_element(a3, "1324"), w_3412) == ONE_PLUS_Q
    assert kl_a3.kl_polynomial(a3.identity, w_3412) == ONE_PLUS_Q
    assert kl_a3.kl_polynomial(parse_element(a3, "2143"), w_4231) == ONE_PLUS_Q
    assert kl_a3.kl_polynomial(a3.identity, w_4231) == ONE_PLUS_Q
    assert kl_a3.mu(parse_element(a3, "1324"), w_3412) == 1
    assert kl_a3.delta(w_3412) == 1
    assert kl_a3.delta(a3.w0) == 0


def test_only_two_singular_columns_in_s4(kl_a3):
    singular = {w for _, w, p in kl_a3.records() if p != ONE}
    assert {str(parse_element(kl_a3.system, t)) for t in ("3412", "4231")} == {str(w) for w in singular}


def test_mu_of_a_simple_edge(kl_a2):
    a2 = kl_a2.system
    s1 = a2.generators[0]
    assert kl_a2.mu_lower(s1) == [(a2.identity, 1)]
    assert kl_a2.mu(a2.identity, s1) == 1
    assert kl_a2.mu(a2.identity, a2.from_labels([1, 2])) == 0
    assert kl_a2.mu_symmetric(s1, a2.identity) == 1


def test_invariants_hold(kl_a3, kl_b3, kl_a4):
    for table in (kl_a3, kl_b3, kl_a4):
        assert table.check_invariants(limit=None) == []


def test_inverse_symmetry(kl_b3):
    for y, w, p in kl_b3.records():
        assert kl_b3.kl_polynomial(y.inverse, w.inverse) == p


def test_records_are_canonical(kl_a2):
    keys = [(w.index, y.index) for y, w, _ in kl_a2.records()]
    assert keys == sorted(keys)
    assert len(kl_a2) == len(keys) == 19


@pytest.mark.parametrize("workers", [2, 4])
def test_worker_count_does_not_change_the_table(kl_b3, workers):
    parallel = KLTable.build(kl_b3.system, workers=workers)
    assert list(parallel.records()) == list(kl_b3.records())


def test_from_columns_rebuilds_mu_and_delta(kl_a3):
    system = kl_a3.system
    columns = {w.index: dict(kl_a3.column(w)) for w in system.elements}
    rebuilt = KLTable.from_columns(system, columns)
    for w in system.elements:
        assert rebuilt.delta(w) == kl_a3.delta(w)
        assert rebuilt.mu_lower(w) == kl_a3.mu_lower(w)
