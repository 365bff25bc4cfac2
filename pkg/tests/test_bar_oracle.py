import numpy as np
import pytest

from src.coxeter.system import MixedSystemError
from src.kazhdan_lusztig.bar_oracle import BarInvarianceOracle, OracleCapError, kl_via_bar_invariance
from src.kazhdan_lusztig.polynomials import IntPolynomial


@pytest.mark.parametrize("table_name", ["kl_a2", "kl_a3", "kl_b3"])
def test_oracle_matches_recursion(request, table_name):
    table = request.getfixturevalue(table_name)
    oracle = BarInvarianceOracle(table.system)
    for w in table.system.elements:
        assert oracle.column(w) == table.column(w)


def test_oracle_samples_in_a4(kl_a4):
    system = kl_a4.system
    oracle = BarInvarianceOracle(system)
    rng = np.random.default_rng(7)
    for a, b in rng.integers(0, system.order, size=(500, 2)):
        y, w = system.elements[int(a)], system.elements[int(b)]
        assert oracle.kl_polynomial(y, w) == kl_a4.kl_polynomial(y, w)


def test_single_pair(a3):
    w = a3.from_labels([2, 1, 3, 2])
    assert kl_via_bar_invariance(a3.identity, w) == IntPolynomial([1, 1])


def test_cap(a4):
    with pytest.raises(OracleCapError):
        BarInvarianceOracle(a4, cap=100)


def test_mixed_systems(a2, a3):
    with pytest.raises(MixedSystemError):
        kl_via_bar_invariance(a2.identity, a3.w0)
