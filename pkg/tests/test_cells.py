import numpy as np
import pytest

from src.coxeter.parabolic import all_subsets
from src.kazhdan_lusztig.cells import _reachability, a_function, cell_decomposition, check_a_parabolic
from src.kazhdan_lusztig.klpoly import KazhdanLusztigError


def test_a2_two_sided_cells(cells_a2):
    a2 = cells_a2.system
    assert cells_a2.count == 3
    assert [len(c) for c in cells_a2.cells] == [1, 4, 1]
    assert [cells_a2.a_value(w) for w in a2.elements] == [0, 1, 1, 1, 1, 3]


def test_identity_is_the_top_cell(cells_a3):
    a3 = cells_a3.system
    e = a3.identity
    assert cells_a3.cell_of(e) == 0
    for x in a3.elements:
        assert cells_a3.leq(x, e)
        assert cells_a3.leq(a3.w0, x)
    assert not cells_a3.leq(e, a3.w0)


def test_preorder_is_reflexive_and_transitive(kl_a4):
    left = cell_decomposition(kl_a4, "left")
    reach = left.preorder
    assert reach.shape == (26, 26)
    assert reach.diagonal().all()
    composed = (reach.astype(int) @ reach.astype(int)) > 0
    assert (composed == reach).all()


def test_reachability_follows_paths():
    chain = np.zeros((4, 4), dtype=bool)
    chain[0, 1] = chain[1, 2] = True
    reach = _reachability(chain)
    assert reach[0, 2] and reach[0, 0] and reach[3, 3]
    assert not reach[2, 0]
    assert not reach[0, 3]


@pytest.mark.parametrize("table_name, two_sided, one_sided", [
    ("kl_a2", 3, 4),
    ("kl_a3", 5, 10),
    ("kl_a4", 7, 26),
])
def test_cell_counts_in_type_a(request, table_name, two_sided, one_sided):
    table = request.getfixturevalue(table_name)
    assert cell_decomposition(table, "twosided").count == two_sided
    assert cell_decomposition(table, "left").count == one_sided
    assert cell_decomposition(table, "right").count == one_sided


def test_left_and_right_cells_are_inverse(kl_b3):
    system = kl_b3.system
    left = cell_decomposition(kl_b3, "left")
    right = cell_decomposition(kl_b3, "right")
    assert {frozenset(x.inverse for x in cell) for cell in left.partition()} == right.partition()


def test_a_function_on_b3(kl_b3):
    cells = cell_decomposition(kl_b3, "twosided")
    system = kl_b3.system
    assert a_function(cells, system.identity) == 0
    assert a_function(cells, system.w0) == 9
    for s in system.generators:
        assert a_function(cells, s) == 1
    for subset in all_subsets(system.rank):
        assert check_a_parabolic(cells, subset)


def test_a_function_constant_on_cells(cells_a3):
    for cell_id in range(cells_a3.count):
        assert len({cells_a3.a_value(w) for w in cells_a3.members(cell_id)}) == 1


def test_a_function_needs_two_sided_cells(kl_a2):
    left = cell_decomposition(kl_a2, "left")
    with pytest.raises(KazhdanLusztigError):
        left.a_value(kl_a2.system.w0)


def test_unknown_side(kl_a2):
    with pytest.raises(ValueError):
        cell_decomposition(kl_a2, "diagonal")


def test_records(cells_a2):
    records = cells_a2.records()
    assert [r.cell_id for r in records] == [0, 1, 2]
    assert records[0].members == [[]]
    assert records[0].a_value == 0
    assert records[0].below == [1, 2]
    assert records[2].members == [[1, 2, 1]]
    assert records[2].below == []
    assert records[1].members == [[1], [2], [1, 2], [2, 1]]
