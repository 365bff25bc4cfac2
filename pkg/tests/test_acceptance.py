"""End-to-end numbers that the tables must reproduce exactly."""

import json

import pytest

from src.category_o.homology import HomologyTable
from src.category_o.main import main
from src.category_o.poset import BruhatPoset
from src.coxeter.parabolic import all_subsets, parabolic_longest
from src.coxeter.system import build_system
from src.kazhdan_lusztig.cells import cell_decomposition
from src.kazhdan_lusztig.klpoly import KLTable


def pd_rows(capsys, *argv):
    assert main(["pd-table", *argv, "--json", "--no-cache", "--quiet"]) == 0
    return json.loads(capsys.readouterr().out)


def test_rank_one_table(capsys):
    document = pd_rows(capsys, "--rank", "1")
    assert [row["pd_tilting"] for row in document["rows"]] == [0, 1]
    assert [row["pd_injective"] for row in document["rows"]] == [2, 0]
    assert document["metadata"]["global_dimension"] == 2


def test_type_b_is_marked_conjectural(capsys):
    document = pd_rows(capsys, "--type", "B", "--rank", "2")
    assert {row["tilting_status"] for row in document["rows"]} == {"conjecture"}
    assert {row["injective_status"] for row in document["rows"]} == {"conjecture"}
    assert document["metadata"]["tilting_status"] == "conjecture"


def test_a2_cells_through_cli(capsys):
    assert main(["cells", "--rank", "2", "--json", "--no-cache", "--quiet"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert [row["a_value"] for row in rows] == [0, 1, 3]
    assert [row["size"] for row in rows] == [1, 4, 1]


def test_parallel_build_is_byte_identical(capsys):
    outputs = []
    for workers in ("1", "3"):
        assert main(["pd-table", "--rank", "4", "--workers", workers, "--format", "csv", "--no-cache", "--quiet"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


@pytest.mark.parametrize("table_name", ["kl_a2", "kl_a3", "kl_a4", "kl_b3"])
def test_a_function_well_defined(request, table_name):
    table = request.getfixturevalue(table_name)
    system = table.system
    # construction raises if two involutions of one cell disagree
    cells = cell_decomposition(table, "twosided")
    assert cells.a_value(system.identity) == 0
    assert cells.a_value(system.w0) == system.w0.length
    for subset in all_subsets(system.rank):
        longest = parabolic_longest(system, subset)
        assert cells.a_value(longest) == longest.length


@pytest.mark.parametrize("type_label, rank", [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3)])
def test_ext1_at_the_longest_element_is_the_rank(type_label, rank):
    system = build_system(type_label, rank)
    homology = HomologyTable(cell_decomposition(KLTable.build(system), "twosided"))
    assert homology.ext1_to_dominant(system.w0, system.w0.length - 2) == rank


def test_rank_one_poset(a1):
    poset = BruhatPoset(a1)
    s = a1.generators[0]
    assert poset.incidence_dimension() == 3
    assert poset.end_delta_quiver() == [(s, a1.identity)]
    assert poset.mobius(a1.identity, s) == -1


def test_verify_single_checks(capsys):
    assert main(["verify", "--rank", "2", "--check", "a2-table", "--no-cache", "--quiet"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["verify", "--type", "B", "--rank", "3", "--check", "mobius", "--no-cache", "--quiet"]) == 0
