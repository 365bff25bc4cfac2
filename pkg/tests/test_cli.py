import json

import pytest

from src.category_o.main import main
from src.kazhdan_lusztig.cache import dump_table


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def test_pd_table_json(capsys):
    code, out, _ = run(capsys, "pd-table", "--rank", "2", "--json", "--no-cache", "--quiet")
    assert code == 0
    document = json.loads(out)
    assert document["schema"] == 1
    assert [row["pd_tilting"] for row in document["rows"]] == [0, 1, 1, 1, 1, 3]
    assert [row["pd_injective"] for row in document["rows"]] == [6, 2, 2, 2, 2, 0]
    assert document["metadata"]["global_dimension"] == 6
    assert "pd_tilting" in document["formulas"]


def test_pd_table_is_reproducible(capsys, cache_dir):
    first = run(capsys, "pd-table", "--type", "B", "--rank", "2", "--format", "csv", "--cache-dir", cache_dir, "--quiet")
    second = run(capsys, "pd-table", "--type", "B", "--rank", "2", "--format", "csv", "--cache-dir", cache_dir, "--quiet")
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
    assert first[1].splitlines()[0].startswith("word,length,a_value")


def test_pd_table_markdown(capsys):
    code, out, _ = run(capsys, "pd-table", "--rank", "1", "--format", "markdown", "--no-cache", "--quiet")
    assert code == 0
    assert out.startswith("# Projective dimensions in type A1")


def test_kl_plain_output(capsys):
    code, out, _ = run(capsys, "kl", "1324", "3412", "--rank", "3", "--no-cache", "--quiet")
    assert code == 0
    assert out == "1 + q\n"


def test_kl_with_oracle(capsys):
    code, out, _ = run(capsys, "kl", "e", "sts", "--rank", "2", "--verify", "--json", "--no-cache", "--quiet")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["P"] == "1"
    assert row["verified"] is True
    assert row["mu"] == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--rank", "2", "--json", "--no-cache", "--quiet")
    assert code == 0
    document = json.loads(out)
    assert document["metadata"]["passed"] is True
    assert {row["check"] for row in document["rows"]} >= {"kl-oracle", "a2-table", "quiver"}


def test_verify_selected_checks(capsys):
    code, out, _ = run(capsys, "verify", "--type", "B", "--rank", "2", "--check", "cells", "--check", "mobius",
                       "--format", "csv", "--no-cache", "--quiet")
    assert code == 0
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["cells", "mobius"]


def test_cells(capsys):
    code, out, _ = run(capsys, "cells", "--rank", "2", "--side", "left", "--json", "--no-cache", "--quiet")
    assert code == 0
    document = json.loads(out)
    assert document["metadata"] == {"count": 4, "side": "left"}
    assert document["rows"][0]["member_words"] == [[]]


def test_ext_linear(capsys):
    code, out, _ = run(capsys, "ext", "--rank", "2", "--family", "std-std-linear", "--x", "sts", "--y", "e",
                       "--json", "--no-cache", "--quiet")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert (row["i"], row["j"], row["dim"], row["total_degree"]) == (3, -3, 1, 3)


def test_ext_defaults(capsys):
    code, out, _ = run(capsys, "ext", "--rank", "2", "--family", "ext1-dominant", "--x", "sts",
                       "--json", "--no-cache", "--quiet")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert (row["i"], row["j"], row["dim"]) == (1, 1, 2)

    code, out, _ = run(capsys, "ext", "--rank", "2", "--family", "from-dominant", "--y", "sts",
                       "--json", "--no-cache", "--quiet")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert (row["i"], row["j"], row["dim"]) == (2, -1, 2)


def test_ext_std_simple_lists_degrees(capsys):
    code, out, _ = run(capsys, "ext", "--rank", "3", "--family", "std-simple", "--x", "3412", "--y", "1324",
                       "--json", "--no-cache", "--quiet")
    assert code == 0
    assert [row["dim"] for row in json.loads(out)["rows"]] == [0, 1, 0, 1, 0]


def test_ext_duality(capsys):
    code, out, _ = run(capsys, "ext", "--rank", "2", "--family", "duality", "--x", "sts", "--y", "e",
                       "--json", "--no-cache", "--quiet")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 2
    assert rows[0]["dim"] == rows[1]["dim"] == 1


def test_ext_missing_element(capsys):
    code, _, err = run(capsys, "ext", "--rank", "2", "--family", "carlin", "--x", "sts", "--no-cache")
    assert code == 2
    assert "[ERROR]" in err


def test_quiver(capsys):
    code, out, _ = run(capsys, "quiver", "--rank", "2", "--json", "--no-cache", "--quiet")
    assert code == 0
    metadata = json.loads(out)["metadata"]
    assert metadata == {"arrows": 9, "hasse_edges": 8, "incidence_dimension": 19}


@pytest.mark.parametrize("argv", [
    ["pd-table", "--type", "E", "--rank", "6"],
    ["pd-table", "--type", "D", "--rank", "3"],
    ["pd-table", "--rank", "8"],
    ["kl", "9", "1", "--rank", "2"],
])
def test_configuration_errors(capsys, argv):
    code, out, err = run(capsys, *argv, "--no-cache")
    assert code == 2
    assert out == ""
    assert "[ERROR]" in err


def test_cache_is_written_and_reused(capsys, cache_dir):
    code, _, err = run(capsys, "pd-table", "--rank", "2", "--cache-dir", cache_dir)
    assert code == 0
    assert "Saved KL table" in err
    code, _, err = run(capsys, "pd-table", "--rank", "2", "--cache-dir", cache_dir)
    assert code == 0
    assert "Loaded KL table" in err


def test_corrupt_cache_is_rebuilt(capsys, tmp_path):
    (tmp_path / "kl_A2_v1.json").write_text("garbage", encoding="utf-8")
    code, _, err = run(capsys, "pd-table", "--rank", "2", "--cache-dir", str(tmp_path))
    assert code == 0
    assert "[WARNING]" in err
    assert json.loads((tmp_path / "kl_A2_v1.json").read_text(encoding="utf-8"))["header"]["type"] == "A"


def test_tampered_cache_is_rebuilt(capsys, tmp_path, kl_a2):
    document = json.loads(dump_table(kl_a2))
    document["records"][0]["p"] = [2]
    (tmp_path / "kl_A2_v1.json").write_text(json.dumps(document), encoding="utf-8")
    code, _, err = run(capsys, "pd-table", "--rank", "2", "--cache-dir", str(tmp_path))
    assert code == 0
    assert "[WARNING]" in err
    rebuilt = json.loads((tmp_path / "kl_A2_v1.json").read_text(encoding="utf-8"))
    assert rebuilt["records"][0]["p"] == [1]


def test_cache_dir_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("KLO_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "pd-table", "--rank", "1", "--quiet")
    assert code == 0
    assert (tmp_path / "kl_A1_v1.json").exists()


def test_quiet_keeps_stderr_empty(capsys):
    code, _, err = run(capsys, "pd-table", "--rank", "1", "--no-cache", "--quiet")
    assert code == 0
    assert err == ""


def test_workers_help_states_no_speedup(capsys):
    with pytest.raises(SystemExit):
        main(["pd-table", "--help"])
    out = " ".join(capsys.readouterr().out.split())
    assert "no speedup under the GIL" in out
