import json

import pytest

from src.category_o.report import Report, render, render_csv, render_json, render_markdown, render_table


@pytest.fixture
def report():
    return Report(
        command="pd-table",
        title="Example",
        type_label="A",
        rank=1,
        columns=["word", "length", "status"],
        rows=[
            {"word": "e", "length": 0, "status": None, "element": []},
            {"word": "s1", "length": 1, "status": "theorem", "element": [1]},
        ],
        formulas={"length": "l(w)"},
        metadata={"order": 2},
    )


def test_json_envelope(report):
    document = json.loads(render_json(report))
    assert document["schema"] == 1
    assert (document["command"], document["type"], document["rank"]) == ("pd-table", "A", 1)
    assert document["rows"][1]["element"] == [1]
    assert document["formulas"] == {"length": "l(w)"}
    assert document["metadata"] == {"order": 2}


def test_json_is_deterministic(report):
    assert render_json(report) == render_json(report.model_copy(deep=True))


def test_csv(report):
    lines = render_csv(report).splitlines()
    assert lines == ["word,length,status", "e,0,-", "s1,1,theorem"]


def test_markdown(report):
    text = render_markdown(report)
    assert text.startswith("# Example\n")
    assert "| word | length | status |" in text
    assert "| s1 | 1 | theorem |" in text
    assert "## Formulas" in text
    assert "- `length`: l(w)" in text


def test_markdown_escapes_pipes(report):
    report.rows[0]["word"] = "a|b"
    assert "a\\|b" in render_markdown(report)


def test_table(report):
    lines = render_table(report).splitlines()
    assert lines[0] == "Example"
    assert lines[2] == "word  length  status"
    assert lines[4] == "e     0       -"
    assert lines[-1] == "order: 2"


def test_plain_overrides_table(report):
    report.plain = "1 + q"
    assert render(report, "table") == "1 + q\n"
    assert json.loads(render(report, "json"))["rows"]


def test_lists_and_booleans_render():
    report = Report(command="kl", title="t", type_label="A", rank=1, columns=["w", "ok"],
                    rows=[{"w": [], "ok": True}, {"w": [1, 2], "ok": False}])
    assert render_csv(report).splitlines()[1:] == ["e,yes", "1 2,no"]
