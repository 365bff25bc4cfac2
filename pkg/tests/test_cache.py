import json

import pytest

from src.kazhdan_lusztig.cache import CacheFormatError, cache_path, dump_table, load_table, save_table
from src.kazhdan_lusztig.klpoly import KLTable


def test_path_names_type_rank_and_version(tmp_path, a3):
    assert cache_path(tmp_path, a3).name == "kl_A3_v1.json"


def test_save_and_load(tmp_path, kl_a3):
    path = save_table(kl_a3, tmp_path)
    assert path.exists()
    assert not path.with_suffix(".json.tmp").exists()
    loaded = load_table(kl_a3.system, tmp_path)
    assert list(loaded.records()) == list(kl_a3.records())
    assert [loaded.delta(w) for w in kl_a3.system.elements] == [kl_a3.delta(w) for w in kl_a3.system.elements]


def test_missing_file(tmp_path, a2):
    assert load_table(a2, tmp_path) is None


def test_file_is_canonical(kl_b3):
    rebuilt = KLTable.build(kl_b3.system, workers=3)
    assert dump_table(rebuilt) == dump_table(kl_b3)
    document = json.loads(dump_table(kl_b3))
    assert document["header"] == {"count": len(kl_b3), "rank": 3, "type": "B", "version": 1}
    assert document["records"][0] == {"p": [1], "w": [], "y": []}


def test_corrupt_file(tmp_path, a2):
    cache_path(tmp_path, a2).write_text("{not json", encoding="utf-8")
    with pytest.raises(CacheFormatError):
        load_table(a2, tmp_path)


def test_schema_violation(tmp_path, a2):
    cache_path(tmp_path, a2).write_text(json.dumps({"header": {"type": "A"}, "records": []}), encoding="utf-8")
    with pytest.raises(CacheFormatError):
        load_table(a2, tmp_path)


def test_header_of_another_system(tmp_path, kl_a2, a3):
    text = dump_table(kl_a2)
    cache_path(tmp_path, a3).write_text(text, encoding="utf-8")
    with pytest.raises(CacheFormatError, match="header describes A2"):
        load_table(a3, tmp_path)


def test_count_mismatch(tmp_path, kl_a2):
    document = json.loads(dump_table(kl_a2))
    document["records"].pop()
    cache_path(tmp_path, kl_a2.system).write_text(json.dumps(document), encoding="utf-8")
    with pytest.raises(CacheFormatError, match="count"):
        load_table(kl_a2.system, tmp_path)


def test_diagonal_entry_must_be_one(tmp_path, kl_a2):
    document = json.loads(dump_table(kl_a2))
    document["records"][0]["p"] = [2]
    cache_path(tmp_path, kl_a2.system).write_text(json.dumps(document), encoding="utf-8")
    with pytest.raises(CacheFormatError, match="expected 1"):
        load_table(kl_a2.system, tmp_path)


def test_record_outside_the_bruhat_interval(tmp_path, kl_a2):
    document = json.loads(dump_table(kl_a2))
    record = next(r for r in document["records"] if r["w"] == [1] and r["y"] == [])
    record["y"] = [2]
    cache_path(tmp_path, kl_a2.system).write_text(json.dumps(document), encoding="utf-8")
    with pytest.raises(CacheFormatError, match="not below"):
        load_table(kl_a2.system, tmp_path)
