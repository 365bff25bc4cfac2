"""
On-disk cache for completed KL tables.

One canonical JSON file per (type, rank, format version): sorted keys and
records in canonical (w, then y) order, so files are byte-reproducible.
Elements are stored as ShortLex words in 1-based labels.
"""

import json
import os
from pathlib import Path
from typing import Dict, Optional

import jsonschema
from pydantic import ValidationError

from src.coxeter.system import CoxeterError, CoxeterSystem
from src.kazhdan_lusztig.config import CACHE_FILE_PATTERN, CACHE_FORMAT_VERSION, CACHE_SCHEMA
from src.kazhdan_lusztig.klpoly import Column, KazhdanLusztigError, KLTable
from src.kazhdan_lusztig.models import KLCacheHeader, KLCacheRecord
from src.kazhdan_lusztig.polynomials import IntPolynomial


class CacheFormatError(KazhdanLusztigError):
    """Raised for a cache file that is unreadable or describes another table."""


def cache_path(cache_dir: Path, system: CoxeterSystem, version: int = CACHE_FORMAT_VERSION) -> Path:
    return Path(cache_dir) / CACHE_FILE_PATTERN.format(
        type_label=system.type_label, rank=system.rank, version=version
    )


def dump_table(table: KLTable) -> str:
    """Canonical JSON text of a table."""
    records = [
        KLCacheRecord(y=y.labels(), w=w.labels(), p=list(p.coefficients)).model_dump()
        for y, w, p in table.records()
    ]
    header = KLCacheHeader(
        type=table.system.type_label,
        rank=table.system.rank,
        version=CACHE_FORMAT_VERSION,
        count=len(records),
    )
    document = {"header": header.model_dump(), "records": records}
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"


def save_table(table: KLTable, cache_dir: Path) -> Path:
    """
    Write a table to its cache file, replacing any previous file atomically.

    Returns:
        Path of the written file
    """
    path = cache_path(cache_dir, table.system)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".json.tmp")
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(dump_table(table))
    os.replace(tmp, path)
    return path


def load_table(system: CoxeterSystem, cache_dir: Path) -> Optional[KLTable]:
    """
    Read the cached table of a system.

    Returns:
        KLTable, or None when no cache file exists

    Raises:
        CacheFormatError: if the file is corrupt, belongs to another table or
            breaks the KL table invariants
    """
    path = cache_path(cache_dir, system)
    if not path.exists():
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
        jsonschema.validate(document, CACHE_SCHEMA)
        header = KLCacheHeader(**document["header"])
        records = [KLCacheRecord(**r) for r in document["records"]]
    except (OSError, json.JSONDecodeError, jsonschema.ValidationError, ValidationError) as e:
        raise CacheFormatError(f"{path.name}: {e.__class__.__name__}: {str(e).splitlines()[0]}") from e

    expected = (system.type_label, system.rank, CACHE_FORMAT_VERSION)
    if (header.type, header.rank, header.version) != expected:
        raise CacheFormatError(
            f"{path.name}: header describes {header.type}{header.rank} v{header.version}, "
            f"expected {system.label} v{CACHE_FORMAT_VERSION}"
        )
    if header.count != len(records):
        raise CacheFormatError(f"{path.name}: header count {header.count} != {len(records)} records")

    columns: Dict[int, Column] = {}
    try:
        for record in records:
            y = system.from_labels(record.y)
            w = system.from_labels(record.w)
            columns.setdefault(w.index, {})[y.index] = IntPolynomial(record.p)
    except CoxeterError as e:
        raise CacheFormatError(f"{path.name}: bad element word: {e}") from e
    if len(columns) != system.order:
        raise CacheFormatError(f"{path.name}: {len(columns)} columns for {system.order} elements")
    table = KLTable.from_columns(system, columns)
    problems = table.check_invariants(limit=1)
    if problems:
        raise CacheFormatError(f"{path.name}: {problems[0]}")
    return table
