"""
Configuration for the Kazhdan-Lusztig engine

Caps for the independent oracle, the cache format version and the JSON schema
that every cache file header must satisfy.
"""

# Largest group the bar-invariance oracle will solve
ORACLE_CAP = 1_000

# Bump when the cache record layout changes; old files are then recomputed
CACHE_FORMAT_VERSION = 1

# Cache file name pattern: one file per (type, rank, version)
CACHE_FILE_PATTERN = "kl_{type_label}{rank}_v{version}.json"

# Expected structure of an on-disk KL table
CACHE_SCHEMA = {
    "type": "object",
    "required": ["header", "records"],
    "properties": {
        "header": {
            "type": "object",
            "required": ["type", "rank", "version", "count"],
            "properties": {
                "type": {"type": "string"},
                "rank": {"type": "integer", "minimum": 1},
                "version": {"type": "integer"},
                "count": {"type": "integer", "minimum": 0},
            },
        },
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["y", "w", "p"],
                "properties": {
                    "y": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "w": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "p": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
    },
}
