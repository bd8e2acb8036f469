"""Optional on-disk memoization for expensive derivations.

Caching is off unless the BKS5_CACHE_DIR environment variable names a
directory.  Entries are JSON files carrying the SHA-256 of their inputs;
a missing, corrupt, or stale entry is silently rebuilt.  Writes are
atomic (temp file + rename) so interrupted runs never leave bad entries.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path


def cache_dir() -> Path | None:
    value = os.environ.get("BKS5_CACHE_DIR")
    return Path(value) if value else None


def content_key(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()


def memo_json(name: str, key_obj, builder):
    """Return builder() with transparent JSON caching under ``name``.

    The builder result must round-trip through JSON; callers re-shape
    (e.g. back to tuples) on load.
    """
    directory = cache_dir()
    if directory is None:
        return builder()
    key = content_key(key_obj)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / (name + ".json")
    if path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("key") == key:
                return data["value"]
        except (ValueError, KeyError):
            pass
    value = builder()
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump({"key": key, "value": value}, fh)
    os.replace(tmp, path)
    return value
