"""Content-addressed cache for cohomology tables.

Keys hash the canonical ideal data plus the field and engine version, so
permuting generators in the input still hits, while a different prime
field or engine release misses.  Writes are atomic (temp file + rename);
corrupt entries are evicted, never trusted.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Optional

from . import ENGINE_VERSION
from .cech import CohomologyTable
from .fields import FieldSpec
from .ideals import SquareFreeIdeal

ENV_CACHE_DIR = "SVTLAB_CACHE_DIR"


def default_cache_dir() -> str:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache"))
    return os.path.join(base, "svtlab")


def cache_key(I: SquareFreeIdeal, field: FieldSpec) -> str:
    canonical = {
        "variables": list(I.context.names),
        "generators": sorted(I.generators),
        "field": field.label(),
    }
    blob = json.dumps(canonical, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def _entry_path(cache_dir: str, key: str) -> str:
    return os.path.join(cache_dir, key + ".json")


def lookup(cache_dir: str, I: SquareFreeIdeal, field: FieldSpec) -> Optional[CohomologyTable]:
    path = _entry_path(cache_dir, cache_key(I, field))
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
        if data.get("engine") != ENGINE_VERSION:
            return None
        dims = {}
        for e in data["entries"]:
            mask = I.context.mask_of(e["pattern"])
            if e["dim"] <= 0:
                raise ValueError("cached dimension must be positive")
            dims[(int(e["i"]), mask)] = int(e["dim"])
        return CohomologyTable(I, field, dims)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError):
        os.remove(path)
        return None


def store(cache_dir: str, I: SquareFreeIdeal, field: FieldSpec, table: CohomologyTable):
    os.makedirs(cache_dir, exist_ok=True)
    payload = {"engine": ENGINE_VERSION, "entries": table.entries()}
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, _entry_path(cache_dir, cache_key(I, field)))
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def clear(cache_dir: str) -> int:
    if not os.path.isdir(cache_dir):
        return 0
    removed = 0
    for name in os.listdir(cache_dir):
        if name.endswith(".json"):
            os.remove(os.path.join(cache_dir, name))
            removed += 1
    return removed


def stats(cache_dir: str) -> dict:
    if not os.path.isdir(cache_dir):
        return {"dir": cache_dir, "entries": 0, "bytes": 0}
    entries = [n for n in os.listdir(cache_dir) if n.endswith(".json")]
    size = sum(os.path.getsize(os.path.join(cache_dir, n)) for n in entries)
    return {"dir": cache_dir, "entries": len(entries), "bytes": size}
