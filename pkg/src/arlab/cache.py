"""On-disk result cache: one JSON file per exact result, addressed by a
digest of the problem key.  Only exact results are stored; the statistics
block is the single part of a payload allowed to differ between a cached
and a fresh run."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Optional

ENV_VAR = "ARLAB_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "arlab"


def cache_key(kind: str, n: int, target_code: Optional[str],
              family_name: Optional[str], extra: Optional[dict] = None) -> str:
    payload = json.dumps(
        {"schema": 1, "kind": kind, "n": n, "target": target_code,
         "family": family_name, "extra": extra or {}},
        sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: Optional[Path] = None, enabled: bool = True):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.enabled = enabled

    def _path(self, key: str) -> Path:
        return self.directory / key[:2] / f"{key}.json"

    def load(self, key: str) -> Optional[dict]:
        if not self.enabled:
            return None
        path = self._path(key)
        if not path.is_file():
            return None
        try:
            with open(path) as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None

    def store(self, key: str, payload: dict):
        if not self.enabled:
            return
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        tmp.replace(path)
