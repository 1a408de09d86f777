"""Run manifests: digests of inputs and configuration plus stage timings.

The manifest goes to stderr (or a side file), never into the machine output,
so reruns stay byte-identical while still being attributable.
"""

from __future__ import annotations

import hashlib
import json
import time
from pathlib import Path


def file_digest(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def config_digest(config: dict) -> str:
    canon = json.dumps(config, sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


class RunManifest:
    """Collects input digests and stage timings for one CLI command."""

    def __init__(self, command: str, config: dict):
        from . import __version__

        self.data = {
            "tool": "skb-forge",
            "version": __version__,
            "command": command,
            "config": config,
            "config_digest": config_digest(config),
            "inputs": {},
            "timings": {},
        }
        self._marks: dict[str, float] = {}

    def add_input(self, name: str, path: str | Path) -> None:
        self.data["inputs"][name] = {"path": str(path), "sha256": file_digest(path)}

    def start(self, stage: str) -> None:
        self._marks[stage] = time.perf_counter()

    def stop(self, stage: str) -> None:
        self.data["timings"][stage] = round(time.perf_counter() - self._marks[stage], 6)

    def as_json(self) -> str:
        return json.dumps(self.data, sort_keys=True, ensure_ascii=False, indent=2)
