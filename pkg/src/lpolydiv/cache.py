"""Persistent point-count cache: one JSON record per line.

Each record stores family, k, p, m, the modulus coefficients (ascending, so
the key pins the exact field presentation), the count, and a timestamp.  The
timestamp is informational; lookups key on everything else and re-reads are
bit-exact because counts are integers end to end.
"""

from __future__ import annotations

import json
import time
from pathlib import Path
from typing import Sequence

from .curves import CurveSpec


class CountCache:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._records: dict[tuple, int] | None = None

    @staticmethod
    def _key(spec: CurveSpec, m: int, modulus: Sequence[int]) -> tuple:
        return (spec.family, spec.k, spec.p, m, tuple(modulus))

    def _load(self) -> dict[tuple, int]:
        if self._records is None:
            self._records = {}
            if self.path.exists():
                with self.path.open() as fh:
                    for line in fh:
                        line = line.strip()
                        if not line:
                            continue
                        rec = json.loads(line)
                        key = (
                            rec["family"],
                            int(rec["k"]),
                            int(rec["p"]),
                            int(rec["m"]),
                            tuple(int(c) for c in rec["modulus"]),
                        )
                        self._records[key] = int(rec["n"])
        return self._records

    def lookup(self, spec: CurveSpec, m: int, modulus: Sequence[int]) -> int | None:
        return self._load().get(self._key(spec, m, modulus))

    def store(self, spec: CurveSpec, m: int, modulus: Sequence[int], n: int) -> None:
        rec = {
            "family": spec.family,
            "k": spec.k,
            "p": spec.p,
            "m": m,
            "modulus": list(modulus),
            "n": n,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        self._load()[self._key(spec, m, modulus)] = n
