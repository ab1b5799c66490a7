"""Append-only on-disk store for homomorphism counts.

One record per line: ``hex(cert K) hex(cert G) count crc32``. A record whose
checksum fails (a torn write, say) ends the valid prefix; the file is
truncated there on open and later appends continue from it.
"""
from __future__ import annotations

import os
import threading
import zlib
from pathlib import Path

ENV_VAR = "BLG_CACHE_DIR"
FILENAME = "homcounts.log"


def _line(k: bytes, g: bytes, count: int) -> str:
    body = f"{k.hex()} {g.hex()} {count}"
    return f"{body} {zlib.crc32(body.encode()):08x}\n"


class LogStore:
    """``get``/``put`` store backed by a checksummed append-only log."""

    def __init__(self, directory: str | Path) -> None:
        self.path = Path(directory) / FILENAME
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        self._data: dict[tuple[bytes, bytes], int] = {}
        self.dropped = 0
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        raw = self.path.read_bytes()
        good = 0
        for line in raw.splitlines(keepends=True):
            rec = self._parse(line)
            if rec is None:
                break
            self._data[rec[0]] = rec[1]
            good += len(line)
        if good < len(raw):
            self.dropped = raw[good:].count(b"\n") + (0 if raw.endswith(b"\n") else 1)
            with open(self.path, "r+b") as fh:
                fh.truncate(good)

    @staticmethod
    def _parse(line: bytes):
        if not line.endswith(b"\n"):
            return None
        parts = line.decode("ascii", "replace").split()
        if len(parts) != 4:
            return None
        body = " ".join(parts[:3])
        if f"{zlib.crc32(body.encode()):08x}" != parts[3]:
            return None
        try:
            return (bytes.fromhex(parts[0]), bytes.fromhex(parts[1])), int(parts[2])
        except ValueError:
            return None

    def get(self, key: tuple[bytes, bytes]) -> int | None:
        with self._lock:
            return self._data.get(key)

    def put(self, key: tuple[bytes, bytes], count: int) -> None:
        with self._lock:
            if key in self._data:
                return
            self._data[key] = count
            with open(self.path, "a", encoding="ascii") as fh:
                fh.write(_line(*key, count))

    def __len__(self) -> int:
        return len(self._data)


def store_from_env() -> LogStore | None:
    d = os.environ.get(ENV_VAR)
    return LogStore(d) if d else None
