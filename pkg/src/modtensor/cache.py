"""Persistent memo of simple characters (chi-basis expansions) as one JSON document."""

from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path

from . import simples

FORMAT = "modtensor-simple-chi"
VERSION = 1


def load(path: str | os.PathLike | None) -> int:
    """Seed the in-process memo from ``path``; returns the number of entries read.

    A missing file is not an error.  An unreadable or malformed file is ignored
    with a warning and rebuilt on the next save.
    """
    if path is None or not Path(path).exists():
        return 0
    try:
        doc = json.loads(Path(path).read_text())
        if doc.get("format") != FORMAT or doc.get("version") != VERSION:
            raise ValueError(f"unsupported cache header {doc.get('format')!r} v{doc.get('version')!r}")
        entries = {}
        for e in doc["entries"]:
            key = (str(e["system"]), int(e["p"]), (int(e["weight"][0]), int(e["weight"][1])))
            entries[key] = tuple(((int(a), int(b)), int(c)) for a, b, c in e["chi"])
    except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
        print(f"warning: ignoring corrupt cache {path}: {exc}", file=sys.stderr)
        return 0
    simples.import_memo(entries)
    return len(entries)


def dump_document() -> dict:
    entries = [
        {"system": system, "p": p, "weight": list(weight), "chi": [[a, b, c] for (a, b), c in chi]}
        for (system, p, weight), chi in sorted(simples.export_memo().items())
    ]
    return {"format": FORMAT, "version": VERSION, "entries": entries}


def save(path: str | os.PathLike) -> None:
    """Write the memo atomically (temp file in the same directory, then rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".modtensor-", suffix=".json", dir=path.parent)
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(dump_document(), fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
