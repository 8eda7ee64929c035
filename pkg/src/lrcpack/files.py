"""JSON documents: packings, resolvable packings, difference matrices, codes."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .codes import SystematicCode


def read_json(path: str | os.PathLike) -> dict:
    with open(path) as fh:
        return json.load(fh)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def write_json(path: str | os.PathLike, doc) -> None:
    """Write through a temporary file and rename, so failures leave nothing behind."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps(doc))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def code_document(code: SystematicCode, provenance: dict | None = None) -> dict:
    doc = code.to_dict()
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def load_code(path: str | os.PathLike) -> tuple[SystematicCode, dict | None]:
    doc = read_json(path)
    return SystematicCode.from_dict(doc), doc.get("provenance")
