"""Pairing interchange: canonical JSON objects and JSONL streams."""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Iterable, Iterator

from .surface import Pairing, PairingError, SurfaceSpec, validate_pairing


def surface_to_dict(surface: SurfaceSpec) -> dict:
    return {"components": list(surface.component_sizes), "genus": surface.genus_hint}


def surface_from_dict(data: dict) -> SurfaceSpec:
    if "components" not in data:
        raise PairingError("surface object needs a 'components' list")
    return SurfaceSpec(tuple(data["components"]), int(data.get("genus", 0)))


def pairing_to_dict(p: Pairing) -> dict:
    return {
        "surface": surface_to_dict(p.surface),
        "pairs": [[o, e] for o, e in p.pairs],
    }


def pairing_from_dict(data: dict) -> Pairing:
    if "pairs" not in data:
        raise PairingError("pairing object needs a 'pairs' list")
    return validate_pairing(surface_from_dict(data.get("surface", {})), data["pairs"])


def emit_pairing(p: Pairing) -> bytes:
    """Canonical one-line JSON form; parse-then-emit is byte identical."""
    return json.dumps(pairing_to_dict(p)).encode("ascii")


def parse_pairing_file(path: str | Path) -> Pairing:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise PairingError(f"{path}: malformed JSON: {exc}") from exc
    try:
        return pairing_from_dict(data)
    except PairingError as exc:
        exc.args = (f"{path}: {exc}",)  # keep the error type, add file context
        raise


def write_pairings_jsonl(fp: IO[str], pairings: Iterable[Pairing]) -> int:
    count = 0
    for p in pairings:
        fp.write(emit_pairing(p).decode("ascii"))
        fp.write("\n")
        count += 1
    return count


def read_pairings_jsonl(source: str | Path | IO[str]) -> Iterator[Pairing]:
    """Yield pairings from a JSONL path or open text stream; errors carry
    the line number."""
    if hasattr(source, "read"):
        yield from _read_jsonl(source, "<stream>")
        return
    path = Path(source)
    with path.open() as fp:
        yield from _read_jsonl(fp, str(path))


def _read_jsonl(fp: IO[str], label: str) -> Iterator[Pairing]:
    for lineno, line in enumerate(fp, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield pairing_from_dict(json.loads(line))
        except (json.JSONDecodeError, PairingError) as exc:
            raise PairingError(f"{label}: line {lineno}: {exc}") from exc
