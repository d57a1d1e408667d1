"""On-disk formats for word-length series.

Two interchangeable encodings, both paired with a JSON sidecar carrying
provenance (category, per-document offsets, drop counts, config hash):

* binary ``.wls``: 8-byte magic ``WLSERIES``, uint32 format version,
  uint64 element count, then little-endian uint16 lengths;
* text ``.wlt``: one decimal length per line.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .errors import IngestError
from .ingest import DropStats, WordLengthSeries

MAGIC = b"WLSERIES"
FORMAT_VERSION = 1

BINARY_SUFFIX = ".wls"
TEXT_SUFFIX = ".wlt"


def sidecar_path(series_path: Path) -> Path:
    return series_path.with_suffix(series_path.suffix + ".json")


def category_filename(language: str, genre: str, fmt: str = "binary") -> str:
    """Filesystem-safe file name for one category series."""
    def clean(tag: str) -> str:
        return "".join(c if c.isalnum() or c in "-_" else "-" for c in tag)

    suffix = BINARY_SUFFIX if fmt == "binary" else TEXT_SUFFIX
    return f"{clean(language)}__{clean(genre)}{suffix}"


def write_series(
    path: Path,
    series: WordLengthSeries,
    *,
    fmt: str = "binary",
    config: dict | None = None,
    config_hash: str = "",
    tool_version: str = "",
    drops: dict[str, DropStats] | None = None,
) -> Path:
    """Write one series plus its JSON sidecar; returns the series path."""
    path.parent.mkdir(parents=True, exist_ok=True)
    values = np.asarray(series.lengths, dtype=np.uint16)
    if fmt == "binary":
        with open(path, "wb") as fh:
            fh.write(MAGIC)
            fh.write(struct.pack("<I", FORMAT_VERSION))
            fh.write(struct.pack("<Q", values.shape[0]))
            fh.write(values.astype("<u2", copy=False).tobytes())
    elif fmt == "text":
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(f"{int(v)}\n" for v in values)
    else:
        raise ValueError(f"unknown series format {fmt!r}")

    sidecar = {
        "format": fmt,
        "format_version": FORMAT_VERSION,
        "language": series.language,
        "genre": series.genre,
        "total_words": int(values.shape[0]),
        "source_ids": [
            {"id": doc_id, "start": start, "end": end}
            for doc_id, start, end in series.source_ids
        ],
        "drops": {
            doc_id: stats.to_dict() for doc_id, stats in (drops or {}).items()
        },
        "config": config or {},
        "config_hash": config_hash,
        "tool_version": tool_version,
    }
    with open(sidecar_path(path), "w", encoding="utf-8", newline="\n") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def read_series(path: Path) -> WordLengthSeries:
    """Load a series file (binary or text) together with its sidecar."""
    if not path.is_file():
        raise IngestError(f"series file not found: {path}")
    meta_path = sidecar_path(path)
    if not meta_path.is_file():
        raise IngestError(f"series sidecar not found: {meta_path}")
    try:
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise IngestError(f"malformed sidecar {meta_path}: {exc}") from exc

    if path.suffix == BINARY_SUFFIX:
        raw = path.read_bytes()
        header = len(MAGIC) + 4 + 8
        if len(raw) < header or raw[: len(MAGIC)] != MAGIC:
            raise IngestError(f"{path} is not a word-length series file")
        (version,) = struct.unpack_from("<I", raw, len(MAGIC))
        if version != FORMAT_VERSION:
            raise IngestError(f"{path}: unsupported format version {version}")
        (count,) = struct.unpack_from("<Q", raw, len(MAGIC) + 4)
        values = np.frombuffer(raw, dtype="<u2", offset=header)
        if values.shape[0] != count:
            raise IngestError(f"{path}: truncated series ({values.shape[0]} != {count})")
    elif path.suffix == TEXT_SUFFIX:
        try:
            values = np.array(
                [int(line) for line in path.read_text(encoding="utf-8").split()],
                dtype=np.uint16,
            )
        except (ValueError, OverflowError) as exc:
            raise IngestError(f"{path}: malformed text series: {exc}") from exc
    else:
        raise IngestError(f"unknown series suffix: {path}")

    return WordLengthSeries(
        lengths=values,
        language=meta.get("language", ""),
        genre=meta.get("genre", ""),
        source_ids=[
            (rec["id"], rec["start"], rec["end"])
            for rec in meta.get("source_ids", [])
        ],
    )


def load_series_dir(directory: Path) -> list[WordLengthSeries]:
    """Read every series file in a directory, sorted by (language, genre)."""
    if not directory.is_dir():
        raise IngestError(f"series directory not found: {directory}")
    paths = sorted(
        p
        for p in directory.iterdir()
        if p.suffix in (BINARY_SUFFIX, TEXT_SUFFIX)
    )
    if not paths:
        raise IngestError(f"no series files in {directory}")
    series = [read_series(p) for p in paths]
    series.sort(key=lambda s: (s.language, s.genre))
    return series
