import numpy as np
import pytest

from conftest import make_series
from lengram import seriesio
from lengram.errors import IngestError
from lengram.ingest import DropStats


def roundtrip(tmp_path, fmt):
    rng = np.random.default_rng(31)
    series = make_series(rng.integers(1, 40, size=5000), genre="politics")
    name = seriesio.category_filename("en", "politics", fmt)
    path = seriesio.write_series(
        tmp_path / name,
        series,
        fmt=fmt,
        config={"min_word_length": 1},
        config_hash="abc123",
        tool_version="0.1.0",
        drops={"synthetic": DropStats(digit_tokens=2)},
    )
    loaded = seriesio.read_series(path)
    assert np.array_equal(loaded.lengths, series.lengths)
    assert loaded.language == "en" and loaded.genre == "politics"
    assert loaded.source_ids == [("synthetic", 0, 5000)]
    return path


def test_binary_round_trip(tmp_path):
    path = roundtrip(tmp_path, "binary")
    assert path.suffix == ".wls"
    raw = path.read_bytes()
    assert raw.startswith(seriesio.MAGIC)


def test_text_round_trip(tmp_path):
    path = roundtrip(tmp_path, "text")
    assert path.suffix == ".wlt"
    first = path.read_text(encoding="utf-8").splitlines()[0]
    assert first.isdigit()


def test_sidecar_is_required(tmp_path):
    path = roundtrip(tmp_path, "binary")
    seriesio.sidecar_path(path).unlink()
    with pytest.raises(IngestError, match="sidecar"):
        seriesio.read_series(path)


def test_truncated_binary_detected(tmp_path):
    path = roundtrip(tmp_path, "binary")
    raw = path.read_bytes()
    path.write_bytes(raw[:-10])
    with pytest.raises(IngestError, match="truncated"):
        seriesio.read_series(path)


def test_wrong_magic_rejected(tmp_path):
    path = roundtrip(tmp_path, "binary")
    raw = path.read_bytes()
    path.write_bytes(b"NOTMAGIC" + raw[8:])
    with pytest.raises(IngestError, match="not a word-length series"):
        seriesio.read_series(path)


def test_load_series_dir_sorted(tmp_path):
    for lang, genre in [("en", "news"), ("el", "news"), ("en", "lit")]:
        series = make_series([2, 3, 4], language=lang, genre=genre)
        seriesio.write_series(
            tmp_path / seriesio.category_filename(lang, genre), series
        )
    loaded = seriesio.load_series_dir(tmp_path)
    assert [(s.language, s.genre) for s in loaded] == [
        ("el", "news"), ("en", "lit"), ("en", "news"),
    ]
    empty = tmp_path / "empty"
    empty.mkdir()
    with pytest.raises(IngestError, match="no series files"):
        seriesio.load_series_dir(empty)


def test_category_filename_sanitised():
    name = seriesio.category_filename("en", "web/politics 2024")
    assert "/" not in name and " " not in name
    assert name.endswith(".wls")
