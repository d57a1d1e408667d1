"""Read documents, tokenize them and map words to length series.

A word is a maximal run of Unicode letters: digits, punctuation,
whitespace and symbols all act as separators. Candidate runs that mix
letters with decimal digits ("2008", "abc123def") are discarded whole
rather than partially stripped, because the surviving fragments would
fabricate word lengths. Text is NFC-normalized before anything is counted
so decomposed accents cannot add phantom code points, and lengths are
always counted in code points, never bytes.

Per-document tokenization is pure; a category series is the ordered
concatenation of its documents' length sequences, with each document's
half-open offset range recorded for auditability.
"""

from __future__ import annotations

import csv
import json
import logging
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import regex

from .errors import IngestError

logger = logging.getLogger(__name__)

LETTER_POLICIES = ("unicode_letters", "unicode_letters_plus_internal_apostrophe")

# candidate tokens are runs of letters and decimal digits; anything else
# separates. The apostrophe variant additionally allows single straight or
# curly apostrophes between letter/digit groups, never at the edges.
_CANDIDATE_RE = {
    "unicode_letters": regex.compile(r"[\p{L}\p{Nd}]+"),
    "unicode_letters_plus_internal_apostrophe": regex.compile(
        r"[\p{L}\p{Nd}]+(?:['’][\p{L}\p{Nd}]+)*"
    ),
}
_HAS_DIGIT_RE = regex.compile(r"\p{Nd}")


@dataclass(frozen=True)
class TokenizerConfig:
    letter_policy: str = "unicode_letters"
    length_unit: str = "codepoints"
    min_word_length: int = 1
    max_word_length: int = 40

    def __post_init__(self) -> None:
        if self.letter_policy not in LETTER_POLICIES:
            raise ValueError(f"letter_policy must be one of {LETTER_POLICIES}")
        if self.length_unit != "codepoints":
            raise ValueError("length_unit 'codepoints' is the only supported unit")
        if self.min_word_length < 1:
            raise ValueError("min_word_length must be >= 1")
        if self.max_word_length < self.min_word_length:
            raise ValueError("max_word_length must be >= min_word_length")
        if self.max_word_length > 0xFFFF:
            raise ValueError("max_word_length must fit 16-bit series storage")

    def to_dict(self) -> dict:
        return {
            "letter_policy": self.letter_policy,
            "length_unit": self.length_unit,
            "min_word_length": self.min_word_length,
            "max_word_length": self.max_word_length,
        }


@dataclass(frozen=True)
class Document:
    id: str
    language: str
    genre: str
    text: str


@dataclass
class DropStats:
    """Tokens discarded during tokenization, by reason."""

    digit_tokens: int = 0
    short_tokens: int = 0
    long_tokens: int = 0

    def total(self) -> int:
        return self.digit_tokens + self.short_tokens + self.long_tokens

    def to_dict(self) -> dict:
        return {
            "digit_tokens": self.digit_tokens,
            "short_tokens": self.short_tokens,
            "long_tokens": self.long_tokens,
        }

    def add(self, other: "DropStats") -> None:
        self.digit_tokens += other.digit_tokens
        self.short_tokens += other.short_tokens
        self.long_tokens += other.long_tokens


@dataclass
class WordLengthSeries:
    """Word lengths of one (language, genre) category, in document order.

    source_ids records each contributing document as (id, start, end) with
    half-open offsets into `lengths`.
    """

    lengths: np.ndarray
    language: str
    genre: str
    source_ids: list[tuple[str, int, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.lengths = np.asarray(self.lengths, dtype=np.uint16)
        self.lengths.flags.writeable = False

    @property
    def category(self) -> tuple[str, str]:
        return (self.language, self.genre)

    def __len__(self) -> int:
        return int(self.lengths.shape[0])


def _tokenize_with_stats(
    text: str, config: TokenizerConfig
) -> tuple[list[str], DropStats]:
    text = unicodedata.normalize("NFC", text)
    stats = DropStats()
    words: list[str] = []
    lo, hi = config.min_word_length, config.max_word_length
    for candidate in _CANDIDATE_RE[config.letter_policy].findall(text):
        if _HAS_DIGIT_RE.search(candidate):
            stats.digit_tokens += 1
            continue
        n = len(candidate)
        if n < lo:
            stats.short_tokens += 1
        elif n > hi:
            stats.long_tokens += 1
        else:
            words.append(candidate)
    return words, stats


def tokenize(text: str, config: TokenizerConfig | None = None) -> list[str]:
    """Split text into words (maximal letter runs) in document order."""
    if config is None:
        config = TokenizerConfig()
    words, _ = _tokenize_with_stats(text, config)
    return words


def word_lengths(
    words: list[str], config: TokenizerConfig | None = None
) -> list[int]:
    """Length of each word in Unicode code points."""
    return [len(w) for w in words]


def build_category_series(
    docs: list[Document], config: TokenizerConfig | None = None
) -> tuple[list[WordLengthSeries], dict[str, DropStats]]:
    """Concatenate per-document length sequences into one series per category.

    Documents keep their input (manifest) order within each category.
    Categories whose documents produce no words at all are dropped with a
    warning. Returns the series sorted by (language, genre) plus per-document
    drop statistics.
    """
    if config is None:
        config = TokenizerConfig()
    seen_ids: set[str] = set()
    per_category: dict[tuple[str, str], list[tuple[str, list[int]]]] = {}
    doc_drops: dict[str, DropStats] = {}
    for doc in docs:
        if not doc.id:
            raise IngestError("document with empty id")
        if doc.id in seen_ids:
            raise IngestError(f"duplicate document id: {doc.id}")
        seen_ids.add(doc.id)
        words, stats = _tokenize_with_stats(doc.text, config)
        doc_drops[doc.id] = stats
        per_category.setdefault((doc.language, doc.genre), []).append(
            (doc.id, word_lengths(words, config))
        )

    series_list: list[WordLengthSeries] = []
    for (language, genre) in sorted(per_category):
        parts = per_category[(language, genre)]
        source_ids: list[tuple[str, int, int]] = []
        offset = 0
        chunks: list[np.ndarray] = []
        for doc_id, lengths in parts:
            source_ids.append((doc_id, offset, offset + len(lengths)))
            offset += len(lengths)
            chunks.append(np.asarray(lengths, dtype=np.uint16))
        if offset == 0:
            logger.warning(
                "category %s/%s produced no words; omitted", language, genre
            )
            continue
        series_list.append(
            WordLengthSeries(
                lengths=np.concatenate(chunks) if chunks else np.empty(0, np.uint16),
                language=language,
                genre=genre,
                source_ids=source_ids,
            )
        )
    return series_list, doc_drops


# ---------------------------------------------------------------------------
# manifests and document loading
# ---------------------------------------------------------------------------

def _read_document_text(path: Path, doc_id: str) -> str:
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise IngestError(f"document {doc_id}: cannot read {path}: {exc}") from exc
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestError(
            f"document {doc_id}: invalid UTF-8 in {path} at byte offset {exc.start}"
        ) from exc


def load_manifest(manifest_path: Path) -> list[dict]:
    """Parse a JSON or CSV manifest into {path, language, genre} records."""
    if not manifest_path.is_file():
        raise IngestError(f"manifest not found: {manifest_path}")
    suffix = manifest_path.suffix.lower()
    if suffix == ".json":
        try:
            data = json.loads(manifest_path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise IngestError(f"malformed manifest {manifest_path}: {exc}") from exc
        if isinstance(data, dict):
            data = data.get("documents")
        if not isinstance(data, list):
            raise IngestError(
                f"manifest {manifest_path} must be a list of documents"
            )
        records = data
    elif suffix == ".csv":
        with open(manifest_path, newline="", encoding="utf-8") as fh:
            records = list(csv.DictReader(fh))
    else:
        raise IngestError(
            f"manifest {manifest_path} must be .json or .csv"
        )
    cleaned = []
    for i, rec in enumerate(records):
        if not isinstance(rec, dict) or not all(
            rec.get(k) for k in ("path", "language", "genre")
        ):
            raise IngestError(
                f"manifest {manifest_path} entry {i} needs path, language and genre"
            )
        cleaned.append(
            {"path": rec["path"], "language": rec["language"], "genre": rec["genre"]}
        )
    return cleaned


def discover_corpus_root(root: Path) -> list[dict]:
    """List documents under the <root>/<language>/<genre>/*.txt convention."""
    if not root.is_dir():
        raise IngestError(f"corpus root not found: {root}")
    records = []
    for path in sorted(root.glob("*/*/*.txt")):
        genre_dir = path.parent
        language_dir = genre_dir.parent
        records.append(
            {
                "path": str(path.relative_to(root)),
                "language": language_dir.name,
                "genre": genre_dir.name,
            }
        )
    if not records:
        raise IngestError(f"no <language>/<genre>/*.txt documents under {root}")
    return records


def load_documents(records: list[dict], base_dir: Path) -> list[Document]:
    """Read every manifest record into a Document, collecting all failures.

    Raises one IngestError naming every unreadable document, so a single
    bad path does not hide the rest.
    """
    docs: list[Document] = []
    problems: list[str] = []
    for rec in records:
        doc_id = rec["path"]
        path = Path(rec["path"])
        if not path.is_absolute():
            path = base_dir / path
        try:
            text = _read_document_text(path, doc_id)
        except IngestError as exc:
            problems.append(str(exc))
            continue
        docs.append(
            Document(id=doc_id, language=rec["language"], genre=rec["genre"], text=text)
        )
    if problems:
        raise IngestError("; ".join(problems))
    if not docs:
        raise IngestError("no documents")
    return docs
