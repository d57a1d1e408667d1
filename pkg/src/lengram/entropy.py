"""Gliding n-gram counting, plug-in block entropy and rank distributions.

A segment of word lengths (s_1, ..., s_N) is read with a gliding window of
stride 1, producing K = N - n + 1 overlapping n-grams. The block entropy of
order n is the Shannon entropy, in nats, of the empirical n-gram
distribution count/K, summed over observed n-grams only (0 ln 0 := 0). No
bias correction is applied: the estimate is deliberately the plain plug-in
value, and its dependence on segment length is part of what downstream
analysis reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _backend

# Above this the packed radix keys could overflow int64 and counting falls
# back to a dict of tuples; with default word-length limits it never trips.
_PACK_LIMIT = 2 ** 62


def _as_symbol_array(data) -> np.ndarray:
    """Coerce a Segment, series or plain sequence to a 1-D int64 array."""
    lengths = getattr(data, "lengths", data)
    arr = np.asarray(lengths)
    if arr.ndim != 1:
        raise ValueError("expected a 1-D sequence of word lengths")
    return np.ascontiguousarray(arr, dtype=np.int64)


def _segment_ref(data) -> tuple | None:
    category = getattr(data, "category", None)
    index = getattr(data, "index", None)
    if category is None and index is None:
        return None
    return (category, index)


@dataclass
class NGramTable:
    """Exact occurrence counts of the distinct n-grams of one segment.

    ngrams holds one row per distinct n-gram, in lexicographic order;
    counts aligns with the rows; total is the number of gliding windows
    K = N - n + 1, so sum(counts) == total.
    """

    order: int
    ngrams: np.ndarray
    counts: np.ndarray
    total: int
    segment_ref: tuple | None = None

    def __post_init__(self) -> None:
        self.ngrams = np.asarray(self.ngrams, dtype=np.int64)
        if self.ngrams.ndim == 1:
            self.ngrams = self.ngrams.reshape(-1, 1)
        self.counts = np.asarray(self.counts, dtype=np.int64)
        if self.ngrams.shape != (self.counts.shape[0], self.order):
            raise ValueError("ngrams shape does not match counts/order")
        if self.counts.shape[0] and self.counts.min() < 1:
            raise ValueError("only observed n-grams belong in the table")
        if int(self.counts.sum()) != self.total:
            raise ValueError("counts must sum to the window total")

    @property
    def distinct(self) -> int:
        return int(self.counts.shape[0])

    def as_dict(self) -> dict[tuple[int, ...], int]:
        """Counts as a plain {ngram tuple: count} mapping."""
        return {
            tuple(int(v) for v in row): int(c)
            for row, c in zip(self.ngrams, self.counts)
        }

    def __getitem__(self, ngram: Sequence[int]) -> int:
        key = tuple(int(v) for v in ngram)
        return self.as_dict().get(key, 0)


@dataclass
class EntropyEstimate:
    """Block entropy of one counted table, in nats."""

    order: int
    value: float
    distinct_ngrams: int
    segment_ref: tuple | None = None


@dataclass
class RankDistribution:
    """N-gram probabilities sorted descending, 1-based rank indexed.

    Ties are broken by lexicographic order of the n-gram tuple so the
    ranking is deterministic across runs and platforms.
    """

    order: int
    ngrams: np.ndarray
    probabilities: np.ndarray
    segment_ref: tuple | None = None

    def __post_init__(self) -> None:
        if self.probabilities.shape[0] != self.ngrams.shape[0]:
            raise ValueError("probability/ngram length mismatch")
        if abs(math.fsum(self.probabilities.tolist()) - 1.0) > 1e-12:
            raise ValueError("probabilities must sum to 1")
        if np.any(np.diff(self.probabilities) > 0):
            raise ValueError("probabilities must be non-increasing in rank")

    def __len__(self) -> int:
        return int(self.probabilities.shape[0])

    @property
    def entries(self) -> Iterator[tuple[int, tuple[int, ...], float]]:
        for rank, (row, p) in enumerate(zip(self.ngrams, self.probabilities), 1):
            yield rank, tuple(int(v) for v in row), float(p)


def _decode_keys(keys: np.ndarray, order: int, base: int) -> np.ndarray:
    rows = np.empty((keys.shape[0], order), dtype=np.int64)
    k = keys.copy()
    for t in range(order - 1, -1, -1):
        rows[:, t] = k % base
        k //= base
    return rows


def _count_ngrams_bigbase(values: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray]:
    # dict fallback for symbol alphabets too wide to radix-pack
    counter: dict[tuple[int, ...], int] = {}
    for j in range(values.shape[0] - order + 1):
        key = tuple(int(v) for v in values[j:j + order])
        counter[key] = counter.get(key, 0) + 1
    items = sorted(counter.items())
    rows = np.array([k for k, _ in items], dtype=np.int64).reshape(-1, order)
    counts = np.array([c for _, c in items], dtype=np.int64)
    return rows, counts


def count_ngrams(segment, order: int) -> NGramTable:
    """Count all gliding windows of `order` consecutive word lengths.

    Accepts a Segment, a WordLengthSeries or any 1-D integer sequence.
    Windows overlap with stride 1 and never wrap around.
    """
    values = _as_symbol_array(segment)
    n_symbols = values.shape[0]
    if order < 1:
        raise ValueError("order must be >= 1")
    if order > n_symbols:
        raise ValueError(
            f"order exceeds segment length ({order} > {n_symbols})"
        )
    total = n_symbols - order + 1
    if int(values.min()) < 1:
        raise ValueError("word lengths must be >= 1")
    base = int(values.max()) + 1
    if base ** order <= _PACK_LIMIT:
        keys = _backend.pack_windows(values, order, base)
        uniq, counts = _backend.unique_counts(keys)
        rows = _decode_keys(uniq, order, base)
    else:
        rows, counts = _count_ngrams_bigbase(values, order)
    return NGramTable(
        order=order,
        ngrams=rows,
        counts=counts,
        total=total,
        segment_ref=_segment_ref(segment),
    )


def entropy(table: NGramTable) -> EntropyEstimate:
    """Plug-in block entropy -sum (c/K) ln(c/K) of a counted table, in nats."""
    if table.total < 1:
        raise ValueError("cannot take the entropy of an empty table")
    value = float(_backend.entropy_nats(table.counts, table.total))
    return EntropyEstimate(
        order=table.order,
        value=value,
        distinct_ngrams=table.distinct,
        segment_ref=table.segment_ref,
    )


def rank_distribution(table: NGramTable) -> RankDistribution:
    """Probabilities count/K sorted descending, lexicographic tie-break."""
    if table.total < 1:
        raise ValueError("cannot rank an empty table")
    # table rows are lex-sorted, so a stable sort on -count keeps the
    # lexicographic order within each tied probability level
    order_idx = np.argsort(-table.counts, kind="stable")
    probabilities = table.counts[order_idx] / float(table.total)
    return RankDistribution(
        order=table.order,
        ngrams=table.ngrams[order_idx],
        probabilities=probabilities,
        segment_ref=table.segment_ref,
    )


def marginal_table(table: NGramTable) -> NGramTable:
    """Project an order-(n+1) table onto its order-n prefixes.

    Prefix counts are summed over the final symbol; the window total is
    carried over unchanged, which makes entropy(joint) >= entropy(marginal)
    an exact inequality on the same table.
    """
    if table.order < 2:
        raise ValueError("marginal_table requires order >= 2")
    prefixes = table.ngrams[:, :-1]
    if prefixes.shape[0] == 0:
        raise ValueError("cannot marginalise an empty table")
    changed = np.any(prefixes[1:] != prefixes[:-1], axis=1)
    starts = np.concatenate(([0], np.flatnonzero(changed) + 1))
    counts = np.add.reduceat(table.counts, starts)
    return NGramTable(
        order=table.order - 1,
        ngrams=prefixes[starts],
        counts=counts,
        total=table.total,
        segment_ref=table.segment_ref,
    )
