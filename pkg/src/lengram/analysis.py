"""Aggregation of per-segment estimates into category-level results.

Covers the headline outputs: per-category mean entropies with dispersion,
entropy-versus-segment-length sweeps, unigram word-length histograms, and
cross-category orderings.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .entropy import EntropyEstimate, RankDistribution, count_ngrams, entropy
from .errors import InsufficientDataError
from .ingest import WordLengthSeries
from .segmentation import Segment, SegmentationPolicy, segment

logger = logging.getLogger(__name__)


@dataclass
class CategorySummary:
    category: tuple[str, str]
    order: int
    mean_phi: float
    std_phi: float
    stderr_phi: float
    segment_count: int


@dataclass
class SweepPoint:
    segment_length: int
    mean_phi: float
    std_phi: float
    segment_count: int


@dataclass
class SweepResult:
    category: tuple[str, str]
    order: int
    points: list[SweepPoint]


@dataclass
class LengthHistogram:
    """Unigram probability of each observed word length in one category."""

    category: tuple[str, str]
    bins: dict[int, float]
    support: tuple[int, int]


@dataclass
class PairwiseOrdering:
    order: int
    higher: tuple[str, str]
    lower: tuple[str, str]
    delta: float
    stderr_delta: float


@dataclass
class CrossCategoryReport:
    summaries: list[CategorySummary]
    rankings: dict[int, list[tuple[str, str]]]
    pairwise: list[PairwiseOrdering]
    language_deltas: list[PairwiseOrdering]
    histograms: list[LengthHistogram] = field(default_factory=list)
    rank_distributions: list[RankDistribution] = field(default_factory=list)


def _mean_std(values: list[float]) -> tuple[float, float]:
    """Two-pass mean and sample standard deviation (n-1 denominator).

    A single observation has no dispersion estimate; report 0.
    """
    n = len(values)
    mean = math.fsum(values) / n
    if n < 2:
        return mean, 0.0
    var = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, math.sqrt(var)


def summarize(estimates: list[EntropyEstimate]) -> list[CategorySummary]:
    """Mean, sample std and standard error per (category, order) group.

    Every estimate must carry a segment_ref naming its category; the group
    order of the output is sorted by (category, order).
    """
    groups: dict[tuple[tuple[str, str], int], list[float]] = {}
    for est in estimates:
        if est.segment_ref is None or est.segment_ref[0] is None:
            raise ValueError("estimate lacks a category reference")
        category = est.segment_ref[0]
        groups.setdefault((category, est.order), []).append(est.value)
    summaries = []
    for (category, order) in sorted(groups):
        values = groups[(category, order)]
        if not values:
            raise ValueError(f"empty estimate group for {category}")
        mean, std = _mean_std(values)
        summaries.append(
            CategorySummary(
                category=category,
                order=order,
                mean_phi=mean,
                std_phi=std,
                stderr_phi=std / math.sqrt(len(values)),
                segment_count=len(values),
            )
        )
    return summaries


def estimate_segments(
    segments: list[Segment], orders: list[int]
) -> list[EntropyEstimate]:
    """Block entropy of every segment at every requested order."""
    return [
        entropy(count_ngrams(seg, order))
        for seg in segments
        for order in sorted(set(orders))
    ]


def sweep_segment_length(
    series: WordLengthSeries,
    orders: list[int],
    n_min: int = 250,
    n_max: int = 3000,
    step: int = 250,
) -> list[SweepResult]:
    """Re-segment and re-estimate across a grid of segment lengths.

    Grid points beyond the series length are dropped with a warning. One
    SweepResult per order, points sorted by segment length ascending.
    """
    if n_min < 2:
        raise ValueError("n_min must be >= 2")
    if step < 1:
        raise ValueError("step must be >= 1")
    if n_max < n_min:
        raise ValueError("n_max must be >= n_min")
    grid = list(range(n_min, n_max + 1, step))
    usable = [n for n in grid if n <= len(series)]
    if len(usable) < len(grid):
        logger.warning(
            "sweep truncated for %s/%s: series has %d words, dropping N > %d",
            series.language,
            series.genre,
            len(series),
            len(series),
        )
    if not usable:
        raise InsufficientDataError(
            f"series {series.language}/{series.genre} shorter than the "
            f"smallest sweep segment length {n_min}"
        )
    orders = sorted(set(orders))
    points: dict[int, list[SweepPoint]] = {order: [] for order in orders}
    for n in usable:
        segments = segment(series, SegmentationPolicy(segment_length=n))
        for order in orders:
            values = [
                entropy(count_ngrams(seg, order)).value for seg in segments
            ]
            mean, std = _mean_std(values)
            points[order].append(
                SweepPoint(
                    segment_length=n,
                    mean_phi=mean,
                    std_phi=std,
                    segment_count=len(values),
                )
            )
    return [
        SweepResult(category=series.category, order=order, points=points[order])
        for order in orders
    ]


def length_histogram(data) -> LengthHistogram:
    """Probability of each word length over a whole category.

    Accepts a WordLengthSeries, a list of Segments or a plain sequence.
    """
    if isinstance(data, WordLengthSeries):
        values = np.asarray(data.lengths)
        category = data.category
    elif isinstance(data, (list, tuple)) and data and isinstance(data[0], Segment):
        values = np.concatenate([np.asarray(s.lengths) for s in data])
        category = data[0].category
    else:
        values = np.asarray(data)
        category = ("", "")
    if values.size == 0:
        raise ValueError("cannot build a histogram from empty data")
    counts = np.bincount(values.astype(np.int64))
    total = float(values.size)
    observed = np.flatnonzero(counts)
    bins = {int(k): counts[k] / total for k in observed}
    return LengthHistogram(
        category=category,
        bins=bins,
        support=(int(observed[0]), int(observed[-1])),
    )


def cross_category_report(
    summaries: list[CategorySummary],
    histograms: list[LengthHistogram] | None = None,
    rank_distributions: list[RankDistribution] | None = None,
) -> CrossCategoryReport:
    """Rank categories per order and record pairwise entropy differences.

    Pairwise deltas carry combined standard errors. Cross-language rows
    (same genre, different language) are split out separately and are
    simply absent for single-language corpora.
    """
    categories = sorted({s.category for s in summaries})
    if len(categories) < 2:
        raise ValueError("cross_category_report needs at least 2 categories")
    by_order: dict[int, list[CategorySummary]] = {}
    for s in summaries:
        by_order.setdefault(s.order, []).append(s)

    rankings: dict[int, list[tuple[str, str]]] = {}
    pairwise: list[PairwiseOrdering] = []
    language_deltas: list[PairwiseOrdering] = []
    for order in sorted(by_order):
        group = by_order[order]
        ranked = sorted(group, key=lambda s: (-s.mean_phi, s.category))
        rankings[order] = [s.category for s in ranked]
        for i, hi in enumerate(ranked):
            for lo in ranked[i + 1:]:
                record = PairwiseOrdering(
                    order=order,
                    higher=hi.category,
                    lower=lo.category,
                    delta=hi.mean_phi - lo.mean_phi,
                    stderr_delta=math.hypot(hi.stderr_phi, lo.stderr_phi),
                )
                pairwise.append(record)
                same_genre = hi.category[1] == lo.category[1]
                if same_genre and hi.category[0] != lo.category[0]:
                    language_deltas.append(record)
    return CrossCategoryReport(
        summaries=sorted(summaries, key=lambda s: (s.category, s.order)),
        rankings=rankings,
        pairwise=pairwise,
        language_deltas=language_deltas,
        histograms=histograms or [],
        rank_distributions=rank_distributions or [],
    )
