"""Word-length representations of text and their n-gram block entropies.

The pipeline: tokenize documents into word-length series, fragment a
category series into fixed-length segments, count n-grams by gliding a
stride-1 window, estimate plug-in block entropies in nats, and compare
against shuffled surrogates that preserve each segment's unigram
distribution exactly.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .analysis import (
    CategorySummary,
    CrossCategoryReport,
    LengthHistogram,
    SweepResult,
    cross_category_report,
    length_histogram,
    summarize,
    sweep_segment_length,
)
from .entropy import (
    EntropyEstimate,
    NGramTable,
    RankDistribution,
    count_ngrams,
    entropy,
    marginal_table,
    rank_distribution,
)
from .errors import IngestError, InsufficientDataError, LengramError
from .ingest import (
    Document,
    TokenizerConfig,
    WordLengthSeries,
    build_category_series,
    tokenize,
    word_lengths,
)
from .segmentation import Segment, SegmentationPolicy, segment
from .shuffle import (
    ComparisonReport,
    ShuffleConfig,
    compare_real_shuffled,
    shuffle_segment,
)

__all__ = [
    "BACKEND",
    "CategorySummary",
    "ComparisonReport",
    "CrossCategoryReport",
    "Document",
    "EntropyEstimate",
    "IngestError",
    "InsufficientDataError",
    "LengramError",
    "LengthHistogram",
    "NGramTable",
    "RankDistribution",
    "Segment",
    "SegmentationPolicy",
    "ShuffleConfig",
    "SweepResult",
    "TokenizerConfig",
    "WordLengthSeries",
    "build_category_series",
    "compare_real_shuffled",
    "count_ngrams",
    "cross_category_report",
    "entropy",
    "length_histogram",
    "marginal_table",
    "rank_distribution",
    "segment",
    "shuffle_segment",
    "summarize",
    "sweep_segment_length",
    "tokenize",
    "word_lengths",
    "__version__",
]
