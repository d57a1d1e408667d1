"""Fragment a category series into fixed-length segments.

Entropies are estimated per segment and averaged afterwards, so segments
are non-overlapping, cover a prefix of the series in order, and (under the
default policy) the trailing remainder is dropped rather than kept as a
biased short segment.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientDataError

REMAINDER_POLICIES = ("drop", "keep_if_at_least_half")


@dataclass(frozen=True)
class SegmentationPolicy:
    segment_length: int = 1000
    remainder_policy: str = "drop"

    def __post_init__(self) -> None:
        if self.segment_length < 2:
            raise ValueError("segment_length must be >= 2")
        if self.remainder_policy not in REMAINDER_POLICIES:
            raise ValueError(
                f"remainder_policy must be one of {REMAINDER_POLICIES}"
            )


@dataclass
class Segment:
    """A contiguous window of word lengths; the unit of entropy estimation."""

    lengths: np.ndarray
    index: int
    category: tuple[str, str]

    def __len__(self) -> int:
        return int(self.lengths.shape[0])


def segment(series, policy: SegmentationPolicy | None = None) -> list[Segment]:
    """Split a WordLengthSeries into consecutive segments of N lengths.

    Returns floor(len/N) full segments; when the policy is
    keep_if_at_least_half, a trailing remainder of at least N/2 words is
    appended as one final short segment. Raises InsufficientDataError when
    the series holds fewer than N words.
    """
    if policy is None:
        policy = SegmentationPolicy()
    values = np.asarray(series.lengths)
    category = (series.language, series.genre)
    n = policy.segment_length
    total = values.shape[0]
    if total < n:
        raise InsufficientDataError(
            f"series shorter than one segment for category "
            f"{series.language}/{series.genre}: {total} < {n}"
        )
    full = total // n
    segments = [
        Segment(lengths=values[i * n:(i + 1) * n], index=i, category=category)
        for i in range(full)
    ]
    remainder = total - full * n
    if (
        policy.remainder_policy == "keep_if_at_least_half"
        and remainder * 2 >= n
    ):
        segments.append(
            Segment(lengths=values[full * n:], index=full, category=category)
        )
    return segments
