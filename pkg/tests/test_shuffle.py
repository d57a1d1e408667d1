import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_series
from lengram.entropy import count_ngrams, entropy
from lengram.segmentation import Segment, SegmentationPolicy, segment
from lengram.shuffle import ShuffleConfig, compare_real_shuffled, shuffle_segment


def make_segment(values, index=0, category=("en", "news")):
    return Segment(
        lengths=np.asarray(values, dtype=np.uint16), index=index, category=category
    )


def test_constant_segment_is_fixed_point():
    seg = make_segment([5, 5, 5, 5])
    for seed in (0, 1, 999):
        assert shuffle_segment(seg, seed).lengths.tolist() == [5, 5, 5, 5]


def test_multiset_preserved_for_all_seeds():
    seg = make_segment([1, 2, 3])
    for seed in range(50):
        out = shuffle_segment(seg, seed)
        assert sorted(out.lengths.tolist()) == [1, 2, 3]


def test_same_key_is_bit_identical_different_replicate_is_not():
    rng = np.random.default_rng(3)
    seg = make_segment(rng.integers(1, 15, size=1000))
    a = shuffle_segment(seg, seed=7, replicate=0)
    b = shuffle_segment(seg, seed=7, replicate=0)
    assert np.array_equal(a.lengths, b.lengths)
    c = shuffle_segment(seg, seed=7, replicate=1)
    d = shuffle_segment(seg, seed=8, replicate=0)
    assert not np.array_equal(a.lengths, c.lengths)
    assert not np.array_equal(a.lengths, d.lengths)


def test_key_depends_on_category_and_index():
    values = np.arange(1, 101, dtype=np.uint16)
    base = shuffle_segment(make_segment(values), seed=1)
    other_cat = shuffle_segment(
        make_segment(values, category=("en", "lit")), seed=1
    )
    other_idx = shuffle_segment(make_segment(values, index=3), seed=1)
    assert not np.array_equal(base.lengths, other_cat.lengths)
    assert not np.array_equal(base.lengths, other_idx.lengths)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=20), min_size=2, max_size=120),
    st.integers(min_value=0, max_value=2 ** 64 - 1),
)
def test_unigram_table_identical_after_shuffle(values, seed):
    seg = make_segment(values)
    surrogate = shuffle_segment(seg, seed)
    real = count_ngrams(seg, 1)
    shuf = count_ngrams(surrogate, 1)
    assert real.as_dict() == shuf.as_dict()
    assert entropy(real).value == entropy(shuf).value


def test_uniformity_of_permutations():
    # all 6 permutations of 3 distinct items should appear roughly equally
    seg = make_segment([1, 2, 3])
    counts: dict[tuple, int] = {}
    for rep in range(6000):
        out = tuple(shuffle_segment(seg, seed=101, replicate=rep).lengths.tolist())
        counts[out] = counts.get(out, 0) + 1
    assert len(counts) == 6
    for c in counts.values():
        assert abs(c - 1000) < 150  # ~4.7 sigma


def test_compare_real_shuffled_order1_delta_exactly_zero():
    rng = np.random.default_rng(5)
    series = make_series(rng.integers(1, 12, size=3000))
    segments = segment(series, SegmentationPolicy(segment_length=1000))
    reports = compare_real_shuffled(segments, [1], ShuffleConfig(seed=9, replicates=4))
    assert reports[0].delta == 0.0
    assert reports[0].phi_real == reports[0].phi_shuffled


def test_alternating_segment_gains_strongly_from_shuffling():
    # [1,9,1,9,...]: real bigrams are two patterns (phi2 ~ ln 2); a shuffle
    # spreads mass over four patterns (phi2 -> ~2 ln 2 minus sampling deficit)
    seg = make_segment([1, 9] * 500)
    reports = compare_real_shuffled(
        [seg], [2], ShuffleConfig(seed=17, replicates=100)
    )
    r = reports[0]
    assert abs(r.phi_real - math.log(2)) < 2e-3
    assert 1.3 < r.phi_shuffled <= 2 * math.log(2)
    assert r.delta > 0.5


def test_compare_requires_consistent_category():
    seg_a = make_segment([1, 2, 3, 4], category=("en", "news"))
    seg_b = make_segment([1, 2, 3, 4], category=("en", "lit"))
    with pytest.raises(ValueError, match="same category"):
        compare_real_shuffled([seg_a, seg_b], [1])
    with pytest.raises(ValueError, match="at least one"):
        compare_real_shuffled([], [1])


def test_reports_carry_per_segment_detail():
    rng = np.random.default_rng(6)
    series = make_series(rng.integers(1, 10, size=2000))
    segments = segment(series, SegmentationPolicy(segment_length=1000))
    reports = compare_real_shuffled(segments, [2, 3], ShuffleConfig(seed=1, replicates=3))
    assert [r.order for r in reports] == [2, 3]
    for r in reports:
        assert r.phi_real_per_segment.shape == (2,)
        assert r.phi_shuffled_per_segment.shape == (2, 3)
        assert r.segment_count == 2 and r.replicate_count == 3
        assert math.isfinite(r.delta)


def test_shuffle_config_validation():
    with pytest.raises(ValueError):
        ShuffleConfig(replicates=0)
    with pytest.raises(ValueError):
        ShuffleConfig(seed=-1)
    with pytest.raises(ValueError):
        ShuffleConfig(scope="whole_series")
