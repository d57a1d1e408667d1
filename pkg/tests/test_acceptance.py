"""Acceptance gate.

One test per criterion, each asserting at its stated tolerance and printing
a single pass line (visible with ``pytest -s``). Criteria 7-9 run against
the bundled demo corpus and synthetic pre-ingested series.
"""

import math
import time

import numpy as np

from conftest import make_series
from lengram.analysis import (
    estimate_segments,
    length_histogram,
    summarize,
    sweep_segment_length,
)
from lengram.cli import main as cli_main
from lengram.entropy import (
    NGramTable,
    count_ngrams,
    entropy,
    marginal_table,
    rank_distribution,
)
from lengram.segmentation import Segment, SegmentationPolicy, segment
from lengram.seriesio import category_filename, load_series_dir, write_series
from lengram.shuffle import ShuffleConfig, compare_real_shuffled, shuffle_segment
from oracle import count_ngrams_brute, entropy_brute, rank_brute


def _pass(num: int, detail: str) -> None:
    print(f"[criterion {num}] PASS: {detail}")


def _random_segment(rng, max_len=100, max_symbol=6):
    n = int(rng.integers(4, max_len + 1))
    alphabet = int(rng.integers(1, max_symbol + 1))
    return rng.integers(1, alphabet + 1, size=n).tolist()


def test_criterion_1_oracle_equivalence():
    rng = np.random.default_rng(1001)
    start = time.perf_counter()
    n_segments = 10_000
    for _ in range(n_segments):
        values = _random_segment(rng)
        for order in (1, 2, 3, 4):
            table = count_ngrams(values, order)
            ref_counts = count_ngrams_brute(values, order)
            assert table.as_dict() == dict(ref_counts)
            assert abs(entropy(table).value - entropy_brute(ref_counts)) <= 1e-12
            got = list(rank_distribution(table).entries)
            ref = rank_brute(ref_counts)
            assert len(got) == len(ref)
            for (g_rank, g_ngram, g_p), (r_rank, r_ngram, r_p) in zip(got, ref):
                assert g_rank == r_rank and g_ngram == r_ngram
                assert abs(g_p - r_p) <= 1e-12
    elapsed = time.perf_counter() - start
    assert elapsed <= 60.0, f"oracle sweep took {elapsed:.1f}s"
    _pass(1, f"{n_segments} segments x orders 1-4 vs brute force in {elapsed:.1f}s")


def test_criterion_2_hand_fixtures():
    phi1 = entropy(count_ngrams([1, 2, 2, 2], 1)).value
    assert abs(phi1 - 0.562335) <= 1e-6
    phi2 = entropy(count_ngrams([1, 2, 1, 2], 2)).value
    assert abs(phi2 - 0.636514) <= 1e-6
    constant = [7] * 400
    for order in (1, 2, 3, 5):
        assert entropy(count_ngrams(constant, order)).value == 0.0
    _pass(2, f"phi1={phi1:.6f}, phi2={phi2:.6f}, constant segments exactly 0")


def test_criterion_3_bounds_and_maximality():
    rng = np.random.default_rng(1003)
    for _ in range(2000):
        values = _random_segment(rng)
        order = int(rng.integers(1, 5))
        est = entropy(count_ngrams(values, order))
        assert 0.0 <= est.value <= math.log(est.distinct_ngrams) + 1e-12
    # equal-count tables hit the uniform maximum ln(distinct)
    for _ in range(300):
        distinct = int(rng.integers(1, 400))
        count = int(rng.integers(1, 50))
        table = NGramTable(
            order=1,
            ngrams=np.arange(1, distinct + 1).reshape(-1, 1),
            counts=np.full(distinct, count),
            total=distinct * count,
        )
        assert abs(entropy(table).value - math.log(distinct)) <= 1e-12
    _pass(3, "0 <= phi <= ln(distinct) on 2000 tables; uniform tables at ln(distinct) +/- 1e-12")


def test_criterion_4_joint_marginal_inequality():
    rng = np.random.default_rng(1004)
    checked = 0
    for _ in range(3000):
        values = _random_segment(rng)
        for order in (2, 3, 4):
            joint = count_ngrams(values, order)
            marg = marginal_table(joint)
            assert entropy(joint).value >= entropy(marg).value  # exact, no tolerance
            checked += 1
    # equality case: relabeling-only projection (every prefix unique)
    joint = count_ngrams([1, 2, 3, 4, 5, 6], 2)
    assert entropy(joint).value == entropy(marginal_table(joint)).value
    _pass(4, f"entropy(joint) >= entropy(marginal) exactly on {checked} tables")


def test_criterion_5_shuffle_invariance():
    rng = np.random.default_rng(1005)
    for trial in range(400):
        values = _random_segment(rng, max_len=200, max_symbol=20)
        seg = Segment(
            lengths=np.asarray(values, dtype=np.uint16),
            index=trial,
            category=("en", "mixed"),
        )
        surrogate = shuffle_segment(seg, seed=trial * 7 + 1, replicate=trial % 5)
        assert sorted(surrogate.lengths.tolist()) == sorted(values)
        real_u = count_ngrams(seg, 1)
        shuf_u = count_ngrams(surrogate, 1)
        assert real_u.as_dict() == shuf_u.as_dict()
        assert abs(entropy(real_u).value - entropy(shuf_u).value) <= 1e-12
    _pass(5, "unigram tables and phi1 preserved exactly across 400 segment/seed pairs")


def test_criterion_6_determinism(small_corpus, tmp_path):
    root, manifest = small_corpus
    runs = {}
    for label in ("first", "second"):
        base = tmp_path / label
        assert cli_main(["ingest", "--manifest", str(manifest), "--out", str(base / "run")]) == 0
        series_dir = str(base / "run" / "series")
        assert cli_main([
            "entropy", "--series-dir", series_dir, "--segment-length", "500",
            "--orders", "1,2,3", "--out", str(base / "entropy"),
        ]) == 0
        assert cli_main([
            "sweep", "--series-dir", series_dir, "--sweep", "250:1000:250",
            "--orders", "2", "--out", str(base / "sweep"),
        ]) == 0
        assert cli_main([
            "shuffle-compare", "--series-dir", series_dir, "--segment-length", "500",
            "--orders", "1,2", "--seed", "31337", "--replicates", "3",
            "--out", str(base / "shuffle"),
        ]) == 0
        runs[label] = base
    first_files = sorted(
        p.relative_to(runs["first"]) for p in runs["first"].rglob("*") if p.is_file()
    )
    second_files = sorted(
        p.relative_to(runs["second"]) for p in runs["second"].rglob("*") if p.is_file()
    )
    assert first_files == second_files
    for rel in first_files:
        a = (runs["first"] / rel).read_bytes()
        b = (runs["second"] / rel).read_bytes()
        assert a == b, f"output differs between runs: {rel}"
    _pass(6, f"two full runs of all 4 commands byte-identical across {len(first_files)} files")


def _demo_series(demo_corpus, tmp_path_factory):
    root, manifest = demo_corpus
    run = tmp_path_factory.mktemp("demo_run")
    assert cli_main(["ingest", "--manifest", str(manifest), "--out", str(run)]) == 0
    series = load_series_dir(run / "series")
    return {s.genre: s for s in series}


def test_criterion_7_desk_scale_reproduction(demo_corpus, tmp_path_factory):
    start = time.perf_counter()
    by_genre = _demo_series(demo_corpus, tmp_path_factory)
    news, lit = by_genre["news"], by_genre["literature"]
    assert len(news) + len(lit) >= 300_000

    policy = SegmentationPolicy(segment_length=1000)
    means = {}
    for series in (news, lit):
        segments = segment(series, policy)
        for summary in summarize(estimate_segments(segments, [1, 2, 3])):
            means[(series.genre, summary.order)] = summary.mean_phi

    # (a) genre ordering at N=1000
    for order in (1, 2, 3):
        assert means[("news", order)] > means[("literature", order)], order

    # (b) shuffled >= real at orders 2 and 3, 10 replicates
    deltas = {}
    for series in (news, lit):
        segments = segment(series, policy)
        for report in compare_real_shuffled(
            segments, [2, 3], ShuffleConfig(seed=2024, replicates=10)
        ):
            assert report.phi_shuffled >= report.phi_real, (series.genre, report.order)
            deltas[(series.genre, report.order)] = report.delta

    # (c) magnitudes in the expected ranges for English word-length series
    for genre in ("news", "literature"):
        assert 3.5 <= means[(genre, 2)] <= 5.0, genre
        assert 5.0 <= means[(genre, 3)] <= 6.6, genre

    elapsed = time.perf_counter() - start
    assert elapsed <= 300.0, f"desk-scale run took {elapsed:.0f}s"
    _pass(
        7,
        "news > literature for n=1..3; shuffled >= real (min delta "
        f"{min(deltas.values()):+.4f}); phi2/phi3 in brackets; {elapsed:.0f}s",
    )


def test_criterion_8_sweep_behavior(demo_corpus, tmp_path_factory):
    by_genre = _demo_series(demo_corpus, tmp_path_factory)
    news, lit = by_genre["news"], by_genre["literature"]

    # (a) 1e6-symbol i.i.d. series drawn from the news length histogram
    hist = length_histogram(news)
    lengths = np.array(sorted(hist.bins), dtype=np.uint16)
    probs = np.array([hist.bins[int(k)] for k in lengths])
    probs = probs / probs.sum()
    rng = np.random.default_rng(8080)
    synthetic = make_series(
        rng.choice(lengths, size=1_000_000, p=probs), genre="iid"
    )
    sweep = sweep_segment_length(synthetic, [2], n_min=250, n_max=3000, step=250)[0]
    means = [p.mean_phi for p in sweep.points]
    assert len(means) == 12
    for a, b in zip(means, means[1:]):
        assert b >= a, f"mean phi2 decreased: {a} -> {b}"

    # (b) genre ordering invariant across the whole grid
    news_sweeps = {
        s.order: s for s in sweep_segment_length(news, [1, 2, 3], 250, 3000, 250)
    }
    lit_sweeps = {
        s.order: s for s in sweep_segment_length(lit, [1, 2, 3], 250, 3000, 250)
    }
    for order in (1, 2, 3):
        for p_news, p_lit in zip(news_sweeps[order].points, lit_sweeps[order].points):
            assert p_news.segment_length == p_lit.segment_length
            assert p_news.mean_phi > p_lit.mean_phi, (
                order, p_news.segment_length,
            )
    _pass(
        8,
        "iid mean phi2 non-decreasing over N=250..3000; genre ordering "
        "invariant across the grid for n=1..3",
    )


def test_criterion_9_throughput(demo_corpus, tmp_path_factory):
    # pre-ingest a 5M-word corpus: two categories sampled from the demo
    # news histogram, then time the full entropy command end to end
    by_genre = _demo_series(demo_corpus, tmp_path_factory)
    hist = length_histogram(by_genre["news"])
    lengths = np.array(sorted(hist.bins), dtype=np.uint16)
    probs = np.array([hist.bins[int(k)] for k in lengths])
    probs = probs / probs.sum()
    rng = np.random.default_rng(9090)

    corpus_dir = tmp_path_factory.mktemp("big_series")
    for genre in ("alpha", "beta"):
        series = make_series(
            rng.choice(lengths, size=2_500_000, p=probs), genre=genre
        )
        write_series(corpus_dir / category_filename("en", genre), series)

    out = tmp_path_factory.mktemp("big_out")
    # warm pass on a small directory so JIT compilation is excluded
    warm = tmp_path_factory.mktemp("warm")
    write_series(
        warm / category_filename("en", "warm"),
        make_series(rng.choice(lengths, size=5000, p=probs), genre="warm"),
    )
    assert cli_main([
        "entropy", "--series-dir", str(warm), "--orders", "1,2,3",
        "--out", str(out / "warm"),
    ]) == 0

    start = time.perf_counter()
    code = cli_main([
        "entropy", "--series-dir", str(corpus_dir), "--segment-length", "1000",
        "--orders", "1,2,3", "--out", str(out / "big"),
    ])
    elapsed = time.perf_counter() - start
    assert code == 0
    assert elapsed <= 10.0, f"5M-word entropy run took {elapsed:.2f}s"
    _pass(9, f"5M words, orders 1-3, N=1000 in {elapsed:.2f}s")
