#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the per-segment hot path (window packing + counting + entropy) and
the keyed Fisher-Yates shuffle on synthetic word-length data, then prints
both backends side by side. The first numba call compiles; compilation is
excluded by a warm-up pass.

Usage:
    python benchmarks/bench_backends.py [--segments 2000] [--segment-length 1000]
"""

import argparse
import time

import numpy as np

from lengram._backend import available_backends, get_implementation


def bench_count_entropy(impl, segments, orders):
    start = time.perf_counter()
    for values in segments:
        base = int(values.max()) + 1
        for order in orders:
            keys = impl["pack_windows"](values, order, base)
            _, counts = impl["unique_counts"](keys)
            impl["entropy_nats"](counts, keys.shape[0])
    return time.perf_counter() - start


def bench_shuffle(impl, segments):
    start = time.perf_counter()
    for i, values in enumerate(segments):
        impl["permute"](values, np.uint64(i))
    return time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--segments", type=int, default=2000)
    parser.add_argument("--segment-length", type=int, default=1000)
    parser.add_argument("--orders", default="1,2,3")
    args = parser.parse_args()

    orders = [int(tok) for tok in args.orders.split(",")]
    rng = np.random.default_rng(0)
    segments = [
        rng.integers(1, 15, size=args.segment_length).astype(np.int64)
        for _ in range(args.segments)
    ]
    total_words = args.segments * args.segment_length

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(
        f"workload: {args.segments} segments x {args.segment_length} words, "
        f"orders {orders}"
    )

    results = {}
    for name in backends:
        impl = get_implementation(name)
        # warm-up: triggers JIT compilation for numba, no-op cost for numpy
        bench_count_entropy(impl, segments[:2], orders)
        bench_shuffle(impl, segments[:2])
        t_count = bench_count_entropy(impl, segments, orders)
        t_shuffle = bench_shuffle(impl, segments)
        results[name] = (t_count, t_shuffle)
        print(
            f"{name:>6}: count+entropy {t_count:7.3f}s "
            f"({total_words / t_count / 1e6:6.1f} Mwords/s), "
            f"shuffle {t_shuffle:7.3f}s "
            f"({args.segments / t_shuffle:8.0f} segments/s)"
        )

    if "numba" in results and "numpy" in results:
        c_np, s_np = results["numpy"]
        c_nb, s_nb = results["numba"]
        print(
            f"speedup numba vs numpy: count+entropy {c_np / c_nb:.1f}x, "
            f"shuffle {s_np / s_nb:.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
