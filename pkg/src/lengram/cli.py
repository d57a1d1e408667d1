"""Batch command-line frontend.

Subcommands mirror the pipeline stages: ``ingest`` tokenizes documents into
persisted word-length series, ``entropy``/``sweep``/``shuffle-compare`` read
those series back and emit plot-ready CSV and JSON. Every output embeds the
tool version, a hash of the resolved configuration and the seed, and byte
content depends only on inputs + configuration.

Exit codes: 0 success, 2 input error, 3 data insufficiency, 1 internal error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__, reports, seriesio
from .analysis import (
    cross_category_report,
    estimate_segments,
    length_histogram,
    summarize,
    sweep_segment_length,
)
from .entropy import count_ngrams, rank_distribution
from .errors import IngestError, InsufficientDataError, LengramError
from .ingest import (
    TokenizerConfig,
    build_category_series,
    discover_corpus_root,
    load_documents,
    load_manifest,
)
from .reports import RunMeta
from .segmentation import SegmentationPolicy, segment
from .shuffle import ShuffleConfig, compare_real_shuffled

_REMAINDER_FLAGS = {"drop": "drop", "keep-half": "keep_if_at_least_half"}


def _parse_orders(text: str) -> list[int]:
    try:
        orders = sorted({int(tok) for tok in text.split(",") if tok.strip()})
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad orders {text!r}: {exc}")
    if not orders or any(n < 1 for n in orders):
        raise argparse.ArgumentTypeError("orders must be integers >= 1")
    return orders


def _parse_sweep(text: str) -> tuple[int, int, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sweep range must be MIN:MAX:STEP")
    try:
        n_min, n_max, step = (int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad sweep range {text!r}: {exc}")
    if n_min < 2 or step < 1 or n_max < n_min:
        raise argparse.ArgumentTypeError("sweep range must satisfy 2 <= MIN <= MAX, STEP >= 1")
    return n_min, n_max, step


def _parse_formats(text: str) -> set[str]:
    formats = {tok.strip() for tok in text.split(",") if tok.strip()}
    if not formats or not formats <= {"csv", "json"}:
        raise argparse.ArgumentTypeError("format must be a subset of csv,json")
    return formats


def _config_hash(resolved: dict) -> str:
    canonical = json.dumps(resolved, sort_keys=True, separators=(",", ":"))
    return hashlib.blake2b(canonical.encode("utf-8"), digest_size=8).hexdigest()


def _apply_config_file(args: argparse.Namespace) -> None:
    """Fill unset (None) options from --config JSON; explicit flags win."""
    if getattr(args, "config", None) is None:
        return
    path = Path(args.config)
    if not path.is_file():
        raise IngestError(f"config file not found: {path}")
    try:
        values = json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise IngestError(f"malformed config file {path}: {exc}") from exc
    if not isinstance(values, dict):
        raise IngestError(f"config file {path} must hold a JSON object")
    parsers = {
        "orders": _parse_orders,
        "sweep": _parse_sweep,
        "format": _parse_formats,
        "manifest": Path,
        "corpus_root": Path,
        "series_dir": Path,
        "out": Path,
    }
    for key, value in values.items():
        if not hasattr(args, key) or key == "config":
            continue
        if getattr(args, key) is None:
            if key in parsers and isinstance(value, str):
                value = parsers[key](value)
            setattr(args, key, value)


def _resolve(args: argparse.Namespace, **defaults) -> None:
    for key, value in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None, help="output directory")
    parser.add_argument(
        "--format", type=_parse_formats, default=None,
        help="output formats, subset of csv,json (default both)",
    )
    parser.add_argument(
        "--config", type=Path, default=None,
        help="JSON config file; explicit flags take precedence",
    )


def _add_segmentation(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--segment-length", type=int, default=None, dest="segment_length")
    parser.add_argument(
        "--remainder", choices=sorted(_REMAINDER_FLAGS), default=None,
        help="what to do with the trailing partial segment",
    )
    parser.add_argument("--orders", type=_parse_orders, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lengram",
        description="Word-length n-gram entropies of text corpora",
    )
    parser.add_argument("--version", action="version", version=f"lengram {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="tokenize documents into series files")
    p_ingest.add_argument("--manifest", type=Path, default=None)
    p_ingest.add_argument("--corpus-root", type=Path, default=None, dest="corpus_root")
    p_ingest.add_argument(
        "--letter-policy", default=None, dest="letter_policy",
        choices=["unicode_letters", "unicode_letters_plus_internal_apostrophe"],
    )
    p_ingest.add_argument("--min-word-length", type=int, default=None, dest="min_word_length")
    p_ingest.add_argument("--max-word-length", type=int, default=None, dest="max_word_length")
    p_ingest.add_argument(
        "--series-format", choices=["binary", "text"], default=None, dest="series_format",
    )
    _add_common(p_ingest)
    p_ingest.set_defaults(func=cmd_ingest)

    p_entropy = sub.add_parser("entropy", help="per-segment entropies and summaries")
    p_entropy.add_argument("--series-dir", type=Path, default=None, dest="series_dir")
    _add_segmentation(p_entropy)
    _add_common(p_entropy)
    p_entropy.set_defaults(func=cmd_entropy)

    p_sweep = sub.add_parser("sweep", help="entropy versus segment length")
    p_sweep.add_argument("--series-dir", type=Path, default=None, dest="series_dir")
    p_sweep.add_argument("--sweep", type=_parse_sweep, default=None, metavar="MIN:MAX:STEP")
    p_sweep.add_argument("--orders", type=_parse_orders, default=None)
    _add_common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_shuffle = sub.add_parser(
        "shuffle-compare", help="real versus shuffled-surrogate entropies"
    )
    p_shuffle.add_argument("--series-dir", type=Path, default=None, dest="series_dir")
    _add_segmentation(p_shuffle)
    p_shuffle.add_argument("--seed", type=int, default=None)
    p_shuffle.add_argument("--replicates", type=int, default=None)
    _add_common(p_shuffle)
    p_shuffle.set_defaults(func=cmd_shuffle_compare)

    return parser


def _require_out(args: argparse.Namespace) -> Path:
    if args.out is None:
        raise IngestError("--out is required (flag or config file)")
    return args.out


def cmd_ingest(args: argparse.Namespace) -> int:
    _resolve(
        args,
        letter_policy="unicode_letters",
        min_word_length=1,
        max_word_length=40,
        series_format="binary",
        format={"csv", "json"},
    )
    out = _require_out(args)
    if (args.manifest is None) == (args.corpus_root is None):
        raise IngestError("exactly one of --manifest or --corpus-root is required")
    tokenizer = TokenizerConfig(
        letter_policy=args.letter_policy,
        min_word_length=args.min_word_length,
        max_word_length=args.max_word_length,
    )
    if args.manifest is not None:
        records = load_manifest(Path(args.manifest))
        base_dir = Path(args.manifest).parent
    else:
        records = discover_corpus_root(Path(args.corpus_root))
        base_dir = Path(args.corpus_root)
    if not records:
        raise IngestError("no documents")
    docs = load_documents(records, base_dir)
    series_list, doc_drops = build_category_series(docs, tokenizer)
    if not series_list:
        raise IngestError("no documents produced any words")

    resolved = {
        "command": "ingest",
        "tokenizer": tokenizer.to_dict(),
        "series_format": args.series_format,
    }
    meta = RunMeta(
        tool_version=__version__, config_hash=_config_hash(resolved), seed=0
    )
    series_dir = out / "series"
    report: dict = {"categories": [], "documents": len(docs)}
    for series in series_list:
        name = seriesio.category_filename(
            series.language, series.genre, args.series_format
        )
        drops = {
            doc_id: doc_drops[doc_id] for doc_id, _, _ in series.source_ids
        }
        seriesio.write_series(
            series_dir / name,
            series,
            fmt=args.series_format,
            config=tokenizer.to_dict(),
            config_hash=meta.config_hash,
            tool_version=__version__,
            drops=drops,
        )
        dropped = {
            "digit_tokens": sum(d.digit_tokens for d in drops.values()),
            "short_tokens": sum(d.short_tokens for d in drops.values()),
            "long_tokens": sum(d.long_tokens for d in drops.values()),
        }
        report["categories"].append(
            {
                "language": series.language,
                "genre": series.genre,
                "file": name,
                "words": len(series),
                "documents": len(series.source_ids),
                "dropped": dropped,
            }
        )
        print(
            f"{series.language}/{series.genre}: {len(series)} words from "
            f"{len(series.source_ids)} documents "
            f"(dropped {dropped['digit_tokens']} digit, "
            f"{dropped['short_tokens']} short, {dropped['long_tokens']} long)"
        )
    if "json" in args.format:
        reports.write_summary_json(
            out / "ingest_report.json", meta, run_config=resolved, extra=report
        )
    return 0


def _load_series(args: argparse.Namespace):
    if args.series_dir is None:
        raise IngestError("--series-dir is required (flag or config file)")
    return seriesio.load_series_dir(Path(args.series_dir))


def cmd_entropy(args: argparse.Namespace) -> int:
    _resolve(
        args,
        segment_length=1000,
        remainder="drop",
        orders=[1, 2, 3],
        format={"csv", "json"},
    )
    out = _require_out(args)
    policy = SegmentationPolicy(
        segment_length=args.segment_length,
        remainder_policy=_REMAINDER_FLAGS[args.remainder],
    )
    if max(args.orders) > policy.segment_length:
        raise IngestError("orders cannot exceed the segment length")
    series_list = _load_series(args)
    resolved = {
        "command": "entropy",
        "segment_length": policy.segment_length,
        "remainder_policy": policy.remainder_policy,
        "orders": args.orders,
    }
    meta = RunMeta(
        tool_version=__version__, config_hash=_config_hash(resolved), seed=0
    )

    estimates = []
    histograms = []
    ranked = []
    for series in series_list:
        segments = segment(series, policy)
        estimates.extend(estimate_segments(segments, args.orders))
        histograms.append(length_histogram(series))
        for order in args.orders:
            ranked.append(
                (series.category, rank_distribution(count_ngrams(series, order)))
            )
    summaries = summarize(estimates)
    cross = (
        cross_category_report(summaries, histograms)
        if len(series_list) >= 2
        else None
    )

    if "csv" in args.format:
        reports.write_phi_segments_csv(out / "phi_segments.csv", estimates, meta)
        reports.write_fig3_bars_csv(out / "fig3_bars.csv", summaries, meta)
        reports.write_fig5_ranks_csv(out / "fig5_ranks.csv", ranked, meta)
        reports.write_fig6_hist_csv(out / "fig6_hist.csv", histograms, meta)
    if "json" in args.format:
        reports.write_summary_json(
            out / "summary.json",
            meta,
            run_config=resolved,
            summaries=summaries,
            cross=cross,
            histograms=histograms,
        )
    for s in summaries:
        print(
            f"{s.category[0]}/{s.category[1]} order {s.order}: "
            f"mean_phi={s.mean_phi:.6f} (std {s.std_phi:.6f}, "
            f"{s.segment_count} segments)"
        )
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    _resolve(
        args,
        sweep=(250, 3000, 250),
        orders=[1, 2, 3],
        format={"csv", "json"},
    )
    out = _require_out(args)
    n_min, n_max, step = args.sweep
    if max(args.orders) > n_min:
        raise IngestError("orders cannot exceed the smallest sweep segment length")
    series_list = _load_series(args)
    resolved = {
        "command": "sweep",
        "sweep": [n_min, n_max, step],
        "orders": args.orders,
    }
    meta = RunMeta(
        tool_version=__version__, config_hash=_config_hash(resolved), seed=0
    )
    sweeps = []
    for series in series_list:
        sweeps.extend(
            sweep_segment_length(series, args.orders, n_min, n_max, step)
        )
    if "csv" in args.format:
        reports.write_fig4_sweep_csv(out / "fig4_sweep.csv", sweeps, meta)
    if "json" in args.format:
        reports.write_summary_json(
            out / "sweep.json", meta, run_config=resolved, sweeps=sweeps
        )
    total_points = sum(len(s.points) for s in sweeps)
    print(f"swept {len(series_list)} categories, {total_points} grid points")
    return 0


def cmd_shuffle_compare(args: argparse.Namespace) -> int:
    _resolve(
        args,
        segment_length=1000,
        remainder="drop",
        orders=[1, 2, 3],
        seed=0,
        replicates=10,
        format={"csv", "json"},
    )
    out = _require_out(args)
    policy = SegmentationPolicy(
        segment_length=args.segment_length,
        remainder_policy=_REMAINDER_FLAGS[args.remainder],
    )
    if max(args.orders) > policy.segment_length:
        raise IngestError("orders cannot exceed the segment length")
    shuffle_config = ShuffleConfig(seed=args.seed, replicates=args.replicates)
    series_list = _load_series(args)
    resolved = {
        "command": "shuffle-compare",
        "segment_length": policy.segment_length,
        "remainder_policy": policy.remainder_policy,
        "orders": args.orders,
        "seed": shuffle_config.seed,
        "replicates": shuffle_config.replicates,
    }
    meta = RunMeta(
        tool_version=__version__,
        config_hash=_config_hash(resolved),
        seed=shuffle_config.seed,
    )
    comparisons = []
    for series in series_list:
        segments = segment(series, policy)
        comparisons.extend(
            compare_real_shuffled(segments, args.orders, shuffle_config)
        )
    if "csv" in args.format:
        reports.write_table2_csv(out / "table2_compare.csv", comparisons, meta)
        reports.write_shuffle_detail_csv(out / "shuffle_detail.csv", comparisons, meta)
    if "json" in args.format:
        reports.write_summary_json(
            out / "shuffle.json", meta, run_config=resolved, comparisons=comparisons
        )
    for r in comparisons:
        print(
            f"{r.category[0]}/{r.category[1]} order {r.order}: "
            f"real={r.phi_real:.6f} shuffled={r.phi_shuffled:.6f} "
            f"delta={r.delta:+.6f}"
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _apply_config_file(args)
        return args.func(args)
    except IngestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InsufficientDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except LengramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
