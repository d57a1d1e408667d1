"""Plot-ready CSV and JSON outputs.

Every file starts with comment lines (or JSON fields) carrying the tool
version, config hash and seed, so a finished run can be reproduced from
its outputs alone. Floats are written with shortest round-trip repr and
rows are emitted in sorted key order, which makes outputs byte-identical
across repeated runs.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .analysis import (
    CategorySummary,
    CrossCategoryReport,
    LengthHistogram,
    SweepResult,
)
from .entropy import EntropyEstimate, RankDistribution
from .shuffle import ComparisonReport


@dataclass(frozen=True)
class RunMeta:
    tool_version: str
    config_hash: str
    seed: int = 0

    def json_fields(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "config_hash": self.config_hash,
            "seed": self.seed,
        }


def _fmt(x: float) -> str:
    return repr(float(x))


def _category_label(category: tuple[str, str]) -> str:
    return f"{category[0]}/{category[1]}"


def _open_csv(path: Path, meta: RunMeta) -> IO[str]:
    path.parent.mkdir(parents=True, exist_ok=True)
    fh = open(path, "w", encoding="utf-8", newline="")
    fh.write(f"# lengram {meta.tool_version}\n")
    fh.write(f"# config_hash={meta.config_hash}\n")
    fh.write(f"# seed={meta.seed}\n")
    return fh


def write_phi_segments_csv(
    path: Path, estimates: Iterable[EntropyEstimate], meta: RunMeta
) -> Path:
    """Per-segment estimates: category,segment,order,phi."""
    rows = sorted(
        estimates,
        key=lambda e: (e.segment_ref[0], e.segment_ref[1] or 0, e.order),
    )
    with _open_csv(path, meta) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["category", "segment", "order", "phi"])
        for est in rows:
            category, index = est.segment_ref
            w.writerow(
                [_category_label(category), index, est.order, _fmt(est.value)]
            )
    return path


def write_fig3_bars_csv(
    path: Path, summaries: Iterable[CategorySummary], meta: RunMeta
) -> Path:
    """Per-category mean entropies with dispersion (bar-plot data)."""
    with _open_csv(path, meta) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(
            ["language", "genre", "order", "mean_phi", "std_phi", "stderr_phi",
             "segment_count"]
        )
        for s in sorted(summaries, key=lambda s: (s.category, s.order)):
            w.writerow(
                [s.category[0], s.category[1], s.order, _fmt(s.mean_phi),
                 _fmt(s.std_phi), _fmt(s.stderr_phi), s.segment_count]
            )
    return path


def write_fig4_sweep_csv(
    path: Path, sweeps: Iterable[SweepResult], meta: RunMeta
) -> Path:
    """Mean entropy versus segment length (sweep curves)."""
    with _open_csv(path, meta) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(
            ["language", "genre", "order", "segment_length", "mean_phi",
             "std_phi", "segment_count"]
        )
        for sweep in sorted(sweeps, key=lambda s: (s.category, s.order)):
            for p in sweep.points:
                w.writerow(
                    [sweep.category[0], sweep.category[1], sweep.order,
                     p.segment_length, _fmt(p.mean_phi), _fmt(p.std_phi),
                     p.segment_count]
                )
    return path


def write_fig5_ranks_csv(
    path: Path,
    distributions: Iterable[tuple[tuple[str, str], RankDistribution]],
    meta: RunMeta,
) -> Path:
    """Rank-frequency curves: rank,ngram,probability per category and order.

    The n-gram column joins symbols with spaces ("3 4 2").
    """
    items = sorted(distributions, key=lambda cd: (cd[0], cd[1].order))
    with _open_csv(path, meta) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["language", "genre", "order", "rank", "ngram", "probability"])
        for category, dist in items:
            for rank, ngram, prob in dist.entries:
                w.writerow(
                    [category[0], category[1], dist.order, rank,
                     " ".join(str(v) for v in ngram), _fmt(prob)]
                )
    return path


def write_fig6_hist_csv(
    path: Path, histograms: Iterable[LengthHistogram], meta: RunMeta
) -> Path:
    """Unigram word-length probability per category."""
    with _open_csv(path, meta) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["language", "genre", "length", "probability"])
        for hist in sorted(histograms, key=lambda h: h.category):
            for length in sorted(hist.bins):
                w.writerow(
                    [hist.category[0], hist.category[1], length,
                     _fmt(hist.bins[length])]
                )
    return path


def write_table2_csv(
    path: Path, reports: Iterable[ComparisonReport], meta: RunMeta
) -> Path:
    """Real vs shuffled means in a wide table: categories as columns,
    one real and one shuffled row per order."""
    reports = list(reports)
    categories = sorted({r.category for r in reports})
    orders = sorted({r.order for r in reports})
    cell = {(r.category, r.order): r for r in reports}
    with _open_csv(path, meta) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["quantity"] + [_category_label(c) for c in categories])
        for order in orders:
            for kind in ("real", "shuffled"):
                row = [f"phi_{order}_{kind}"]
                for c in categories:
                    r = cell.get((c, order))
                    if r is None:
                        row.append("")
                    else:
                        row.append(
                            _fmt(r.phi_real if kind == "real" else r.phi_shuffled)
                        )
                w.writerow(row)
    return path


def write_shuffle_detail_csv(
    path: Path, reports: Iterable[ComparisonReport], meta: RunMeta
) -> Path:
    """Long-format per-segment (and per-replicate) entropy values."""
    with _open_csv(path, meta) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(
            ["language", "genre", "order", "segment", "kind", "replicate", "phi"]
        )
        for r in sorted(reports, key=lambda r: (r.category, r.order)):
            lang, genre = r.category
            for si, value in enumerate(r.phi_real_per_segment):
                w.writerow([lang, genre, r.order, si, "real", "", _fmt(value)])
            for si, row in enumerate(r.phi_shuffled_per_segment):
                for rep, value in enumerate(row):
                    w.writerow(
                        [lang, genre, r.order, si, "shuffled", rep, _fmt(value)]
                    )
    return path


def _summary_dict(s: CategorySummary) -> dict:
    return {
        "language": s.category[0],
        "genre": s.category[1],
        "order": s.order,
        "mean_phi": s.mean_phi,
        "std_phi": s.std_phi,
        "stderr_phi": s.stderr_phi,
        "segment_count": s.segment_count,
    }


def write_summary_json(
    path: Path,
    meta: RunMeta,
    *,
    run_config: dict | None = None,
    summaries: Iterable[CategorySummary] = (),
    cross: CrossCategoryReport | None = None,
    histograms: Iterable[LengthHistogram] = (),
    comparisons: Iterable[ComparisonReport] = (),
    sweeps: Iterable[SweepResult] = (),
    extra: dict | None = None,
) -> Path:
    """Machine-readable run bundle with full reproducibility metadata."""
    payload: dict = dict(meta.json_fields())
    if run_config is not None:
        payload["run_config"] = run_config
    summaries = list(summaries)
    if summaries:
        payload["summaries"] = [_summary_dict(s) for s in summaries]
    if cross is not None:
        payload["rankings"] = {
            str(order): [_category_label(c) for c in cats]
            for order, cats in cross.rankings.items()
        }
        payload["pairwise"] = [
            {
                "order": p.order,
                "higher": _category_label(p.higher),
                "lower": _category_label(p.lower),
                "delta": p.delta,
                "stderr_delta": p.stderr_delta,
            }
            for p in cross.pairwise
        ]
        payload["language_deltas"] = [
            {
                "order": p.order,
                "higher": _category_label(p.higher),
                "lower": _category_label(p.lower),
                "delta": p.delta,
                "stderr_delta": p.stderr_delta,
            }
            for p in cross.language_deltas
        ]
    histograms = list(histograms)
    if histograms:
        payload["histograms"] = [
            {
                "language": h.category[0],
                "genre": h.category[1],
                "support": list(h.support),
                "bins": {str(k): v for k, v in sorted(h.bins.items())},
            }
            for h in sorted(histograms, key=lambda h: h.category)
        ]
    comparisons = list(comparisons)
    if comparisons:
        payload["comparisons"] = [
            {
                "language": r.category[0],
                "genre": r.category[1],
                "order": r.order,
                "phi_real": r.phi_real,
                "phi_shuffled": r.phi_shuffled,
                "delta": r.delta,
                "segment_count": r.segment_count,
                "replicate_count": r.replicate_count,
            }
            for r in sorted(comparisons, key=lambda r: (r.category, r.order))
        ]
    sweeps = list(sweeps)
    if sweeps:
        payload["sweeps"] = [
            {
                "language": s.category[0],
                "genre": s.category[1],
                "order": s.order,
                "points": [
                    {
                        "segment_length": p.segment_length,
                        "mean_phi": p.mean_phi,
                        "std_phi": p.std_phi,
                        "segment_count": p.segment_count,
                    }
                    for p in s.points
                ],
            }
            for s in sweeps
        ]
    if extra:
        payload.update(extra)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path
