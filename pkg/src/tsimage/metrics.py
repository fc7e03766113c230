"""Aggregate per-series backtest scores into summary statistics.

Scores arrive as flat (dataset, series, contender, metric) records; this
module turns them into per-contender means with standard deviations, counts
of best scores, average ranks 1..k, and mean-vs-random-column improvement
percentages.  The discriminative score is higher-is-better, the predictive
score lower-is-better.

Ties: ranking averages the tied rank positions; best-counting splits the
win 1/t among t tied winners so counts still sum to the number of series.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy.stats import rankdata

from .core import EmptyGroup, MissingContender

__all__ = [
    "Metric",
    "ScoreRecord",
    "ScoreTable",
    "summarize",
    "count_best",
    "average_rank",
    "improvement_pct",
    "improvement_summary",
    "SCORE_CSV_HEADER",
]

SCORE_CSV_HEADER = ["dataset", "series_id", "contender", "metric", "inversion", "value"]


class Metric(Enum):
    """Backtest metric identifiers as they appear in score files."""

    DISCRIMINATIVE = "S_D"
    PREDICTIVE = "S_P"

    @property
    def higher_is_better(self) -> bool:
        return self is Metric.DISCRIMINATIVE


@dataclass(frozen=True)
class ScoreRecord:
    dataset: str
    series_id: str
    contender: str
    metric: Metric
    value: float
    inversion: str | None = None

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise ValueError(f"score value must be finite, got {self.value}")


class ScoreTable:
    """An immutable collection of score records with CSV round-tripping."""

    def __init__(self, records):
        self.records = tuple(records)
        seen = set()
        for r in self.records:
            key = (r.dataset, r.series_id, r.metric, r.contender, r.inversion)
            if key in seen:
                raise ValueError(f"duplicate score record for {key}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.records)

    def subset(
        self,
        dataset: str | None = None,
        metric: Metric | None = None,
        inversion: str | None = None,
    ) -> list[ScoreRecord]:
        return [
            r
            for r in self.records
            if (dataset is None or r.dataset == dataset)
            and (metric is None or r.metric is metric)
            and (inversion is None or r.inversion == inversion)
        ]

    @property
    def datasets(self) -> list[str]:
        return sorted({r.dataset for r in self.records})

    @property
    def contenders(self) -> list[str]:
        return sorted({r.contender for r in self.records})

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(SCORE_CSV_HEADER)
            for r in self.records:
                writer.writerow(
                    [
                        r.dataset,
                        r.series_id,
                        r.contender,
                        r.metric.value,
                        r.inversion or "",
                        repr(float(r.value)),
                    ]
                )

    @classmethod
    def from_csv(cls, path) -> "ScoreTable":
        path = Path(path)
        records = []
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise ValueError(f"{path}: empty score file") from None
            if [h.strip() for h in header] != SCORE_CSV_HEADER:
                raise ValueError(
                    f"{path} line 1: expected header {','.join(SCORE_CSV_HEADER)}, "
                    f"got {','.join(header)}"
                )
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != len(SCORE_CSV_HEADER):
                    raise ValueError(f"{path} line {lineno}: expected 6 fields, got {len(row)}")
                dataset, series_id, contender, metric_s, inversion, value_s = row
                try:
                    metric = Metric(metric_s.strip())
                except ValueError:
                    raise ValueError(
                        f"{path} line {lineno}: unknown metric {metric_s!r}"
                    ) from None
                try:
                    value = float(value_s)
                except ValueError:
                    raise ValueError(
                        f"{path} line {lineno}: bad score value {value_s!r}"
                    ) from None
                try:
                    records.append(
                        ScoreRecord(
                            dataset.strip(),
                            series_id.strip(),
                            contender.strip(),
                            metric,
                            value,
                            inversion.strip() or None,
                        )
                    )
                except ValueError as exc:
                    raise ValueError(f"{path} line {lineno}: {exc}") from None
        return cls(records)


def _grouped_by_series(table: ScoreTable, dataset: str | None, metric: Metric):
    """{series_id: {contender: value}} for one (dataset, metric) slice."""
    groups: dict[str, dict[str, float]] = {}
    for r in table.subset(dataset=dataset, metric=metric):
        groups.setdefault(r.series_id, {})[r.contender] = r.value
    if not groups:
        raise EmptyGroup(f"no records for dataset={dataset!r} metric={metric.value}")
    return groups


def summarize(table: ScoreTable, dataset: str | None, metric: Metric) -> dict[str, tuple[float, float]]:
    """Per-contender (mean, population std) over the grouped score rows."""
    by_contender: dict[str, list[float]] = {}
    for r in table.subset(dataset=dataset, metric=metric):
        by_contender.setdefault(r.contender, []).append(r.value)
    if not by_contender:
        raise EmptyGroup(f"no records for dataset={dataset!r} metric={metric.value}")
    return {
        c: (float(np.mean(vals)), float(np.std(vals)))
        for c, vals in sorted(by_contender.items())
    }


def _full_contender_rows(table: ScoreTable, dataset: str | None, metric: Metric):
    """Per-series value dicts, checked to cover every contender."""
    groups = _grouped_by_series(table, dataset, metric)
    contenders = sorted({c for vals in groups.values() for c in vals})
    for series_id, vals in groups.items():
        missing = [c for c in contenders if c not in vals]
        if missing:
            raise MissingContender(
                f"series {series_id!r} ({metric.value}) lacks scores for {missing}"
            )
    return contenders, groups


def count_best(table: ScoreTable, dataset: str | None, metric: Metric) -> dict[str, float]:
    """How often each contender scores best; ties split the win evenly.

    Splits are accumulated as exact fractions so the counts always sum to
    the number of series, whatever the tie pattern.
    """
    contenders, groups = _full_contender_rows(table, dataset, metric)
    counts = {c: Fraction(0) for c in contenders}
    for vals in groups.values():
        arr = np.array([vals[c] for c in contenders])
        best = arr.max() if metric.higher_is_better else arr.min()
        winners = [c for c, v in zip(contenders, arr) if v == best]
        for w in winners:
            counts[w] += Fraction(1, len(winners))
    return {c: float(n) for c, n in counts.items()}


def average_rank(table: ScoreTable, metric: Metric, dataset: str | None = None) -> dict[str, float]:
    """Mean rank per contender, rank 1 best; tied values share averaged ranks."""
    contenders, groups = _full_contender_rows(table, dataset, metric)
    totals = {c: 0.0 for c in contenders}
    for vals in groups.values():
        arr = np.array([vals[c] for c in contenders])
        ranks = rankdata(-arr if metric.higher_is_better else arr, method="average")
        for c, r in zip(contenders, ranks):
            totals[c] += r
    return {c: totals[c] / len(groups) for c in contenders}


def improvement_pct(im_score: float, irc_score: float, metric: Metric) -> float:
    """Signed % improvement of random-column over mean inversion.

    Higher-is-better scores improve by (irc - im) / im; lower-is-better by
    (im - irc) / irc, so a positive sign always means IRC did better.
    """
    denom = im_score if metric.higher_is_better else irc_score
    if denom == 0:
        raise ZeroDivisionError(
            f"improvement for {metric.value} undefined with zero {'IM' if metric.higher_is_better else 'IRC'} score"
        )
    if metric.higher_is_better:
        return 100.0 * (irc_score - im_score) / denom
    return 100.0 * (im_score - irc_score) / denom


def improvement_summary(table: ScoreTable) -> list[dict]:
    """Mean IM vs IRC score and improvement % per (contender, metric).

    Expects records tagged with inversion "im" and "irc".
    """
    rows = []
    for contender in table.contenders:
        for metric in Metric:
            im_vals = [
                r.value
                for r in table.subset(metric=metric, inversion="im")
                if r.contender == contender
            ]
            irc_vals = [
                r.value
                for r in table.subset(metric=metric, inversion="irc")
                if r.contender == contender
            ]
            if not im_vals or not irc_vals:
                continue
            im, irc = float(np.mean(im_vals)), float(np.mean(irc_vals))
            rows.append(
                {
                    "contender": contender,
                    "metric": metric.value,
                    "im": im,
                    "irc": irc,
                    "improvement_pct": improvement_pct(im, irc, metric),
                }
            )
    if not rows:
        raise EmptyGroup("no im/irc tagged record pairs to compare")
    return rows
