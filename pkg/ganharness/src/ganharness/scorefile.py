"""Score records in the aggregator's CSV schema, plus window CSV helpers."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

SCORE_HEADER = ["dataset", "series_id", "contender", "metric", "inversion", "value"]


def write_scores(path, rows: list[dict]) -> None:
    """rows: dicts with dataset/series_id/contender/metric/inversion/value."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SCORE_HEADER)
        for r in rows:
            writer.writerow(
                [
                    r["dataset"],
                    r["series_id"],
                    r["contender"],
                    r["metric"],
                    r.get("inversion") or "",
                    repr(float(r["value"])),
                ]
            )


def read_windows_csv(path) -> np.ndarray:
    """Windows as a (rows, width) array; also accepts a single-column series CSV."""
    path = Path(path)
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            cells = line.split(",")
            if lineno == 1 and cells == ["value"]:
                continue
            try:
                rows.append([float(c) for c in cells])
            except ValueError:
                raise ValueError(f"{path} line {lineno}: not numeric: {line!r}") from None
    if not rows:
        raise ValueError(f"{path}: empty file")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError(f"{path}: ragged rows (widths {sorted(widths)})")
    return np.asarray(rows, dtype=np.float64)


def sliding_windows(series: np.ndarray, length: int, stride: int = 1) -> np.ndarray:
    series = np.asarray(series, dtype=np.float64).reshape(-1)
    if length > series.size:
        raise ValueError(f"window length {length} exceeds series length {series.size}")
    return np.lib.stride_tricks.sliding_window_view(series, length)[::stride].copy()
