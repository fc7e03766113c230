"""Truncation, windowing, and representation-specific scaling with exact inverse."""

from __future__ import annotations

import dataclasses

import numpy as np

from .core import (
    InvalidParams,
    Kind,
    ScalingParams,
    TimeSeries,
    WindowTooLong,
    as_series,
    series_values,
    validate_series,
)

__all__ = ["truncate", "window", "fit_scaler", "apply_scaler", "invert_scaler"]

#: Target range keeping log-ratio input strictly positive; the 0.1 floor
#: bounds |log(x_i/x_j)| by log(10) so the encoder dynamic range stays
#: moderate for downstream training.
POSITIVE_RANGE = (0.1, 1.0)
UNIT_RANGE = (0.0, 1.0)


def truncate(x, limit: int) -> TimeSeries:
    """First min(S, limit) observations; limit must be at least 2."""
    if limit < 2:
        raise InvalidParams(f"truncation limit must be >= 2, got {limit}")
    series = validate_series(as_series(x))
    if len(series) <= limit:
        return series
    return dataclasses.replace(series, values=series.values[:limit])


def window(x, d: int, stride: int = 1) -> np.ndarray:
    """Sliding windows of length d as a (count, d) array, count = (S-d)//stride + 1."""
    if d < 1 or stride < 1:
        raise InvalidParams(f"window length and stride must be positive, got d={d} stride={stride}")
    v = series_values(x)
    if d > v.shape[0]:
        raise WindowTooLong(f"window length {d} exceeds series length {v.shape[0]}")
    return np.lib.stride_tricks.sliding_window_view(v, d)[::stride].copy()


def fit_scaler(
    x,
    kind: Kind,
    *,
    positive_range: tuple[float, float] = POSITIVE_RANGE,
    unit_range: tuple[float, float] = UNIT_RANGE,
) -> ScalingParams:
    """Scaling record taking this series into ``kind``'s feature domain.

    GASF input must live in [0, 1]; IRP/XIRP need strictly positive values;
    the remaining kinds accept any finite series and get identity params.
    Fit once per series (optionally on a training split), never per window,
    so diagonals stay comparable across windows.
    """
    v = series_values(x)
    if kind is Kind.GASF:
        lo, hi = unit_range
    elif kind in (Kind.IRP, Kind.XIRP):
        lo, hi = positive_range
    else:
        return ScalingParams.identity()
    smin, smax = float(v.min()), float(v.max())
    if smin == smax:
        return ScalingParams(smin, smax, lo, hi, constant=True)
    return ScalingParams(smin, smax, lo, hi)


def apply_scaler(x, params: ScalingParams) -> np.ndarray:
    """Affine map into the target range; a flagged constant series maps to its midpoint.

    Computed as lo + t * (hi - lo) with t = (x - min) / (max - min): t is
    exactly 0/1 at the source endpoints, so in-range input can never escape
    the target interval through rounding.
    """
    v = series_values(x)
    if params.constant:
        return np.full_like(v, (params.target_lo + params.target_hi) / 2.0)
    t = (v - params.source_min) / (params.source_max - params.source_min)
    return params.target_lo + t * (params.target_hi - params.target_lo)


def invert_scaler(y, params: ScalingParams) -> np.ndarray:
    """Exact inverse of apply_scaler; returns the recorded constant when flagged."""
    v = np.asarray(y, dtype=np.float64)
    if params.constant:
        return np.full_like(v, params.source_min)
    t = (v - params.target_lo) / (params.target_hi - params.target_lo)
    return params.source_min + t * (params.source_max - params.source_min)
