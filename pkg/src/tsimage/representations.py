"""Encoders mapping a series of length S onto an S x S image representation.

All six encoders are pure functions built on the generic pairwise scheme
R[i, j] = f(x_i, x_j).  They take already-scaled input and fail loudly on
domain violations instead of rescaling silently: the scaling transform must
be recorded by the preprocessing step so the inversion can de-normalize
exactly.
"""

from __future__ import annotations

import numpy as np

from .core import (
    InvalidEpsilon,
    InvalidParams,
    Kind,
    NonPositiveValues,
    OutOfUnitRange,
    RepresentationMatrix,
    ScalingParams,
    series_values,
)

__all__ = [
    "encode",
    "encode_binary_rp",
    "encode_urp",
    "encode_irp",
    "encode_xirp",
    "encode_gasf",
    "encode_naive",
]


def encode_binary_rp(x, epsilon: float) -> RepresentationMatrix:
    """Binary recurrence plot: R[i, j] = 1 if |x_i - x_j| <= epsilon else 0.

    The diagonal is all ones and the matrix symmetric by construction.
    """
    if epsilon is None or not np.isfinite(epsilon) or epsilon <= 0:
        raise InvalidEpsilon(f"epsilon must be a positive finite number, got {epsilon}")
    v = series_values(x)
    dist = np.abs(np.subtract.outer(v, v))
    data = (dist <= epsilon).astype(np.float64)
    return RepresentationMatrix(data, Kind.BINARY_RP, epsilon=float(epsilon))


def encode_urp(x) -> RepresentationMatrix:
    """Unthresholded recurrence (distance) plot: R[i, j] = |x_i - x_j|."""
    v = series_values(x)
    return RepresentationMatrix(np.abs(np.subtract.outer(v, v)), Kind.URP)


def _log_ratio_matrix(v: np.ndarray) -> np.ndarray:
    if np.any(v <= 0):
        raise NonPositiveValues(
            "log-ratio encoding needs strictly positive values; rescale first"
        )
    # log(x_i) - log(x_j) == log(x_i / x_j); the difference form keeps the
    # matrix exactly antisymmetric and the diagonal exactly zero.
    logs = np.log(v)
    return np.subtract.outer(logs, logs)


def encode_irp(x) -> RepresentationMatrix:
    """Intertemporal return plot: R[i, j] = log(x_i / x_j), zero diagonal."""
    return RepresentationMatrix(_log_ratio_matrix(series_values(x)), Kind.IRP)


def encode_xirp(x) -> RepresentationMatrix:
    """Extended IRP: log-return off-diagonal, the raw series on the diagonal."""
    v = series_values(x)
    data = _log_ratio_matrix(v)
    np.fill_diagonal(data, v)
    return RepresentationMatrix(data, Kind.XIRP)


def encode_gasf(x) -> RepresentationMatrix:
    """Gramian angular summation field: R[i, j] = cos(phi_i + phi_j).

    phi_t = arccos(x_t) for input scaled to [0, 1]; entries land in [-1, 1]
    and the diagonal equals 2 x_i^2 - 1.
    """
    v = series_values(x)
    if np.any(v < 0) or np.any(v > 1):
        raise OutOfUnitRange("angular encoding needs values inside [0, 1]; rescale first")
    phi = np.arccos(v)
    return RepresentationMatrix(np.cos(np.add.outer(phi, phi)), Kind.GASF)


def encode_naive(x) -> RepresentationMatrix:
    """Naive baseline: R[i, j] = x_i, i.e. the series repeated column-wise."""
    v = series_values(x)
    return RepresentationMatrix(np.tile(v[:, None], (1, v.shape[0])), Kind.NAIVE)


def encode(
    x,
    kind: Kind,
    *,
    epsilon: float | None = None,
    scaling: ScalingParams | None = None,
) -> RepresentationMatrix:
    """Dispatch to the encoder for ``kind``; optionally tag scaling params.

    epsilon is required for Kind.BINARY_RP and rejected for every other kind.
    """
    if kind is Kind.BINARY_RP:
        matrix = encode_binary_rp(x, epsilon)
    else:
        if epsilon is not None:
            raise InvalidParams(f"epsilon only applies to {Kind.BINARY_RP.value}")
        matrix = _ENCODERS[kind](x)
    if scaling is not None:
        matrix = RepresentationMatrix(
            matrix.data, matrix.kind, epsilon=matrix.epsilon, scaling=scaling
        )
    return matrix


_ENCODERS = {
    Kind.URP: encode_urp,
    Kind.IRP: encode_irp,
    Kind.XIRP: encode_xirp,
    Kind.GASF: encode_gasf,
    Kind.NAIVE: encode_naive,
}
