"""Recover a time series from a representation matrix.

Generated matrices are usually not self-consistent, so beyond reading the
diagonal there is one reconstruction per column: column j supplies the
off-diagonal return/angle information and the diagonal the baseline value.
The per-column reconstructions are either averaged (inversion by mean, IM)
or sampled (inversion by random column, IRC).  Matrices are used as-is --
no symmetrization -- because the value of random-column inversion lies
precisely in exploiting the inconsistency.
"""

from __future__ import annotations

import numpy as np

from .core import (
    INVERTIBLE_KINDS,
    Kind,
    Method,
    NotInvertible,
    RepresentationMatrix,
    series_values,
)
from .representations import encode

__all__ = [
    "extract_diagonal",
    "reconstruct_column",
    "column_variants",
    "invert",
    "repair_consistency",
    "roundtrip_error",
    "IRC_PRNG",
]

#: Generator behind random-column draws, recorded in output metadata so IRC
#: experiments can be reproduced across implementations.
IRC_PRNG = "numpy-pcg64"


def _require_invertible(matrix: RepresentationMatrix) -> None:
    if matrix.kind not in INVERTIBLE_KINDS:
        raise NotInvertible(
            f"{matrix.kind.value} has no information-bearing diagonal; "
            "it cannot be inverted without an external start value"
        )


def extract_diagonal(matrix: RepresentationMatrix) -> np.ndarray:
    """Read the series straight off the diagonal, ignoring the off-diagonal.

    XIRP and the naive representation store the series directly; GASF stores
    cos(2 phi_i) = 2 x_i^2 - 1, inverted here with the diagonal clamped to
    [-1, 1] so slightly out-of-bound generated values cannot produce NaN.
    """
    _require_invertible(matrix)
    diag = np.diagonal(matrix.data).copy()
    if matrix.kind is Kind.GASF:
        return np.sqrt((np.clip(diag, -1.0, 1.0) + 1.0) / 2.0)
    return diag


def column_variants(matrix: RepresentationMatrix) -> np.ndarray:
    """All per-column reconstructions as an S x S matrix (column j = variant j).

    For a self-consistent matrix every column reproduces the series exactly.
    """
    _require_invertible(matrix)
    data = matrix.data
    if matrix.kind is Kind.NAIVE:
        return data.copy()
    if matrix.kind is Kind.XIRP:
        base = np.diagonal(data).copy()
        returns = data.copy()
        # The diagonal cell of column j is the baseline itself, not a return;
        # zeroing it makes exp() map it back to exactly base[j].
        np.fill_diagonal(returns, 0.0)
        return base[None, :] * np.exp(returns)
    # GASF: undo the angle sum against column j's own angle.
    phi = np.arccos(extract_diagonal(matrix))
    return np.cos(np.arccos(np.clip(data, -1.0, 1.0)) - phi[None, :])


def reconstruct_column(matrix: RepresentationMatrix, j: int) -> np.ndarray:
    """Series variant built from column j plus the diagonal baseline."""
    if not 0 <= j < matrix.side:
        raise IndexError(f"column {j} out of range for side {matrix.side}")
    return column_variants(matrix)[:, j]


def invert(
    matrix: RepresentationMatrix,
    method: Method,
    *,
    seed: int | None = None,
    log_space_mean: bool = False,
) -> np.ndarray:
    """Invert a representation matrix back into a series.

    Args:
        matrix: an invertible-kind representation (XIRP, GASF or naive).
        method: DIAGONAL, MEAN (IM) or RANDOM_COLUMN (IRC).
        seed: required for RANDOM_COLUMN; drives a deterministic PCG64 draw
            of the column index.
        log_space_mean: XIRP-only extension averaging the positive column
            variants geometrically instead of arithmetically; off by default
            because IM is defined as the plain average.
    """
    if method is Method.DIAGONAL:
        return extract_diagonal(matrix)
    variants = column_variants(matrix)
    if method is Method.MEAN:
        if log_space_mean:
            if matrix.kind is not Kind.XIRP:
                raise ValueError("log_space_mean applies to xirp matrices only")
            return np.exp(np.mean(np.log(variants), axis=1))
        # Average relative to the diagonal baseline: identical in exact
        # arithmetic, but keeps IM bit-equal to the diagonal when every
        # variant already agrees with it (e.g. naive matrices).
        base = extract_diagonal(matrix)
        return base + (variants - base[:, None]).mean(axis=1)
    if method is Method.RANDOM_COLUMN:
        if seed is None:
            raise ValueError("random-column inversion requires an explicit seed")
        rng = np.random.default_rng(seed)
        k = int(rng.integers(matrix.side))
        return variants[:, k]
    raise ValueError(f"unknown inversion method {method!r}")


def repair_consistency(matrix: RepresentationMatrix) -> RepresentationMatrix:
    """Project an XIRP matrix onto its antisymmetric part, keeping the diagonal.

    Optional cleanup for generated matrices; disabled in the normal pipeline
    because the inversion deliberately consumes the inconsistent columns.
    """
    if matrix.kind is not Kind.XIRP:
        raise NotInvertible("consistency repair is defined for xirp matrices only")
    data = (matrix.data - matrix.data.T) / 2.0
    np.fill_diagonal(data, np.diagonal(matrix.data))
    return RepresentationMatrix(data, Kind.XIRP, scaling=matrix.scaling)


def roundtrip_error(
    x,
    kind: Kind,
    method: Method,
    *,
    epsilon: float | None = None,
    seed: int | None = None,
) -> float:
    """Max absolute error between x and invert(encode(x)); diagnostic only."""
    v = series_values(x)
    recovered = invert(encode(v, kind, epsilon=epsilon), method, seed=seed)
    return float(np.max(np.abs(recovered - v)))
