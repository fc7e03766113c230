"""Shared domain types: series, representation kinds, scaling records, errors.

Everything here is an immutable value object; instances can be shared freely
across threads. All numeric storage is float64 -- the log/arccos compositions
used downstream amplify rounding error too much at 32-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Kind",
    "Method",
    "TimeSeries",
    "RepresentationMatrix",
    "ScalingParams",
    "INVERTIBLE_KINDS",
    "as_series",
    "validate_series",
    "series_values",
    "NonFiniteValues",
    "SeriesTooShort",
    "InvalidEpsilon",
    "NonPositiveValues",
    "OutOfUnitRange",
    "NotInvertible",
    "WindowTooLong",
    "DegenerateParams",
    "InvalidParams",
    "MissingContender",
    "EmptyGroup",
]


class NonFiniteValues(ValueError):
    """Series or matrix contains NaN or infinite entries."""


class SeriesTooShort(ValueError):
    """Pairwise encodings need at least two observations."""


class InvalidEpsilon(ValueError):
    """Recurrence threshold must be a positive finite number."""


class NonPositiveValues(ValueError):
    """Log-ratio encodings need strictly positive input; rescale first."""


class OutOfUnitRange(ValueError):
    """Polar-angle encoding needs input inside [0, 1]; rescale first."""


class NotInvertible(ValueError):
    """Representation kind has no information-bearing diagonal to invert from."""


class WindowTooLong(ValueError):
    """Requested window length exceeds the series length."""


class DegenerateParams(ValueError):
    """Scaling record is malformed (collapsed or reversed ranges)."""


class InvalidParams(ValueError):
    """Generator or encoder parameters outside their valid domain."""


class MissingContender(ValueError):
    """A series lacks a score for one of the contenders being compared."""


class EmptyGroup(ValueError):
    """No score records match the requested (dataset, metric) group."""


class Kind(Enum):
    """The six image representation kinds.

    Values double as the stable string tags used in CLI flags and file
    sidecars.
    """

    BINARY_RP = "binary_rp"
    URP = "urp"
    IRP = "irp"
    XIRP = "xirp"
    GASF = "gasf"
    NAIVE = "naive"


#: Kinds whose diagonal carries enough information to recover the series
#: without an external start value.
INVERTIBLE_KINDS = frozenset({Kind.XIRP, Kind.GASF, Kind.NAIVE})


class Method(Enum):
    """How to turn a (possibly inconsistent) representation back into a series.

    DIAGONAL reads the diagonal only.  MEAN averages the per-column
    reconstructions ("inversion by mean", IM).  RANDOM_COLUMN picks one
    per-column reconstruction uniformly at random ("inversion by random
    column", IRC) and always needs an explicit seed.
    """

    DIAGONAL = "diagonal"
    MEAN = "im"
    RANDOM_COLUMN = "irc"


def _frozen_array(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-D array, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TimeSeries:
    """Ordered real-valued observations with optional name/seed metadata."""

    values: np.ndarray
    name: str = ""
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values, ndim=1))

    def __len__(self) -> int:
        return self.values.shape[0]


def as_series(x, name: str = "") -> TimeSeries:
    """Wrap array-like input as a TimeSeries; pass TimeSeries through."""
    if isinstance(x, TimeSeries):
        return x
    return TimeSeries(np.asarray(x), name=name)


def validate_series(x) -> TimeSeries:
    """Check the series invariants and return the series unchanged.

    Raises:
        SeriesTooShort: fewer than two observations.
        NonFiniteValues: NaN or infinity present.
    """
    series = as_series(x)
    if len(series) < 2:
        raise SeriesTooShort(f"need at least 2 observations, got {len(series)}")
    if not np.all(np.isfinite(series.values)):
        raise NonFiniteValues("series contains NaN or infinite values")
    return series


def series_values(x) -> np.ndarray:
    """Validate and return the raw float64 value array of a series."""
    return validate_series(x).values


@dataclass(frozen=True)
class ScalingParams:
    """Affine transform record enabling exact de-normalization after inversion.

    Forward map: y = target_lo + (x - source_min) * (target_hi - target_lo)
    / (source_max - source_min).  A constant source series cannot support
    that map; it is flagged, every point maps to the midpoint of the target
    range, and the inverse returns the recorded constant.
    """

    source_min: float
    source_max: float
    target_lo: float
    target_hi: float
    constant: bool = False

    def __post_init__(self):
        vals = (self.source_min, self.source_max, self.target_lo, self.target_hi)
        if not all(np.isfinite(v) for v in vals):
            raise DegenerateParams(f"non-finite scaling params {vals}")
        if not self.target_hi > self.target_lo:
            raise DegenerateParams(
                f"target range collapsed: [{self.target_lo}, {self.target_hi}]"
            )
        if self.constant:
            if self.source_min != self.source_max:
                raise DegenerateParams("constant flag set but source range is not a point")
        elif not self.source_max > self.source_min:
            raise DegenerateParams(
                f"source range collapsed: [{self.source_min}, {self.source_max}]"
            )

    @classmethod
    def identity(cls) -> "ScalingParams":
        return cls(0.0, 1.0, 0.0, 1.0)

    @property
    def factor(self) -> float:
        if self.constant:
            return 0.0
        return (self.target_hi - self.target_lo) / (self.source_max - self.source_min)

    @property
    def is_identity(self) -> bool:
        return (
            not self.constant
            and self.target_lo == self.source_min
            and self.target_hi == self.source_max
        )

    def to_dict(self) -> dict:
        return {
            "source_min": self.source_min,
            "source_max": self.source_max,
            "target_lo": self.target_lo,
            "target_hi": self.target_hi,
            "constant": self.constant,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScalingParams":
        return cls(
            source_min=float(d["source_min"]),
            source_max=float(d["source_max"]),
            target_lo=float(d["target_lo"]),
            target_hi=float(d["target_hi"]),
            constant=bool(d.get("constant", False)),
        )


@dataclass(frozen=True)
class RepresentationMatrix:
    """S x S image representation of a series, tagged with its kind.

    Row index i corresponds to the first argument of the pairwise encoding,
    column index j to the second; column semantics matter for random-column
    inversion.  Entries must be finite and the matrix square; kind-specific
    entry domains (e.g. GASF in [-1, 1]) are deliberately NOT enforced here
    because generated matrices violate them by small margins.
    """

    data: np.ndarray
    kind: Kind
    epsilon: float | None = None
    scaling: ScalingParams | None = None

    def __post_init__(self):
        arr = _frozen_array(self.data, ndim=2)
        if arr.shape[0] != arr.shape[1]:
            raise ValueError(f"representation matrix must be square, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValues("representation matrix contains NaN or infinite values")
        object.__setattr__(self, "data", arr)
        if self.kind is Kind.BINARY_RP:
            if self.epsilon is None or not self.epsilon > 0:
                raise InvalidEpsilon("binary recurrence matrix must carry its epsilon > 0")
        elif self.epsilon is not None:
            raise InvalidParams(f"{self.kind.value} carries no epsilon parameter")

    @property
    def side(self) -> int:
        return self.data.shape[0]
