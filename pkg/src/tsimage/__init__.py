"""tsimage: invertible image representations for univariate time series.

Encode a series into six square image representations (binary and
unthresholded recurrence plots, intertemporal return plots with and without
an extended diagonal, Gramian angular summation fields, and a naive
baseline), invert synthetic images back into series deterministically or
stochastically, generate benchmark processes, and aggregate backtest scores.
"""

__version__ = "0.1.0"

from .core import (
    INVERTIBLE_KINDS,
    Kind,
    Method,
    RepresentationMatrix,
    ScalingParams,
    TimeSeries,
    as_series,
    validate_series,
)
from .generators import build_dataset, generate
from .inversion import (
    column_variants,
    extract_diagonal,
    invert,
    reconstruct_column,
    roundtrip_error,
)
from .metrics import (
    Metric,
    ScoreRecord,
    ScoreTable,
    average_rank,
    count_best,
    improvement_pct,
    summarize,
)
from .preprocessing import apply_scaler, fit_scaler, invert_scaler, truncate, window
from .representations import (
    encode,
    encode_binary_rp,
    encode_gasf,
    encode_irp,
    encode_naive,
    encode_urp,
    encode_xirp,
)
from .tensorio import read_tensor, write_tensor

__all__ = [
    "__version__",
    "Kind",
    "Method",
    "TimeSeries",
    "RepresentationMatrix",
    "ScalingParams",
    "INVERTIBLE_KINDS",
    "as_series",
    "validate_series",
    "encode",
    "encode_binary_rp",
    "encode_urp",
    "encode_irp",
    "encode_xirp",
    "encode_gasf",
    "encode_naive",
    "extract_diagonal",
    "reconstruct_column",
    "column_variants",
    "invert",
    "roundtrip_error",
    "truncate",
    "window",
    "fit_scaler",
    "apply_scaler",
    "invert_scaler",
    "generate",
    "build_dataset",
    "Metric",
    "ScoreRecord",
    "ScoreTable",
    "summarize",
    "count_best",
    "average_rank",
    "improvement_pct",
    "read_tensor",
    "write_tensor",
]
