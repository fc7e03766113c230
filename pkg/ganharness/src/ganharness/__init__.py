"""ganharness: WGAN-GP training and GRU backtests for time series image tensors.

Trains a gradient-penalty Wasserstein GAN on batches of square image
representations, samples synthetic batches in the shared tensor format,
scores synthetic-vs-real window sets with predictive (S_P) and
discriminative (S_D) GRU backtests, and renders 2-D embedding plots.
"""

__version__ = "0.1.0"

from .backtests import BacktestConfig, ScoreResult, discriminative_score, predictive_score
from .embedding import embed_2d, umap_plot
from .scorefile import read_windows_csv, sliding_windows, write_scores
from .tensorfile import read_tensor, write_tensor
from .wgan import (
    NonFiniteLoss,
    TrainConfig,
    TrainResult,
    gradient_penalty,
    load_checkpoint,
    sample,
    save_checkpoint,
    train_wgan_gp,
)

__all__ = [
    "__version__",
    "TrainConfig",
    "TrainResult",
    "NonFiniteLoss",
    "train_wgan_gp",
    "sample",
    "save_checkpoint",
    "load_checkpoint",
    "gradient_penalty",
    "BacktestConfig",
    "ScoreResult",
    "predictive_score",
    "discriminative_score",
    "umap_plot",
    "embed_2d",
    "read_tensor",
    "write_tensor",
    "read_windows_csv",
    "sliding_windows",
    "write_scores",
]
