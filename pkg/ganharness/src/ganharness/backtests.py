"""GRU backtests scoring synthetic windows against real ones.

Predictive score S_P: train a one-step-ahead GRU forecaster on synthetic
windows (first L-1 values in, last value out), early-stop on a validation
slice of the synthetic set, report MAE on held-out real windows; lower is
better.  Discriminative score S_D: train a GRU classifier to separate real
from synthetic windows and report the binary cross-entropy error on a
held-out test portion; higher is better, with ln 2 the indistinguishable
ceiling.  Both repeat over k folds with fold-specific splits and return
every per-fold value.
"""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass, field

import numpy as np
import torch
from torch import nn

from .models import GRUClassifier, GRURegressor

__all__ = ["BacktestConfig", "ScoreResult", "predictive_score", "discriminative_score"]


@dataclass(frozen=True)
class BacktestConfig:
    folds: int = 10
    patience: int = 10
    max_epochs: int = 150
    test_fraction: float = 0.2
    val_fraction: float = 0.15
    hidden: int = 24
    lr: float = 1e-3
    batch_size: int = 64
    seed: int = 0

    def __post_init__(self):
        if self.folds < 1:
            raise ValueError(f"folds must be >= 1, got {self.folds}")
        if not 0.0 < self.test_fraction < 1.0 or not 0.0 < self.val_fraction < 1.0:
            raise ValueError("test_fraction and val_fraction must lie in (0, 1)")


@dataclass
class ScoreResult:
    metric: str
    per_fold: list[float]
    extras: dict = field(default_factory=dict)

    @property
    def mean(self) -> float:
        return float(np.mean(self.per_fold))

    @property
    def std(self) -> float:
        return float(np.std(self.per_fold))

    def to_record(self, dataset: str, series_id: str, contender: str,
                  inversion: str | None = None) -> dict:
        return {
            "dataset": dataset,
            "series_id": series_id,
            "contender": contender,
            "metric": self.metric,
            "inversion": inversion,
            "value": self.mean,
        }


def _as_windows(arr, name: str) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] < 2:
        raise ValueError(f"{name} must be (rows, length>=2) windows, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def _check_pair(synth, real):
    synth = _as_windows(synth, "synth_windows")
    real = _as_windows(real, "real_windows")
    if synth.shape[1] != real.shape[1]:
        raise ValueError(
            f"window lengths differ: synth {synth.shape[1]} vs real {real.shape[1]}"
        )
    return synth, real


def _split(n: int, fraction: float, rng: np.random.Generator, what: str):
    idx = rng.permutation(n)
    cut = int(round(n * (1.0 - fraction)))
    if cut < 1 or cut >= n:
        raise ValueError(f"insufficient data for a fold: {n} {what} windows")
    return idx[:cut], idx[cut:]


def _fit_early_stopping(model, loss_fn, train_x, train_y, val_x, val_y, cfg):
    opt = torch.optim.Adam(model.parameters(), lr=cfg.lr)
    best_val, best_state, since_best = math.inf, None, 0
    n = train_x.shape[0]
    for _ in range(cfg.max_epochs):
        model.train()
        for start in range(0, n, cfg.batch_size):
            sl = slice(start, start + cfg.batch_size)
            opt.zero_grad()
            loss = loss_fn(model(train_x[sl]), train_y[sl])
            loss.backward()
            opt.step()
        model.eval()
        with torch.no_grad():
            val = float(loss_fn(model(val_x), val_y))
        if val < best_val - 1e-6:
            best_val, best_state, since_best = val, copy.deepcopy(model.state_dict()), 0
        else:
            since_best += 1
            if since_best > cfg.patience:
                break
    if best_state is not None:
        model.load_state_dict(best_state)
    model.eval()
    return model


def _inputs(windows: np.ndarray, mean: float, scale: float) -> torch.Tensor:
    x = (windows[:, :-1] - mean) / scale
    return torch.as_tensor(x, dtype=torch.float32).unsqueeze(-1)


def predictive_score(synth_windows, real_windows, cfg: BacktestConfig) -> ScoreResult:
    """Train on synthetic, test on real: MAE of last-element prediction per fold."""
    synth, real = _check_pair(synth_windows, real_windows)
    per_fold = []
    for k in range(cfg.folds):
        rng = np.random.default_rng(cfg.seed * 1000 + k)
        torch.manual_seed(cfg.seed * 1000 + k)
        train_idx, val_idx = _split(synth.shape[0], cfg.val_fraction, rng, "synthetic")
        _, test_idx = _split(real.shape[0], cfg.test_fraction, rng, "real")
        train, val, test = synth[train_idx], synth[val_idx], real[test_idx]

        mean, scale = float(train.mean()), float(train.std()) or 1.0
        to_t = lambda w: torch.as_tensor((w[:, -1] - mean) / scale, dtype=torch.float32)
        model = _fit_early_stopping(
            GRURegressor(cfg.hidden),
            nn.L1Loss(),
            _inputs(train, mean, scale), to_t(train),
            _inputs(val, mean, scale), to_t(val),
            cfg,
        )
        with torch.no_grad():
            pred = model(_inputs(test, mean, scale)).double().numpy() * scale + mean
        per_fold.append(float(np.mean(np.abs(pred - test[:, -1]))))
    return ScoreResult("S_P", per_fold)


def discriminative_score(synth_windows, real_windows, cfg: BacktestConfig) -> ScoreResult:
    """Real-vs-synthetic GRU classification: held-out BCE error per fold.

    Sets are balanced by seeded subsampling before splitting; classification
    accuracy is logged alongside the cross-entropy.
    """
    synth, real = _check_pair(synth_windows, real_windows)
    per_fold, accuracies = [], []
    bce = nn.BCEWithLogitsLoss()
    for k in range(cfg.folds):
        rng = np.random.default_rng(cfg.seed * 1000 + k)
        torch.manual_seed(cfg.seed * 1000 + k)
        m = min(synth.shape[0], real.shape[0])
        synth_k = synth[rng.choice(synth.shape[0], m, replace=False)]
        real_k = real[rng.choice(real.shape[0], m, replace=False)]

        train_idx, test_idx = _split(m, cfg.test_fraction, rng, "balanced")
        fit_idx, val_idx = _split(train_idx.size, cfg.val_fraction, rng, "training")
        windows = np.concatenate([real_k, synth_k])
        labels = np.concatenate([np.ones(m), np.zeros(m)])

        def both(idx):  # the same split applied to the real and synthetic halves
            return np.concatenate([idx, idx + m])

        fit_rows, val_rows, test_rows = (
            both(train_idx[fit_idx]), both(train_idx[val_idx]), both(test_idx),
        )
        mean, scale = float(windows[fit_rows].mean()), float(windows[fit_rows].std()) or 1.0
        to_x = lambda rows: torch.as_tensor(
            (windows[rows] - mean) / scale, dtype=torch.float32
        ).unsqueeze(-1)
        to_y = lambda rows: torch.as_tensor(labels[rows], dtype=torch.float32)

        model = _fit_early_stopping(
            GRUClassifier(cfg.hidden), bce,
            to_x(fit_rows), to_y(fit_rows), to_x(val_rows), to_y(val_rows), cfg,
        )
        with torch.no_grad():
            logits = model(to_x(test_rows))
            per_fold.append(float(bce(logits, to_y(test_rows))))
            predicted = (torch.sigmoid(logits) > 0.5).double().numpy()
            accuracies.append(float(np.mean(predicted == labels[test_rows])))
    return ScoreResult("S_D", per_fold, extras={"accuracy_per_fold": accuracies})
