"""Network definitions: convolutional generator/critic pair and GRU backtest nets.

The generator/critic are deliberately small DCGAN-style nets sized for
square images whose side is divisible by 4 (two stride-2 stages); all
hyperparameters live in TrainConfig so every score record can log the
architecture it came from.  The critic uses no batch norm, as gradient
penalties require per-sample gradients.
"""

from __future__ import annotations

import torch
from torch import nn


def require_side(side: int) -> int:
    if side < 4 or side % 4 != 0:
        raise ValueError(f"image side must be a multiple of 4 and >= 4, got {side}")
    return side


class Generator(nn.Module):
    def __init__(self, side: int, latent_dim: int, width: int = 64):
        super().__init__()
        require_side(side)
        self.latent_dim = latent_dim
        base = side // 4
        self.base = base
        self.width = width
        self.fc = nn.Linear(latent_dim, 2 * width * base * base)
        self.net = nn.Sequential(
            nn.BatchNorm2d(2 * width),
            nn.ReLU(),
            nn.ConvTranspose2d(2 * width, width, 4, stride=2, padding=1),
            nn.BatchNorm2d(width),
            nn.ReLU(),
            nn.ConvTranspose2d(width, 1, 4, stride=2, padding=1),
            nn.Tanh(),  # samples live in [-1, 1]; de-normalized on export
        )

    def forward(self, z: torch.Tensor) -> torch.Tensor:
        h = self.fc(z).view(z.shape[0], 2 * self.width, self.base, self.base)
        return self.net(h)


class Critic(nn.Module):
    def __init__(self, side: int, width: int = 64):
        super().__init__()
        require_side(side)
        base = side // 4
        self.net = nn.Sequential(
            nn.Conv2d(1, width, 4, stride=2, padding=1),
            nn.LeakyReLU(0.2),
            nn.Conv2d(width, 2 * width, 4, stride=2, padding=1),
            nn.LeakyReLU(0.2),
            nn.Flatten(),
            nn.Linear(2 * width * base * base, 1),
        )

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        return self.net(x).squeeze(-1)


class GRURegressor(nn.Module):
    """Reads a (batch, steps, 1) sequence, predicts the next value.

    The head predicts the change from the last observation (persistence
    skip); without it the net must relearn the identity map for every
    level, which makes fold scores erratic on trending inputs.
    """

    def __init__(self, hidden: int = 24):
        super().__init__()
        self.gru = nn.GRU(1, hidden, batch_first=True)
        self.head = nn.Linear(hidden, 1)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        _, h = self.gru(x)
        return x[:, -1, 0] + self.head(h[-1]).squeeze(-1)


class GRUClassifier(nn.Module):
    """Reads a (batch, steps, 1) sequence, emits a real-vs-synthetic logit."""

    def __init__(self, hidden: int = 24):
        super().__init__()
        self.gru = nn.GRU(1, hidden, batch_first=True)
        self.head = nn.Linear(hidden, 1)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        _, h = self.gru(x)
        return self.head(h[-1]).squeeze(-1)
