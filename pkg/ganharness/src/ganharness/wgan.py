"""WGAN-GP training on image batches and seeded sampling from checkpoints.

Critic objective: E[D(fake)] - E[D(real)] + gp_weight * E[(||grad D(xhat)|| - 1)^2]
with xhat sampled uniformly on segments between real and fake images; the
generator minimizes -E[D(fake)].  Images are normalized to [-1, 1] by the
training set's min/max, which the checkpoint records so samples come back
in the original value domain.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np
import torch
from torch import nn

from .models import Critic, Generator, require_side

__all__ = ["TrainConfig", "TrainResult", "NonFiniteLoss", "gradient_penalty",
           "train_wgan_gp", "sample", "save_checkpoint", "load_checkpoint"]


class NonFiniteLoss(RuntimeError):
    """Training produced NaN/inf; carries the offending epoch."""

    def __init__(self, epoch: int, what: str):
        super().__init__(f"non-finite {what} at epoch {epoch}")
        self.epoch = epoch


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 50
    batch_size: int = 8          # small batches generalize better here
    gp_weight: float = 10.0
    critic_steps_per_gen: int = 5
    image_side: int = 20
    latent_dim: int = 64
    width: int = 64
    lr: float = 1e-4
    betas: tuple[float, float] = (0.0, 0.9)
    seed: int = 0

    def __post_init__(self):
        if self.batch_size < 1 or self.epochs < 1 or self.critic_steps_per_gen < 1:
            raise ValueError("epochs, batch_size and critic_steps_per_gen must be positive")
        if self.gp_weight < 0:
            raise ValueError(f"gp_weight must be >= 0, got {self.gp_weight}")
        require_side(self.image_side)


@dataclass
class TrainResult:
    config: TrainConfig
    generator_state: dict
    critic_state: dict
    value_lo: float
    value_hi: float
    history: dict = field(default_factory=dict)  # per-epoch critic/gen/gp means
    source_meta: dict | None = None              # sidecar of the training tensor


def gradient_penalty(critic: nn.Module, real: torch.Tensor, fake: torch.Tensor,
                     alpha: torch.Tensor | None = None) -> torch.Tensor:
    """Mean squared distance of the critic's gradient norm from 1 on interpolates."""
    if alpha is None:
        alpha = torch.rand(real.shape[0], 1, 1, 1, device=real.device)
    mixed = (alpha * real + (1.0 - alpha) * fake).requires_grad_(True)
    scores = critic(mixed)
    grads = torch.autograd.grad(scores.sum(), mixed, create_graph=True)[0]
    norms = grads.flatten(1).norm(2, dim=1)
    return ((norms - 1.0) ** 2).mean()


def _normalize(images: np.ndarray) -> tuple[torch.Tensor, float, float]:
    lo, hi = float(images.min()), float(images.max())
    if hi == lo:
        hi = lo + 1.0
    scaled = 2.0 * (images - lo) / (hi - lo) - 1.0
    return torch.as_tensor(scaled, dtype=torch.float32).unsqueeze(1), lo, hi


def train_wgan_gp(images: np.ndarray, cfg: TrainConfig,
                  source_meta: dict | None = None, log=None) -> TrainResult:
    """Train on a (N, d, d) image batch; returns networks, bounds, loss history.

    Raises NonFiniteLoss with the offending epoch if any logged quantity
    stops being finite.
    """
    images = np.asarray(images, dtype=np.float64)
    if images.ndim != 3 or images.shape[1] != images.shape[2]:
        raise ValueError(f"expected (N, d, d) images, got {images.shape}")
    if images.shape[1] != cfg.image_side:
        raise ValueError(f"config image_side {cfg.image_side} != data side {images.shape[1]}")
    if not np.all(np.isfinite(images)):
        raise ValueError("training images contain non-finite values")
    if images.shape[0] < cfg.batch_size:
        raise ValueError(f"need at least batch_size={cfg.batch_size} images, got {images.shape[0]}")

    torch.manual_seed(cfg.seed)
    data, lo, hi = _normalize(images)
    loader = torch.utils.data.DataLoader(
        torch.utils.data.TensorDataset(data),
        batch_size=cfg.batch_size,
        shuffle=True,
        drop_last=True,
        generator=torch.Generator().manual_seed(cfg.seed),
    )

    gen = Generator(cfg.image_side, cfg.latent_dim, cfg.width)
    critic = Critic(cfg.image_side, cfg.width)
    opt_g = torch.optim.Adam(gen.parameters(), lr=cfg.lr, betas=cfg.betas)
    opt_c = torch.optim.Adam(critic.parameters(), lr=cfg.lr, betas=cfg.betas)

    history = {"critic_loss": [], "gen_loss": [], "gradient_penalty": []}
    step = 0
    for epoch in range(cfg.epochs):
        c_losses, g_losses, gps = [], [], []
        for (real,) in loader:
            # critic step
            z = torch.randn(real.shape[0], cfg.latent_dim)
            fake = gen(z).detach()
            gp = gradient_penalty(critic, real, fake)
            w_gap = critic(fake).mean() - critic(real).mean()
            c_loss = w_gap + cfg.gp_weight * gp
            opt_c.zero_grad()
            c_loss.backward()
            opt_c.step()
            c_losses.append(float(c_loss.detach()))
            gps.append(float(gp.detach()))

            step += 1
            if step % cfg.critic_steps_per_gen == 0:
                z = torch.randn(real.shape[0], cfg.latent_dim)
                g_loss = -critic(gen(z)).mean()
                opt_g.zero_grad()
                g_loss.backward()
                opt_g.step()
                g_losses.append(float(g_loss.detach()))

        epoch_stats = {
            "critic_loss": float(np.mean(c_losses)),
            "gen_loss": float(np.mean(g_losses)) if g_losses else 0.0,
            "gradient_penalty": float(np.mean(gps)),
        }
        for key, value in epoch_stats.items():
            if not np.isfinite(value):
                raise NonFiniteLoss(epoch, key)
            history[key].append(value)
        if log is not None:
            log(epoch, epoch_stats)

    return TrainResult(
        config=cfg,
        generator_state=gen.state_dict(),
        critic_state=critic.state_dict(),
        value_lo=lo,
        value_hi=hi,
        history=history,
        source_meta=source_meta,
    )


def sample(result: TrainResult, count: int, seed: int) -> np.ndarray:
    """Draw (count, d, d) images in the original value domain; seeded, repeatable."""
    cfg = result.config
    gen = Generator(cfg.image_side, cfg.latent_dim, cfg.width)
    gen.load_state_dict(result.generator_state)
    gen.eval()
    rng = torch.Generator().manual_seed(seed)
    with torch.no_grad():
        z = torch.randn(count, cfg.latent_dim, generator=rng)
        raw = gen(z).squeeze(1).double().numpy()
    return (raw + 1.0) / 2.0 * (result.value_hi - result.value_lo) + result.value_lo


def save_checkpoint(path, result: TrainResult) -> None:
    torch.save(
        {
            "config": asdict(result.config),
            "generator_state": result.generator_state,
            "critic_state": result.critic_state,
            "value_lo": result.value_lo,
            "value_hi": result.value_hi,
            "history": result.history,
            "source_meta": result.source_meta,
        },
        path,
    )


def load_checkpoint(path) -> TrainResult:
    blob = torch.load(path, weights_only=False)
    cfg_dict = dict(blob["config"])
    cfg_dict["betas"] = tuple(cfg_dict["betas"])
    return TrainResult(
        config=TrainConfig(**cfg_dict),
        generator_state=blob["generator_state"],
        critic_state=blob["critic_state"],
        value_lo=blob["value_lo"],
        value_hi=blob["value_hi"],
        history=blob["history"],
        source_meta=blob.get("source_meta"),
    )
