"""Synthetic benchmark processes, deterministic for a fixed seed.

Five families probe different behaviours: (noisy) sine for cyclic patterns,
Brownian motion for Markovian randomness, a Merton jump process for
disruptions, a Pareto-tailed increment process for heavy tails, plus an
AR(1) helper for small illustrative series.  Time steps are unitless
(delta t = 1 absorbed into the parameters).
"""

from __future__ import annotations

import numpy as np
from scipy.signal import lfilter

from .core import InvalidParams, TimeSeries

__all__ = [
    "sine",
    "noisy_sine",
    "ar1",
    "brownian",
    "merton_jump",
    "power_law",
    "generate",
    "sweep_params",
    "build_dataset",
    "FAMILIES",
    "DATASET_SIZES",
    "SERIES_LIMIT",
]

#: Observation cap applied to every generated dataset series.
SERIES_LIMIT = 1000

#: Number of series per benchmark dataset.
DATASET_SIZES = {
    "sine": 9,
    "noisy_sine": 10,
    "brownian": 10,
    "merton_jump": 10,
    "power_law": 9,
}


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParams(msg)


def sine(n: int, *, amplitude: float = 1.0, frequency: float = 0.05, phase: float = 0.0) -> np.ndarray:
    """x_t = A sin(2 pi f t + phase) for t = 0..n-1; frequency in cycles per step."""
    _check(n >= 2, f"series length must be >= 2, got {n}")
    t = np.arange(n, dtype=np.float64)
    return amplitude * np.sin(2.0 * np.pi * frequency * t + phase)


def noisy_sine(
    n: int,
    seed: int,
    *,
    amplitude: float = 1.0,
    frequency: float = 0.05,
    phase: float = 0.0,
    noise_std: float = 0.1,
) -> np.ndarray:
    """Sine wave plus i.i.d. Gaussian noise with standard deviation noise_std."""
    _check(noise_std >= 0, f"noise_std must be >= 0, got {noise_std}")
    base = sine(n, amplitude=amplitude, frequency=frequency, phase=phase)
    rng = np.random.default_rng(seed)
    return base + rng.normal(0.0, noise_std, n)


def ar1(n: int, seed: int, *, coefficient: float = 0.8, innovation_std: float = 1.0) -> np.ndarray:
    """x_t = phi x_{t-1} + eps_t with Gaussian innovations and x_0 = 0."""
    _check(n >= 2, f"series length must be >= 2, got {n}")
    _check(innovation_std >= 0, f"innovation_std must be >= 0, got {innovation_std}")
    rng = np.random.default_rng(seed)
    eps = rng.normal(0.0, innovation_std, n - 1)
    out = np.empty(n, dtype=np.float64)
    out[0] = 0.0
    out[1:] = lfilter([1.0], [1.0, -coefficient], eps)
    return out


def brownian(n: int, seed: int, *, mu: float = 0.0, sigma: float = 1.0) -> np.ndarray:
    """Arithmetic Brownian motion: x_t = x_{t-1} + mu + sigma z_t, x_0 = 0."""
    _check(n >= 2, f"series length must be >= 2, got {n}")
    _check(sigma >= 0, f"sigma must be >= 0, got {sigma}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(n - 1)
    out = np.empty(n, dtype=np.float64)
    out[0] = 0.0
    out[1:] = np.cumsum(mu + sigma * z)
    return out


def merton_jump(
    n: int,
    seed: int,
    *,
    mu: float = 0.0,
    sigma: float = 1.0,
    lam: float = 0.3,
    jump_mean: float = 0.0,
    jump_std: float = 0.5,
) -> np.ndarray:
    """Jump diffusion: drift-corrected Brownian steps plus compound-Poisson jumps.

    x_t = x_{t-1} + (mu - sigma^2/2) + sigma z_t + J_t with N_t ~ Poisson(lam)
    jumps per step, each Gaussian(jump_mean, jump_std^2).  The diffusion
    normals are drawn first, so lam = 0 reproduces ``brownian`` with drift
    mu - sigma^2/2 bit for bit under the same seed.
    """
    _check(n >= 2, f"series length must be >= 2, got {n}")
    _check(sigma >= 0, f"sigma must be >= 0, got {sigma}")
    _check(lam >= 0, f"jump intensity lam must be >= 0, got {lam}")
    _check(jump_std >= 0, f"jump_std must be >= 0, got {jump_std}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(n - 1)
    counts = rng.poisson(lam, n - 1)
    jump_z = rng.standard_normal(n - 1)
    # Sum of N_t iid Gaussians collapses to one draw with mean N_t*jump_mean
    # and variance N_t*jump_std^2; exactly zero where N_t = 0.
    jumps = jump_mean * counts + jump_std * np.sqrt(counts) * jump_z
    incr = (mu - 0.5 * sigma**2) + sigma * z + jumps
    out = np.empty(n, dtype=np.float64)
    out[0] = 0.0
    out[1:] = np.cumsum(incr)
    return out


def power_law(n: int, seed: int, *, alpha: float = 0.5) -> np.ndarray:
    """Monotone process with Pareto-tailed increments u^(-1/alpha) - 1, u ~ U(0, 1].

    Small alpha means heavier tails: slight increases are typical, large ones
    rare but much larger.  The -1 offset makes the zero increment the mode.
    """
    _check(n >= 2, f"series length must be >= 2, got {n}")
    _check(alpha > 0, f"tail exponent alpha must be > 0, got {alpha}")
    rng = np.random.default_rng(seed)
    u = 1.0 - rng.random(n - 1)  # (0, 1], avoids the u = 0 pole
    incr = u ** (-1.0 / alpha) - 1.0
    out = np.empty(n, dtype=np.float64)
    out[0] = 0.0
    out[1:] = np.cumsum(incr)
    return out


FAMILIES = {
    "sine": sine,
    "noisy_sine": noisy_sine,
    "ar1": ar1,
    "brownian": brownian,
    "merton_jump": merton_jump,
    "power_law": power_law,
}

_SEEDLESS = {"sine"}


def generate(family: str, n: int, seed: int = 0, *, name: str | None = None, **params) -> TimeSeries:
    """Build one series of the given family; deterministic for a fixed seed."""
    if family not in FAMILIES:
        raise InvalidParams(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    fn = FAMILIES[family]
    try:
        values = fn(n, **params) if family in _SEEDLESS else fn(n, seed, **params)
    except TypeError as exc:
        raise InvalidParams(f"bad parameters for {family}: {exc}") from None
    return TimeSeries(
        values,
        name=name if name is not None else family,
        seed=None if family in _SEEDLESS else seed,
    )


def sweep_params(family: str, n_series: int | None = None) -> list[dict]:
    """Per-series parameter dicts for a benchmark dataset sweep.

    Sweeps are linearly spaced over the documented ranges: Brownian sigma in
    [0.90, 0.99] with mu = 0, power-law alpha in [0.1, 0.9], sine phase over
    a full cycle, noisy-sine noise level in [0.05, 0.5], and the jump process
    pairing lam in [0.1, 1.0] with sigma in [0.90, 0.99].
    """
    if family not in DATASET_SIZES:
        raise InvalidParams(
            f"no dataset sweep for family {family!r}; choose from {sorted(DATASET_SIZES)}"
        )
    k = DATASET_SIZES[family] if n_series is None else int(n_series)
    _check(k >= 1, f"n_series must be >= 1, got {n_series}")
    if family == "sine":
        return [{"phase": p} for p in np.linspace(0.0, 2.0 * np.pi, k, endpoint=False)]
    if family == "noisy_sine":
        return [{"noise_std": s} for s in np.linspace(0.05, 0.5, k)]
    if family == "brownian":
        return [{"mu": 0.0, "sigma": s} for s in np.linspace(0.90, 0.99, k)]
    if family == "merton_jump":
        lams = np.linspace(0.1, 1.0, k)
        sigmas = np.linspace(0.90, 0.99, k)
        return [{"mu": 0.0, "sigma": s, "lam": l} for l, s in zip(lams, sigmas)]
    return [{"alpha": a} for a in np.linspace(0.1, 0.9, k)]


def build_dataset(
    family: str,
    *,
    n_series: int | None = None,
    length: int = SERIES_LIMIT,
    seed: int = 0,
) -> list[TimeSeries]:
    """The benchmark dataset for one family: one series per sweep entry.

    Lengths are capped at SERIES_LIMIT observations; per-series seeds are
    derived from the master seed by fixed offsets, so parallel construction
    stays reproducible.
    """
    length = min(int(length), SERIES_LIMIT)
    _check(length >= 2, f"series length must be >= 2, got {length}")
    out = []
    for i, params in enumerate(sweep_params(family, n_series)):
        out.append(
            generate(family, length, seed + i, name=f"{family}_{i:02d}", **params)
        )
    return out
