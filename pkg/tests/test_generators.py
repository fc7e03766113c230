"""Generator determinism, worked values, sweep shapes, statistical checks."""

import numpy as np
import pytest

from tsimage.core import InvalidParams
from tsimage.generators import (
    DATASET_SIZES,
    ar1,
    brownian,
    build_dataset,
    generate,
    merton_jump,
    noisy_sine,
    power_law,
    sine,
    sweep_params,
)


def test_sine_quarter_period_values():
    x = sine(20, amplitude=1.0, frequency=1.0 / 20.0, phase=0.0)
    assert abs(x[0]) <= 1e-12
    assert abs(x[5] - 1.0) <= 1e-12
    assert abs(x[10]) <= 1e-12
    assert abs(x[15] + 1.0) <= 1e-12


def test_brownian_zero_vol_is_constant():
    assert np.array_equal(brownian(100, seed=1, mu=0.0, sigma=0.0), np.zeros(100))


def test_seed_determinism_bitwise():
    for fn, kwargs in (
        (noisy_sine, {}),
        (ar1, {}),
        (brownian, {"sigma": 0.9}),
        (merton_jump, {"lam": 0.4}),
        (power_law, {"alpha": 0.3}),
    ):
        a = fn(500, 42, **kwargs)
        b = fn(500, 42, **kwargs)
        assert np.array_equal(a, b)
        c = fn(500, 43, **kwargs)
        assert not np.array_equal(a, c)


def test_merton_without_jumps_is_drifted_diffusion_bitwise():
    mu, sigma = 0.05, 0.3
    jumpless = merton_jump(800, seed=9, mu=mu, sigma=sigma, lam=0.0)
    diffusion = brownian(800, seed=9, mu=mu - 0.5 * sigma**2, sigma=sigma)
    assert np.array_equal(jumpless, diffusion)


def test_merton_jumps_change_the_path():
    a = merton_jump(500, seed=3, lam=0.0)
    b = merton_jump(500, seed=3, lam=0.8)
    assert not np.array_equal(a, b)


def test_brownian_increment_statistics():
    sigma = 0.9
    x = brownian(1000, seed=12345, mu=0.0, sigma=sigma)
    incr = np.diff(x)
    assert abs(incr.mean()) <= 3.0 * sigma / np.sqrt(incr.size)
    assert abs(incr.std() - sigma) <= 0.1 * sigma


def test_ar1_long_run_variance():
    phi, std = 0.8, 1.0
    x = ar1(100_000, seed=77, coefficient=phi, innovation_std=std)
    target = std**2 / (1.0 - phi**2)
    assert abs(np.var(x) - target) <= 0.15 * target


def test_power_law_increments_nonnegative_and_tail_ordering():
    medians = []
    for alpha in (0.1, 0.5, 0.9):
        maxima = []
        for seed in range(30):
            x = power_law(1000, seed=seed, alpha=alpha)
            incr = np.diff(x)
            assert np.all(incr >= 0.0)
            maxima.append(incr.max())
        medians.append(np.median(maxima))
    assert medians[0] > medians[1] > medians[2]


def test_invalid_params_rejected():
    with pytest.raises(InvalidParams):
        brownian(100, seed=0, sigma=-1.0)
    with pytest.raises(InvalidParams):
        merton_jump(100, seed=0, lam=-0.1)
    with pytest.raises(InvalidParams):
        power_law(100, seed=0, alpha=0.0)
    with pytest.raises(InvalidParams):
        noisy_sine(100, seed=0, noise_std=-0.5)
    with pytest.raises(InvalidParams):
        sine(1)
    with pytest.raises(InvalidParams):
        generate("weibull", 100)
    with pytest.raises(InvalidParams):
        generate("brownian", 100, nu=2.0)  # unknown parameter name


def test_generate_wraps_metadata():
    s = generate("brownian", 300, seed=5, sigma=0.95)
    assert s.name == "brownian" and s.seed == 5 and len(s) == 300
    assert generate("sine", 50).seed is None


def test_dataset_sizes_match_benchmark_table():
    for family, n in DATASET_SIZES.items():
        ds = build_dataset(family, length=64, seed=1)
        assert len(ds) == n, family
        assert all(len(s) == 64 for s in ds)
    assert [DATASET_SIZES[f] for f in ("sine", "noisy_sine", "brownian", "merton_jump", "power_law")] == [9, 10, 10, 10, 9]


def test_sweep_values():
    sigmas = [p["sigma"] for p in sweep_params("brownian")]
    assert np.allclose(sigmas, np.arange(0.90, 0.991, 0.01), atol=1e-12)
    alphas = [p["alpha"] for p in sweep_params("power_law")]
    assert np.allclose(alphas, np.arange(0.1, 0.91, 0.1), atol=1e-12)
    assert len(sweep_params("sine")) == 9
    assert all(p["mu"] == 0.0 for p in sweep_params("brownian"))


def test_length_is_capped():
    ds = build_dataset("brownian", length=5000, seed=0)
    assert all(len(s) == 1000 for s in ds)
    with pytest.raises(InvalidParams):
        build_dataset("sine", n_series=0)
