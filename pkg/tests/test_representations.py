"""Encoder contracts: worked examples, structural invariants, domain errors."""

import math

import numpy as np
import pytest

from tsimage.core import (
    InvalidEpsilon,
    InvalidParams,
    Kind,
    NonPositiveValues,
    OutOfUnitRange,
)
from tsimage.representations import (
    encode,
    encode_binary_rp,
    encode_gasf,
    encode_irp,
    encode_naive,
    encode_urp,
    encode_xirp,
)

RNG = np.random.default_rng(20240817)


def random_positive_series(rng, n=None):
    n = n or int(rng.integers(2, 30))
    return np.exp(rng.normal(0.0, 1.0, n))  # spans a few orders of magnitude


# ---------------------------------------------------------------------------
# binary recurrence plot


def test_binary_rp_worked_example():
    m = encode_binary_rp([0.0, 0.1, 0.5], 0.2)
    expected = [[1, 1, 0], [1, 1, 0], [0, 0, 1]]
    assert np.array_equal(m.data, expected)
    assert m.kind is Kind.BINARY_RP and m.epsilon == 0.2


def test_binary_rp_constant_series_all_ones():
    m = encode_binary_rp([3.0, 3.0, 3.0], 1e-9)
    assert np.array_equal(m.data, np.ones((3, 3)))


def test_binary_rp_rejects_bad_epsilon():
    for eps in (0.0, -1.0, np.nan, None):
        with pytest.raises(InvalidEpsilon):
            encode_binary_rp([0.0, 1.0], eps)


def test_binary_rp_drifting_series_clusters_near_diagonal():
    # On a trending series recurrences concentrate near the diagonal: the
    # recurrence rate in far-off-diagonal bands falls below the near band.
    rng = np.random.default_rng(7)
    x = 0.1 * np.arange(200) + rng.normal(0.0, 0.3, 200)  # AR-style noise on a drift
    m = encode_binary_rp(x, 0.2)
    i, j = np.indices(m.data.shape)
    lag = np.abs(i - j)
    near = m.data[(lag > 0) & (lag <= 10)].mean()
    far = m.data[lag >= 100].mean()
    assert near > 5 * far


# ---------------------------------------------------------------------------
# unthresholded recurrence plot


def test_urp_worked_examples():
    assert np.array_equal(encode_urp([1.0, 3.0]).data, [[0, 2], [2, 0]])
    assert np.array_equal(encode_urp([4.0, 4.0, 4.0]).data, np.zeros((3, 3)))
    assert np.array_equal(
        encode_urp([1.0, 2.0, 4.0]).data, [[0, 1, 3], [1, 0, 2], [3, 2, 0]]
    )


def test_urp_scales_linearly_not_invariantly():
    x = random_positive_series(RNG, 12)
    base = encode_urp(x).data
    scaled = encode_urp(3.0 * x).data
    assert np.allclose(scaled, 3.0 * base, rtol=1e-12, atol=0)
    assert not np.allclose(scaled, base)


# ---------------------------------------------------------------------------
# intertemporal return plot


def test_irp_worked_example_logs():
    m = encode_irp([1.0, 2.0, 4.0]).data
    assert math.isclose(m[0, 1], math.log(0.5), rel_tol=1e-12)
    assert math.isclose(m[0, 2], math.log(0.25), rel_tol=1e-12)
    assert math.isclose(m[1, 2], math.log(0.5), rel_tol=1e-12)
    assert np.all(np.diagonal(m) == 0.0)
    assert np.array_equal(np.tril(m), -np.triu(m).T)


def test_irp_constant_series_zero_matrix():
    assert np.array_equal(encode_irp([7.0, 7.0, 7.0]).data, np.zeros((3, 3)))


def test_irp_rejects_nonpositive():
    with pytest.raises(NonPositiveValues):
        encode_irp([1.0, -1.0])
    with pytest.raises(NonPositiveValues):
        encode_irp([1.0, 0.0])


def test_irp_exact_antisymmetry_random():
    for _ in range(50):
        m = encode_irp(random_positive_series(RNG)).data
        assert np.array_equal(m, -m.T)


def test_irp_log_return_additivity():
    for _ in range(20):
        m = encode_irp(random_positive_series(RNG, 15)).data
        # R[i,k] == R[i,j] + R[j,k] for every intermediate j
        lhs = m[:, None, :]
        rhs = m[:, :, None] + m[None, :, :]
        assert np.max(np.abs(rhs - np.broadcast_to(lhs, rhs.shape))) <= 1e-10


def test_irp_scale_invariance():
    x = random_positive_series(RNG, 20)
    for c in (1e-3, 0.5, 7.0, 1e3):
        assert np.allclose(encode_irp(c * x).data, encode_irp(x).data, atol=1e-12)


# ---------------------------------------------------------------------------
# extended intertemporal return plot


def test_xirp_worked_example():
    m = encode_xirp([1.0, 2.0, 4.0]).data
    assert np.array_equal(np.diagonal(m), [1.0, 2.0, 4.0])
    irp = encode_irp([1.0, 2.0, 4.0]).data
    off = ~np.eye(3, dtype=bool)
    assert np.array_equal(m[off], irp[off])


def test_xirp_partial_scale_invariance():
    x = random_positive_series(RNG, 10)
    c = 3.7
    base, scaled = encode_xirp(x).data, encode_xirp(c * x).data
    off = ~np.eye(10, dtype=bool)
    assert np.allclose(scaled[off], base[off], atol=1e-12)
    assert np.allclose(np.diagonal(scaled), c * np.diagonal(base), rtol=1e-12)


def test_xirp_diagonal_carries_the_series():
    # The extension point: the otherwise-unused diagonal holds the raw values.
    x = random_positive_series(RNG, 25)
    assert np.array_equal(np.diagonal(encode_xirp(x).data), x)


# ---------------------------------------------------------------------------
# Gramian angular summation field


def test_gasf_worked_example_exact_trig():
    m = encode_gasf([0.0, 0.5, 1.0]).data
    s3 = math.sqrt(3.0) / 2.0
    expected = np.array([[-1.0, -s3, 0.0], [-s3, -0.5, 0.5], [0.0, 0.5, 1.0]])
    assert np.allclose(m, expected, atol=1e-12)


def test_gasf_constant_ones():
    assert np.allclose(encode_gasf([1.0, 1.0, 1.0, 1.0]).data, 1.0, atol=0)


def test_gasf_rejects_out_of_unit_range():
    with pytest.raises(OutOfUnitRange):
        encode_gasf([2.0, 3.0])
    with pytest.raises(OutOfUnitRange):
        encode_gasf([-0.1, 0.5])


def test_gasf_entry_domain_symmetry_and_diagonal():
    for _ in range(30):
        x = RNG.random(int(RNG.integers(2, 25)))
        m = encode_gasf(x).data
        assert np.array_equal(m, m.T)
        assert np.all(m >= -1.0) and np.all(m <= 1.0)
        assert np.allclose(np.diagonal(m), 2.0 * x**2 - 1.0, atol=1e-12)


def test_gasf_not_scale_invariant_witness():
    # Independent scalar-math oracle for the witness pair x=[0.2, 0.8], c=0.5.
    def gasf_entry(a, b):
        return math.cos(math.acos(a) + math.acos(b))

    base = encode_gasf([0.2, 0.8]).data
    scaled = encode_gasf([0.1, 0.4]).data
    assert math.isclose(base[0, 1], gasf_entry(0.2, 0.8), abs_tol=1e-12)
    assert math.isclose(scaled[0, 1], gasf_entry(0.1, 0.4), abs_tol=1e-12)
    assert abs(base[0, 1] - scaled[0, 1]) > 0.1


# ---------------------------------------------------------------------------
# naive representation


def test_naive_worked_example():
    assert np.array_equal(encode_naive([5.0, 7.0]).data, [[5, 5], [7, 7]])


def test_naive_every_column_is_the_series():
    x = RNG.normal(0.0, 3.0, 17)
    m = encode_naive(x).data
    for j in range(17):
        assert np.array_equal(m[:, j], x)


# ---------------------------------------------------------------------------
# dispatcher


def test_dispatch_matches_direct_encoders():
    x = [1.0, 2.0, 4.0]
    assert np.array_equal(encode(x, Kind.XIRP).data, encode_xirp(x).data)
    assert np.array_equal(
        encode([0.0, 0.1, 0.5], Kind.BINARY_RP, epsilon=0.2).data,
        encode_binary_rp([0.0, 0.1, 0.5], 0.2).data,
    )


def test_dispatch_forwards_preconditions():
    with pytest.raises(OutOfUnitRange):
        encode([2.0, 3.0], Kind.GASF)
    with pytest.raises(InvalidEpsilon):
        encode([0.0, 1.0], Kind.BINARY_RP)  # epsilon mandatory
    with pytest.raises(InvalidParams):
        encode([0.0, 1.0], Kind.URP, epsilon=0.2)  # stray epsilon


def test_symmetric_kinds_exactly_symmetric():
    x = random_positive_series(RNG, 18)
    for m in (encode_binary_rp(x, 0.3), encode_urp(x), encode_gasf(x / (2 * x.max()))):
        assert np.array_equal(m.data, m.data.T)
