"""Tensor file format: bit-exact roundtrips and corruption detection."""

import struct

import numpy as np
import pytest

from tsimage.tensorio import MAGIC, VERSION, meta_path, read_tensor, write_tensor

RNG = np.random.default_rng(55)


def test_roundtrip_bit_exact(tmp_path):
    for shape in ((7,), (3, 5), (4, 6, 6)):
        arr = RNG.normal(0.0, 1e3, shape)
        path = tmp_path / "t.bin"
        write_tensor(path, arr, meta={"kind": "xirp", "d": shape[-1]})
        back, meta = read_tensor(path)
        assert back.shape == arr.shape
        assert np.array_equal(back, arr)  # exact, including signs of zeros
        assert back.tobytes() == arr.astype("<f8").tobytes()
        assert meta == {"kind": "xirp", "d": shape[-1]}


def test_write_then_write_is_byte_identical(tmp_path):
    arr = RNG.normal(0.0, 1.0, (5, 4, 4))
    p1, p2 = tmp_path / "a.bin", tmp_path / "b.bin"
    write_tensor(p1, arr)
    write_tensor(p2, arr)
    assert p1.read_bytes() == p2.read_bytes()


def test_meta_sidecar_optional(tmp_path):
    path = tmp_path / "t.bin"
    write_tensor(path, np.zeros(3))
    arr, meta = read_tensor(path)
    assert meta is None
    with pytest.raises(ValueError, match="sidecar"):
        read_tensor(path, require_meta=True)
    assert not meta_path(path).exists()


def test_corruption_detection(tmp_path):
    path = tmp_path / "t.bin"
    write_tensor(path, np.arange(6.0).reshape(2, 3))
    blob = bytearray(path.read_bytes())

    bad = tmp_path / "bad.bin"
    bad.write_bytes(b"NOPE" + bytes(blob[4:]))
    with pytest.raises(ValueError, match="magic"):
        read_tensor(bad)

    bad.write_bytes(bytes(blob[:-8]))  # truncated payload
    with pytest.raises(ValueError, match="corrupt"):
        read_tensor(bad)

    wrong_version = bytearray(blob)
    wrong_version[4:6] = struct.pack("<H", 99)
    bad.write_bytes(bytes(wrong_version))
    with pytest.raises(ValueError, match="version"):
        read_tensor(bad)

    wrong_dtype = bytearray(blob)
    wrong_dtype[6] = 7
    bad.write_bytes(bytes(wrong_dtype))
    with pytest.raises(ValueError, match="element type"):
        read_tensor(bad)

    bad.write_bytes(bytes(blob[:6]))
    with pytest.raises(ValueError, match="header"):
        read_tensor(bad)


def test_header_layout_is_as_documented(tmp_path):
    path = tmp_path / "t.bin"
    write_tensor(path, np.ones((2, 3)))
    blob = path.read_bytes()
    magic, version, code, rank = struct.unpack_from("<4sHBB", blob, 0)
    assert magic == MAGIC == b"XIRP"
    assert version == VERSION and code == 0 and rank == 2
    assert struct.unpack_from("<2Q", blob, 8) == (2, 3)
    assert len(blob) == 8 + 16 + 6 * 8
