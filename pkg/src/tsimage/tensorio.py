"""Binary tensor files with a JSON sidecar, parseable from any language.

Layout: magic ``XIRP``, version u16 LE, element-type code u8 (0 = float64),
rank u8, then rank x u64 LE dimensions, then the row-major little-endian
payload.  Metadata (representation kind, scaler, window params) lives next
to the tensor in ``<file>.meta.json``.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

__all__ = ["write_tensor", "read_tensor", "meta_path", "MAGIC", "VERSION"]

MAGIC = b"XIRP"
VERSION = 1
_F64 = 0
_MAX_RANK = 8


def meta_path(path) -> Path:
    return Path(str(path) + ".meta.json")


def write_tensor(path, array, meta: dict | None = None) -> None:
    """Write a float64 tensor plus optional JSON sidecar metadata."""
    arr = np.ascontiguousarray(array, dtype="<f8")
    if arr.ndim < 1 or arr.ndim > _MAX_RANK:
        raise ValueError(f"tensor rank must be 1..{_MAX_RANK}, got {arr.ndim}")
    header = struct.pack("<4sHBB", MAGIC, VERSION, _F64, arr.ndim)
    dims = struct.pack(f"<{arr.ndim}Q", *arr.shape)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(dims)
        fh.write(arr.tobytes(order="C"))
    if meta is not None:
        with open(meta_path(path), "w") as fh:
            json.dump(meta, fh, indent=2)
            fh.write("\n")


def read_tensor(path, *, require_meta: bool = False) -> tuple[np.ndarray, dict | None]:
    """Read a tensor file back; returns (array, sidecar metadata or None)."""
    path = Path(path)
    blob = path.read_bytes()
    if len(blob) < 8:
        raise ValueError(f"{path}: corrupt tensor, shorter than the fixed header")
    magic, version, code, rank = struct.unpack_from("<4sHBB", blob, 0)
    if magic != MAGIC:
        raise ValueError(f"{path}: bad magic {magic!r}, not a tensor file")
    if version != VERSION:
        raise ValueError(f"{path}: unsupported format version {version}")
    if code != _F64:
        raise ValueError(f"{path}: unsupported element type code {code}")
    if not 1 <= rank <= _MAX_RANK:
        raise ValueError(f"{path}: corrupt tensor, rank {rank}")
    offset = 8 + 8 * rank
    if len(blob) < offset:
        raise ValueError(f"{path}: corrupt tensor, truncated dimension block")
    dims = struct.unpack_from(f"<{rank}Q", blob, 8)
    count = int(np.prod(dims, dtype=np.uint64)) if dims else 0
    if len(blob) != offset + 8 * count:
        raise ValueError(
            f"{path}: corrupt tensor, payload is {len(blob) - offset} bytes "
            f"but dims {dims} need {8 * count}"
        )
    arr = np.frombuffer(blob, dtype="<f8", offset=offset).reshape(dims).copy()
    mpath = meta_path(path)
    meta = None
    if mpath.exists():
        with open(mpath) as fh:
            meta = json.load(fh)
    elif require_meta:
        raise ValueError(f"{path}: missing required sidecar {mpath.name}")
    return arr, meta
