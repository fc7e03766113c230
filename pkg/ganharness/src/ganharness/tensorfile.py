"""Reader/writer for the image tensor interchange format.

Independent implementation of the format the imaging toolkit emits: magic
``XIRP``, version u16 LE, element-type code u8 (0 = float64), rank u8,
rank x u64 LE dims, row-major little-endian payload, JSON sidecar at
``<file>.meta.json``.  Kept separate on purpose -- the two packages talk
through files, not imports.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

MAGIC = b"XIRP"
VERSION = 1


def meta_path(path) -> Path:
    return Path(str(path) + ".meta.json")


def write_tensor(path, array, meta: dict | None = None) -> None:
    arr = np.ascontiguousarray(array, dtype="<f8")
    with open(path, "wb") as fh:
        fh.write(struct.pack("<4sHBB", MAGIC, VERSION, 0, arr.ndim))
        fh.write(struct.pack(f"<{arr.ndim}Q", *arr.shape))
        fh.write(arr.tobytes(order="C"))
    if meta is not None:
        with open(meta_path(path), "w") as fh:
            json.dump(meta, fh, indent=2)
            fh.write("\n")


def read_tensor(path) -> tuple[np.ndarray, dict | None]:
    blob = Path(path).read_bytes()
    if len(blob) < 8:
        raise ValueError(f"{path}: not a tensor file (too short)")
    magic, version, code, rank = struct.unpack_from("<4sHBB", blob, 0)
    if magic != MAGIC or version != VERSION or code != 0:
        raise ValueError(f"{path}: unsupported tensor header {(magic, version, code)}")
    dims = struct.unpack_from(f"<{rank}Q", blob, 8)
    arr = np.frombuffer(blob, dtype="<f8", offset=8 + 8 * rank)
    if arr.size != int(np.prod(dims)):
        raise ValueError(f"{path}: payload does not match dims {dims}")
    meta = None
    mp = meta_path(path)
    if mp.exists():
        meta = json.loads(mp.read_text())
    return arr.reshape(dims).copy(), meta
