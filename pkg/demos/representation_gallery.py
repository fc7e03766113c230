#!/usr/bin/env python3
"""Render all six image representations of one drifting AR(1) series.

Reproduces the classic side-by-side view: recurrences cluster near the
diagonal on a trending series, the return plots show early large returns,
the naive representation is horizontal stripes, and the angular field
shifts mass toward the high-valued corner.

Output: demos/output/representation_gallery.png
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from tsimage import Kind, encode, fit_scaler, apply_scaler
from tsimage.generators import ar1

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# A short AR(1) path with an added drift so recurrences are local.
n = 20
x = ar1(n, seed=8, coefficient=0.7, innovation_std=0.25) + 0.15 * np.arange(n) + 1.0

panels = [
    (Kind.BINARY_RP, {"epsilon": 0.2}, "binary recurrence plot (eps=0.2)"),
    (Kind.URP, {}, "unthresholded recurrence plot"),
    (Kind.IRP, {}, "intertemporal return plot"),
    (Kind.XIRP, {}, "extended intertemporal return plot"),
    (Kind.NAIVE, {}, "naive column stack"),
    (Kind.GASF, {}, "Gramian angular summation field"),
]

fig, axes = plt.subplots(2, 4, figsize=(16, 7))
axes[0, 0].plot(x, marker="o", ms=3)
axes[0, 0].set_title("input series (drifting AR(1))")

flat = [axes[0, 1], axes[0, 2], axes[0, 3], axes[1, 1], axes[1, 2], axes[1, 3]]
for ax, (kind, kwargs, title) in zip(flat, panels):
    scaler = fit_scaler(x, kind)
    m = encode(apply_scaler(x, scaler), kind, **kwargs)
    im = ax.imshow(m.data, cmap="viridis", origin="upper")
    ax.set_title(title, fontsize=10)
    fig.colorbar(im, ax=ax, fraction=0.046)
axes[1, 0].axis("off")

fig.tight_layout()
fig.savefig(OUT / "representation_gallery.png", dpi=120)
print(f"wrote {OUT / 'representation_gallery.png'}")
