#!/usr/bin/env python3
"""Plot sample paths from each synthetic benchmark family.

Sine and noisy sine probe cyclic behaviour, Brownian motion pure
randomness, the jump process disruptions, and the power-law process heavy
tails.  Sweep shapes follow the benchmark protocol (9/10/10/10/9 series,
length capped at 1000).

Output: demos/output/synthetic_processes.png
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from tsimage import build_dataset

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

families = ["sine", "noisy_sine", "brownian", "merton_jump", "power_law"]
fig, axes = plt.subplots(len(families), 1, figsize=(10, 12), sharex=True)

for ax, family in zip(axes, families):
    dataset = build_dataset(family, length=400, seed=0)
    print(f"{family:12s} {len(dataset)} series of length {len(dataset[0])}")
    for series in dataset[::3]:
        ax.plot(series.values, lw=0.9, label=series.name)
    ax.set_ylabel(family)
    ax.legend(fontsize=7, loc="upper left")

axes[-1].set_xlabel("t")
fig.suptitle("synthetic benchmark processes (every third series)")
fig.tight_layout()
fig.savefig(OUT / "synthetic_processes.png", dpi=120)
print(f"wrote {OUT / 'synthetic_processes.png'}")
