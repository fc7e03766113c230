"""2-D embedding scatter comparing real and synthetic windows.

Each window's steps count as one feature vector.  Uses UMAP when the
package is importable, otherwise falls back to scikit-learn's t-SNE (the
package mirror here has no umap-learn); the method actually used is put in
the plot title and returned with the sampling metadata.
"""

from __future__ import annotations

import numpy as np

__all__ = ["umap_plot", "embed_2d"]


def _embedder(seed: int, n_points: int):
    try:
        import umap

        return "umap", umap.UMAP(n_components=2, random_state=seed)
    except ImportError:
        from sklearn.manifold import TSNE

        perplexity = max(2.0, min(30.0, (n_points - 1) / 3.0))
        return "tsne", TSNE(n_components=2, random_state=seed, perplexity=perplexity,
                            init="pca")


def embed_2d(features: np.ndarray, seed: int = 0) -> tuple[np.ndarray, str]:
    """(n, d) features -> (n, 2) coordinates plus the method name used."""
    method, model = _embedder(seed, features.shape[0])
    return np.asarray(model.fit_transform(features), dtype=np.float64), method


def umap_plot(real_windows, synth_windows, out_path, *, seed: int = 0,
              sample_per_class: int = 500) -> dict:
    """Scatter up to 500 windows per class in 2-D; returns plot metadata."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    real = np.asarray(real_windows, dtype=np.float64)
    synth = np.asarray(synth_windows, dtype=np.float64)
    if real.size == 0 or synth.size == 0:
        raise ValueError("both window sets must be non-empty")

    rng = np.random.default_rng(seed)

    def pick(arr):
        if arr.shape[0] <= sample_per_class:
            return arr
        return arr[rng.choice(arr.shape[0], sample_per_class, replace=False)]

    real_s, synth_s = pick(real), pick(synth)
    coords, method = embed_2d(np.concatenate([real_s, synth_s]), seed=seed)
    r, s = coords[: real_s.shape[0]], coords[real_s.shape[0]:]

    fig, ax = plt.subplots(figsize=(7, 6))
    ax.scatter(r[:, 0], r[:, 1], s=10, alpha=0.6, label=f"real (n={len(r)})")
    ax.scatter(s[:, 0], s[:, 1], s=10, alpha=0.6, label=f"synthetic (n={len(s)})")
    ax.legend()
    ax.set_title(f"real vs synthetic windows ({method} embedding, seed {seed})")
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)
    return {"method": method, "seed": seed, "n_real": len(r), "n_synth": len(s),
            "out": str(out_path)}
