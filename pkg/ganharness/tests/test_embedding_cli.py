"""Embedding plot output and the harness CLI surface."""

import json

import numpy as np
import pytest

from ganharness.cli import main
from ganharness.embedding import umap_plot
from ganharness.scorefile import sliding_windows
from ganharness.tensorfile import read_tensor, write_tensor


def run(*argv):
    return main([str(a) for a in argv])


def test_umap_plot_writes_file_and_samples_500(tmp_path):
    rng = np.random.default_rng(0)
    real = rng.normal(0.0, 1.0, (800, 12))
    synth = rng.normal(3.0, 1.0, (650, 12))
    out = tmp_path / "plot.png"
    info = umap_plot(real, synth, out, seed=4)
    assert out.exists() and out.stat().st_size > 0
    assert info["n_real"] == 500 and info["n_synth"] == 500
    assert info["method"] in ("umap", "tsne")


def test_umap_plot_small_sets_keep_everything(tmp_path):
    rng = np.random.default_rng(1)
    info = umap_plot(rng.normal(size=(40, 8)), rng.normal(size=(30, 8)),
                     tmp_path / "p.png", seed=0)
    assert info["n_real"] == 40 and info["n_synth"] == 30


def test_umap_plot_subsample_is_seeded(tmp_path):
    rng = np.random.default_rng(2)
    real = rng.normal(size=(700, 6))
    synth = rng.normal(size=(700, 6))
    a = umap_plot(real, synth, tmp_path / "a.png", seed=9)
    b = umap_plot(real, synth, tmp_path / "b.png", seed=9)
    assert a["method"] == b["method"] and a["n_real"] == b["n_real"]
    with pytest.raises(ValueError):
        umap_plot(np.empty((0, 6)), synth, tmp_path / "c.png")


def test_cli_train_sample_invalid_and_valid(tmp_path, capsys):
    rng = np.random.default_rng(3)
    images = rng.normal(0.0, 1.0, (24, 8, 8))
    tensor = tmp_path / "in.bin"
    write_tensor(tensor, images, meta={"kind": "naive"})

    model = tmp_path / "model.pt"
    assert run("train", tensor, "--epochs", 1, "--batch", 8, "--seed", 1, "--out", model) == 0
    assert model.exists()

    out = tmp_path / "samples.bin"
    assert run("sample", model, "--count", 6, "--seed", 2, "--out", out) == 0
    arr, meta = read_tensor(out)
    assert arr.shape == (6, 8, 8)
    assert meta["kind"] == "naive" and meta["sample_seed"] == 2 and meta["generated"]

    assert run("train", tmp_path / "missing.bin", "--epochs", 1, "--out", model) == 2
    assert run("nonsense") == 1


def test_cli_score_writes_schema_csv(tmp_path):
    rng = np.random.default_rng(5)
    series = np.cumsum(rng.normal(0.0, 1.0, 240))
    wins = sliding_windows(series, 7, stride=2)
    real, synth = tmp_path / "real.csv", tmp_path / "synth.csv"
    for path, rows in ((real, wins[0::2]), (synth, wins[1::2])):
        path.write_text("\n".join(",".join(repr(float(v)) for v in row) for row in rows) + "\n")

    out = tmp_path / "scores.csv"
    assert run("score", "--real", real, "--synth", synth, "--metric", "S_P",
               "--folds", 2, "--dataset", "brownian", "--series-id", "s0",
               "--contender", "XIRP", "--inversion", "irc", "--out", out) == 0
    header, row = out.read_text().strip().splitlines()
    assert header == "dataset,series_id,contender,metric,inversion,value"
    assert row.startswith("brownian,s0,XIRP,S_P,irc,")
    sidecar = json.loads((tmp_path / "scores.csv.meta.json").read_text())
    assert len(sidecar["per_fold"]) == 2


def test_cli_umap_subcommand(tmp_path):
    rng = np.random.default_rng(6)
    series = tmp_path / "series.csv"
    series.write_text("value\n" + "\n".join(repr(float(v)) for v in rng.normal(size=90)) + "\n")
    out = tmp_path / "um.png"
    assert run("umap", "--real", series, "--synth", series, "--window-len", 8,
               "--seed", 1, "--out", out) == 0
    assert out.exists()
