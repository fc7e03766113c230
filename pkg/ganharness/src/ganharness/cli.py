"""Harness CLI: train, sample, score, umap.

Consumes and produces the imaging toolkit's file formats (tensor files with
JSON sidecars, window CSVs, score CSVs), so the two tools compose through
the filesystem.  Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .backtests import BacktestConfig, discriminative_score, predictive_score
from .embedding import umap_plot
from .scorefile import read_windows_csv, sliding_windows, write_scores
from .tensorfile import read_tensor, write_tensor
from .wgan import TrainConfig, load_checkpoint, sample, save_checkpoint, train_wgan_gp


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def cmd_train(args) -> None:
    images, meta = read_tensor(args.input)
    if images.ndim != 3:
        raise ValueError(f"{args.input}: expected a (count, d, d) tensor")
    cfg = TrainConfig(
        epochs=args.epochs,
        batch_size=args.batch,
        gp_weight=args.gp_weight,
        critic_steps_per_gen=args.critic_steps,
        image_side=images.shape[1],
        seed=args.seed,
    )
    result = train_wgan_gp(
        images, cfg, source_meta=meta,
        log=lambda epoch, s: print(
            f"epoch {epoch:4d}  critic {s['critic_loss']:+.4f}  "
            f"gen {s['gen_loss']:+.4f}  gp {s['gradient_penalty']:.4f}"
        ),
    )
    save_checkpoint(args.out, result)
    print(f"saved checkpoint -> {args.out}")


def cmd_sample(args) -> None:
    result = load_checkpoint(args.model)
    images = sample(result, args.count, args.seed)
    meta = dict(result.source_meta or {})
    meta.update({"count": args.count, "sample_seed": args.seed, "generated": True})
    write_tensor(args.out, images, meta)
    print(f"sampled {args.count} images -> {args.out}")


def _load_windows(path, window_len: int | None) -> np.ndarray:
    rows = read_windows_csv(path)
    if rows.shape[1] == 1:
        if window_len is None:
            raise ValueError(f"{path} is a series; pass --window-len to window it")
        return sliding_windows(rows[:, 0], window_len)
    return rows


def cmd_score(args) -> None:
    real = _load_windows(args.real, args.window_len)
    synth = _load_windows(args.synth, args.window_len)
    cfg = BacktestConfig(folds=args.folds, seed=args.seed)
    scorer = discriminative_score if args.metric == "S_D" else predictive_score
    result = scorer(synth, real, cfg)
    print(f"{args.metric} = {result.mean:.4f} (std {result.std:.4f} over {cfg.folds} folds)")
    print("per fold: " + ", ".join(f"{v:.4f}" for v in result.per_fold))
    if result.extras.get("accuracy_per_fold"):
        print(f"mean accuracy: {np.mean(result.extras['accuracy_per_fold']):.4f}")
    if args.out:
        write_scores(args.out, [
            result.to_record(args.dataset, args.series_id, args.contender, args.inversion)
        ])
        sidecar = {
            "per_fold": result.per_fold,
            "extras": result.extras,
            "config": vars(args) | {"folds": cfg.folds},
        }
        with open(str(args.out) + ".meta.json", "w") as fh:
            json.dump(sidecar, fh, indent=2, default=str)
            fh.write("\n")
        print(f"wrote {args.out}")


def cmd_umap(args) -> None:
    real = _load_windows(args.real, args.window_len)
    synth = _load_windows(args.synth, args.window_len)
    info = umap_plot(real, synth, args.out, seed=args.seed)
    print(f"wrote {info['out']} ({info['method']}, {info['n_real']}+{info['n_synth']} points)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ganharness", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a WGAN-GP on an image tensor")
    p.add_argument("input", help="tensor file (count, d, d) with sidecar")
    p.add_argument("--epochs", type=int, default=50)
    p.add_argument("--batch", type=int, default=8)
    p.add_argument("--gp-weight", type=float, default=10.0)
    p.add_argument("--critic-steps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="checkpoint path")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("sample", help="draw images from a checkpoint")
    p.add_argument("model", help="checkpoint path")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output tensor file")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("score", help="run a GRU backtest on window CSVs")
    p.add_argument("--real", required=True, help="real windows CSV (or series + --window-len)")
    p.add_argument("--synth", required=True, help="synthetic windows CSV")
    p.add_argument("--metric", required=True, choices=["S_D", "S_P"])
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window-len", type=int, default=None)
    p.add_argument("--dataset", default="dataset")
    p.add_argument("--series-id", default="series")
    p.add_argument("--contender", default="WGAN-GP")
    p.add_argument("--inversion", default=None)
    p.add_argument("--out", default=None, help="write the score record as CSV")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("umap", help="2-D embedding plot of real vs synthetic windows")
    p.add_argument("--real", required=True)
    p.add_argument("--synth", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window-len", type=int, default=None)
    p.add_argument("--out", required=True, help="output PNG")
    p.set_defaults(func=cmd_umap)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"ganharness: error: {exc}", file=sys.stderr)
        return 2
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
