"""Command-line surface: generate, encode, invert, aggregate.

Exit codes: 0 on success, 1 on usage errors, 2 on data errors.  Every
source of randomness is an explicit ``--seed``, so identical invocations
produce identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .core import Kind, Method, NonFiniteValues, TimeSeries
from .generators import DATASET_SIZES, generate, sweep_params, SERIES_LIMIT
from .inversion import IRC_PRNG, invert
from .metrics import (
    Metric,
    ScoreTable,
    average_rank,
    count_best,
    improvement_summary,
    summarize,
)
from .preprocessing import apply_scaler, fit_scaler, invert_scaler, truncate, window
from .representations import encode
from .tensorio import read_tensor, write_tensor

TIE_NOTE = "ties: best counts split 1/t among tied winners; ranks average tied positions"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2; reserve 2 for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def read_series_csv(path) -> TimeSeries:
    """Single-column series CSV with an optional ``value`` header row."""
    path = Path(path)
    values = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            cell = line.strip()
            if not cell:
                continue
            try:
                x = float(cell)
            except ValueError:
                if lineno == 1 and cell.lower() == "value":
                    continue
                raise ValueError(f"{path} line {lineno}: not a number: {cell!r}") from None
            if not np.isfinite(x):
                raise NonFiniteValues(f"{path} line {lineno}: non-finite value {cell}")
            values.append(x)
    if not values:
        raise ValueError(f"{path}: no observations found")
    return TimeSeries(values, name=path.stem)


def write_series_csv(path, values) -> None:
    with open(path, "w") as fh:
        fh.write("value\n")
        for v in np.asarray(values, dtype=np.float64):
            fh.write(f"{float(v)!r}\n")


def _text_table(headers, rows) -> str:
    cells = [list(map(str, headers))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for k, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _write_report_csv(path, headers, rows, note: str | None = None) -> None:
    with open(path, "w") as fh:
        if note:
            fh.write(f"# {note}\n")
        fh.write(",".join(headers) + "\n")
        for row in rows:
            fh.write(",".join(str(c) for c in row) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args) -> None:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    overrides = dict(kv.split("=", 1) for kv in args.param)
    overrides = {k: float(v) for k, v in overrides.items()}
    manifest = {
        "family": args.family,
        "seed": args.seed,
        "length": min(args.len, SERIES_LIMIT),
        "prng": IRC_PRNG,
        "series": [],
    }
    for i, params in enumerate(sweep_params(args.family, args.n)):
        params = {**params, **overrides}
        series = generate(
            args.family,
            manifest["length"],
            args.seed + i,
            name=f"{args.family}_{i:02d}",
            **params,
        )
        fname = f"{series.name}.csv"
        write_series_csv(out_dir / fname, series.values)
        manifest["series"].append(
            {"name": series.name, "file": fname, "seed": series.seed, "params": params}
        )
    with open(out_dir / "manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    print(f"wrote {len(manifest['series'])} series to {out_dir}")


def cmd_encode(args) -> None:
    kind = Kind(args.kind)
    series = truncate(read_series_csv(args.input), args.limit)
    scaler = fit_scaler(series, kind)
    scaled = apply_scaler(series, scaler)
    windows = window(scaled, args.d, args.stride)
    epsilon = args.epsilon if kind is Kind.BINARY_RP else None
    images = np.empty((windows.shape[0], args.d, args.d))
    for k, w in enumerate(windows):
        try:
            images[k] = encode(w, kind, epsilon=epsilon).data
        except ValueError as exc:
            start = k * args.stride
            raise ValueError(
                f"window {k} (rows {start}..{start + args.d - 1} of {args.input}): {exc}"
            ) from None
    meta = {
        "kind": kind.value,
        "epsilon": epsilon,
        "scaler": scaler.to_dict(),
        "d": args.d,
        "stride": args.stride,
        "series_name": args.name or series.name,
        "limit": args.limit,
        "count": int(windows.shape[0]),
    }
    write_tensor(args.out, images, meta)
    print(f"encoded {windows.shape[0]} x {args.d} x {args.d} {kind.value} tensor -> {args.out}")


def cmd_invert(args) -> None:
    method = Method(args.method)
    if method is Method.RANDOM_COLUMN and args.seed is None:
        raise UsageError("--method irc requires an explicit --seed")
    images, meta = read_tensor(args.input, require_meta=True)
    if "kind" not in meta:
        raise ValueError(f"{args.input}: sidecar lacks the representation kind")
    kind = Kind(meta["kind"])
    if images.ndim == 2:
        images = images[None, :, :]
    if images.ndim != 3:
        raise ValueError(f"{args.input}: expected a (count, S, S) tensor, got shape {images.shape}")
    from .core import RepresentationMatrix, ScalingParams

    scaler = ScalingParams.from_dict(meta["scaler"]) if meta.get("scaler") else None
    epsilon = meta.get("epsilon")
    rows = []
    for i, img in enumerate(images):
        matrix = RepresentationMatrix(img, kind, epsilon=epsilon)
        seed_i = None if args.seed is None else args.seed + i
        values = invert(matrix, method, seed=seed_i)
        if scaler is not None:
            values = invert_scaler(values, scaler)
        rows.append(values)
    with open(args.out, "w") as fh:
        for values in rows:
            fh.write(",".join(repr(float(v)) for v in values) + "\n")
    with open(str(args.out) + ".meta.json", "w") as fh:
        json.dump(
            {
                "source": str(args.input),
                "kind": kind.value,
                "method": method.value,
                "seed": args.seed,
                "prng": IRC_PRNG,
                "per_window_seed": "seed + window index",
                "count": len(rows),
            },
            fh,
            indent=2,
        )
        fh.write("\n")
    print(f"inverted {len(rows)} windows ({method.value}) -> {args.out}")


def _aggregate_rows(table: ScoreTable, args):
    if args.metric:
        metrics = [Metric(args.metric)]
    else:  # only the metrics the table actually contains
        metrics = sorted({r.metric for r in table.records}, key=lambda m: m.value)
    datasets = [args.dataset] if args.dataset else table.datasets
    if args.mode == "summary":
        headers = ["dataset", "metric", "contender", "mean", "std"]
        rows = []
        for ds in datasets:
            for metric in metrics:
                for c, (mean, std) in summarize(table, ds, metric).items():
                    rows.append([ds, metric.value, c, f"{mean:.6g}", f"{std:.6g}"])
        return headers, rows, None
    if args.mode == "best":
        headers = ["dataset", "metric", "contender", "best_count"]
        rows = []
        for ds in datasets:
            for metric in metrics:
                for c, n in count_best(table, ds, metric).items():
                    rows.append([ds, metric.value, c, f"{n:g}"])
        return headers, rows, TIE_NOTE
    if args.mode == "ranks":
        headers = ["metric", "contender", "avg_rank"]
        rows = []
        for metric in metrics:
            ranks = average_rank(table, metric, dataset=args.dataset)
            rows.extend([metric.value, c, f"{r:.4f}"] for c, r in ranks.items())
        return headers, rows, TIE_NOTE
    headers = ["contender", "metric", "im", "irc", "improvement_pct"]
    rows = [
        [r["contender"], r["metric"], f"{r['im']:.6g}", f"{r['irc']:.6g}", f"{r['improvement_pct']:.3f}"]
        for r in improvement_summary(table)
    ]
    return headers, rows, None


def cmd_aggregate(args) -> None:
    table = ScoreTable.from_csv(args.scores)
    headers, rows, note = _aggregate_rows(table, args)
    print(_text_table(headers, rows))
    if note:
        print(f"\n{note}")
    if args.out:
        _write_report_csv(args.out, headers, rows, note)
        print(f"\nwrote {args.out}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tsimage", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a synthetic benchmark dataset as CSVs")
    p.add_argument("family", choices=sorted(DATASET_SIZES))
    p.add_argument("--n", type=int, default=None, help="series count (default: family's benchmark size)")
    p.add_argument("--len", type=int, default=SERIES_LIMIT, help=f"series length, capped at {SERIES_LIMIT}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="fix a generator parameter across the sweep (repeatable)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("encode", help="encode a series CSV into an image tensor")
    p.add_argument("input", help="single-column series CSV")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--d", type=int, default=20, help="window length / image side")
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--epsilon", type=float, default=0.2,
                   help="recurrence threshold (binary_rp only)")
    p.add_argument("--limit", type=int, default=SERIES_LIMIT, help="truncate series first")
    p.add_argument("--name", default=None, help="series name recorded in the sidecar")
    p.add_argument("--out", required=True, help="output tensor file")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("invert", help="invert an image tensor back into series windows")
    p.add_argument("input", help="tensor file with sidecar metadata")
    p.add_argument("--method", required=True, choices=[m.value for m in Method])
    p.add_argument("--seed", type=int, default=None, help="required for irc")
    p.add_argument("--out", required=True, help="output CSV, one row per window")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("aggregate", help="summarize a score table")
    p.add_argument("scores", help="score CSV (dataset,series_id,contender,metric,inversion,value)")
    p.add_argument("--mode", required=True, choices=["summary", "best", "ranks", "improvement"])
    p.add_argument("--dataset", default=None, help="restrict to one dataset")
    p.add_argument("--metric", default=None, choices=[m.value for m in Metric])
    p.add_argument("--out", default=None, help="also write the table as CSV")
    p.set_defaults(func=cmd_aggregate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse printed the message already
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"tsimage: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"tsimage: error: {exc}", file=sys.stderr)
        return 2
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
