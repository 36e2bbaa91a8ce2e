"""Command-line interface: detect, noise, benchmark.

Exit codes: 0 on success, 2 for usage or validation problems (bad
parameters, unreadable or unsupported files, invalid configs), 1 for
unexpected runtime failures.  ``detect`` and ``noise`` print a single
JSON line describing the run; ``benchmark`` prints the summary table and
writes CSV + table files to the configured output directory.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import baselines, bench, imgio
from .noise import KINDS, NoiseSpec, corrupt, snr
from .pipeline import PipelineConfig, detect


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhfedge",
        description="Color edge detection with a quaternion Hardy filter.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_detect = sub.add_parser("detect", help="detect edges in a color raster")
    p_detect.add_argument("--in", dest="input", required=True, metavar="PATH",
                          help="input raster (PNG or binary PPM, 8-bit RGB)")
    p_detect.add_argument("--out", dest="output", required=True, metavar="PATH",
                          help="output edge map (8-bit grayscale PNG)")
    p_detect.add_argument("--s1", type=float, default=2.0,
                          help="filter decay along columns (default 2.0)")
    p_detect.add_argument("--s2", type=float, default=2.0,
                          help="filter decay along rows (default 2.0)")
    p_detect.add_argument("--t", type=float, default=0.1,
                          help="threshold as a fraction of the gradient maximum")
    p_detect.add_argument("--detector", default="proposed",
                          choices=bench.DETECTORS,
                          help="detection arm (default: proposed)")
    p_detect.add_argument("--formula", default="derived",
                          choices=("derived", "verbatim"),
                          help="closed-form gradient variant (default: derived)")
    p_detect.add_argument("--canny-sigma", type=float, default=1.4)
    p_detect.add_argument("--canny-low", type=float, default=0.08)
    p_detect.add_argument("--canny-high", type=float, default=0.2)

    p_noise = sub.add_parser("noise", help="corrupt a color raster with seeded noise")
    p_noise.add_argument("--in", dest="input", required=True, metavar="PATH")
    p_noise.add_argument("--out", dest="output", required=True, metavar="PATH")
    p_noise.add_argument("--kind", required=True, choices=KINDS)
    p_noise.add_argument("--variance", type=float, default=None,
                         help="gaussian/speckle variance (kind-specific default)")
    p_noise.add_argument("--density", type=float, default=None,
                         help="salt-pepper density (default 0.05)")
    p_noise.add_argument("--seed", type=int, default=0)

    p_bench = sub.add_parser("benchmark", help="run a benchmark config")
    p_bench.add_argument("--config", required=True, metavar="PATH",
                         help="JSON benchmark configuration")
    return parser


def _cmd_detect(args: argparse.Namespace) -> int:
    img = imgio.load_color(args.input)
    started = time.perf_counter()
    if args.detector == "proposed":
        config = PipelineConfig(s1=args.s1, s2=args.s2, threshold=args.t,
                                idz_formula=args.formula)
        edges = detect(img, config)
    elif args.detector == "idz":
        edges = baselines.idz_direct(img, args.t, formula=args.formula)
    else:
        gray = baselines.to_gray(img)
        if args.detector == "sobel":
            edges = baselines.sobel(gray, args.t)
        elif args.detector == "prewitt":
            edges = baselines.prewitt(gray, args.t)
        else:
            edges = baselines.canny(gray, args.canny_low, args.canny_high,
                                    args.canny_sigma)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    imgio.save_edge_map(args.output, edges)
    print(json.dumps({
        "command": "detect", "input": args.input, "output": args.output,
        "detector": args.detector, "s1": args.s1, "s2": args.s2, "t": args.t,
        "edge_pixels": int(edges.sum()), "elapsed_ms": round(elapsed_ms, 3),
    }, sort_keys=True))
    return 0


def _cmd_noise(args: argparse.Namespace) -> int:
    img = imgio.load_color(args.input)
    spec = NoiseSpec(kind=args.kind, variance=args.variance,
                     density=args.density, seed=args.seed)
    started = time.perf_counter()
    noisy = corrupt(img, spec)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    imgio.save_color(args.output, noisy)
    achieved = snr(img, noisy)
    print(json.dumps({
        "command": "noise", "input": args.input, "output": args.output,
        **spec.params(),
        "snr_db": "inf" if achieved == float("inf") else round(achieved, 4),
        "elapsed_ms": round(elapsed_ms, 3),
    }, sort_keys=True))
    return 0


def _cmd_benchmark(args: argparse.Namespace) -> int:
    config = bench.load_config(args.config)
    rows = bench.run_benchmark(config)
    csv_path, table_path = bench.write_outputs(config, rows)
    sys.stdout.write(bench.rows_to_table(rows))
    print(f"wrote {csv_path} and {table_path} ({len(rows)} rows)")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"detect": _cmd_detect, "noise": _cmd_noise,
                "benchmark": _cmd_benchmark}
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
