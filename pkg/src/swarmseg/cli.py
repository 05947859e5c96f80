"""Command-line interface: segment, compare, and bench subcommands.

Every invocation is a pure function of its flags, input bytes, and seed:
repeat runs write byte-identical images and reports (wall-clock fields
aside). Normal operation writes files only; all diagnostics go to stderr.
Exit codes: 0 success, 1 runtime failure (IO, malformed image, degenerate
clustering), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .core import ClusterConfig, PixelDataset
from .imaging import load_ppm, reconstruct_quantized, to_dataset, write_ppm
from .pipeline import ALGORITHMS, run_algorithm
from .report import aggregate_reports, build_report, dump_json, report_to_json
from .swarm import SwarmConfig

COMPARE_PAIRINGS = (("fcm", "apsof"),)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _seed_list(text: str) -> list[int]:
    try:
        seeds = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed list {text!r}")
    if not seeds or any(s < 0 for s in seeds):
        raise argparse.ArgumentTypeError("seed list must be non-negative integers")
    return seeds


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--clusters", type=_positive_int, default=5,
                        help="number of clusters C (default 5)")
    parser.add_argument("--seed", type=_nonnegative_int, default=42,
                        help="random seed (default 42)")
    parser.add_argument("--fuzzifier", type=float, default=2.0,
                        help="fuzzy exponent m > 1 (default 2.0)")
    parser.add_argument("--max-side", type=_positive_int, default=None,
                        help="downscale so the longer image side is at most this")
    parser.add_argument("--swarm-size", type=_positive_int, default=20,
                        help="particles in the swarm (default 20)")
    parser.add_argument("--iters", type=_positive_int, default=100,
                        help="maximum swarm iterations (default 100)")
    parser.add_argument("--w-max", type=float, default=0.9,
                        help="maximum inertia weight (default 0.9)")
    parser.add_argument("--w-min", type=float, default=0.4,
                        help="minimum inertia weight (default 0.4)")
    parser.add_argument("--c1-init", type=float, default=2.5,
                        help="initial cognitive factor (default 2.5)")
    parser.add_argument("--c1-final", type=float, default=0.5,
                        help="final cognitive factor (default 0.5)")
    parser.add_argument("--c2-init", type=float, default=0.5,
                        help="initial social factor (default 0.5)")
    parser.add_argument("--c2-final", type=float, default=2.5,
                        help="final social factor (default 2.5)")
    parser.add_argument("--variance-tol", type=float, default=1e-3,
                        help="relative fitness-variance stop threshold")
    parser.add_argument("--vmax-frac", type=float, default=0.2,
                        help="velocity cap as a fraction of the 255 range")
    parser.add_argument("--report", type=Path, default=None,
                        help="write a JSON report to this path")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swarmseg",
        description="Color image segmentation by swarm-seeded fuzzy clustering.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_segment = sub.add_parser(
        "segment", help="segment one image with one algorithm"
    )
    p_segment.add_argument("input", type=Path, help="input PPM (P6) image")
    p_segment.add_argument("output", type=Path, help="quantized PPM to write")
    p_segment.add_argument("--algo", choices=ALGORITHMS, default="apsof",
                           help="algorithm to run (default apsof)")
    _add_run_flags(p_segment)
    p_segment.set_defaults(func=cmd_segment)

    p_compare = sub.add_parser(
        "compare", help="run all algorithms on one image and report"
    )
    p_compare.add_argument("input", type=Path, help="input PPM (P6) image")
    p_compare.add_argument("outdir", type=Path,
                           help="directory for per-algorithm quantized images")
    _add_run_flags(p_compare)
    p_compare.set_defaults(func=cmd_compare)

    p_bench = sub.add_parser(
        "bench", help="aggregate comparisons over many seeds"
    )
    p_bench.add_argument("inputs", type=Path, nargs="+",
                         help="input PPM (P6) images")
    p_bench.add_argument("--seeds", type=_seed_list, default=None,
                         help="comma-separated explicit seed list")
    p_bench.add_argument("--seed-count", type=_positive_int, default=None,
                         help="run this many consecutive seeds starting at --seed")
    _add_run_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def _build_configs(
    args: argparse.Namespace, parser: argparse.ArgumentParser
) -> tuple[ClusterConfig, SwarmConfig]:
    """Translate validated flags into config objects; bad combos are usage errors."""
    try:
        config = ClusterConfig(
            cluster_count=args.clusters,
            fuzzifier=args.fuzzifier,
            seed=args.seed,
        )
        sconfig = SwarmConfig(
            swarm_size=args.swarm_size,
            n_max=args.iters,
            w_max=args.w_max,
            w_min=args.w_min,
            c1_init=args.c1_init,
            c1_final=args.c1_final,
            c2_init=args.c2_init,
            c2_final=args.c2_final,
            variance_tol=args.variance_tol,
            v_max_fraction=args.vmax_frac,
        )
    except ValueError as exc:
        parser.error(str(exc))
    return config, sconfig


def _load_dataset(path: Path, max_side: int | None) -> PixelDataset:
    image = load_ppm(path.read_bytes())
    return to_dataset(image, max_side=max_side)


def cmd_segment(args, parser) -> int:
    config, sconfig = _build_configs(args, parser)
    dataset = _load_dataset(args.input, args.max_side)
    result = run_algorithm(args.algo, dataset, config, sconfig)
    quantized = reconstruct_quantized(dataset, result.labels, result.centers)
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_bytes(write_ppm(quantized))
    if args.report is not None:
        report = build_report(
            dataset, [result], image=str(args.input), fuzzifier=args.fuzzifier
        )
        args.report.parent.mkdir(parents=True, exist_ok=True)
        args.report.write_text(report_to_json(report))
    return 0


def _compare_once(
    dataset: PixelDataset,
    config: ClusterConfig,
    sconfig: SwarmConfig,
    image_name: str,
    fuzzifier: float,
):
    results = [
        run_algorithm(name, dataset, config, sconfig) for name in ALGORITHMS
    ]
    report = build_report(
        dataset, results, COMPARE_PAIRINGS, image=image_name, fuzzifier=fuzzifier
    )
    return results, report


def cmd_compare(args, parser) -> int:
    config, sconfig = _build_configs(args, parser)
    dataset = _load_dataset(args.input, args.max_side)
    results, report = _compare_once(
        dataset, config, sconfig, str(args.input), args.fuzzifier
    )
    args.outdir.mkdir(parents=True, exist_ok=True)
    for result in results:
        quantized = reconstruct_quantized(dataset, result.labels, result.centers)
        path = args.outdir / f"{result.algorithm}.ppm"
        path.write_bytes(write_ppm(quantized))
    report_path = args.report or (args.outdir / "report.json")
    report_path.parent.mkdir(parents=True, exist_ok=True)
    report_path.write_text(report_to_json(report))
    return 0


def cmd_bench(args, parser) -> int:
    if args.report is None:
        parser.error("bench requires --report")
    if args.seeds is not None:
        seeds = args.seeds
    elif args.seed_count is not None:
        seeds = list(range(args.seed, args.seed + args.seed_count))
    else:
        parser.error("bench requires --seeds or --seed-count")
    config, sconfig = _build_configs(args, parser)

    benchmarks = []
    for input_path in args.inputs:
        dataset = _load_dataset(input_path, args.max_side)
        reports = []
        for seed in seeds:
            _, report = _compare_once(
                dataset,
                replace(config, seed=seed),
                sconfig,
                str(input_path),
                args.fuzzifier,
            )
            reports.append(report)
        benchmarks.append(aggregate_reports(reports))

    args.report.parent.mkdir(parents=True, exist_ok=True)
    args.report.write_text(dump_json({"benchmarks": benchmarks}))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"swarmseg: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
