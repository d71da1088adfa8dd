"""Command line: ``cliquedist {generate,analyze,sweep,tables}``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import experiments as ex
from .clique import NPRIME_FILTERS, CliqueBudgetExceeded
from .datasets import DATASETS, DatasetError
from .graph import GraphError
from .graph_io import FORMATS, GraphParseError, guess_format, parse, write_edge_list
from .metrics import EQ2_MODES, EmptyGraphError, SpectralConvergenceError
from .ws import RNG_NAME, WSParams, ring_lattice, rewire_with_stats

log = logging.getLogger("cliquedist")

EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.replace(",", " ").split()]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliquedist", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="write a generated graph as a canonical edge list")
    gen.add_argument("model", choices=["ws"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True, help="links per node in the ring lattice (even)")
    gen.add_argument("--p", type=float, default=0.0, help="rewiring probability")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", type=Path, required=True)

    an = sub.add_parser("analyze", help="clique, degree and correlation report for one graph")
    an.add_argument("input", type=Path)
    an.add_argument("--format", choices=FORMATS, help="default: guessed from the file suffix")
    an.add_argument("--out", type=Path, help="JSON report path (CSV goes next to it); default stdout")
    an.add_argument("--eq2-mode", choices=EQ2_MODES, default="symmetric")
    an.add_argument("--nprime-filter", choices=NPRIME_FILTERS, default="w")
    an.add_argument("--cc-low-degree", type=float, default=ex.TABLE_LOW_DEGREE_CC,
                    help="clustering coefficient for vertices of degree < 2")  # fmt: skip
    an.add_argument("--workers", type=int, default=1)
    an.add_argument("--budget", type=float, help="clique search time limit in seconds")

    sw = sub.add_parser("sweep", help="Watts-Strogatz rewiring sweep")
    sw.add_argument("--full-grid", action="store_true", help="n in {100, 200}, even k in 4..20, 19 values of p, 100 trials")
    sw.add_argument("--n", type=_ints, default=[100], help="e.g. '100,200'")
    sw.add_argument("--k", type=_ints, default=[4])
    sw.add_argument("--p", type=_floats, default=[0.0])
    sw.add_argument("--trials", type=int, default=ex.GRID_TRIALS)
    sw.add_argument("--seed", type=int, default=0, help="base seed; trial t uses seed + t")
    sw.add_argument("--out", type=Path, required=True, help="output directory")
    sw.add_argument("--per-trial", action="store_true")
    sw.add_argument("--workers", type=int, default=1)
    sw.add_argument("--budget", type=float, help="per-graph clique search time limit in seconds")

    tb = sub.add_parser("tables", help="correlation and assortativity tables for the real-world datasets")
    tb.add_argument("dataset_dir", nargs="?", type=Path)
    tb.add_argument("--datasets", type=lambda s: s.split(","), default=list(DATASETS),
                    help=f"comma-separated subset of {','.join(DATASETS)}")  # fmt: skip
    tb.add_argument("--out", type=Path, required=True, help="output directory")
    tb.add_argument("--eq2-mode", choices=EQ2_MODES, default="symmetric")
    tb.add_argument("--nprime-filter", choices=NPRIME_FILTERS, default="w")
    tb.add_argument("--cc-low-degree", type=float, default=ex.TABLE_LOW_DEGREE_CC)
    tb.add_argument("--workers", type=int, default=1)
    return p


def cmd_generate(args) -> int:
    try:
        params = WSParams(args.n, args.k, args.p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g, stats = rewire_with_stats(ring_lattice(params.n, params.k_regular), params)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(write_edge_list(g), encoding="utf-8")
    sidecar = Path(str(args.out) + ".json")
    ex.write_json(
        sidecar,
        {
            "model": "watts-strogatz",
            "params": params.to_dict(),
            "rng": RNG_NAME,
            "n": g.n,
            "m": g.m,
            "rewired": stats.rewired,
            "capped_rewires": stats.capped,
        },
    )
    log.info("wrote %s (%d edges)", args.out, g.m)
    return 0


def cmd_analyze(args) -> int:
    fmt = args.format or guess_format(args.input)
    try:
        text = args.input.read_text(encoding="utf-8", errors="replace")
    except OSError as exc:
        raise DatasetError(str(exc)) from None
    g = parse(text, fmt)
    if g.n == 0:
        raise EmptyGraphError("empty graph")
    report = ex.analyze_graph(
        g,
        nprime_filter=args.nprime_filter,
        low_degree_cc=args.cc_low_degree,
        workers=args.workers,
        budget=args.budget,
    )
    report["settings"]["eq2_mode"] = args.eq2_mode
    report["assortativity_index"] = report["assortativity"][args.eq2_mode]
    report["source"] = {"path": args.input.name, "format": fmt}
    if args.out:
        js, csv_path = ex.write_analysis(report, args.out)
        log.info("wrote %s and %s", js, csv_path)
    else:
        body = {k: v for k, v in report.items() if k != "vertices"}
        sys.stdout.write(json.dumps(body, indent=2) + "\n")
    return 0


def cmd_sweep(args) -> int:
    try:
        if args.full_grid:
            spec = ex.SweepSpec.full_grid(args.seed)
        else:
            spec = ex.SweepSpec(args.n, args.k, args.p, args.trials, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    summaries = ex.run_sweep(spec, workers=args.workers, budget=args.budget)
    ex.write_sweep(summaries, spec, args.out, per_trial=args.per_trial)
    for s in summaries:
        if s.status != "ok":
            log.warning("cell n=%d k=%d p=%g incomplete (clique budget exceeded)", s.n, s.k, s.p)
    log.info("wrote %d cells to %s", len(summaries), args.out)
    return 0


def cmd_tables(args) -> int:
    unknown = [d for d in args.datasets if d not in DATASETS]
    if unknown:
        raise UsageError(f"unknown dataset(s): {', '.join(unknown)}")
    report = ex.run_tables(
        args.dataset_dir,
        args.datasets,
        eq2_mode=args.eq2_mode,
        nprime_filter=args.nprime_filter,
        low_degree_cc=args.cc_low_degree,
        workers=args.workers,
    )
    ex.write_tables(report, args.out)
    log.info("wrote %s", args.out)
    return 0


COMMANDS = {"generate": cmd_generate, "analyze": cmd_analyze, "sweep": cmd_sweep, "tables": cmd_tables}

DATA_ERRORS = (
    DatasetError,
    GraphError,
    GraphParseError,
    EmptyGraphError,
    SpectralConvergenceError,
    CliqueBudgetExceeded,
    OSError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cliquedist {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DATA_ERRORS as exc:
        print(f"cliquedist {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
