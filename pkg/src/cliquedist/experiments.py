"""Rewiring sweeps, single-graph reports and the real-world correlation tables.

Every output here is a pure function of its inputs and seeds: no timestamps,
fixed column orders, ordered merges of parallel work.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .clique import CliqueBudgetExceeded, maximal_clique_sizes
from .datasets import DATASETS, load_dataset
from .graph import Graph
from .metrics import (
    EQ2_MODES,
    assortativity_index,
    clustering_coefficients,
    degree_distribution,
    eccentricities,
    graph_summary,
    pearson_correlation,
)
from .ws import RNG_NAME, WSParams, check_lattice, ring_lattice, rewire_with_stats

# full sweep grid
GRID_N = (100, 200)
GRID_K = tuple(range(4, 21, 2))
GRID_P = tuple(round(0.01 * i, 2) for i in range(1, 11)) + tuple(round(0.1 * i, 1) for i in range(2, 11))
GRID_TRIALS = 100

# clustering coefficient given to degree < 2 vertices in real-world reports
TABLE_LOW_DEGREE_CC = 1.0


def fmt(x) -> str:
    """CSV cell: 6 significant digits, empty for undefined."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isnan(x):
            return ""
        return f"{x:.6g}"
    return str(x)


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def write_json(path: Path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=False) + "\n", encoding="utf-8")


def zone(p: float) -> str:
    if p == 0:
        return "regular"
    return "small-world" if p <= 0.1 else "random"


# ---------------------------------------------------------------- sweeps


@dataclass
class SweepSpec:
    n_values: list[int]
    k_values: list[int]
    p_values: list[float]
    trials: int = GRID_TRIALS
    base_seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        for p in self.p_values:
            if not 0 <= p <= 1:
                raise ValueError(f"rewiring probability {p} outside [0, 1]")
        for n in self.n_values:
            for k in self.k_values:
                check_lattice(n, k)

    @classmethod
    def full_grid(cls, base_seed: int = 0) -> SweepSpec:
        return cls(list(GRID_N), list(GRID_K), list(GRID_P), GRID_TRIALS, base_seed)

    def seeds(self) -> list[int]:
        return [self.base_seed + t for t in range(self.trials)]


@dataclass
class TrialResult:
    seed: int
    avg_diameter: float
    avg_clustering: float
    avg_maximal_clique: float
    histogram: dict[int, int]
    connected: bool
    capped_rewires: int
    complete: bool = True


def run_trial(n: int, k: int, p: float, seed: int, budget: float | None = None) -> TrialResult:
    lattice = ring_lattice(n, k)
    g, stats = rewire_with_stats(lattice, WSParams(n, k, p, seed))
    eccs = eccentricities(g)
    cc = clustering_coefficients(g)
    try:
        report = maximal_clique_sizes(g, budget=budget)
    except CliqueBudgetExceeded:
        return TrialResult(seed, math.nan, math.nan, math.nan, {}, False, stats.capped, complete=False)
    return TrialResult(
        seed=seed,
        avg_diameter=sum(e.hops for e in eccs) / n,
        avg_clustering=math.fsum(cc) / n,
        avg_maximal_clique=report.average,
        histogram=report.histogram,
        connected=all(e.reachable == n for e in eccs),
        capped_rewires=stats.capped,
    )


def _trial_task(args):
    return run_trial(*args)


@dataclass
class SweepSummary:
    n: int
    k: int
    p: float
    trials: int
    mean_avg_diameter: float
    mean_avg_clustering: float
    mean_avg_maximal_clique: float
    ratio_diameter_vs_p0: float
    ratio_clustering_vs_p0: float
    ratio_clique_vs_p0: float
    pooled_clique_histogram: dict[int, int]
    seeds_used: str
    disconnected_trials: int = 0
    capped_rewires: int = 0
    status: str = "ok"
    rng: str = RNG_NAME
    per_trial: list[TrialResult] = field(default_factory=list, repr=False)

    @property
    def zone(self) -> str:
        return zone(self.p)


SWEEP_COLUMNS = [
    "n", "k_regular", "p_rewire", "zone", "trials",
    "mean_avg_diameter", "mean_avg_clustering", "mean_avg_maximal_clique",
    "ratio_diameter_vs_p0", "ratio_clustering_vs_p0", "ratio_clique_vs_p0",
    "disconnected_trials", "capped_rewires", "seeds_used", "rng", "status",
]  # fmt: skip


def _mean(xs):
    xs = [x for x in xs if not math.isnan(x)]
    return math.fsum(xs) / len(xs) if xs else math.nan


def _summarize(n, k, p, results: list[TrialResult], base: TrialResult) -> SweepSummary:
    done = [r for r in results if r.complete]
    pooled: Counter = Counter()
    for r in done:
        pooled.update(r.histogram)
    diam = _mean([r.avg_diameter for r in done])
    clus = _mean([r.avg_clustering for r in done])
    cliq = _mean([r.avg_maximal_clique for r in done])

    def ratio(x, b):
        return x / b if b else math.nan

    seeds = [r.seed for r in results]
    return SweepSummary(
        n=n,
        k=k,
        p=p,
        trials=len(results),
        mean_avg_diameter=diam,
        mean_avg_clustering=clus,
        mean_avg_maximal_clique=cliq,
        ratio_diameter_vs_p0=1.0 if p == 0 else ratio(diam, base.avg_diameter),
        ratio_clustering_vs_p0=1.0 if p == 0 else ratio(clus, base.avg_clustering),
        ratio_clique_vs_p0=1.0 if p == 0 else ratio(cliq, base.avg_maximal_clique),
        pooled_clique_histogram=dict(sorted(pooled.items())),
        seeds_used=f"{seeds[0]}..{seeds[-1]}" if len(seeds) > 1 else str(seeds[0]),
        disconnected_trials=sum(1 for r in done if not r.connected),
        capped_rewires=sum(r.capped_rewires for r in results),
        status="ok" if len(done) == len(results) else "incomplete",
        per_trial=results,
    )


def run_sweep(spec: SweepSpec, *, workers: int = 1, budget: float | None = None) -> list[SweepSummary]:
    """One summary per (n, k, p) cell, ordered n, then k, then p.

    Trial ``t`` uses seed ``base_seed + t``. The unrewired lattice is the ratio
    baseline; p = 0 needs no randomness, so its trials are computed once.
    """
    seeds = spec.seeds()
    tasks = []
    layout = []
    for n in spec.n_values:
        for k in spec.k_values:
            layout.append((n, k, None))
            tasks.append((n, k, 0.0, spec.base_seed, budget))
            for p in spec.p_values:
                layout.append((n, k, p))
                if p != 0:
                    tasks.extend((n, k, p, s, budget) for s in seeds)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_trial_task, tasks, chunksize=8))
    else:
        results = [_trial_task(t) for t in tasks]

    out = []
    it = iter(results)
    base = None
    for n, k, p in layout:
        if p is None:
            base = next(it)
            continue
        if p == 0:
            trials = [TrialResult(**{**asdict(base), "seed": s}) for s in seeds]
        else:
            trials = [next(it) for _ in seeds]
        out.append(_summarize(n, k, p, trials, base))
    return out


def sweep_rows(summaries: list[SweepSummary]) -> list[list]:
    return [
        [
            s.n, s.k, s.p, s.zone, s.trials,
            s.mean_avg_diameter, s.mean_avg_clustering, s.mean_avg_maximal_clique,
            s.ratio_diameter_vs_p0, s.ratio_clustering_vs_p0, s.ratio_clique_vs_p0,
            s.disconnected_trials, s.capped_rewires, s.seeds_used, s.rng, s.status,
        ]  # fmt: skip
        for s in summaries
    ]


def write_sweep(summaries: list[SweepSummary], spec: SweepSpec, out_dir: Path, per_trial: bool = False) -> None:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(out_dir / "sweep.csv", SWEEP_COLUMNS, sweep_rows(summaries))
    hist_rows = [
        [s.n, s.k, s.p, size, count]
        for s in summaries
        for size, count in s.pooled_clique_histogram.items()
    ]
    write_csv(out_dir / "histograms.csv", ["n", "k_regular", "p_rewire", "maximal_clique_size", "count"], hist_rows)
    if per_trial:
        rows = []
        for s in summaries:
            for t in s.per_trial:
                rows.append([s.n, s.k, s.p, t.seed, t.avg_diameter, t.avg_clustering,
                             t.avg_maximal_clique, t.connected, t.complete])  # fmt: skip
        write_csv(
            out_dir / "trials.csv",
            ["n", "k_regular", "p_rewire", "seed", "avg_diameter", "avg_clustering",
             "avg_maximal_clique", "connected", "complete"],
            rows,
        )  # fmt: skip
        trial_hist = [
            [s.n, s.k, s.p, t.seed, size, count]
            for s in summaries
            for t in s.per_trial
            for size, count in t.histogram.items()
        ]
        write_csv(
            out_dir / "trial_histograms.csv",
            ["n", "k_regular", "p_rewire", "seed", "maximal_clique_size", "count"],
            trial_hist,
        )
    write_json(
        out_dir / "sweep.json",
        {
            "spec": asdict(spec),
            "rng": RNG_NAME,
            "seed_rule": "trial t uses base_seed + t",
            "columns": SWEEP_COLUMNS,
            "zones": {"small-world": "0 < p <= 0.1", "random": "p > 0.1"},
        },
    )


def is_unimodal(histogram: dict[int, int], min_fraction: float = 0.01) -> bool:
    """Single peak once bins holding < ``min_fraction`` of the mass are merged
    into their heavier neighbor. Gaps in the support count as empty bins."""
    if not histogram:
        return True
    lo, hi = min(histogram), max(histogram)
    bins = [histogram.get(s, 0) for s in range(lo, hi + 1)]
    total = sum(bins)
    threshold = min_fraction * total
    while len(bins) > 1:
        small = [i for i, c in enumerate(bins) if c < threshold]
        if not small:
            break
        i = min(small, key=lambda j: (bins[j], j))
        if i == 0:
            j = 1
        elif i == len(bins) - 1:
            j = i - 1
        else:
            j = i - 1 if bins[i - 1] >= bins[i + 1] else i + 1
        bins[j] += bins[i]
        del bins[i]
    peak = bins.index(max(bins))
    rising = all(bins[i] <= bins[i + 1] for i in range(peak))
    falling = all(bins[i] >= bins[i + 1] for i in range(peak, len(bins) - 1))
    return rising and falling


# ---------------------------------------------------------------- single graph


VERTEX_COLUMNS = ["vertex", "label", "degree", "clustering", "maximal_clique_size", "eccentricity", "reachable"]


def analyze_graph(
    g: Graph,
    *,
    nprime_filter: str = "w",
    low_degree_cc: float = TABLE_LOW_DEGREE_CC,
    workers: int = 1,
    budget: float | None = None,
) -> dict:
    """Full report for one graph as a JSON-ready dict (plus per-vertex rows)."""
    if g.n == 0:
        raise ValueError("empty graph")
    summary = graph_summary(g, low_degree=low_degree_cc)
    degrees = g.degrees()
    cc = clustering_coefficients(g, low_degree=low_degree_cc)
    cliques = maximal_clique_sizes(g, nprime_filter=nprime_filter, workers=workers, budget=budget)
    eccs = eccentricities(g)
    dist = degree_distribution(g)
    assort = {}
    for mode in EQ2_MODES:
        if g.m:
            assort[mode] = {
                "maximal_clique_size": assortativity_index(g, cliques.per_vertex, mode=mode).value,
                "degree": assortativity_index(g, degrees, mode=mode).value,
            }
        else:
            assort[mode] = {"maximal_clique_size": None, "degree": None}
    corr = {"clique_vs_degree": None, "clique_vs_clustering": None}
    if g.n >= 2:
        corr = {
            "clique_vs_degree": pearson_correlation(cliques.per_vertex, degrees),
            "clique_vs_clustering": pearson_correlation(cliques.per_vertex, cc),
        }
    labels = g.labels or tuple(str(v) for v in range(g.n))
    vertices = [
        [v, labels[v], degrees[v], cc[v], cliques.per_vertex[v], eccs[v].hops, eccs[v].reachable]
        for v in range(g.n)
    ]
    return {
        "settings": {"nprime_filter": nprime_filter, "clustering_low_degree": low_degree_cc},
        "summary": asdict(summary),
        "degree_distribution": asdict(dist),
        "cliques": {
            "max_size": cliques.max_size,
            "average": cliques.average,
            "histogram": {str(s): c for s, c in cliques.histogram.items()},
            "per_vertex": cliques.per_vertex,
        },
        "correlations": corr,
        "assortativity": assort,
        "vertices": vertices,
    }


def write_analysis(report: dict, out: Path) -> tuple[Path, Path]:
    """``out`` is the JSON path; per-vertex rows go next to it as CSV."""
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    body = {k: v for k, v in report.items() if k != "vertices"}
    write_json(out, body)
    csv_path = out.with_suffix(".vertices.csv")
    write_csv(csv_path, VERTEX_COLUMNS, report["vertices"])
    return out, csv_path


# ---------------------------------------------------------------- tables


TABLE_COLUMNS = [
    "dataset", "title", "n", "m", "spectral_ratio",
    "corr_clique_vs_clustering", "corr_clique_vs_degree",
    "assort_clique", "assort_degree", "eq2_mode",
    "avg_maximal_clique", "max_clique",
]  # fmt: skip


@dataclass
class TableRow:
    dataset: str
    title: str
    n: int
    m: int
    spectral_ratio: float
    corr_clique_vs_clustering: float | None
    corr_clique_vs_degree: float | None
    assort_clique: float | None
    assort_degree: float | None
    eq2_mode: str
    avg_maximal_clique: float
    max_clique: int

    def as_list(self) -> list:
        return [getattr(self, c) for c in TABLE_COLUMNS]


@dataclass
class TableReport:
    rows: list[TableRow]

    def ordering(self, column: str) -> list[str]:
        """Dataset names in increasing order of ``column``."""
        def key(r):
            x = getattr(r, column)
            return (x is None, x if x is not None else 0.0, r.dataset)

        return [r.dataset for r in sorted(self.rows, key=key)]

    def orderings_match(self) -> bool:
        return self.ordering("assort_clique") == self.ordering("assort_degree")

    def row(self, name: str) -> TableRow:
        return next(r for r in self.rows if r.dataset == name)


def table_row(
    name: str,
    g: Graph,
    *,
    eq2_mode: str = "symmetric",
    nprime_filter: str = "w",
    low_degree_cc: float = TABLE_LOW_DEGREE_CC,
    workers: int = 1,
) -> TableRow:
    summary = graph_summary(g, low_degree=low_degree_cc)
    degrees = g.degrees()
    cc = clustering_coefficients(g, low_degree=low_degree_cc)
    cliques = maximal_clique_sizes(g, nprime_filter=nprime_filter, workers=workers)
    return TableRow(
        dataset=name,
        title=DATASETS[name].title if name in DATASETS else name,
        n=g.n,
        m=g.m,
        spectral_ratio=summary.spectral_ratio,
        corr_clique_vs_clustering=pearson_correlation(cliques.per_vertex, cc),
        corr_clique_vs_degree=pearson_correlation(cliques.per_vertex, degrees),
        assort_clique=assortativity_index(g, cliques.per_vertex, mode=eq2_mode).value,
        assort_degree=assortativity_index(g, degrees, mode=eq2_mode).value,
        eq2_mode=eq2_mode,
        avg_maximal_clique=cliques.average,
        max_clique=cliques.max_size,
    )


def run_tables(
    dataset_dir: str | Path | None = None,
    names: list[str] | None = None,
    **kwargs,
) -> TableReport:
    """One row per dataset; raises ``DatasetError`` on a missing or miscounted file."""
    names = list(names or DATASETS)
    return TableReport([table_row(name, load_dataset(name, dataset_dir), **kwargs) for name in names])


def write_tables(report: TableReport, out_dir: Path) -> None:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(out_dir / "tables.csv", TABLE_COLUMNS, [r.as_list() for r in report.rows])
    write_json(
        out_dir / "orderings.json",
        {
            "by_assort_clique": report.ordering("assort_clique"),
            "by_assort_degree": report.ordering("assort_degree"),
            "identical": report.orderings_match(),
        },
    )
