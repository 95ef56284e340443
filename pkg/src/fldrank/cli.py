"""Command-line front end: rank tables, spreading campaigns, tau sweeps, overlaps.

Every run emits its data rows (CSV or JSON) plus a run manifest holding the
command, the input file hash and all effective parameters, enough to
reproduce the rows byte for byte. With --out FILE the manifest lands next
to it as FILE.manifest.json; without --out, rows go to stdout and the
manifest to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .centrality import Measure, PowerIterationError, rank_nodes
from .evaluation import compute_measure, tau_sweep, top_k_overlap
from .graph import EdgeListError, Graph, load_edge_list
from .si import SiConfig, lambda_from_beta, simulate

_SCHEMAS = {
    "rank": ("rank", "node", "score", "undefined"),
    "trajectory": ("t", "mean_F", "std_F"),
    "tau": ("lambda", "tau", "n_c", "n_d"),
    "overlap": ("measure_a", "measure_b", "k", "overlap"),
}


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def _json_cell(value):
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        return round(value, 6)
    return value


def _render(schema: str, rows, output: str) -> str:
    columns = _SCHEMAS[schema]
    if output == "json":
        body = [dict(zip(columns, (_json_cell(v) for v in row))) for row in rows]
        return json.dumps(body, indent=2) + "\n"
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(args, command: str, schema: str, rows, params: dict) -> None:
    payload = _render(schema, rows, args.output)
    manifest = {
        "tool": "fldrank",
        "version": __version__,
        "command": command,
        "input": {
            "path": str(args.input),
            "sha256": hashlib.sha256(Path(args.input).read_bytes()).hexdigest(),
        },
        "params": params,
        "output": {"format": args.output, "path": str(args.out) if args.out else None},
    }
    manifest_text = json.dumps(manifest, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(payload, newline="")
        Path(str(args.out) + ".manifest.json").write_text(manifest_text, newline="")
    else:
        sys.stdout.write(payload)
        sys.stderr.write(manifest_text)


def _parse_measure(name: str) -> Measure:
    try:
        return Measure(name.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown measure {name!r}") from None


def _parse_measures(raw: str) -> list[Measure]:
    return [_parse_measure(tok) for tok in raw.split(",") if tok]


def _parse_lambda_range(raw: str) -> list[float]:
    try:
        start, stop, step = (float(tok) for tok in raw.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected start:stop:step, got {raw!r}"
        ) from None
    if step <= 0 or start > stop:
        raise argparse.ArgumentTypeError("need step > 0 and start <= stop")
    values = []
    k = 0
    while True:
        value = round(start + k * step, 10)
        if value > stop + 1e-9:
            break
        values.append(value)
        k += 1
    return values


def _resolve_seeds(g: Graph, args) -> tuple[tuple[int, ...], list[str]]:
    if args.seeds is not None:
        ids = []
        for label in args.seeds.split(","):
            label = label.strip()
            if label not in g.label_to_id:
                raise ValueError(f"seed label {label!r} not in graph")
            ids.append(g.label_to_id[label])
        seeds = tuple(sorted(set(ids)))
    else:
        if args.measure is None:
            raise ValueError("--top requires --measure")
        ranking = rank_nodes(compute_measure(g, args.measure), g.node_labels)
        if args.top > len(ranking.labels):
            raise ValueError(f"--top {args.top} exceeds node count {len(ranking.labels)}")
        seeds = tuple(sorted(g.label_to_id[l] for l in ranking.top(args.top)))
    return seeds, [g.node_labels[s] for s in seeds]


def cmd_rank(args) -> int:
    g = load_edge_list(args.input)
    ranking = rank_nodes(compute_measure(g, args.measure), g.node_labels)
    rows = [
        (pos, label, score, undefined)
        for pos, (label, score, undefined) in enumerate(
            zip(ranking.labels, ranking.scores, ranking.undefined), start=1
        )
    ]
    _emit(args, "rank", "rank", rows, {"measure": args.measure.value})
    return 0


def cmd_si(args) -> int:
    g = load_edge_list(args.input)
    lam = args.lam if args.lam is not None else lambda_from_beta(args.beta)
    seeds, seed_labels = _resolve_seeds(g, args)
    cfg = SiConfig(
        lam=lam,
        seeds=seeds,
        replicates=args.replicates,
        max_steps=args.max_steps,
        rng_seed=args.rng_seed,
    )
    ensemble = simulate(g, cfg)
    rows = [
        (t, mean, std)
        for t, (mean, std) in enumerate(zip(ensemble.mean_f, ensemble.std_f))
    ]
    params = {
        "seeds": seed_labels,
        "top": args.top,
        "measure": args.measure.value if args.measure else None,
        "beta": args.beta,
        "lambda": lam,
        "replicates": args.replicates,
        "rng_seed": args.rng_seed,
        "max_steps": args.max_steps,
    }
    _emit(args, "si", "trajectory", rows, params)
    return 0


def cmd_tau(args) -> int:
    g = load_edge_list(args.input)
    sv = compute_measure(g, args.measure)
    results = tau_sweep(
        g,
        sv,
        args.lambda_range,
        t_eval=args.t_eval,
        replicates=args.replicates,
        rng_seed=args.rng_seed,
    )
    rows = [(lam, res.tau, res.n_c, res.n_d) for lam, res in results]
    params = {
        "measure": args.measure.value,
        "lambda_grid": args.lambda_range,
        "t_eval": args.t_eval,
        "replicates": args.replicates,
        "rng_seed": args.rng_seed,
    }
    _emit(args, "tau", "tau", rows, params)
    return 0


def cmd_compare(args) -> int:
    g = load_edge_list(args.input)
    rankings = {
        m: rank_nodes(compute_measure(g, m), g.node_labels) for m in args.measures
    }
    rows = [
        (a.value, b.value, args.k, top_k_overlap(rankings[a], rankings[b], args.k))
        for a in args.measures
        for b in args.measures
    ]
    params = {"measures": [m.value for m in args.measures], "k": args.k}
    _emit(args, "compare", "overlap", rows, params)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fldrank",
        description="Rank influential network nodes and evaluate rankings against simulated spreading.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--output", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="write rows here (manifest lands at OUT.manifest.json)")

    p_rank = sub.add_parser("rank", help="score and rank all nodes with one measure")
    common(p_rank)
    p_rank.add_argument("--measure", type=_parse_measure, required=True)
    p_rank.set_defaults(func=cmd_rank)

    p_si = sub.add_parser("si", help="simulate spreading from a seed set")
    common(p_si)
    seeds = p_si.add_mutually_exclusive_group(required=True)
    seeds.add_argument("--seeds", help="comma-separated node labels")
    seeds.add_argument("--top", type=int, help="seed the top-k nodes of --measure")
    p_si.add_argument("--measure", type=_parse_measure, default=None)
    rate = p_si.add_mutually_exclusive_group(required=True)
    rate.add_argument("--beta", type=float, help="infection rate (1/2)**beta")
    rate.add_argument("--lambda", dest="lam", type=float, help="infection rate directly")
    p_si.add_argument("--replicates", type=int, default=100)
    p_si.add_argument("--rng-seed", type=int, default=0)
    p_si.add_argument("--max-steps", type=int, default=None)
    p_si.set_defaults(func=cmd_si)

    p_tau = sub.add_parser("tau", help="rank correlation against spreading ability")
    common(p_tau)
    p_tau.add_argument("--measure", type=_parse_measure, required=True)
    p_tau.add_argument(
        "--lambda-range", type=_parse_lambda_range, default=_parse_lambda_range("0.01:0.1:0.01")
    )
    p_tau.add_argument("--t-eval", type=int, default=10)
    p_tau.add_argument("--replicates", type=int, default=100)
    p_tau.add_argument("--rng-seed", type=int, default=0)
    p_tau.set_defaults(func=cmd_tau)

    p_cmp = sub.add_parser("compare", help="pairwise top-k overlap between measures")
    common(p_cmp)
    p_cmp.add_argument(
        "--measures", type=_parse_measures, default=list(Measure)
    )
    p_cmp.add_argument("--k", type=int, default=10)
    p_cmp.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListError, PowerIterationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
