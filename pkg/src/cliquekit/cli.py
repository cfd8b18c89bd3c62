"""Command-line front end: ``cliquekit <command> [options]``.

Exit status is 0 on success, 1 on bad input (unreadable or malformed files,
invalid parameters) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .community import (
    CoverError,
    covers_from_labels,
    format_communities,
    k_clique_communities,
    omega_index,
    parse_communities,
    parse_memberships,
)
from .exact import CliqueResult, max_clique
from .graph import (
    CsrGraph,
    GraphInputError,
    generate_hamming,
    generate_johnson,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
)
from .heuristic import SelectionPolicy, max_clique_heuristic
from .oracle import OracleLimitError, brute_force_max_clique, enumerate_maximal_cliques
from .parallel import ConfigError, ParallelConfig, max_clique_parallel
from .rmat import FAMILIES, RmatParams, rmat_generate

INPUT_ERRORS = (OSError, GraphInputError, CoverError, OracleLimitError, ConfigError, ValueError)


@dataclass
class RunReport:
    command: list[str]
    graph: dict[str, int] | None = None
    result: dict[str, Any] = field(default_factory=dict)
    stats: dict[str, int] | None = None
    elapsed: float = 0.0
    seeds: list[int] = field(default_factory=list)
    workers: int = 1

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)

    def to_text(self) -> str:
        rows = [("command", " ".join(self.command))]
        if self.graph:
            rows += [(k, str(v)) for k, v in self.graph.items()]
        for k, v in self.result.items():
            if isinstance(v, list):
                v = " ".join(map(str, v)) if v and not isinstance(v[0], list) else f"[{len(v)} items]"
            rows.append((k, str(v)))
        if self.stats:
            rows += [(k.upper(), str(v)) for k, v in self.stats.items()]
        rows += [("elapsed_s", f"{self.elapsed:.6f}"), ("seeds", ",".join(map(str, self.seeds)) or "-"),
                 ("workers", str(self.workers))]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def graph_stats(g: CsrGraph) -> dict[str, int]:
    return {"n": g.n, "m": g.m, "max_degree": g.max_degree}


def load_graph(path: str, fmt: str = "auto") -> tuple[CsrGraph, str]:
    text = Path(path).read_text()
    if fmt == "auto":
        fmt = "dimacs" if path.endswith(".clq") else "edges"
    return (parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)), fmt


def external_ids(g: CsrGraph, fmt: str, members) -> list[int]:
    if fmt == "dimacs":
        return [int(v) + 1 for v in members]
    return sorted(g.label(v) for v in members)


def clique_report(argv, g, fmt, res: CliqueResult, seeds=(), workers=1) -> RunReport:
    return RunReport(
        command=list(argv),
        graph=graph_stats(g),
        result={"size": res.size, "members": external_ids(g, fmt, res.members), "found": res.found},
        stats=res.stats.as_dict(),
        elapsed=res.elapsed,
        seeds=list(seeds),
        workers=workers,
    )


def write_graph(g: CsrGraph, out: str | None, comment: str) -> None:
    text = to_dimacs(g, comment) if out and out.endswith(".clq") else to_edge_list(g, comment)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_exact(args, argv):
    g, fmt = load_graph(args.input, args.format)
    return clique_report(argv, g, fmt, max_clique(g, lb=args.lb))


def _policy(args) -> SelectionPolicy:
    return SelectionPolicy.random(args.seed) if args.policy == "random" else SelectionPolicy.max_degree()


def cmd_heuristic(args, argv):
    g, fmt = load_graph(args.input, args.format)
    res = max_clique_heuristic(g, _policy(args), restarts=args.restarts)
    return clique_report(argv, g, fmt, res, seeds=[args.seed])


def cmd_parallel(args, argv):
    g, fmt = load_graph(args.input, args.format)
    cfg = ParallelConfig(workers=args.workers, chunk=args.chunk, lb=args.lb, method=args.method, policy=_policy(args))
    return clique_report(argv, g, fmt, max_clique_parallel(g, cfg), seeds=[args.seed], workers=args.workers)


def _gen_report(argv, g, start, seeds=(), out=None) -> RunReport:
    return RunReport(command=list(argv), graph=graph_stats(g), result={"out": out or "-"},
                     elapsed=time.perf_counter() - start, seeds=list(seeds))


def cmd_gen_rmat(args, argv):
    start = time.perf_counter()
    if args.family:
        probs = FAMILIES[args.family]
    elif args.params:
        try:
            probs = tuple(float(x) for x in args.params.split(","))
        except ValueError:
            raise GraphInputError(f"bad --params {args.params!r}") from None
        if len(probs) != 4:
            raise GraphInputError("--params needs four comma-separated probabilities")
    else:
        probs = FAMILIES["er"]
    g = rmat_generate(RmatParams(*probs, scale=args.scale, target_edges=args.edges, seed=args.seed))
    write_graph(g, args.out, f"rmat a,b,c,d={','.join(map(str, probs))} scale={args.scale} "
                             f"edges={args.edges} seed={args.seed} n={g.n} m={g.m}")
    return _gen_report(argv, g, start, [args.seed], args.out)


def cmd_gen_hamming(args, argv):
    start = time.perf_counter()
    g = generate_hamming(args.length, args.dist)
    write_graph(g, args.out, f"hamming{args.length}-{args.dist}")
    return _gen_report(argv, g, start, out=args.out)


def cmd_gen_johnson(args, argv):
    start = time.perf_counter()
    g = generate_johnson(args.n_set, args.weight, args.dist)
    write_graph(g, args.out, f"johnson{args.n_set}-{args.weight}-{args.dist}")
    return _gen_report(argv, g, start, out=args.out)


def cmd_communities(args, argv):
    start = time.perf_counter()
    g, fmt = load_graph(args.input, args.format)
    cs = k_clique_communities(g, args.k, args.c, args.seed, workers=args.workers)
    if fmt == "dimacs":
        labelled = [[v + 1 for v in comm] for comm in cs.communities]
    else:
        labelled = cs.relabel(g)
    text = format_communities(labelled)
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    return RunReport(
        command=list(argv),
        graph=graph_stats(g),
        result={"communities": len(cs), "shared_nodes": cs.shared_nodes, "out": args.out or "-"},
        elapsed=time.perf_counter() - start,
        seeds=[args.seed],
        workers=args.workers,
    )


def _read_cover(path: str, fmt: str) -> list[list[int]]:
    text = Path(path).read_text()
    return parse_memberships(text) if fmt == "memberships" else parse_communities(text)


def cmd_omega(args, argv):
    start = time.perf_counter()
    truth = _read_cover(args.truth, args.truth_format)
    found = _read_cover(args.found, args.found_format)
    a, b = covers_from_labels(args.n, truth, found)
    value = omega_index(a, b)
    return RunReport(command=list(argv), result={"omega": value, "truth_communities": len(truth),
                                                 "found_communities": len(found)},
                     elapsed=time.perf_counter() - start)


def cmd_oracle(args, argv):
    g, fmt = load_graph(args.input, args.format)
    res = brute_force_max_clique(g)
    report = clique_report(argv, g, fmt, res)
    report.stats = None
    if args.enumerate:
        cliques = enumerate_maximal_cliques(g)
        report.result["maximal_cliques"] = sorted(external_ids(g, fmt, q) for q in cliques)
    return report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliquekit", description="Maximum clique and clique-community toolkit.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--input", "-i", required=True)
        sp.add_argument("--format", choices=["auto", "dimacs", "edges"], default="auto")
        sp.add_argument("--json", action="store_true")
        return sp

    sp = graph_cmd("exact", "exact maximum clique")
    sp.add_argument("--lb", type=int, default=0)
    sp.set_defaults(func=cmd_exact)

    sp = graph_cmd("heuristic", "greedy maximum clique")
    sp.add_argument("--policy", choices=["max-degree", "random"], default="max-degree")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--restarts", type=int, default=1)
    sp.set_defaults(func=cmd_heuristic)

    sp = graph_cmd("parallel", "multi-worker exact or greedy search")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--chunk", type=int, default=16)
    sp.add_argument("--lb", type=int, default=0)
    sp.add_argument("--method", choices=["exact", "heuristic"], default="exact")
    sp.add_argument("--policy", choices=["max-degree", "random"], default="max-degree")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_parallel)

    sp = graph_cmd("oracle", "reference brute-force search (small graphs)")
    sp.add_argument("--enumerate", action="store_true", help="also list all maximal cliques")
    sp.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="graph generators")
    gsub = gen.add_subparsers(dest="generator", required=True, parser_class=_Parser)
    sp = gsub.add_parser("rmat")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--params", help="a,b,c,d quadrant probabilities")
    group.add_argument("--family", choices=sorted(FAMILIES))
    sp.add_argument("--scale", type=int, required=True)
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen_rmat)
    sp = gsub.add_parser("hamming")
    sp.add_argument("--len", dest="length", type=int, required=True)
    sp.add_argument("--dist", type=int, required=True)
    sp.set_defaults(func=cmd_gen_hamming)
    sp = gsub.add_parser("johnson")
    sp.add_argument("--n-set", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--dist", type=int, required=True)
    sp.set_defaults(func=cmd_gen_johnson)
    for name in ("rmat", "hamming", "johnson"):
        gp = gsub.choices[name]
        gp.add_argument("--out", "-o", help="output file (.clq for DIMACS, else edge list); stdout if omitted")
        gp.add_argument("--json", action="store_true")

    sp = graph_cmd("communities", "overlapping k-clique communities")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--c", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", "-o")
    sp.set_defaults(func=cmd_communities)

    sp = sub.add_parser("omega", help="Omega index between two covers")
    sp.add_argument("--truth", required=True)
    sp.add_argument("--found", required=True)
    sp.add_argument("--n", type=int, required=True, help="number of nodes in the universe")
    sp.add_argument("--truth-format", choices=["communities", "memberships"], default="communities")
    sp.add_argument("--found-format", choices=["communities", "memberships"], default="communities")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_omega)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args, argv)
    except INPUT_ERRORS as exc:
        print(f"cliquekit: error: {exc}", file=sys.stderr)
        return 1
    # Generators writing the graph to stdout keep the report off stdout.
    stream = sys.stderr if args.command == "gen" and not getattr(args, "out", None) else sys.stdout
    print(report.to_json() if args.json else report.to_text(), file=stream)
    return 0


if __name__ == "__main__":
    sys.exit(main())
