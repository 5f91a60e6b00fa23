"""Command-line entry point: ``dpgclique {solve,verify,play,bounds,gadget}``.

Exit codes: 0 verdict produced / all checks pass, 1 a verification check
failed, 2 input error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import gadgets, plotting
from .criteria import bounds_report
from .errors import BudgetExceeded, InvalidInput, NotApplicable
from .game import format_transcript
from .graph import Graph, complete_graph, parse_edgelist, to_dot, to_edgelist
from .solver import DEFAULT_CAP, DEFAULT_MAX_EDGES, DEFAULT_MAX_NODES, Solver
from .strategies import SCRIPTS, SupportedPairTarget, play_strategy, scripted
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class Output:
    def __init__(self, mode: str, stream=None):
        self.mode = mode
        self.stream = stream or sys.stdout

    def text(self, line: str = ""):
        if self.mode == "text":
            print(line, file=self.stream)

    def record(self, **fields):
        if self.mode == "tsv":
            cells = [f"{k}={_clean(v)}" for k, v in fields.items()]
            print("RESULT\t" + "\t".join(cells), file=self.stream)


def _clean(v) -> str:
    return str(v).replace("\t", " ").replace("\n", " ")


def load_seed(args) -> tuple[Graph, str]:
    if args.edges:
        try:
            text = Path(args.edges).read_text()
        except OSError as exc:
            raise InvalidInput(f"cannot read {args.edges}: {exc}") from None
        return parse_edgelist(text), args.edges
    if args.gadget:
        spec = gadgets.GadgetSpec(args.gadget, args.n)
        return gadgets.generate(spec), spec.describe()
    raise InvalidInput("give a seed with --gadget FAMILY [--n N] or --edges FILE")


def parse_target(spec: str):
    m = re.fullmatch(r"[Kk](\d+)", spec)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise InvalidInput("clique target needs k >= 1")
        return complete_graph(k)
    m = re.fullmatch(r"supported-pair:(\d+)", spec)
    if m:
        return SupportedPairTarget(int(m.group(1)))
    path = Path(spec)
    if path.exists():
        return parse_edgelist(path.read_text())
    raise InvalidInput(f"bad target {spec!r}: use K<k>, supported-pair:<r> or an edge-list file")


def _add_seed_args(p):
    p.add_argument("--gadget", help=f"seed family: {', '.join(gadgets.FAMILIES)}")
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--edges", help="seed edge-list file")


def cmd_solve(args, out: Output) -> int:
    seed, name = load_seed(args)
    target = parse_target(args.target)
    if not isinstance(target, Graph):
        raise InvalidInput("solve needs a graph target (K<k> or an edge-list file)")
    solver = Solver(target, memo=not args.no_memo, max_edges=args.max_edges, max_nodes=args.max_nodes or None)
    res = solver.solve(seed, args.cap, pv=args.pv)
    out.text(str(res.verdict))
    out.text(f"seed: {name} (n={seed.n}, m={seed.m})  target: {args.target}  cap: {args.cap}")
    out.text(f"nodes_searched: {res.nodes_searched}")
    out.record(command="solve", seed=name, target=args.target, cap=args.cap, verdict=res.verdict,
               value="" if res.value is None else res.value, nodes=res.nodes_searched)
    if args.pv and res.principal_variation:
        out.text("principal variation:")
        for i, line in enumerate(format_transcript(res.principal_variation).splitlines(), start=1):
            out.text(line)
            out.record(command="solve", kind="pv", round=i, line=line)
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    opts = {k: v for k, v in vars(args).items()
            if k in ("n_max", "rng", "plays", "pairs", "probe_vertices", "max_vertices") and v is not None}
    rep = run_suite(args.suite, **opts)
    width = max((len(r.check) for r in rep.rows), default=10)
    out.text(f"suite {rep.name}")
    for r in rep.rows:
        status = "PASS" if r.passed else "FAIL"
        out.text(f"  {status}  {r.check:<{width}}  expected={r.expected}  observed={r.observed}")
        out.record(suite=rep.name, check=r.check, expected=r.expected, observed=r.observed, status=status)
    if "rng" in opts:
        out.text(f"rng seed: {opts['rng']}")
    if args.figures and rep.figure:
        for path in rep.figure(Path(args.figures)):
            out.text(f"figure: {path}")
            out.record(suite=rep.name, kind="figure", path=path)
    verdict = "all checks pass" if rep.passed else "FAILED"
    out.text(f"{verdict} ({len(rep.rows)} rows, {rep.seconds:.2f}s)")
    out.record(suite=rep.name, status="PASS" if rep.passed else "FAIL", rows=len(rep.rows), seconds=f"{rep.seconds:.3f}")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_play(args, out: Output) -> int:
    seed, name = load_seed(args)
    strategy = scripted(args.builder)
    target = parse_target(args.target)
    rounds = args.rounds if args.rounds is not None else strategy.declared_rounds
    if args.chooser == "random":
        out.text(f"rng seed: {args.rng}")
    finals = play_strategy(seed, strategy, target, rounds, args.chooser, args.rng)
    from .game import is_win

    wins = 0
    for i, s in enumerate(finals):
        won = is_win(s, target)
        wins += won
        out.text(f"branch {i}: {'win' if won else 'no win'} after {s.round} rounds")
        for line in format_transcript(s.transcript).splitlines():
            out.text("  " + line)
        out.record(command="play", branch=i, rounds=s.round, win=int(won),
                   transcript=" ; ".join(format_transcript(s.transcript).splitlines()))
    out.text(f"{wins}/{len(finals)} branches reach the target")
    out.record(command="play", seed=name, builder=args.builder, chooser=args.chooser, branches=len(finals), wins=wins)
    return EXIT_OK if wins == len(finals) else EXIT_FAIL


def cmd_bounds(args, out: Output) -> int:
    rep = bounds_report(args.k)
    text = rep.to_text()
    out.text(text.rstrip("\n"))
    out.record(command="bounds", **dict(line.split("=", 1) for line in text.splitlines()))
    return EXIT_OK


def cmd_gadget(args, out: Output) -> int:
    g = gadgets.generate(gadgets.GadgetSpec(args.family, args.n))
    if args.action == "emit":
        body = to_edgelist(g) if args.format == "edgelist" else to_dot(g)
        if args.out_file:
            Path(args.out_file).write_text(body)
        else:
            sys.stdout.write(body)
        if args.figure:
            plotting.draw_graph(g, args.figure, title=args.family)
        return EXIT_OK
    results = gadgets.certify(g, args.claim or [])
    for r in results:
        out.text(f"{'PASS' if r.passed else 'FAIL'}  {r.claim}" + (f"  ({r.witness})" if r.witness else ""))
        out.record(command="certify", claim=r.claim, status="PASS" if r.passed else "FAIL", witness=r.witness)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpgclique", description="Degree-preserving Builder-Chooser clique game toolkit")
    p.add_argument("--output", choices=("text", "tsv"), default="text",
                   help="human-readable text or RESULT<TAB>key=value lines")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact forcing time up to a round cap")
    _add_seed_args(s)
    s.add_argument("--target", default="K3")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--pv", action="store_true", help="print the principal variation")
    s.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES,
                   help="largest intermediate edge set for full bipartition search")
    s.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES,
                   help="search node budget; 0 disables it")
    s.add_argument("--no-memo", action="store_true")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="run a registered verification suite")
    v.add_argument("suite", help=f"one of: {', '.join(SUITES)}")
    v.add_argument("--n-max", type=int)
    v.add_argument("--rng", type=int)
    v.add_argument("--plays", type=int)
    v.add_argument("--pairs", type=int)
    v.add_argument("--probe-vertices", type=int)
    v.add_argument("--max-vertices", type=int)
    v.add_argument("--figures", help="directory for rendered figures")
    v.set_defaults(func=cmd_verify)

    pl = sub.add_parser("play", help="play a scripted Builder against a Chooser policy")
    _add_seed_args(pl)
    pl.add_argument("--builder", required=True, help=f"one of: {', '.join(SCRIPTS)}")
    pl.add_argument("--chooser", default="exhaustive", choices=("exhaustive", "greedy-avoid", "random"))
    pl.add_argument("--rng", type=int, default=0)
    pl.add_argument("--rounds", type=int)
    pl.add_argument("--target", default="K3")
    pl.set_defaults(func=cmd_play)

    b = sub.add_parser("bounds", help="known bounds on rho(k) and s(k)")
    b.add_argument("--k", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    g = sub.add_parser("gadget", help="emit or certify a gadget graph")
    g.add_argument("action", choices=("emit", "certify"))
    g.add_argument("family", help=f"one of: {', '.join(gadgets.FAMILIES)}")
    g.add_argument("--n", type=int)
    g.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    g.add_argument("-o", "--out-file", dest="out_file", help="write the graph here instead of stdout")
    g.add_argument("--figure", help="also render a PNG drawing here")
    g.add_argument("--claim", action="append", help="claim to certify (repeatable)")
    g.set_defaults(func=cmd_gadget)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.output)
    try:
        if args.command == "verify" and args.suite not in SUITES:
            raise InvalidInput(f"unknown suite {args.suite!r}; available: {', '.join(SUITES)}")
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidInput, NotApplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
