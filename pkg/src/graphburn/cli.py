"""Command-line front end: ``graphburn {solve,verify,bound,gen,bench}``.

Reports are plain ``key value`` lines. Exit codes: 0 ok, 1 input error,
2 semantic failure (incomplete or invalid schedule, size caps exceeded).
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import exact
from .approx import ApproxResult, approx3, burn_guess, vertex_order
from .bincover import fptas_driver
from .exact import CapExceeded, exact_burning_number, path_dp
from .generators import GeneratorError, GenSpec, gen_instance
from .graph import (
    PATH_FOREST,
    TREE,
    Graph,
    GraphFormatError,
    PathForest,
    as_path_forest,
    classify,
    expand_forest,
    parse_graph,
    parse_path_forest,
)
from .ptas import ptas_driver
from .schedule import BurningSchedule, parse_schedule, simulate, validate_strict, verify_certificate
from .tree import NotATreeError, approx2

ALGORITHMS = ("auto", "exact", "greedy3", "tree2", "path-dp", "fptas", "ptas")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> Graph:
    """Edge list, or a ``paths ...`` line expanded into its path forest."""
    text = _read(path)
    first = next((ln.split() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")), [])
    if first and first[0] == "paths":
        return expand_forest(parse_path_forest(text))
    return parse_graph(text)


def _order(spec: str, n: int) -> list[int]:
    if spec == "asc":
        return list(range(n))
    if spec.startswith("random:"):
        try:
            return vertex_order(n, int(spec.split(":", 1)[1]))
        except ValueError:
            pass
    raise UsageError(f"bad --order {spec!r} (use 'asc' or 'random:SEED')")


def _forest_view(g: Graph) -> tuple[PathForest, list[int]]:
    return as_path_forest(g)


def _mapped(result: ApproxResult, mapping: list[int]) -> BurningSchedule:
    return BurningSchedule(tuple(mapping[v] for v in result.schedule))


def pick_algorithm(g: Graph) -> str:
    shape = classify(g)
    if shape.kind == PATH_FOREST:
        return "path-dp"
    if shape.kind == TREE:
        return "tree2"
    return "greedy3"


def _forest_fallback(forest: PathForest) -> str:
    if forest.b >= 2 and forest.lengths[-1] <= 2 * forest.lengths[0]:
        return "fptas"
    return "ptas"


def solve(g: Graph, args) -> tuple[str, BurningSchedule, dict]:
    algo = args.algo
    auto = algo == "auto"
    if auto:
        algo = pick_algorithm(g)
    report: dict = {}
    if algo == "exact":
        res = exact_burning_number(g, cap=args.oracle_cap, path_cap=args.path_cap)
        report.update(lower_bound=res.burning_number, ratio_bound=1, **res.stats)
        return algo, res.schedule, report
    if algo == "greedy3":
        res = approx3(g, args.search, _order(args.order, g.n))
    elif algo == "tree2":
        res = approx2(g, args.root, args.search)
    elif algo in ("path-dp", "fptas", "ptas"):
        if classify(g).kind != PATH_FOREST:
            raise UsageError(f"{algo} needs a path forest")
        forest, mapping = _forest_view(g)
        if algo == "path-dp":
            try:
                ex = path_dp(forest, cap=args.dp_cap)
            except CapExceeded:
                if not auto:
                    raise
                algo = _forest_fallback(forest)
        if algo == "path-dp":
            sched = BurningSchedule(tuple(mapping[v] for v in ex.schedule))
            report.update(lower_bound=ex.burning_number, ratio_bound=1, **ex.stats)
            return algo, sched, report
        if algo == "fptas":
            res = fptas_driver(forest, args.eps, cap=args.covering_cap)
            report.update(c_star=res.info["c_star"], eps0=res.info["eps0"])
        else:
            res = ptas_driver(forest, args.eps, args.alpha)
            report.update(lower_bound_source=res.info["lower_bound_source"])
        res.schedule = _mapped(res, mapping)
    else:
        raise UsageError(f"unknown algorithm {algo!r}")
    report = {
        "lower_bound": "uncertified" if res.opt_lower_bound is None else res.opt_lower_bound,
        "ratio_bound": res.ratio_bound,
        "guess": res.guess,
        **report,
        **res.counters,
    }
    return algo, res.schedule, report


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def cmd_solve(args) -> int:
    g = load_graph(args.input)
    started = time.perf_counter()
    algo, sched, report = solve(g, args)
    micros = int((time.perf_counter() - started) * 1e6)
    out = simulate(g, sched)
    if not out.complete:
        print(f"error: {algo} produced an incomplete schedule", file=sys.stderr)
        return 2
    lines = [f"algorithm {algo}", f"n {g.n}", f"m {g.m}", f"rounds {out.completion_round}"]
    lines += [f"{k} {_fmt(v)}" for k, v in report.items() if v is not None]
    if args.timing:
        lines.append(f"micros {micros}")
    print("\n".join(lines))
    text = sched.to_text(out.completion_round)
    if args.schedule_out:
        with open(args.schedule_out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        print("schedule")
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.input)
    sched = parse_schedule(_read(args.schedule))
    for v in sched:
        if v >= g.n:
            raise GraphFormatError(f"activator {v} out of range for n={g.n}")
    out = simulate(g, sched)
    lines = [f"burn {v} {'-' if t is None else t}" for v, t in enumerate(out.burn_time)]
    lines.append(f"rounds {out.completion_round}")
    lines.append(f"complete {'yes' if out.complete else 'no'}")
    ok = out.complete
    if args.strict:
        strict = validate_strict(g, sched)
        lines.append(f"strict {'yes' if strict else 'no'}")
        ok = ok and strict
    print("\n".join(lines))
    return 0 if ok else 2


def cmd_bound(args) -> int:
    g = load_graph(args.input)
    order = _order(args.order, g.n)
    best = None
    for guess in range(1, g.n + 1):
        res = burn_guess(g, guess, order)
        if not res.accepted:
            best = res.certificate
    if best is None:
        print("r 0")
        return 0
    assert verify_certificate(g, best)
    print(f"r {best.r}")
    print("witnesses " + " ".join(map(str, best.witnesses)))
    return 0


def _gen_spec(args) -> GenSpec:
    t = args.type
    try:
        if t == "gnp":
            return GenSpec("gnp", (args.n, args.p))
        if t in ("random-tree", "tree"):
            return GenSpec("random-tree", (args.n,))
        if t == "paths":
            return GenSpec("paths", (args.b, args.min_len, args.max_len))
        if t in ("gadget", "tight"):
            return GenSpec(t, (args.k,))
    except AttributeError:
        pass
    raise UsageError(f"unknown generator type {t!r}")


def cmd_gen(args) -> int:
    spec = _gen_spec(args)
    if any(a is None for a in spec.args):
        raise UsageError(f"missing parameters for {spec.kind}")
    g = gen_instance(spec, args.seed)
    text = g.to_text()
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    print("# n m rounds lower_bound micros traversals")
    for n in sizes:
        if args.algo == "greedy3":
            g = gen_instance(GenSpec("gnp", (n, min(1.0, args.degree / max(n - 1, 1)))), args.seed)
            t0 = time.perf_counter()
            res = approx3(g, args.search)
        elif args.algo == "tree2":
            g = gen_instance(GenSpec("random-tree", (n,)), args.seed)
            t0 = time.perf_counter()
            res = approx2(g, search_mode=args.search)
        else:
            raise UsageError(f"bench supports greedy3 and tree2, not {args.algo!r}")
        micros = int((time.perf_counter() - t0) * 1e6)
        trav = res.counters.get("traversals", 0)
        print(f"{g.n} {g.m} {res.rounds} {res.opt_lower_bound} {micros} {trav}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphburn", description="Graph burning schedules and bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a burning schedule")
    s.add_argument("input", help="graph file ('-' for stdin)")
    s.add_argument("--algo", choices=ALGORITHMS, default="auto")
    s.add_argument("--eps", type=Fraction, default=Fraction(1, 2))
    s.add_argument("--alpha", type=Fraction, default=Fraction(3))
    s.add_argument("--order", default="asc", help="'asc' or 'random:SEED' (greedy3)")
    s.add_argument("--root", type=int, default=None, help="root vertex (tree2)")
    s.add_argument("--search", choices=("binary", "linear"), default="binary")
    s.add_argument("--oracle-cap", type=int, default=exact.DEFAULT_GENERAL_CAP)
    s.add_argument("--path-cap", type=int, default=exact.DEFAULT_PATH_CAP)
    s.add_argument("--dp-cap", type=int, default=exact.DEFAULT_DP_CAP)
    s.add_argument("--covering-cap", type=int, default=64)
    s.add_argument("--schedule-out", default=None, help="write the schedule here instead of stdout")
    s.add_argument("--timing", action="store_true", help="also report wall time in microseconds")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="simulate a schedule file")
    v.add_argument("input")
    v.add_argument("--schedule", required=True)
    v.add_argument("--strict", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="largest distance certificate found by the guess sweep")
    b.add_argument("input")
    b.add_argument("--order", default="asc")
    b.set_defaults(func=cmd_bound)

    gn = sub.add_parser("gen", help="generate an instance as an edge list")
    gn.add_argument("--type", required=True, choices=("gnp", "random-tree", "tree", "paths", "gadget", "tight"))
    gn.add_argument("--n", type=int)
    gn.add_argument("--p", type=float)
    gn.add_argument("--k", type=int)
    gn.add_argument("--b", type=int)
    gn.add_argument("--min-len", type=int)
    gn.add_argument("--max-len", type=int)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--out", default=None)
    gn.set_defaults(func=cmd_gen)

    bn = sub.add_parser("bench", help="time an algorithm over generated instances")
    bn.add_argument("--algo", choices=("greedy3", "tree2"), default="greedy3")
    bn.add_argument("--sizes", default="1000,10000,100000")
    bn.add_argument("--degree", type=float, default=10.0, help="expected degree for G(n,p)")
    bn.add_argument("--search", choices=("binary", "linear"), default="binary")
    bn.add_argument("--seed", type=int, default=0)
    bn.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, GeneratorError, UsageError, NotATreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
