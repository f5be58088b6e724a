"""Command-line interface: ``graphmorse <command> ...``."""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from .curvature import GaussBonnetMismatch, gauss_bonnet_report
from .experiments import BENCH_COLUMNS, METHODS, bench, disagreements, mc_critical, run_method
from .fastchi import ChiDisagreement, chi_agreement_suite
from .generators import FAMILIES, FamilyError, FamilySpec, SelfCheckError, generate
from .graph import CensusBudgetExceeded, clique_census
from .io import ParseError, emit_graph, emit_morse, parse_graph, parse_morse
from .morse import MorseError, as_morse, index_report, random_morse, verify_intermediate, verify_transfer
from .spectrum import DEFAULT_MAX_ORDER, DEFAULT_MOVES, DEFAULT_RESTARTS, m_exact, m_search, is_sphere_type

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_VERIFY = 5
EXIT_BUDGET = 6

EPILOG = """\
exit status:
  0  success
  2  usage error (bad or missing flags)
  3  parse error in a graph or Morse file (line number reported)
  4  validation error (Morse function not injective on unit balls, bad family parameters)
  5  verification failure (methods disagree, theorem check failed)
  6  clique census exceeded --budget
"""


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args):
    if not args.graph:
        raise UsageError("--graph is required")
    return parse_graph(_read(args.graph))


def _load_morse(args, G):
    return as_morse(G, parse_morse(_read(args.morse), G.order))


def _need_seed(args, why: str):
    if args.seed is None:
        raise UsageError(f"--seed is required {why}")
    return args.seed


def _out(args):
    if getattr(args, "out", None):
        return open(args.out, "w", newline="")
    return sys.stdout


def parse_params(text: str | None) -> list[tuple[int, ...]]:
    """``"8-12"`` -> n = 8..12; ``"4x4,5x5"`` -> two 2-parameter instances."""
    if not text:
        return [()]
    out = []
    for item in text.split(","):
        item = item.strip()
        if "-" in item and "x" not in item:
            lo, hi = item.split("-")
            out.extend((k,) for k in range(int(lo), int(hi) + 1))
        else:
            out.append(tuple(int(t) for t in item.split("x")))
    return out


def cmd_chi(args) -> int:
    G = _load_graph(args)
    if args.verify:
        seed = args.seed if args.seed is not None else 0
        res = chi_agreement_suite(G, seed=seed)
        for name, val in res.values.items():
            print(f"{name},{val},{res.timings_us[name]:.0f}")
        print(res.census)
        return EXIT_OK
    method = args.method
    t0 = time.perf_counter()
    if method == "hopf":
        f = _load_morse(args, G) if args.morse else random_morse(G, _need_seed(args, "for hopf without --morse"))
        chi = index_report(G, f).index_sum
    elif method == "cliques":
        chi = clique_census(G, args.budget).euler
    else:
        chi = run_method(G, method)
    dt = (time.perf_counter() - t0) * 1e6
    print(chi)
    if args.time:
        print(f"wall_time_us={dt:.0f}", file=sys.stderr)
    return EXIT_OK


def write_index_csv(G, f, stream) -> None:
    rep = index_report(G, f)
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["vertex", "index", "critical", "j_times_2"])
    for v in range(G.order):
        w.writerow([v + 1, rep.indices[v], int(rep.critical[v]), rep.indices[v] + rep.plus_indices[v]])
    stream.write(f"# index_sum={rep.index_sum} chi={clique_census(G).euler}\n")


def cmd_indices(args) -> int:
    G = _load_graph(args)
    if not args.morse:
        raise UsageError("--morse is required")
    f = _load_morse(args, G)
    out = _out(args)
    try:
        write_index_csv(G, f, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_curvature(args) -> int:
    G = _load_graph(args)
    rep = gauss_bonnet_report(G, verify=args.verify)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["vertex", "curvature_num", "curvature_den"])
    for v, k in enumerate(rep.curvatures):
        w.writerow([v + 1, k.numerator, k.denominator])
    total = rep.total
    line = f"# total={total.numerator}/{total.denominator}"
    if total.denominator == 1:
        line += f" chi={total.numerator}"
    print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load_graph(args)
    seed = _need_seed(args, "for verify")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    import random

    chi = clique_census(G).euler
    transfer = verify_transfer(G)
    master = random.Random(seed)
    passed = 0
    failed = []
    for t in range(args.trials):
        fs = master.getrandbits(63)
        f = random_morse(G, fs)
        rep = index_report(G, f)
        ok = rep.index_sum == chi and verify_intermediate(G, f)
        if ok:
            passed += 1
        else:
            failed.append((t, fs, f, rep.index_sum))
    print(f"chi={chi}")
    print(f"transfer={'pass' if transfer else 'FAIL'}")
    print(f"trials={args.trials} passed={passed} failed={len(failed)}")
    if failed or not transfer:
        outdir = Path(args.out or ".")
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "witness_graph.txt").write_text(emit_graph(G, [f"verify failure, seed {seed}"]))
        for t, fs, f, s in failed:
            (outdir / f"witness_morse_{t}.txt").write_text(
                emit_morse(f.rank, [f"trial {t} morse seed {fs} index_sum {s} chi {chi}"])
            )
        print(f"witness written to {outdir}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_mc(args) -> int:
    seed = _need_seed(args, "for mc")
    if args.n is None or args.p is None:
        raise UsageError("--n and --p are required")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    res = mc_critical(args.n, args.p, args.trials, seed)
    frac = res.critical_fraction
    print(f"n={args.n} p={args.p} trials={res.trials} seed={seed}")
    print(f"critical_fraction={float(frac):.3f} ({frac.numerator}/{frac.denominator})")
    print(f"half_width_95={res.half_width:.3f}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["trial", "graph_seed", "morse_seed", "critical", "vertices"])
            for t, ((gs, fs), x) in enumerate(zip(res.trial_seeds, res.per_trial)):
                w.writerow([t, gs, fs, int(x * args.n), args.n])
    return EXIT_OK


def cmd_bench(args) -> int:
    seed = _need_seed(args, "for bench")
    if not args.family:
        raise UsageError("--family is required")
    methods = args.method.split(",") if args.method else list(METHODS)
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}")
    trials = args.trials or 1
    specs = []
    for params in parse_params(args.params):
        for t in range(trials):
            inst_seed = seed + t if args.family in ("erdos_renyi", "tree") else None
            p = args.p if args.family == "erdos_renyi" else None
            specs.append(FamilySpec(args.family, params, p, inst_seed))
    rows = bench(specs, methods, budget=args.budget, morse_seed=seed)
    out = _out(args)
    try:
        w = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    bad = disagreements(rows)
    if bad:
        print(f"methods disagree on {bad}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_m(args) -> int:
    G = _load_graph(args)
    if G.order <= args.max_order:
        r = m_exact(G, args.max_order)
        how = "exhaustive"
    else:
        r = m_search(G, args.restarts, _need_seed(args, "for search on large graphs"), args.moves)
        how = "search"
    print(f"m lower={r.lower} upper={r.upper} exact={'true' if r.exact else 'false'} ({how})")
    print(emit_morse(r.witness.rank, ["witness order"]), end="")
    return EXIT_OK


def cmd_sphere(args) -> int:
    G = _load_graph(args)
    seed = args.seed if args.seed is not None else 0
    v = is_sphere_type(G, args.max_order, args.restarts, args.moves, seed)
    print(v.render())
    return EXIT_OK


def cmd_gen(args) -> int:
    if not args.family:
        raise UsageError("--family is required")
    plist = parse_params(args.params)
    if len(plist) != 1:
        raise UsageError("gen takes a single parameter set")
    spec = FamilySpec(args.family, plist[0], args.p, args.seed)
    G = generate(spec)
    text = emit_graph(G, [spec.describe()])
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphmorse",
        description="Discrete Morse theory and Euler characteristics of finite simple graphs.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *flags):
        p = sub.add_parser(name, help=help_, epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(fn=fn)
        for flag in flags:
            flag(p)
        return p

    graph = lambda p: p.add_argument("--graph", metavar="FILE")
    morse = lambda p: p.add_argument("--morse", metavar="FILE")
    seed = lambda p: p.add_argument("--seed", type=int)
    out = lambda p: p.add_argument("--out", metavar="FILE")
    trials = lambda p: p.add_argument("--trials", type=int, default=1)

    def search(p):
        p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
        p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
        p.add_argument("--moves", type=int, default=DEFAULT_MOVES)

    p = add("chi", cmd_chi, "Euler characteristic by one method (or all, with --verify)", graph, morse, seed)
    p.add_argument("--method", choices=METHODS, default="cliques")
    p.add_argument("--verify", action="store_true", help="run all four methods and require agreement")
    p.add_argument("--budget", type=int, help="maximum clique extensions for the census")
    p.add_argument("--time", action="store_true", help="print wall time to stderr")

    add("indices", cmd_indices, "per-vertex index report as CSV", graph, morse, out)
    p = add("curvature", cmd_curvature, "per-vertex curvature as CSV", graph)
    p.add_argument("--verify", action="store_true", help="check the total against the clique census")
    add("verify", cmd_verify, "Poincaré–Hopf and counting identities over random Morse functions",
        graph, trials, seed, out)
    p = add("mc", cmd_mc, "Monte-Carlo fraction of critical vertices", trials, seed, out)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p = add("bench", cmd_bench, "time chi methods over a graph family, CSV output", trials, seed, out)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--params", help="e.g. 8-16 or 4x4,5x5")
    p.add_argument("--p", type=float)
    p.add_argument("--method", help="comma-separated subset of " + ",".join(METHODS))
    p.add_argument("--budget", type=int, help="maximum clique extensions for the census")
    add("m", cmd_m, "minimal number of critical points", graph, seed, search)
    add("sphere", cmd_sphere, "recursive sphere-type verdict", graph, seed, search)
    p = add("gen", cmd_gen, "write a generated graph in the graph file format", seed, out)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--params")
    p.add_argument("--p", type=float)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"graphmorse {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"graphmorse {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MorseError as exc:
        msg = str(exc)
        if exc.violations:
            pairs = " ".join(f"({u + 1},{v + 1})" for u, v in exc.violations)
            msg = f"Morse values not injective on unit balls; equal values on vertex pairs {pairs}"
        print(f"graphmorse {args.command}: invalid input: {msg}", file=sys.stderr)
        return EXIT_VALIDATION
    except FamilyError as exc:
        print(f"graphmorse {args.command}: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ChiDisagreement, SelfCheckError, GaussBonnetMismatch) as exc:
        print(f"graphmorse {args.command}: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except CensusBudgetExceeded as exc:
        print(f"graphmorse {args.command}: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
