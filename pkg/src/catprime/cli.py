"""``catprime`` command-line interface.

Exit codes: 0 on success or MEMBER, 1 on NON_MEMBER or an invalid network,
2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import gc
import hashlib
import sys
import time

from .exceptions import InputError
from .generators import perturbed_cograph, random_cograph
from .graph import format_graph, read_graph
from .network import evaluate, format_network, read_network, to_dot, validate
from .oracle import run_census
from .recognition import explain_level1, recognize_cograph, recognize_polar_cat, recognize_pseudo_cograph

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2

BENCH_LIMIT = 1_000_000


def _ordering_text(o):
    return f"{' '.join(map(str, o.sequence))} ({o.mode})"


def _witness_lines(w):
    """Canonical text of a pseudo-cograph or polar-cat witness."""
    pseudo = getattr(w, "pseudo", w)
    if pseudo.trivially_small:
        return ["trivially_small"]
    lines = [
        f"v: {pseudo.v}",
        f"V1: {' '.join(map(str, pseudo.v1))}",
        f"V2: {' '.join(map(str, pseudo.v2))}",
        f"mode: {pseudo.mode}",
    ]
    if pseudo is not w:
        lines += [f"y: {_ordering_text(w.y)}", f"z: {_ordering_text(w.z)}"]
    return lines


def _write(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_recognize(args):
    g = read_graph(args.graph)
    cls = args.cls
    if cls == "cograph":
        out = recognize_cograph(g)
    elif cls == "pseudo":
        out = recognize_pseudo_cograph(g)
    elif cls == "polar-cat":
        out = recognize_polar_cat(g)
    else:
        out = explain_level1(g) if g.n else None
        if out is None:
            raise InputError("cat-prime recognition needs at least one vertex")
    print(out.verdict)
    if not out.member:
        if out.reason:
            print(f"reason: {out.reason}")
        return EXIT_NO
    if args.witness and out.certificate is not None:
        if cls == "cograph":
            net, t = out.network
            sys.stdout.write(format_network(net, t, "cotree"))
        elif cls == "cat-prime":
            for module, w in out.certificate:
                print(f"module: {' '.join(map(str, module))}")
                for line in _witness_lines(w):
                    print(f"  {line}")
        else:
            for line in _witness_lines(out.certificate):
                print(line)
    return EXIT_OK


def cmd_explain(args):
    g = read_graph(args.graph)
    out = explain_level1(g, least_resolved=args.least_resolved)
    if not out.member:
        print("NON_MEMBER", file=sys.stderr)
        print(f"module: {' '.join(map(str, out.module))}", file=sys.stderr)
        print(f"reason: {out.reason}", file=sys.stderr)
        return EXIT_NO
    net, t = out.network
    name = args.name
    text = to_dot(net, t, name) if args.format == "dot" else format_network(net, t, name)
    _write(text, args.out)
    if args.dot:
        _write(to_dot(net, t, name), args.dot)
    return EXIT_OK


def cmd_eval(args):
    _, net, t = read_network(args.network)
    rep = validate(net, t)
    if not rep.valid:
        for line in rep.lines():
            print(line, file=sys.stderr)
        return EXIT_NO
    _write(format_graph(evaluate(net, t)), args.out)
    return EXIT_OK


def cmd_validate(args):
    _, net, t = read_network(args.network)
    rep = validate(net, t)
    for line in rep.lines():
        print(line)
    return EXIT_OK if rep.valid else EXIT_NO


def cmd_census(args):
    if args.sample is None and args.n > 6:
        raise InputError("exhaustive census is limited to n <= 6; use --sample for n = 7")
    start = time.perf_counter()
    stats = run_census(args.n, sample=args.sample, seed=args.seed, workers=args.workers, checks=not args.no_checks)
    print(stats.summary())
    for line in stats.report_lines():
        print(line)
    for line in stats.failures:
        print(line)
    print(f"seconds={time.perf_counter() - start:.1f}")
    return EXIT_OK if not stats.mismatches and not stats.failures else EXIT_NO


def _fingerprint(g):
    h = hashlib.sha256()
    for u, v in g.edges():
        h.update(f"{u},{v};".encode())
    return h.hexdigest()[:12]


def _timed(fn, g, repeat):
    """Best wall time of ``repeat`` runs after one warm-up, with GC paused."""
    fn(g)
    best = float("inf")
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeat):
            start = time.perf_counter()
            fn(g)
            best = min(best, time.perf_counter() - start)
    finally:
        if enabled:
            gc.enable()
    return best


def bench_rows(sizes, seed, repeat=3, flips=5):
    """Benchmark rows ``(kind, n, m, fingerprint, t_recognize, t_explain)``."""
    rows = []
    makers = {
        "random_cograph": lambda n: random_cograph(n, seed=seed),
        "perturbed_cograph": lambda n: perturbed_cograph(n, flips=flips, seed=seed),
    }
    for kind, make in makers.items():
        for n in sizes:
            g = make(n)
            t_rec = _timed(recognize_pseudo_cograph, g, repeat)
            t_exp = _timed(explain_level1, g, repeat)
            rows.append((kind, n, g.m, _fingerprint(g), t_rec, t_exp))
    return rows


def cmd_bench(args):
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x]
    except ValueError:
        raise InputError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if not sizes or any(s < 2 or s > BENCH_LIMIT for s in sizes):
        raise InputError(f"bench sizes must lie in 2..{BENCH_LIMIT}")
    print("kind n m input recognize_s explain_s total_s ratio")
    prev = {}
    for kind, n, m, fp, t_rec, t_exp in bench_rows(sizes, args.seed, args.repeat, args.flips):
        total = t_rec + t_exp
        ratio = f"{total / prev[kind]:.1f}" if kind in prev and prev[kind] > 0 else "-"
        prev[kind] = total
        print(f"{kind} {n} {m} {fp} {t_rec:.4f} {t_exp:.4f} {total:.4f} {ratio}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="catprime",
        description="Recognize cographs, pseudo-cographs, polar-cats and cat-prime graphs; "
        "build and check labeled level-1 networks.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    r = sub.add_parser("recognize", help="decide class membership of a graph file")
    r.add_argument("graph")
    r.add_argument(
        "--class",
        dest="cls",
        choices=["cograph", "pseudo", "polar-cat", "cat-prime"],
        default="cat-prime",
    )
    r.add_argument("--witness", action="store_true", help="print the certificate")
    r.set_defaults(func=cmd_recognize)

    e = sub.add_parser("explain", help="build a level-1 network explaining a graph file")
    e.add_argument("graph")
    e.add_argument("--out", help="output file (default: stdout)")
    e.add_argument("--dot", help="also write Graphviz DOT to this file")
    e.add_argument("--format", choices=["text", "dot"], default="text")
    e.add_argument("--least-resolved", action="store_true")
    e.add_argument("--name", default="N", help="network name in the output header")
    e.set_defaults(func=cmd_explain)

    v = sub.add_parser("eval", help="write the graph explained by a network file")
    v.add_argument("network")
    v.add_argument("--out", help="output file (default: stdout)")
    v.set_defaults(func=cmd_eval)

    c = sub.add_parser("validate", help="check a network file and report its properties")
    c.add_argument("network")
    c.set_defaults(func=cmd_validate)

    s = sub.add_parser("census", help="compare recognizers with brute-force oracles")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sample", type=int, help="number of random graphs instead of all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, help="process count (default: $CATPRIME_WORKERS or 1)")
    s.add_argument("--no-checks", action="store_true", help="skip round-trip and structural checks")
    s.set_defaults(func=cmd_census)

    b = sub.add_parser("bench", help="time recognition on random and perturbed cographs")
    b.add_argument("--sizes", default="1000,10000,100000")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--flips", type=int, default=5)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
