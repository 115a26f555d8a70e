"""Command-line frontend: analysis, generation, verification and benchmarks."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .bitseq import BitSeq, BitSeqParseError, from_bits, rotl
from .complexity import nlc_finite, nlc_finite_fast, nlc_periodic, shift_profile
from .gen_debruijn import count_B0_tilde, debruijn_generation
from .gen_large import large_generation
from .gen_small import Generation, ceil_log2, small_generation
from .oracle import (
    build_catalog,
    scan_open_problem,
    verify_generation,
    verify_theorem1,
    verify_theorem2,
)
from .structure import add_of_text, decompose

SCHEMA = 1


class UsageError(Exception):
    pass


def _default_workers() -> int:
    raw = os.environ.get("NLCSEQ_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _bits(text: str) -> BitSeq:
    try:
        return from_bits(text)
    except BitSeqParseError as exc:
        raise UsageError(str(exc)) from None


def _oracle_generation(n: int, omega: int, workers: int) -> Generation:
    cat = build_catalog(n, workers)
    classes = cat.classes.get(omega, [])
    return Generation(n, omega, "oracle", [k.witness for k in classes], classes, cat.ops)


def _generate(n: int, omega: int, method: str, workers: int) -> Generation:
    if method == "auto":
        method = "small" if omega <= n // 2 else "large"
    if method == "small":
        return small_generation(n, omega)
    if method == "large":
        return large_generation(n, omega)
    return _oracle_generation(n, omega, workers)


def report_dict(gen: Generation, elapsed: float | None) -> dict:
    return {
        "schema": SCHEMA,
        "n": gen.n,
        "omega": gen.omega,
        "method": gen.method,
        "class_count": len(gen.classes),
        "sequence_count": gen.sequence_count,
        "classes": [
            {
                "canonical": str(k.canonical),
                "witness": str(k.witness),
                "spacing": k.form.d if k.form else None,
                "add": k.add,
            }
            for k in gen.classes
        ],
        "elapsed": elapsed,
        "operation_counter": gen.ops,
    }


def _emit_generation(gen: Generation, args, elapsed: float) -> None:
    fmt = args.format
    if fmt == "json":
        shown = elapsed if args.timing else None
        print(json.dumps(report_dict(gen, shown), indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["canonical", "omega", "add", "spacing"])
        for k in gen.classes:
            w.writerow([k.canonical, gen.omega, "" if k.add is None else k.add, k.form.d if k.form else ""])
        sys.stdout.write(buf.getvalue())
    else:
        if args.expand:
            rows = sorted({rotl(k.canonical.value, gen.n, j) for k in gen.classes for j in range(gen.n)})
            lines = [format(v, f"0{gen.n}b") for v in rows]
        else:
            lines = sorted(str(w) for w in gen.witnesses)
        for line in lines:
            print(line)
        if args.timing:
            print(f"elapsed={elapsed:.3f}s ops={gen.ops}", file=sys.stderr)


def cmd_nlc(args) -> int:
    s = _bits(args.bits)
    if args.periodic:
        print(nlc_periodic(s, fast=args.fast))
    else:
        print(nlc_finite_fast(s) if args.fast else nlc_finite(s))
    return 0


def cmd_profile(args) -> int:
    s = _bits(args.bits)
    prof = shift_profile(s, "right" if args.right else "left")
    if args.format == "json":
        members = [
            [{"c": f.c, "d": f.d, "add": t} for f, t in m] if m else [] for m in prof.memberships
        ]
        print(json.dumps({"schema": SCHEMA, "direction": prof.direction, "values": list(prof.values),
                          "memberships": members}, indent=2))
    else:
        print(" ".join(map(str, prof.values)))
    return 0


def cmd_decompose(args) -> int:
    s = _bits(args.bits)
    text = str(s)
    forms = decompose(s)
    if args.format == "json":
        rows = [{"c": f.c, "d": f.d, "q": f.q, "r": f.r, "add": add_of_text(text, f.d)} for f in forms]
        print(json.dumps({"schema": SCHEMA, "sequence": text, "forms": rows}, indent=2))
    else:
        for f in forms:
            print(f"c={f.c} d={f.d} q={f.q} r={f.r} add={add_of_text(text, f.d)}")
    return 0


def cmd_gen(args) -> int:
    n, omega = args.n, args.omega
    if not 1 <= n <= 64:
        raise UsageError(f"n must lie in 1..64, got {n}")
    if args.method == "large" and omega < (n + 1) // 2:
        raise UsageError(f"method large needs omega >= {(n + 1) // 2}")
    if args.method == "small" and omega > n // 2:
        raise UsageError(f"method small needs omega <= {n // 2}")
    if not 1 <= omega <= n - 1:
        raise UsageError(f"omega must lie in 1..{n - 1}, got {omega}")
    t0 = time.perf_counter()
    gen = _generate(n, omega, args.method, args.workers)
    _emit_generation(gen, args, time.perf_counter() - t0)
    return 0


def cmd_debruijn(args) -> int:
    if args.m < 3 or args.m > 5:
        raise UsageError(f"m must lie in 3..5, got {args.m}")
    t0 = time.perf_counter()
    gen = debruijn_generation(args.m, args.workers)
    if args.count_only:
        count = count_B0_tilde(args.m, args.workers)
        print(f"classes={len(gen.classes)} prefilter={count.enumerated}")
        return 0
    args.expand = False
    _emit_generation(gen, args, time.perf_counter() - t0)
    return 0


def cmd_verify(args) -> int:
    n = args.n
    ok = True
    if 4 <= n <= 14:
        rep = verify_generation(n)
        for k in rep.checks:
            status = "pass" if k.passed else "FAIL"
            print(f"generation n={n} omega={k.omega} method={k.method} classes={k.generated} oracle={k.expected} {status}")
        ok &= rep.passed
    if n <= 16:
        for c in range(ceil_log2(n), min(n // 2 + 1, n - 1) + 1):
            good = verify_theorem1(n, c)
            print(f"theorem1 n={n} c={c} {'pass' if good else 'FAIL'}")
            ok &= good
        if n >= 4:
            r2 = verify_theorem2(n)
            print(f"theorem2 n={n} checked={r2.checked} violations={len(r2.violations)} {'pass' if r2.passed else 'FAIL'}")
            ok &= r2.passed
    else:
        raise UsageError(f"verify supports n <= 16, got {n}")
    return 0 if ok else 1


def cmd_scan(args) -> int:
    scan = scan_open_problem(args.max_n, args.min_n)
    for f in scan.findings:
        print(f"n={f.n} c={f.c} d={f.d} add={f.add} seq={f.seq} max={f.max_nlc} n-d={f.n - f.d}")
    print(f"scanned={scan.scanned} findings={len(scan.findings)} bound_failures={len(scan.bound_failures)}")
    return 0 if not scan.findings else 1


def cmd_bench(args) -> int:
    n, omega = args.n, args.omega
    if not 1 <= omega <= n - 1:
        raise UsageError(f"omega must lie in 1..{n - 1}, got {omega}")
    t0 = time.perf_counter()
    gen = _generate(n, omega, "auto", args.workers)
    t1 = time.perf_counter()
    cat = build_catalog(n, args.workers)
    t2 = time.perf_counter()
    oracle_classes = len(cat.classes.get(omega, []))
    ratio = cat.ops / gen.ops if gen.ops else float("inf")
    print(f"generator method={gen.method} classes={len(gen.classes)} ops={gen.ops} seconds={t1 - t0:.3f}")
    print(f"oracle classes={oracle_classes} ops={cat.ops} seconds={t2 - t1:.3f}")
    print(f"ratio={ratio:.1f}")
    return 0 if oracle_classes == len(gen.classes) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nlcseq", description="Nonlinear complexity of periodic binary sequences")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("nlc", help="complexity of a sequence")
    q.add_argument("bits")
    q.add_argument("--periodic", action="store_true", help="treat the input as one period")
    q.add_argument("--fast", action="store_true", help="use the suffix-automaton engine")
    q.set_defaults(func=cmd_nlc)

    q = sub.add_parser("profile", help="complexity of every rotation")
    q.add_argument("bits")
    side = q.add_mutually_exclusive_group()
    side.add_argument("--left", action="store_true")
    side.add_argument("--right", action="store_true")
    q.add_argument("--format", choices=["lines", "json"], default="lines")
    q.set_defaults(func=cmd_profile)

    q = sub.add_parser("decompose", help="list every B(n, c, d) containing the sequence")
    q.add_argument("bits")
    q.add_argument("--format", choices=["lines", "json"], default="lines")
    q.set_defaults(func=cmd_decompose)

    def gen_opts(q):
        q.add_argument("--format", choices=["lines", "json", "csv"], default="lines")
        q.add_argument("--timing", action="store_true", help="report wall time (json elapsed, stderr otherwise)")
        q.add_argument("--workers", type=int, default=_default_workers())

    q = sub.add_parser("gen", help="generate all classes with a given complexity")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--omega", type=int, required=True)
    q.add_argument("--method", choices=["auto", "small", "large", "oracle"], default="auto")
    q.add_argument("--expand", action="store_true", help="print every rotation instead of the witnesses")
    gen_opts(q)
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("debruijn", help="all de Bruijn sequences of order m")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--count-only", action="store_true")
    gen_opts(q)
    q.set_defaults(func=cmd_debruijn)

    q = sub.add_parser("verify", help="cross-check generators and theorems against the oracle")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("scan-open-problem", help="search representatives for max rotated complexity != n - d")
    q.add_argument("--max-n", type=int, required=True)
    q.add_argument("--min-n", type=int, default=4)
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("bench", help="operation counts of generator vs exhaustive oracle")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--omega", type=int, required=True)
    q.add_argument("--workers", type=int, default=_default_workers())
    q.set_defaults(func=cmd_bench)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"nlcseq: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
