"""Command-line front end: figure data, verification suites, single evaluations."""
from __future__ import annotations

import argparse
import csv
import io
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction

from . import arithsums, cfrac, estermann, moments, reciprocity, verify
from .characters import primes_upto
from .errors import TwistedMomentsError

EXIT_OK, EXIT_IO, EXIT_FAIL = 0, 1, 2


def fmt(v: float) -> str:
    return f"{float(v):.17g}"


def fmt_x(a: int, q: int) -> str:
    with localcontext() as ctx:
        ctx.prec = 20
        return str(Decimal(a) / Decimal(q))


# ------------------------------------------------------------------ figures


def _figure1_rows(q: int) -> list[list[str]]:
    grid = moments.moment_M_grid(q)
    return [[str(a), str(q), fmt_x(a, q), fmt(grid[a])] for a in primes_upto(q - 1)]


def _figure2_rows(task) -> list[list[str]]:
    q, n_list, a_values = task
    rows = []
    for n in n_list:
        for a in a_values:
            rows.append([str(a), str(q), fmt_x(a, q), str(n), fmt(reciprocity.psi_tilde(a, q, 1, n))])
    return rows


def _near_tasks(qmax: int, target: Fraction, window: float, n_list) -> list:
    """Primes qmax < q <= 4 qmax with prime a and |a/q - target| <= window."""
    tasks = []
    small = primes_upto(4 * qmax)
    for q in small:
        if q <= qmax:
            continue
        lo = max(2, int((float(target) - window) * q))
        hi = min(q - 1, int((float(target) + window) * q) + 1)
        a_vals = [a for a in range(lo, hi + 1) if a in _PRIME_SET(4 * qmax) and abs(a / q - float(target)) <= window]
        if a_vals:
            tasks.append((q, tuple(n_list), tuple(a_vals)))
    return tasks


_prime_sets: dict[int, frozenset] = {}


def _PRIME_SET(n: int) -> frozenset:
    if n not in _prime_sets:
        _prime_sets[n] = frozenset(primes_upto(n))
    return _prime_sets[n]


def _run_ordered(fn, tasks, threads: int):
    if threads <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        # map preserves task order, so the merged output is deterministic
        return list(pool.map(fn, tasks, chunksize=1))


def cmd_figure(args) -> int:
    which = args.which if args.which is not None else args.which_pos
    if which not in (1, 2):
        print("figure: choose 1 or 2", file=sys.stderr)
        return EXIT_FAIL
    if args.qmax < 3:
        print("figure: --qmax must be at least 3", file=sys.stderr)
        return EXIT_FAIL
    qs = [q for q in primes_upto(args.qmax) if q >= 3]
    if which == 1:
        header = ["a", "q", "x", "M"]
        blocks = _run_ordered(_figure1_rows, qs, args.threads)
    else:
        try:
            n_list = [int(v) for v in args.N.split(",") if v.strip()]
        except ValueError:
            print(f"figure: bad --N list {args.N!r}", file=sys.stderr)
            return EXIT_FAIL
        if not n_list or min(n_list) < 0:
            print("figure: --N needs non-negative integers", file=sys.stderr)
            return EXIT_FAIL
        header = ["a", "q", "x", "N", "psi_tilde"]
        tasks = [(q, tuple(n_list), tuple(primes_upto(q - 1))) for q in qs]
        if args.near:
            try:
                target = Fraction(args.near)
            except (ValueError, ZeroDivisionError):
                print(f"figure: bad --near {args.near!r}", file=sys.stderr)
                return EXIT_FAIL
            if not 0 < target < 1 or args.window <= 0:
                print("figure: --near must lie in (0,1) and --window be positive", file=sys.stderr)
                return EXIT_FAIL
            tasks += _near_tasks(args.qmax, target, args.window, n_list)
        blocks = _run_ordered(_figure2_rows, tasks, args.threads)
        # stack the datasets by N, keeping q then a order inside each
        blocks = [[r for blk in blocks for r in blk if r[3] == str(n)] for n in n_list]
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for blk in blocks:
        writer.writerows(blk)
    text = buf.getvalue()
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"figure: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# ------------------------------------------------------------------ verify


def _parse_tols(items) -> dict[str, float]:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise ValueError(f"--tol expects KEY=VALUE, got {item!r}")
        out[key.strip()] = float(val)
    return out


def _ypo_mapper(threads: int):
    if threads <= 1:
        return map

    def mapper(fn, items):
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items, chunksize=1))

    return mapper


def cmd_verify(args) -> int:
    try:
        tols = _parse_tols(args.tol)
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_FAIL
    suite = args.suite_pos or args.suite
    if suite != "all" and suite not in verify.SUITES:
        print(f"verify: unknown suite {suite!r}; choose from {', '.join(list(verify.SUITES) + ['all'])}", file=sys.stderr)
        return EXIT_FAIL
    checks = verify.run_suite(suite, args.quick, tols, args.seed, mapper=_ypo_mapper(args.threads))
    for c in checks:
        print(c.line())
    failed = [c for c in checks if not c.passed]
    if failed:
        worst = max(failed, key=lambda c: c.residual / c.tol if c.tol else float("inf"))
        print(f"worst offender: {worst.name} residual {worst.residual:.3e} at {worst.worst}")
        return EXIT_FAIL
    print(f"all {len(checks)} checks passed")
    return EXIT_OK


# ------------------------------------------------------------------ eval


def _c(v: str) -> complex:
    return complex(v.replace(" ", ""))


def _sign(v: str) -> int:
    if v in ("+", "1", "+1", "plus"):
        return 1
    if v in ("-", "-1", "minus"):
        return -1
    raise ValueError(f"bad sign {v!r}")


def _out_complex(z: complex) -> str:
    z = complex(z)
    return f"{fmt(z.real)},{fmt(z.imag)}"


EVAL_USAGE = {
    "M": "a q",
    "Mstar": "s z a q",
    "D": "s alpha h k",
    "eta": "a q",
    "psi": "N a q sign",
    "f": "sign a q",
    "dedekind": "h k",
    "c0": "h k",
    "cf": "a q",
}


def _evaluate(obj: str, p: list[str]) -> str:
    want = len(EVAL_USAGE[obj].split())
    if len(p) != want:
        raise ValueError(f"eval {obj} expects {want} parameters: {EVAL_USAGE[obj]}")
    if obj == "M":
        return fmt(moments.moment_M(int(p[0]), int(p[1])))
    if obj == "Mstar":
        return _out_complex(moments.moment_Mstar(_c(p[0]), _c(p[1]), int(p[2]), int(p[3])))
    if obj == "D":
        return _out_complex(estermann.estermann_D(_c(p[0]), _c(p[1]), int(p[2]), int(p[3])))
    if obj == "eta":
        return _out_complex(estermann.eta_value(int(p[0]), int(p[1])))
    if obj == "psi":
        return fmt(estermann.psi_N(int(p[0]), int(p[1]), int(p[2]), _sign(p[3])))
    if obj == "f":
        return fmt(cfrac.f_pm(_sign(p[0]), int(p[1]), int(p[2])))
    if obj == "dedekind":
        return str(arithsums.dedekind_sum(int(p[0]), int(p[1])))
    if obj == "c0":
        return fmt(arithsums.cotangent_sum(int(p[0]), int(p[1])))
    return str(cfrac.expand(int(p[0]), int(p[1])))


def cmd_eval(args) -> int:
    try:
        print(_evaluate(args.object, args.params))
    except (TwistedMomentsError, ValueError, ArithmeticError, ZeroDivisionError) as exc:
        print(f"eval: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twisted-moments", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="write figure data as CSV")
    fig.add_argument("which_pos", nargs="?", type=int, metavar="WHICH")
    fig.add_argument("--which", type=int, help="1: M(a,q); 2: psi_tilde_N(a/q)")
    fig.add_argument("--qmax", type=int, default=229)
    fig.add_argument("--N", default="0,1,2,3", help="comma-separated truncation orders (figure 2)")
    fig.add_argument("--out", default="-", help="output path, '-' for standard output")
    fig.add_argument("--threads", type=int, default=1)
    fig.add_argument("--near", help="extra sampling around the rational p/r (figure 2)")
    fig.add_argument("--window", type=float, default=0.01, help="half-width of the --near window")
    fig.set_defaults(func=cmd_figure)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite_pos", nargs="?", metavar="SUITE")
    ver.add_argument("--suite", default="all")
    ver.add_argument("--tol", action="append", metavar="KEY=VALUE", help="override a check tolerance")
    ver.add_argument("--quick", action="store_true", help="reduced grids")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--threads", type=int, default=1)
    ver.set_defaults(func=cmd_verify)

    ev = sub.add_parser("eval", help="evaluate one object and print CSV")
    ev.add_argument("object", choices=sorted(EVAL_USAGE))
    ev.add_argument("params", nargs=argparse.REMAINDER)
    ev.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_FAIL
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
