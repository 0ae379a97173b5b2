"""Command-line front end: count, gauss, bench.

Equation files are line oriented:

    field 5        # or "field 3^2"
    vars 2
    term 1 2,0     # coefficient, then one exponent per variable
    term g^3 0,2   # coefficients may be given as powers of the generator

Exit codes: 0 success, 1 malformed input, 2 work limit exceeded,
3 residual or verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .counting import (
    DEFAULT_LIMIT,
    ConsistencyError,
    CountReport,
    LimitExceededError,
    MonomialForm,
    ResidualToleranceError,
    n_bar_bruteforce,
    n_bar_formula,
    n_total_bruteforce,
)
from .characters import gauss_sum_table
from .field import FieldCtx, build_field


class EquationFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_field_spec(spec: str) -> FieldCtx:
    parts = spec.split("^")
    try:
        if len(parts) == 1:
            p, e = int(parts[0]), 1
        elif len(parts) == 2:
            p, e = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"bad field spec {spec!r}, expected 'p' or 'p^e'") from None
    return build_field(p, e)


def _parse_coeff(ctx: FieldCtx, tok: str, lineno: int, col: int) -> int:
    if tok.startswith("g^"):
        try:
            k = int(tok[2:])
        except ValueError:
            raise EquationFormatError(f"bad generator power {tok!r}", lineno, col)
        return ctx.antilog[k % ctx.n]
    try:
        c = int(tok)
    except ValueError:
        raise EquationFormatError(f"bad coefficient {tok!r}", lineno, col)
    code = ctx.embed(c)
    if code == 0:
        raise EquationFormatError("zero coefficient", lineno, col)
    return code


def parse_equation_file(text: str) -> MonomialForm:
    ctx = None
    nvars = None
    columns: list[tuple[int, list[int]]] = []  # (coeff, exps per variable)
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        toks = line.split()
        key = toks[0]
        col = rawline.index(key) + 1
        if key == "field":
            if len(toks) != 2:
                raise EquationFormatError("expected: field p[^e]", lineno, col)
            if ctx is not None:
                raise EquationFormatError("duplicate field line", lineno, col)
            try:
                ctx = parse_field_spec(toks[1])
            except ValueError as exc:
                raise EquationFormatError(str(exc), lineno, col) from None
        elif key == "vars":
            if len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
                raise EquationFormatError("expected: vars <positive int>", lineno, col)
            if nvars is not None:
                raise EquationFormatError("duplicate vars line", lineno, col)
            nvars = int(toks[1])
        elif key == "term":
            if ctx is None or nvars is None:
                raise EquationFormatError(
                    "term before field/vars lines", lineno, col
                )
            if len(toks) != 3:
                raise EquationFormatError("expected: term <coeff> <e1,...,es>", lineno, col)
            coeff = _parse_coeff(ctx, toks[1], lineno, rawline.index(toks[1], col) + 1)
            exp_col = rawline.rindex(toks[2]) + 1
            parts = toks[2].split(",")
            if len(parts) != nvars:
                raise EquationFormatError(
                    f"expected {nvars} exponents, got {len(parts)}", lineno, exp_col
                )
            try:
                exps = [int(x) for x in parts]
            except ValueError:
                raise EquationFormatError("bad exponent list", lineno, exp_col)
            if any(x < 0 for x in exps):
                raise EquationFormatError("negative exponent", lineno, exp_col)
            columns.append((coeff, exps))
        else:
            raise EquationFormatError(f"unknown key {key!r}", lineno, col)
    if ctx is None:
        raise EquationFormatError("missing field line", 1)
    if nvars is None:
        raise EquationFormatError("missing vars line", 1)
    if not columns:
        raise EquationFormatError("no terms", 1)
    m = tuple(
        tuple(exps[j] for _, exps in columns) for j in range(nvars)
    )
    try:
        return MonomialForm(field=ctx, m=m, a=tuple(c for c, _ in columns))
    except ValueError as exc:
        raise EquationFormatError(str(exc), 1) from None


def format_equation(form: MonomialForm) -> str:
    ctx = form.field
    spec = str(ctx.p) if ctx.e == 1 else f"{ctx.p}^{ctx.e}"
    lines = [f"field {spec}", f"vars {form.s}"]
    for i in range(form.r):
        exps = ",".join(str(form.m[j][i]) for j in range(form.s))
        lines.append(f"term g^{ctx.dlog(form.a[i])} {exps}")
    return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def format_report(
    form: MonomialForm, report: CountReport, explain: bool = False
) -> str:
    ctx = form.field
    spec = str(ctx.p) if ctx.e == 1 else f"{ctx.p}^{ctx.e}"
    lines = [
        f"field\t{spec}",
        f"vars\t{form.s}",
        f"terms\t{form.r}",
        f"n_bar\t{report.n_bar}",
        f"n_total\t{report.n_total}",
        f"char_sum_re\t{_fmt(report.char_sum.real)}",
        f"char_sum_im\t{_fmt(report.char_sum.imag)}",
        f"residual\t{_fmt(report.residual)}",
    ]
    if explain:
        lines += [
            f"d\t{report.d}",
            f"dual_size\t{report.dual_size}",
            f"dual_star_size\t{report.dual_star_size}",
            "invariant_factors\t"
            + ",".join(str(x) for x in report.invariant_factors),
        ]
    for name, dt in report.timings.items():
        lines.append(f"time_{name}\t{_fmt(dt)}")
    return "\n".join(lines) + "\n"


def cmd_count(args) -> int:
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    form = parse_equation_file(text)
    limit = float("inf") if args.force else args.limit
    report = n_bar_formula(form, limit=limit)
    if args.verify:
        nb = n_bar_bruteforce(form, limit=limit)
        nt = n_total_bruteforce(form, limit=limit)
        if nb != report.n_bar or nt != report.n_total:
            print(
                f"verification FAILED: formula n_bar={report.n_bar} "
                f"n_total={report.n_total}, brute force n_bar={nb} n_total={nt}",
                file=sys.stderr,
            )
            return 3
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        sys.stdout.write(format_report(form, report, explain=args.explain))
    return 0


def cmd_gauss(args) -> int:
    ctx = parse_field_spec(args.field)
    table = gauss_sum_table(ctx)
    for t in range(ctx.n):
        g = table[t]
        print(f"{t}\t{_fmt(g.real)}\t{_fmt(g.imag)}\t{_fmt(abs(g) ** 2)}")
    return 0


def _random_form(spec: str, seed: int) -> MonomialForm:
    try:
        field_part, s_part, r_part = spec.split(":")
        s, r = int(s_part), int(r_part)
    except ValueError:
        raise ValueError(f"bad --random spec {spec!r}, expected 'p[^e]:s:r'") from None
    ctx = parse_field_spec(field_part)
    rng = random.Random(seed)
    while True:
        m = [[rng.randint(0, max(ctx.n, 2)) for _ in range(r)] for _ in range(s)]
        if all(any(m[j][i] for j in range(s)) for i in range(r)):
            break
    a = tuple(ctx.antilog[rng.randrange(ctx.n)] for _ in range(r))
    return MonomialForm(field=ctx, m=m, a=a)


def cmd_bench(args) -> int:
    if args.random:
        form = _random_form(args.random, args.seed)
        instance = f"random:{args.random}:seed={args.seed}"
    else:
        if args.file is None:
            print("bench needs an equation file or --random", file=sys.stderr)
            return 1
        form = parse_equation_file(open(args.file).read())
        instance = args.file
    limit = float("inf") if args.force else args.limit

    t0 = time.perf_counter()
    report = n_bar_formula(form, limit=limit)
    t1 = time.perf_counter()
    nb_brute = n_bar_bruteforce(form, limit=limit)
    t2 = time.perf_counter()

    t_formula, t_brute = t1 - t0, t2 - t1
    print(f"instance\t{instance}")
    print(f"n_bar_formula\t{report.n_bar}")
    print(f"n_bar_bruteforce\t{nb_brute}")
    print(f"agree\t{'yes' if report.n_bar == nb_brute else 'no'}")
    print(f"time_formula\t{_fmt(t_formula)}")
    print(f"time_bruteforce\t{_fmt(t_brute)}")
    if t_formula > 0:
        print(f"speedup\t{_fmt(t_brute / t_formula)}")
    if report.n_bar != nb_brute:
        print("benchmark counts disagree", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocount",
        description="Count solutions of monomial equations over small finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("count", help="count solutions of an equation file")
    pc.add_argument("file", help="equation file, or - for stdin")
    pc.add_argument("--verify", action="store_true", help="cross-check with brute force")
    pc.add_argument("--explain", action="store_true", help="print group sizes")
    pc.add_argument("--json", action="store_true", help="machine-readable output")
    pc.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    pc.add_argument("--force", action="store_true", help="ignore the work limit")
    pc.set_defaults(func=cmd_count)

    pg = sub.add_parser("gauss", help="tabulate Gauss sums for a field")
    pg.add_argument("field", help="field spec, 'p' or 'p^e'")
    pg.set_defaults(func=cmd_gauss)

    pb = sub.add_parser("bench", help="time the formula against brute force")
    pb.add_argument("file", nargs="?", help="equation file")
    pb.add_argument("--random", help="generate an instance, spec 'p[^e]:s:r'")
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--limit", type=int, default=10 ** 8)
    pb.add_argument("--force", action="store_true")
    pb.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EquationFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResidualToleranceError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
