"""Command-line front end.

Exit codes: 0 success, 2 an identity or cross-check failed, 64 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from qgoncarov import combinat, goncarov, render
from qgoncarov.errors import InconsistencyError, QGoncarovError
from qgoncarov.goncarov import Grid, seeded_grids
from qgoncarov.operators import DeltaOperator, hahn_sequence, monomial_sequence, operator_from_spec
from qgoncarov.parse import parse_list, parse_node_expr
from qgoncarov.qfield import ONE, Q, q_factorial, specialize
from qgoncarov.xpoly import evaluate

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_USAGE = 64

SUITES = ("biorth", "dt", "defg", "bino", "cascade", "zero", "fubini", "ct")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _q_at(s):
    if s is None:
        return None
    v = parse_node_expr(s)
    if not v.is_constant():
        raise UsageError(f"--q-at must be a rational number, got {s!r}")
    return v.as_fraction()


def _grid(s):
    return Grid(parse_list(s or ""))


def _emit(out, lines):
    for line in lines:
        out.write(line + "\n")


def run_fubini(n_max, fmt="csv", q_at=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    if n_max < 0:
        raise UsageError("--n-max must be >= 0")
    rows = combinat.fubini_table(n_max, q_at)
    lines = []
    if fmt == "csv":
        for n, f, f1, fat, _, _ in rows:
            cols = [str(n), str(f), str(f1)]
            if q_at is not None:
                cols.append(str(fat))
            lines.append(",".join(cols))
    elif fmt == "json":
        objs = []
        for n, f, f1, fat, agree, g in rows:
            obj = {"n": n, "f_q": str(f), "f_1": int(f1), "routes_agree": agree}
            if q_at is not None:
                obj["q_at"] = str(q_at)
                obj["f_at"] = str(fat)
            objs.append(obj)
        lines.append(json.dumps(objs, indent=2))
    elif fmt == "latex":
        lines.append(r"\begin{align*}")
        for n, f, *_ in rows:
            end = r",\\" if n < n_max else "."
            lines.append(f"f_{{{n},q}} &= {render.qpoly_latex(f)}{end}")
        lines.append(r"\end{align*}")
    else:
        for n, f, f1, fat, _, _ in rows:
            extra = f"  [q={q_at}: {fat}]" if q_at is not None else ""
            lines.append(f"f_{n},q = {f}  [q=1: {f1}]{extra}")
    _emit(out, lines)
    bad = [(n, f, g) for n, f, _, _, agree, g in rows if not agree]
    for n, f, g in bad:
        err.write(f"routes disagree at n={n}: recurrence {f} vs compositions {g}\n")
    return EXIT_FAIL if bad else EXIT_OK


def run_basis(op_spec, grid, n, fmt="text", symbolic=False, out=None):
    out = out or sys.stdout
    if n < 0:
        raise UsageError("--n must be >= 0")
    if symbolic:
        if fmt == "latex":
            lines = [r"\begin{align*}"]
            for k in range(n + 1):
                end = r",\\" if k < n else "."
                lines.append(rf"t_{{{k},q}}(x,\partial_q,\mathcal{{Z}}) &= {render.symbolic_latex(k)}{end}")
            lines.append(r"\end{align*}")
        else:
            lines = [f"t_{k} = {render.symbolic_latex(k)}" for k in range(n + 1)]
        _emit(out, lines)
        return EXIT_OK
    op = operator_from_spec(op_spec)
    grid.require(n)
    basis = goncarov.basis_for(op, grid)
    polys = [basis.t(k) for k in range(n + 1)]
    if fmt == "json":
        obj = {
            "op": op.name,
            "grid": [str(z) for z in grid.nodes],
            "basis": [{"n": k, "poly": str(t), "coeffs": t.to_json()} for k, t in enumerate(polys)],
        }
        lines = [json.dumps(obj, indent=2)]
    elif fmt == "latex":
        lines = [r"\begin{align*}"]
        for k, t in enumerate(polys):
            end = r",\\" if k < n else "."
            lines.append(f"t_{{{k},q}}(x) &= {render.xpoly_latex(t)}{end}")
        lines.append(r"\end{align*}")
    elif fmt == "csv":
        lines = [f'{k},"{t}"' for k, t in enumerate(polys)]
    else:
        lines = [f"t_{k}(x) = {t}" for k, t in enumerate(polys)]
    _emit(out, lines)
    return EXIT_OK


def _families():
    return [DeltaOperator(monomial_sequence()), DeltaOperator(hahn_sequence(ONE))]


def _report(check, n, params, ok, lhs=None, rhs=None):
    rec = {"check": check, "n": n, "params": params, "pass": bool(ok)}
    if not ok and lhs is not None:
        rec["lhs"] = str(lhs)
        rec["rhs"] = str(rhs)
    return rec


def verify_records(suite, n_max, seed):
    """Yield JSON report records for the named suite (``all`` runs every suite)."""
    suites = SUITES if suite == "all" else (suite,)
    grids = seeded_grids(seed, n_max + 2)
    ops = _families()
    for name in suites:
        if name == "fubini":
            for n in range(n_max + 1):
                f, g = combinat.q_fubini(n), combinat.q_fubini_compositions(n)
                yield _report("fubini_routes", n, {}, f == g, f, g)
                f1, c = specialize(f, 1), combinat.classical_fubini(n)
                yield _report("fubini_q1", n, {}, f1 == c, f1, c)
            continue
        for op in ops:
            if name == "zero":
                for n in range(n_max + 1):
                    t = goncarov.goncarov_poly(op, Grid.zero(n), n)
                    p = op.basis[n]
                    yield _report("zero_grid", n, {"op": op.name}, t == p, t, p)
                continue
            for gi, grid in enumerate(grids):
                params = {"op": op.name, "grid": gi, "seed": seed}
                if name == "biorth":
                    m = goncarov.verify_biorthogonality(op, grid, n_max)
                    bad = [(i, n) for i in range(n_max + 1) for n in range(n_max + 1)
                           if m[i][n] != (q_factorial(n) if i == n else 0)]
                    if bad:
                        i, n = bad[0]
                        yield _report("biorth", n_max, dict(params, i=i, n=n), False, m[i][n],
                                      q_factorial(n) if i == n else 0)
                    else:
                        yield _report("biorth", n_max, params, True)
                    continue
                for n in range(n_max + 1):
                    if name == "dt":
                        lhs, rhs = goncarov.dt_sides(op, grid, n)
                        yield _report("dt", n, params, lhs == rhs, lhs, rhs)
                    elif name == "bino":
                        lhs, rhs = goncarov.bino_sides(op, grid, n)
                        yield _report("bino", n, params, lhs == rhs, lhs, rhs)
                    elif name == "defg":
                        for j in range(n + 1):
                            ok = goncarov.check_defg(op, grid, n, j)
                            yield _report("defg", n, dict(params, j=j), ok)
                    elif name == "cascade":
                        for xi in (ONE + Q, Fraction(-1, 2)):
                            ok = goncarov.check_cascade(op, grid, n, xi)
                            yield _report("cascade", n, dict(params, xi=str(xi)), ok)
                    elif name == "ct":
                        a = combinat.constant_term_formula(op, grid, n)
                        b = combinat.constant_term_recurrence(op, grid, n)
                        c = evaluate(goncarov.goncarov_poly(op, grid, n), 0)
                        yield _report("ct", n, params, a == b == c, a, f"{b} | {c}")


def run_verify(suite="all", n_max=4, seed=0, out=None):
    out = out or sys.stdout
    if n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    ok = True
    for rec in verify_records(suite, n_max, seed):
        ok &= rec["pass"]
        out.write(json.dumps(rec) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def run_interpolate(op_spec, grid, b, fmt="text", out=None):
    out = out or sys.stdout
    if not b:
        raise UsageError("--b needs at least one value")
    if len(b) > len(grid):
        raise UsageError(f"{len(b)} values given but the grid has {len(grid)} nodes")
    op = operator_from_spec(op_spec)
    f = goncarov.interpolate(op, grid, b)
    data = goncarov.interpolation_data(op, grid, f, len(b) - 1)
    residuals = [d - v for d, v in zip(data, b)]
    if fmt == "json":
        lines = [json.dumps({
            "op": op.name, "f": str(f), "coeffs": f.to_json(),
            "residuals": [str(r) for r in residuals],
        }, indent=2)]
    elif fmt == "latex":
        lines = [f"f(x) = {render.xpoly_latex(f)}"]
    else:
        lines = [f"f(x) = {f}", "i,residual"] + [f"{i},{r}" for i, r in enumerate(residuals)]
    _emit(out, lines)
    return EXIT_OK if all(not r for r in residuals) else EXIT_FAIL


def run_constant_term(op_spec, grid, n, fmt="text", out=None):
    out = out or sys.stdout
    if n < 0:
        raise UsageError("--n must be >= 0")
    op = operator_from_spec(op_spec)
    a = combinat.constant_term_formula(op, grid, n)
    b = combinat.constant_term_recurrence(op, grid, n)
    c = evaluate(goncarov.goncarov_poly(op, grid, n), 0)
    agree = a == b == c
    if fmt == "json":
        lines = [json.dumps({"n": n, "formula": str(a), "recurrence": str(b),
                             "basis": str(c), "agree": agree}, indent=2)]
    else:
        lines = [f"formula    {a}", f"recurrence {b}", f"basis      {c}"]
    _emit(out, lines)
    return EXIT_OK if agree else EXIT_FAIL


def build_parser():
    p = _Parser(prog="qgoncarov", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmts = ("csv", "json", "latex", "text")

    f = sub.add_parser("fubini", help="q-Fubini table by both routes")
    f.add_argument("--n-max", type=int, required=True)
    f.add_argument("--format", choices=fmts, default="csv")
    f.add_argument("--q-at", default=None, help="extra column specialized at this rational q")

    b = sub.add_parser("basis", help="print t_0 .. t_n for an operator and grid")
    b.add_argument("--op", default="monomial")
    b.add_argument("--grid", default="")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--format", choices=fmts, default="text")
    b.add_argument("--symbolic", action="store_true",
                   help="expand over generic p_k and z_j instead of a concrete operator")

    v = sub.add_parser("verify", help="run identity suites on seeded grids")
    v.add_argument("--suite", default="all", choices=("all",) + SUITES)
    v.add_argument("--n-max", type=int, default=4)
    v.add_argument("--seed", type=int, default=0)

    i = sub.add_parser("interpolate", help="solve the interpolation problem")
    i.add_argument("--op", default="monomial")
    i.add_argument("--grid", required=True)
    i.add_argument("--b", required=True)
    i.add_argument("--format", choices=fmts, default="text")

    c = sub.add_parser("constant-term", help="t_n(0) by three routes")
    c.add_argument("--op", default="monomial")
    c.add_argument("--grid", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=fmts, default="text")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fubini":
            return run_fubini(args.n_max, args.format, _q_at(args.q_at))
        if args.command == "basis":
            return run_basis(args.op, _grid(args.grid), args.n, args.format, args.symbolic)
        if args.command == "verify":
            return run_verify(args.suite, args.n_max, args.seed)
        if args.command == "interpolate":
            return run_interpolate(args.op, _grid(args.grid), parse_list(args.b), args.format)
        if args.command == "constant-term":
            return run_constant_term(args.op, _grid(args.grid), args.n, args.format)
    except InconsistencyError as exc:
        sys.stderr.write(f"qgoncarov: internal consistency failure: {exc}\n")
        return EXIT_FAIL
    except (UsageError, QGoncarovError, ValueError, OSError) as exc:
        sys.stderr.write(f"qgoncarov: {exc}\n")
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
