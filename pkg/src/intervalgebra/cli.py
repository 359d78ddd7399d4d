"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (non-invertible divisor, failed
division condition, ...), 2 on parse and I/O errors.  An unbounded LP is a
result, not an error, and exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import analysis, division, lp
from .core import GElement, Interval, Sign, g_norm, g_scale, g_sign, interval_mul_classical
from .embed import bullet
from .errors import IntervalAlgebraError, LpFormatError, MalformedInterval, ParseError
from .expr import eval_expr
from .text import fmt_real, gelement_to_json, render, round_real

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, data: dict) -> None:
        if self.as_json:
            self.stream.write(json.dumps(data, indent=2) + "\n")
        else:
            self.stream.write(text if text.endswith("\n") else text + "\n")


def _g(x: GElement) -> dict:
    return {"text": render(x), **gelement_to_json(x)}


# --- subcommands ------------------------------------------------------------

def cmd_eval(args, out: Output) -> int:
    x = eval_expr(args.expr)
    out.emit(render(x), {"result": _g(x)})
    return EXIT_OK


def _proper(x: GElement, name: str) -> Interval:
    if g_sign(x).kind is Sign.NEGATIVE:
        raise MalformedInterval(f"{name} must be a proper interval for the classical product")
    return Interval(x.p, x.q)


def cmd_mul(args, out: Output) -> int:
    x, y = eval_expr(args.x), eval_expr(args.y)
    if args.classical:
        z = interval_mul_classical(_proper(x, "x"), _proper(y, "y"))
        res = GElement(z.lo, z.hi)
    else:
        res = bullet(x, y)
    out.emit(render(res), {"result": _g(res), "classical": args.classical})
    return EXIT_OK


def cmd_div(args, out: Output) -> int:
    y, x = eval_expr(args.y), eval_expr(args.x)
    if args.mode == "auto":
        r = division.div_auto(y, x, args.inv_tol)
    elif args.mode == "exact":
        r = division.div_exact(y, x, args.inv_tol)
    else:
        r = division.div_euclid(y, x)
    text = f"quotient: {render(r.quotient)}\nremainder: {render(r.remainder)}\nkind: {r.kind.value}"
    out.emit(text, {"quotient": _g(r.quotient), "remainder": _g(r.remainder), "kind": r.kind.value})
    return EXIT_OK


def cmd_norm(args, out: Output) -> int:
    n = g_norm(eval_expr(args.x))
    out.emit(fmt_real(n), {"norm": round_real(n)})
    return EXIT_OK


def cmd_ball(args, out: Output) -> int:
    x0 = eval_expr(args.x0)
    verts = analysis.ball_vertices(x0, args.eps)
    text = "\n".join(f"({fmt_real(v.p)}, {fmt_real(v.q)})" for v in verts)
    out.emit(text, {"vertices": [[round_real(v.p), round_real(v.q)] for v in verts]})
    return EXIT_OK


def _target(args) -> Callable[[GElement], GElement]:
    if args.target == "q2":
        return analysis.q2
    coeffs = [float(c) for c in args.coeffs.split(",")] if args.coeffs else []
    return lambda x: analysis.poly_eval(coeffs, x)


def _numerical_jacobian(f, x0: GElement, step: float = 1e-6) -> analysis.LinearMap2:
    cols = []
    for d in (GElement(step, 0.0), GElement(0.0, step)):
        fp, fm = f(x0 + d), f(x0 - d)
        cols.append(((fp.p - fm.p) / (2 * step), (fp.q - fm.q) / (2 * step)))
    return analysis.LinearMap2(((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1])))


_REGIONS = {"all": None, "first": analysis.region_first, "straddle": analysis.region_straddle}


def cmd_probe(args, out: Output) -> int:
    f = _target(args)
    x0 = eval_expr(args.x0)
    if args.kind == "continuity":
        eta = analysis.continuity_probe(f, x0, args.eps, args.samples, args.seed)
        out.emit(f"eta: {fmt_real(eta)}", {"eta": round_real(eta), "eps": args.eps})
        return EXIT_OK
    if args.target == "q2":
        if args.literal:
            L = lambda h: g_scale(2, bullet(x0, h))  # noqa: E731
        else:
            L = analysis.candidate_differential_q2(x0)
    else:
        L = _numerical_jacobian(f, x0)
    radii = [float(r) for r in args.radii.split(",")]
    rep = analysis.differentiability_probe(f, x0, L, radii, args.samples, args.seed,
                                           _REGIONS[args.region], args.region)
    out.emit(rep.to_table() + f"verdict: {rep.verdict.value}",
             {"radii": rep.radii, "ratios": [round_real(q) for q in rep.ratios],
              "region": rep.region, "verdict": rep.verdict.value})
    return EXIT_OK


def cmd_lp(args, out: Output) -> int:
    problem = lp.load_problem(args.path)
    outcome = lp.solve(problem, args.max_iters)
    data = lp.outcome_to_json(outcome)
    if outcome.status is lp.LpStatus.OPTIMAL:
        lines = [f"status: {data['status']}"]
        lines += [f"x{i + 1} = {render(x)}" for i, x in enumerate(outcome.x)]
        lines += [f"objective: {render(outcome.objective)}",
                  f"objective center: {fmt_real(data['objective_center'])}",
                  f"pivots: {outcome.pivots}"]
        text = "\n".join(lines)
    elif outcome.status is lp.LpStatus.UNBOUNDED:
        text = f"status: unbounded (column x{outcome.column + 1})\npivots: {outcome.pivots}"
    else:
        text = f"status: {data['status']}\npivots: {outcome.pivots}"
    out.emit(text, data)
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--inv-tol", type=float, default=argparse.SUPPRESS,
                        help="discriminant tolerance for invertibility (default 0)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="sampling seed (default 0)")

    ap = argparse.ArgumentParser(prog="intervalgebra", parents=[common],
                                 description="Arithmetic on generalized intervals.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mul", parents=[common], help="multiply two elements")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--classical", action="store_true", help="classical interval product")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("div", parents=[common], help="divide y by x")
    p.add_argument("y")
    p.add_argument("x")
    p.add_argument("--mode", choices=("auto", "exact", "euclid"), default="auto")
    p.set_defaults(func=cmd_div)

    p = sub.add_parser("norm", parents=[common], help="norm of an element")
    p.add_argument("x")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("ball", parents=[common], help="vertices of an eps-ball")
    p.add_argument("x0")
    p.add_argument("eps", type=float)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("probe", parents=[common], help="continuity or differentiability probe")
    p.add_argument("kind", choices=("continuity", "diff"))
    p.add_argument("--target", choices=("q2", "poly"), default="q2")
    p.add_argument("--coeffs", default="0,0,1", help="polynomial coefficients a0,a1,...")
    p.add_argument("--x0", default="[1,2]")
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--radii", default="1e-1,1e-2,1e-3,1e-4")
    p.add_argument("--region", choices=tuple(_REGIONS), default="all")
    p.add_argument("--literal", action="store_true",
                   help="use h -> 2 x0 . h itself instead of its linear matrix")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("lp", parents=[common], help="linear programs with interval RHS")
    lp_sub = p.add_subparsers(dest="lp_command", required=True)
    s = lp_sub.add_parser("solve", parents=[common], help="solve a JSON problem file")
    s.add_argument("path")
    s.add_argument("--max-iters", type=int, default=None)
    s.set_defaults(func=cmd_lp)
    return ap


def main(argv: Sequence[str] | None = None, stream=None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("json", False), ("inv_tol", 0.0), ("seed", 0)):
        if not hasattr(args, name):
            setattr(args, name, default)
    out = Output(args.json, stream)
    err = sys.stderr
    try:
        return args.func(args, out)
    except (ParseError, MalformedInterval, LpFormatError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (IntervalAlgebraError, ZeroDivisionError) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        # bad numeric arguments: eps <= 0, unsorted radii, unparsable coefficients
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
