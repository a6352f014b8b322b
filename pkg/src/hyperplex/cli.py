"""Command-line front end.

    hyperplex eval --fn exp --point "(0,0),(0,0)"
    hyperplex twine --curve twist --p0 0
    hyperplex cauchy --fn exp --curve double-circle --R 1 --p0 0

In json mode (the default) stdout carries exactly one JSON document with
schema ``hyperplex.v1``.  Exit codes: 0 ok, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .algebra import Bicomplex, bic_norm, is_singular
from .calculus import derivative_n, derivative_report, singular_direction_residual
from .errors import HyperplexError, ParseError, UsageError
from .harmonic import classify
from .integration import (
    CURVES,
    SURFACES,
    component_identities,
    cauchy_integral_formula,
    green_sides,
    line_integral,
    make_curve,
    make_surface,
    taylor_expand,
    twining_number,
)
from .registry import get_function

SCHEMA = "hyperplex.v1"
COMMANDS = ("eval", "diff", "integrate", "twine", "cauchy", "taylor", "classify", "green")

# ------------------------------------------------------------ literal parsing

_ALLOWED = set("0123456789.+-eEi \t")


def _parse_complex(s: str, pos: int) -> complex:
    for k, ch in enumerate(s):
        if ch not in _ALLOWED:
            raise ParseError(f"unexpected character {ch!r}", pos + k)
    body = s.strip()
    if not body:
        raise ParseError("empty component", pos)
    try:
        return complex(body.replace(" ", "").replace("\t", "").replace("i", "j"))
    except ValueError:
        raise ParseError(f"malformed number {body!r}", pos + (len(s) - len(s.lstrip()))) from None


def _split(text: str, start: int, depth_ok: bool):
    """Split on commas outside parentheses, returning (offset, piece) pairs."""
    parts, depth, begin = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            if not depth_ok or depth:
                raise ParseError("unexpected '('", start + k)
            depth += 1
        elif ch == ")":
            if not depth:
                raise ParseError("unbalanced ')'", start + k)
            depth -= 1
        elif ch == "," and not depth:
            parts.append((start + begin, text[begin:k]))
            begin = k + 1
    if depth:
        raise ParseError("missing ')'", start + len(text))
    parts.append((start + begin, text[begin:]))
    return parts


def _parse_item(pos: int, piece: str):
    """Return (value, bare) for one top-level component."""
    lead = len(piece) - len(piece.lstrip())
    body = piece.strip()
    if not body.startswith("("):
        return _parse_complex(piece, pos), True
    if not body.endswith(")"):
        raise ParseError("text after ')'", pos + lead + body.index(")") + 1)
    inner_pos = pos + lead + 1
    inner = _split(body[1:-1], inner_pos, depth_ok=False)
    if len(inner) == 1:
        return _parse_complex(inner[0][1], inner[0][0]), False
    if len(inner) == 2:
        x, y = (_parse_complex(p, o) for o, p in inner)
        if x.imag or y.imag:
            raise ParseError("pair components must be real", inner[0][0])
        return complex(x.real, y.real), False
    raise ParseError("expected (x+yi) or (x,y)", inner[2][0])


def parse_bicomplex(text: str) -> Bicomplex:
    """Parse ``"(x+yi),(z+ui)"``, ``"(x,y),(z,u)"``, ``"x,y,z,u"`` or a single complex ``"x+yi"``."""
    if not text.strip():
        raise ParseError("empty literal", 0)
    items = [(pos, *_parse_item(pos, piece)) for pos, piece in _split(text, 0, depth_ok=True)]
    if len(items) == 1:
        return Bicomplex(items[0][1], 0)
    if len(items) == 2:
        return Bicomplex(items[0][1], items[1][1])
    if len(items) == 4:
        for pos, v, bare in items:
            if not bare or v.imag:
                raise ParseError("quadruple components must be plain reals", pos)
        x, y, z, u = (v.real for _, v, _ in items)
        return Bicomplex(complex(x, y), complex(z, u))
    raise ParseError(f"expected 1, 2 or 4 components, got {len(items)}", items[min(2, len(items) - 1)][0])


# ------------------------------------------------------------- serialization


def _num(x: float) -> str:
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return "null"
    if x == 0:
        return "-0.0" if math.copysign(1.0, x) < 0 else "0.0"
    s = "%.17g" % x
    return s if any(c in s for c in ".e") else s + ".0"


def to_jsonable(obj):
    """Reduce results to plain containers; Bicomplex becomes {"pair", "quad"}."""
    if isinstance(obj, Bicomplex):
        if obj.is_array:
            return [to_jsonable(q) for q in obj]
        x, y, z, u = obj.quad()
        return {"pair": [[x, y], [z, u]], "quad": [x, y, z, u]}
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = (f"{inner}{json.dumps(k)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items())
        return "{\n" + ",\n".join(body) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        if all(isinstance(v, list) for v in obj) and len(obj) <= 4:
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + dumps(v, indent, _level + 1) for v in obj) + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _num(obj)
    return json.dumps(obj)


@dataclass
class Envelope:
    command: dict
    status: str = "ok"
    result: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)
    error: dict | None = None

    def as_dict(self):
        out = {"schema": SCHEMA, "command": self.command, "status": self.status, "result": self.result,
               "residuals": self.residuals, "diagnostics": self.diagnostics}
        if self.error is not None:
            out["error"] = self.error
        return to_jsonable(out)

    def to_json(self) -> str:
        return dumps(self.as_dict())

    def to_text(self) -> str:
        lines = [f"{self.command.get('name', '?')}: {self.status}"]

        def walk(prefix, obj):
            if isinstance(obj, dict) and not ("quad" in obj and "pair" in obj):
                for k, v in obj.items():
                    walk(f"{prefix}.{k}" if prefix else k, v)
            elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
                for k, v in enumerate(obj):
                    walk(f"{prefix}[{k}]", v)
            elif isinstance(obj, dict):
                (x, y), (z, u) = obj["pair"]
                lines.append(f"  {prefix} = ({x:.12g}{y:+.12g}i, {z:.12g}{u:+.12g}i)")
            else:
                lines.append(f"  {prefix} = {obj}")

        d = self.as_dict()
        for section in ("result", "residuals", "diagnostics", "error"):
            if d.get(section):
                walk(section, d[section])
        return "\n".join(lines)


# ------------------------------------------------------------------- parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperplex", description="Bicomplex analysis toolkit.")
    parser.add_argument("--version", action="version", version=f"hyperplex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--tol", type=float, default=None, help="tolerance (default from HYPERPLEX_TOL)")
        p.add_argument("--output", choices=("json", "text"), default="json")

    def fn(p, required=True):
        p.add_argument("--fn", required=required, help="registry name, optionally with @class")

    def curve(p):
        p.add_argument("--curve", required=True, choices=sorted(CURVES))
        p.add_argument("--R", type=float, default=None)
        p.add_argument("--p0", default=None, help="curve centre, also the evaluation point")
        p.add_argument("--center", default=None, help="evaluation point if different from --p0")

    p = sub.add_parser("eval", help="evaluate a registry function")
    fn(p), common(p)
    p.add_argument("--point", required=True)

    p = sub.add_parser("diff", help="derivative values and CR residual")
    fn(p), common(p)
    p.add_argument("--point", required=True)
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("integrate", help="line integral of psi . dp")
    fn(p), common(p), curve(p)

    p = sub.add_parser("twine", help="twining number of a closed curve")
    common(p), curve(p)

    p = sub.add_parser("cauchy", help="Cauchy integral formula")
    fn(p), common(p), curve(p)
    p.add_argument("--surface", default=None, choices=sorted(SURFACES))

    p = sub.add_parser("taylor", help="Taylor partial sum and remainder bound")
    fn(p), common(p)
    p.add_argument("--p0", "--center", dest="p0", default="0", help="expansion point")
    p.add_argument("--point", required=True)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--R", type=float, default=None, help="radius of the sampled ball")

    p = sub.add_parser("classify", help="sampled argument-class and regularity report")
    fn(p), common(p)

    p = sub.add_parser("green", help="Green formula and its two real component identities")
    fn(p), common(p)
    p.add_argument("--surface", required=True, choices=sorted(SURFACES))
    p.add_argument("--R", type=float, default=None)
    p.add_argument("--p0", default=None)
    return parser


def _tolerance(args, default):
    if args.tol is not None:
        return args.tol
    env = os.environ.get("HYPERPLEX_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise UsageError(f"HYPERPLEX_TOL is not a number: {env!r}") from None
    return default


def _point(text, flag):
    try:
        return parse_bicomplex(text)
    except ParseError as exc:
        raise ParseError(f"{flag}: {exc.args[0].rsplit(' at position', 1)[0]}", exc.position) from None


def _geometry_params(args, table, name):
    declared = table[name][1]
    params = {}
    for flag in ("R", "p0"):
        raw = getattr(args, flag, None)
        if raw is None:
            continue
        if flag not in declared:
            raise UsageError(f"{name} takes parameters {sorted(declared)}; --{flag} is not one of them")
        params[flag] = _point(raw, "--p0") if flag == "p0" else raw
    return params


def _function(name):
    try:
        return get_function(name)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0])) from None


def _quad_diag(info):
    return {"panels": info.panels, "evaluations": info.evaluations, "error_estimate": info.error_estimate}


def _center(args):
    if args.center is not None:
        return _point(args.center, "--center")
    if args.p0 is not None:
        return _point(args.p0, "--p0")
    return Bicomplex(0, 0)


# ---------------------------------------------------------------- commands


def _cmd_eval(args, env):
    psi = _function(args.fn)
    p = _point(args.point, "--point")
    env.diagnostics["input_singular"] = bool(is_singular(p))
    env.result["value"] = psi(p)


def _cmd_diff(args, env):
    psi = _function(args.fn)
    p = _point(args.point, "--point")
    tol = _tolerance(args, 1e-6)
    env.diagnostics["input_singular"] = bool(is_singular(p))
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    if args.order != 1:
        env.result["value"] = derivative_n(psi, p, args.order)
        env.diagnostics["analytic"] = psi.nth is not None
        return
    rep = derivative_report(psi, p, tol=tol)
    env.result.update(value=rep.value, holomorphic=rep.is_holomorphic, arg_class=rep.arg_class.name,
                      c2=[rep.value_c2_a, rep.value_c2_b], r4=list(rep.values_r4))
    env.residuals.update(cr=rep.cr_residual, neighbourhood=rep.neighbourhood_residual,
                         max_discrepancy=rep.max_discrepancy,
                         singular_directions=singular_direction_residual(psi, p, rep.value))
    env.diagnostics.update(step=rep.step, samples=rep.samples, tol=tol)


def _cmd_integrate(args, env):
    psi = _function(args.fn)
    curve = make_curve(args.curve, **_geometry_params(args, CURVES, args.curve))
    tol = _tolerance(args, 1e-10)
    value, info = line_integral(psi, curve, tol, full_output=True)
    env.result["value"] = value
    env.result["closed"] = curve.closed
    env.diagnostics.update(_quad_diag(info), tol=tol)


def _cmd_twine(args, env):
    curve = make_curve(args.curve, **_geometry_params(args, CURVES, args.curve))
    tol = _tolerance(args, 1e-10)
    v = twining_number(curve, _center(args), tol)
    env.result.update(m=v.m, n=v.n, windings=list(v.windings), value=v.value, raw=v.raw)
    env.residuals["snap"] = v.residual
    env.diagnostics.update(samples=v.samples, tol=tol)


def _cmd_cauchy(args, env):
    psi = _function(args.fn)
    params = _geometry_params(args, CURVES, args.curve)
    curve = make_curve(args.curve, **params)
    surface = None
    if args.surface:
        declared = SURFACES[args.surface][1]
        surface = make_surface(args.surface, **{k: v for k, v in params.items() if k in declared})
    tol = _tolerance(args, 1e-10)
    p0 = _center(args)
    res = cauchy_integral_formula(psi, curve, p0, surface, tol)
    env.result.update(value=res.value, raw=res.raw, twining={"m": res.twining.m, "n": res.twining.n})
    if res.value is not None:
        env.residuals["vs_direct"] = bic_norm(res.value - psi(p0))
    env.diagnostics.update(samples=res.samples, surface_checked=res.surface_checked, tol=tol)


def _cmd_taylor(args, env):
    psi = _function(args.fn)
    p0 = _point(args.p0, "--p0")
    p = _point(args.point, "--point")
    dist = bic_norm(p - p0)
    radius = args.R if args.R is not None else max(dist, 1e-3)
    if radius < dist:
        raise UsageError("--R must be at least the distance from --p0 to --point")
    ex = taylor_expand(psi, p0, args.order, radius=radius)
    approx = ex.evaluate(p)
    exact = psi(p)
    env.result.update(value=approx, exact=exact)
    env.residuals.update(error=bic_norm(approx - exact), bound=ex.remainder_bound(p))
    env.diagnostics.update(order=args.order, M=ex.M, radius=radius, samples=ex.samples)


def _cmd_classify(args, env):
    rep = classify(_function(args.fn))
    env.result.update(members=rep.members, regular=rep.regular, conjugate_regular=rep.conjugate_regular,
                      note=rep.note)
    env.residuals.update(classes=rep.class_residuals, fueter=rep.fueter_residual,
                         conjugate_fueter=rep.conj_fueter_residual, laplace4=rep.laplace4_residual)
    env.diagnostics.update(samples=rep.samples, threshold=rep.threshold)


def _cmd_green(args, env):
    psi = _function(args.fn)
    surface = make_surface(args.surface, **_geometry_params(args, SURFACES, args.surface))
    tol = _tolerance(args, 1e-10)
    g = green_sides(psi.phi1, psi.phi2, surface, tol)
    parts = component_identities(psi.phi1, psi.phi2, surface, tol)
    env.result.update(line=g.lhs, surface=g.rhs,
                      components=[{"line": c.line, "reduced": c.reduced, "stokes": c.stokes} for c in parts])
    env.residuals.update(green=g.residual, components=[c.residual for c in parts])
    env.diagnostics["tol"] = tol


_DISPATCH = {name: globals()[f"_cmd_{name}"] for name in COMMANDS}


# -------------------------------------------------------------------- main


def _echo(args) -> dict:
    opts = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "output") and v is not None}
    return {"name": args.command, "options": opts}


def run(argv=None) -> tuple[Envelope, int, str]:
    """Execute one command; returns (envelope, exit code, output mode)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    mode = "text" if "--output=text" in argv or _flag_value(argv, "--output") == "text" else "json"
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as exc:
        env = Envelope({"name": argv[0] if argv else None, "argv": argv}, "error",
                       error={"code": exc.code, "message": str(exc)})
        return env, 2, mode
    env = Envelope(_echo(args))
    try:
        _DISPATCH[args.command](args, env)
        return env, 0, args.output
    except (UsageError, ParseError, TypeError, KeyError) as exc:
        code = getattr(exc, "code", "usage_error")
        env.status, env.error = "error", {"code": code, "message": str(exc.args[0]) if exc.args else code}
        if isinstance(exc, ParseError):
            env.error["position"] = exc.position
        return env, 2, args.output
    except HyperplexError as exc:
        env.status, env.error = "error", {"code": exc.code, "message": str(exc)}
        return env, 1, args.output
    except (ZeroDivisionError, ArithmeticError, ValueError) as exc:
        env.status, env.error = "error", {"code": "domain_error", "message": str(exc)}
        return env, 1, args.output


def _flag_value(argv, flag):
    if flag in argv:
        k = argv.index(flag)
        return argv[k + 1] if k + 1 < len(argv) else None
    return None


def main(argv=None) -> int:
    env, code, mode = run(argv)
    print(env.to_text() if mode == "text" else env.to_json())
    if code:
        print(f"hyperplex: {env.error['code']}: {env.error['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
