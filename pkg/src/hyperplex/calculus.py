"""Differentiation of bicomplex functions.

A bicomplex function psi(p) = (phi1(a, b), phi2(a, b)) is holomorphic when the
component functions satisfy

    d phi1/da = d phi2/db,    d phi2/da = -d phi1/db

and its derivative can then be read off six ways: two complex forms and four
real forms built from partials in x, y, z, u (with a = x + iy, b = z + iu).

Partials use fourth-order central differences.  Complex partials are the
Wirtinger combinations d/da = (dx - i dy)/2 and d/da* = (dx + i dy)/2, so that
they agree with the plain x-derivative on holomorphic input and still mean
something for functions such as a*.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from .algebra import DEFAULT_TOL, Bicomplex, bic_div, bic_inverse, bic_mul, bic_norm
from .errors import EvaluationFailure, HyperplexError, NotDifferentiable, OrderTooHigh

FD_MAX_ORDER = 6


# ------------------------------------------------------------ argument classes


@dataclass(frozen=True)
class ArgClass:
    """One of the eight coordinate patterns (a or a*, +-b or +-b*).

    ``cup`` marks the second row, where the second component is negated.
    """

    conj_a: bool = False
    conj_b: bool = False
    cup: bool = False

    @classmethod
    def parse(cls, text):
        if isinstance(text, ArgClass):
            return text
        text = text.strip()
        cup = text.endswith(("∪", "U", "u")) and len(text) == 2
        base = text[0] if text else ""
        if base not in "pqrs" or len(text) > 2 or (len(text) == 2 and not cup):
            raise ValueError(f"unknown argument class {text!r}")
        conj_a, conj_b = {"p": (False, False), "q": (False, True), "r": (True, False), "s": (True, True)}[base]
        return cls(conj_a, conj_b, cup)

    @property
    def name(self):
        base = "pqrs"[2 * self.conj_a + self.conj_b]
        return base + ("∪" if self.cup else "")

    @property
    def sign(self):
        return -1 if self.cup else 1

    def transform(self, p: Bicomplex) -> Bicomplex:
        a = np.conj(p.a) if self.conj_a else p.a
        b = np.conj(p.b) if self.conj_b else p.b
        return Bicomplex(a, -b if self.cup else b)

    def __str__(self):
        return self.name


ALL_CLASSES = tuple(ArgClass.parse(n) for n in ("p", "q", "r", "s", "p∪", "q∪", "r∪", "s∪"))
CLASS_P = ALL_CLASSES[0]


# ---------------------------------------------------------------- BicomplexFn


@dataclass(frozen=True)
class BicomplexFn:
    """A named map B -> B.

    ``func`` must accept array-valued Bicomplex input unless ``vectorized`` is
    False.  ``nth``, when given, returns the analytic k-th derivative at p.
    """

    name: str
    func: Callable[[Bicomplex], Bicomplex]
    arg_class: ArgClass = CLASS_P
    nth: Optional[Callable[[Bicomplex, int], Bicomplex]] = None
    vectorized: bool = True

    def __post_init__(self):
        object.__setattr__(self, "arg_class", ArgClass.parse(self.arg_class))

    def __call__(self, p: Bicomplex) -> Bicomplex:
        if self.vectorized or not p.is_array:
            return self.func(p)
        vals = [self.func(q) for q in p]
        return Bicomplex(np.array([v.a for v in vals]), np.array([v.b for v in vals]))

    def phi1(self, a, b):
        return self(Bicomplex(a, b)).a

    def phi2(self, a, b):
        return self(Bicomplex(a, b)).b

    def _combine(self, other, op, sym):
        if isinstance(other, BicomplexFn):
            return BicomplexFn(f"({self.name}{sym}{other.name})", lambda p: op(self(p), other(p)),
                               self.arg_class, vectorized=self.vectorized and other.vectorized)
        return BicomplexFn(f"({self.name}{sym}{other!r})", lambda p: op(self(p), other), self.arg_class,
                           vectorized=self.vectorized)

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y, "+")

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y, "-")

    def __mul__(self, other):
        return self._combine(other, lambda x, y: x * y, "*")

    def __truediv__(self, other):
        return self._combine(other, lambda x, y: x / y, "/")

    def compose(self, inner: "BicomplexFn") -> "BicomplexFn":
        """self(inner(p))."""
        return BicomplexFn(f"{self.name}({inner.name})", lambda p: self(inner(p)), inner.arg_class,
                           vectorized=self.vectorized and inner.vectorized)


def constant(value: Bicomplex, name=None) -> BicomplexFn:
    def f(p):
        return Bicomplex(value.a + 0 * p.a, value.b + 0 * p.b)

    return BicomplexFn(name or f"const{value.quad()}", f, nth=lambda p, k: f(p) if k == 0 else Bicomplex(0 * p.a, 0 * p.b))


# ------------------------------------------------------------------- stencils


def default_step(p: Bicomplex) -> float:
    return 1e-4 * max(1.0, bic_norm(p))


_SHIFTS = np.array([-2.0, -1.0, 1.0, 2.0])
_WEIGHTS = np.array([1.0, -8.0, 8.0, -1.0]) / 12.0


def _safe_eval(fn, arg, what="function"):
    try:
        out = fn(arg)
    except HyperplexError as exc:
        raise EvaluationFailure(f"{what} failed inside the stencil: {exc}") from exc
    except (ArithmeticError, ValueError, FloatingPointError) as exc:
        raise EvaluationFailure(f"{what} failed inside the stencil: {exc}") from exc
    parts = (out.a, out.b) if isinstance(out, Bicomplex) else (out,)
    if not all(np.all(np.isfinite(x)) for x in parts):
        raise EvaluationFailure(f"{what} returned a non-finite value inside the stencil")
    return out


def real_partials(psi: BicomplexFn, p: Bicomplex, h: float | None = None):
    """(dx psi, dy psi, dz psi, du psi), each a Bicomplex of component partials."""
    h = default_step(p) if h is None else h
    offs = _SHIFTS * h
    zeros = np.zeros(4)
    da = np.concatenate([offs, 1j * offs, zeros, zeros])
    db = np.concatenate([zeros, zeros, offs, 1j * offs])
    pts = Bicomplex(p.a + da, p.b + db)
    vals = _safe_eval(psi, pts, getattr(psi, "name", "function"))
    out = []
    for k in range(4):
        sl = slice(4 * k, 4 * k + 4)
        out.append(Bicomplex(_WEIGHTS @ vals.a[sl] / h, _WEIGHTS @ vals.b[sl] / h))
    return tuple(out)


def complex_real_partials(f, a, b, h=None):
    """(fx, fy, fz, fu) for a complex-valued f(a, b); a and b may be arrays."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if h is None:
        h = 1e-4 * np.maximum(1.0, np.sqrt(np.abs(a) ** 2 + np.abs(b) ** 2))
    out = []
    for da, db in ((1, 0), (1j, 0), (0, 1), (0, 1j)):
        acc = 0j
        for s, w in zip(_SHIFTS, _WEIGHTS):
            try:
                v = np.asarray(f(a + s * h * da, b + s * h * db), dtype=complex)
            except (ArithmeticError, ValueError) as exc:
                raise EvaluationFailure(f"map failed inside the stencil: {exc}") from exc
            if not np.all(np.isfinite(v)):
                raise EvaluationFailure("map returned a non-finite value inside the stencil")
            acc = acc + w * v
        res = acc / h
        out.append(complex(res) if np.ndim(res) == 0 else res)
    return tuple(out)


def wirtinger(f, a, b, var="a", conj=False, conj_output=False, h=None):
    """Stencil estimate of d f/d var (or d f/d var* when ``conj``).

    With ``conj_output`` the map differentiated is f* instead of f; this is the
    second notation for the four derivatives, related by d f*/d a* = (d f/d a)*.
    """
    g = (lambda x, y: np.conj(f(x, y))) if conj_output else f
    fx, fy, fz, fu = complex_real_partials(g, a, b, h)
    d1, d2 = (fx, fy) if var == "a" else (fz, fu)
    return 0.5 * (d1 + 1j * d2) if conj else 0.5 * (d1 - 1j * d2)


def partial_a(f, a, b, h=None):
    return wirtinger(f, a, b, "a", False, h=h)


def partial_b(f, a, b, h=None):
    return wirtinger(f, a, b, "b", False, h=h)


def partial_a_conj(f, a, b, h=None):
    return wirtinger(f, a, b, "a", True, h=h)


def partial_b_conj(f, a, b, h=None):
    return wirtinger(f, a, b, "b", True, h=h)


def _wirt(d1: Bicomplex, d2: Bicomplex, conj: bool) -> Bicomplex:
    c = 0.5j if conj else -0.5j
    return Bicomplex(0.5 * d1.a + c * d2.a, 0.5 * d1.b + c * d2.b)


def bicomplex_partials(psi: BicomplexFn, p: Bicomplex, h=None, conj_a=False, conj_b=False):
    """(d psi/d a, d psi/d b), optionally with respect to a* or b*."""
    X, Y, Z, U = real_partials(psi, p, h)
    return _wirt(X, Y, conj_a), _wirt(Z, U, conj_b)


# ----------------------------------------------------------------- derivatives


@dataclass(frozen=True)
class DerivativeReport:
    value_c2_a: Bicomplex
    value_c2_b: Bicomplex
    values_r4: tuple
    cr_residual: float
    is_holomorphic: bool
    arg_class: ArgClass = CLASS_P
    step: float = 0.0
    neighbourhood_residual: float = 0.0
    samples: int = 0

    @property
    def value(self) -> Bicomplex:
        return self.value_c2_a

    @property
    def all_values(self):
        return (self.value_c2_a, self.value_c2_b) + tuple(self.values_r4)

    @property
    def max_discrepancy(self) -> float:
        return max(bic_norm(x - y) for x, y in combinations(self.all_values, 2))


def _class_values(psi, p, cls: ArgClass, h):
    X, Y, Z, U = real_partials(psi, p, h)
    s = cls.sign
    sa = -1.0 if cls.conj_a else 1.0
    sb = -1.0 if cls.conj_b else 1.0
    Da = _wirt(X, Y, cls.conj_a)
    Db = _wirt(Z, U, cls.conj_b)
    value_a = Da
    value_b = Bicomplex(s * Db.b, -s * Db.a)
    r4 = (
        X,
        Y.scale(-1j * sa),
        Bicomplex(s * Z.b, -s * Z.a),
        Bicomplex(-1j * s * sb * U.b, 1j * s * sb * U.a),
    )
    return value_a, value_b, r4


def class_cr_residual(psi: BicomplexFn, p: Bicomplex, arg_class=None, h=None) -> float:
    """Residual of the complexified CR system of ``arg_class`` (default: the function's own class)."""
    cls = psi.arg_class if arg_class is None else ArgClass.parse(arg_class)
    h = default_step(p) if h is None else h
    va, vb, _ = _class_values(psi, p, cls, h)
    return bic_norm(va - vb)


def ball_samples(center: Bicomplex, radius: float, count: int, seed: int = 0) -> Bicomplex:
    """``count`` points uniformly distributed in the 4-ball about ``center``."""
    rng = np.random.default_rng(seed)
    v = rng.normal(size=(count, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    v *= radius * rng.uniform(size=(count, 1)) ** 0.25
    return Bicomplex(center.a + v[:, 0] + 1j * v[:, 1], center.b + v[:, 2] + 1j * v[:, 3])


def derivative_report(psi: BicomplexFn, p: Bicomplex, arg_class=None, h=None, tol=1e-6,
                      samples=20, radius=0.1, seed=0) -> DerivativeReport:
    """All six derivative values of psi at p for the CR system of ``arg_class``.

    Holomorphy is judged on p plus ``samples`` points in a ball of ``radius``;
    points where psi cannot be evaluated are skipped.
    """
    cls = psi.arg_class if arg_class is None else ArgClass.parse(arg_class)
    step = default_step(p) if h is None else h
    va, vb, r4 = _class_values(psi, p, cls, step)
    residual = bic_norm(va - vb)
    scale = max(1.0, bic_norm(va))
    worst = residual / scale
    used = 0
    if samples:
        for q in ball_samples(p, radius, samples, seed):
            try:
                worst = max(worst, class_cr_residual(psi, q, cls, h) / scale)
            except EvaluationFailure:
                continue
            used += 1
    return DerivativeReport(va, vb, r4, residual, bool(worst <= tol), cls, step, worst * scale, used)


def derivative_c2(psi: BicomplexFn, p: Bicomplex, h=None, tol=1e-6, samples=20, radius=0.1) -> DerivativeReport:
    return derivative_report(psi, p, CLASS_P, h, tol, samples, radius)


def check_bicomplex_cr(psi: BicomplexFn, p: Bicomplex, h=None) -> float:
    """||d psi/da + j . d psi/db||."""
    Da, Db = bicomplex_partials(psi, p, h)
    return bic_norm(Bicomplex(Da.a - Db.b, Da.b + Db.a))


def _richardson(values, ratio):
    """Neville table for a sequence whose error expands in powers of ``ratio``."""
    table = list(values)
    best = table[-1]
    for m in range(1, len(values)):
        factor = ratio**m
        table = [(factor * table[k + 1] - table[k]) / (factor - 1) for k in range(len(table) - 1)]
        best = table[-1]
    return best


def derivative_limit(psi: BicomplexFn, p: Bicomplex, h: float | None = None, tol: float = 1e-6,
                     levels: int = 6) -> Bicomplex:
    """Limit of (psi(p + dp) - psi(p)) / dp along dp = (h, 0) and dp = (0, h)."""
    h0 = 1e-2 * max(1.0, bic_norm(p)) if h is None else h
    base = _safe_eval(psi, p)
    limits = []
    for unit in (Bicomplex(1, 0), Bicomplex(0, 1)):
        quotients = []
        for k in range(levels):
            dp = unit.scale(h0 / 2**k)
            diff = _safe_eval(psi, p + dp) - base
            q = bic_div(diff, dp)
            quotients.append(np.array([q.a, q.b]))
        best = _richardson(quotients, 2.0)
        limits.append(Bicomplex(best[0], best[1]))
    gap = bic_norm(limits[0] - limits[1])
    scale = max(1.0, bic_norm(limits[0]))
    if gap > tol * scale:
        raise NotDifferentiable(f"directional limits differ by {gap:.3e}")
    return Bicomplex(0.5 * (limits[0].a + limits[1].a), 0.5 * (limits[0].b + limits[1].b))


def singular_direction_residual(psi: BicomplexFn, p: Bicomplex, value: Bicomplex | None = None,
                                h: float | None = None) -> float:
    """Diagnostic only: how far psi(p + dp) - psi(p) is from value . dp along singular dp.

    The difference quotient is undefined there, so the increment itself is
    compared: max over dp = h(c, +-ic) of ||(psi(p+dp) - psi(p-dp))/2 - value . dp|| / ||dp||.
    """
    value = derivative_report(psi, p, samples=0).value if value is None else value
    h = 1e-4 * max(1.0, bic_norm(p)) if h is None else h
    worst = 0.0
    for c in (1.0, 1j, np.exp(0.25j * np.pi)):
        for sign in (1, -1):
            dp = Bicomplex(h * c, sign * 1j * h * c)
            diff = _safe_eval(psi, p + dp) - _safe_eval(psi, p - dp)
            worst = max(worst, bic_norm(diff.scale(0.5) - bic_mul(value, dp)) / bic_norm(dp))
    return worst


def _central_nth(psi, p, n, h, axis):
    # n-th central difference along the x (axis 'a') or z (axis 'b') direction
    ks = np.arange(n + 1)
    coeff = np.array([(-1) ** k * math.comb(n, k) for k in ks], dtype=float)
    offs = (n / 2 - ks) * h
    if axis == "a":
        pts = Bicomplex(p.a + offs, p.b + 0 * offs)
    else:
        pts = Bicomplex(p.a + 0 * offs, p.b + offs)
    vals = _safe_eval(psi, pts)
    return np.array([coeff @ vals.a, coeff @ vals.b]) / h**n


def _fd_nth(psi, p, n, axis, h=None):
    h0 = (0.05 * 2 ** (n / 2)) * max(1.0, bic_norm(p)) if h is None else h
    estimates = [_central_nth(psi, p, n, h0 / 2**k, axis) for k in range(4)]
    best = _richardson(estimates, 4.0)
    return Bicomplex(best[0], best[1])


def derivative_n(psi: BicomplexFn, p: Bicomplex, n: int, via: str = "a", h=None) -> Bicomplex:
    """n-th derivative as (d^n phi1/da^n, d^n phi2/da^n).

    ``via='b'`` uses b-partials instead: (-j)^n . d^n psi/db^n, which carries
    the (-1)^floor(n/2) sign pattern.  Analytic derivatives are used when psi
    provides them; otherwise finite differences, limited to n <= 6.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return _safe_eval(psi, p)
    if psi.nth is not None:
        return psi.nth(p, n)
    if n > FD_MAX_ORDER:
        raise OrderTooHigh(f"finite differences are limited to order {FD_MAX_ORDER}, got {n}")
    if via == "a":
        return _fd_nth(psi, p, n, "a", h)
    d = _fd_nth(psi, p, n, "b", h)
    # (-j)^n cycles through 1, -j, -1, j
    k = n % 4
    if k == 0:
        return d
    if k == 1:
        return Bicomplex(d.b, -d.a)
    if k == 2:
        return -d
    return Bicomplex(-d.b, d.a)


def derivative_blog(q: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    return bic_inverse(q, tol)

