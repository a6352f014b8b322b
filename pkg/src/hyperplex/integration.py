"""Line and surface integration in bicomplex space.

The line integral of psi along p(t), r <= t <= s, is

    int psi(p) . dp = int_r^s psi(p(t)) . p'(t) dt

computed with adaptive composite Gauss-Legendre quadrature (15-point panels,
bisection).  On top of it sit the twining number, Cauchy's theorem and
integral formula, Taylor expansion with a remainder bound, and a numerical
Green/Stokes check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .algebra import DEFAULT_TOL, Bicomplex, bic_div, bic_mul, bic_norm, bic_pow_int
from .calculus import (
    BicomplexFn,
    ball_samples,
    complex_real_partials,
    derivative_n,
    derivative_report,
    FD_MAX_ORDER,
)
from .errors import (
    NonIntegerResult,
    NotDifferentiable,
    OrderTooHigh,
    PreconditionUnverified,
    QuadratureFailure,
    SingularOnCurve,
)

TWO_PI = 2.0 * math.pi
GL_POINTS = 15
_GL_X, _GL_W = np.polynomial.legendre.leggauss(GL_POINTS)
ANALYTIC_MAX_ORDER = 20
SNAP_THRESHOLD = 1e-6
CURVE_SAMPLES = 1024


# ----------------------------------------------------------------- quadrature


@dataclass
class QuadInfo:
    panels: int = 0
    evaluations: int = 0
    error_estimate: float = 0.0

    def merge(self, other: "QuadInfo"):
        self.panels += other.panels
        self.evaluations += other.evaluations
        self.error_estimate += other.error_estimate


def adaptive_gauss_legendre(f, lo, hi, atol=1e-9, rtol=1e-9, breakpoints=(), max_panels=20000):
    """Integrate the array-valued f(t) over [lo, hi].

    ``f`` receives a 1-D array of nodes and returns an array whose first axis
    runs over the nodes.  Each panel is accepted when the 15-point rule on it
    agrees with the sum over its two halves to within its share of the
    tolerance max(atol, rtol*|I|).  Breakpoints always start new panels.
    """
    edges = [lo] + sorted(b for b in breakpoints if lo < b < hi) + [hi]
    width = hi - lo
    info = QuadInfo()

    def panel(left, right):
        half = 0.5 * (right - left)
        vals = np.asarray(f(0.5 * (left + right) + half * _GL_X))
        info.evaluations += GL_POINTS
        if not np.all(np.isfinite(vals)):
            raise QuadratureFailure(f"integrand is not finite on [{left:.6g}, {right:.6g}]")
        return half * np.tensordot(_GL_W, vals, axes=1)

    stack = [(l, r, panel(l, r)) for l, r in zip(edges[:-1], edges[1:])]
    estimate = sum(s[2] for s in stack)
    target = max(atol, rtol * float(np.max(np.abs(estimate))))
    total = np.zeros_like(estimate)
    while stack:
        left, right, whole = stack.pop()
        mid = 0.5 * (left + right)
        lh, rh = panel(left, mid), panel(mid, right)
        err = float(np.max(np.abs(lh + rh - whole)))
        if err <= target * (right - left) / width:
            total = total + lh + rh
            info.panels += 2
            info.error_estimate += err
            continue
        if (right - left) < 1e-13 * width or len(stack) + info.panels > max_panels:
            raise QuadratureFailure(f"refinement stalled near t={mid:.6g} (panel error {err:.3e})")
        stack.append((mid, right, rh))
        stack.append((left, mid, lh))
    return total, info


# ---------------------------------------------------------- curves, surfaces


@dataclass(frozen=True)
class Curve:
    """Piecewise smooth path t -> p(t) on [r, s].

    ``param`` (and ``deriv`` if given) must accept arrays of t.  Without
    ``deriv`` the tangent comes from central differences at step 1e-6 (s - r),
    switching to one-sided stencils next to breakpoints and endpoints.
    """

    param: Callable[[np.ndarray], Bicomplex]
    r: float = 0.0
    s: float = TWO_PI
    deriv: Optional[Callable[[np.ndarray], Bicomplex]] = None
    breakpoints: tuple = ()
    name: str = "curve"
    closed: bool = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", tuple(sorted(self.breakpoints)))
        gap = bic_norm(self.param(self.r) - self.param(self.s))
        if self.closed is None:
            object.__setattr__(self, "closed", bool(gap <= 1e-12))
        elif self.closed and gap > 1e-12:
            raise ValueError(f"curve declared closed but its endpoints differ by {gap:.3e}")

    def __call__(self, t):
        return self.param(t)

    def tangent(self, t):
        if self.deriv is not None:
            return self.deriv(t)
        t = np.asarray(t, dtype=float)
        h = 1e-6 * (self.s - self.r)
        knots = np.array([self.r, *self.breakpoints, self.s])
        idx = np.clip(np.searchsorted(knots, t, side="right") - 1, 0, len(knots) - 2)
        left, right = knots[idx], knots[idx + 1]
        fwd = t - h < left
        bwd = (t + h > right) & ~fwd
        step = np.where(fwd, h, np.where(bwd, -h, h))
        f0 = self.param(t)
        f1 = self.param(t + step)
        f2 = self.param(t + 2 * step)
        fm = self.param(t - step)
        one_sided = fwd | bwd
        # second order either way: (-3f0 + 4f1 - f2)/(2h) or (f1 - f-1)/(2h)
        da = np.where(one_sided, -3 * f0.a + 4 * f1.a - f2.a, f1.a - fm.a) / (2 * step)
        db = np.where(one_sided, -3 * f0.b + 4 * f1.b - f2.b, f1.b - fm.b) / (2 * step)
        return Bicomplex(da, db)

    def samples(self, count=CURVE_SAMPLES):
        return self.param(np.linspace(self.r, self.s, count))

    @property
    def start(self):
        return self.param(self.r)

    @property
    def end(self):
        return self.param(self.s)


@dataclass(frozen=True)
class Surface:
    """Two-parameter map (h, t) -> p over [h0, h1] x [t0, t1]."""

    param: Callable[[np.ndarray, np.ndarray], Bicomplex]
    h0: float = 0.0
    h1: float = 1.0
    t0: float = 0.0
    t1: float = TWO_PI
    d_h: Optional[Callable] = None
    d_t: Optional[Callable] = None
    name: str = "surface"

    def __call__(self, h, t):
        return self.param(h, t)

    def _fd(self, h, t, axis):
        lo, hi = (self.h0, self.h1) if axis == 0 else (self.t0, self.t1)
        x = np.asarray(h if axis == 0 else t, dtype=float)
        step = 1e-6 * (hi - lo)
        fwd = x - step < lo
        bwd = (x + step > hi) & ~fwd
        sgn = np.where(bwd, -1.0, 1.0)
        st = sgn * step

        def at(k):
            return self.param(h + k * st, t) if axis == 0 else self.param(h, t + k * st)

        f0, f1, f2, fm = at(0), at(1), at(2), at(-1)
        one_sided = fwd | bwd
        da = np.where(one_sided, -3 * f0.a + 4 * f1.a - f2.a, f1.a - fm.a) / (2 * st)
        db = np.where(one_sided, -3 * f0.b + 4 * f1.b - f2.b, f1.b - fm.b) / (2 * st)
        return Bicomplex(da, db)

    def partial_h(self, h, t):
        return self.d_h(h, t) if self.d_h is not None else self._fd(h, t, 0)

    def partial_t(self, h, t):
        return self.d_t(h, t) if self.d_t is not None else self._fd(h, t, 1)

    def boundary(self) -> Curve:
        """The four rectangle edges traversed counterclockwise in (h, t), as one curve on [0, 4]."""
        h0, h1, t0, t1 = self.h0, self.h1, self.t0, self.t1

        def split(u):
            u = np.asarray(u, dtype=float)
            k = np.clip(np.floor(u), 0, 3)
            f = u - k
            hh = np.select([k == 0, k == 1, k == 2], [h0 + f * (h1 - h0), np.full_like(f, h1), h1 - f * (h1 - h0)],
                           np.full_like(f, h0))
            tt = np.select([k == 0, k == 1, k == 2], [np.full_like(f, t0), t0 + f * (t1 - t0), np.full_like(f, t1)],
                           t1 - f * (t1 - t0))
            return k, hh, tt

        def param(u):
            _, hh, tt = split(u)
            return self.param(hh, tt)

        def deriv(u):
            k, hh, tt = split(u)
            ph, pt = self.partial_h(hh, tt), self.partial_t(hh, tt)
            ch = np.select([k == 0, k == 2], [h1 - h0, -(h1 - h0)], 0.0)
            ct = np.select([k == 1, k == 3], [t1 - t0, -(t1 - t0)], 0.0)
            return Bicomplex(ch * ph.a + ct * pt.a, ch * ph.b + ct * pt.b)

        return Curve(param, 0.0, 4.0, deriv, (1.0, 2.0, 3.0), f"boundary({self.name})")

    def grid(self, n=32):
        hs = np.linspace(self.h0, self.h1, n)
        ts = np.linspace(self.t0, self.t1, n)
        H, T = np.meshgrid(hs, ts, indexing="ij")
        return self.param(H.ravel(), T.ravel())


# ------------------------------------------------------------ line integrals


def _bic_stack(v: Bicomplex):
    return np.stack([v.a, v.b], axis=-1)


def line_integral(psi: BicomplexFn, curve: Curve, tol=1e-9, full_output=False):
    """int psi(p) . dp along the curve."""

    def integrand(t):
        return _bic_stack(bic_mul(psi(curve(t)), curve.tangent(t)))

    val, info = adaptive_gauss_legendre(integrand, curve.r, curve.s, tol, tol, curve.breakpoints)
    out = Bicomplex(val[0], val[1])
    return (out, info) if full_output else out


def norm_line_integral(psi: BicomplexFn, curve: Curve, tol=1e-9) -> Bicomplex:
    """int psi(p) ||dp||."""

    def integrand(t):
        return _bic_stack(psi(curve(t)).scale(bic_norm(curve.tangent(t))))

    val, _ = adaptive_gauss_legendre(integrand, curve.r, curve.s, tol, tol, curve.breakpoints)
    return Bicomplex(val[0], val[1])


def curve_length(curve: Curve, tol=1e-9) -> float:
    val, _ = adaptive_gauss_legendre(lambda t: bic_norm(curve.tangent(t)), curve.r, curve.s, tol, tol,
                                     curve.breakpoints)
    return float(val)


def ml_bound(psi: BicomplexFn, curve: Curve, samples=CURVE_SAMPLES, tol=1e-9) -> float:
    """max sampled ||psi|| times the length of the curve."""
    return float(np.max(bic_norm(psi(curve.samples(samples))))) * curve_length(curve, tol)


def path_independence_check(psi: BicomplexFn, curves: Sequence[Curve], tol=1e-8) -> bool:
    if len(curves) < 2:
        return True
    first = curves[0]
    for c in curves[1:]:
        if bic_norm(c.start - first.start) > 1e-10 or bic_norm(c.end - first.end) > 1e-10:
            raise ValueError("curves do not share their end points")
    values = [line_integral(psi, c, tol * 1e-2) for c in curves]
    return all(bic_norm(v - values[0]) <= tol for v in values[1:])


# -------------------------------------------------------------------- Taylor


@dataclass(frozen=True)
class TaylorExpansion:
    """sum_{k<n} psi^(k)(p0)/k! (p - p0)^k with the remainder estimate

        ||R_n(p)|| <= M L (2 ||p - p0||)^(n-1) / (n-1)!

    where M is the largest sampled ||psi^(n)|| on the ball of ``radius`` about
    p0 and L the length of the straight path from p0 to p.
    """

    center: Bicomplex
    coeffs: tuple
    order: int
    M: float
    radius: float
    samples: int = 0

    def evaluate(self, p: Bicomplex) -> Bicomplex:
        d = p - self.center
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = bic_mul(acc, d) + c
        return acc

    def path_length(self, p: Bicomplex) -> float:
        return bic_norm(p - self.center)

    def remainder_bound(self, p: Bicomplex) -> float:
        dist = self.path_length(p)
        if np.any(dist > self.radius * (1 + 1e-12)):
            raise ValueError("point lies outside the sampled ball")
        n = self.order
        return self.M * dist * (2 * dist) ** (n - 1) / math.factorial(n - 1)


def taylor_expand(psi: BicomplexFn, p0: Bicomplex, n: int, radius: float = 1.0, samples: int = 512,
                  seed: int = 0, check: bool = True) -> TaylorExpansion:
    if n < 1:
        raise ValueError("order must be at least 1")
    limit = ANALYTIC_MAX_ORDER if psi.nth is not None else FD_MAX_ORDER
    if n > limit:
        raise OrderTooHigh(f"order {n} exceeds {limit} for this function")
    if check and not derivative_report(psi, p0, samples=8).is_holomorphic:
        raise NotDifferentiable(f"{psi.name} is not holomorphic near the expansion point")
    coeffs = tuple(derivative_n(psi, p0, k).scale(1.0 / math.factorial(k)) for k in range(n))
    pts = ball_samples(p0, radius, samples, seed)
    # half of the samples pushed onto the sphere where the maximum usually sits
    d = pts - p0
    scale = np.where(np.arange(samples) % 2 == 0, radius / np.maximum(bic_norm(d), 1e-300), 1.0)
    pts = p0 + Bicomplex(d.a * scale, d.b * scale)
    if psi.nth is not None:
        M = float(np.max(bic_norm(psi.nth(pts, n))))
    else:
        M = max(bic_norm(derivative_n(psi, q, n)) for q in pts)
    return TaylorExpansion(p0, coeffs, n, M, radius, samples)


# ------------------------------------------------------------ twining number


def _relatively_singular(d: Bicomplex, tol=DEFAULT_TOL):
    # scale-free version of the singularity test, for differences p - p0
    return np.abs(d.a * d.a + d.b * d.b) <= tol * (np.abs(d.a) ** 2 + np.abs(d.b) ** 2)


def _check_curve(curve: Curve, p0: Bicomplex, samples: int):
    if not curve.closed:
        raise ValueError("the curve is not closed")
    d = curve.samples(samples) - p0
    bad = _relatively_singular(d)
    if np.any(bad):
        t = np.linspace(curve.r, curve.s, samples)[np.argmax(bad)]
        raise SingularOnCurve(f"p - p0 is singular on the curve near t={t:.6g}")


def _over_two_pi_j(x: Bicomplex) -> Bicomplex:
    # 1/(2 pi j) = (0, -1)/(2 pi); (0, -1) . (c, d) = (d, -c)
    return Bicomplex(x.b / TWO_PI, -x.a / TWO_PI)


@dataclass(frozen=True)
class TwiningNumber:
    """v = (m, -in) with m = (w1 - w2)/2 and n = (w1 + w2)/2.

    w1 and w2 are the ordinary winding numbers of a + ib about a0 + ib0 and of
    a - ib about a0 - ib0.  m and n are therefore integers when w1 and w2 have
    the same parity and half-integers otherwise.
    """

    windings: tuple
    raw: Bicomplex
    residual: float
    samples: int = CURVE_SAMPLES

    @property
    def m(self):
        w1, w2 = self.windings
        return (w1 - w2) // 2 if (w1 - w2) % 2 == 0 else (w1 - w2) / 2

    @property
    def n(self):
        w1, w2 = self.windings
        return (w1 + w2) // 2 if (w1 + w2) % 2 == 0 else (w1 + w2) / 2

    @property
    def integral(self) -> bool:
        return (self.windings[0] - self.windings[1]) % 2 == 0

    @property
    def value(self) -> Bicomplex:
        return Bicomplex(self.m, -1j * self.n)


def twining_number(curve: Curve, p0: Bicomplex, tol=1e-10, samples=CURVE_SAMPLES) -> TwiningNumber:
    """(1/(2 pi j)) . closed integral of dp/(p - p0), snapped to its winding pair."""
    _check_curve(curve, p0, samples)

    def integrand(t):
        return _bic_stack(bic_div(curve.tangent(t), curve(t) - p0, tol=0.0))

    val, _ = adaptive_gauss_legendre(integrand, curve.r, curve.s, tol, tol, curve.breakpoints)
    raw = _over_two_pi_j(Bicomplex(val[0], val[1]))
    # raw = (m, -in) -> w1 = n + m, w2 = n - m
    m_raw, n_raw = raw.a, 1j * raw.b
    w1, w2 = int(round((n_raw + m_raw).real)), int(round((n_raw - m_raw).real))
    v = TwiningNumber((w1, w2), raw, 0.0, samples)
    residual = bic_norm(raw - v.value)
    if residual > SNAP_THRESHOLD:
        raise NonIntegerResult(f"integral does not snap to a winding pair (residual {residual:.3e})", raw, residual)
    return TwiningNumber((w1, w2), raw, residual, samples)


# -------------------------------------------------------------------- Cauchy


def cauchy_theorem_check(psi: BicomplexFn, curve: Curve, surface: Surface | None = None, tol=1e-9,
                         cr_tol=1e-6, samples=64) -> float:
    """||closed integral of psi . dp||; with a surface, holomorphy on it is sampled first."""
    if surface is not None:
        _check_holomorphic_on(psi, surface, cr_tol, samples)
    return bic_norm(line_integral(psi, curve, tol))


def _check_holomorphic_on(psi, surface, cr_tol, samples, skip=None):
    n = max(2, int(math.sqrt(samples)))
    pts = surface.grid(n)
    for q in pts:
        if skip is not None and skip(q):
            continue
        rep = derivative_report(psi, q, samples=0)
        if rep.cr_residual > cr_tol * max(1.0, bic_norm(rep.value)):
            raise PreconditionUnverified(f"{psi.name} fails the CR equations on the surface at {q.quad()}")


@dataclass(frozen=True)
class CauchyResult:
    """``raw`` is (1/(2 pi j)) . closed integral of psi/(p - p0) . dp = psi(p0) . v.

    ``value`` is raw / v, i.e. psi(p0), when the twining number v is
    nonsingular; for v = (0, -i) it is (1/(2 pi i)) . closed integral.
    """

    raw: Bicomplex
    twining: TwiningNumber
    value: Optional[Bicomplex]
    surface_checked: bool
    samples: int


def cauchy_integral_formula(psi: BicomplexFn, curve: Curve, p0: Bicomplex, surface: Surface | None = None,
                            tol=1e-10, samples=CURVE_SAMPLES, cr_tol=1e-6) -> CauchyResult:
    """Evaluate the Cauchy integral and check the conditions it needs.

    The curve condition (p - p0 nonsingular on the curve) is always sampled.
    With a surface, psi must also pass the CR equations there, and p - p0 must
    stay nonsingular on it away from p0, which the surface may contain only if
    the twining number is nonzero.
    """
    v = twining_number(curve, p0, tol, samples)
    if surface is not None:
        d = surface.grid(32) - p0
        at_p0 = bic_norm(d) <= 1e-9
        if np.any(_relatively_singular(d) & ~at_p0):
            raise PreconditionUnverified("p - p0 is singular somewhere on the surface")
        if bool(np.any(at_p0)) != (v.m != 0 or v.n != 0):
            raise PreconditionUnverified("the surface contains p0 exactly when the twining number is nonzero"
                                         " - this surface does not")
        _check_holomorphic_on(psi, surface, cr_tol, 64, skip=lambda q: bic_norm(q - p0) <= 1e-9)

    def integrand(t):
        p = curve(t)
        return _bic_stack(bic_mul(bic_div(psi(p), p - p0, tol=0.0), curve.tangent(t)))

    val, _ = adaptive_gauss_legendre(integrand, curve.r, curve.s, tol, tol, curve.breakpoints)
    raw = _over_two_pi_j(Bicomplex(val[0], val[1]))
    value = None
    vv = v.value
    if not vv.is_singular():
        value = bic_div(raw, vv)
    return CauchyResult(raw, v, value, surface is not None, samples)


# ------------------------------------------------------- complex forms, Green


def complex_line_integral(phi1, phi2, curve: Curve, tol=1e-9) -> complex:
    """int phi1 da + phi2 db, through its real expansion in x, y, z, u."""

    def integrand(t):
        p = curve(t)
        dp = curve.tangent(t)
        w1, w2 = phi1(p.a, p.b), phi2(p.a, p.b)
        xi1, xi2, eta1, eta2 = np.real(w1), np.imag(w1), np.real(w2), np.imag(w2)
        dx, dy, dz, du = np.real(dp.a), np.imag(dp.a), np.real(dp.b), np.imag(dp.b)
        re = xi1 * dx - xi2 * dy + eta1 * dz - eta2 * du
        im = xi2 * dx + xi1 * dy + eta2 * dz + eta1 * du
        return re + 1j * im

    val, _ = adaptive_gauss_legendre(integrand, curve.r, curve.s, tol, tol, curve.breakpoints)
    return complex(val)


def _two_forms(surface: Surface, h, t):
    """The six coordinate two-forms dx_k dx_l pulled back to dh dt."""
    ph, pt = surface.partial_h(h, t), surface.partial_t(h, t)
    dh = (np.real(ph.a), np.imag(ph.a), np.real(ph.b), np.imag(ph.b))
    dt = (np.real(pt.a), np.imag(pt.a), np.real(pt.b), np.imag(pt.b))
    return {(k, l): dh[k] * dt[l] - dt[k] * dh[l] for k in range(4) for l in range(k + 1, 4)}


def surface_integral(density, surface: Surface, tol=1e-9):
    """int int density(h, t) dh dt over the parameter rectangle (nested adaptive Gauss-Legendre)."""

    def inner(hs):
        out = []
        for h in hs:
            val, _ = adaptive_gauss_legendre(lambda t: density(np.full_like(t, h), t), surface.t0, surface.t1,
                                             tol, tol)
            out.append(val)
        return np.array(out)

    val, _ = adaptive_gauss_legendre(inner, surface.h0, surface.h1, tol, tol)
    return val


def complex_surface_integral(phi, surface: Surface, tol=1e-9) -> complex:
    """int phi da db, with the complex measure assembled from the real two-forms:

        da db = (dx dz - dy du) + i (dx du + dy dz)
    """

    def density(h, t):
        p = surface(h, t)
        w = phi(p.a, p.b)
        xi1, xi2 = np.real(w), np.imag(w)
        f = _two_forms(surface, h, t)
        dxdz, dydu, dxdu, dydz = f[0, 2], f[1, 3], f[0, 3], f[1, 2]
        re = xi1 * dxdz - xi1 * dydu - xi2 * dxdu - xi2 * dydz
        im = xi1 * dxdu + xi1 * dydz + xi2 * dxdz - xi2 * dydu
        return re + 1j * im

    return complex(surface_integral(density, surface, tol))


def _vec_partials(f, a, b):
    """Real partials (fx, fy, fz, fu) of complex f(a, b) on arrays of points."""
    return complex_real_partials(f, a, b)


@dataclass(frozen=True)
class GreenResult:
    lhs: complex
    rhs: complex

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)


def green_sides(phi1, phi2, surface: Surface, tol=1e-10) -> GreenResult:
    """Boundary integral of phi1 da + phi2 db and surface integral of (d phi2/da - d phi1/db) da db."""
    lhs = complex_line_integral(phi1, phi2, surface.boundary(), tol)

    def curl(a, b):
        fx, fy, _, _ = _vec_partials(phi2, a, b)
        _, _, gz, gu = _vec_partials(phi1, a, b)
        return 0.5 * (fx - 1j * fy) - 0.5 * (gz - 1j * gu)

    rhs = complex_surface_integral(curl, surface, tol)
    return GreenResult(lhs, rhs)


def green_theorem_check(phi1, phi2, surface: Surface, tol=1e-10) -> float:
    return green_sides(phi1, phi2, surface, tol).residual


def stokes_sides(A, surface: Surface, tol=1e-10):
    """Real Stokes theorem in R^4 for a 1-form sum A_k dx_k.

    ``A`` is a function of (x, y, z, u) arrays returning the four real
    coefficients.  Returns (boundary integral, surface integral of the
    exterior derivative).
    """
    curve = surface.boundary()

    def line(t):
        p, dp = curve(t), curve.tangent(t)
        x = (np.real(p.a), np.imag(p.a), np.real(p.b), np.imag(p.b))
        dx = (np.real(dp.a), np.imag(dp.a), np.real(dp.b), np.imag(dp.b))
        coeffs = A(*x)
        return sum(c * d for c, d in zip(coeffs, dx))

    lhs, _ = adaptive_gauss_legendre(line, curve.r, curve.s, tol, tol, curve.breakpoints)

    def density(h, t):
        p = surface(h, t)
        x = [np.real(p.a), np.imag(p.a), np.real(p.b), np.imag(p.b)]
        step = 1e-4 * np.maximum(1.0, np.sqrt(sum(c * c for c in x)))
        # grad[k][l] = d A_l / d x_k
        grad = []
        for k in range(4):
            acc = [0.0] * 4
            for s, w in zip((-2, -1, 1, 2), (1, -8, 8, -1)):
                xs = list(x)
                xs[k] = x[k] + s * step
                vals = A(*xs)
                acc = [a + w * v for a, v in zip(acc, vals)]
            grad.append([a / (12 * step) for a in acc])
        forms = _two_forms(surface, h, t)
        return sum((grad[k][l] - grad[l][k]) * forms[k, l] for (k, l) in forms)

    rhs = surface_integral(density, surface, tol)
    return float(lhs), float(rhs)


@dataclass(frozen=True)
class ComponentIdentity:
    """One real component of the Green formula, checked two ways.

    ``reduced`` is the surface side written with the CR equations already
    applied; ``stokes`` is the full exterior derivative of the 1-form.
    """

    line: float
    reduced: float
    stokes: float

    @property
    def residual(self) -> float:
        return max(abs(self.line - self.reduced), abs(self.line - self.stokes))


def component_identities(phi1, phi2, surface: Surface, tol=1e-10):
    """The real and imaginary parts of the Green formula as separate R^4 identities."""

    def psi(x, y, z, u):
        a, b = x + 1j * y, z + 1j * u
        w1, w2 = phi1(a, b), phi2(a, b)
        return np.real(w1), np.imag(w1), np.real(w2), np.imag(w2)

    def reduced(part):
        def density(h, t):
            p = surface(h, t)
            fx = _vec_partials(phi2, p.a, p.b)[0]
            gz = _vec_partials(phi1, p.a, p.b)[2]
            c1 = np.real(fx) - np.real(gz)  # dx psi3 - dz psi1
            c2 = np.imag(fx) - np.imag(gz)  # dx psi4 - dz psi2
            f = _two_forms(surface, h, t)
            dxdz, dydu, dxdu, dydz = f[0, 2], f[1, 3], f[0, 3], f[1, 2]
            if part == 1:
                return c1 * dxdz - c1 * dydu - c2 * dxdu - c2 * dydz
            return c1 * dxdu + c1 * dydz + c2 * dxdz - c2 * dydu

        return float(surface_integral(density, surface, tol))

    def A1(x, y, z, u):
        p1, p2, p3, p4 = psi(x, y, z, u)
        return p1, -p2, p3, -p4

    def A2(x, y, z, u):
        p1, p2, p3, p4 = psi(x, y, z, u)
        return p2, p1, p4, p3

    out = []
    for part, A in ((1, A1), (2, A2)):
        line, stokes = stokes_sides(A, surface, tol)
        out.append(ComponentIdentity(line, reduced(part), stokes))
    return tuple(out)


# ------------------------------------------------------------ named families


def _const_like(t, value):
    return np.zeros_like(np.asarray(t, dtype=float)) + value


def double_circle(R=1.0, p0: Bicomplex = Bicomplex(0, 0)) -> Curve:
    """p0 + (R e^{it}, R e^{it})."""
    return Curve(lambda t: p0 + Bicomplex(R * np.exp(1j * t), R * np.exp(1j * t)), 0.0, TWO_PI,
                 lambda t: Bicomplex(1j * R * np.exp(1j * t), 1j * R * np.exp(1j * t)), name=f"double-circle(R={R})",
                 closed=True)


def twist(p0: Bicomplex = Bicomplex(0, 0)) -> Curve:
    """p0 + (e^{it} cos t, e^{it} sin t)."""

    def param(t):
        e = np.exp(1j * np.asarray(t))
        return p0 + Bicomplex(e * np.cos(t), e * np.sin(t))

    def deriv(t):
        e = np.exp(1j * np.asarray(t))
        return Bicomplex(e * (1j * np.cos(t) - np.sin(t)), e * (1j * np.sin(t) + np.cos(t)))

    return Curve(param, 0.0, TWO_PI, deriv, name="twist", closed=True)


def a_circle(R=1.0, p0: Bicomplex = Bicomplex(0, 0)) -> Curve:
    """p0 + (R e^{it}, 0): the complex unit circle in the a-plane."""
    return Curve(lambda t: p0 + Bicomplex(R * np.exp(1j * t), _const_like(t, 0)), 0.0, TWO_PI,
                 lambda t: Bicomplex(1j * R * np.exp(1j * t), _const_like(t, 0)), name=f"a-circle(R={R})", closed=True)


def j_circle(R=1.0, p0: Bicomplex = Bicomplex(0, 0)) -> Curve:
    """p0 + R (cos t, sin t) = p0 + R e^{jt}: a circle in the plane spanned by 1 and j."""
    return Curve(lambda t: p0 + Bicomplex(R * np.cos(t), R * np.sin(t)), 0.0, TWO_PI,
                 lambda t: Bicomplex(-R * np.sin(t), R * np.cos(t)), name=f"j-circle(R={R})", closed=True)


def segment(p1: Bicomplex, p2: Bicomplex) -> Curve:
    d = p2 - p1
    return Curve(lambda t: p1 + Bicomplex(d.a * np.asarray(t), d.b * np.asarray(t)), 0.0, 1.0,
                 lambda t: Bicomplex(_const_like(t, d.a), _const_like(t, d.b)), name="segment")


def disk_surface(p0: Bicomplex = Bicomplex(0, 0)) -> Surface:
    """p0 + (h e^{it} cos t, h e^{it} sin t), bounded by the twist curve."""

    def param(h, t):
        e = h * np.exp(1j * t)
        return p0 + Bicomplex(e * np.cos(t), e * np.sin(t))

    def d_h(h, t):
        e = np.exp(1j * t) + 0 * h
        return Bicomplex(e * np.cos(t), e * np.sin(t))

    def d_t(h, t):
        e = h * np.exp(1j * t)
        return Bicomplex(e * (1j * np.cos(t) - np.sin(t)), e * (1j * np.sin(t) + np.cos(t)))

    return Surface(param, 0.0, 1.0, 0.0, TWO_PI, d_h, d_t, "disk-surface")


def double_disk(R=1.0, p0: Bicomplex = Bicomplex(0, 0)) -> Surface:
    """p0 + (h R e^{it}, h R e^{it}), bounded by the double circle."""

    def param(h, t):
        e = h * R * np.exp(1j * t)
        return p0 + Bicomplex(e, e)

    def d_h(h, t):
        e = R * np.exp(1j * t) + 0 * h
        return Bicomplex(e, e)

    def d_t(h, t):
        e = 1j * h * R * np.exp(1j * t)
        return Bicomplex(e, e)

    return Surface(param, 0.0, 1.0, 0.0, TWO_PI, d_h, d_t, "double-disk")


def flat_patch(p0: Bicomplex = Bicomplex(0, 0), R=1.0, e1: Bicomplex = Bicomplex(1, 0),
               e2: Bicomplex = Bicomplex(0, 1)) -> Surface:
    """p0 + R (h e1 + t e2) on the unit square; the default is a = h, b = t."""

    def param(h, t):
        return p0 + Bicomplex(R * (h * e1.a + t * e2.a), R * (h * e1.b + t * e2.b))

    return Surface(param, 0.0, 1.0, 0.0, 1.0,
                   lambda h, t: Bicomplex(R * e1.a + 0 * h, R * e1.b + 0 * h),
                   lambda h, t: Bicomplex(R * e2.a + 0 * h, R * e2.b + 0 * h), "flat-patch")


# name -> (factory, declared parameters with defaults)
CURVES = {
    "double-circle": (double_circle, {"R": 1.0, "p0": Bicomplex(0, 0)}),
    "twist": (twist, {"p0": Bicomplex(0, 0)}),
    "a-circle": (a_circle, {"R": 1.0, "p0": Bicomplex(0, 0)}),
    "j-circle": (j_circle, {"R": 1.0, "p0": Bicomplex(0, 0)}),
}

SURFACES = {
    "disk-surface": (disk_surface, {"p0": Bicomplex(0, 0)}),
    "double-disk": (double_disk, {"R": 1.0, "p0": Bicomplex(0, 0)}),
    "flat-patch": (flat_patch, {"p0": Bicomplex(0, 0), "R": 1.0}),
}


def make_curve(name: str, **params) -> Curve:
    factory, declared = _lookup(CURVES, name, "curve")
    return factory(**_bind(declared, params, name))


def make_surface(name: str, **params) -> Surface:
    factory, declared = _lookup(SURFACES, name, "surface")
    return factory(**_bind(declared, params, name))


def _lookup(table, name, kind):
    try:
        return table[name]
    except KeyError:
        raise KeyError(f"unknown {kind} {name!r}; known: {', '.join(sorted(table))}") from None


def _bind(declared, params, name):
    unknown = set(params) - set(declared)
    if unknown:
        raise TypeError(f"{name} takes parameters {sorted(declared)}, got {sorted(unknown)}")
    return {**declared, **params}
