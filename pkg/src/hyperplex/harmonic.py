"""Fueter operators, regular functions and the eight argument classes.

With the Cauchy-Riemann operators D_a = dx + i dy and D_b = dz + i du the
quaternionic operator L_q = (D_a, D_b) acts on psi = (phi1, phi2) through
quaternion multiplication:

    L_q x psi  = (D_a phi1 - D_b phi2*, D_b phi1* + D_a phi2)
    L_q* x psi = (D_a* phi1 + D_b phi2*, -D_b phi1* + D_a* phi2)

psi is regular when L_q x psi = 0 (Fueter) and conjugate regular when
L_q* x psi = 0 (Lanczos).  Both factor the four-dimensional Laplacian.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import Bicomplex, Quaternion, bic_norm, quat_mul
from .calculus import (
    ALL_CLASSES,
    ArgClass,
    BicomplexFn,
    DerivativeReport,
    _safe_eval,
    ball_samples,
    class_cr_residual,
    derivative_report,
    real_partials,
)
from .errors import NotDifferentiable

MEMBERSHIP_THRESHOLD = 1e-6


class OperatorKind(enum.Enum):
    D_A = "D_a"
    D_A_CONJ = "D_a*"
    D_B = "D_b"
    D_B_CONJ = "D_b*"
    L_Q = "L_q"
    L_Q_CONJ = "L_q*"
    LAPLACE2 = "Δ₂"
    LAPLACE4 = "Δ₄"

    @classmethod
    def parse(cls, tag):
        if isinstance(tag, cls):
            return tag
        aliases = {"lap2": "Δ₂", "lap4": "Δ₄", "laplace2": "Δ₂", "laplace4": "Δ₄"}
        return cls(aliases.get(tag, tag))


# ------------------------------------------------------------------- stencils


_SECOND = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_OFFS = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])


def _laplace_step(p: Bicomplex) -> float:
    return 1e-3 * max(1.0, bic_norm(p))


def _second_partials(psi: BicomplexFn, p: Bicomplex, h=None):
    """(dxx psi, dyy psi, dzz psi, duu psi) from five-point stencils."""
    h = _laplace_step(p) if h is None else h
    offs = _OFFS * h
    zeros = np.zeros(5)
    da = np.concatenate([offs, 1j * offs, zeros, zeros])
    db = np.concatenate([zeros, zeros, offs, 1j * offs])
    vals = _safe_eval(psi, Bicomplex(p.a + da, p.b + db), psi.name)
    out = []
    for k in range(4):
        sl = slice(5 * k, 5 * k + 5)
        out.append(Bicomplex(_SECOND @ vals.a[sl] / h**2, _SECOND @ vals.b[sl] / h**2))
    return tuple(out)


def _scalar_as_fn(f):
    return BicomplexFn("map", lambda p: Bicomplex(f(p.a, p.b), 0 * p.a))


def _d_ops(X, Y, Z, U):
    """D_a, D_a*, D_b, D_b* applied to both components, each as a Bicomplex."""
    return (
        Bicomplex(X.a + 1j * Y.a, X.b + 1j * Y.b),
        Bicomplex(X.a - 1j * Y.a, X.b - 1j * Y.b),
        Bicomplex(Z.a + 1j * U.a, Z.b + 1j * U.b),
        Bicomplex(Z.a - 1j * U.a, Z.b - 1j * U.b),
    )


def _lq(parts, conjugate=False):
    Da, Da_c, Db, Db_c = _d_ops(*parts)
    # D_b(f*) = (D_b* f)*
    Db_of_conj1 = np.conj(Db_c.a)
    Db_of_conj2 = np.conj(Db_c.b)
    if not conjugate:
        return Bicomplex(Da.a - Db_of_conj2, Db_of_conj1 + Da.b)
    return Bicomplex(Da_c.a + Db_of_conj2, -Db_of_conj1 + Da_c.b)


def apply_operator(kind, target, point, h=None):
    """Apply a differential operator at a point.

    ``target`` is a BicomplexFn (result: Bicomplex) or a complex map f(a, b)
    (result: complex, using the first component).  ``point`` is a Bicomplex.
    """
    kind = OperatorKind.parse(kind)
    scalar = not isinstance(target, BicomplexFn)
    psi = _scalar_as_fn(target) if scalar else target
    if kind in (OperatorKind.LAPLACE2, OperatorKind.LAPLACE4):
        xx, yy, zz, uu = _second_partials(psi, point, h)
        out = xx + yy if kind is OperatorKind.LAPLACE2 else xx + yy + zz + uu
    else:
        parts = real_partials(psi, point, h)
        if kind is OperatorKind.L_Q:
            out = _lq(parts)
        elif kind is OperatorKind.L_Q_CONJ:
            out = _lq(parts, conjugate=True)
        else:
            Da, Da_c, Db, Db_c = _d_ops(*parts)
            out = {OperatorKind.D_A: Da, OperatorKind.D_A_CONJ: Da_c, OperatorKind.D_B: Db,
                   OperatorKind.D_B_CONJ: Db_c}[kind]
    return complex(out.a) if scalar else out


def operator_fn(kind, psi: BicomplexFn, h=None) -> BicomplexFn:
    """The function p -> (kind psi)(p), evaluated pointwise by stencils."""
    kind = OperatorKind.parse(kind)
    return BicomplexFn(f"{kind.value}[{psi.name}]", lambda p: apply_operator(kind, psi, p, h), vectorized=False)


# ---------------------------------------------------------------------- Fueter


def fueter_residuals(psi: BicomplexFn, point: Bicomplex, h=None, conjugate=False) -> dict:
    """The Fueter (or Lanczos) system at a point in complex, real and quaternion-vector form."""
    X, Y, Z, U = real_partials(psi, point, h)
    L = _lq((X, Y, Z, U), conjugate)
    d = [(np.real(P.a), np.imag(P.a), np.real(P.b), np.imag(P.b)) for P in (X, Y, Z, U)]
    (x1, x2, x3, x4), (y1, y2, y3, y4), (z1, z2, z3, z4), (u1, u2, u3, u4) = d
    if not conjugate:
        r4 = (x1 - y2 - z3 - u4, x2 + y1 + z4 - u3, x3 - y4 + z1 + u2, x4 + y3 - z2 + u1)
    else:
        r4 = (x1 + y2 + z3 + u4, x2 - y1 - z4 + u3, x3 + y4 - z1 - u2, x4 - y3 + z2 - u1)
    # dx psi + i x dy psi + j x dz psi + k x du psi with quaternion products
    units = (Quaternion(1, 0), Quaternion(1j, 0), Quaternion(0, 1), Quaternion(0, 1j))
    if conjugate:
        units = tuple(u.conj() for u in units)
    vec = Quaternion(0, 0)
    for unit, P in zip(units, (X, Y, Z, U)):
        vec = vec + quat_mul(unit, Quaternion(P.a, P.b))
    return {"c2": (abs(L.a), abs(L.b)), "value": L, "r4": r4, "vector": Bicomplex(vec.a, vec.b)}


def _audited(res, psi):
    L = res["value"]
    e1, e2, e3, e4 = res["r4"]
    gap = max(bic_norm(Bicomplex(e1 + 1j * e2, e3 + 1j * e4) - L), bic_norm(res["vector"] - L))
    residual = max(res["c2"])
    if gap > 1e-9 * max(1.0, residual):
        raise AssertionError(f"complex and real forms of the Fueter system disagree by {gap:.3e} for {psi.name}")
    return residual


def check_fueter(psi: BicomplexFn, point: Bicomplex, h=None) -> float:
    """max(|D_a phi1 - D_b phi2*|, |D_b phi1* + D_a phi2|), audited against the real form."""
    return _audited(fueter_residuals(psi, point, h), psi)


def check_conjugate_fueter(psi: BicomplexFn, point: Bicomplex, h=None) -> float:
    """max(|D_a* phi1 + D_b phi2*|, |D_a* phi2 - D_b phi1*|), audited against the real form."""
    return _audited(fueter_residuals(psi, point, h, conjugate=True), psi)


# -------------------------------------------------------------------- classes


def to_argument_class(psi: BicomplexFn, arg_class) -> BicomplexFn:
    """psi precomposed with the class's coordinate pattern, e.g. class q gives psi(a, b*)."""
    cls = ArgClass.parse(arg_class)
    if psi.arg_class != ArgClass():
        raise ValueError(f"{psi.name} is already of class {psi.arg_class.name}")
    if cls == ArgClass():
        return psi
    nth = None
    if psi.nth is not None:
        base_nth = psi.nth

        def nth(p, k):
            return base_nth(cls.transform(p), k)

    return BicomplexFn(f"{psi.name}@{cls.name}", lambda p: psi(cls.transform(p)), cls, nth, psi.vectorized)


def check_class_cr(psi: BicomplexFn, arg_class, point: Bicomplex, h=None) -> float:
    return class_cr_residual(psi, point, arg_class, h)


def regular_derivative(psi: BicomplexFn, point: Bicomplex, conjugate: bool = False, tol=1e-6,
                       h=None) -> DerivativeReport:
    """Derivative with respect to q = (a, b*), or q* = (a*, -b*) when ``conjugate``."""
    cls = ArgClass.parse("s∪" if conjugate else "q")
    rep = derivative_report(psi, point, cls, h, tol, samples=0)
    if rep.cr_residual > tol * max(1.0, bic_norm(rep.value)):
        kind = "conjugate regular" if conjugate else "regular"
        raise NotDifferentiable(f"{psi.name} is not {kind} here (residual {rep.cr_residual:.3e})")
    return rep


# -------------------------------------------------------------------- Laplace


@dataclass(frozen=True)
class LaplaceResult:
    """||Delta_4 psi|| plus the complexified two-dimensional residuals of phi1 and phi2."""

    value: Bicomplex
    residual: float
    c2_phi1: float
    c2_phi2: float


def _complex_second(psi, p, h, conj_a, conj_b):
    # (d^2/da^2 + d^2/db^2) phi with Wirtinger second derivatives:
    # d^2/da^2 = (dxx - dyy -+ 2i dxy)/4
    h = _laplace_step(p) if h is None else h
    xx, yy, zz, uu = _second_partials(psi, p, h)

    def mixed(shift1, shift2):
        acc = Bicomplex(0, 0)
        for s1 in (1, -1):
            for s2 in (1, -1):
                q = Bicomplex(p.a + s1 * h * shift1[0] + s2 * h * shift2[0], p.b + s1 * h * shift1[1] + s2 * h * shift2[1])
                acc = acc + _safe_eval(psi, q, psi.name).scale(s1 * s2)
        return acc.scale(1 / (4 * h * h))

    xy = mixed((1, 0), (1j, 0))
    zu = mixed((0, 1), (0, 1j))
    sa = 1 if conj_a else -1
    sb = 1 if conj_b else -1
    daa = (xx - yy + xy.scale(2j * sa)).scale(0.25)
    dbb = (zz - uu + zu.scale(2j * sb)).scale(0.25)
    return daa + dbb


def check_laplace4(psi: BicomplexFn, point: Bicomplex, h=None) -> LaplaceResult:
    value = apply_operator(OperatorKind.LAPLACE4, psi, point, h)
    cls = psi.arg_class
    c2 = _complex_second(psi, point, h, cls.conj_a, cls.conj_b)
    return LaplaceResult(value, bic_norm(value), abs(c2.a), abs(c2.b))


def laplace_factorization_residual(psi: BicomplexFn, point: Bicomplex, h=1e-3) -> float:
    """||Delta_4 psi - L_q*(L_q psi)|| with nested first-order stencils."""
    lap = apply_operator(OperatorKind.LAPLACE4, psi, point)
    inner = operator_fn(OperatorKind.L_Q, psi, h)
    nested = apply_operator(OperatorKind.L_Q_CONJ, inner, point, h)
    return bic_norm(lap - nested)


# ------------------------------------------------------------------ classify


@dataclass(frozen=True)
class ClassReport:
    name: str
    class_residuals: dict
    fueter_residual: float
    conj_fueter_residual: float
    laplace4_residual: float
    samples: int
    threshold: float = MEMBERSHIP_THRESHOLD
    note: str = "sampled, not proven"

    @property
    def members(self):
        return [k for k, v in self.class_residuals.items() if v <= self.threshold]

    @property
    def regular(self):
        return self.fueter_residual <= self.threshold

    @property
    def conjugate_regular(self):
        return self.conj_fueter_residual <= self.threshold


def default_samples(count=8, seed=7) -> Bicomplex:
    return ball_samples(Bicomplex(0.2 + 0.1j, -0.3 + 0.2j), 0.6, count, seed)


def classify(psi: BicomplexFn, sample_points=None, threshold=MEMBERSHIP_THRESHOLD) -> ClassReport:
    pts = default_samples() if sample_points is None else sample_points
    if isinstance(pts, Bicomplex):
        pts = list(pts) if pts.is_array else [pts]
    residuals = {cls.name: 0.0 for cls in ALL_CLASSES}
    fueter = conj_fueter = lap = 0.0
    for p in pts:
        for cls in ALL_CLASSES:
            residuals[cls.name] = max(residuals[cls.name], class_cr_residual(psi, p, cls))
        fueter = max(fueter, check_fueter(psi, p))
        conj_fueter = max(conj_fueter, check_conjugate_fueter(psi, p))
        lap = max(lap, check_laplace4(psi, p).residual)
    return ClassReport(psi.name, residuals, fueter, conj_fueter, lap, len(pts), threshold)
