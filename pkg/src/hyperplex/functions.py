"""Elementary bicomplex functions.

All functions accept scalar or array-valued Bicomplex arguments.  The closed
forms come from writing p = (a, b) and separating into complex parts, e.g.

    exp p = (e^a cos b, e^a sin b)
    cos p = (cos a cosh b, -sin a sinh b)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    ONE,
    Bicomplex,
    bic_div,
    bic_mul,
    bic_norm,
    bic_pow_int,
    is_singular,
)
from .errors import SingularNumber, ZeroInput

TWO_PI = 2.0 * math.pi


def _as_bic(value) -> Bicomplex:
    return value if isinstance(value, Bicomplex) else Bicomplex(value, 0)


def j_mul(p: Bicomplex) -> Bicomplex:
    """j . p = (-b, a)."""
    return Bicomplex(-p.b, p.a)


# ------------------------------------------------------------ exp and friends


def bic_exp(p: Bicomplex) -> Bicomplex:
    ea = np.exp(p.a)
    return Bicomplex(ea * np.cos(p.b), ea * np.sin(p.b))


def bic_cosh(p: Bicomplex) -> Bicomplex:
    return Bicomplex(np.cosh(p.a) * np.cos(p.b), np.sinh(p.a) * np.sin(p.b))


def bic_sinh(p: Bicomplex) -> Bicomplex:
    return Bicomplex(np.sinh(p.a) * np.cos(p.b), np.cosh(p.a) * np.sin(p.b))


def bic_tanh(p: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    return bic_div(bic_sinh(p), bic_cosh(p), tol)


def bic_cos(p: Bicomplex) -> Bicomplex:
    return Bicomplex(np.cos(p.a) * np.cosh(p.b), -np.sin(p.a) * np.sinh(p.b))


def bic_sin(p: Bicomplex) -> Bicomplex:
    return Bicomplex(np.sin(p.a) * np.cosh(p.b), np.cos(p.a) * np.sinh(p.b))


def bic_tan(p: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    return bic_div(bic_sin(p), bic_cos(p), tol)


@dataclass(frozen=True)
class PeriodLattice:
    """Lattice point (m, n).  ``exp_period`` is (im, n)2pi, ``trig_period`` is (m, in)2pi.

    Integer m, n give periods, but they are not all of them: e^w = 1 exactly
    when a + ib and a - ib both lie in 2 pi i Z, which also admits m and n
    that are both half-integers, e.g. (i pi, pi).  Such points are accepted.
    """

    m: float
    n: float

    def __post_init__(self):
        m2, n2 = 2 * self.m, 2 * self.n
        if m2 != int(m2) or n2 != int(n2) or (self.m + self.n) != int(self.m + self.n):
            raise ValueError("m and n must both be integers or both be half-integers")

    @classmethod
    def from_windings(cls, w1: int, w2: int) -> "PeriodLattice":
        """The lattice point with a + ib = 2 pi i w1 and a - ib = 2 pi i w2 for exp."""
        return cls((w1 - w2) / 2, (w1 + w2) / 2)

    @property
    def exp_period(self) -> Bicomplex:
        return Bicomplex(TWO_PI * 1j * self.m, TWO_PI * self.n)

    @property
    def trig_period(self) -> Bicomplex:
        return Bicomplex(TWO_PI * self.m, TWO_PI * 1j * self.n)


# ---------------------------------------------------------------- polynomials


def poly_eval(coeffs, p: Bicomplex) -> Bicomplex:
    """Evaluate d_n p^n + ... + d_0 with coefficients given lowest degree first."""
    if not coeffs:
        return p * 0
    acc = _as_bic(coeffs[-1])
    for d in reversed(coeffs[:-1]):
        acc = bic_mul(acc, p) + _as_bic(d)
    if p.is_array and not acc.is_array:
        acc = acc + p * 0
    return acc


@dataclass(frozen=True)
class HarmonicPolynomialPair:
    """p^n = (G_n(a, b), H_n(a, b)).

    ``G[i][j]`` is the integer coefficient of a^i b^j, likewise for ``H``.
    """

    degree: int
    G: tuple = field(repr=False)
    H: tuple = field(repr=False)

    def evaluate(self, a, b):
        def ev(table):
            total = 0j
            for i, row in enumerate(table):
                for j, c in enumerate(row):
                    if c:
                        total = total + c * a**i * b**j
            return total

        return ev(self.G), ev(self.H)


def harmonic_polys(n: int) -> HarmonicPolynomialPair:
    if n < 0:
        raise ValueError("degree must be non-negative")
    size = n + 1
    G = [[0] * size for _ in range(size)]
    H = [[0] * size for _ in range(size)]
    G[0][0] = 1
    for _ in range(n):
        # G' = a G - b H, H' = a H + b G
        G2 = [[0] * size for _ in range(size)]
        H2 = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                if G[i][j]:
                    G2[i + 1][j] += G[i][j]
                    H2[i][j + 1] += G[i][j]
                if H[i][j]:
                    H2[i + 1][j] += H[i][j]
                    G2[i][j + 1] -= H[i][j]
        G, H = G2, H2
    return HarmonicPolynomialPair(n, tuple(map(tuple, G)), tuple(map(tuple, H)))


def rational_eval(num, den, p: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    return bic_div(poly_eval(num, p), poly_eval(den, p), tol)


# ----------------------------------------------------------------- polar form


@dataclass(frozen=True)
class PolarForm:
    """q = (v, 0) . (cos w, sin w) with v the scale factor and w the complex argument.

    The intermediate quantities are kept for inspection.  ``degenerate`` is set
    when one of the two angle denominators vanished exactly, where the
    quadrant choice falls back to pi/2 or 3pi/2 by the numerator sign.
    """

    scale_factor: complex
    complex_argument: complex
    r: float
    y: float
    z: float
    u: float
    K: float
    L: float
    M: float
    N: float
    degenerate: bool = False

    def reconstruct(self) -> Bicomplex:
        v, w = self.scale_factor, self.complex_argument
        return Bicomplex(v * np.cos(w), v * np.sin(w))


def _quadrant_angle(num, den):
    # arctan(num/den) + n pi with n = 0 for den > 0 and n = 1 for den < 0,
    # pi/2 or 3pi/2 when den = 0: an angle in (-pi/2, 3pi/2]
    angle = np.arctan2(num, den)
    return np.where(angle <= -math.pi / 2, angle + TWO_PI, angle)


def polar_form(q: Bicomplex, tol: float = DEFAULT_TOL, branch_offset: float = 0.0) -> PolarForm:
    """Principal polar form with Re(w) in [branch_offset, branch_offset + 2pi)."""
    if np.any((q.a == 0) & (q.b == 0)):
        raise ZeroInput("the polar form of 0 is indeterminate")
    if np.any(is_singular(q, tol)):
        raise SingularNumber("singular numbers have no polar form")
    g, d = np.real(q.a), np.imag(q.a)
    e, h = np.real(q.b), np.imag(q.b)
    K = (g + h) ** 2 + (d - e) ** 2
    L = (g - h) ** 2 + (d + e) ** 2
    M = _quadrant_angle(d - e, g + h)
    N = _quadrant_angle(d + e, g - h)
    y = 0.5 * (M + N)
    z = 0.5 * (N - M)
    u = 0.25 * np.log(K / L)
    r = (K * L) ** 0.25
    z = branch_offset + np.mod(z - branch_offset, TWO_PI)
    z = np.where(z >= branch_offset + TWO_PI, z - TWO_PI, z)
    v = r * np.exp(1j * y)
    w = z + 1j * u
    degenerate = bool(np.any((g + h) == 0) or np.any((g - h) == 0))
    if np.ndim(v) == 0:
        v, w = complex(v), complex(w)
        r, y, z, u, K, L, M, N = (float(t) for t in (r, y, z, u, K, L, M, N))
    return PolarForm(v, w, r, y, z, u, K, L, M, N, degenerate)


def scale_factor(q: Bicomplex):
    return polar_form(q).scale_factor


def complex_argument(q: Bicomplex):
    return polar_form(q).complex_argument


# ------------------------------------------------------- logarithm and powers


def blog(q: Bicomplex, branch=(0, 0), tol: float = DEFAULT_TOL) -> Bicomplex:
    """blog q = (log sf(q) + i m 2pi, Ca(q) + n 2pi).  branch (0, 0) is Blog."""
    m, n = branch
    pf = polar_form(q, tol)
    return Bicomplex(np.log(pf.scale_factor) + 1j * m * TWO_PI, pf.complex_argument + n * TWO_PI)


def _integer_exponent(r: Bicomplex):
    if r.is_array or r.b != 0 or r.a.imag != 0:
        return None
    x = r.a.real
    return int(x) if x == int(x) else None


def bic_pow(q: Bicomplex, r, tol: float = DEFAULT_TOL) -> Bicomplex:
    """Generalized power q^r = e^(r . Blog q)."""
    r = _as_bic(r)
    n = _integer_exponent(r)
    if n is not None and n >= 0 and np.any(is_singular(q, tol)):
        return bic_pow_int(q, n)
    return bic_exp(bic_mul(r, blog(q, tol=tol)))


def bic_arccos(q: Bicomplex, sign: int = 1, tol: float = DEFAULT_TOL) -> Bicomplex:
    """arccos q = -j . blog(q +- sqrt(q^2 - 1)) on the principal branch."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s2 = bic_mul(q, q) - ONE
    if bic_norm(s2) <= tol * max(1.0, bic_norm(q) ** 2):
        root = Bicomplex(0, 0)
    elif is_singular(s2, tol):
        raise SingularNumber("q^2 - 1 is singular; its square root is undefined")
    else:
        root = bic_pow(s2, Bicomplex(0.5, 0), tol)
    w = q + root if sign == 1 else q - root
    lg = blog(w, tol=tol)
    return Bicomplex(lg.b, -lg.a)

