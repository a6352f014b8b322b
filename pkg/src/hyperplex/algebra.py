"""Pair-based arithmetic for quaternions, bicomplex numbers, octonions and tricomplex numbers.

Both Quaternion and Bicomplex store a pair of complex numbers ``(a, b)``
with ``a = x + iy`` and ``b = z + iu``.  They differ only in how the pair
multiplies:

    quaternion  (a, b) x (c, d) = (ac - b conj(d), b conj(c) + ad)
    bicomplex   (a, b) . (c, d) = (ac - bd, bc + ad)

Bicomplex fields may also hold numpy arrays of equal shape, in which case
every operation acts elementwise.  That is how curves and sample clouds are
evaluated in one call.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from numbers import Number

import numpy as np

from .errors import SingularNumber, ZeroNorm

DEFAULT_TOL = 1e-12

_VECTOR_RE = re.compile(
    r"^\s*(?P<x>\S+?)\s*\+\s*(?P<y>\S+?)i\s*\+\s*(?P<z>\S+?)j\s*\+\s*(?P<u>\S+?)k\s*$"
)


def _coerce(value):
    if np.ndim(value) == 0:
        return complex(value)
    return np.asarray(value, dtype=complex)


def _pack(re_part, im_part):
    # x + 1j*y would turn -0.0 into 0.0; assign the parts directly instead
    re_part, im_part = np.broadcast_arrays(np.asarray(re_part, float), np.asarray(im_part, float))
    out = np.empty(re_part.shape, dtype=complex)
    out.real, out.imag = re_part, im_part
    return out


def _vector_str(x, y, z, u):
    return f"{float(x)!r} + {float(y)!r}i + {float(z)!r}j + {float(u)!r}k"


def _parse_vector(text):
    m = _VECTOR_RE.match(text)
    if m is None:
        raise ValueError(f"not a vector form: {text!r}")
    return tuple(float(m.group(g)) for g in "xyzu")


# ---------------------------------------------------------------- quaternions


@dataclass(frozen=True)
class Quaternion:
    a: complex = 0j
    b: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))

    @classmethod
    def from_quad(cls, x, y, z, u):
        return cls(complex(x, y), complex(z, u))

    @classmethod
    def from_vector(cls, text):
        return cls.from_quad(*_parse_vector(text))

    def quad(self):
        return (self.a.real, self.a.imag, self.b.real, self.b.imag)

    def vector(self):
        """The ``x + yi + zj + uk`` form; parses back bit-exactly."""
        return _vector_str(*self.quad())

    def __add__(self, other):
        other = _as_quaternion(other)
        return Quaternion(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quaternion(other)
        return Quaternion(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _as_quaternion(other) - self

    def __neg__(self):
        return Quaternion(-self.a, -self.b)

    def __mul__(self, other):
        return quat_mul(self, _as_quaternion(other))

    def __rmul__(self, other):
        return quat_mul(_as_quaternion(other), self)

    def conj(self):
        return quat_conj(self)

    def square_norm(self):
        return quat_square_norm(self)

    def inverse(self):
        return quat_inverse(self)


def _as_quaternion(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, Number):
        return Quaternion(value, 0)
    return NotImplemented


def quat_mul(q: Quaternion, r: Quaternion) -> Quaternion:
    a, b, c, d = q.a, q.b, r.a, r.b
    return Quaternion(a * c - b * d.conjugate(), b * c.conjugate() + a * d)


def quat_conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.a.conjugate(), -q.b)


def quat_square_norm(q: Quaternion) -> float:
    x, y, z, u = q.quad()
    return x * x + y * y + z * z + u * u


def quat_inverse(q: Quaternion) -> Quaternion:
    n = quat_square_norm(q)
    if n == 0:
        raise ZeroNorm("the zero quaternion has no inverse")
    c = quat_conj(q)
    return Quaternion(c.a / n, c.b / n)


def quat_div(r: Quaternion, q: Quaternion, side: str = "left") -> Quaternion:
    """``side='left'`` gives q^-1 x r, ``side='right'`` gives r x q^-1."""
    inv = quat_inverse(q)
    if side == "left":
        return quat_mul(inv, r)
    if side == "right":
        return quat_mul(r, inv)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# ------------------------------------------------------------------ bicomplex


@dataclass(frozen=True, eq=False)
class Bicomplex:
    a: complex = 0j
    b: complex = 0j

    def __post_init__(self):
        a, b = _coerce(self.a), _coerce(self.b)
        if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
            a, b = np.broadcast_arrays(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_quad(cls, x, y, z, u):
        if all(np.ndim(v) == 0 for v in (x, y, z, u)):
            return cls(complex(x, y), complex(z, u))
        return cls(_pack(x, y), _pack(z, u))

    @classmethod
    def from_vector(cls, text):
        return cls.from_quad(*_parse_vector(text))

    @property
    def is_array(self):
        return isinstance(self.a, np.ndarray)

    @property
    def shape(self):
        return np.shape(self.a)

    def __len__(self):
        return len(self.a)

    def __getitem__(self, idx):
        return Bicomplex(self.a[idx], self.b[idx])

    def __iter__(self):
        for a, b in zip(self.a, self.b):
            yield Bicomplex(a, b)

    def quad(self):
        return (np.real(self.a), np.imag(self.a), np.real(self.b), np.imag(self.b))

    def pair(self):
        return (self.a, self.b)

    def vector(self):
        return _vector_str(*self.quad())

    def to_quaternion(self):
        return Quaternion(self.a, self.b)

    def __eq__(self, other):
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return NotImplemented
        return bool(np.all(self.a == other.a) and np.all(self.b == other.b))

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.is_array:
            return f"Bicomplex(a={self.a!r}, b={self.b!r})"
        return f"Bicomplex({self.a!r}, {self.b!r})"

    def __add__(self, other):
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return NotImplemented
        return Bicomplex(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return NotImplemented
        return Bicomplex(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Bicomplex(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return NotImplemented
        return bic_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return NotImplemented
        return bic_div(self, other)

    def __rtruediv__(self, other):
        other = _as_bicomplex(other)
        if other is NotImplemented:
            return NotImplemented
        return bic_div(other, self)

    def __pow__(self, n):
        if isinstance(n, (int, np.integer)):
            return bic_pow_int(self, int(n))
        return NotImplemented

    def scale(self, lam):
        """Multiply both components by the complex scalar ``lam``."""
        return Bicomplex(lam * self.a, lam * self.b)

    def conj(self):
        return bic_conj(self)

    def cn(self):
        return bic_cn(self)

    def norm(self):
        return bic_norm(self)

    def is_singular(self, tol=DEFAULT_TOL):
        return is_singular(self, tol)

    def inverse(self, tol=DEFAULT_TOL):
        return bic_inverse(self, tol)


def _as_bicomplex(value):
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, Number) or (isinstance(value, np.ndarray) and value.dtype.kind in "iufc"):
        return Bicomplex(value, 0)
    return NotImplemented


ONE = Bicomplex(1, 0)
ZERO = Bicomplex(0, 0)
I = Bicomplex(1j, 0)
J = Bicomplex(0, 1)
K = Bicomplex(0, 1j)


def bic_mul(q: Bicomplex, r: Bicomplex) -> Bicomplex:
    a, b, c, d = q.a, q.b, r.a, r.b
    return Bicomplex(a * c - b * d, b * c + a * d)


def bic_conj(q: Bicomplex) -> Bicomplex:
    """The bicomplex conjugate (a, -b)."""
    return Bicomplex(q.a, -q.b)


def bic_cn(q: Bicomplex):
    """Complex square norm a^2 + b^2, returned as a complex number (the bicomplex value is (cn, 0))."""
    return q.a * q.a + q.b * q.b


def is_singular(q: Bicomplex, tol: float = DEFAULT_TOL):
    scale = np.maximum(1.0, np.abs(q.a) ** 2 + np.abs(q.b) ** 2)
    flags = np.abs(bic_cn(q)) <= tol * scale
    return bool(flags) if np.ndim(flags) == 0 else flags


def _check_nonsingular(q, tol, what):
    flags = is_singular(q, tol)
    if np.any(flags):
        raise SingularNumber(f"{what}: {q!r} is singular" if not q.is_array else f"{what}: singular value encountered")


def bic_inverse(q: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    _check_nonsingular(q, tol, "no inverse")
    cn = bic_cn(q)
    return Bicomplex(q.a / cn, -q.b / cn)


def bic_div(r: Bicomplex, q: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    """r / q by the explicit formula ((ca + db), (da - cb)) / (a^2 + b^2)."""
    _check_nonsingular(q, tol, "division")
    a, b, c, d = q.a, q.b, r.a, r.b
    cn = a * a + b * b
    return Bicomplex((c * a + d * b) / cn, (d * a - c * b) / cn)


def bic_pow_int(q: Bicomplex, n: int) -> Bicomplex:
    if n < 0:
        return bic_pow_int(bic_inverse(q), -n)
    result = Bicomplex(np.ones_like(q.a), np.zeros_like(q.b)) if q.is_array else ONE
    base = q
    while n:
        if n & 1:
            result = bic_mul(result, base)
        n >>= 1
        if n:
            base = bic_mul(base, base)
    return result


def bic_norm(q: Bicomplex):
    return np.sqrt(np.abs(q.a) ** 2 + np.abs(q.b) ** 2) if q.is_array else math.hypot(abs(q.a), abs(q.b))


# ----------------------------------------------------------- octonion, tricomplex


@dataclass(frozen=True)
class Octonion:
    q: Quaternion = Quaternion()
    r: Quaternion = Quaternion()

    def __add__(self, other):
        return Octonion(self.q + other.q, self.r + other.r)

    def __sub__(self, other):
        return Octonion(self.q - other.q, self.r - other.r)

    def __mul__(self, other):
        return oct_mul(self, other)

    @classmethod
    def identity(cls):
        return cls(Quaternion(1, 0), Quaternion())


def oct_mul(m: Octonion, n: Octonion) -> Octonion:
    q, r, s, t = m.q, m.r, n.q, n.r
    return Octonion(quat_mul(q, s) - quat_mul(quat_conj(t), r), quat_mul(r, quat_conj(s)) + quat_mul(t, q))


@dataclass(frozen=True)
class Tricomplex:
    q: Bicomplex = ZERO
    r: Bicomplex = ZERO

    def __add__(self, other):
        return Tricomplex(self.q + other.q, self.r + other.r)

    def __sub__(self, other):
        return Tricomplex(self.q - other.q, self.r - other.r)

    def __mul__(self, other):
        return tri_mul(self, other)

    @classmethod
    def identity(cls):
        return cls(ONE, ZERO)


def tri_mul(m: Tricomplex, n: Tricomplex) -> Tricomplex:
    q, r, s, t = m.q, m.r, n.q, n.r
    return Tricomplex(q * s - t * r, r * s + t * q)
