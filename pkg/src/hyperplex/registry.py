"""Named bicomplex functions used by the CLI and the test suites.

Every entry carries a sampling domain: a ball on which the function is
evaluable, free of poles and of the principal-branch cuts of Blog.  Entries
marked ``control`` are deliberately non-holomorphic.

Names may carry an argument-class suffix, ``exp@q`` meaning exp(a, b*).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Bicomplex, bic_pow_int
from .calculus import ALL_CLASSES, ArgClass, BicomplexFn, ball_samples, constant
from .functions import (
    bic_cos,
    bic_cosh,
    bic_exp,
    bic_pow,
    bic_sin,
    bic_sinh,
    bic_tan,
    bic_tanh,
    blog,
    poly_eval,
)
from .harmonic import to_argument_class


@dataclass(frozen=True)
class RegistryEntry:
    fn: BicomplexFn
    center: Bicomplex = Bicomplex(0, 0)
    radius: float = 1.0
    control: bool = False
    description: str = ""

    def sample_points(self, count: int, seed: int = 0) -> Bicomplex:
        return ball_samples(self.center, self.radius, count, seed)


def _zeros(p):
    return Bicomplex(0 * p.a, 0 * p.b)


def _cycle(funcs):
    # derivative tables that repeat with period len(funcs)
    def nth(p, k):
        sign, f = funcs[k % len(funcs)]
        v = f(p)
        return Bicomplex(sign * v.a, sign * v.b)

    return nth


def _poly(coeffs, name):
    coeffs = [c if isinstance(c, Bicomplex) else Bicomplex(c, 0) for c in coeffs]

    def nth(p, k):
        if k >= len(coeffs):
            return _zeros(p)
        dc = [c.scale(math.perm(i + k, k)) for i, c in enumerate(coeffs[k:])]
        return poly_eval(dc, p) + _zeros(p)

    return BicomplexFn(name, lambda p: poly_eval(coeffs, p) + _zeros(p), nth=nth)


def _inverse_nth(p, k):
    return bic_pow_int(p, -(k + 1)).scale((-1) ** k * math.factorial(k))


def _blog_nth(p, k):
    if k == 0:
        return blog(p)
    return bic_pow_int(p, -k).scale((-1) ** (k - 1) * math.factorial(k - 1))


_LOG_CENTER = Bicomplex(0, 1j)  # Re Ca = pi/2 here, far from the principal cuts
_POW_EXPONENT = Bicomplex(0, 1j)


def _build():
    exp = BicomplexFn("exp", bic_exp, nth=lambda p, k: bic_exp(p))
    cosh = BicomplexFn("cosh", bic_cosh, nth=_cycle([(1, bic_cosh), (1, bic_sinh)]))
    sinh = BicomplexFn("sinh", bic_sinh, nth=_cycle([(1, bic_sinh), (1, bic_cosh)]))
    cos = BicomplexFn("cos", bic_cos, nth=_cycle([(1, bic_cos), (-1, bic_sin), (-1, bic_cos), (1, bic_sin)]))
    sin = BicomplexFn("sin", bic_sin, nth=_cycle([(1, bic_sin), (1, bic_cos), (-1, bic_sin), (-1, bic_cos)]))
    entries = [
        RegistryEntry(exp, description="e^p"),
        RegistryEntry(cosh, description="hyperbolic cosine"),
        RegistryEntry(sinh, description="hyperbolic sine"),
        RegistryEntry(BicomplexFn("tanh", bic_tanh), radius=0.5, description="sinh/cosh"),
        RegistryEntry(cos, description="cosine"),
        RegistryEntry(sin, description="sine"),
        RegistryEntry(BicomplexFn("tan", bic_tan), radius=0.5, description="sin/cos"),
        RegistryEntry(_poly([0, 1], "identity"), description="p"),
        RegistryEntry(_poly([0, 0, 1], "square"), description="p^2"),
        RegistryEntry(_poly([0, 0, 0, 1], "cube"), description="p^3"),
        RegistryEntry(_poly([Bicomplex(1, 0), Bicomplex(0, 2j), Bicomplex(-1, 1), 0, Bicomplex(0.5, 0)], "poly4"),
                      description="1 + (0,2i)p + (-1,1)p^2 + p^4/2"),
        RegistryEntry(BicomplexFn("inverse", lambda p: bic_pow_int(p, -1), nth=_inverse_nth),
                      center=Bicomplex(1, 0), radius=0.4, description="1/p"),
        RegistryEntry(BicomplexFn("blog", blog, nth=_blog_nth), center=_LOG_CENTER, radius=0.3,
                      description="principal logarithm Blog p"),
        RegistryEntry(BicomplexFn("sqrt", lambda p: bic_pow(p, Bicomplex(0.5, 0))), center=_LOG_CENTER,
                      radius=0.3, description="principal square root p^(1/2)"),
        RegistryEntry(BicomplexFn("pow-j", lambda p: bic_pow(p, _POW_EXPONENT)), center=_LOG_CENTER,
                      radius=0.3, description="principal power p^(0,i)"),
        RegistryEntry(constant(Bicomplex(0, 0), "zero"), description="0"),
        RegistryEntry(constant(Bicomplex(1, 0), "one"), description="1"),
        RegistryEntry(BicomplexFn("theta", lambda p: Bicomplex(p.a**2, p.b**2)), control=True,
                      description="(a^2, b^2), not holomorphic"),
        RegistryEntry(BicomplexFn("theta-q", lambda p: Bicomplex(p.a**2, np.conj(p.b) ** 2), "q"), control=True,
                      description="(a^2, (b*)^2), not of class q"),
        RegistryEntry(BicomplexFn("quadsq", lambda p: Bicomplex(np.abs(p.a) ** 2 + np.abs(p.b) ** 2 + 0j, 0 * p.b)),
                      control=True, description="(|a|^2 + |b|^2, 0), Laplacian 8"),
    ]
    table = {e.fn.name: e for e in entries}
    table["E"] = RegistryEntry(to_argument_class(exp, "q"), description="exp(a, b*), Fueter regular")
    return table


REGISTRY: dict[str, RegistryEntry] = _build()


def holomorphic_names() -> list[str]:
    """Base (class p, non-control) entries."""
    return [n for n, e in REGISTRY.items() if not e.control and e.fn.arg_class == ALL_CLASSES[0]]


def get_entry(name: str) -> RegistryEntry:
    base, _, cls = name.partition("@")
    try:
        entry = REGISTRY[base]
    except KeyError:
        raise KeyError(f"unknown function {base!r}; known: {', '.join(sorted(REGISTRY))}") from None
    if not cls:
        return entry
    fn = to_argument_class(entry.fn, cls)
    return RegistryEntry(fn, ArgClass.parse(cls).transform(entry.center), entry.radius, entry.control,
                         entry.description)


def get_function(name: str) -> BicomplexFn:
    return get_entry(name).fn
