"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are printed at the end
of the pytest run (see conftest.py) or directly when this file is executed
as a script.
"""

import math

import numpy as np

from hyperplex import (
    Bicomplex,
    Octonion,
    Quaternion,
    bic_conj,
    bic_cosh,
    bic_exp,
    bic_mul,
    bic_norm,
    bic_pow,
    bic_sin,
    bic_sinh,
    bic_cos,
    blog,
    cauchy_integral_formula,
    check_fueter,
    check_laplace4,
    class_cr_residual,
    derivative_report,
    line_integral,
    oct_mul,
    quat_mul,
    quat_square_norm,
    taylor_expand,
    twining_number,
    to_argument_class,
)
from hyperplex.cli import run
from hyperplex.harmonic import default_samples
from hyperplex.integration import component_identities, double_circle, flat_patch, green_sides, twist
from hyperplex.registry import REGISTRY, get_function, holomorphic_names

RESULTS = {}
CASES = 10_000


def record(number, title, ok, detail):
    RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}"
    return ok


def _rel(x, y, scale):
    return float(np.max(bic_norm(x - y) / np.maximum(scale, 1.0)))


def _draw(rng, count, scale=10.0):
    v = rng.uniform(-scale, scale, size=(4, count))
    return Bicomplex(v[0] + 1j * v[1], v[2] + 1j * v[3])


# ------------------------------------------------------------------ 1 goldens


def test_1_worked_examples():
    j = Bicomplex(0, 1j)
    checks = {}
    checks["(0,i)^(0,i)"] = float(np.max(np.abs(np.array(bic_pow(j, j).quad()) - np.array(j.quad()))))
    want = Bicomplex(1j * math.pi / 2, math.pi / 2)
    checks["Blog(0,i)"] = float(np.max(np.abs(np.array(blog(j).quad()) - np.array(want.quad()))))
    checks["exp loop"] = bic_norm(line_integral(get_function("exp"), double_circle(1.0)))
    p0 = Bicomplex(0.3 - 0.2j, 1 + 0.5j)
    v = twining_number(twist(p0), p0)
    checks["twining snap"] = v.residual if v.value == Bicomplex(1, -1j) else math.inf
    res = cauchy_integral_formula(get_function("exp"), double_circle(1.0), Bicomplex(0, 0))
    checks["Cauchy W"] = bic_norm(res.value - Bicomplex(1, 0))
    x, y, z, u = 0.7, -0.4, 1.1, 0.25
    rsq = to_argument_class(get_function("square"), "q")
    rep = derivative_report(rsq, Bicomplex(complex(x, y), complex(z, u)), "q")
    target = Bicomplex(complex(2 * x, 2 * y), complex(2 * z, -2 * u))
    checks["regular square derivative"] = max(bic_norm(val - target) for val in rep.all_values)

    limits = {"(0,i)^(0,i)": 1e-10, "Blog(0,i)": 1e-12, "exp loop": 1e-8, "twining snap": 1e-8,
              "Cauchy W": 1e-8, "regular square derivative": 1e-7}
    bad = [k for k in limits if not checks[k] <= limits[k]]
    detail = ", ".join(f"{k} {checks[k]:.1e}" for k in limits)
    assert record(1, "worked-example goldens", not bad, detail), bad


# ------------------------------------------------------------------ 2 algebra


def test_2_algebraic_identities():
    rng = np.random.default_rng(2)
    worst = {}
    q, r, s = _draw(rng, CASES), _draw(rng, CASES), _draw(rng, CASES)
    nq, nr, ns = bic_norm(q), bic_norm(r), bic_norm(s)
    worst["commutativity"] = _rel(bic_mul(q, r), bic_mul(r, q), nq * nr)
    worst["associativity"] = _rel(bic_mul(bic_mul(q, r), s), bic_mul(q, bic_mul(r, s)), nq * nr * ns)
    worst["distributivity"] = _rel(bic_mul(q, r + s), bic_mul(q, r) + bic_mul(q, s), nq * (nr + ns))
    a = q.a
    zd = bic_mul(Bicomplex(a, 1j * a), Bicomplex(a, -1j * a))
    worst["zero divisors"] = float(np.max(bic_norm(zd) / np.maximum(np.abs(a) ** 2, 1.0)))
    cn = lambda p: p.a * p.a + p.b * p.b  # noqa: E731
    worst["CN multiplicative"] = float(np.max(np.abs(cn(bic_mul(q, r)) - cn(q) * cn(r))
                                              / np.maximum(nq**2 * nr**2, 1.0)))
    worst["conj over +"] = _rel(bic_conj(q + r), bic_conj(q) + bic_conj(r), nq + nr)
    worst["conj over product"] = _rel(bic_conj(bic_mul(q, r)), bic_mul(bic_conj(q), bic_conj(r)), nq * nr)
    worst["conj involution"] = _rel(bic_conj(bic_conj(q)), q, nq)

    ints = rng.integers(-9, 10, size=(CASES, 16))
    quat_worst = oct_worst = 0.0
    for row in ints:
        qa = Quaternion.from_quad(*row[:4])
        qb = Quaternion.from_quad(*row[4:8])
        n = quat_square_norm(quat_mul(qa, qb))
        quat_worst = max(quat_worst, abs(n - quat_square_norm(qa) * quat_square_norm(qb)) / max(n, 1.0))
        m = Octonion(qa, qb)
        o = Octonion(Quaternion.from_quad(*row[8:12]), Quaternion.from_quad(*row[12:]))
        lhs, rhs = oct_mul(oct_mul(m, m), o), oct_mul(m, oct_mul(m, o))
        lhs2, rhs2 = oct_mul(oct_mul(o, m), m), oct_mul(o, oct_mul(m, m))
        diff = max(_oct_gap(lhs, rhs), _oct_gap(lhs2, rhs2))
        oct_worst = max(oct_worst, diff)
    worst["quaternion norm"] = quat_worst
    worst["octonion alternation"] = oct_worst

    bad = [k for k, v in worst.items() if not v <= 1e-12]
    detail = f"{CASES} cases each, worst relative error {max(worst.values()):.1e}"
    assert record(2, "algebraic identity suites", not bad, detail), {k: worst[k] for k in bad}


def _oct_gap(m, n):
    return max(abs(x - y) for x, y in zip(m.q.quad() + m.r.quad(), n.q.quad() + n.r.quad()))


# ------------------------------------------------------------------ 3 CR


def test_3_cauchy_riemann():
    worst_native, weakest_control = 0.0, math.inf
    for name, entry in REGISTRY.items():
        pts = entry.sample_points(100, seed=3)
        res = max(class_cr_residual(entry.fn, p) for p in pts)
        if entry.control:
            if name in ("theta", "theta-q"):
                weakest_control = min(weakest_control, min(class_cr_residual(entry.fn, p) for p in pts))
        else:
            worst_native = max(worst_native, res)
    ok = worst_native <= 1e-7 and weakest_control >= 1e-2
    detail = f"worst native residual {worst_native:.1e} (<= 1e-7), smallest control residual {weakest_control:.2g} (>= 1e-2)"
    assert record(3, "CR-equation suite", ok, detail)


# ------------------------------------------------------------------ 4 derivatives


def test_4_derivative_equivalence():
    worst_pair = 0.0
    for name in holomorphic_names():
        entry = REGISTRY[name]
        for p in entry.sample_points(100, seed=4):
            vals = derivative_report(entry.fn, p, samples=0).all_values
            scale = max(1.0, bic_norm(vals[0]))
            gap = max(bic_norm(x - y) for x in vals for y in vals) / scale
            worst_pair = max(worst_pair, gap)
    worst_table = 0.0
    for p in REGISTRY["exp"].sample_points(100, seed=5):
        for fn, want in (("exp", bic_exp), ("cosh", bic_sinh), ("sinh", bic_cosh), ("sin", bic_cos),
                         ("cos", lambda q: -bic_sin(q))):
            val = derivative_report(get_function(fn), p, samples=0).value
            worst_table = max(worst_table, bic_norm(val - want(p)))
    ok = worst_pair <= 1e-6 and worst_table <= 1e-7
    detail = f"worst pairwise gap {worst_pair:.1e} (<= 1e-6), worst table error {worst_table:.1e} (<= 1e-7)"
    assert record(4, "derivative equivalence", ok, detail)


# ------------------------------------------------------------------ 5 Taylor


def _taylor_errors(order):
    exp = get_function("exp")
    ex = taylor_expand(exp, Bicomplex(0, 0), order, radius=1.0)
    rng = np.random.default_rng(5)
    v = rng.normal(size=(4, 2000))
    v /= np.linalg.norm(v, axis=0)
    v *= np.where(np.arange(2000) % 2 == 0, 1.0, rng.uniform(size=2000) ** 0.25)
    pts = Bicomplex(v[0] + 1j * v[1], v[2] + 1j * v[3])
    err = bic_norm(ex.evaluate(pts) - exp(pts))
    bound = np.array([ex.remainder_bound(p) for p in pts])
    return err, bound


def test_5_taylor():
    # twelve terms, degree <= 11; the degree-12 sum is reported alongside
    err, bound = _taylor_errors(12)
    err13, _ = _taylor_errors(13)
    dominated = bool(np.all(err <= bound))
    ok = float(err.max()) <= 1e-9 and dominated
    detail = (f"max error on ||p|| <= 1 is {err.max():.2e} with 12 terms and {err13.max():.2e} with 13 (target 1e-9); "
              f"bound dominates at all {err.size} points: {dominated}")
    assert record(5, "Taylor partial sum of exp", ok, detail)


def test_5b_taylor_bound_dominates():
    err, bound = _taylor_errors(12)
    assert np.all(err <= bound)


# ------------------------------------------------------------------ 6 Green


def _random_poly(rng):
    """A random polynomial of degree <= 3 in a and b with complex coefficients."""
    terms = [(i, k) for i in range(4) for k in range(4 - i)]
    coef = rng.normal(size=len(terms)) + 1j * rng.normal(size=len(terms))
    return lambda a, b: sum(c * a**i * b**k for c, (i, k) in zip(coef, terms))


def test_6_green_stokes():
    rng = np.random.default_rng(6)
    worst_green = worst_parts = 0.0
    for _ in range(6):
        p0 = Bicomplex(complex(*rng.uniform(-1, 1, 2)), complex(*rng.uniform(-1, 1, 2)))
        e1 = Bicomplex(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        e2 = Bicomplex(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        s = flat_patch(p0, 0.7, e1, e2)
        phi1, phi2 = _random_poly(rng), _random_poly(rng)
        worst_green = max(worst_green, green_sides(phi1, phi2, s).residual)
        worst_parts = max(worst_parts, *(c.residual for c in component_identities(phi1, phi2, s)))
    ok = worst_green <= 1e-6 and worst_parts <= 1e-6
    detail = f"Green residual {worst_green:.1e}, component identities {worst_parts:.1e} (<= 1e-6)"
    assert record(6, "Green/Stokes on flat patches", ok, detail)


# ------------------------------------------------------------------ 7 Fueter


def test_7_fueter_laplace():
    E = get_function("E")
    pts = list(default_samples(20, 7))
    fueter = max(check_fueter(E, p) for p in pts)
    lap = max(check_laplace4(E, p).residual for p in pts)
    quadsq = get_function("quadsq")
    eight = max(abs(check_laplace4(quadsq, p).residual - 8) for p in pts)
    ok = fueter <= 1e-7 and lap <= 1e-5 and eight <= 1e-5
    detail = f"Fueter {fueter:.1e} (<= 1e-7), Laplace {lap:.1e} (<= 1e-5), |Laplace(quadsq) - 8| {eight:.1e} (<= 1e-5)"
    assert record(7, "Fueter/Laplace chain", ok, detail)


# ------------------------------------------------------------------ 8 CLI


GOLDEN_COMMANDS = [
    ["eval", "--fn", "exp", "--point", "0"],
    ["eval", "--fn", "pow-j", "--point", "(0),(i)"],
    ["eval", "--fn", "blog", "--point", "(0),(i)"],
    ["integrate", "--fn", "exp", "--curve", "double-circle"],
    ["twine", "--curve", "twist"],
    ["cauchy", "--fn", "exp", "--curve", "double-circle"],
    ["diff", "--fn", "square@q", "--point", "(0.7-0.4i),(1.1+0.25i)"],
    ["taylor", "--fn", "exp", "--point", "(0.5+0.1i),(0.3-0.2i)"],
    ["classify", "--fn", "E"],
    ["green", "--fn", "cube", "--surface", "flat-patch"],
]


def test_8_cli_determinism():
    unstable = []
    for argv in GOLDEN_COMMANDS:
        outs = {run(argv)[0].to_json() for _ in range(3)}
        codes = {run(argv)[1]}
        if len(outs) != 1 or codes != {0}:
            unstable.append(" ".join(argv[:1]))
    ok = not unstable
    detail = f"{len(GOLDEN_COMMANDS)} golden commands x 3 runs, byte-identical: {ok}"
    assert record(8, "CLI determinism", ok, detail), unstable


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
    for k in sorted(RESULTS):
        print(RESULTS[k])
