import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperplex import (
    ONE,
    ZERO,
    ArgClass,
    Bicomplex,
    BicomplexFn,
    EvaluationFailure,
    NotDifferentiable,
    OrderTooHigh,
    SingularNumber,
    bic_cos,
    bic_cosh,
    bic_exp,
    bic_inverse,
    bic_norm,
    bic_pow_int,
    bic_sin,
    bic_sinh,
    check_bicomplex_cr,
    class_cr_residual,
    constant,
    derivative_c2,
    derivative_limit,
    derivative_n,
    derivative_report,
    partial_a,
    partial_a_conj,
    partial_b,
    partial_b_conj,
    singular_direction_residual,
)
from hyperplex.calculus import ALL_CLASSES, derivative_blog, wirtinger
from hyperplex.registry import REGISTRY, get_entry, get_function, holomorphic_names

from .helpers import ball_bicomplex, close

exp = get_function("exp")
square = get_function("square")
cube = get_function("cube")
theta = get_function("theta")
P0 = Bicomplex(0.3 - 0.2j, 0.5 + 0.1j)


def no_nth(fn: BicomplexFn) -> BicomplexFn:
    """The same function without analytic derivatives, forcing finite differences."""
    return BicomplexFn(fn.name + "-fd", fn.func)


class TestPartials:
    a, b = 0.7 - 0.3j, -0.2 + 1.1j

    def test_polynomial(self):
        assert abs(partial_a(lambda a, b: a * a, self.a, self.b) - 2 * self.a) < 1e-8

    def test_mixed(self):
        assert abs(partial_b(lambda a, b: a * np.sin(b), self.a, self.b) - self.a * np.cos(self.b)) < 1e-8

    def test_conjugate_coordinate(self):
        f = lambda a, b: np.conj(a)  # noqa: E731
        assert abs(partial_a(f, self.a, self.b)) < 1e-8
        assert abs(partial_a_conj(f, self.a, self.b) - 1) < 1e-8
        g = lambda a, b: np.conj(b) ** 2  # noqa: E731
        assert abs(partial_b(g, self.a, self.b)) < 1e-8
        assert abs(partial_b_conj(g, self.a, self.b) - 2 * np.conj(self.b)) < 1e-8

    @pytest.mark.parametrize("f", [lambda a, b: np.exp(a) * np.sin(b), lambda a, b: a**3 * b, lambda a, b: np.cos(a * b)])
    def test_conjugated_output_identity(self, f):
        # d f*/d a* = (d f/d a)*
        for var in "ab":
            lhs = wirtinger(f, self.a, self.b, var, conj=True, conj_output=True)
            rhs = np.conj(wirtinger(f, self.a, self.b, var))
            assert abs(lhs - rhs) < 1e-8

    def test_evaluation_failure(self):
        def bad(a, b):
            raise ZeroDivisionError("boom")

        with pytest.raises(EvaluationFailure):
            partial_a(bad, 0, 0)
        with pytest.raises(EvaluationFailure):
            partial_a(lambda a, b: np.inf + a, 0, 0)


class TestDerivativeLimit:
    def test_square(self):
        p = Bicomplex(1 + 1j, 2)
        assert close(derivative_limit(square, p), p.scale(2), 1e-8)

    def test_constant(self):
        assert close(derivative_limit(constant(Bicomplex(2, 1j)), P0), ZERO, 1e-12)

    def test_not_differentiable(self):
        with pytest.raises(NotDifferentiable):
            derivative_limit(theta, P0)

    @pytest.mark.parametrize("name", ["exp", "sin", "cube", "inverse", "blog"])
    def test_agrees_with_analytic(self, name):
        entry = REGISTRY[name]
        p = entry.center + Bicomplex(0.05, 0.03j)
        assert close(derivative_limit(entry.fn, p), entry.fn.nth(p, 1), 1e-7)


    def test_singular_directions(self):
        # increments along zero divisors still follow psi'(p) . dp when psi is holomorphic
        for name in ("exp", "cube", "sin"):
            assert singular_direction_residual(get_function(name), P0) < 1e-6
        assert singular_direction_residual(theta, P0) > 0.1


class TestDerivativeC2:
    def test_square_all_six(self):
        x, y, z, u = 0.4, -1.2, 0.9, 0.3
        p = Bicomplex(complex(x, y), complex(z, u))
        rep = derivative_c2(square, p)
        want = Bicomplex(complex(2 * x, 2 * y), complex(2 * z, 2 * u))
        assert len(rep.all_values) == 6
        for v in rep.all_values:
            assert close(v, want, 1e-8)
        assert rep.is_holomorphic and rep.max_discrepancy < 1e-8

    def test_exp(self):
        rep = derivative_c2(exp, P0)
        assert close(rep.value, bic_exp(P0), 1e-8)

    def test_theta(self):
        a, b = 0.4 + 0.2j, -0.6 + 0.3j
        rep = derivative_c2(theta, Bicomplex(a, b))
        assert close(rep.value_c2_a, Bicomplex(2 * a, 0), 1e-8)
        assert close(rep.value_c2_b, Bicomplex(2 * b, 0), 1e-8)
        assert not rep.is_holomorphic
        assert abs(rep.cr_residual - bic_norm(Bicomplex(2 * a - 2 * b, 0))) < 1e-8

    @pytest.mark.parametrize("name", holomorphic_names())
    def test_holomorphic_implies_agreement(self, name):
        entry = REGISTRY[name]
        for p in entry.sample_points(10, seed=3):
            rep = derivative_report(entry.fn, p)
            assert rep.is_holomorphic
            assert rep.max_discrepancy <= 1e-6 * max(1.0, bic_norm(rep.value))

    def test_neighbourhood_sampling(self):
        rep = derivative_report(exp, P0, samples=20)
        assert rep.samples == 20 and rep.step == 1e-4
        # holomorphic at the point but not nearby: sampling catches it
        kink = BicomplexFn("kink", lambda p: Bicomplex(p.a + 5 * np.maximum(p.a.real - 0.35, 0) ** 3, p.b))
        at = Bicomplex(0.3, 0)
        assert derivative_report(kink, at, samples=0).is_holomorphic
        assert not derivative_report(kink, at, samples=20).is_holomorphic


class TestCR:
    def test_sin(self, rng):
        for _ in range(10):
            v = rng.uniform(-1, 1, 4)
            assert check_bicomplex_cr(get_function("sin"), Bicomplex(complex(*v[:2]), complex(*v[2:]))) < 1e-8

    def test_identity(self):
        assert check_bicomplex_cr(get_function("identity"), P0) < 1e-12

    def test_theta(self):
        a, b = 0.4 + 0.2j, -0.6 + 0.3j
        res = check_bicomplex_cr(theta, Bicomplex(a, b))
        assert abs(res - bic_norm(Bicomplex(2 * a - 2 * b, 0))) < 1e-8

    def test_class_p_residual_equals_cr(self):
        for name in ("exp", "theta", "cube"):
            f = get_function(name)
            assert abs(class_cr_residual(f, P0, "p") - check_bicomplex_cr(f, P0)) < 1e-10

    def test_class_parsing(self):
        assert [c.name for c in ALL_CLASSES] == ["p", "q", "r", "s", "p∪", "q∪", "r∪", "s∪"]
        assert ArgClass.parse("qU") == ArgClass.parse("q∪") == ArgClass.parse("qu")
        q = Bicomplex(1 + 2j, 3 + 4j)
        assert ArgClass.parse("r∪").transform(q) == Bicomplex(1 - 2j, -3 - 4j)
        assert ArgClass.parse("s").transform(q) == Bicomplex(1 - 2j, 3 - 4j)
        with pytest.raises(ValueError):
            ArgClass.parse("t")


class TestHigherDerivatives:
    @pytest.mark.parametrize("n", range(0, 8))
    def test_exp_any_order(self, n):
        assert close(derivative_n(exp, P0, n), bic_exp(P0), 1e-12)

    def test_cube_second(self):
        assert close(derivative_n(cube, P0, 2), P0.scale(6), 1e-12)
        assert close(derivative_n(no_nth(cube), P0, 2), P0.scale(6), 1e-7)

    def test_order_zero(self):
        assert derivative_n(no_nth(exp), P0, 0) == bic_exp(P0)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_fd_matches_analytic(self, n):
        fd = derivative_n(no_nth(exp), P0, n)
        assert close(fd, bic_exp(P0), 10 ** (-9 + n))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_b_formula_agrees(self, n):
        for name in ("exp", "sin", "cube"):
            f = no_nth(get_function(name))
            a, b = derivative_n(f, P0, n, via="a"), derivative_n(f, P0, n, via="b")
            assert close(a, b, 10 ** (-8 + n))

    def test_order_limit(self):
        with pytest.raises(OrderTooHigh):
            derivative_n(no_nth(exp), P0, 7)
        with pytest.raises(ValueError):
            derivative_n(exp, P0, -1)

    def test_blog_derivative(self):
        assert derivative_blog(ONE) == ONE
        assert derivative_blog(Bicomplex(0, 1j)) == Bicomplex(0, 1j)
        q = Bicomplex(2, 1)
        fd = derivative_report(get_function("blog"), q).value
        assert close(fd, derivative_blog(q), 1e-7)
        with pytest.raises(SingularNumber):
            derivative_blog(Bicomplex(1, 1j))


class TestRules:
    @pytest.mark.parametrize("n", range(-3, 7))
    def test_power_rule(self, n):
        p = Bicomplex(0.9 + 0.2j, 0.3 - 0.4j)
        f = BicomplexFn(f"p^{n}", lambda q, n=n: bic_pow_int(q, n))
        want = bic_pow_int(p, n - 1).scale(n) if n else ZERO
        assert close(derivative_report(f, p).value, want, 1e-7 * max(1, bic_norm(want)))

    def test_derivative_tables(self):
        for p in get_entry("exp").sample_points(20, seed=5):
            assert close(derivative_c2(get_function("cosh"), p).value, bic_sinh(p), 1e-7)
            assert close(derivative_c2(get_function("sinh"), p).value, bic_cosh(p), 1e-7)
            assert close(derivative_c2(get_function("cos"), p).value, -bic_sin(p), 1e-7)
            assert close(derivative_c2(get_function("sin"), p).value, bic_cos(p), 1e-7)

    @pytest.mark.parametrize("f_name,g_name", [("exp", "sin"), ("cube", "cosh"), ("poly4", "tanh")])
    def test_product_quotient_chain(self, f_name, g_name):
        f, g = get_function(f_name), get_function(g_name)
        p = Bicomplex(0.2 - 0.1j, 0.15 + 0.2j)

        def d(fn, at=p):
            return derivative_report(fn, at).value

        fp, gp, fv, gv = d(f), d(g), f(p), g(p)
        assert close(d(f * g), fp * gv + fv * gp, 1e-6)
        assert close(d(f / g), (fp * gv - fv * gp) * bic_inverse(gv * gv), 1e-6)
        assert close(d(f.compose(g)), d(f, gv) * gp, 1e-6)


@settings(max_examples=60)
@given(ball_bicomplex, st.sampled_from(holomorphic_names()))
def test_registry_cr_property(offset, name):
    entry = REGISTRY[name]
    p = entry.center + offset.scale(0.95 * entry.radius / max(1.0, bic_norm(offset)))
    assert class_cr_residual(entry.fn, p) <= 1e-7
