"""Line integrals, twining numbers, Cauchy's formula and a Taylor expansion."""
from hyperplex import (Bicomplex, bic_norm, cauchy_integral_formula, line_integral, taylor_expand,
                       twining_number)
from hyperplex.integration import a_circle, double_circle, j_circle, twist
from hyperplex.registry import get_function

exp = get_function("exp")
zero = Bicomplex(0, 0)
print("closed integral of exp over the double circle:", bic_norm(line_integral(exp, double_circle())))

for name, curve in (("twist", twist()), ("a-circle", a_circle()), ("j-circle", j_circle()),
                    ("double circle", double_circle())):
    v = twining_number(curve, zero)
    print(f"twining number of the {name:13s}: m={v.m}, n={v.n}  windings={v.windings}")

res = cauchy_integral_formula(exp, double_circle(), zero)
print("\nCauchy formula for exp at 0 :", res.value.quad())

ex = taylor_expand(exp, zero, 12)
q = Bicomplex(0.5 + 0.1j, 0.3 - 0.2j)
print("12-term Taylor error at q   :", bic_norm(ex.evaluate(q) - exp(q)), " bound:", ex.remainder_bound(q))
