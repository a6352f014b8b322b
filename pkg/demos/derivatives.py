"""Differentiation: six representations, the CR test and higher derivatives."""
from hyperplex import Bicomplex, derivative_limit, derivative_n, derivative_report
from hyperplex.registry import get_function

p = Bicomplex(0.4 - 0.3j, 0.2 + 0.7j)
for name in ("exp", "cube", "theta"):
    rep = derivative_report(get_function(name), p)
    print(f"{name:6s} holomorphic={rep.is_holomorphic!s:5s} CR residual={rep.cr_residual:.2e} "
          f"spread of six values={rep.max_discrepancy:.2e}")

print("\nd/dp p^3 by the limit definition:", derivative_limit(get_function("cube"), p).quad())
print("3 p^2                            :", (p * p).scale(3).quad())
print("fourth derivative of sin at p    :", derivative_n(get_function("sin"), p, 4).quad())
