"""Fueter-regular functions, the Laplacian and argument classes."""
from hyperplex import Bicomplex, check_fueter, check_laplace4, classify, regular_derivative, to_argument_class
from hyperplex.registry import get_function

p = Bicomplex(0.2 + 0.1j, -0.4 + 0.3j)
E = to_argument_class(get_function("exp"), "q")   # exp(a, b*)
print("Fueter residual of exp(q)     :", check_fueter(E, p))
print("Laplacian of exp(q)           :", check_laplace4(E, p).residual)
print("Laplacian of |a|^2 + |b|^2    :", check_laplace4(get_function("quadsq"), p).residual)
print("regular derivative of q^2     :", regular_derivative(to_argument_class(get_function("square"), "q"), p).value.quad())

for name in ("exp", "E", "theta"):
    rep = classify(get_function(name))
    print(f"classify {name:5s}: members={rep.members} regular={rep.regular}")
