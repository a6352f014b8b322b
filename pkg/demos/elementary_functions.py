"""Exponential, trigonometric functions, polar form, logarithm and powers."""
import math

from hyperplex import Bicomplex, bic_arccos, bic_cos, bic_exp, bic_pow, bic_sin, blog, polar_form

j = Bicomplex(0, 1j)
p = Bicomplex(0.3 + 0.2j, -0.1 + 0.5j)

print("exp(p)             =", bic_exp(p).quad())
print("cos^2 + sin^2      =", (bic_cos(p) * bic_cos(p) + bic_sin(p) * bic_sin(p)).quad())
print("exp((i pi, pi))    =", bic_exp(Bicomplex(1j * math.pi, math.pi)).quad(), "(a half period)")

pf = polar_form(Bicomplex(2, 1j))
print("\npolar form of (2, i): scale", pf.scale_factor, " argument", pf.complex_argument)
print("Blog((0, i))       =", blog(j).quad(), " expected", (0, math.pi / 2, math.pi / 2, 0))
print("(0, i)^(0, i)      =", bic_pow(j, j).quad())
print("cos(arccos(p))     =", bic_cos(bic_arccos(p)).quad(), " p =", p.quad())
