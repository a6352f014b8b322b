"""Bicomplex arithmetic: products, zero divisors, inverses and the neighbours."""
from hyperplex import (Bicomplex, Octonion, Quaternion, bic_cn, bic_conj, bic_div, bic_inverse, bic_mul,
                       is_singular, oct_mul, quat_mul, quat_square_norm)
from hyperplex.errors import SingularNumber

q = Bicomplex(1 + 2j, 3 - 1j)
r = Bicomplex(-0.5j, 2)
print("q =", q.quad(), " r =", r.quad())
print("q . r      =", bic_mul(q, r).quad())
print("q . r = r . q:", bic_mul(q, r) == bic_mul(r, q))
print("CN(q)      =", bic_cn(q), " (q . q^U =", bic_mul(q, bic_conj(q)).quad(), ")")
print("q / r      =", bic_div(q, r).quad())

# (a, ia) . (a, -ia) = 0 although neither factor is zero
z = Bicomplex(2 - 1j, 1j * (2 - 1j))
print("\nzero divisor", z.quad(), "singular:", is_singular(z))
print("product with its partner:", bic_mul(z, Bicomplex(z.a, -z.b)).quad())
try:
    bic_inverse(z)
except SingularNumber as exc:
    print("inverse refused:", exc)

# quaternions do not commute, but the norm is multiplicative
a, b = Quaternion.from_quad(1, 2, 3, 4), Quaternion.from_quad(-2, 0, 1, 5)
print("\nq x r =", quat_mul(a, b).quad(), " r x q =", quat_mul(b, a).quad())
print("N(q x r) = N(q) N(r):", quat_square_norm(quat_mul(a, b)) == quat_square_norm(a) * quat_square_norm(b))

m, n = Octonion(a, b), Octonion(b, a)
print("octonion alternation holds:", oct_mul(oct_mul(m, m), n) == oct_mul(m, oct_mul(m, n)))
