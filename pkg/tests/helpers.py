import numpy as np
from hypothesis import strategies as st

from hyperplex import Bicomplex, Quaternion, bic_norm

small_int = st.integers(min_value=-9, max_value=9)
small_complex_int = st.builds(complex, small_int, small_int)
finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
complex_float = st.builds(complex, finite, finite)

int_bicomplex = st.builds(Bicomplex, small_complex_int, small_complex_int)
bicomplex = st.builds(Bicomplex, complex_float, complex_float)
int_quaternion = st.builds(Quaternion, small_complex_int, small_complex_int)
quaternion = st.builds(Quaternion, complex_float, complex_float)

unit = st.floats(min_value=-1, max_value=1, allow_nan=False, allow_infinity=False)
ball_bicomplex = st.builds(lambda x, y, z, u: Bicomplex(complex(x, y), complex(z, u)), unit, unit, unit, unit)


def close(x: Bicomplex, y: Bicomplex, tol: float) -> bool:
    return bic_norm(x - y) <= tol


def random_bicomplex(rng: np.random.Generator, count: int, scale: float = 1.0) -> Bicomplex:
    v = rng.uniform(-scale, scale, size=(4, count))
    return Bicomplex(v[0] + 1j * v[1], v[2] + 1j * v[3])
