"""Foundation special functions for complex arguments.

Gamma and log-gamma use a Lanczos approximation (g = 671/128, 14 terms) with
reflection into the right half-plane; digamma uses upward recurrence into the
region |z| >= 12 followed by the Stirling-type asymptotic series. Bernoulli
numbers are built once in exact rational arithmetic.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .config import POLE_SNAP
from .errors import DomainError, PoleError


@dataclass(frozen=True)
class Constants:
    euler_gamma: float = 0.57721566490153286061
    ln_two_pi: float = 1.8378770664093454836
    pi: float = math.pi


CONST = Constants()
EULER_GAMMA = CONST.euler_gamma
LN_TWO_PI = CONST.ln_two_pi
_LN_SQRT_TWO_PI = 0.5 * LN_TWO_PI


class BernoulliTable:
    """Bernoulli numbers B_0 .. B_max_index with the B_1 = -1/2 convention."""

    def __init__(self, max_index: int = 100):
        if max_index < 60:
            raise ValueError("max_index must be at least 60")
        exact = [Fraction(1)]
        for m in range(1, max_index + 1):
            acc = sum(comb(m + 1, j) * exact[j] for j in range(m))
            exact.append(-acc / (m + 1))
        self.max_index = max_index
        self.exact = tuple(exact)
        self.numbers = tuple(float(b) for b in exact)

    def __getitem__(self, k: int) -> float:
        return self.numbers[k]

    def __len__(self):
        return len(self.numbers)


BERNOULLI = BernoulliTable()


def _as_complex(z) -> complex:
    return complex(z)


def _nearest_nonpositive_int(z: complex, window: float = POLE_SNAP):
    """Return n if z is within ``window`` of the non-positive integer n."""
    n = round(z.real)
    if n <= 0 and abs(z - n) < window:
        return n
    return None


def sinpi(z) -> complex:
    """sin(pi z) with exact argument reduction of the real part."""
    z = _as_complex(z)
    x, y = z.real, z.imag
    s, c = _sincospi_real(x)
    if y == 0.0:
        return complex(s, 0.0)
    py = math.pi * y
    return complex(s * math.cosh(py), c * math.sinh(py))


def cospi(z) -> complex:
    """cos(pi z) with exact argument reduction of the real part."""
    z = _as_complex(z)
    x, y = z.real, z.imag
    s, c = _sincospi_real(x)
    if y == 0.0:
        return complex(c, 0.0)
    py = math.pi * y
    return complex(c * math.cosh(py), -s * math.sinh(py))


def _sincospi_real(x: float) -> tuple[float, float]:
    # reduce to r in [-1/4, 1/4] around a multiple of 1/2; the reductions are exact
    r = math.fmod(x, 2.0)
    n = round(2.0 * r)
    r = r - 0.5 * n
    s, c = math.sin(math.pi * r), math.cos(math.pi * r)
    n %= 4
    if n == 0:
        return s, c
    if n == 1:
        return c, -s
    if n == 2:
        return -s, -c
    return -c, s


def cotpi(z) -> complex:
    """cot(pi z), stable for large imaginary parts."""
    z = _as_complex(z)
    if abs(z.imag) > 20.0:
        # cot(x + iy) -> -i sign(y) up to exponentially small corrections
        e = cmath.exp(2j * math.pi * z) if z.imag > 0 else cmath.exp(-2j * math.pi * z)
        sign = 1.0 if z.imag > 0 else -1.0
        return -1j * sign * (1 + e) / (1 - e)
    return cospi(z) / sinpi(z)


# Lanczos coefficients for g = 671/128 (Numerical Recipes, 3rd ed.)
_LANCZOS_G = 5.24218750000000000
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_C = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)


def _lanczos_log(z: complex) -> complex:
    # valid for Re z >= 1/2
    t = z + _LANCZOS_G
    ser = _LANCZOS_C0
    y = z
    for c in _LANCZOS_C:
        y = y + 1
        ser += c / y
    return (z + 0.5) * cmath.log(t) - t + _LN_SQRT_TWO_PI + cmath.log(ser) - cmath.log(z)


def gamma(z) -> complex:
    """Gamma function for complex z away from the non-positive integers."""
    z = _as_complex(z)
    if _nearest_nonpositive_int(z) is not None:
        raise PoleError(f"gamma has a pole at {z}")
    if z.imag == 0.0 and z.real == round(z.real) and 1 <= z.real <= 171:
        return complex(math.factorial(int(z.real) - 1), 0.0)
    if z.real < 0.5:
        return math.pi / (sinpi(z) * gamma(1 - z))
    return cmath.exp(_lanczos_log(z))


def recip_gamma(z) -> complex:
    """1/Gamma(z); entire, exactly zero at the non-positive integers."""
    z = _as_complex(z)
    if _nearest_nonpositive_int(z, 1e-13) is not None:
        return 0j
    if z.real < 0.5:
        # reflection keeps the zeros exact and avoids overflowing Gamma(z)
        return sinpi(z) * gamma(1 - z) / math.pi
    return 1.0 / gamma(z)


def log_gamma(q) -> complex:
    """Continuous branch of log Gamma on Re q > 0, real on the positive axis."""
    q = _as_complex(q)
    if q.real <= 0:
        raise DomainError(f"log_gamma requires Re q > 0, got {q}")
    if q.real < 0.5:
        # log Gamma(q) = log Gamma(q + 1) - log q
        return _lanczos_log(q + 1) - cmath.log(q)
    return _lanczos_log(q)


def digamma(z) -> complex:
    """Digamma psi(z) = Gamma'(z)/Gamma(z)."""
    z = _as_complex(z)
    if _nearest_nonpositive_int(z) is not None:
        raise PoleError(f"digamma has a pole at {z}")
    if z.real < 0.5:
        return digamma(1 - z) - math.pi * cotpi(z)
    shift = 0j
    while abs(z) < 12.0:
        shift -= 1.0 / z
        z += 1
    return shift + _digamma_asymptotic(z)


def _digamma_asymptotic(z: complex) -> complex:
    zi2 = 1.0 / (z * z)
    acc = 0j
    p = zi2
    for k in range(1, 14):
        acc += BERNOULLI[2 * k] / (2 * k) * p
        p *= zi2
    return cmath.log(z) - 0.5 / z - acc


def harmonic(z) -> complex:
    """Generalized harmonic number H(z) = gamma + psi(z + 1)."""
    z = _as_complex(z)
    if z.imag == 0.0 and z.real == round(z.real) and 0 <= z.real <= 64:
        k = int(z.real)
        return complex(math.fsum(1.0 / j for j in range(1, k + 1)), 0.0)
    n = _nearest_nonpositive_int(z + 1)
    if n is not None:
        raise PoleError(f"harmonic has a pole at {z}")
    return EULER_GAMMA + digamma(z + 1)


def harmonic_number(k: int) -> float:
    """H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0."""
    return math.fsum(1.0 / j for j in range(1, k + 1))


def bernoulli_poly(m: int, q) -> complex:
    """Bernoulli polynomial B_m(q) from the table by binomial expansion."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > BERNOULLI.max_index:
        raise ValueError(f"m exceeds the Bernoulli table ({BERNOULLI.max_index})")
    q = _as_complex(q)
    # Horner in q over coefficients C(m, k) B_k, highest power first
    acc = 0j
    for k in range(m + 1):
        acc = acc * q + comb(m, k) * BERNOULLI[k]
    return acc


def reg_ratio(z) -> complex:
    """H(-z-1)/Gamma(-z), an entire function of z.

    Both factors are singular at z in N_0; near the right half-plane the ratio is
    rewritten through the reflection formulas as
    -Gamma(1+z) [sin(pi z) H(z)/pi + cos(pi z)], which is free of cancellation.
    """
    z = _as_complex(z)
    if z.real >= -0.5:
        return -gamma(1 + z) * (sinpi(z) * harmonic(z) / math.pi + cospi(z))
    return harmonic(-z - 1) * recip_gamma(-z)
