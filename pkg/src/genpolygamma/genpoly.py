"""The generalized polygamma function psi(z, q) and its relatives.

psi(z, q) = [zeta'(z+1, q) + H(-z-1) zeta(z+1, q)] / Gamma(-z)

is evaluated in the pole-free arrangement

psi(z, q) = rg(-z) zeta'(z+1, q) + reg_ratio(z) zeta(z+1, q),

where rg = 1/Gamma and reg_ratio(z) = H(-z-1)/Gamma(-z) are entire. Near z = 0,
where zeta(z+1, q) itself has a pole, the regular part R(z) = zeta(1+z, q) - 1/z
is used instead and the polar contributions combine into -H(-z)/Gamma(1-z).
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_CONFIG, POLE_SNAP, EvalConfig
from .errors import DomainError
from .hurwitz import hurwitz_zeta, hurwitz_zeta_all
from .kernel import (
    EULER_GAMMA,
    LN_TWO_PI,
    bernoulli_poly,
    cospi,
    digamma,
    harmonic,
    harmonic_number,
    recip_gamma,
    reg_ratio,
    sinpi,
)

_EPS = 2.220446049250313e-16
# below this |z| the pole of zeta(z+1, q) is removed analytically
_REGULAR_RADIUS = 0.5


class Branch(str, enum.Enum):
    DIRECT = "direct-formula"
    INTEGER = "integer-limit"
    DIGAMMA = "digamma-limit"


@dataclass(frozen=True)
class GenPolyValue:
    value: complex
    est_error: float
    branch_used: Branch


@lru_cache(maxsize=4096)
def _prefactors(z: complex):
    # q-independent factors; cached because quadrature sweeps q at fixed z
    rg = recip_gamma(-z)
    rr = reg_ratio(z)
    polar = -harmonic(-z) * recip_gamma(1 - z) if abs(z) < _REGULAR_RADIUS else None
    return rg, rr, polar


def _check_q(q: complex):
    if q.real <= 0:
        raise DomainError(f"psi(z, q) is supported for Re q > 0 only, got q = {q}")
    if abs(q) < POLE_SNAP:
        raise DomainError(f"q = {q} is too close to the pole at 0")


def _snap(z: complex, window: float):
    m = round(z.real)
    if m >= 0 and abs(z - m) < window:
        return m
    return None


def gen_polygamma(z, q, cfg: EvalConfig = DEFAULT_CONFIG) -> GenPolyValue:
    """Generalized polygamma psi(z, q), entire in z, for Re q > 0."""
    z, q = complex(z), complex(q)
    _check_q(q)
    m = _snap(z, cfg.snap_window)
    if m == 0:
        return GenPolyValue(digamma(q), 4 * _EPS * abs(digamma(q)), Branch.DIGAMMA)
    if m is not None:
        zv = hurwitz_zeta(m + 1, q, cfg)
        c = (-1) ** (m + 1) * math.factorial(m)
        return GenPolyValue(c * zv.value, abs(c) * zv.est_error, Branch.INTEGER)
    value, err = _direct(z, q, cfg)
    return GenPolyValue(value, err, Branch.DIRECT)


def _direct(z: complex, q: complex, cfg: EvalConfig) -> tuple[complex, float]:
    rg, rr, polar = _prefactors(z)
    if polar is not None:
        (R, dR), (eR, edR) = hurwitz_zeta_all(1 + z, q, 1, cfg, regular=True)
        value = polar + rg * dR + rr * R
        err = abs(rg) * edR + abs(rr) * eR
        mag = abs(polar) + abs(rg * dR) + abs(rr * R)
    else:
        (zeta, dzeta), (e0, e1) = hurwitz_zeta_all(1 + z, q, 1, cfg)
        value = rg * dzeta + rr * zeta
        err = abs(rg) * e1 + abs(rr) * e0
        mag = abs(rg * dzeta) + abs(rr * zeta)
    return value, err + 8 * _EPS * mag


def zeta_over_gamma(z, q, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(z+1, q)/Gamma(-z), entire in z (equal to -1 at z = 0)."""
    z, q = complex(z), complex(q)
    _check_q(q)
    rg = recip_gamma(-z)
    if abs(z) < _REGULAR_RADIUS:
        (R,), _ = hurwitz_zeta_all(1 + z, q, 0, cfg, regular=True)
        return -recip_gamma(1 - z) + rg * R
    if rg == 0:
        return 0j
    return rg * hurwitz_zeta(1 + z, q, cfg).value


def psi_at_one(z, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """psi(z, 1) = [zeta'(z+1) + H(-z-1) zeta(z+1)] / Gamma(-z)."""
    return gen_polygamma(z, 1, cfg).value


def psi_at_one_reflected(z, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """psi(z, 1) through Riemann's functional equation (independent route).

    2 (2 pi)^z [(gamma + ln 2 pi) cos(pi z/2) zeta(-z)
                - (pi/2) sin(pi z/2) zeta(-z) - cos(pi z/2) zeta'(-z)]

    The tangent of the textbook form is multiplied through so that odd integers
    are not singular; z = -1 (zeta pole at -z = 1) is excluded.
    """
    z = complex(z)
    (zeta, dzeta), _ = hurwitz_zeta_all(-z, 1, 1, cfg)
    c = cospi(z / 2)
    s = sinpi(z / 2)
    pref = 2 * cmath.exp(z * LN_TWO_PI)
    return pref * ((EULER_GAMMA + LN_TWO_PI) * c * zeta - 0.5 * math.pi * s * zeta - c * dzeta)


def balanced_negapolygamma(m: int, q, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Balanced negapolygamma (1/m!)[m zeta'(1-m, q) - H_{m-1} B_m(q)]."""
    if m < 1:
        raise ValueError("m must be >= 1")
    q = complex(q)
    _check_q(q)
    (_, dzeta), _ = hurwitz_zeta_all(1 - m, q, 1, cfg)
    return (m * dzeta - harmonic_number(m - 1) * bernoulli_poly(m, q)) / math.factorial(m)


def negapoly_polynomial(m: int, q, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """sum_{r<m} q^(m-r-1)/Gamma(m-r) psi(-r-1, 1): balanced minus Gosper-Adamchik."""
    q = complex(q)
    acc = 0j
    for r in range(m):
        acc += q ** (m - r - 1) / math.factorial(m - r - 1) * psi_at_one(-r - 1, cfg)
    return acc


def gosper_negapolygamma(k: int, q, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Gosper-Adamchik negapolygamma psi_{-k}(q) = (1/(k-2)!) int_0^q (q-t)^(k-2) log Gamma(t) dt."""
    if k < 2:
        raise ValueError("k must be >= 2")
    q = complex(q)
    if q == 0:
        return 0j
    if q.imag != 0 or not 0 < q.real <= 10:
        raise DomainError(f"gosper_negapolygamma requires real 0 < q <= 10, got {q}")
    return balanced_negapolygamma(k, q, cfg) - negapoly_polynomial(k, q, cfg)


def shift_rhs(z, q) -> complex:
    """Increment psi(z, q+1) - psi(z, q) = [ln q - H(-z-1)] / (q^(z+1) Gamma(-z))."""
    z, q = complex(z), complex(q)
    if q.real <= 0:
        raise DomainError(f"shift_rhs requires Re q > 0, got q = {q}")
    lnq = cmath.log(q)
    rg, rr, _ = _prefactors(z)
    return cmath.exp(-(z + 1) * lnq) * (lnq * rg - rr)


def multiplication_lhs_rhs(k: int, z, q, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """Both sides of k^(z+1) psi(z, kq) = sum_j psi(z, q + j/k) - k^(z+1) ln k zeta(z+1, kq)/Gamma(-z)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    z, q = complex(z), complex(q)
    _check_q(q)
    kz1 = cmath.exp((z + 1) * math.log(k))
    lhs = kz1 * gen_polygamma(z, k * q, cfg).value
    rhs = sum(gen_polygamma(z, q + j / k, cfg).value for j in range(k))
    rhs -= kz1 * math.log(k) * zeta_over_gamma(z, k * q, cfg)
    return lhs, rhs


def duplication_lhs_rhs(z, q, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """psi(z, 2q) against 2^-(z+1)[psi(z, q) + psi(z, q+1/2)] - ln 2 zeta(z+1, 2q)/Gamma(-z)."""
    z, q = complex(z), complex(q)
    lhs = gen_polygamma(z, 2 * q, cfg).value
    half = cmath.exp(-(z + 1) * math.log(2))
    rhs = half * (gen_polygamma(z, q, cfg).value + gen_polygamma(z, q + 0.5, cfg).value)
    rhs -= math.log(2) * zeta_over_gamma(z, 2 * q, cfg)
    return lhs, rhs


def q_derivative(z, q, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Analytic q-derivative of psi(z, q), which is psi(z+1, q)."""
    return gen_polygamma(complex(z) + 1, q, cfg).value


def polygamma(m: int, q, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Classical polygamma psi^(m)(q) for integer m >= 0."""
    if m == 0:
        return digamma(q)
    return (-1) ** (m + 1) * math.factorial(m) * hurwitz_zeta(m + 1, q, cfg).value


__all__ = [
    "Branch",
    "GenPolyValue",
    "balanced_negapolygamma",
    "duplication_lhs_rhs",
    "gen_polygamma",
    "gosper_negapolygamma",
    "multiplication_lhs_rhs",
    "negapoly_polynomial",
    "polygamma",
    "psi_at_one",
    "psi_at_one_reflected",
    "q_derivative",
    "shift_rhs",
    "zeta_over_gamma",
]
