"""Integral identities for zeta(s, q) and psi(z, q), checked by quadrature.

Every check returns an IdentityReport comparing a numerically integrated left
side with a closed form evaluated from the library. Parameters outside the
region where an identity holds are refused with HypothesisError instead of
being silently extrapolated.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from ..config import DEFAULT_CONFIG, EvalConfig
from ..errors import HypothesisError
from ..genpoly import gen_polygamma, shift_rhs
from ..hurwitz import hurwitz_zeta, hurwitz_zeta_all
from ..kernel import EULER_GAMMA, LN_TWO_PI, cospi, gamma, log_gamma, sinpi
from .quadrature import quad_finite, quad_zero_to_inf

_C = EULER_GAMMA + LN_TWO_PI


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    inputs: dict = field(hash=False)
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tol: float
    passed: bool

    def to_dict(self) -> dict:
        # field order is part of the output contract
        return {
            "identity_id": self.identity_id,
            "inputs": dict(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tol": self.tol,
            "pass": self.passed,
        }


def make_report(identity_id: str, inputs: dict, lhs, rhs, tol: float) -> IdentityReport:
    lhs, rhs = complex(lhs), complex(rhs)
    ab = abs(lhs - rhs)
    rel = ab / abs(rhs) if rhs != 0 else (0.0 if ab == 0 else math.inf)
    ok = bool(ab <= tol or rel <= tol)
    return IdentityReport(identity_id, inputs, lhs, rhs, ab, rel, tol, ok)


def _quad_tol(tol: float) -> float:
    return min(1e-10, tol * 1e-2)


def psi_anywhere(z, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """psi(z, x) for Re x > 0 including x far below the evaluator's pole guard.

    Small x goes through psi(z, x) = psi(z, x+1) - [ln x - H(-z-1)]/(x^(z+1) Gamma(-z)).
    """
    x = complex(x)
    if abs(x) >= 0.5:
        return gen_polygamma(z, x, cfg).value
    return gen_polygamma(z, x + 1, cfg).value - shift_rhs(z, x)


def zeta_anywhere(s, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    x = complex(x)
    if abs(x) >= 0.5:
        return hurwitz_zeta(s, x, cfg).value
    return hurwitz_zeta(s, x + 1, cfg).value + cmath.exp(-complex(s) * cmath.log(x))


def _bracket(s: complex, cfg: EvalConfig):
    (z0, z1, z2), _ = hurwitz_zeta_all(s, 1, 2, cfg)
    return z0, z1, z2


# ---------------------------------------------------------------------------
# integral representations


def check_hurwitz_int_rep(s, q, tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """zeta(s, q) Gamma(s) = int_0^inf t^(s-1) e^(-qt)/(1 - e^(-t)) dt."""
    s = complex(s)
    q = float(q)
    if not s.real > 1:
        raise HypothesisError(f"needs Re s > 1, got s = {s}")
    if not q > 0:
        raise HypothesisError(f"needs q > 0, got q = {q}")

    def f(t):
        return cmath.exp((s - 1) * math.log(t) - q * t) / -math.expm1(-t)

    lhs = quad_zero_to_inf(f, tol=_quad_tol(tol)).value / gamma(s)
    return make_report("hurwitz-integral-rep", {"s": s, "q": q}, lhs, hurwitz_zeta(s, q, cfg).value, tol)


def check_psi_int_rep(z, q, tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """psi(z, q) = -int_0^inf e^(-qt) t^z/(1-e^(-t)) [cos pi z + (gamma/pi) sin pi z + (sin pi z/pi) ln t] dt."""
    z = complex(z)
    q = float(q)
    if not z.real > 0:
        raise HypothesisError(f"needs Re z > 0, got z = {z}")
    if not q > 0:
        raise HypothesisError(f"needs q > 0, got q = {q}")
    c = cospi(z)
    sp = sinpi(z) / math.pi

    def f(t):
        lt = math.log(t)
        return -cmath.exp(z * lt - q * t) / -math.expm1(-t) * (c + sp * (EULER_GAMMA + lt))

    lhs = quad_zero_to_inf(f, tol=_quad_tol(tol)).value
    return make_report("psi-integral-rep", {"z": z, "q": q}, lhs, gen_polygamma(z, q, cfg).value, tol)


# ---------------------------------------------------------------------------
# integrals over [0, 1]


def check_primitive(z, a: float, b: float, lo: float, hi: float, tol: float = 1e-8,
                    cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """int_lo^hi psi(z, a + bq) dq = [psi(z-1, a + bq)/b]_lo^hi."""
    z = complex(z)
    a, b, lo, hi = float(a), float(b), float(lo), float(hi)
    if not b > 0:
        raise HypothesisError(f"needs b > 0, got b = {b}")
    if not hi > lo:
        raise HypothesisError("needs hi > lo")
    x_lo, x_hi = a + b * lo, a + b * hi
    if x_lo < 0:
        raise HypothesisError(f"argument a + b q reaches {x_lo} < 0")
    if x_lo == 0 and not z.real < 0:
        raise HypothesisError(f"the integral diverges at the origin for Re z >= 0 (z = {z})")

    lhs = quad_finite(lambda t: psi_anywhere(z, a + b * t, cfg), lo, hi, tol=_quad_tol(tol)).value

    def antiderivative(x):
        if x == 0:
            # psi(z-1, x) -> psi(z-1, 1) as x -> 0 when Re z < 0
            return gen_polygamma(z - 1, 1, cfg).value
        return psi_anywhere(z - 1, x, cfg)

    rhs = (antiderivative(x_hi) - antiderivative(x_lo)) / b
    inputs = {"z": z, "a": a, "b": b, "lo": lo, "hi": hi}
    return make_report("psi-primitive", inputs, lhs, rhs, tol)


def _check_pair(z: complex, zp: complex):
    if not (z.real < 0 and zp.real < 0 and (z + zp).real < -1):
        raise HypothesisError(f"needs Re z, Re z' < 0 and Re(z + z') < -1, got z = {z}, z' = {zp}")


def product_closed_form(z, zp, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    z, zp = complex(z), complex(zp)
    s = -z - zp
    z0, z1, z2 = _bracket(s, cfg)
    brace = (0.25 * math.pi ** 2 + _C ** 2) * z0 - 2 * _C * z1 + z2
    return 2 * cmath.exp((z + zp) * LN_TWO_PI) * cmath.cos(0.5 * math.pi * (z - zp)) * brace


def check_product_integral(z, zp, tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """int_0^1 psi(z, q) psi(z', q) dq against its zeta, zeta', zeta'' closed form."""
    z, zp = complex(z), complex(zp)
    _check_pair(z, zp)
    if z == zp:
        lhs = quad_finite(lambda q: psi_anywhere(z, q, cfg) ** 2, 0, 1, tol=_quad_tol(tol)).value
        ident = "psi-square-integral"
    else:
        lhs = quad_finite(lambda q: psi_anywhere(z, q, cfg) * psi_anywhere(zp, q, cfg), 0, 1,
                          tol=_quad_tol(tol)).value
        ident = "psi-product-integral"
    return make_report(ident, {"z": z, "z2": zp}, lhs, product_closed_form(z, zp, cfg), tol)


def check_orthogonality(z, tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """int_0^1 psi(z, q) psi(z+1, q) dq = 0 for Re z < -1."""
    z = complex(z)
    if not z.real < -1:
        raise HypothesisError(f"needs Re z < -1, got z = {z}")
    lhs = quad_finite(lambda q: psi_anywhere(z, q, cfg) * psi_anywhere(z + 1, q, cfg), 0, 1,
                      tol=_quad_tol(tol)).value
    return make_report("psi-orthogonality", {"z": z}, lhs, 0.0, tol)


def zeta_psi_closed_form(z, zp, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    z, zp = complex(z), complex(zp)
    s = -z - zp
    (z0, z1), _ = hurwitz_zeta_all(s, 1, 1, cfg)
    half = 0.5 * math.pi * (z - zp)
    brace = 0.5 * math.pi * z0 * cmath.sin(half) + (_C * z0 - z1) * cmath.cos(half)
    return 2 * cmath.exp((z + zp) * LN_TWO_PI) * gamma(-z) * brace


def check_zeta_psi_integral(z, zp, tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """int_0^1 zeta(z+1, q) psi(z', q) dq against its closed form."""
    z, zp = complex(z), complex(zp)
    _check_pair(z, zp)
    lhs = quad_finite(lambda q: zeta_anywhere(z + 1, q, cfg) * psi_anywhere(zp, q, cfg), 0, 1,
                      tol=_quad_tol(tol)).value
    return make_report("zeta-psi-integral", {"z": z, "z2": zp}, lhs, zeta_psi_closed_form(z, zp, cfg), tol)


def check_zeta_psi_diagonal(z, tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """int_0^1 zeta(z, q) psi(z, q) dq = -(1/2)(2 pi)^(2z) Gamma(1-z) zeta(1-2z) for Re z < 0."""
    z = complex(z)
    if not z.real < 0:
        raise HypothesisError(f"needs Re z < 0, got z = {z}")
    lhs = quad_finite(lambda q: zeta_anywhere(z, q, cfg) * psi_anywhere(z, q, cfg), 0, 1,
                      tol=_quad_tol(tol)).value
    rhs = -0.5 * cmath.exp(2 * z * LN_TWO_PI) * gamma(1 - z) * hurwitz_zeta(1 - 2 * z, 1, cfg).value
    return make_report("zeta-psi-diagonal", {"z": z}, lhs, rhs, tol)


def loggamma_square_closed_form(cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Closed form of int_0^1 (ln Gamma(q))^2 dq through zeta'(2) and zeta''(2)."""
    (_, d1, d2), _ = hurwitz_zeta_all(2, 1, 2, cfg)
    g = EULER_GAMMA
    ls = 0.5 * LN_TWO_PI  # ln sqrt(2 pi)
    pi2 = math.pi ** 2
    return (g * g / 12 + pi2 / 48 + g * ls / 3 + 4 * ls * ls / 3
            - (g + 2 * ls) * d1.real / pi2 + d2.real / (2 * pi2))


def check_loggamma_square(tol: float = 1e-9, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    lhs = quad_finite(lambda q: log_gamma(q) ** 2, 0, 1, tol=_quad_tol(tol)).value
    return make_report("loggamma-square-integral", {}, lhs, loggamma_square_closed_form(cfg), tol)


# ---------------------------------------------------------------------------
# Mellin transform


def mellin_closed_form(z, alpha, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    z, alpha = complex(z), complex(alpha)
    bracket = sinpi(z) * gen_polygamma(z - alpha, a, cfg).value
    bracket += sinpi(alpha) * gamma(z + 1 - alpha) * hurwitz_zeta(z + 1 - alpha, a, cfg).value
    return cmath.exp(-alpha * math.log(b)) * gamma(alpha) / sinpi(z - alpha) * bracket


def check_mellin(z, alpha, a: float, b: float, tol: float = 1e-8, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityReport:
    """int_0^inf q^(alpha-1) psi(z, a + bq) dq for 0 < Re alpha < Re z and a, b > 0."""
    z, alpha = complex(z), complex(alpha)
    a, b = float(a), float(b)
    if not 0 < alpha.real < z.real:
        raise HypothesisError(f"needs 0 < Re alpha < Re z, got alpha = {alpha}, z = {z}")
    if not (a > 0 and b > 0):
        raise HypothesisError(f"needs a, b > 0, got a = {a}, b = {b}")
    d = z - alpha
    if abs(d - round(d.real)) < 1e-6:
        raise HypothesisError(f"z - alpha = {d} is too close to an integer")

    def f(q):
        return cmath.exp((alpha - 1) * math.log(q)) * gen_polygamma(z, a + b * q, cfg).value

    lhs = quad_zero_to_inf(f, tol=_quad_tol(tol)).value
    inputs = {"z": z, "alpha": alpha, "a": a, "b": b}
    return make_report("psi-mellin", inputs, lhs, mellin_closed_form(z, alpha, a, b, cfg), tol)
