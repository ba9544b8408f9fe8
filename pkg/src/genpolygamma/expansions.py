"""Series and asymptotic representations of psi(z, q).

Each evaluator here is an independent route to the same function and is used
both as an alternative method and as a cross-check on the direct evaluator:

* Taylor series about q = 1 (radius 1),
* Fourier series in q on [0, 1] for Re z < -1,
* small-q form (explicit singular part plus a Taylor polynomial),
* large-q asymptotic series with smallest-term truncation,
* Grossman's fractional-integration polygamma and its difference Psi(nu, q)
  from psi(nu, q).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, NoConvergenceError
from .genpoly import gen_polygamma, psi_at_one, shift_rhs
from .hurwitz import hurwitz_zeta_all
from .kernel import BERNOULLI, EULER_GAMMA, LN_TWO_PI, cospi, gamma, harmonic, recip_gamma, reg_ratio, sinpi


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    est_truncation: float


@dataclass(frozen=True)
class AsymptoticResult:
    value: complex
    terms_used: int
    first_omitted: float


def _tail_ratio(absq: float, growth: float, k: int) -> float:
    # terms behave like k^growth |q|^k, so successive ratios are bounded by this
    return absq * (1 + 1 / (k + 1)) ** max(growth, 0.0)


# ---------------------------------------------------------------------------
# Taylor series about q = 1


def _psi_one_over_factorial(w: complex, rho: complex, cfg: EvalConfig) -> complex:
    """psi(w, 1)/k! for Re w >= 1/2, given rho = Gamma(1+w)/k!.

    Writing both Gamma factors through Gamma(1+w) keeps the terms finite for large
    k, where Gamma(1+w) and k! individually overflow.
    """
    (zeta, dzeta), _ = hurwitz_zeta_all(w + 1, 1, 1, cfg)
    s = sinpi(w) / math.pi
    return -rho * (s * (dzeta + harmonic(w) * zeta) + cospi(w) * zeta)


def taylor_psi(z, q, tol: float = 1e-13, max_terms: int = 2000, cfg: EvalConfig = DEFAULT_CONFIG) -> SeriesResult:
    """psi(z, q+1) = sum_k psi(z+k, 1) q^k / k!, for |q| < 1.

    Stops when the geometric bound on the remaining tail falls below
    ``tol * max(1, |sum|)``.
    """
    z, q = complex(z), complex(q)
    r = abs(q)
    if not r < 1:
        raise DomainError(f"the Taylor series about q = 1 needs |q| < 1, got {q}")
    k0 = max(0, math.ceil(0.5 - z.real))  # first k with Re(z+k) >= 1/2
    acc = 0j
    qk = 1 + 0j
    rho = None
    for k in range(max_terms):
        w = z + k
        if k < k0:
            c = gen_polygamma(w, 1, cfg).value / math.factorial(k)
        else:
            if rho is None:
                rho = gamma(1 + w) / math.factorial(k)
            else:
                rho *= w / k
            c = _psi_one_over_factorial(w, rho, cfg)
        term = c * qk
        acc += term
        if r == 0:
            return SeriesResult(acc, 1, 0.0)
        ratio = _tail_ratio(r, z.real, k)
        if k >= 2 and ratio < 1:
            est = abs(term) * ratio / (1 - ratio)
            if est <= tol * max(1.0, abs(acc)):
                return SeriesResult(acc, k + 1, est)
        qk *= q
    raise NoConvergenceError(f"Taylor series did not converge in {max_terms} terms (|q| = {r})")


# ---------------------------------------------------------------------------
# Fourier series on [0, 1]


def _fourier_tail_bound(z: complex, q: float, N: int) -> float:
    """Rigorous bound on the neglected part of the Fourier series after N terms.

    The smaller of a bound by absolute values (integral test) and, away from
    the endpoints, an Abel summation bound using |sum e^{2 pi i n q}| <= 1/|sin pi q|.
    """
    x, y = z.real, z.imag
    pref = 2 * (2 * math.pi) ** x
    lnN = math.log(N)
    c = EULER_GAMMA + LN_TWO_PI + 0.5 * math.pi
    mono = pref * math.cosh(0.5 * math.pi * y) * N ** (x + 1) * ((c + lnN) / (-x - 1) + 1 / (x + 1) ** 2)
    s = abs(math.sin(math.pi * q))
    if s == 0:
        return mono
    az = abs(z)
    a = az * (EULER_GAMMA + LN_TWO_PI) + 1
    var_log = N ** x * ((a + az * lnN) / (-x) + az / x ** 2)
    var_sin = 0.5 * math.pi * az * N ** x / (-x)
    abel = pref * math.exp(0.5 * math.pi * abs(y)) * (var_log + var_sin) / s
    return min(mono, abel)


def fourier_psi(z, q, tol: float = 1e-10, max_terms: int = 2**24) -> SeriesResult:
    """psi(z, q) for Re z < -1 and real q in [0, 1] from its Fourier series

    2 (2 pi)^z sum_n n^z [(gamma + ln 2 pi n) cos(2 pi n q + pi z/2)
                          - (pi/2) sin(2 pi n q + pi z/2)].

    The number of terms is the smallest power of two for which the tail bound
    is below ``tol`` (absolute). Near q = 0 or 1 only the slowly decaying
    absolute bound is available, so Re z close to -1 may exhaust ``max_terms``.
    """
    z = complex(z)
    q = float(q.real if isinstance(q, complex) else q)
    if not z.real < -1:
        raise DomainError(f"the Fourier series converges only for Re z < -1, got z = {z}")
    if not 0 <= q <= 1:
        raise DomainError(f"fourier_psi needs real q in [0, 1], got {q}")
    qr = q - math.floor(q)  # q = 1 is folded onto q = 0 so both give identical sums
    N = 64
    while True:
        bound = _fourier_tail_bound(z, qr, N)
        if bound <= tol:
            break
        N *= 2
        if N > max_terms:
            raise NoConvergenceError(
                f"Fourier tail bound {bound:.3g} above tol after {max_terms} terms (z = {z}, q = {q})"
            )
    phase = 0.5 * math.pi * z
    acc = 0j
    chunk = 1 << 20
    for start in range(1, N + 1, chunk):
        n = np.arange(start, min(N, start + chunk - 1) + 1, dtype=float)
        # angle 2 pi n q reduced modulo 2 pi before scaling by pi
        arg = math.pi * np.mod(2.0 * n * qr, 2.0) + phase
        nz = np.exp(z * np.log(n))
        part = nz * ((EULER_GAMMA + LN_TWO_PI + np.log(n)) * np.cos(arg) - 0.5 * math.pi * np.sin(arg))
        acc += complex(part.sum())
    value = 2 * cmath.exp(z * LN_TWO_PI) * acc
    return SeriesResult(value, N, bound)


# ---------------------------------------------------------------------------
# small q


def small_q_psi(z, q, order: int = 2, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Singular part at q = 0 plus the Taylor polynomial through q^order.

    psi(z, q) = -ln q/(q^(z+1) Gamma(-z)) + H(-z-1)/(q^(z+1) Gamma(-z))
                + sum_{k<=order} psi(z+k, 1) q^k/k! + O(q^(order+1))
    """
    z, q = complex(z), complex(q)
    if q.real <= 0 or not 0 < abs(q) <= 0.1:
        raise DomainError(f"small_q_psi needs 0 < |q| <= 0.1 and Re q > 0, got {q}")
    if order < 0:
        raise ValueError("order must be non-negative")
    acc = -shift_rhs(z, q)
    qk = 1 + 0j
    for k in range(order + 1):
        acc += psi_at_one(z + k, cfg) * qk / math.factorial(k)
        qk *= q
    return acc


# ---------------------------------------------------------------------------
# large q


def _superasymptotic(term, max_k: int, skip_odd: bool = True) -> AsymptoticResult:
    """Sum term(k) for k = 0..max_k, stopping before the smallest-magnitude term.

    With ``skip_odd`` the odd k >= 3 (vanishing Bernoulli numbers) are not
    evaluated. Exact zeros never take part in the growth test, and the first
    three nonzero terms are always kept.
    """
    acc = 0j
    used = 0
    last = None  # (term, sum before it)
    k = 0
    while True:
        if skip_odd and k >= 3 and k % 2 == 1:
            k += 1
            continue
        t = term(k)
        if k > max_k:
            return AsymptoticResult(acc, used, abs(t))
        if t != 0:
            if used >= 3 and abs(t) > abs(last[0]):
                # the series has turned around: the previous term was the smallest
                return AsymptoticResult(last[1], used - 1, abs(last[0]))
            last = (t, acc)
            acc += t
            used += 1
        k += 1


def _asymptotic_term(z: complex, q: float, lnq: float, k: int) -> complex:
    b = BERNOULLI[k]
    if b == 0:
        return 0j
    w = z + k - 1
    bracket = lnq * recip_gamma(-w) - reg_ratio(w)
    return b / math.factorial(k) * cmath.exp(-(k + z) * lnq) * bracket


def asymptotic_psi(z, q, max_k: int = 40) -> AsymptoticResult:
    """Large-q expansion

    psi(z, q) ~ sum_k B_k/k! q^(-k-z) [ln q - H(-z-k)] / Gamma(1-z-k),

    truncated just before its smallest term (or after k = max_k).
    """
    z = complex(z)
    q = float(q.real if isinstance(q, complex) else q)
    if not q >= 10:
        raise DomainError(f"asymptotic_psi is intended for real q >= 10, got {q}")
    if max_k > BERNOULLI.max_index - 2:
        raise ValueError(f"max_k must be <= {BERNOULLI.max_index - 2}")
    lnq = math.log(q)
    return _superasymptotic(lambda k: _asymptotic_term(z, q, lnq, k), max_k)


# ---------------------------------------------------------------------------
# Grossman's polygamma


@lru_cache(maxsize=4096)
def _psi_int_one(k: int) -> float:
    # psi(k, 1) = psi^(k)(1): -gamma at k = 0, else (-1)^(k+1) k! zeta(k+1)
    if k == 0:
        return -EULER_GAMMA
    (zeta,), _ = hurwitz_zeta_all(k + 1, 1, 0)
    return (-1) ** (k + 1) * zeta.real


@lru_cache(maxsize=4096)
def _zeta_int(k: int) -> float:
    (zeta,), _ = hurwitz_zeta_all(k, 1, 0)
    return zeta.real


def grossman_psi(nu, q, tol: float = 1e-13, max_terms: int = 5000) -> SeriesResult:
    """Grossman's polygamma of order nu for 0 < |q| < 1, Re q > 0:

    [H(-nu-1) - ln q]/(q^(nu+1) Gamma(-nu)) + sum_k psi(k, 1) q^(k-nu)/Gamma(k+1-nu).

    For nu = m >= 0 this is the polygamma psi^(m)(q); for nu = -m it is the
    Gosper-Adamchik negapolygamma.
    """
    nu, q = complex(nu), complex(q)
    r = abs(q)
    if q.real <= 0 or not 0 < r < 1:
        raise DomainError(f"grossman_psi needs 0 < |q| < 1 and Re q > 0, got {q}")
    acc = -shift_rhs(nu, q)
    q_nu = cmath.exp(-nu * cmath.log(q))  # principal q^-nu
    # k!/Gamma(k+1-nu): direct while k+1-nu may sit near a pole of Gamma, then by recurrence
    k_direct = max(1, math.ceil(nu.real) + 1)
    coef = None
    qk = q_nu
    series = 0j
    for k in range(max_terms):
        if k <= k_direct:
            coef = math.factorial(k) * recip_gamma(k + 1 - nu)
        else:
            coef *= k / (k - nu)
        if k == 0:
            c = -EULER_GAMMA
        else:
            # psi(k, 1)/k! = (-1)^(k+1) zeta(k+1); the k! lives in coef
            c = (-1) ** (k + 1) * _zeta_int(k + 1)
        term = c * coef * qk
        series += term
        ratio = _tail_ratio(r, nu.real, k)
        # terms up to k_direct may vanish identically, so they say nothing about the tail
        if k > k_direct and ratio < 1:
            est = abs(term) * ratio / (1 - ratio)
            total = acc + series
            if est <= tol * max(1.0, abs(total)):
                return SeriesResult(total, k + 1, est)
        qk *= q
    raise NoConvergenceError(f"Grossman series did not converge in {max_terms} terms (|q| = {r})")


def grossman_asymptotic(nu, q, max_k: int = 30) -> AsymptoticResult:
    """Large-q expansion of Grossman's polygamma.

    It differs from that of psi(nu, q) by sum_{k>=1} psi(-k, 1) q^(-k-nu)/Gamma(1-nu-k),
    the expansion of Psi(nu, q).
    """
    nu = complex(nu)
    q = float(q.real if isinstance(q, complex) else q)
    if not q >= 10:
        raise DomainError(f"grossman_asymptotic is intended for real q >= 10, got {q}")
    if max_k > BERNOULLI.max_index - 2:
        raise ValueError(f"max_k must be <= {BERNOULLI.max_index - 2}")
    lnq = math.log(q)
    main = _superasymptotic(lambda k: _asymptotic_term(nu, q, lnq, k), max_k)

    # the correction has no vanishing odd terms, so it is truncated on its own
    def corr(k):
        if k == 0:
            return 0j
        return psi_at_one(-k) * recip_gamma(1 - nu - k) * cmath.exp(-(k + nu) * lnq)

    c = _superasymptotic(corr, max_k, skip_odd=False)
    return AsymptoticResult(
        main.value - c.value, main.terms_used + c.terms_used, max(main.first_omitted, c.first_omitted)
    )


def psi_difference(nu, q, tol: float = 1e-13, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Psi(nu, q) = psi(nu, q) - (Grossman's polygamma of order nu)(q)."""
    g = grossman_psi(nu, q, tol)
    return gen_polygamma(nu, q, cfg).value - g.value


def psi_difference_polynomial(m: int, q, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Closed form of Psi(-m, q): sum_{r<m} q^(m-r-1) psi(-r-1, 1)/Gamma(m-r)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    q = complex(q)
    return sum(q ** (m - r - 1) / math.factorial(m - r - 1) * psi_at_one(-r - 1, cfg) for r in range(m))


__all__ = [
    "AsymptoticResult",
    "SeriesResult",
    "asymptotic_psi",
    "fourier_psi",
    "grossman_asymptotic",
    "grossman_psi",
    "psi_difference",
    "psi_difference_polynomial",
    "small_q_psi",
    "taylor_psi",
]
