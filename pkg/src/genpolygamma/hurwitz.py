"""Hurwitz zeta function and its s-derivatives by Euler-Maclaurin summation.

    zeta(s, q) = sum_{n<N} (n+q)^-s + (N+q)^(1-s)/(s-1) + (N+q)^-s / 2
                 + sum_{k=1}^{M} B_2k/(2k)! (s)_{2k-1} (N+q)^(-s-2k+1) + R

Every term is differentiated analytically in s, so zeta, zeta' and zeta'' share
one pass. N is doubled until the first omitted correction term is below the
requested tolerance.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .config import DEFAULT_CONFIG, POLE_SNAP, EvalConfig
from .errors import DomainError, NoConvergenceError, PoleError
from .kernel import BERNOULLI

_EPS = 2.220446049250313e-16
_FACT = [math.factorial(k) for k in range(2 * 51 + 1)]


@dataclass(frozen=True)
class ZetaValue:
    value: complex
    est_error: float


def _check_q(q: complex):
    if q.real <= 0:
        raise DomainError(f"Hurwitz zeta requires Re q > 0, got {q}")
    if abs(q) < POLE_SNAP:
        raise DomainError(f"q = {q} is too close to the pole at 0")


def _check_s(s: complex):
    if abs(s - 1) < POLE_SNAP:
        raise PoleError(f"zeta(s, q) has a pole at s = 1 (s = {s})")


def _partial_sums(s: complex, q: complex, N: int, order: int) -> list[complex]:
    if N <= 64:
        out = [0j] * (order + 1)
        for n in range(N):
            L = cmath.log(n + q)
            p = cmath.exp(-s * L)
            out[0] += p
            if order >= 1:
                out[1] -= L * p
            if order >= 2:
                out[2] += L * L * p
        return out
    a = np.arange(N, dtype=float) + q
    L = np.log(a)
    p = np.exp(-s * L)
    out = [complex(p.sum())]
    if order >= 1:
        out.append(complex(-(L * p).sum()))
    if order >= 2:
        out.append(complex((L * L * p).sum()))
    return out


def _integral_term(z: complex, L: complex, order: int, regular: bool) -> list[complex]:
    """d^j/dz^j of e^{-zL}/z, or of (e^{-zL} - 1)/z when ``regular``."""
    u = -z * L
    if regular and abs(u) < 1.0:
        # sum_{n>j} (-L)^n z^(n-1-j) (n-1)!/((n-1-j)! n!)
        out = []
        for j in range(order + 1):
            acc = 0j
            term_pow = (-L) ** (j + 1)
            n = j + 1
            while n < 80:
                t = term_pow * (math.perm(n - 1, j) / math.factorial(n))
                acc += t
                if abs(t) <= 1e-18 * abs(acc):
                    break
                n += 1
                term_pow *= -L * z
            out.append(acc)
        return out
    e = cmath.exp(u)
    g = [_expm1c(u) if regular else e] + [(-L) ** k * e for k in range(1, order + 1)]
    out = []
    for j in range(order + 1):
        acc = 0j
        for i in range(j + 1):
            acc += comb(j, i) * g[j - i] * ((-1) ** i) * _FACT[i] / z ** (i + 1)
        out.append(acc)
    return out


def _expm1c(u: complex) -> complex:
    if u.imag == 0.0:
        return complex(math.expm1(u.real), 0.0)
    if abs(u) < 1e-5:
        return u + u * u / 2 + u ** 3 / 6
    # expm1(x+iy) = expm1(x) cos y + (cos y - 1) + i e^x sin y
    x, y = u.real, u.imag
    cm1 = -2.0 * math.sin(y / 2) ** 2
    return complex(math.expm1(x) * math.cos(y) + cm1, math.exp(x) * math.sin(y))


def _em_fixed(s: complex, q: complex, order: int, N: int, M: int, regular: bool):
    """One Euler-Maclaurin pass; returns (values, first omitted terms, magnitude sums)."""
    vals = _partial_sums(s, q, N, order)
    a = N + q
    L = cmath.log(a)
    aS = cmath.exp(-s * L)  # a^-s
    # magnitude of the largest summand, used for the roundoff estimate
    mag = max(abs(aS), abs(cmath.exp(-s * cmath.log(q)))) * (1 + abs(L)) ** order
    z = s - 1
    integ = _integral_term(z, L, order, regular)
    for j in range(order + 1):
        vals[j] += integ[j] + 0.5 * (-L) ** j * aS
        mag = max(mag, abs(integ[j]))
    # Pochhammer (s)_{2k-1} and its s-derivatives via repeated products
    P = [1 + 0j, 0j, 0j]
    nxt = 0
    inv_a2 = 1.0 / (a * a)
    pk = aS * a  # becomes a^(-s-2k+1) after the first update
    errs = [0.0] * (order + 1)
    prev = [0.0] * (order + 1)
    growing = False
    for k in range(1, M + 2):
        while nxt < 2 * k - 1:
            f = s + nxt
            P = [P[0] * f, P[1] * f + P[0], P[2] * f + 2 * P[1]]
            nxt += 1
        pk = pk * inv_a2
        coef = BERNOULLI[2 * k] / _FACT[2 * k]
        for j in range(order + 1):
            t = 0j
            for i in range(j + 1):
                t += comb(j, i) * P[i] * (-L) ** (j - i)
            t *= coef * pk
            if k <= M:
                vals[j] += t
                mag = max(mag, abs(t))
                if k > M - 2 and abs(t) > prev[j] > 0:
                    growing = True
                prev[j] = abs(t)
            else:
                errs[j] = abs(t)
                if abs(t) > prev[j] > 0:
                    growing = True
    if growing:
        # the correction series has started to diverge: the bound is meaningless
        errs = [math.inf] * (order + 1)
    return vals, errs, mag


def _em(s: complex, q: complex, order: int, cfg: EvalConfig, regular: bool = False):
    """Euler-Maclaurin values [zeta, zeta', ...] (pole-free part if ``regular``).

    For Re s < 0 the explicit summands grow like (N+q)^-s and cancel, so the
    smallest admissible N is searched upward from 0; otherwise N starts at
    ``em_shift_terms``. N is doubled beyond that until the first omitted
    correction term passes the tolerance.
    """
    M = cfg.em_tail_terms
    scale = abs(cmath.exp(-s * cmath.log(q)))
    if s.real >= 30 and not regular:
        return _direct_sum(s, q, order, cfg, scale)
    if s.real < 0:
        candidates = list(range(0, cfg.em_shift_terms))
    else:
        candidates = []
    N = cfg.em_shift_terms
    while N <= cfg.max_series_terms:
        candidates.append(N)
        N *= 2
    # at s = 0, -1, ..., 1-2M the correction series terminates and is exact for any N
    terminating = s.imag == 0 and s.real == round(s.real) and 1 - 2 * M <= s.real <= 0
    for N in candidates:
        if not terminating and abs(s + 2 * M + 1) > 2 * math.pi * abs(N + q):
            continue
        vals, errs, mag = _em_fixed(s, q, order, N, M, regular)
        ok = True
        for j in range(order + 1):
            tol = cfg.target_tol * max(abs(vals[j]), scale, 1e-300)
            if not errs[j] <= tol:
                ok = False
        if ok:
            roundoff = 8 * _EPS * mag * (1 + abs(s))
            est = [max(errs[j], roundoff, 4 * _EPS * abs(vals[j])) for j in range(order + 1)]
            return vals, est
    raise NoConvergenceError(
        f"Euler-Maclaurin did not converge for s={s}, q={q} within {cfg.max_series_terms} terms"
    )


def _direct_sum(s: complex, q: complex, order: int, cfg: EvalConfig, scale: float):
    # for large Re s the defining series converges geometrically fast
    sigma = s.real
    vals = [0j] * (order + 1)
    n = 0
    while n <= cfg.max_series_terms:
        a = n + q
        L = cmath.log(a)
        p = cmath.exp(-s * L)
        for j in range(order + 1):
            vals[j] += (-L) ** j * p
        # geometric-type tail: sum_{m>n} |(m+q)^-s log^j| <= |a_n^-s| (1 + |a|/(sigma-1)) (1+|L|)^j
        tail = abs(p) * (1 + abs(a) / (sigma - 1)) * 2
        if n > 0 and all(
            tail * (1 + abs(L)) ** j <= 1e-3 * cfg.target_tol * max(abs(vals[j]), 1e-300 * scale)
            for j in range(order + 1)
        ):
            break
        n += 1
    else:
        raise NoConvergenceError(f"direct Hurwitz sum did not converge for s={s}, q={q}")
    est = [max(tail * (1 + abs(L)) ** j, 4 * _EPS * abs(v)) for j, v in enumerate(vals)]
    return vals, est


def hurwitz_zeta(s, q, cfg: EvalConfig = DEFAULT_CONFIG) -> ZetaValue:
    """zeta(s, q) for complex s != 1 and Re q > 0."""
    s, q = complex(s), complex(q)
    _check_s(s)
    _check_q(q)
    vals, errs = _em(s, q, 0, cfg)
    return ZetaValue(vals[0], errs[0])


def hurwitz_zeta_ds(s, q, order: int = 1, cfg: EvalConfig = DEFAULT_CONFIG) -> ZetaValue:
    """order-th partial derivative of zeta(s, q) in s (order 1 or 2)."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    s, q = complex(s), complex(q)
    _check_s(s)
    _check_q(q)
    vals, errs = _em(s, q, order, cfg)
    return ZetaValue(vals[order], errs[order])


def hurwitz_zeta_all(s, q, order: int, cfg: EvalConfig = DEFAULT_CONFIG, regular: bool = False):
    """Values and error estimates of zeta and its first ``order`` s-derivatives.

    With ``regular`` the polar part 1/(s-1) is removed, so the result is finite
    (and accurate) at and around s = 1.
    """
    s, q = complex(s), complex(q)
    if not regular:
        _check_s(s)
    _check_q(q)
    return _em(s, q, order, cfg, regular=regular)


def pochhammer(s, m: int) -> complex:
    """Rising factorial (s)_m by direct product."""
    acc = 1 + 0j
    for i in range(m):
        acc *= s + i
    return acc


def hurwitz_zeta_dq(s, q, m: int, cfg: EvalConfig = DEFAULT_CONFIG) -> ZetaValue:
    """m-th q-derivative: (-1)^m (s)_m zeta(s+m, q)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    s = complex(s)
    if abs(s + m - 1) < POLE_SNAP:
        raise PoleError(f"zeta(s+m, q) has a pole: s + m = {s + m}")
    z = hurwitz_zeta(s + m, q, cfg)
    c = (-1) ** m * pochhammer(s, m)
    return ZetaValue(c * z.value, abs(c) * z.est_error)


def riemann_zeta(s, cfg: EvalConfig = DEFAULT_CONFIG) -> ZetaValue:
    return hurwitz_zeta(s, 1, cfg)


def riemann_zeta_ds(s, order: int = 1, cfg: EvalConfig = DEFAULT_CONFIG) -> ZetaValue:
    return hurwitz_zeta_ds(s, 1, order, cfg)
