import math

import numpy as np
import pytest

import oracles as O
from genpolygamma import (
    DomainError,
    EULER_GAMMA,
    NoConvergenceError,
    asymptotic_psi,
    balanced_negapolygamma,
    digamma,
    fourier_psi,
    gen_polygamma,
    gosper_negapolygamma,
    grossman_asymptotic,
    grossman_psi,
    log_gamma,
    polygamma,
    psi_at_one,
    psi_difference,
    psi_difference_polynomial,
    shift_rhs,
    small_q_psi,
    taylor_psi,
)

HALF_LN2PI = 0.5 * math.log(2 * math.pi)


def psi(z, q):
    return gen_polygamma(z, q).value


# --- Taylor series about q = 1 -------------------------------------------------


def test_taylor_examples():
    r = taylor_psi(0, 0.5)
    assert abs(r.value - digamma(1.5)) <= 1e-13
    series = -EULER_GAMMA + float(O.mp.nsum(lambda k: (-1) ** (k + 1) * O.mp.zeta(k + 1) * O.mp.mpf(0.5) ** k, [1, O.mp.inf]))
    assert abs(r.value - series) <= 1e-13
    assert abs(taylor_psi(-1, 0.5).value - (log_gamma(1.5) - HALF_LN2PI)) <= 1e-13
    assert abs(taylor_psi(-2.3, 0.4).value - psi(-2.3, 1.4)) <= 1e-10


def test_taylor_result_fields():
    r = taylor_psi(1.5 + 0.5j, 0.6, tol=1e-12)
    assert r.est_truncation <= 1e-12 * max(1, abs(r.value))
    assert 0 < r.terms_used <= 2000


def test_taylor_domain():
    with pytest.raises(DomainError):
        taylor_psi(0.5, 1.0)
    with pytest.raises(NoConvergenceError):
        taylor_psi(0.5, 0.97, max_terms=50)


@pytest.mark.parametrize("radius,tol", [(0.1, 1e-9), (0.5, 1e-9), (0.8, 1e-7)])
def test_taylor_matches_direct(radius, tol):
    rng = np.random.default_rng(int(radius * 10))
    for _ in range(20):
        z = complex(rng.uniform(-5, 4), rng.uniform(-2, 2))
        q = radius * np.exp(1j * rng.uniform(0, 2 * math.pi))
        assert O.mixed_err(taylor_psi(z, q).value, psi(z, 1 + q)) <= tol, (z, q)


@pytest.mark.parametrize("z,q", [(-1.5, 0.3), (2.5 + 1j, -0.4 + 0.2j), (0.3, 0.75j)])
def test_taylor_against_definition(z, q):
    assert O.relerr(taylor_psi(z, q).value, O.psi_definition(z, 1 + q)) <= 1e-11


# --- Fourier series ---------------------------------------------------------------


def test_fourier_examples():
    for q in (0.1, 0.37, 0.5, 0.9):
        assert abs(fourier_psi(-2, q, tol=1e-12).value - balanced_negapolygamma(2, q)) <= 1e-10
    assert abs(fourier_psi(-2.5, 0.25).value - psi(-2.5, 0.25)) <= 1e-8
    assert fourier_psi(-3, 0).value == fourier_psi(-3, 1).value


def test_fourier_domain():
    with pytest.raises(DomainError):
        fourier_psi(-1, 0.5)
    with pytest.raises(DomainError):
        fourier_psi(-0.5 + 1j, 0.5)
    with pytest.raises(DomainError):
        fourier_psi(-2, 1.5)
    with pytest.raises(NoConvergenceError):
        fourier_psi(-1.05, 0.0, tol=1e-10)


@pytest.mark.parametrize("z,q", [(-1.8 + 0.3j, 0.2), (-3.3, 0.61), (-4.5 - 0.8j, 0.05), (-2.2, 0.999)])
def test_fourier_against_definition(z, q):
    r = fourier_psi(z, q, tol=1e-11)
    ref = O.psi_definition(z, q)
    assert abs(r.value - ref) <= 5e-11 * max(1, abs(ref))
    assert r.est_truncation <= 1e-11


def test_fourier_endpoint_equality():
    # (at Re z = -1.5 the endpoint series decays like N^-0.5 and is out of reach)
    for z in (-2.5, -4, -3 + 0.5j):
        assert fourier_psi(z, 0).value == fourier_psi(z, 1).value


@pytest.mark.parametrize("z", [-2.5, -4])
def test_fourier_trapezoid_equals_exact_trapezoid(z):
    # the 512-node trapezoid of the series agrees with that of the exact function;
    # what remains is the rule's aliasing error, not an evaluator error
    qs = np.linspace(0, 1, 513)
    w = np.full(513, 1 / 512)
    w[[0, -1]] /= 2
    fser = np.array([fourier_psi(z, q, tol=1e-11).value for q in qs])
    exact = np.array([psi_at_one(z)] + [psi(z, q) for q in qs[1:]])
    assert abs(w @ fser - w @ exact) <= 1e-9


# --- small q ------------------------------------------------------------------------


def test_small_q_integer_order():
    for m in range(4):
        q = 0.01
        lead = (-1) ** (m + 1) * math.factorial(m) / q ** (m + 1)
        # the log term drops: the singular part is exactly the polygamma pole
        assert abs(-shift_rhs(m, q) - lead) <= 1e-13 * abs(lead)
        v = small_q_psi(m, q, order=0)
        assert abs(v - (lead + polygamma(m, 1))) <= 1e-12 * abs(lead)
        assert O.relerr(small_q_psi(m, q, order=6), psi(m, q)) <= 1e-12


def test_small_q_limit_at_zero():
    v = small_q_psi(-2.5, 1e-10, order=0)
    assert abs(v - psi_at_one(-2.5)) <= 1e-12


def test_small_q_accuracy():
    assert O.relerr(small_q_psi(-0.5, 0.01, order=2), psi(-0.5, 0.01)) <= 1e-4
    # the remainder shrinks like q^(order+1)
    errs = [abs(small_q_psi(-0.5 + 0.3j, 0.05, order=k) - psi(-0.5 + 0.3j, 0.05)) for k in range(4)]
    assert all(b < a * 0.2 for a, b in zip(errs, errs[1:]))
    with pytest.raises(DomainError):
        small_q_psi(-0.5, 0.2)
    with pytest.raises(DomainError):
        small_q_psi(-0.5, -0.05)


# --- large q ------------------------------------------------------------------------


def test_asymptotic_examples():
    r = asymptotic_psi(-1.5, 50, max_k=8)
    assert abs(r.value - psi(-1.5, 50)) <= 1e-8
    r = asymptotic_psi(0, 30)
    assert abs(r.value - digamma(30)) <= 1e-14
    # the leading terms are the classical ln q - 1/(2q) - 1/(12 q^2)
    r2 = asymptotic_psi(0, 30, max_k=2)
    assert abs(r2.value - (math.log(30) - 1 / 60 - 1 / (12 * 900))) <= 1e-15


@pytest.mark.parametrize("m", [1, 2, 3])
def test_asymptotic_negative_integer_orders(m):
    # oracle: psi(-m, 1) pushed to q = 12 by eleven applications of the shift identity
    q = 12
    ref = psi_at_one(-m) + sum(shift_rhs(-m, j) for j in range(1, q))
    assert O.mixed_err(asymptotic_psi(-m, q).value, ref) <= 1e-12


def test_asymptotic_first_omitted_decreases():
    for z in (-1.5, 0.5, 2 + 1j):
        om = [asymptotic_psi(z, q, max_k=10).first_omitted for q in (10, 20, 40, 80)]
        assert all(b < a for a, b in zip(om, om[1:]))
        # roughly one power of q per doubling at least
        assert om[-1] < om[0] / 8


def test_asymptotic_superasymptotic_stop():
    # with a generous max_k the sum stops before its smallest term
    r = asymptotic_psi(3.5, 10, max_k=90)
    assert r.terms_used < 46
    assert O.relerr(r.value, psi(3.5, 10)) <= 1e-12


def test_asymptotic_domain():
    with pytest.raises(DomainError):
        asymptotic_psi(-1.5, 5)
    with pytest.raises(ValueError):
        asymptotic_psi(-1.5, 50, max_k=200)


# --- Grossman's polygamma -----------------------------------------------------------


def test_grossman_examples():
    assert abs(grossman_psi(1, 0.5).value - 3 * O.zeta_sum(2)) <= 1e-12
    assert abs(grossman_psi(1, 0.5).value - 4.934802200544679) <= 1e-12
    g = grossman_psi(-2, 0.5).value
    assert abs(g - gosper_negapolygamma(2, 0.5)) <= 1e-12
    assert abs(g - O.gosper_quadrature(2, 0.5)) <= 1e-12
    g = grossman_psi(0.5, 0.3)
    assert np.isfinite(g.value)
    assert abs(psi_difference(0.5, 0.3) - (psi(0.5, 0.3) - g.value)) <= 1e-14


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_grossman_nonnegative_integer_orders(m):
    for q in (0.2, 0.55 + 0.3j, 0.85):
        assert O.mixed_err(grossman_psi(m, q).value, polygamma(m, q)) <= 1e-11


@pytest.mark.parametrize("m", [2, 3, 4])
def test_grossman_negative_integer_orders(m):
    for q in (0.25, 0.8):
        assert O.mixed_err(grossman_psi(-m, q).value, O.gosper_quadrature(m, q)) <= 1e-11


def test_grossman_fractional_integral_oracle():
    # 30 (nu, q) in the convergence disc, against the Liouville integral of psi(1 + t)
    rng = np.random.default_rng(5)
    for _ in range(30):
        nu = complex(rng.uniform(-3.9, -0.1), rng.uniform(-0.5, 0.5))
        if abs(nu - round(nu.real)) < 0.05:
            continue
        q = float(rng.uniform(0.1, 0.9))
        assert O.mixed_err(grossman_psi(nu, q).value, O.grossman_fractional(nu, q)) <= 1e-8, (nu, q)


def test_grossman_domain():
    for q in (1.2, 0, -0.3, 1.0):
        with pytest.raises(DomainError):
            grossman_psi(0.5, q)


def test_psi_difference_examples():
    assert abs(psi_difference(2, 0.4)) <= 1e-10
    assert abs(psi_difference(-1, 0.7) + HALF_LN2PI) <= 1e-12
    # degree-2 polynomial at nu = -3 (q = 1.2 lies outside the series disc)
    for q in (0.3, 0.6 + 0.2j, 0.9):
        assert abs(psi_difference(-3, q) - psi_difference_polynomial(3, q)) <= 1e-10
    with pytest.raises(DomainError):
        psi_difference(-3, 1.2)
    p = psi_difference_polynomial(3, 1.2)
    expect = 1.2 ** 2 / 2 * psi_at_one(-1) + 1.2 * psi_at_one(-2) + psi_at_one(-3)
    assert abs(p - expect) <= 1e-14


def test_psi_difference_third_difference():
    qs = 0.2 + 0.15 * np.arange(4)
    v = [psi_difference(-3, q) for q in qs]
    d3 = v[3] - 3 * v[2] + 3 * v[1] - v[0]
    assert abs(d3) <= 1e-8


@pytest.mark.parametrize("nu,q", [(-1.5, 15), (-2.5 + 0.5j, 20), (-0.5, 12), (-3.7, 10)])
def test_grossman_asymptotic_fractional_oracle(nu, q):
    assert O.mixed_err(grossman_asymptotic(nu, q).value, O.grossman_fractional(nu, q)) <= 1e-12


def test_grossman_asymptotic():
    assert O.mixed_err(grossman_asymptotic(-2, 10).value, gosper_negapolygamma(2, 10)) <= 1e-10
    assert O.mixed_err(grossman_asymptotic(1, 20).value, polygamma(1, 20)) <= 1e-12
    # at large q the two expansions differ by the Psi polynomial
    q = 12
    diff = asymptotic_psi(-3, q).value - grossman_asymptotic(-3, q).value
    assert O.mixed_err(diff, psi_difference_polynomial(3, q)) <= 1e-10
