"""Randomized functional-equation suites and the fixed integral grid.

Samples come from a seeded numpy generator, so a suite run is reproducible from
its (suite, samples, seed) triple. Reports are returned in generation order.
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from ..config import DEFAULT_CONFIG, EvalConfig
from ..expansions import fourier_psi, psi_difference, psi_difference_polynomial, taylor_psi
from ..genpoly import (
    balanced_negapolygamma,
    duplication_lhs_rhs,
    gen_polygamma,
    multiplication_lhs_rhs,
    shift_rhs,
)
from . import identities as ident
from .identities import IdentityReport, make_report

SUITES = ("shift", "mult", "derivative", "negapoly", "taylor", "fourier", "grossman")

DEFAULT_TOLS = {
    "shift": 1e-10,
    "mult": 1e-10,
    "derivative": 1e-6,
    "negapoly": 1e-11,
    "taylor": 1e-9,
    "fourier": 1e-8,
    "grossman": 1e-8,
}


def _z(rng, re=(-5.0, 5.0), im=(-3.0, 3.0)) -> complex:
    return complex(rng.uniform(*re), rng.uniform(*im))


def _q(rng, re=(0.1, 5.0), im=(-3.0, 3.0)) -> complex:
    return complex(rng.uniform(*re), rng.uniform(*im))


def suite_shift(n: int, rng, tol=None, cfg: EvalConfig = DEFAULT_CONFIG) -> list[IdentityReport]:
    tol = tol or DEFAULT_TOLS["shift"]
    out = []
    for _ in range(n):
        # z uniform in the disc |z| <= 5
        z = 5 * math.sqrt(rng.uniform()) * complex(math.cos(a := rng.uniform(0, 2 * math.pi)), math.sin(a))
        q = _q(rng, re=(0.2, 5.0))
        lhs = gen_polygamma(z, q + 1, cfg).value
        rhs = gen_polygamma(z, q, cfg).value + shift_rhs(z, q)
        out.append(make_report("psi-shift", {"z": z, "q": q}, lhs, rhs, tol))
    return out


def suite_multiplication(n: int, rng, ks=(2, 3, 4), tol=None, cfg: EvalConfig = DEFAULT_CONFIG):
    tol = tol or DEFAULT_TOLS["mult"]
    out = []
    for k in ks:
        for _ in range(n):
            z, q = _z(rng), _q(rng, re=(0.1, 3.0), im=(-2.0, 2.0))
            lhs, rhs = multiplication_lhs_rhs(k, z, q, cfg)
            out.append(make_report("psi-multiplication", {"k": k, "z": z, "q": q}, lhs, rhs, tol))
    return out


def suite_duplication(n: int, rng, tol=None, cfg: EvalConfig = DEFAULT_CONFIG):
    tol = tol or DEFAULT_TOLS["mult"]
    out = []
    for _ in range(n):
        z, q = _z(rng), _q(rng, re=(0.1, 3.0), im=(-2.0, 2.0))
        lhs, rhs = duplication_lhs_rhs(z, q, cfg)
        out.append(make_report("psi-duplication", {"z": z, "q": q}, lhs, rhs, tol))
    return out


def suite_derivative(n: int, rng, tol=None, step: float = 1e-5, cfg: EvalConfig = DEFAULT_CONFIG):
    """Central difference in q against psi(z+1, q)."""
    tol = tol or DEFAULT_TOLS["derivative"]
    out = []
    for _ in range(n):
        z, q = _z(rng), _q(rng, re=(0.5, 5.0), im=(-2.0, 2.0))
        fd = (gen_polygamma(z, q + step, cfg).value - gen_polygamma(z, q - step, cfg).value) / (2 * step)
        rhs = gen_polygamma(z + 1, q, cfg).value
        out.append(make_report("psi-der", {"z": z, "q": q, "step": step}, fd, rhs, tol))
    return out


def suite_negapoly(n: int, rng, tol=None, cfg: EvalConfig = DEFAULT_CONFIG):
    """psi(-m, q) against the balanced negapolygamma for m = 1..6."""
    tol = tol or DEFAULT_TOLS["negapoly"]
    out = []
    for i in range(n):
        m = 1 + i % 6
        q = _q(rng, re=(0.1, 5.0), im=(-2.0, 2.0))
        lhs = gen_polygamma(-m, q, cfg).value
        out.append(make_report("negapoly-balanced", {"m": m, "q": q}, lhs, balanced_negapolygamma(m, q, cfg), tol))
    return out


def suite_taylor(n: int, rng, tol=None, radii=(0.1, 0.5, 0.8), cfg: EvalConfig = DEFAULT_CONFIG):
    """Taylor series about q = 1 against the direct evaluator at psi(z, 1 + q).

    Without an explicit tol the check uses 1e-9, relaxed to 1e-7 at |q| = 0.8
    where the terms decay slowly and alternate.
    """
    out = []
    for r in radii:
        t = tol or (1e-7 if r >= 0.8 else DEFAULT_TOLS["taylor"])
        for _ in range(n):
            z = _z(rng, re=(-5.0, 4.0), im=(-2.0, 2.0))
            q = r * complex(math.cos(a := rng.uniform(0, 2 * math.pi)), math.sin(a))
            lhs = taylor_psi(z, q, cfg=cfg).value
            rhs = gen_polygamma(z, 1 + q, cfg).value
            out.append(make_report("psi-series", {"z": z, "q": q}, lhs, rhs, t))
    return out


def suite_fourier(n: int, rng, tol=None, cfg: EvalConfig = DEFAULT_CONFIG):
    tol = tol or DEFAULT_TOLS["fourier"]
    out = []
    for _ in range(n):
        z = _z(rng, re=(-5.0, -1.5), im=(-1.0, 1.0))
        q = float(rng.uniform(0.02, 0.98))
        lhs = fourier_psi(z, q, tol=min(1e-10, tol * 1e-2)).value
        out.append(make_report("psi-fourier", {"z": z, "q": q}, lhs, gen_polygamma(z, q, cfg).value, tol))
    return out


def suite_grossman(n: int, rng, tol=None, cfg: EvalConfig = DEFAULT_CONFIG):
    """Psi(nu, q) at integer orders: zero for nu >= 0, a known polynomial for nu < 0."""
    tol = tol or DEFAULT_TOLS["grossman"]
    out = []
    for _ in range(n):
        nu = int(rng.integers(-4, 4))
        r = rng.uniform(0.1, 0.9)
        a = rng.uniform(-1.2, 1.2)
        q = complex(r * math.cos(a), r * math.sin(a))
        lhs = psi_difference(nu, q, cfg=cfg)
        rhs = psi_difference_polynomial(-nu, q, cfg) if nu < 0 else 0.0
        out.append(make_report("grossman-difference", {"nu": nu, "q": q}, lhs, rhs, tol))
    return out


_RUNNERS: dict[str, Callable] = {
    "shift": suite_shift,
    "mult": lambda n, rng, tol=None, cfg=DEFAULT_CONFIG: (
        suite_multiplication(n, rng, tol=tol, cfg=cfg) + suite_duplication(n, rng, tol=tol, cfg=cfg)
    ),
    "derivative": suite_derivative,
    "negapoly": suite_negapoly,
    "taylor": suite_taylor,
    "fourier": suite_fourier,
    "grossman": suite_grossman,
}


def run_suite(name: str, samples: int, seed: int = 42, tol=None, cfg: EvalConfig = DEFAULT_CONFIG):
    """Run one named suite, or every suite in a fixed order for ``"all"``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = SUITES if name == "all" else (name,)
    out = []
    for nm in names:
        if nm not in _RUNNERS:
            raise ValueError(f"unknown suite {nm!r}")
        # one generator per suite so that each suite's samples do not depend on the others
        rng = np.random.default_rng([seed, SUITES.index(nm)])
        out.extend(_RUNNERS[nm](samples, rng, tol=tol, cfg=cfg))
    return out


def integral_suite(tol=None, cfg: EvalConfig = DEFAULT_CONFIG) -> list[IdentityReport]:
    """All integral identities on their fixed parameter grids."""
    t8 = tol or 1e-8
    t7 = tol or 1e-7
    out = [
        ident.check_hurwitz_int_rep(2, 1, t8, cfg),
        ident.check_hurwitz_int_rep(3, 0.5, t8, cfg),
        ident.check_hurwitz_int_rep(1.5, 2, t8, cfg),
        ident.check_psi_int_rep(1, 1, t8, cfg),
        ident.check_psi_int_rep(0.5, 1, t8, cfg),
        ident.check_psi_int_rep(2.5, 0.7, t8, cfg),
        ident.check_primitive(-1.5, 0, 1, 0, 1, t8, cfg),
        ident.check_primitive(-1, 1, 2, 0, 1, t8, cfg),
        ident.check_primitive(0.5, 1, 1, 0, 1, t8, cfg),
        ident.check_loggamma_square(tol or 1e-9, cfg),
    ]
    for z, zp in ((-1, -1), (-2, -3), (-1.3, -1.3), (-1.5, -2.5)):
        out.append(ident.check_product_integral(z, zp, t8, cfg))
    for z in (-2.5, -3, -2 - 0.5j):
        out.append(ident.check_orthogonality(z, t8, cfg))
    out.append(ident.check_zeta_psi_integral(-1.5, -2, t8, cfg))
    for z in (-1, -2.2):
        out.append(ident.check_zeta_psi_diagonal(z, t8, cfg))
    out.append(ident.check_mellin(1, 0.5, 1, 1, t7, cfg))
    out.append(ident.check_mellin(2.5, 1, 1, 2, t7, cfg))
    out.append(ident.check_mellin(1.5 + 0.5j, 0.7, 0.5, 1.5, t7, cfg))
    out.append(ident.check_mellin(3, 1.5, 2, 1, t7, cfg))
    return out
