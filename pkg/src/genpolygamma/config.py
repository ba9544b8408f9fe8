from __future__ import annotations

from dataclasses import dataclass

# Distance below which an argument is treated as sitting on an integer pole/zero.
POLE_SNAP = 1e-12


@dataclass(frozen=True)
class EvalConfig:
    """Precision and truncation policy shared by the evaluators.

    ``em_shift_terms`` is the initial number of explicitly summed terms in the
    Euler-Maclaurin continuation (doubled until the tail bound is met) and
    ``em_tail_terms`` the number of Bernoulli correction terms. ``snap_window``
    controls when the generalized polygamma switches to its exact integer-order
    formula.
    """

    target_tol: float = 1e-13
    em_shift_terms: int = 16
    em_tail_terms: int = 12
    max_series_terms: int = 10**6
    snap_window: float = 1e-6

    def __post_init__(self):
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")
        if self.em_shift_terms < 1:
            raise ValueError("em_shift_terms must be >= 1")
        if self.em_tail_terms < 1:
            raise ValueError("em_tail_terms must be >= 1")
        # one extra Bernoulli number is needed for the first omitted term
        if 2 * (self.em_tail_terms + 1) > 100:
            raise ValueError("em_tail_terms exceeds the Bernoulli table")
        if self.max_series_terms < self.em_shift_terms:
            raise ValueError("max_series_terms must be >= em_shift_terms")
        if self.snap_window < 0:
            raise ValueError("snap_window must be non-negative")


DEFAULT_CONFIG = EvalConfig()
