"""Shared result containers for the dependence estimators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class DependenceEstimate:
    """Point estimate of a dependence measure with optional asymptotics.

    ``variance`` is on the sqrt(n) scale: the estimated limit variance of
    ``sqrt(n) * (estimate - truth)``.  The confidence interval, when present,
    is the normal interval ``value +- z * sqrt(variance / n)``.  ``n`` is the
    number of windows (or vector pairs) actually used.
    """

    value: float
    method: str
    h: int
    n: int
    shift: int = 0
    variance: float | None = None
    ci_low: float | None = None
    ci_high: float | None = None
    variance_clamped: bool = False


class McEstimate(NamedTuple):
    """A Monte Carlo value with its standard error."""

    value: float
    std_error: float
