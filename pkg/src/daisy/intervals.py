"""Certified enclosures for transcendental quantities.

Evaluation runs in a private mpmath interval context at 60 decimal digits,
and every exported enclosure is additionally widened by a relative budget
of 1e-15 per endpoint.  The budget is vastly conservative (the interval
arithmetic already accounts for rounding), but it makes the error
accounting explicit: any claim "value > c" is made on the padded lo only.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, workdps
from mpmath.ctx_iv import MPIntervalContext

WORKING_DPS = 60
RELATIVE_BUDGET = 1e-15

IV = MPIntervalContext()
IV.dps = WORKING_DPS


@dataclass(frozen=True)
class IntervalValue:
    """A certified bracket [lo, hi] around a real quantity."""

    lo: mpmath.mpf
    hi: mpmath.mpf
    error_budget: float = RELATIVE_BUDGET

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return float(self.hi - self.lo)

    @property
    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    def contains(self, x) -> bool:
        with workdps(WORKING_DPS):
            v = mp.mpf(x)
            return bool(self.lo <= v <= self.hi)

    def certifies_above(self, c) -> bool:
        with workdps(WORKING_DPS):
            return bool(self.lo > mp.mpf(c))

    def certifies_below(self, c) -> bool:
        with workdps(WORKING_DPS):
            return bool(self.hi < mp.mpf(c))

    def __str__(self) -> str:
        return f"[{mp.nstr(self.lo, 17)}, {mp.nstr(self.hi, 17)}]"


def _endpoints(x) -> tuple[mpmath.mpf, mpmath.mpf]:
    lo_raw, hi_raw = x._mpi_
    with workdps(WORKING_DPS):
        return mp.make_mpf(lo_raw), mp.make_mpf(hi_raw)


def from_iv(x, budget: float = RELATIVE_BUDGET) -> IntervalValue:
    """IntervalValue from an mpmath interval, padded by the error budget."""
    lo, hi = _endpoints(x)
    with workdps(WORKING_DPS):
        pad_lo = abs(lo) * mp.mpf(budget)
        pad_hi = abs(hi) * mp.mpf(budget)
        return IntervalValue(lo=lo - pad_lo, hi=hi + pad_hi, error_budget=budget)


def exact(x) -> IntervalValue:
    """Degenerate interval for an exactly representable value."""
    with workdps(WORKING_DPS):
        v = mp.mpf(x)
    return IntervalValue(lo=v, hi=v, error_budget=0.0)
