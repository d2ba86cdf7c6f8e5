"""Asymptotic layer: spacing expectations and the bound envelopes F and f.

Circular spacing facts (exact rationals): among r uniform points on the
circle of unit circumference, the expected m-th smallest adjacent gap is
a_{r,m} = (1/r) sum_{i=1}^m 1/(r+1-i), the expected shortest arc covering
two points is 1/r^2, and the expected shortest arc covering all r points
is 1 - H_r/r.  General e_{r,t} has no tractable closed form, so it is
estimated by seeded Monte Carlo.

F and f are the envelopes whose maxima drive the asymptotic density
bounds; they are evaluated in interval arithmetic with explicit geometric
tail brackets so that "F(x) > c" claims are certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .intervals import IV, IntervalValue, exact, from_iv
from .sampling import (
    chunk_layout,
    min_window_arcs,
    run_chunks,
    sorted_uniform_points,
    substream,
)


def renyi_a(r: int, m: int) -> Fraction:
    """Expected m-th smallest adjacent arc among r uniform circle points."""
    if not 1 <= m <= r:
        raise ValueError(f"need 1 <= m <= r, got m={m}, r={r}")
    return Fraction(1, r) * sum(Fraction(1, r + 1 - i) for i in range(1, m + 1))


def spacing_closed_forms(r: int) -> dict[str, Fraction]:
    """The two exactly known spacing expectations: e_{r,2} and e_{r,r}."""
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    harmonic = sum(Fraction(1, i) for i in range(1, r + 1))
    return {"e_r2": Fraction(1, r * r), "e_rr": 1 - harmonic / r}


@dataclass(frozen=True)
class SpacingEstimate:
    """Monte Carlo estimate of e_{r,t} with its standard error and seed."""

    r: int
    t: int
    samples: int
    mean: float
    stderr: float
    seed: int


def estimate_spacing(
    r: int, t: int, samples: int, seed: int, workers: int = 1
) -> SpacingEstimate:
    """Mean shortest arc containing >= t of r uniform circle points.

    Deterministic given (seed, samples): the sample space is cut into
    fixed-size Philox substreams and partial moments are reduced in
    substream order regardless of worker count.
    """
    if not 2 <= t <= r:
        raise ValueError(f"need 2 <= t <= r, got t={t}, r={r}")
    if samples < 1000:
        raise ValueError(f"need at least 1000 samples, got {samples}")

    def one_chunk(index: int, count: int) -> tuple[float, float]:
        rng = substream(seed, index)
        pts = sorted_uniform_points(rng, count, r)
        arcs = min_window_arcs(pts, t)
        return float(np.sum(arcs)), float(np.sum(arcs * arcs))

    parts = run_chunks(one_chunk, chunk_layout(samples), workers)
    total = math.fsum(p[0] for p in parts)
    total_sq = math.fsum(p[1] for p in parts)
    mean = total / samples
    var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
    return SpacingEstimate(
        r=r, t=t, samples=samples, mean=mean, stderr=math.sqrt(var / samples), seed=seed
    )


def spacing_csv(estimates) -> str:
    """CSV rows (r, t, mean, stderr) for external plotting."""
    lines = ["r,t,mean,stderr"]
    lines.extend(
        f"{e.r},{e.t},{e.mean!r},{e.stderr!r}" for e in estimates
    )
    return "\n".join(lines) + "\n"


def asympt_constant(m: int) -> IntervalValue:
    """Enclosure of (m!)^(1/m) Gamma(1 + 1/m), the scaling constant of
    e_{r,m+1} ~ const * r^-(1+1/m)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    if m == 1:
        return exact(1)
    inv_m = IV.mpf(1) / m
    enclosure = IV.mpf(math.factorial(m)) ** inv_m * IV.gamma(1 + inv_m)
    out = from_iv(enclosure)
    if out.width > 1e-10:
        raise ArithmeticError(f"enclosure too wide for m={m}: {out.width}")
    return out


# --- the envelope f(x) of the single-step pipeline ---------------------------


def _f_iv(x):
    return 2 * x * IV.exp(-x) * (1 + 1 / (1 - IV.exp(-2 * x)))


def eval_f(x) -> IntervalValue:
    """Enclosure of f(x) = 2x e^-x (1 + 1/(1 - e^-2x)) for x > 0."""
    xv = IV.mpf(str(x) if isinstance(x, float) else x)
    if xv.a <= 0:
        raise ValueError("f is defined for x > 0")
    return from_iv(_f_iv(xv))


def maximize_f(tol: float = 1e-6) -> tuple[float, IntervalValue]:
    """Golden-section maximizer of f over [0.1, 3], to bracket width tol."""
    a, b = 0.1, 3.0
    phi = (math.sqrt(5) - 1) / 2

    def mid(x: float) -> float:
        return eval_f(x).midpoint

    c, d = b - phi * (b - a), a + phi * (b - a)
    fc, fd = mid(c), mid(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = mid(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = mid(d)
    x0 = (a + b) / 2
    return x0, eval_f(x0)


# --- the envelope F(x) of the infinite recursion ------------------------------


def eval_F(x, M: int = 64) -> IntervalValue:
    """Enclosure of
    F(x) = 2x e^-x / (1-e^-2x) + 2x sum_i 2^-i e^(-x/2^i)
                               - 4x^2 sum_i 4^-i e^(-2x/2^i),
    with both sums truncated at M and the tails bracketed geometrically:
    the dropped second-sum terms lie in (0, 2x 2^-M] and the dropped
    third-sum terms in (0, 4x^2 4^-M / 3].
    """
    if M < 1:
        raise ValueError(f"need M >= 1, got M={M}")
    xv = IV.mpf(str(x) if isinstance(x, float) else x)
    if xv.a <= 0:
        raise ValueError("F is defined for x > 0")
    two = IV.mpf(2)
    four = IV.mpf(4)
    term1 = 2 * xv * IV.exp(-xv) / (1 - IV.exp(-2 * xv))
    s2 = sum(two ** (-i) * IV.exp(-(two ** (-i)) * xv) for i in range(1, M + 1))
    s3 = sum(four ** (-i) * IV.exp(-(two ** (1 - i)) * xv) for i in range(1, M + 1))
    core = term1 + 2 * xv * s2 - 4 * xv**2 * s3
    tail2 = 2 * xv * two ** (-M)
    tail3 = 4 * xv**2 * four ** (-M) / 3
    lo_iv = core - tail3
    hi_iv = core + tail2
    lo = from_iv(lo_iv)
    hi = from_iv(hi_iv)
    return IntervalValue(lo=lo.lo, hi=hi.hi, error_budget=lo.error_budget)


def maximize_F(M: int = 64, grid_points: int = 141, tol: float = 1e-5) -> tuple[float, IntervalValue]:
    """Maximize the lo envelope of F over x in [0.2, 3].

    A dense grid seeds a golden-section refinement (no unimodality
    assumption: the grid picks the global cell first).  Optimizing lo
    rather than the midpoint keeps the reported maximum certified.
    """
    if M < 32:
        raise ValueError(f"need M >= 32, got M={M}")
    lo_x, hi_x = 0.2, 3.0
    xs = [lo_x + i * (hi_x - lo_x) / (grid_points - 1) for i in range(grid_points)]

    def lo_at(x: float) -> float:
        return float(eval_F(x, M).lo)

    values = [lo_at(x) for x in xs]
    i_best = max(range(len(xs)), key=values.__getitem__)
    a = xs[max(i_best - 1, 0)]
    b = xs[min(i_best + 1, len(xs) - 1)]
    phi = (math.sqrt(5) - 1) / 2
    c, d = b - phi * (b - a), a + phi * (b - a)
    fc, fd = lo_at(c), lo_at(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = lo_at(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = lo_at(d)
    x_star = (a + b) / 2
    return x_star, eval_F(x_star, M)


def f_curve_csv(xs, M: int = 64) -> str:
    """CSV rows (x, F_lo, F_hi) for external plotting."""
    lines = ["x,F_lo,F_hi"]
    for x in xs:
        v = eval_F(x, M)
        lines.append(f"{float(x)!r},{float(v.lo)!r},{float(v.hi)!r}")
    return "\n".join(lines) + "\n"
