"""Exact rational evaluation of every counting formula and bound.

All bound arithmetic is integer/Fraction exact; decimal strings are
presentation only and always round toward zero, so a printed lower bound
is never overstated.  Each evaluation is wrapped in a BoundReport that
carries the formula identifier, the parameters, and the provenance chain
of upstream reports it consumed.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .coloring import chromatic_number
from .cyclic import window_index_pairs
from .hypergraph import UniformHypergraph, line_graph
from .subsets import check_budget

FORMULA_IDS = ("C1", "C3A", "T3", "RECURS", "CINF", "BLOWUP", "PAIR", "PI_R")

CERTIFIED = "CERTIFIED"
ESTIMATE = "ESTIMATE"


def render_decimal(value: Fraction, places: int = 6) -> str:
    """Decimal string of a nonnegative rational, rounded toward zero.

    Integers render without a decimal point; everything else gets exactly
    `places` digits.
    """
    if value < 0:
        raise ValueError("decimal rendering is defined for nonnegative values")
    if value.denominator == 1:
        return str(value.numerator)
    scaled = value.numerator * 10**places // value.denominator
    digits = str(scaled).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


@dataclass(frozen=True, eq=False)
class BoundReport:
    """One exactly evaluated bound with parameters and provenance."""

    formula_id: str
    params: dict
    value: Fraction
    decimal: str
    places: int = 6
    inputs: tuple[str, ...] = ()
    tag: str = CERTIFIED

    def __post_init__(self) -> None:
        if self.formula_id not in FORMULA_IDS:
            raise ValueError(f"unknown formula id {self.formula_id!r}")
        if self.value < 0:
            raise ValueError(f"bound value must be >= 0, got {self.value}")
        if Fraction(self.decimal) > self.value:
            raise ValueError(f"decimal {self.decimal} overstates value {self.value}")

    @property
    def id(self) -> str:
        parts = ",".join(f"{k}={_param_str(v)}" for k, v in sorted(self.params.items()))
        return f"{self.formula_id}({parts})"

    @property
    def ceil(self) -> int:
        return math.ceil(self.value)

    def to_json_dict(self) -> dict:
        return {
            "formula": self.formula_id,
            "params": {k: _param_json(v) for k, v in self.params.items()},
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "decimal": self.decimal,
            "ceil": self.ceil,
            "inputs": list(self.inputs),
            "tag": self.tag,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _param_str(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _param_json(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def make_report(
    formula_id: str,
    params: dict,
    value: Fraction,
    inputs: tuple[str, ...] = (),
    tag: str = CERTIFIED,
    places: int = 6,
) -> BoundReport:
    return BoundReport(
        formula_id=formula_id,
        params=params,
        value=Fraction(value),
        decimal=render_decimal(Fraction(value), places),
        places=places,
        inputs=inputs,
        tag=tag,
    )


def reports_csv(reports) -> str:
    """CSV of (r, n, formula, decimal) rows for plotting."""
    lines = ["r,n,formula,decimal"]
    for rep in reports:
        lines.append(
            f"{rep.params.get('r', '')},{rep.params.get('n', '')},"
            f"{rep.formula_id},{rep.decimal}"
        )
    return "\n".join(lines) + "\n"


def _resolve_ex(ex) -> tuple[Fraction, tuple[str, ...], object]:
    """Accept an integer, a rational, or an upstream BoundReport as the
    ex(n, .) input; reports contribute their integer ceiling (edge counts
    are integral) and their id to the provenance chain."""
    if isinstance(ex, BoundReport):
        return Fraction(ex.ceil), (ex.id,), Fraction(ex.ceil)
    frac = Fraction(ex)
    return frac, (), frac


# --- counting ----------------------------------------------------------------


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer, zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs n, k >= 0, got n={n}, k={k}")
    return math.comb(n, k)


def count_P(n: int, r: int, d: int) -> int:
    """Increasing sequences in [1, n] of length r with steps >= d.

    Closed form C(n - (r-1)(d-1), r); infeasible spacings give zero.
    """
    if n < 1 or r < 1 or d < 1:
        raise ValueError(f"need n, r, d >= 1, got n={n}, r={r}, d={d}")
    top = n - (r - 1) * (d - 1)
    if top < r:
        return 0
    return math.comb(top, r)


FORMULA = "FORMULA"
BRUTE = "BRUTE"


def count_N(n: int, r: int, t: int, d: int, method: str = BRUTE, budget: int | None = None) -> int:
    """Number of r-subsets A of Z_n with d_t(A) >= d.

    FORMULA is the closed form (n/r) C(n-1-(d-1)r, r-1), accepted only for
    t = 2 and 1 <= d <= (n-r)/r (d = 0 always returns C(n, r)); outside
    that range the caller must fall back to BRUTE.
    """
    if d == 0:
        return math.comb(n, r)
    if method == FORMULA:
        if t != 2:
            raise ValueError("the closed form applies to t = 2 only")
        if not (1 <= d and r * (d + 1) <= n):
            raise ValueError(
                f"d={d} outside the validity range 1 <= d <= (n-r)/r for n={n}, r={r}"
            )
        return _count_n2_formula(n, r, d)
    if method != BRUTE:
        raise ValueError(f"unknown method {method!r}")
    check_budget(n, r, budget)
    flat, wrap = window_index_pairs(r, t)
    count = 0
    for a in itertools.combinations(range(n), r):
        dt = min(a[jj] - a[ii] for ii, jj in flat)
        if wrap:
            dt = min(dt, min(a[jj] + n - a[ii] for ii, jj in wrap))
        if dt >= d:
            count += 1
    return count


def _count_n2_formula(n: int, r: int, d: int) -> int:
    num = n * math.comb(n - 1 - (d - 1) * r, r - 1)
    q, rem = divmod(num, r)
    if rem:
        raise ArithmeticError(f"closed form not integral at n={n}, r={r}, d={d}")
    return q


@dataclass(frozen=True)
class CountTable:
    """N(n, r, t, d) for d = 0..n from a single scan or the closed form."""

    n: int
    r: int
    t: int
    values: tuple[int, ...]
    method: str

    def __post_init__(self) -> None:
        n, r, t = self.n, self.r, self.t
        v = self.values
        if len(v) != n + 1:
            raise ValueError(f"need n+1 = {n + 1} values, got {len(v)}")
        if v[0] != math.comb(n, r):
            raise ValueError(f"N(.,0) = {v[0]} != C({n},{r})")
        if any(v[d] < v[d + 1] for d in range(n)):
            raise ValueError("table is not non-increasing in d")
        cutoff = (t - 1) * n // r  # d_t <= (t-1)n/r always
        if any(v[d] != 0 for d in range(cutoff + 1, n + 1)):
            raise ValueError(f"nonzero count beyond d = (t-1)n/r = {cutoff}")

    def __getitem__(self, d: int) -> int:
        return self.values[d]


def count_table(n: int, r: int, t: int, method: str = BRUTE, budget: int | None = None) -> CountTable:
    """Full table of N(n, r, t, d), d = 0..n.

    BRUTE histograms d_t over one exhaustive scan.  FORMULA (t = 2 only)
    evaluates the closed form for every d >= 1: this extends past the
    stated validity range, which is legitimate because the closed form is
    the classical count of r points on an n-cycle with all circular gaps
    at least d (the tests cross-check the two methods cell by cell).
    """
    if method == FORMULA:
        if t != 2:
            raise ValueError("the closed form applies to t = 2 only")
        values = [math.comb(n, r)]
        for d in range(1, n + 1):
            top = n - 1 - (d - 1) * r
            values.append(_count_n2_formula(n, r, d) if top >= r - 1 else 0)
        return CountTable(n=n, r=r, t=t, values=tuple(values), method=FORMULA)
    if method != BRUTE:
        raise ValueError(f"unknown method {method!r}")
    check_budget(n, r, budget)
    flat, wrap = window_index_pairs(r, t)
    hist = [0] * (n + 1)
    for a in itertools.combinations(range(n), r):
        dt = min(a[jj] - a[ii] for ii, jj in flat)
        if wrap:
            dt = min(dt, min(a[jj] + n - a[ii] for ii, jj in wrap))
        hist[dt] += 1
    values = []
    acc = 0
    for d in range(n, -1, -1):
        acc += hist[d]
        values.append(acc)
    values.reverse()
    return CountTable(n=n, r=r, t=t, values=tuple(values), method=BRUTE)


# --- bounds ------------------------------------------------------------------


def bound_C1(n: int, r: int, k: int, budget: int | None = None) -> BoundReport:
    """Averaging bound: ex(n, H_k^r) >= (1/n) sum_d N(n, r, k-1, d).

    The N table is computed by brute force, keeping this evaluation
    independent of the closed-form route so the two can cross-check.
    """
    if not (3 <= k <= r + 1 < n):
        raise ValueError(f"need 3 <= k <= r+1 < n, got k={k}, r={r}, n={n}")
    table = count_table(n, r, k - 1, BRUTE, budget)
    cutoff = (k - 2) * n // r
    value = Fraction(sum(table.values[: cutoff + 1]), n)
    return make_report("C1", {"n": n, "r": r, "k": k}, value)


def bound_C3a(n: int, r: int) -> BoundReport:
    """Closed-form k = 3 bound:
    ex(n, H_3^r) >= (1/n) C(n, r) + (1/r) sum_{d=0}^{n/r - 1} C(n-1-rd, r-1)."""
    if r < 2 or n <= r:
        raise ValueError(f"need n > r >= 2, got n={n}, r={r}")
    value = Fraction(math.comb(n, r), n) + Fraction(
        sum(math.comb(n - 1 - r * d, r - 1) for d in range(n // r)), r
    )
    return make_report("C3A", {"n": n, "r": r}, value)


def pi_blowup(ex, n: int, r: int) -> BoundReport:
    """Density from one graph: pi(H) >= r! ex(n, H) / n^r (blow-up limit)."""
    ex_frac, inputs, ex_param = _resolve_ex(ex)
    if ex_frac < 0:
        raise ValueError("ex value must be >= 0")
    value = Fraction(math.factorial(r)) * ex_frac / Fraction(n) ** r
    return make_report("BLOWUP", {"ex": ex_param, "n": n, "r": r}, value, inputs)


def bound_T3(ex, n: int, r: int, k: int) -> BoundReport:
    """One doubling step (t = k-1):
    ex(tn) >= t^r ex(n) + C(tn,r)/n - t^r C(n,r)/n - t^{r-1}(t-1) C(n-1,r-2)/2."""
    t = k - 1
    if t < 2:
        raise ValueError(f"need t = k-1 >= 2, got k={k}")
    ex_frac, inputs, ex_param = _resolve_ex(ex)
    value = (
        t**r * ex_frac
        + Fraction(math.comb(t * n, r), n)
        - Fraction(t**r * math.comb(n, r), n)
        - Fraction(t ** (r - 1) * (t - 1) * math.comb(n - 1, r - 2), 2)
    )
    return make_report("T3", {"ex": ex_param, "n": n, "r": r, "k": k}, value, inputs)


def bound_recurs(ex, n: int, r: int, k: int, s: int) -> BoundReport:
    """s-fold iterate of the doubling step, binomials rewritten via
    C(m-1, r-2) = ((r-1)/m) C(m, r-1)."""
    t = k - 1
    if t < 2:
        raise ValueError(f"need t = k-1 >= 2, got k={k}")
    if s < 1:
        raise ValueError(f"need s >= 1, got s={s}")
    ex_frac, inputs, ex_param = _resolve_ex(ex)
    tf = Fraction(t)  # exponents can go negative once i(r+1) > sr
    value = Fraction(t ** (s * r)) * ex_frac
    value += Fraction(1, n) * sum(
        (t - 1) * tf ** (s * r - i * r - i) * math.comb(t**i * n, r) for i in range(1, s)
    )
    value += Fraction(math.comb(t**s * n, r), n) / t ** (s - 1)
    value -= Fraction(t ** (s * r) * math.comb(n, r), n)
    value -= Fraction(r - 1, n) * sum(
        Fraction(t - 1, 2) * tf ** (s * r - i * r + r - i) * math.comb(t ** (i - 1) * n, r - 1)
        for i in range(1, s + 1)
    )
    return make_report(
        "RECURS", {"ex": ex_param, "n": n, "r": r, "k": k, "s": s}, value, inputs
    )


def _cinf_terms(n: int, r: int, t: int):
    """Term generators for the infinite-series density bound.

    The subtracted sum carries coefficient t(t-1)/2: iterating the
    doubling step and passing to the limit produces C(t, 2), and the
    t = 2 specialization printed alongside the general statement agrees.
    """
    rf = math.factorial(r)
    rf1 = math.factorial(r - 1)

    def pos(i: int) -> Fraction:
        m = t**i * n
        return (t - 1) * Fraction(rf * math.comb(m, r), n * t**i * m**r)

    def neg(i: int) -> Fraction:
        m = t ** (i - 1) * n
        return (
            Fraction(t * (t - 1), 2)
            * Fraction((r - 1) * r, n**2)
            * Fraction(rf1 * math.comb(m, r - 1), t ** (2 * i) * m ** (r - 1))
        )

    return pos, neg


DOMINANCE_WINDOW = 64


def pi_Cinf(ex, n: int, r: int, k: int, M: int) -> BoundReport:
    """Truncated infinite-series density bound.

    Both series are cut at M.  Dropping the tails is only sound when every
    dropped positive term dominates the matching subtracted term, so the
    report is CERTIFIED only if termwise dominance holds on the window
    (M, M+64] with strictly increasing term ratio; otherwise it is tagged
    ESTIMATE.  A negative evaluation (possible at degenerate inputs) is
    clamped to the vacuous bound 0 with the raw value kept in params.
    """
    t = k - 1
    if t < 2:
        raise ValueError(f"need t = k-1 >= 2, got k={k}")
    if M < 1:
        raise ValueError(f"need M >= 1, got M={M}")
    ex_frac, inputs, ex_param = _resolve_ex(ex)
    rf = math.factorial(r)
    pos, neg = _cinf_terms(n, r, t)
    raw = Fraction(rf) * ex_frac / Fraction(n) ** r
    raw -= Fraction(rf * math.comb(n, r)) / Fraction(n) ** (r + 1)
    raw += sum(pos(i) for i in range(1, M + 1))
    raw -= sum(neg(i) for i in range(1, M + 1))

    tag = CERTIFIED
    prev_ratio = None
    for i in range(M + 1, M + 1 + DOMINANCE_WINDOW):
        p, q = pos(i), neg(i)
        if p < q:
            tag = ESTIMATE
            break
        if q == 0:
            continue  # degenerate small-n regime; dominance p >= 0 holds trivially
        ratio = p / q
        if prev_ratio is not None and ratio <= prev_ratio:
            tag = ESTIMATE
            break
        prev_ratio = ratio

    params = {"ex": ex_param, "n": n, "r": r, "k": k, "M": M}
    value = raw
    if raw < 0:
        params["raw"] = raw
        value = Fraction(0)
    return make_report("CINF", params, value, inputs, tag)


# --- pi_r and the pair-covering route ---------------------------------------


def e_enclosure(terms: int = 40) -> tuple[Fraction, Fraction]:
    """Rational enclosure of e from the factorial series.

    The tail past `terms` is below 2/terms!, giving ~45 digits at the
    default, compared against the 30 digits the sandwich check needs.
    """
    lo = sum(Fraction(1, math.factorial(i)) for i in range(terms))
    return lo, lo + Fraction(2, math.factorial(terms))


def pi_r(r: int, search_limit: int | None = None) -> tuple[int, Fraction]:
    """Maximize r! C(n, r) / n^(r+1) over n.

    The objective behaves like x e^{-x} in x = (r^2-r)/(2n), peaking near
    x = 1, so [r, 2r^2] safely brackets the maximizer; the right endpoint
    is asserted non-maximal (the left one is the domain boundary n = r,
    attained only at r = 2).
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    upper = 2 * r * r if search_limit is None else search_limit
    rf = math.factorial(r)
    best_n, best = r, Fraction(rf * math.comb(r, r), r ** (r + 1))
    for n in range(r + 1, upper + 1):
        v = Fraction(rf * math.comb(n, r), n ** (r + 1))
        if v > best:
            best_n, best = n, v
    if best_n == upper:
        raise RuntimeError(f"pi_{r} maximizer hit the search limit {upper}")
    return best_n, best


def pi_r_sandwich(r: int) -> dict:
    """Exact pi_r plus certified comparisons against 2e^-1/(r^2 +- r).

    Certification uses the rational e enclosure in the conservative
    direction on each side, so both verdicts are exact-arithmetic sound.
    """
    n_star, value = pi_r(r)
    e_lo, e_hi = e_enclosure()
    lower_ok = value * (r * r + r) >= 2 / e_lo  # 2/e_lo >= 2/e
    upper_ok = value * (r * r - r) <= 2 / e_hi  # 2/e_hi <= 2/e
    return {
        "r": r,
        "n_star": n_star,
        "value": value,
        "lower_certified": bool(lower_ok),
        "upper_certified": bool(upper_ok),
    }


def pi_r_report(r: int) -> BoundReport:
    n_star, value = pi_r(r)
    return make_report("PI_R", {"r": r, "n_star": n_star}, value)


def bound_chrom(n: int, r: int, h: UniformHypergraph) -> BoundReport:
    """Residue-class bound ex(n, H) >= (chi(L(H)) - 1) C(n, r) / n.

    For a daisy the line graph is complete, so chi is just the edge count;
    other inputs go through the exact colorer (at most 24 edges).
    """
    if h.num_edges > 24:
        raise ValueError(f"{h.num_edges} edges exceeds the exact-coloring limit 24")
    lg = line_graph(h)
    chi = lg.n if lg.is_complete() and lg.n > 0 else chromatic_number(lg)
    value = Fraction((chi - 1) * math.comb(n, r), n)
    return make_report("PAIR", {"n": n, "r": r, "chi": chi}, value)


def pair_pi_bound(r: int, chi: int) -> BoundReport:
    """pi(H) >= (chi(L(H)) - 1) pi_r for pair-covering H."""
    base = pi_r_report(r)
    value = (chi - 1) * base.value
    return make_report("PI_R", {"r": r, "chi": chi}, value, (base.id,))


# --- parameter optimization ---------------------------------------------------

PIPELINES = ("c3a-blowup", "c3a-t3-blowup", "c3a-recurs-blowup")


def optimize_n(r: int, k: int, pipeline: str, s: int | None = None) -> BoundReport:
    """Scan n in [r+1, ceil(1.2 r^2)] and return the best density report.

    The scan window covers the n ~ 0.656 r^2 regime where the closed-form
    route peaks.  The winner's params record the base n and the ratio
    n / r^2.
    """
    if pipeline not in PIPELINES:
        raise ValueError(f"pipeline must be one of {PIPELINES}, got {pipeline!r}")
    if k != 3:
        raise ValueError("the closed-form pipelines are defined for k = 3")
    if pipeline == "c3a-recurs-blowup":
        if s is None or s < 1:
            raise ValueError("the recursion pipeline needs s >= 1")
    best: BoundReport | None = None
    best_n = 0
    for n in range(r + 1, math.ceil(1.2 * r * r) + 1):
        base = bound_C3a(n, r)
        if pipeline == "c3a-blowup":
            cand = pi_blowup(base, n, r)
        elif pipeline == "c3a-t3-blowup":
            cand = pi_blowup(bound_T3(base, n, r, k), 2 * n, r)
        else:
            cand = pi_blowup(bound_recurs(base, n, r, k, s), 2**s * n, r)
        if best is None or cand.value > best.value:
            best, best_n = cand, n
    assert best is not None
    params = dict(best.params)
    params["base_n"] = best_n
    params["n_ratio"] = Fraction(best_n, r * r)
    params["pipeline"] = pipeline
    return make_report("BLOWUP", params, best.value, best.inputs, best.tag)
