"""Sequence-level checks over the census: fits, identities, shape, bounds.

Counts and averages stay exact; floating point enters only inside the
least-squares fitter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import census
from .errors import InputError


@dataclass(frozen=True)
class GenusSeries:
    kind: str                                  # "knot" or "link"
    points: tuple[tuple[int, Fraction], ...]   # (n, exact average genus)


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    cases: int
    passed: bool
    first_failure: str | None = None


@dataclass(frozen=True)
class ShapeRow:
    n: int
    peaks: tuple[int, ...]    # s values attaining the maximum
    predicted: int            # (n+1)/2 for odd n, (n+2)/2 for even n
    unimodal: bool
    tie: bool


@dataclass(frozen=True)
class ProbeRow:
    n: int
    kind: str
    average: Fraction
    ratio: Fraction           # average / n; bounded by 1/2, conjectured -> 1/4


def genus_series(kind: str, n_min: int, n_max: int) -> GenusSeries:
    """Average-genus sequence for knots or links over an n range."""
    if kind not in ("knot", "link"):
        raise InputError(f"kind must be knot or link, got {kind!r}")
    if not 2 <= n_min <= n_max:
        raise InputError(f"bad range {n_min}..{n_max}")
    if kind == "knot":
        avg, total = census.avg_genus_knots, census.rk_total
    else:
        avg, total = census.avg_genus_links, census.rl_total
    points = []
    for n in range(n_min, n_max + 1):
        if total(n) == 0:
            continue
        points.append((n, avg(n)))
    return GenusSeries(kind=kind, points=tuple(points))


def fit(series: GenusSeries) -> FitResult:
    """Ordinary least squares of average genus against crossing number."""
    if len(series.points) < 3:
        raise InputError("need at least 3 points to fit")
    xs = [float(n) for n, _ in series.points]
    ys = [float(a) for _, a in series.points]
    m = len(xs)
    xbar = sum(xs) / m
    ybar = sum(ys) / m
    sxx = sum((x - xbar) ** 2 for x in xs)
    if sxx == 0:
        raise InputError("degenerate fit: all n equal")
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = ybar - slope * xbar
    ss_tot = sum((y - ybar) ** 2 for y in ys)
    ss_res = sum((y - slope * x - intercept) ** 2 for x, y in zip(xs, ys))
    r_squared = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return FitResult(slope=slope, intercept=intercept, r_squared=r_squared)


def check_identities(max_n: int) -> list[IdentityCheck]:
    """Verify the four exact identity families tying the count tables together.

    (a) column addition: R(n, 2k-1) + R(n, 2k) = R(n+1, 2k) for k >= 2;
    (b) row totals of R follow the Jacobsthal numbers (2^n - (-1)^n)/3;
    (c) even RS rows are binomial rows summing to 2^m;
    (d) odd RS row totals replay the R row totals.
    """
    if max_n < 6:
        raise InputError(f"need max_n >= 6, got {max_n}")
    checks = []

    def run(name, cases):
        bad = None
        count = 0
        for label, lhs, rhs in cases:
            count += 1
            if lhs != rhs:
                bad = f"{label}: {lhs} != {rhs}"
                break
        checks.append(IdentityCheck(name=name, cases=count, passed=bad is None,
                                    first_failure=bad))

    run("column-addition", (
        (f"n={n},k={k}",
         census.count_r(n, 2 * k - 1) + census.count_r(n, 2 * k),
         census.count_r(n + 1, 2 * k))
        for n in range(4, max_n)
        for k in range(2, n // 2 + 1)
    ))
    run("jacobsthal-row-totals", (
        (f"n={n}", census.total_r(n + 1), (2 ** n - (-1) ** n) // 3)
        for n in range(1, max_n)
    ))

    def binomial_cases():
        # row 2m of the symmetric table is the binomial row C(m-1, .),
        # so it totals 2^(m-1)
        for m in range(1, max_n // 2 + 1):
            yield f"n={2 * m} total", census.total_rs(2 * m), 2 ** (m - 1)
            for k in range(1, m + 1):
                yield (f"n={2 * m},s={2 * k}", census.count_rs(2 * m, 2 * k),
                       census.binom(m - 1, k - 1))

    run("rs-even-binomial-rows", binomial_cases())
    run("rs-odd-equals-r", (
        (f"n={2 * m + 1}", census.total_rs(2 * m + 1), census.total_r(m + 1))
        for m in range(1, (max_n - 1) // 2 + 1)
    ))
    return checks


def shape_report(max_n: int) -> list[ShapeRow]:
    """Unimodality and peak location of the combined counts, per row."""
    if max_n < 5:
        raise InputError(f"need max_n >= 5, got {max_n}")
    rows = []
    for n in range(2, max_n + 1):
        values = [(s, census.lambda_count(n, s)) for s in range(2, n + 1)]
        values = [(s, v) for s, v in values if v]
        counts = [v for _, v in values]
        peak = max(counts)
        peaks = tuple(s for s, v in values if v == peak)
        rising = True
        unimodal = True
        for prev, cur in zip(counts, counts[1:]):
            if rising and cur < prev:
                rising = False
            elif not rising and cur > prev:
                unimodal = False
                break
        predicted = (n + 1) // 2 if n % 2 else (n + 2) // 2
        rows.append(ShapeRow(n=n, peaks=peaks, predicted=predicted,
                             unimodal=unimodal, tie=len(peaks) > 1))
    return rows


def conjecture_probe(n_list) -> list[ProbeRow]:
    """Tabulate average-genus-to-n ratios; conjectured to approach 1/4."""
    ns = sorted(set(n_list))
    if not ns or ns[0] < 3:
        raise InputError("probe entries must be >= 3")
    rows = []
    for n in ns:
        for kind, total, avg in (
            ("knot", census.rk_total(n), census.avg_genus_knots),
            ("link", census.rl_total(n), census.avg_genus_links),
        ):
            if total == 0:
                continue
            a = avg(n)
            rows.append(ProbeRow(n=n, kind=kind, average=a, ratio=a / n))
    return rows
