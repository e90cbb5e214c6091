"""Closed-form exact counts of oriented rational knots and links.

Everything here is evaluated with arbitrary-precision integers; averages
are exact rationals.  The counting functions are indexed either by the
Seifert-circle count s (count_r, count_rs) or by the genus g (psi, phi),
related through s = n+1-2g for knots and s = n-2g for links.  A class
with n crossings and s Seifert circles is a knot exactly when n - s is
odd.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ConsistencyError, InputError


def binom(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _check_domain(n: int, s: int):
    if n < 2 or s < 2:
        raise InputError(f"need n >= 2 and s >= 2, got ({n}, {s})")


def count_r(n: int, s: int) -> int:
    """Number of type I/III R-decompositions with n crossings and s circles."""
    _check_domain(n, s)
    k = (s - 1) // 2
    even_s = 1 if s % 2 == 0 else 0
    upper = min(s // 2, n // 2 - k)
    total = 0
    for j in range(1, upper + 1):
        total += binom(j + k - 1, 2 * j - even_s - 1) * binom(n - j - (s + 1) // 2, j + k - 1)
    return total


def count_rs(n: int, s: int) -> int:
    """Number of reversal-symmetric (type III) R-decompositions with (n, s)."""
    _check_domain(n, s)
    if s % 2:
        return 0
    k = s // 2
    upper = min(k, n // 2 + 1 - k)
    total = 0
    for j in range(1, upper + 1):
        if ((j + k) * n) % 2:
            continue
        h = (j + k) // 2
        total += binom(h - 1, j - 1) * binom(n // 2 - (j + k + 1) // 2, h - 1)
    return total


def lambda_count(n: int, s: int) -> int:
    """Total count with symmetric decompositions counted twice."""
    return count_r(n, s) + count_rs(n, s)


def total_r(n: int) -> int:
    return sum(count_r(n, s) for s in range(2, n + 1))


def total_rs(n: int) -> int:
    return sum(count_rs(n, s) for s in range(2, n + 1))


def _exact_third(x: int) -> int:
    if x % 3:
        raise ConsistencyError(f"expected a multiple of 3, got {x}")
    return x // 3


def rk_total(n: int) -> int:
    """Total number of oriented rational knots with crossing number n."""
    if n < 2:
        raise InputError(f"need n >= 2, got {n}")
    half = 2 ** ((n - 1) // 2) if n % 2 else 0
    odd_shift = 0 if n % 2 else -1     # ((-1)^(n+1) - 1) / 2
    corner = (-1) ** ((n // 2) * n)
    return _exact_third(2 ** (n - 2) + half + odd_shift + 1 - corner)


def rl_total(n: int) -> int:
    """Total number of oriented rational links with crossing number n."""
    if n < 2:
        raise InputError(f"need n >= 2, got {n}")
    sign = -1 if n % 2 else 1
    base = _exact_third(2 ** (n - 2) + 2 * sign)
    return base + (2 ** ((n - 2) // 2) if n % 2 == 0 else 0)


def psi(n: int, g: int) -> int:
    """Number of rational knots with crossing number n and genus g."""
    if n < 3:
        raise InputError(f"need n >= 3 for knots, got {n}")
    ceil_half = (n + 1) // 2
    floor_half = n // 2
    n_odd = n % 2 == 1
    upper = min(g, ceil_half - g)
    total = 0
    for j in range(1, upper + 1):
        total += binom(floor_half + j - g - 1, 2 * j - (1 if n_odd else 0) - 1) \
            * binom(ceil_half + g - j - 1, floor_half + j - g - 1)
    if n_odd:
        for j in range(1, upper + 1):
            m = j + ceil_half - g
            if m % 2:
                continue
            h = m // 2
            total += binom(h - 1, j - 1) * binom(floor_half - (m + 1) // 2, h - 1)
    return total


def phi(n: int, g: int) -> int:
    """Number of oriented rational links with crossing number n and genus g."""
    if n < 2:
        raise InputError(f"need n >= 2, got {n}")
    floor_half = n // 2
    n_even = n % 2 == 0
    upper = min(g + (1 if n_even else 0), floor_half - g)
    total = 0
    for j in range(1, upper + 1):
        total += binom(j + (n - 1) // 2 - g - 1, 2 * j - (1 if n_even else 0) - 1) \
            * binom(floor_half + g - j, j + (n - 1) // 2 - g - 1)
    if n_even:
        for j in range(1, min(g + 1, floor_half - g) + 1):
            m = floor_half + j - g
            h = m // 2
            total += binom(h - 1, j - 1) * binom(floor_half - (m + 1) // 2, h - 1)
    return total


def avg_genus_knots(n: int) -> Fraction:
    """Exact average genus over all oriented rational knots with n crossings."""
    denom = rk_total(n)
    if denom == 0:
        raise InputError(f"no rational knots with {n} crossings")
    weighted = sum(g * psi(n, g) for g in range(1, (n - 1) // 2 + 1))
    return Fraction(weighted, denom)


def avg_genus_links(n: int) -> Fraction:
    """Exact average genus over all oriented rational links with n crossings."""
    denom = rl_total(n)
    if denom == 0:
        raise InputError(f"no oriented rational links with {n} crossings")
    weighted = sum(g * phi(n, g) for g in range(0, n // 2 + 1))
    return Fraction(weighted, denom)


def kind_of(n: int, s: int) -> str:
    """Knot/link classification of the (n, s) class (parity of n - s)."""
    return "knot" if (n - s) % 2 else "link"


_TABLE_FUNCS = {"t1": count_r, "t2": count_rs, "t3": lambda_count}


def table_rows(name: str, max_n: int) -> list[tuple[int, int, int, str]]:
    """Rows (n, s, count, kind) of one of the three census tables.

    t1: type I/III counts; t2: symmetric counts; t3: both combined.  Only
    nonzero cells are emitted, matching the blank cells of a printed
    table.
    """
    if name not in _TABLE_FUNCS:
        raise InputError(f"unknown table {name!r}")
    if max_n < 2:
        raise InputError(f"need max_n >= 2, got {max_n}")
    func = _TABLE_FUNCS[name]
    rows = []
    for n in range(2, max_n + 1):
        for s in range(2, n + 1):
            value = func(n, s)
            if value:
                rows.append((n, s, value, kind_of(n, s)))
    return rows
