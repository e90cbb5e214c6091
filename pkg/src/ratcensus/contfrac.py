"""Continued fractions indexing 4-plat diagrams.

A reduced fraction 0 < p/q < 1 has a unique expansion as an odd-length
vector [a1, a2, ..., a_{2m+1}] of positive integers with

    p/q = 1/(a1 + 1/(a2 + ... + 1/a_{2m+1})),

and the sum of the entries is the crossing number of the 4-plat built on
the vector.  This module converts both ways and validates both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class ProperFraction:
    """A reduced fraction p/q with 0 < p < q."""

    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise InputError(f"fraction entries must be integers, got {self.p!r}/{self.q!r}")
        if not 0 < self.p < self.q:
            raise InputError(f"need 0 < p < q, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise InputError(f"{self.p}/{self.q} is not reduced")

    @classmethod
    def reduced(cls, p: int, q: int) -> "ProperFraction":
        """Reduce p/q by its gcd before constructing (0 < p/q < 1 still required)."""
        if q == 0:
            raise InputError("denominator must be nonzero")
        g = math.gcd(p, q)
        return cls(p // g, q // g)

    def __str__(self):
        return f"{self.p}/{self.q}"


def validate_vector(v) -> tuple[int, ...]:
    """Check the odd-length positive-entry invariants; return v as a tuple."""
    entries = tuple(v)
    if not entries:
        raise InputError("continued-fraction vector must be nonempty")
    if len(entries) % 2 == 0:
        raise InputError(f"continued-fraction vector must have odd length, got {entries}")
    for a in entries:
        if not isinstance(a, int) or a < 1:
            raise InputError(f"continued-fraction entries must be positive integers, got {entries}")
    return entries


def expand(f: ProperFraction) -> tuple[int, ...]:
    """Expand p/q into its odd-length positive continued-fraction vector.

    The greedy (Euclidean) expansion naturally ends with a final entry
    >= 2; when it comes out with even length the last entry a is rewritten
    as (a - 1, 1), which leaves the value unchanged.
    """
    entries = []
    p, q = f.p, f.q
    while p:
        a, r = divmod(q, p)
        entries.append(a)
        q, p = p, r
    if len(entries) % 2 == 0:
        entries[-1] -= 1
        entries.append(1)
    return tuple(entries)


def evaluate(v) -> ProperFraction:
    """Evaluate an odd-length positive vector back to its reduced fraction."""
    entries = validate_vector(v)
    num, den = 0, 1
    for a in reversed(entries):
        num, den = den, a * den + num
    return ProperFraction(num, den)


def crossing_number(v) -> int:
    """Crossing number of the 4-plat built on v: the sum of the entries."""
    return sum(validate_vector(v))
