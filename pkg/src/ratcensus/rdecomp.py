"""Canonical tuples for type I/III R-decompositions and the brute-force oracle.

An R-decomposition with n crossings and s Seifert circles reduces to a
unique R-template with q circles: q = 2j+1 (type I) or q = 2j (type III).
The template has q-1 medium circles and 2q-2 essential crossings.  An
R-decomposition is rebuilt from its template by

  * (s-q)/2 insertion operations, distributed over the q-1 template
    mediums (each insertion adds a small and a medium circle plus two
    crossings), and
  * n-s-q+2 addition operations placing free crossings on the resulting
    (q-1) + (s-q)/2 medium circles, taken in left-to-right order.

The tuple (type, j, insertions, free) therefore determines the
decomposition, and counting tuples is a brute-force check of the
closed-form counts in the census module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


def compositions(total: int, parts: int):
    """All weak compositions of total into parts slots, lexicographically."""
    if total < 0 or parts < 0:
        raise InputError(f"compositions({total}, {parts})")
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


@dataclass(frozen=True)
class RTuple:
    rtype: str                  # "I" or "III"
    j: int                      # template index: q = 2j+1 (I) or 2j (III)
    insertions: tuple[int, ...]  # per template medium, length q-1
    free: tuple[int, ...]        # per final medium, length (q-1) + sum(insertions)

    def __post_init__(self):
        if self.rtype not in ("I", "III"):
            raise InputError(f"unknown R-decomposition type {self.rtype!r}")
        if self.j < 1:
            raise InputError("template index j must be >= 1")
        if len(self.insertions) != self.q - 1:
            raise InputError("insertion vector length must equal q - 1")
        if len(self.free) != (self.q - 1) + self.insertion_total:
            raise InputError("free vector length must equal the final medium count")
        if any(x < 0 for x in self.insertions) or any(x < 0 for x in self.free):
            raise InputError("insertion and free entries must be non-negative")

    @property
    def q(self) -> int:
        return 2 * self.j + 1 if self.rtype == "I" else 2 * self.j

    @property
    def insertion_total(self) -> int:
        return sum(self.insertions)

    @property
    def s(self) -> int:
        return self.q + 2 * self.insertion_total

    @property
    def essential_crossings(self) -> int:
        return 2 * self.q - 2

    @property
    def mediums(self) -> int:
        return (self.q - 1) + self.insertion_total

    @property
    def n(self) -> int:
        return self.essential_crossings + 2 * self.insertion_total + sum(self.free)


def enumerate_tuples(n: int, s: int) -> list[RTuple]:
    """All tuples with n crossings and s Seifert circles, in (j, insertions, free) order.

    The parity of s dictates the type (odd -> I, even -> III); impossible
    pairs yield the empty list.
    """
    if n < 2 or s < 2:
        raise InputError(f"need n >= 2 and s >= 2, got ({n}, {s})")
    rtype = "I" if s % 2 else "III"
    out = []
    j = 1
    while True:
        q = 2 * j + 1 if rtype == "I" else 2 * j
        if q > s or s + q - 2 > n:
            break
        ins_total = (s - q) // 2
        free_total = n - s - q + 2
        for ins in compositions(ins_total, q - 1):
            for free in compositions(free_total, (q - 1) + ins_total):
                out.append(RTuple(rtype, j, ins, free))
        j += 1
    return out


def oracle_count(n: int, s: int) -> int:
    """Exhaustive count of type I/III R-decompositions with given (n, s)."""
    return len(enumerate_tuples(n, s))


def reverse_tuple(t: RTuple) -> RTuple:
    """Action of the 180-degree reversal: both vectors flip left-to-right."""
    return RTuple(t.rtype, t.j, t.insertions[::-1], t.free[::-1])


def is_symmetric(t: RTuple) -> bool:
    """Fixed under reversal; impossible for type I."""
    return t.rtype == "III" and reverse_tuple(t) == t


def oracle_symmetric_count(n: int, s: int) -> int:
    """Exhaustive count of reversal-symmetric R-decompositions with (n, s)."""
    return sum(1 for t in enumerate_tuples(n, s) if is_symmetric(t))


def _block_start(t: RTuple, slot: int) -> int:
    """Index into t.free of the first medium spawned by template medium `slot`."""
    return slot + sum(t.insertions[:slot])


def apply_insertion(t: RTuple, slot: int) -> RTuple:
    """Insert a small/medium circle pair at a template medium: s += 2, n += 2.

    The new medium gets a fresh zero free-slot placed at the end of the
    block of final mediums spawned by that template medium.
    """
    if not 0 <= slot < len(t.insertions):
        raise InputError(f"insertion slot {slot} out of range")
    ins = list(t.insertions)
    pos = _block_start(t, slot) + ins[slot] + 1
    ins[slot] += 1
    free = list(t.free)
    free.insert(pos, 0)
    return RTuple(t.rtype, t.j, tuple(ins), tuple(free))


def apply_addition(t: RTuple, medium: int) -> RTuple:
    """Add one free crossing on a final medium circle: n += 1."""
    if not 0 <= medium < len(t.free):
        raise InputError(f"medium index {medium} out of range")
    free = list(t.free)
    free[medium] += 1
    return RTuple(t.rtype, t.j, t.insertions, tuple(free))


def reduce_to_template(t: RTuple) -> RTuple:
    """Strip all insertions and free crossings; idempotent by construction."""
    width = len(t.insertions)
    return RTuple(t.rtype, t.j, (0,) * width, (0,) * width)


def oracle_genus_distribution(n: int) -> dict[tuple[str, int], int]:
    """Counts of rational knots/links with n crossings, keyed by (kind, genus).

    Every (n, s) class is a knot exactly when n - s is odd; genus follows
    from 2g = n - s - mu + 2.  Symmetric type III decompositions are
    counted twice, matching the census totals.
    """
    if n < 2:
        raise InputError(f"need n >= 2, got {n}")
    dist: dict[tuple[str, int], int] = {}
    for s in range(2, n + 1):
        total = oracle_count(n, s) + oracle_symmetric_count(n, s)
        if not total:
            continue
        mu = 1 if (n - s) % 2 else 2
        kind = "knot" if mu == 1 else "link"
        genus = (n - s - mu + 2) // 2
        dist[(kind, genus)] = dist.get((kind, genus), 0) + total
    return dist
