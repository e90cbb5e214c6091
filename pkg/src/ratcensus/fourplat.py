"""Concrete oriented 4-plat diagrams and their Seifert statistics.

A 4-plat for the vector [a1, ..., a_{2m+1}] is modelled as a row of
columns on four horizontal strands (rows 0..3, row 3 at the bottom),
capped at both ends by arcs joining rows (0,1) and rows (2,3).  Block i
(1-based) contributes a_i consecutive crossing columns: odd blocks twist
rows (1,2), even blocks twist rows (0,1).  Row 3 is therefore never
crossed; it is the long bottom arc, and the Seifert circle through it is
the large circle of the decomposition.

Over/under bits alternate between blocks so the diagram is alternating,
with the strand arriving from the long bottom arc passing under at the
first crossing of block a1.  The long arc is always oriented right to
left; for two-component links the orientation of the other component is
an explicit choice.

Nodes of the planar code are pairs (t, r): column boundary t in 0..n,
row r in 0..3.  Every node lies on exactly two arcs, so components and
Seifert circles are plain cycle/union-find computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .contfrac import validate_vector
from .errors import ConsistencyError, InputError

Node = tuple[int, int]


class Orient2(Enum):
    """Orientation choice for the second component (ignored for knots)."""

    FORWARD = "fwd"
    REVERSED = "rev"


@dataclass(frozen=True)
class Crossing:
    col: int          # column index, 0..n-1
    row: int          # upper row of the twisted pair (row, row+1)
    block: int        # 0-based index into the vector
    desc_over: bool   # strand (col,row)->(col+1,row+1) is the over strand


@dataclass(frozen=True)
class SeifertData:
    c: int
    s: int
    mu: int
    signs: tuple[int, ...]   # one sign per crossing, in column order
    genus: int


@dataclass(frozen=True)
class SignedVectorType:
    signed_entries: tuple[int, ...]
    type: str  # "I", "II", "III" or "IV"


class UnionFind:
    """Minimal union-find with path compression and union by size."""

    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def class_count(self):
        return sum(1 for x in self.parent if self.parent[x] == x)


@dataclass
class FourPlatDiagram:
    vector: tuple[int, ...]
    crossings: list[Crossing]
    orient2: Orient2 = Orient2.FORWARD
    # derived, filled in __post_init__
    n: int = field(init=False)
    mu: int = field(init=False)
    _succ: dict = field(init=False, repr=False)   # node -> next node along orientation

    def __post_init__(self):
        self.vector = validate_vector(self.vector)
        self.n = sum(self.vector)
        if len(self.crossings) != self.n:
            raise InputError("crossing list does not match the vector")
        self._crossing_at = {c.col: c for c in self.crossings}
        self._orient()

    # -- planar connectivity -------------------------------------------------

    def _adjacency(self):
        n = self.n
        adj = {(t, r): [] for t in range(n + 1) for r in range(4)}

        def link(a, b):
            adj[a].append(b)
            adj[b].append(a)

        for t in (0, n):
            link((t, 0), (t, 1))
            link((t, 2), (t, 3))
        for c in self.crossings:
            t = c.col
            link((t, c.row), (t + 1, c.row + 1))      # descending strand
            link((t, c.row + 1), (t + 1, c.row))      # ascending strand
            for r in range(4):
                if r not in (c.row, c.row + 1):
                    link((t, r), (t + 1, r))
        return adj

    def _orient(self):
        """Trace components and fix one direction of travel on each."""
        adj = self._adjacency()
        succ = {}
        components = []
        seen = set()

        def trace(start, first):
            cycle = [start]
            prev, cur = start, first
            while cur != start:
                cycle.append(cur)
                a, b = adj[cur]
                prev, cur = cur, (b if a == prev else a)
            return cycle

        # component through the long bottom arc, oriented right to left
        long_arc_start = (self.n, 3)
        cyc = trace(long_arc_start, (self.n - 1, 3))
        components.append(cyc)
        seen.update(cyc)

        for t in range(self.n + 1):
            for r in range(4):
                node = (t, r)
                if node in seen:
                    continue
                a, b = sorted(adj[node])
                first = a if self.orient2 is Orient2.FORWARD else b
                cyc = trace(node, first)
                components.append(cyc)
                seen.update(cyc)

        if len(components) > 2:
            raise ConsistencyError(f"4-plat with {len(components)} components")
        for cyc in components:
            for i, node in enumerate(cyc):
                succ[node] = cyc[(i + 1) % len(cyc)]
        self.mu = len(components)
        self._succ = succ

    # -- per-crossing geometry -----------------------------------------------

    def _strand_dirs(self, c: Crossing):
        """Direction vectors (dx, dy) of the two strands at a crossing.

        Returns (desc, asc) where desc is the strand through
        (col,row)-(col+1,row+1) and asc the one through
        (col,row+1)-(col+1,row); x grows rightward, y grows upward.
        """
        a, b = (c.col, c.row), (c.col + 1, c.row + 1)
        desc = (1, -1) if self._succ[a] == b else (-1, 1)
        a, b = (c.col, c.row + 1), (c.col + 1, c.row)
        asc = (1, 1) if self._succ[a] == b else (-1, -1)
        return desc, asc

    def crossing_sign(self, c: Crossing) -> int:
        # handedness fixed so the standard diagram of [3,2,2,3,3] with the
        # long arc right-to-left carries all-negative crossings
        desc, asc = self._strand_dirs(c)
        over, under = (desc, asc) if c.desc_over else (asc, desc)
        cross = under[0] * over[1] - under[1] * over[0]
        return 1 if cross < 0 else -1

    def is_alternating(self) -> bool:
        """Check that every strand walk alternates over/under."""
        over_edge = {}  # unordered crossing-strand edge -> over bit
        for c in self.crossings:
            desc = frozenset({(c.col, c.row), (c.col + 1, c.row + 1)})
            asc = frozenset({(c.col, c.row + 1), (c.col + 1, c.row)})
            over_edge[desc] = c.desc_over
            over_edge[asc] = not c.desc_over
        seen = set()
        for start in self._succ:
            if start in seen:
                continue
            # walk the whole component, recording over/under per passage
            bits = []
            node = start
            while True:
                seen.add(node)
                nxt = self._succ[node]
                edge = frozenset({node, nxt})
                if edge in over_edge:
                    bits.append(over_edge[edge])
                node = nxt
                if node == start:
                    break
            for i in range(len(bits)):
                if bits[i] == bits[(i + 1) % len(bits)]:
                    return False
        return True


def build(v, orient2: Orient2 = Orient2.FORWARD) -> FourPlatDiagram:
    """Build the standard alternating 4-plat diagram for a vector."""
    entries = validate_vector(v)
    crossings = []
    col = 0
    for block, a in enumerate(entries):
        on_middle = block % 2 == 0       # 1-based odd blocks twist rows (1,2)
        row = 1 if on_middle else 0
        for _ in range(a):
            crossings.append(Crossing(col, row, block, desc_over=on_middle))
            col += 1
    return FourPlatDiagram(entries, crossings, orient2)


def seifert_decompose(d: FourPlatDiagram) -> SeifertData:
    """Smooth every crossing coherently with orientation and count circles."""
    n = d.n
    uf = UnionFind((t, r) for t in range(n + 1) for r in range(4))
    for t in (0, n):
        uf.union((t, 0), (t, 1))
        uf.union((t, 2), (t, 3))
    signs = []
    for c in d.crossings:
        t = c.col
        for r in range(4):
            if r not in (c.row, c.row + 1):
                uf.union((t, r), (t + 1, r))
        desc, asc = d._strand_dirs(c)
        if desc[0] == asc[0]:
            # parallel strands: smooth into two horizontal arcs
            uf.union((t, c.row), (t + 1, c.row))
            uf.union((t, c.row + 1), (t + 1, c.row + 1))
        else:
            # antiparallel: smooth into two vertical arcs
            uf.union((t, c.row), (t, c.row + 1))
            uf.union((t + 1, c.row), (t + 1, c.row + 1))
        signs.append(d.crossing_sign(c))
    s = uf.class_count()
    twice_genus = n - s - d.mu + 2
    if twice_genus < 0 or twice_genus % 2:
        raise ConsistencyError(
            f"c={n}, s={s}, mu={d.mu} gives non-integral or negative genus"
        )
    return SeifertData(c=n, s=s, mu=d.mu, signs=tuple(signs), genus=twice_genus // 2)


def signed_vector_and_type(d: FourPlatDiagram) -> SignedVectorType:
    """Signed vector b_i = (common block sign) * a_i and the I-IV type."""
    block_signs = {}
    for c in d.crossings:
        sign = d.crossing_sign(c)
        if block_signs.setdefault(c.block, sign) != sign:
            raise ConsistencyError(f"mixed crossing signs inside twist block {c.block}")
    signed = tuple(block_signs[i] * a for i, a in enumerate(d.vector))
    first, last = signed[0], signed[-1]
    if first > 0:
        kind = "III" if last > 0 else "I"
    else:
        kind = "II" if last > 0 else "IV"
    return SignedVectorType(signed_entries=signed, type=kind)


def reversal(d: FourPlatDiagram) -> FourPlatDiagram:
    """Rotate 180 degrees about a vertical axis, then reverse all orientations.

    The crossing list mirrors left-to-right with over/under bits preserved
    (the flip through space exchanges ascending/descending geometry and
    over/under simultaneously).  The orientation choice of the second
    component is picked so the resulting signed vector is exactly the
    reverse of the input's, which makes the operation an involution at the
    signed-vector level.
    """
    n, nblocks = d.n, len(d.vector)
    new_vector = tuple(reversed(d.vector))
    new_crossings = sorted(
        (Crossing(n - 1 - c.col, c.row, nblocks - 1 - c.block, c.desc_over)
         for c in d.crossings),
        key=lambda c: c.col,
    )
    expected = tuple(reversed(signed_vector_and_type(d).signed_entries))
    choices = (Orient2.FORWARD,) if d.mu == 1 else (Orient2.FORWARD, Orient2.REVERSED)
    for choice in choices:
        candidate = FourPlatDiagram(new_vector, list(new_crossings), choice)
        if signed_vector_and_type(candidate).signed_entries == expected:
            return candidate
    raise ConsistencyError("no orientation of the mirrored diagram reverses the signed vector")
