"""Graphs, adjacency rank over Q, and the reducedness invariants.

A graph is a tuple of neighbor bitmasks.  Rank of the 0/1 adjacency
matrix is computed by fraction-free Bareiss elimination on Python
integers, so it is the exact rank over Q (equivalently over R).

A graph is *reduced* when it has no isolated vertex and no two vertices
with identical neighborhoods.  For reduced graphs the module provides:

  * min_removal_for_duplicates: the least number of vertices whose
    removal leaves a graph with two duplicated vertices (the minimum of
    |N(u) xor N(v)| over non-adjacent pairs),
  * min_removal_for_rank_drop: the least number of vertices whose
    removal lowers the rank,
  * rank_drop_report: checks that removing any closed-neighborhood or
    neighborhood symmetric difference drops the rank by the expected
    amount,
  * duplication_witness: a largest induced subgraph with duplicated
    vertices together with the two-sided split of the removed set,
  * the conjectured and proven order bounds for a given rank.

Graphs are immutable; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class Graph:
    """A finite simple graph on vertices 0..n-1 with bitmask adjacency."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]) -> None:
        rows = tuple(rows)
        if n < 0:
            raise ValueError("negative order")
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        mask = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~mask:
                raise ValueError(f"row {u} mentions a vertex >= {n}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(n):
            for v in _bits(rows[u]):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric edge {u}-{v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @classmethod
    def _raw(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Unchecked constructor for internal callers that guarantee a
        valid adjacency structure."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    # ── constructors ─────────────────────────────────────────────

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._raw(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._raw(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        mask = (1 << n) - 1
        return cls._raw(n, tuple(mask ^ (1 << u) for u in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    # ── structure ────────────────────────────────────────────────

    def neighbors(self, u: int) -> int:
        return self.rows[u]

    def neighbor_list(self, u: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def has_edges(self) -> bool:
        return any(self.rows)

    @property
    def is_complete(self) -> bool:
        mask = (1 << self.n) - 1
        return all(self.rows[u] == mask ^ (1 << u) for u in range(self.n))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def induced_on(self, keep: Iterable[int]) -> "Graph":
        """The induced subgraph on `keep`, relabeled in sorted order."""
        kept = sorted(set(keep))
        if kept and not (0 <= kept[0] and kept[-1] < self.n):
            raise ValueError("vertex out of range")
        index = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for w in _bits(self.rows[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph._raw(len(kept), tuple(rows))

    def without(self, removed: Iterable[int]) -> "Graph":
        gone = set(removed)
        return self.induced_on(v for v in range(self.n) if v not in gone)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image under the permutation v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        rows = [0] * self.n
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Graph._raw(self.n, tuple(rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph({self.n}, edges={list(self.edges())})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ── rank ─────────────────────────────────────────────────────────


def _bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination
    with full pivoting.  The matrix is consumed."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    prev = 1
    r = 0
    while r < min(nrows, ncols):
        pi = pj = -1
        for i in range(r, nrows):
            row = matrix[i]
            for j in range(r, ncols):
                if row[j]:
                    pi, pj = i, j
                    break
            if pi >= 0:
                break
        if pi < 0:
            break
        if pi != r:
            matrix[r], matrix[pi] = matrix[pi], matrix[r]
        if pj != r:
            for row in matrix:
                row[r], row[pj] = row[pj], row[r]
        pivot = matrix[r][r]
        prow = matrix[r]
        for i in range(r + 1, nrows):
            row = matrix[i]
            head = row[r]
            for j in range(r + 1, ncols):
                row[j] = (row[j] * pivot - head * prow[j]) // prev
            row[r] = 0
        prev = pivot
        r += 1
    return r


def rank(g: Graph) -> int:
    """Exact rank over Q of the adjacency matrix of g."""
    matrix = [[g.rows[u] >> v & 1 for v in range(g.n)] for u in range(g.n)]
    return _bareiss_rank(matrix)


# ── reducedness ──────────────────────────────────────────────────


def duplication_classes(g: Graph) -> list[tuple[int, ...]]:
    """Maximal sets of size >= 2 of vertices sharing a neighborhood.
    Members of a class are pairwise non-adjacent automatically."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.rows[v], []).append(v)
    classes = [tuple(vs) for vs in groups.values() if len(vs) >= 2]
    classes.sort()
    return classes


def is_reduced(g: Graph) -> bool:
    """No isolated vertices and no duplicated neighborhoods."""
    seen = set()
    for row in g.rows:
        if row == 0 or row in seen:
            return False
        seen.add(row)
    return True


def reduce_graph(g: Graph) -> Graph:
    """Delete isolated vertices and collapse each duplication class to
    one representative until the graph is reduced.  Preserves rank."""
    current = g
    while True:
        drop: set[int] = set()
        seen: dict[int, int] = {}
        for v in range(current.n):
            row = current.rows[v]
            if row == 0:
                drop.add(v)
            elif row in seen:
                drop.add(v)
            else:
                seen[row] = v
        if not drop:
            return current
        current = current.without(drop)


def neighborhood_symdiff(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """Vertices adjacent to exactly one of u, v.  Contains u and v
    themselves exactly when they are adjacent."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    if u == v:
        raise ValueError("vertices must be distinct")
    return tuple(_bits(g.rows[u] ^ g.rows[v]))


def _min_symdiff_pair(g: Graph) -> tuple[int, int, int]:
    """(u, v, |symdiff|) minimizing the symmetric difference size over
    non-adjacent pairs; ties resolved by lexicographic (u, v)."""
    best: Optional[tuple[int, int, int]] = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.rows[u] >> v & 1:
                continue
            size = (g.rows[u] ^ g.rows[v]).bit_count()
            if best is None or size < best[2]:
                best = (u, v, size)
    if best is None:
        raise ValueError("graph is complete; no non-adjacent pair exists")
    return best


def _require_reduced_noncomplete(g: Graph, what: str) -> None:
    if not is_reduced(g):
        raise ValueError(f"{what} requires a reduced graph")
    if g.is_complete:
        raise ValueError(f"{what} is undefined for complete graphs")


def min_removal_for_duplicates(g: Graph) -> int:
    """Least k such that removing some k vertices leaves duplicated
    vertices: the minimum |N(u) xor N(v)| over non-adjacent pairs.
    Requires g reduced and not complete."""
    _require_reduced_noncomplete(g, "min_removal_for_duplicates")
    return _min_symdiff_pair(g)[2]


def min_removal_for_rank_drop(g: Graph) -> int:
    """Least k such that deleting some k vertices lowers the rank.

    Ascending search over subset sizes.  When the graph is reduced and
    not complete, the symmetric difference of the closest non-adjacent
    pair is tried first; if its removal verifiably drops the rank it
    caps the search, keeping the bound non-circular.
    """
    if not g.has_edges:
        raise ValueError("rank drop needs at least one edge")
    base = rank(g)
    cap = g.n
    if is_reduced(g) and not g.is_complete:
        u, v, size = _min_symdiff_pair(g)
        removed = neighborhood_symdiff(g, u, v)
        if rank(g.without(removed)) < base:
            cap = size
    for k in range(1, cap):
        for subset in combinations(range(g.n), k):
            if rank(g.without(subset)) < base:
                return k
    return cap


# ── rank-drop checks ─────────────────────────────────────────────


@dataclass(frozen=True)
class RankDropCheck:
    kind: str                     # "neighborhood" | "adjacent" | "nonadjacent"
    vertices: tuple[int, ...]     # v, or the pair (u, v)
    removed: tuple[int, ...]
    base_rank: int
    observed_rank: int
    required_max: int

    @property
    def passed(self) -> bool:
        return self.observed_rank <= self.required_max


@dataclass(frozen=True)
class RankDropReport:
    order: int
    base_rank: int
    checks: tuple[RankDropCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[RankDropCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def rank_drop_report(g: Graph) -> RankDropReport:
    """Verify the expected rank drops on a reduced graph:

      * removing N(v) drops the rank by at least 2, for every vertex v,
      * removing N(u) xor N(v) drops it by at least 1 for adjacent pairs
        and at least 2 for non-adjacent pairs.
    """
    if not is_reduced(g):
        raise ValueError("rank_drop_report requires a reduced graph")
    base = rank(g)
    checks: list[RankDropCheck] = []
    for v in range(g.n):
        removed = tuple(_bits(g.rows[v]))
        observed = rank(g.without(removed))
        checks.append(RankDropCheck("neighborhood", (v,), removed,
                                    base, observed, base - 2))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            removed = neighborhood_symdiff(g, u, v)
            observed = rank(g.without(removed))
            if g.has_edge(u, v):
                checks.append(RankDropCheck("adjacent", (u, v), removed,
                                            base, observed, base - 1))
            else:
                checks.append(RankDropCheck("nonadjacent", (u, v), removed,
                                            base, observed, base - 2))
    return RankDropReport(g.n, base, tuple(checks))


# ── duplication witness ──────────────────────────────────────────


@dataclass(frozen=True)
class DuplicationWitness:
    """A maximum-order induced subgraph with duplicated vertices.

    `pair` is the closest non-adjacent pair and `removed` its
    neighborhood symmetric difference, so |removed| equals
    min_removal_for_duplicates and the pair is duplicated in what
    remains.  `classes` are the duplication classes of the remaining
    subgraph, in original labels.  When every class is a pair and some
    orientation of the pairs lets the removed vertices split into T1
    (adjacent to the first member of every oriented pair, to no second
    member) and T2 (symmetrically), the split is reported in t1/t2 with
    the orientation in `oriented`; otherwise split_ok is False and all
    three are None, which is a legitimate outcome, not an error.
    `isolated` is the smallest isolated vertex of the remaining
    subgraph, if any.
    """
    pair: tuple[int, int]
    removed: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    oriented: Optional[tuple[tuple[int, int], ...]]
    t1: Optional[tuple[int, ...]]
    t2: Optional[tuple[int, ...]]
    isolated: Optional[int]
    split_ok: bool


def duplication_witness(g: Graph) -> DuplicationWitness:
    """Witness for a reduced, non-complete graph; see DuplicationWitness."""
    _require_reduced_noncomplete(g, "duplication_witness")
    u, v, _size = _min_symdiff_pair(g)
    removed = neighborhood_symdiff(g, u, v)
    removed_mask = 0
    for w in removed:
        removed_mask |= 1 << w
    keep_mask = ((1 << g.n) - 1) ^ removed_mask

    groups: dict[int, list[int]] = {}
    for w in _bits(keep_mask):
        groups.setdefault(g.rows[w] & keep_mask, []).append(w)
    classes = sorted(tuple(vs) for vs in groups.values() if len(vs) >= 2)
    isolated_list = sorted(w for w in _bits(keep_mask)
                           if g.rows[w] & keep_mask == 0)
    isolated = isolated_list[0] if isolated_list else None

    oriented, t1, t2, split_ok = _two_sided_split(g, removed, classes)
    return DuplicationWitness((u, v), removed, tuple(classes), oriented,
                              t1, t2, isolated, split_ok)


def _two_sided_split(g: Graph, removed: tuple[int, ...],
                     classes: list[tuple[int, ...]]):
    """Search the 2^k orientations of k duplication pairs for one under
    which every removed vertex is adjacent either to all first members
    and no second member (T1) or the other way around (T2).  Returns
    the first orientation found in flip-bit order, so the result is
    deterministic."""
    if not classes or any(len(c) != 2 for c in classes):
        return None, None, None, False
    k = len(classes)
    for flips in range(1 << k):
        oriented = tuple(
            (c[1], c[0]) if flips >> i & 1 else (c[0], c[1])
            for i, c in enumerate(classes))
        t1: list[int] = []
        t2: list[int] = []
        consistent = True
        for w in removed:
            row = g.rows[w]
            to_first = all(row >> f & 1 and not row >> s & 1
                           for f, s in oriented)
            to_second = all(row >> s & 1 and not row >> f & 1
                            for f, s in oriented)
            if to_first:
                t1.append(w)
            elif to_second:
                t2.append(w)
            else:
                consistent = False
                break
        if consistent:
            return oriented, tuple(t1), tuple(t2), True
    return None, None, None, False


# ── order bounds ─────────────────────────────────────────────────


def conjectured_max_order(r: int) -> int:
    """The conjectured maximum order of a reduced graph of rank r:
    2^((r+2)/2) - 2 for even r, 5 * 2^((r-3)/2) - 2 for odd r."""
    if r < 2:
        raise ValueError("rank must be at least 2")
    if r % 2 == 0:
        return 2 ** ((r + 2) // 2) - 2
    return 5 * 2 ** ((r - 3) // 2) - 2


def proven_max_order(r: int) -> int:
    """The proven order bound 8 * conjectured_max_order(r) + 14."""
    return 8 * conjectured_max_order(r) + 14


def order_bound(r: int, variant: str = "conjectured") -> int:
    if variant == "conjectured":
        return conjectured_max_order(r)
    if variant == "proven":
        return proven_max_order(r)
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class RankProfile:
    order: int
    rank: int
    reduced: bool
    conjectured_max: Optional[int]
    proven_max: Optional[int]


def rank_profile(g: Graph) -> RankProfile:
    r = rank(g)
    cm = conjectured_max_order(r) if r >= 2 else None
    pm = proven_max_order(r) if r >= 2 else None
    return RankProfile(g.n, r, is_reduced(g), cm, pm)


def is_candidate_minimal_violation(g: Graph) -> bool:
    """True when g is reduced and its order is exactly one more than the
    conjectured maximum for its rank.  A minimum-order violation of the
    conjectured bound necessarily has this exact shape, so a search for
    minimal counterexamples only needs graphs passing this filter."""
    if not is_reduced(g):
        return False
    r = rank(g)
    if r < 2:
        return False
    return g.n == conjectured_max_order(r) + 1
