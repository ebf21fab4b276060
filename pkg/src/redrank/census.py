"""Isomorph-free enumeration of small graphs and the exhaustive
verifications built on it: the order-vs-rank census, the max-order
arithmetic inequalities, extremal-graph construction, and the
per-graph property suite.

Enumeration grows graphs one vertex at a time: every representative of
order k is extended by a new vertex with each of the 2^k possible
neighborhoods, and the results are deduplicated by an exact canonical
certificate.  The certificate comes from a backtracking search over
equitable vertex partitions with automorphism-orbit pruning; no
external tooling is involved, so runs are reproducible anywhere.

Orders up to ORDER_CAP = 10 are accepted; 8 is comfortable, 9 takes
minutes, 10 is a stretch for patient hardware.  Larger orders are
rejected outright rather than invited to run for days.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .bounds import graph_to_code
from .formats import graph6_encode
from .graphs import (Graph, conjectured_max_order, duplication_witness,
                     is_reduced, min_removal_for_duplicates,
                     min_removal_for_rank_drop, proven_max_order, rank,
                     rank_drop_report)

ORDER_CAP = 10
_CACHED_LEVELS = 9  # orders whose representative lists are kept in memory


class EnumerationCapError(ValueError):
    """Requested order above the supported enumeration cap."""


# ── canonical labeling ───────────────────────────────────────────


def _refine(rows: Sequence[int], cells: tuple[tuple[int, ...], ...],
            ) -> tuple[tuple[int, ...], ...]:
    """Equitable refinement: split cells by neighbor counts into every
    other cell until stable.  Sub-cells are ordered by count, which
    depends only on the partition, never on vertex labels."""
    changed = True
    while changed:
        changed = False
        for splitter in cells:
            mask = 0
            for v in splitter:
                mask |= 1 << v
            refined: list[tuple[int, ...]] = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & mask).bit_count(), []).append(v)
                if len(groups) == 1:
                    refined.append(cell)
                else:
                    changed = True
                    for count in sorted(groups):
                        refined.append(tuple(groups[count]))
            if changed:
                cells = tuple(refined)
                break
    return cells


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _canonical_order(g: Graph) -> tuple[int, tuple[int, ...]]:
    """The canonical certificate (upper-triangle bits of the relabeled
    adjacency matrix as an integer, minimized over leaf labelings) and
    the vertex order realizing it.

    The search individualizes vertices of the first non-singleton cell;
    a vertex is skipped when an already-known automorphism fixing the
    individualized prefix pointwise maps an earlier sibling to it.
    """
    n, rows = g.n, g.rows
    if n <= 1:
        return 0, tuple(range(n))
    pairs = n * (n - 1) // 2
    best_cert: Optional[int] = None
    best_order: tuple[int, ...] = ()
    generators: list[tuple[int, ...]] = []

    def leaf(cells: tuple[tuple[int, ...], ...]) -> None:
        nonlocal best_cert, best_order
        order = tuple(c[0] for c in cells)
        cert = 0
        for i in range(n):
            row = rows[order[i]]
            for j in range(i + 1, n):
                cert = cert << 1 | (row >> order[j]) & 1
        if best_cert is None or cert < best_cert:
            best_cert, best_order = cert, order
        elif cert == best_cert and order != best_order:
            image = [0] * n
            for pos in range(n):
                image[best_order[pos]] = order[pos]
            generators.append(tuple(image))

    def descend(cells: tuple[tuple[int, ...], ...],
                prefix: tuple[int, ...]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                relevant = [p for p in generators
                            if all(p[x] == x for x in prefix)]
                if relevant:
                    uf = _UnionFind(n)
                    for p in relevant:
                        for x in range(n):
                            uf.union(x, p[x])
                    if any(uf.find(v) == uf.find(t) for t in tried):
                        continue
            tried.append(v)
            split = (cells[:target] + ((v,), tuple(u for u in cell if u != v))
                     + cells[target + 1:])
            descend(_refine(rows, split), prefix + (v,))

    descend(_refine(rows, (tuple(range(n)),)), ())
    assert best_cert is not None and best_cert < (1 << pairs)
    return best_cert, best_order


def canonical_cert(g: Graph) -> int:
    """Isomorphism-invariant integer certificate; two graphs of the same
    order are isomorphic iff their certificates agree."""
    return _canonical_order(g)[0]


def canonical_form(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    _, order = _canonical_order(g)
    position = [0] * g.n
    for pos, v in enumerate(order):
        position[v] = pos
    return g.relabeled(position)


# ── isomorph-free enumeration ────────────────────────────────────

_levels: dict[int, tuple[Graph, ...]] = {}


def _level(order: int) -> tuple[Graph, ...]:
    if order in _levels:
        return _levels[order]
    reps = tuple(_extend_level(order))
    if order <= _CACHED_LEVELS:
        _levels[order] = reps
    return reps


def _extend_level(order: int) -> Iterator[Graph]:
    if order == 1:
        yield Graph.empty(1)
        return
    k = order - 1
    seen: set[int] = set()
    for g in _level(k):
        base = g.rows
        for mask in range(1 << k):
            rows = tuple(base[i] | ((mask >> i & 1) << k) for i in range(k)
                         ) + (mask,)
            candidate = Graph._raw(order, rows)
            cert, label_order = _canonical_order(candidate)
            if cert in seen:
                continue
            seen.add(cert)
            position = [0] * order
            for pos, v in enumerate(label_order):
                position[v] = pos
            yield candidate.relabeled(position)


def enumerate_graphs(order: int, reduced_only: bool = False) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class on
    `order` vertices, in a deterministic first-discovered order."""
    if order < 1:
        raise ValueError("order must be positive")
    if order > ORDER_CAP:
        raise EnumerationCapError(
            f"enumeration capped at order {ORDER_CAP}, got {order}")
    source: Iterable[Graph]
    if order <= _CACHED_LEVELS:
        source = _level(order)
    else:
        source = _extend_level(order)
    for g in source:
        if not reduced_only or is_reduced(g):
            yield g


# ── conjecture census ────────────────────────────────────────────


@dataclass(frozen=True)
class CensusReport:
    """One order's slice of the census: how many isomorphism classes
    exist, how many are reduced, the ranks observed among the reduced
    ones, and any graphs exceeding the conjectured cap for their rank
    (as graph6 strings)."""

    order: int
    total_graphs: int
    reduced_graphs: int
    per_rank_max_order: tuple[tuple[int, int], ...]
    violations: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "total_graphs": self.total_graphs,
            "reduced_graphs": self.reduced_graphs,
            "per_rank_max_order": {str(r): o for r, o in self.per_rank_max_order},
            "violations": list(self.violations),
        }


@dataclass(frozen=True)
class ConjectureSummary:
    """Census rows for orders 1..max_order plus the aggregate verdict.

    covered_ranks lists the ranks r whose cap is fully certified by this
    census: a smallest-order violation for rank r would have order
    exactly one above the cap, so clearing every order up to
    conjectured_max_order(r) + 1 clears the rank outright.
    """

    max_order: int
    reports: tuple[CensusReport, ...]
    per_rank_max_order: tuple[tuple[int, int], ...]
    violations: tuple[str, ...]
    covered_ranks: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "max_order": self.max_order,
            "orders": [r.to_json() for r in self.reports],
            "per_rank_max_order": {str(r): o for r, o in self.per_rank_max_order},
            "violations": list(self.violations),
            "covered_ranks": list(self.covered_ranks),
            "holds": self.holds,
        }


def _covered_ranks(max_order: int) -> tuple[int, ...]:
    out = []
    r = 2
    while conjectured_max_order(r) + 1 <= max_order:
        out.append(r)
        r += 1
    return tuple(out)


def verify_conjecture(max_order: int,
                      graphs: Optional[Iterable[Graph]] = None,
                      ) -> ConjectureSummary:
    """Check order <= conjectured_max_order(rank) for every reduced
    graph of order up to max_order.

    By default the internal generator supplies the graphs; an external
    iterable (for example a parsed graph6 stream) can stand in, and is
    then binned by order and pushed through the identical checks.
    """
    if max_order < 1:
        raise ValueError("max_order must be positive")
    if max_order > ORDER_CAP:
        raise EnumerationCapError(
            f"census capped at order {ORDER_CAP}, got {max_order}")
    bins: dict[int, list[Graph]] = {o: [] for o in range(1, max_order + 1)}
    if graphs is not None:
        for g in graphs:
            if g.n < 1 or g.n > max_order:
                raise ValueError(
                    f"stream graph of order {g.n} outside 1..{max_order}")
            bins[g.n].append(g)

    reports: list[CensusReport] = []
    aggregate: dict[int, int] = {}
    all_violations: list[str] = []
    for order in range(1, max_order + 1):
        pool: Iterable[Graph] = bins[order] if graphs is not None \
            else enumerate_graphs(order)
        total = 0
        reduced = 0
        ranks_here: dict[int, int] = {}
        violations: list[str] = []
        for g in pool:
            total += 1
            if not is_reduced(g):
                continue
            reduced += 1
            r = rank(g)
            ranks_here[r] = order
            if order > conjectured_max_order(r):
                violations.append(graph6_encode(g))
        for r, o in ranks_here.items():
            aggregate[r] = max(aggregate.get(r, 0), o)
        all_violations.extend(violations)
        reports.append(CensusReport(order, total, reduced,
                                    tuple(sorted(ranks_here.items())),
                                    tuple(violations)))
    return ConjectureSummary(max_order, tuple(reports),
                             tuple(sorted(aggregate.items())),
                             tuple(all_violations),
                             _covered_ranks(max_order))


def census_counts(max_order: int) -> list[tuple[int, int, int]]:
    """(order, total classes, reduced classes) rows for 1..max_order."""
    if max_order < 1:
        raise ValueError("max_order must be positive")
    if max_order > ORDER_CAP:
        raise EnumerationCapError(
            f"census capped at order {ORDER_CAP}, got {max_order}")
    rows = []
    for order in range(1, max_order + 1):
        total = 0
        reduced = 0
        for g in enumerate_graphs(order):
            total += 1
            if is_reduced(g):
                reduced += 1
        rows.append((order, total, reduced))
    return rows


# ── max-order arithmetic ─────────────────────────────────────────


@dataclass(frozen=True)
class InequalityReport:
    """Exhaustive check of the two split inequalities

        (i)  m(k) + m(r-k)   <= m(r-2) + 1   for r >= 6,  3 <= k <= r-3
        (ii) m(k) + m(r-k+1) <= m(r-2)       for r >= 10, 4 <= k <= r-3

    together with the doubling recurrences m(r) = 2 m(r-2) + 2 and
    m'(r) = 2 m'(r-2) + 2, for all r up to r_max."""

    r_max: int
    recurrence_checks: int
    family_i_checks: int
    family_ii_checks: int
    failures: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "r_max": self.r_max,
            "recurrence_checks": self.recurrence_checks,
            "family_i_checks": self.family_i_checks,
            "family_ii_checks": self.family_ii_checks,
            "failures": list(self.failures),
            "holds": self.holds,
        }


def verify_m_inequalities(r_max: int) -> InequalityReport:
    if r_max < 10:
        raise ValueError("r_max must be at least 10 to exercise family (ii)")
    failures: list[str] = []
    recurrences = 0
    for r in range(4, r_max + 1):
        recurrences += 2
        if conjectured_max_order(r) != 2 * conjectured_max_order(r - 2) + 2:
            failures.append(f"m recurrence fails at r={r}")
        if proven_max_order(r) != 2 * proven_max_order(r - 2) + 2:
            failures.append(f"m' recurrence fails at r={r}")
    fam_i = 0
    for r in range(6, r_max + 1):
        for k in range(3, r - 2):
            fam_i += 1
            lhs = conjectured_max_order(k) + conjectured_max_order(r - k)
            if lhs > conjectured_max_order(r - 2) + 1:
                failures.append(f"family (i) fails at r={r}, k={k}")
    fam_ii = 0
    for r in range(10, r_max + 1):
        for k in range(4, r - 2):
            fam_ii += 1
            lhs = conjectured_max_order(k) + conjectured_max_order(r - k + 1)
            if lhs > conjectured_max_order(r - 2):
                failures.append(f"family (ii) fails at r={r}, k={k}")
    return InequalityReport(r_max, recurrences, fam_i, fam_ii, tuple(failures))


# ── extremal construction ────────────────────────────────────────


class ExtremalConstructionError(RuntimeError):
    """The doubling construction missed its target; carries what was
    actually built so the failure can be inspected."""

    def __init__(self, r: int, g: Graph, reason: str):
        self.r = r
        self.graph = g
        super().__init__(f"extremal candidate for rank {r} {reason}; "
                         f"built {graph6_encode(g)}")


def construct_extremal(r: int) -> Graph:
    """A reduced graph of rank exactly r at the largest conjectured
    order, built by repeated doubling from K_2 (even ranks) or K_3 (odd
    ranks).

    The step from r-2 to r duplicates every vertex (the copy is
    non-adjacent to its original and inherits all its neighbors, which
    leaves the rank unchanged), then adds a vertex w adjacent to every
    original and a pendant vertex u adjacent only to w.  w separates
    each duplicate pair, u and w land in rows of their own, and the two
    new rows raise the rank by exactly 2: pivoting on u's column
    isolates w's row, pivoting on the original-minus-copy difference
    row isolates w's column, and what remains is the doubled matrix.

    Symmetric attachments (joining the second new vertex to all copies
    instead of leaving it pendant) overshoot: they add rank 3 whenever
    the base admits no c with A c = 1 and sum(c) = 2, which already
    happens for K_3.  The advertised properties are therefore verified
    on every result rather than trusted; a miss raises
    ExtremalConstructionError.
    """
    if not 2 <= r <= 12:
        raise ValueError("construction supported for 2 <= r <= 12")
    if r == 2:
        g = Graph.complete(2)
    elif r == 3:
        g = Graph.complete(3)
    else:
        base = construct_extremal(r - 2)
        t = base.n
        w, u = 2 * t, 2 * t + 1
        edges = []
        for i, j in base.edges():
            edges.extend([(i, j), (i, t + j), (t + i, j), (t + i, t + j)])
        edges.extend((w, i) for i in range(t))
        edges.append((u, w))
        g = Graph.from_edges(2 * t + 2, edges)
    if not is_reduced(g):
        raise ExtremalConstructionError(r, g, "is not reduced")
    if g.n != conjectured_max_order(r):
        raise ExtremalConstructionError(
            r, g, f"has order {g.n}, wanted {conjectured_max_order(r)}")
    got = rank(g)
    if got != r:
        raise ExtremalConstructionError(r, g, f"has rank {got}")
    return g


# ── per-graph property suite ─────────────────────────────────────


@dataclass(frozen=True)
class SuiteCheck:
    name: str
    run: int
    passed: int


def _witness_consistent(g: Graph, tau: int) -> bool:
    """The duplication witness must remove exactly tau vertices, leave
    its anchor pair duplicated, and any claimed T1/T2 split must
    re-validate against the adjacency rows.  A failed split with no
    consistent orientation is legitimate and not flagged."""
    w = duplication_witness(g)
    if len(w.removed) != tau:
        return False
    if not any(w.pair[0] in c and w.pair[1] in c for c in w.classes):
        return False
    if not w.split_ok:
        return w.oriented is None and w.t1 is None and w.t2 is None
    assert w.oriented is not None and w.t1 is not None and w.t2 is not None
    if set(w.t1) | set(w.t2) != set(w.removed) or set(w.t1) & set(w.t2):
        return False
    if sorted(tuple(sorted(p)) for p in w.oriented) != sorted(w.classes):
        return False
    for side, mine, other in ((w.t1, 0, 1), (w.t2, 1, 0)):
        for x in side:
            row = g.rows[x]
            if not all(row >> p[mine] & 1 and not row >> p[other] & 1
                       for p in w.oriented):
                return False
    return True


@dataclass(frozen=True)
class PropertySuiteReport:
    """Outcome of running every structural check over every reduced
    graph up to max_order.  The duplication-based checks only apply to
    non-complete graphs (a complete graph has no non-adjacent pair), so
    their run counts are lower."""

    max_order: int
    graphs_processed: int
    checks: tuple[SuiteCheck, ...]
    failures: tuple[tuple[str, str], ...]

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "max_order": self.max_order,
            "graphs_processed": self.graphs_processed,
            "checks": [{"name": c.name, "run": c.run, "passed": c.passed}
                       for c in self.checks],
            "failures": [{"graph6": g6, "check": name}
                         for g6, name in self.failures],
            "holds": self.holds,
        }


def lemma_suite(max_order: int) -> PropertySuiteReport:
    """Exhaustively re-verify, over every reduced graph on up to
    max_order <= 8 vertices:

      * neighborhood removal drops the rank by at least 2,
      * the rank-drop removal count is at most the duplication count,
      * the order stays below 2^rank,
      * the duplication witness splits both ways consistently,
      * the +-1 row embedding respects its inner-product cap.
    """
    if not 2 <= max_order <= 8:
        raise ValueError("suite supported for 2 <= max_order <= 8")
    names = ("neighborhood_removal_rank_drop", "rank_drop_le_duplication",
             "order_within_power_bound", "duplication_witness_consistent",
             "embedding_inner_product_cap")
    run = dict.fromkeys(names, 0)
    passed = dict.fromkeys(names, 0)
    failures: list[tuple[str, str]] = []
    processed = 0

    def record(g: Graph, name: str, ok: bool) -> None:
        run[name] += 1
        if ok:
            passed[name] += 1
        else:
            failures.append((graph6_encode(g), name))

    for order in range(2, max_order + 1):
        for g in enumerate_graphs(order, reduced_only=True):
            processed += 1
            r = rank(g)
            record(g, "neighborhood_removal_rank_drop",
                   rank_drop_report(g).all_passed)
            record(g, "order_within_power_bound", g.n <= 2 ** r - 1)
            if not g.is_complete:
                tau = min_removal_for_duplicates(g)
                rho = min_removal_for_rank_drop(g)
                record(g, "rank_drop_le_duplication", rho <= tau)
                record(g, "duplication_witness_consistent",
                       _witness_consistent(g, tau))
            record(g, "embedding_inner_product_cap",
                   graph_to_code(g).within_cap)
    checks = tuple(SuiteCheck(name, run[name], passed[name]) for name in names)
    return PropertySuiteReport(max_order, processed, checks, tuple(failures))
