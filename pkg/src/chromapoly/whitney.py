"""Broken cycles, broken-cyclic edge families and pruned subset expansion.

All exhaustive searches here work on tables indexed by edge-subset bitmask,
so they are meant for desk-scale instances (a couple of dozen edges at most).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .core import (
    Hypergraph,
    HypergraphError,
    IntPolynomial,
    bits,
    check_subset_budget,
    coefficients_from_table,
    component_table,
    cover_table,
    edge_cover,
    partitions_meeting_edge,
    popcount,
    sign_table,
    size_table,
    span_components,
    subset_closure,
)


@dataclass(frozen=True)
class EdgeOrdering:
    """A linear order on edge indices; ``rank[j]`` is the position of edge ``j``."""

    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(len(self.rank))):
            raise ValueError(f"{self.rank} is not a permutation of 0..{len(self.rank) - 1}")

    @classmethod
    def identity(cls, m: int) -> "EdgeOrdering":
        return cls(tuple(range(m)))

    @classmethod
    def reverse(cls, m: int) -> "EdgeOrdering":
        return cls(tuple(range(m - 1, -1, -1)))

    @classmethod
    def random(cls, m: int, rng: random.Random) -> "EdgeOrdering":
        r = list(range(m))
        rng.shuffle(r)
        return cls(tuple(r))

    def __len__(self):
        return len(self.rank)

    def max_edge(self, F: int) -> int:
        """Index of the largest edge of non-empty subset ``F``."""
        return max(bits(F), key=self.rank.__getitem__)

    def restricted(self, edge_map: Iterable[int]) -> "EdgeOrdering":
        """Order induced on a sub-collection of edges, relabelled 0..k-1."""
        sub = list(edge_map)
        order = sorted(range(len(sub)), key=lambda j: self.rank[sub[j]])
        rank = [0] * len(sub)
        for pos, j in enumerate(order):
            rank[j] = pos
        return EdgeOrdering(tuple(rank))


def _ordering_for(H: Hypergraph, order: EdgeOrdering | None) -> EdgeOrdering:
    if order is None:
        return EdgeOrdering.identity(H.m)
    if len(order) != H.m:
        raise ValueError(f"ordering has {len(order)} ranks but the hypergraph has {H.m} edges")
    return order


@dataclass(frozen=True)
class BrokenFamily:
    """A family of broken-cyclic edge sets, with the ordering it refers to.

    ``tags[k]`` records where ``members[k]`` came from: ``"delta"``,
    ``"berge"``, ``"star"`` or ``"manual"``.
    """

    order: EdgeOrdering
    members: tuple[int, ...] = ()
    tags: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.tags:
            object.__setattr__(self, "tags", ("manual",) * len(self.members))
        if len(self.tags) != len(self.members):
            raise ValueError("one provenance tag per member is required")

    def __len__(self):
        return len(self.members)

    def subfamily(self, keep: Iterable[int]) -> "BrokenFamily":
        idx = list(keep)
        return BrokenFamily(self.order, tuple(self.members[k] for k in idx), tuple(self.tags[k] for k in idx))

    def union(self, other: "BrokenFamily") -> "BrokenFamily":
        if other.order != self.order:
            raise ValueError("families refer to different orderings")
        seen = dict(zip(self.members, self.tags))
        for mbr, tag in zip(other.members, other.tags):
            seen.setdefault(mbr, tag)
        return BrokenFamily(self.order, tuple(seen), tuple(seen.values()))


class BrokenFamilyError(ValueError):
    """A family member fails the broken-cyclic condition."""


def _require_graph(G: Hypergraph) -> None:
    if not G.is_graph:
        raise HypergraphError("this operation requires a graph (all edges of cardinality 2)")


# ---------------------------------------------------------------------------
# graphs: cycles, broken cycles, NBC counts
# ---------------------------------------------------------------------------

def simple_cycles(G: Hypergraph) -> list[int]:
    """Edge masks of all simple cycles of graph ``G``."""
    _require_graph(G)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(G.n)}
    for j, e in enumerate(G.edges):
        a, b = bits(e)
        adj[a].append((b, j))
        adj[b].append((a, j))

    found: set[int] = set()
    for start in range(G.n):
        # only vertices above `start` may appear, so each cycle is rooted at its minimum
        stack = [(start, 1 << start, 0)]
        while stack:
            v, seen, emask = stack.pop()
            for w, j in adj[v]:
                if emask >> j & 1:
                    continue
                if w == start and popcount(emask) >= 2:
                    found.add(emask | 1 << j)
                elif w > start and not seen >> w & 1:
                    stack.append((w, seen | 1 << w, emask | 1 << j))
    return sorted(found)


def broken_cycles(G: Hypergraph, order: EdgeOrdering | None = None) -> list[int]:
    """Every cycle with its largest edge removed, as edge masks (deduplicated)."""
    order = _ordering_for(G, order)
    out = {C & ~(1 << order.max_edge(C)) for C in simple_cycles(G)}
    return sorted(out)


@dataclass(frozen=True)
class NBCCounts:
    """``h[i-1]`` counts broken-cycle-free spanning subgraphs with n-i edges."""

    h: tuple[int, ...]

    @property
    def signed(self) -> IntPolynomial:
        n = len(self.h)
        return IntPolynomial(tuple((-1) ** (n - i) * hi for i, hi in enumerate(self.h, 1)))


def _avoiding(m: int, family: Iterable[int]) -> np.ndarray:
    flags = np.zeros(1 << m, dtype=bool)
    for A in family:
        flags[A] = True
    return ~subset_closure(flags)


def nbc_counts(G: Hypergraph, order: EdgeOrdering | None = None, max_subsets: int | None = None) -> NBCCounts:
    _require_graph(G)
    check_subset_budget(G, max_subsets)
    free = _avoiding(G.m, broken_cycles(G, order))
    sizes = size_table(G.m)
    counts = np.bincount(sizes[free].astype(np.int64), minlength=G.n + 1)
    return NBCCounts(tuple(int(counts[G.n - i]) if G.n - i <= G.m else 0 for i in range(1, G.n + 1)))


# ---------------------------------------------------------------------------
# hypergraphs: broken-cyclic sets
# ---------------------------------------------------------------------------

def is_broken_cyclic(H: Hypergraph, order: EdgeOrdering | None, F: int) -> bool:
    """H<F> is connected and some edge inside the union of F outranks max F."""
    order = _ordering_for(H, order)
    if F == 0:
        raise ValueError("broken-cyclic sets are non-empty by definition")
    if F >> H.m:
        raise HypergraphError("edge subset refers to edges not in the hypergraph")
    if span_components(H, F) != 1:
        return False
    cover = edge_cover(H, F)
    top = order.rank[order.max_edge(F)]
    return any(order.rank[j] > top and e & ~cover == 0 for j, e in enumerate(H.edges))


def broken_cyclic_table(H: Hypergraph, order: EdgeOrdering | None = None, max_subsets: int | None = None) -> np.ndarray:
    """Boolean table over all edge subsets: does F satisfy the broken-cyclic condition."""
    order = _ordering_for(H, order)
    ks = component_table(H, max_subsets).astype(np.int64)
    cover = cover_table(H)
    covered = np.bitwise_count(cover).astype(np.int64)
    connected = ks - (H.n - covered) == 1
    ranks = order.rank
    top = np.asarray([-1])
    for j in range(H.m):
        top = np.concatenate([top, np.maximum(top, ranks[j])])
    outranked = np.zeros(1 << H.m, dtype=bool)
    for j, e in enumerate(H.edges):
        e64 = np.uint64(e)
        outranked |= (ranks[j] > top) & ((cover & e64) == e64)
    return connected & outranked


def enumerate_broken_cyclic(H: Hypergraph, order: EdgeOrdering | None = None, max_subsets: int | None = None) -> BrokenFamily:
    """The largest admissible family: every broken-cyclic edge subset."""
    order = _ordering_for(H, order)
    members = tuple(int(F) for F in np.flatnonzero(broken_cyclic_table(H, order, max_subsets)))
    return BrokenFamily(order, members, ("star",) * len(members))


def _strict_subset_closure(flags: np.ndarray, m: int) -> np.ndarray:
    closed = subset_closure(flags)
    strict = np.zeros_like(closed)
    idx = np.arange(1 << m)
    for j in range(m):
        has = (idx >> j & 1).astype(bool)
        strict[has] |= closed[idx[has] ^ (1 << j)]
    return strict


def _checked_family(H: Hypergraph, order: EdgeOrdering, sets: set[int], tag: str) -> BrokenFamily:
    for A in sets:
        if not is_broken_cyclic(H, order, A):
            raise AssertionError(f"{tag} set {bits(A)} is not broken-cyclic")
    members = tuple(sorted(sets))
    return BrokenFamily(order, members, (tag,) * len(members))


def delta_cycles(H: Hypergraph, max_subsets: int | None = None) -> list[int]:
    """Edge sets of the delta-cycles of ``H``.

    A delta-cycle is an inclusion-minimal non-empty F such that deleting any
    single edge of F leaves the number of components of H<F> unchanged.
    """
    ks = component_table(H, max_subsets)
    idx = np.arange(1 << H.m)
    stable = idx != 0
    for j in range(H.m):
        has = (idx >> j & 1).astype(bool)
        stable[has] &= ks[idx[has] ^ (1 << j)] == ks[has]
    minimal = stable & ~_strict_subset_closure(stable, H.m)
    return [int(F) for F in np.flatnonzero(minimal)]


def delta_cycle_broken_sets(H: Hypergraph, order: EdgeOrdering | None = None, max_subsets: int | None = None) -> BrokenFamily:
    order = _ordering_for(H, order)
    sets = {F & ~(1 << order.max_edge(F)) for F in delta_cycles(H, max_subsets)}
    return _checked_family(H, order, sets, "delta")


def berge_cycles(H: Hypergraph) -> list[int]:
    """Edge sets of Berge cycles of length >= 2.

    A Berge cycle x_1 e_1 x_2 ... x_m e_m x_1 uses distinct vertices and
    distinct edges with x_i, x_{i+1} in e_i (indices mod m).
    """
    incident: dict[int, list[int]] = {v: [] for v in range(H.n)}
    for j, e in enumerate(H.edges):
        for v in bits(e):
            incident[v].append(j)

    found: set[int] = set()
    for start in range(H.n):
        # rooted at the smallest vertex of the cycle
        stack = [(start, 1 << start, 0, 0)]
        while stack:
            x, seen, emask, length = stack.pop()
            for j in incident[x]:
                if emask >> j & 1:
                    continue
                e = H.edges[j]
                if length >= 1 and e >> start & 1:
                    found.add(emask | 1 << j)
                for y in bits(e):
                    if y > start and not seen >> y & 1:
                        stack.append((y, seen | 1 << y, emask | 1 << j, length + 1))
    return sorted(found)


def berge_cycle_broken_sets(H: Hypergraph, order: EdgeOrdering | None = None) -> BrokenFamily:
    """F minus its top edge, for Berge cycles F whose top edge lies inside the other edges."""
    order = _ordering_for(H, order)
    sets = set()
    for F in berge_cycles(H):
        top = order.max_edge(F)
        rest = F & ~(1 << top)
        if H.edges[top] & ~edge_cover(H, rest) == 0:
            sets.add(rest)
    return _checked_family(H, order, sets, "berge")


# ---------------------------------------------------------------------------
# pruned expansion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrunedResult:
    coefficients: IntPolynomial
    subsets_visited: int


def pruned_expansion_stats(H: Hypergraph, family: BrokenFamily, max_subsets: int | None = None) -> PrunedResult:
    """Signed subset sum restricted to F containing no member of ``family``."""
    check_subset_budget(H, max_subsets)
    if len(family.order) != H.m:
        raise ValueError("family ordering does not match the hypergraph")
    if family.members:
        valid = broken_cyclic_table(H, family.order, max_subsets)
        bad = [A for A in family.members if A == 0 or A >> H.m or not valid[A]]
        if bad:
            raise BrokenFamilyError(f"edge set {bits(bad[0])} is not broken-cyclic under the family's ordering")
    keep = _avoiding(H.m, family.members)
    ks = component_table(H, max_subsets)
    poly = coefficients_from_table(H.n, ks, sign_table(H.m), keep)
    return PrunedResult(poly, int(keep.sum()))


def pruned_expansion(H: Hypergraph, family: BrokenFamily, max_subsets: int | None = None) -> IntPolynomial:
    return pruned_expansion_stats(H, family, max_subsets).coefficients


# ---------------------------------------------------------------------------
# forest counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ForestCounts:
    """``c[i]`` for i = 0..n and ``h[i-1]`` = c[i-1] + c[i] for i = 1..n."""

    c: tuple[int, ...]
    h: tuple[int, ...]


class _ForestSolver:
    """c_i and h_1 of induced subgraphs G[W], memoised on W."""

    def __init__(self, G: Hypergraph, order: EdgeOrdering):
        self.G = G
        self.order = order
        self._h1: dict[int, int] = {}

    def top_edge(self, W: int) -> int | None:
        inside = [j for j, e in enumerate(self.G.edges) if e & ~W == 0]
        if not inside:
            return None
        return max(inside, key=self.order.rank.__getitem__)

    def c(self, W: int, i: int) -> int:
        top = self.top_edge(W)
        if top is None or i < 1:
            return 0
        total = 0
        # blocks must separate the endpoints of the top edge
        for blocks in partitions_meeting_edge(self.G, top, i + 1, 2, ground=W):
            prod = 1
            for b in blocks:
                prod *= self.h1(b)
                if not prod:
                    break
            total += prod
        return total

    def h1(self, W: int) -> int:
        if W in self._h1:
            return self._h1[W]
        if popcount(W) == 1:
            val = 1
        else:
            val = self.c(W, 1)
        self._h1[W] = val
        return val


def forest_counts(G: Hypergraph, order: EdgeOrdering | None = None) -> ForestCounts:
    """Spanning-forest counts c_i built from h_1 of induced subgraphs, and h_i = c_{i-1} + c_i."""
    _require_graph(G)
    if G.m == 0:
        raise HypergraphError("forest counts need at least one edge")
    order = _ordering_for(G, order)
    solver = _ForestSolver(G, order)
    full = G.full_vertex_mask
    c = [0] + [solver.c(full, i) for i in range(1, G.n + 1)]
    h = tuple(c[i - 1] + c[i] for i in range(1, G.n + 1))
    return ForestCounts(tuple(c), h)
