"""Chromatic coefficients from linear coefficients of induced subgraphs.

Fix an edge e.  ``b[i, j]`` is the signed count of edge sets F containing e
with k(F) = i and k(F - e) = j.  Each b[i, j] is minus a sum, over partitions
of V into j blocks of which e meets exactly j - i + 1, of the product of a_1
over the induced blocks; a_1 itself obeys the same relation with i = 1, which
closes the recursion.  Every a_i then follows from

    a_i = sum_{j > i} b[i, j] - sum_{j < i} b[j, i].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    Hypergraph,
    HypergraphError,
    IntPolynomial,
    component_table,
    components,
    falling_factorial_coeffs,
    partitions_meeting_edge,
    popcount,
    sign_table,
)


class A1Solver:
    """Memoised a_1 of the induced subgraphs H[W] of a fixed hypergraph.

    The cache is keyed by the vertex bitmask W, so one solver must not be
    shared between different ambient hypergraphs.
    """

    def __init__(self, H: Hypergraph):
        self.H = H
        self.cache: dict[int, int] = {}

    def pivot(self, W: int) -> int | None:
        """Largest edge inside W, lowest index among ties."""
        best = None
        for j, e in enumerate(self.H.edges):
            if e & ~W == 0 and (best is None or popcount(e) > popcount(self.H.edges[best])):
                best = j
        return best

    def a1(self, W: int | None = None) -> int:
        if W is None:
            W = self.H.full_vertex_mask
        hit = self.cache.get(W)
        if hit is not None:
            return hit
        if popcount(W) == 1:
            val = 1
        else:
            e = self.pivot(W)
            val = 0 if e is None else -self._meeting_sum(W, e)
        self.cache[W] = val
        return val

    def _meeting_sum(self, W: int, e: int) -> int:
        # e must meet every block, so j never exceeds |e|
        total = 0
        for j in range(2, popcount(self.H.edges[e]) + 1):
            total += self.block_sum(W, e, j, j)
        return total

    def block_sum(self, W: int, e: int, j: int, t: int) -> int:
        """Sum over partitions of W into j blocks, t of them meeting e, of the product of a_1."""
        total = 0
        for blocks in partitions_meeting_edge(self.H, e, j, t, ground=W):
            prod = 1
            for b in blocks:
                prod *= self.a1(b)
                if not prod:
                    break
            total += prod
        return total


def a1_recursive(H: Hypergraph, solver: A1Solver | None = None) -> int:
    """Linear chromatic coefficient via the partition recursion."""
    return (solver or A1Solver(H)).a1()


def b_direct(H: Hypergraph, e, i: int, j: int, max_subsets: int | None = None) -> int:
    """b[i, j] for edge ``e`` by enumerating every edge subset containing e."""
    idx = H.edge_index(e)
    ks = component_table(H, max_subsets)
    signs = sign_table(H.m)
    masks = np.arange(1 << H.m)
    with_e = masks[(masks >> idx & 1).astype(bool)]
    hit = (ks[with_e] == i) & (ks[with_e ^ (1 << idx)] == j)
    return int(signs[with_e[hit]].astype(np.int64).sum())


def b_partition(H: Hypergraph, e, i: int, j: int, solver: A1Solver | None = None) -> int:
    """b[i, j] for edge ``e`` as minus a sum of products of a_1 over partition blocks."""
    idx = H.edge_index(e)
    if i >= j:
        raise ValueError("b[i, j] is only defined through partitions for i < j")
    solver = solver or A1Solver(H)
    t = j - i + 1
    if t > popcount(H.edges[idx]):
        return 0
    return -solver.block_sum(H.full_vertex_mask, idx, j, t)


@dataclass
class BTable:
    edge: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)


def b_table(H: Hypergraph, e, solver: A1Solver | None = None) -> BTable:
    """Every non-trivially-zero b[i, j] for edge ``e``."""
    idx = H.edge_index(e)
    solver = solver or A1Solver(H)
    size = popcount(H.edges[idx])
    table = BTable(idx)
    for i in range(1, H.n):
        for j in range(i + 1, min(H.n, i + size - 1) + 1):
            table.entries[i, j] = b_partition(H, idx, i, j, solver)
    return table


def coefficients_recursive(H: Hypergraph, pivot=None) -> IntPolynomial:
    """All chromatic coefficients from a b-table on one fixed edge.

    ``pivot`` defaults to the largest edge (lowest index among ties).
    """
    if H.m == 0:
        return IntPolynomial((0,) * (H.n - 1) + (1,))
    solver = A1Solver(H)
    e = solver.pivot(H.full_vertex_mask) if pivot is None else H.edge_index(pivot)
    table = b_table(H, e, solver)
    coeffs = []
    for i in range(1, H.n + 1):
        up = sum(table[i, j] for j in range(i + 1, H.n + 1))
        down = sum(table[j, i] for j in range(1, i))
        coeffs.append(up - down)
    return IntPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# graph case
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphBForms:
    """b^i for a graph edge computed two ways, i = 1..n."""

    from_partitions: tuple[int, ...]
    from_partial_sums: tuple[int, ...]
    coefficients: IntPolynomial

    @property
    def agree(self) -> bool:
        return self.from_partitions == self.from_partial_sums

    @property
    def differences_match(self) -> bool:
        """a_i = b^i - b^{i-1} with b^0 = 0."""
        b = (0,) + self.from_partitions
        return all(self.coefficients[i] == b[i] - b[i - 1] for i in range(1, len(b)))


def b_graph_forms(G: Hypergraph, e, coefficients: IntPolynomial | None = None) -> GraphBForms:
    """b^i via partitions into i+1 blocks separating e, and via partial sums of a_i.

    ``coefficients`` defaults to the subset expansion, which keeps the two
    evaluations independent.
    """
    if not G.is_graph:
        raise HypergraphError("graph-case b^i requires a graph")
    idx = G.edge_index(e)
    if coefficients is None:
        from .chromatic import chromatic_subset_expansion
        coefficients = chromatic_subset_expansion(G)
    solver = A1Solver(G)
    lemma = tuple(-solver.block_sum(G.full_vertex_mask, idx, i + 1, 2) for i in range(1, G.n + 1))
    partial = []
    acc = 0
    for c in coefficients.coeffs:
        acc += c
        partial.append(acc)
    return GraphBForms(lemma, tuple(partial), coefficients)


@dataclass(frozen=True)
class AuditRow:
    i: int
    value: int
    bound: int
    nonneg: bool
    within_bound: bool
    left_sharpness_ok: bool
    right_sharpness_ok: bool


@dataclass(frozen=True)
class SignBoundReport:
    """Checks of the alternating-sign and complete-graph bounds for a graph.

    ``partial_sums`` audits (-1)^{n-i} (a_1 + ... + a_i) and ``coefficients``
    audits (-1)^{n-i} a_i, both against K_n.  Left sharpness claims the value
    is positive exactly when k(G) <= i <= n; right sharpness claims the bound
    is strict for i <= n-1 unless G is complete.
    """

    n: int
    k: int
    is_complete: bool
    partial_sums: tuple[AuditRow, ...]
    coefficients: tuple[AuditRow, ...]

    def failures(self) -> list[str]:
        out = []
        for name, rows in (("partial_sums", self.partial_sums), ("coefficients", self.coefficients)):
            for row in rows:
                for clause in ("nonneg", "within_bound", "left_sharpness_ok", "right_sharpness_ok"):
                    if not getattr(row, clause):
                        out.append(f"{name}[i={row.i}].{clause} (value={row.value}, bound={row.bound})")
        return out

    @property
    def passed(self) -> bool:
        return not self.failures()

    def clause_passed(self, family: str, clause: str) -> bool:
        return all(getattr(row, clause) for row in getattr(self, family))


def _audit_rows(n: int, k: int, complete: bool, values, bounds) -> tuple[AuditRow, ...]:
    rows = []
    for i in range(1, n + 1):
        sgn = (-1) ** (n - i)
        v, b = sgn * values[i - 1], sgn * bounds[i - 1]
        rows.append(AuditRow(
            i=i,
            value=v,
            bound=b,
            nonneg=v >= 0,
            within_bound=v <= b,
            left_sharpness_ok=(v > 0) == (k <= i <= n),
            right_sharpness_ok=complete or i > n - 1 or v < b,
        ))
    return tuple(rows)


def _partial_sums(xs) -> list[int]:
    out, acc = [], 0
    for x in xs:
        acc += x
        out.append(acc)
    return out


def sign_bound_audit(G: Hypergraph, coefficients: IntPolynomial | None = None) -> SignBoundReport:
    """Audit sign alternation and the K_n bound for the coefficients of graph ``G``."""
    if not G.is_graph:
        raise HypergraphError("the sign/bound audit applies to graphs only")
    n = G.n
    if coefficients is None:
        coefficients = coefficients_recursive(G)
    complete_coeffs = falling_factorial_coeffs(n)[1:]
    k = components(G, G.full_edge_mask)
    complete = G.m == n * (n - 1) // 2
    a = list(coefficients.coeffs)
    return SignBoundReport(
        n=n,
        k=k,
        is_complete=complete,
        partial_sums=_audit_rows(n, k, complete, _partial_sums(a), _partial_sums(complete_coeffs)),
        coefficients=_audit_rows(n, k, complete, a, complete_coeffs),
    )
