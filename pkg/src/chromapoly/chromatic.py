"""Baseline chromatic polynomial computations.

Three mutually independent routes: counting colourings directly, the signed
sum over all edge subsets, and deletion-contraction (graphs only).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .core import (
    Hypergraph,
    HypergraphError,
    IntPolynomial,
    SizeGuardError,
    bits,
    component_table,
    coefficients_from_table,
    falling_factorial_coeffs,
    sign_table,
)

#: Largest number of colourings ``chromatic_bruteforce`` will enumerate by default.
MAX_COLOURINGS = 10**8

# colourings of the trailing vertices are materialised in one array of this many rows at most
_CHUNK_ROWS = 1 << 18


class InterpolationError(ArithmeticError):
    """Interpolated coefficients came out non-integral."""


def chromatic_bruteforce(H: Hypergraph, lam: int, max_colourings: int = MAX_COLOURINGS) -> int:
    """Number of proper ``lam``-colourings of ``H``.

    A colouring is proper when no edge is monochromatic.
    """
    if lam < 0:
        raise ValueError("number of colours must be non-negative")
    if lam == 0:
        return 0
    total = lam ** H.n
    if total > max_colourings:
        raise SizeGuardError(f"{lam}^{H.n} colourings exceeds the cap of {max_colourings}")
    if H.m == 0:
        return total

    # split vertices: the last `tail` are enumerated in a numpy block, the rest in Python
    tail = H.n
    while tail > 0 and lam ** tail > _CHUNK_ROWS:
        tail -= 1
    head = H.n - tail
    grid = np.indices((lam,) * tail, dtype=np.int16).reshape(tail, -1).T if tail else np.zeros((1, 0), np.int16)
    rows = grid.shape[0]
    edges = [bits(e) for e in H.edges]

    count = 0
    for prefix in product(range(lam), repeat=head):
        cols = np.empty((rows, H.n), dtype=np.int16)
        if head:
            cols[:, :head] = prefix
        cols[:, head:] = grid
        ok = np.ones(rows, dtype=bool)
        for vs in edges:
            first = cols[:, vs[0]]
            split = np.zeros(rows, dtype=bool)
            for v in vs[1:]:
                split |= cols[:, v] != first
            ok &= split
        count += int(ok.sum())
    return count


def chromatic_subset_expansion(H: Hypergraph, max_subsets: int | None = None) -> IntPolynomial:
    """a_i as the signed count of edge subsets F with k(F) = i."""
    ks = component_table(H, max_subsets)
    return coefficients_from_table(H.n, ks, sign_table(H.m))


def interpolate_from_counts(H: Hypergraph, max_colourings: int = MAX_COLOURINGS) -> IntPolynomial:
    """Recover the chromatic polynomial from brute-force counts at 0..n.

    Newton forward differences give chi(x) = sum_k d_k * C(x, k); every d_k
    must be divisible by k!, and C(x, k) * k! expands via falling factorials.
    """
    n = H.n
    values = [chromatic_bruteforce(H, lam, max_colourings) for lam in range(n + 1)]
    diffs = []
    row = values
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    coeffs = [0] * (n + 1)
    fact = 1
    for k, d in enumerate(diffs):
        if k:
            fact *= k
        q, rem = divmod(d, fact)
        if rem:
            raise InterpolationError(f"forward difference {d} at order {k} not divisible by {k}!")
        for p, c in enumerate(falling_factorial_coeffs(k)):
            coeffs[p] += q * c
    if coeffs[0]:
        raise InterpolationError("interpolated polynomial has a non-zero constant term")
    return IntPolynomial(tuple(coeffs[1:]))


def _contract(n: int, edges: frozenset, u: int, v: int) -> tuple[int, frozenset]:
    # merge v into u, then shift labels above v down by one
    def relabel(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    out = set()
    for a, b in edges:
        if {a, b} == {u, v}:
            continue
        a, b = relabel(a), relabel(b)
        out.add((min(a, b), max(a, b)))
    return n - 1, frozenset(out)


@lru_cache(maxsize=1 << 16)
def _delcon(n: int, edges: frozenset) -> tuple[int, ...]:
    if not edges:
        return (0,) * (n - 1) + (1,)
    u, v = max(edges)
    deleted = _delcon(n, edges - {(u, v)})
    contracted = _delcon(*_contract(n, edges, u, v))
    out = list(deleted)
    for i, c in enumerate(contracted):
        out[i] -= c
    return tuple(out)


def chromatic_deletion_contraction(G: Hypergraph) -> IntPolynomial:
    """chi_G = chi_{G-e} - chi_{G/e}, recursing down to edgeless graphs.

    Parallel edges created by contraction are merged.
    """
    if not G.is_graph:
        raise HypergraphError("deletion-contraction is implemented for graphs only")
    edges = frozenset(tuple(bits(e)) for e in G.edges)
    return IntPolynomial(_delcon(G.n, edges))
