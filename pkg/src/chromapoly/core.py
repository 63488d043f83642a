"""Hypergraph data model, connectivity, set partitions and exact polynomial types.

Vertices are ``0..n-1`` and edges are stored as vertex bitmasks.  Edge subsets
and vertex subsets are plain Python ints used as bitmasks, which caps the
supported instances at 64 vertices and 64 edges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

MAX_VERTICES = 64
MAX_EDGES = 64

#: Default cap on the number of edge subsets any exhaustive routine may touch.
DEFAULT_MAX_SUBSETS = 1 << 22

# Width of the low-bit block materialised at once when tabulating k(F).
_BLOCK_BITS = 16

BigRational = Fraction


class HypergraphError(ValueError):
    """Invalid hypergraph construction or an argument that does not belong to it."""


class SizeGuardError(RuntimeError):
    """Raised when an exhaustive computation would exceed its configured size cap."""


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for x in items:
        m |= 1 << x
    return m


@dataclass(frozen=True)
class Hypergraph:
    """A finite loopless hypergraph on vertices ``0..n-1``.

    ``edges`` holds vertex bitmasks in a fixed order; that order is the
    default linear ordering of the edge set.
    """

    n: int
    edges: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise HypergraphError("a hypergraph needs at least one vertex")
        if self.n > MAX_VERTICES:
            raise HypergraphError(f"at most {MAX_VERTICES} vertices are supported")
        if len(self.edges) > MAX_EDGES:
            raise HypergraphError(f"at most {MAX_EDGES} edges are supported")
        full = (1 << self.n) - 1
        seen = set()
        for e in self.edges:
            if e & ~full or e < 0:
                raise HypergraphError(f"edge {sorted(bits(e))} uses a vertex outside 0..{self.n - 1}")
            if popcount(e) < 2:
                raise HypergraphError(f"edge {sorted(bits(e))} has cardinality < 2")
            if e in seen:
                raise HypergraphError(f"duplicate edge {sorted(bits(e))}")
            seen.add(e)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build from an iterable of vertex collections, e.g. ``[(0, 1), (1, 2)]``."""
        masks = []
        for e in edges:
            verts = list(e)
            if len(set(verts)) != len(verts):
                raise HypergraphError(f"edge {verts} repeats a vertex")
            if any(v < 0 or v >= n for v in verts):
                raise HypergraphError(f"edge {verts} uses a vertex outside 0..{n - 1}")
            masks.append(mask_of(verts))
        return cls(n, tuple(masks))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def full_edge_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def is_graph(self) -> bool:
        return all(popcount(e) == 2 for e in self.edges)

    def edge_vertices(self, idx: int) -> list[int]:
        return bits(self.edges[idx])

    def edge_lists(self) -> list[list[int]]:
        return [bits(e) for e in self.edges]

    def edge_index(self, edge: int | Iterable[int]) -> int:
        """Index of an edge given either as an index or as a vertex collection."""
        if isinstance(edge, int):
            if not 0 <= edge < self.m:
                raise HypergraphError(f"no edge with index {edge}")
            return edge
        mask = mask_of(edge)
        try:
            return self.edges.index(mask)
        except ValueError:
            raise HypergraphError(f"{sorted(edge)} is not an edge") from None

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={self.edge_lists()})"


@dataclass(frozen=True)
class InducedSubgraph:
    """``H[W]`` relabelled to ``0..|W|-1``.

    ``vertex_map[i]`` is the ambient vertex of local vertex ``i`` and
    ``edge_map[j]`` the ambient index of local edge ``j``.
    """

    graph: Hypergraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]


def components(H: Hypergraph, F: int = 0) -> int:
    """k(F): number of connected components of the spanning subgraph (V, F)."""
    if F >> H.m:
        raise HypergraphError("edge subset refers to edges not in the hypergraph")
    ds = DisjointSet(range(H.n))
    for j in bits(F):
        vs = bits(H.edges[j])
        for v in vs[1:]:
            ds.merge(vs[0], v)
    return ds.n_subsets


def span_components(H: Hypergraph, F: int) -> int:
    """Number of components of H<F>, the subgraph whose vertex set is the union of F."""
    cover = 0
    for j in bits(F):
        cover |= H.edges[j]
    return components(H, F) - (H.n - popcount(cover))


def edge_cover(H: Hypergraph, F: int) -> int:
    cover = 0
    for j in bits(F):
        cover |= H.edges[j]
    return cover


def induced_subgraph(H: Hypergraph, W: int) -> InducedSubgraph:
    """The subgraph spanned by vertex subset ``W`` (bitmask)."""
    if W == 0:
        raise HypergraphError("induced subgraph needs a non-empty vertex set")
    if W & ~H.full_vertex_mask:
        raise HypergraphError("vertex subset outside the hypergraph")
    verts = bits(W)
    local = {v: i for i, v in enumerate(verts)}
    new_edges = []
    emap = []
    for j, e in enumerate(H.edges):
        if e & ~W == 0:
            new_edges.append(mask_of(local[v] for v in bits(e)))
            emap.append(j)
    return InducedSubgraph(Hypergraph(len(verts), tuple(new_edges)), tuple(verts), tuple(emap))


def edges_within(H: Hypergraph, W: int) -> int:
    """Edge-subset mask of the edges of ``H`` contained in vertex set ``W``."""
    out = 0
    for j, e in enumerate(H.edges):
        if e & ~W == 0:
            out |= 1 << j
    return out


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

def set_partitions(ground: int, j: int) -> Iterator[tuple[int, ...]]:
    """All partitions of vertex set ``ground`` into exactly ``j`` non-empty blocks.

    Enumerated via restricted-growth strings, so blocks come out ordered by
    their smallest element and each partition appears once.
    """
    elems = bits(ground)
    size = len(elems)
    if j < 1 or j > size:
        return
    blocks = [0] * j

    def rec(pos: int, used: int):
        if size - pos < j - used:
            return
        if pos == size:
            yield tuple(blocks)
            return
        bit = 1 << elems[pos]
        for b in range(used):
            blocks[b] |= bit
            yield from rec(pos + 1, used)
            blocks[b] ^= bit
        if used < j:
            blocks[used] = bit
            yield from rec(pos + 1, used + 1)
            blocks[used] = 0

    yield from rec(0, 0)


def partitions_meeting_edge(H: Hypergraph, e, j: int, t: int, ground: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of V (or ``ground``) into ``j`` blocks of which exactly ``t`` meet edge ``e``.

    ``e`` is an edge index or a vertex collection.
    """
    emask = H.edges[H.edge_index(e)]
    if ground is None:
        ground = H.full_vertex_mask
    if t < 1 or t > min(j, popcount(emask & ground)):
        return
    for blocks in set_partitions(ground, j):
        if sum(1 for b in blocks if b & emask) == t:
            yield blocks


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind (used for enumeration sanity checks)."""
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for jj in range(1, min(i, k) + 1):
            new[jj] = jj * row[jj] + row[jj - 1]
        row = new
    return row[k]


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Chromatic-style polynomial ``sum_i coeffs[i-1] * x**i`` with no constant term."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """1-based coefficient access: ``p[i]`` is the coefficient of x**i."""
        if i < 1 or i > len(self.coeffs):
            return 0
        return self.coeffs[i - 1]

    def __call__(self, x):
        return poly_eval(self, x)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (self.degree + other.degree)
        for i, a in enumerate(self.coeffs, 1):
            if a:
                for j, b in enumerate(other.coeffs, 1):
                    out[i + j - 1] += a * b
        return IntPolynomial(tuple(out))

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def poly_eval(p: IntPolynomial, x) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = (acc + c) * x
    return acc


def falling_factorial_coeffs(k: int) -> list[int]:
    """Coefficients of x(x-1)...(x-k+1) as a list indexed by power (0..k)."""
    coeffs = [1]
    for i in range(k):
        nxt = [0] * (len(coeffs) + 1)
        for p, c in enumerate(coeffs):
            nxt[p + 1] += c
            nxt[p] -= i * c
        coeffs = nxt
    return coeffs


# ---------------------------------------------------------------------------
# exhaustive edge-subset tables
# ---------------------------------------------------------------------------

def check_subset_budget(H: Hypergraph, max_subsets: int | None) -> None:
    limit = DEFAULT_MAX_SUBSETS if max_subsets is None else max_subsets
    if (1 << H.m) > limit:
        raise SizeGuardError(f"2^{H.m} edge subsets exceeds the cap of {limit}")


def _merge_labels(labels: np.ndarray, verts: Sequence[int]) -> np.ndarray:
    # labels[:, v] is the smallest vertex of v's component
    touched = [labels[:, v] for v in verts]
    low = touched[0]
    for t in touched[1:]:
        low = np.minimum(low, t)
    hit = labels == touched[0][:, None]
    for t in touched[1:]:
        hit |= labels == t[:, None]
    return np.where(hit, low[:, None], labels)


def _label_table(H: Hypergraph, nbits: int) -> np.ndarray:
    """Component labels for every subset of the first ``nbits`` edges."""
    dtype = np.uint8 if H.n <= 255 else np.uint16
    labels = np.arange(H.n, dtype=dtype)[None, :]
    for j in range(nbits):
        labels = np.concatenate([labels, _merge_labels(labels, bits(H.edges[j]))])
    return labels


def component_table(H: Hypergraph, max_subsets: int | None = None) -> np.ndarray:
    """``k[F]`` for every edge subset ``F`` (indexed by its bitmask), as int8/int16."""
    check_subset_budget(H, max_subsets)
    low_bits = min(H.m, _BLOCK_BITS)
    low = _label_table(H, low_bits)
    ident = np.arange(H.n, dtype=low.dtype)
    dtype = np.int8 if H.n < 128 else np.int16
    out = np.empty(1 << H.m, dtype=dtype)
    block = 1 << low_bits
    for high in range(1 << (H.m - low_bits)):
        labels = low
        for j in bits(high):
            labels = _merge_labels(labels, bits(H.edges[low_bits + j]))
        out[high * block:(high + 1) * block] = (labels == ident).sum(axis=1)
    return out


def _doubling(m: int, start, step) -> np.ndarray:
    arr = np.asarray([start])
    for j in range(m):
        arr = np.concatenate([arr, step(arr, j)])
    return arr


def sign_table(m: int) -> np.ndarray:
    """(-1)^|F| for every subset of ``m`` edges."""
    return _doubling(m, 1, lambda a, j: -a).astype(np.int8)


def size_table(m: int) -> np.ndarray:
    return _doubling(m, 0, lambda a, j: a + 1).astype(np.int8)


def cover_table(H: Hypergraph) -> np.ndarray:
    """Union of the vertex masks of F, for every F."""
    edges = [np.uint64(e) for e in H.edges]
    return _doubling(H.m, np.uint64(0), lambda a, j: a | edges[j]).astype(np.uint64)


def subset_closure(flags: np.ndarray) -> np.ndarray:
    """``out[F]`` is True iff ``flags[A]`` holds for some ``A`` contained in ``F``."""
    out = flags.astype(bool).copy()
    size = out.shape[0]
    step = 1
    while step < size:
        view = out.reshape(-1, 2, step)
        view[:, 1, :] |= view[:, 0, :]
        step <<= 1
    return out


def coefficients_from_table(n: int, ks: np.ndarray, signs: np.ndarray, keep: np.ndarray | None = None) -> IntPolynomial:
    """Sum (-1)^|F| grouped by k(F), optionally restricted to ``keep``."""
    weights = signs.astype(np.int64)
    if keep is not None:
        weights = np.where(keep, weights, 0)
    coeffs = []
    for i in range(1, n + 1):
        coeffs.append(int(weights[ks == i].sum()))
    return IntPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Hypergraph:
    return Hypergraph.from_edges(n, combinations(range(n), 2))


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    """K_n^r: every r-subset of n vertices is an edge."""
    return Hypergraph.from_edges(n, combinations(range(n), r))


def path_graph(n: int) -> Hypergraph:
    return Hypergraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Hypergraph:
    return Hypergraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def empty_graph(n: int) -> Hypergraph:
    return Hypergraph(n, ())


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    return Hypergraph(a.n + b.n, a.edges + tuple(e << a.n for e in b.edges))


def random_graph(n: int, p: float, rng: random.Random) -> Hypergraph:
    edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
    return Hypergraph.from_edges(n, edges)


def random_hypergraph(n: int, max_edges: int, rng: random.Random, min_card: int = 2, max_card: int = 4) -> Hypergraph:
    """Up to ``max_edges`` distinct random edges with cardinality in [min_card, max_card]."""
    hi = min(max_card, n)
    if n < min_card:
        return Hypergraph(n, ())
    target = rng.randint(0, max_edges)
    seen: list[int] = []
    for _ in range(target * 4):
        if len(seen) == target:
            break
        card = rng.randint(min_card, hi)
        e = mask_of(rng.sample(range(n), card))
        if e not in seen:
            seen.append(e)
    return Hypergraph(n, tuple(seen))
