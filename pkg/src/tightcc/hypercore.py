"""k-uniform hypergraphs, minimum codegree and tight components."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from tightcc.errors import DegenerateInstance, InputError

MAX_K = 8


@dataclass(frozen=True)
class Hypergraph:
    """An immutable k-graph on vertices ``0..n-1``.

    Edges are ascending k-tuples kept in lexicographic order; ``edge_set``
    gives O(1) membership.
    """

    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]
    edge_set: frozenset = field(repr=False, compare=False)

    def __init__(self, n: int, k: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if not 2 <= k <= MAX_K:
            raise ValueError(f"uniformity k={k} outside 2..{MAX_K}")
        if n < 0:
            raise ValueError("n must be non-negative")
        canon = set()
        for e in edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != k or len(set(t)) != k:
                raise ValueError(f"edge {list(e)} is not a set of {k} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {list(e)} has a vertex outside 0..{n - 1}")
            canon.add(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "edge_set", frozenset(canon))

    @classmethod
    def _trusted(cls, n: int, k: int, edges: Sequence[tuple[int, ...]]) -> "Hypergraph":
        """Skip validation: ``edges`` are distinct ascending in-range k-tuples."""
        h = cls.__new__(cls)
        object.__setattr__(h, "n", n)
        object.__setattr__(h, "k", k)
        object.__setattr__(h, "edges", tuple(sorted(edges)))
        object.__setattr__(h, "edge_set", frozenset(h.edges))
        return h

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(-1, self.k)

    @classmethod
    def complete(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, combinations(range(n), k))

    def __contains__(self, e) -> bool:
        return tuple(sorted(e)) in self.edge_set

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self.edge_set) == (other.n, other.k, other.edge_set)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.edge_set))

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex map ``v -> perm[v]``."""
        return Hypergraph(self.n, self.k, (tuple(perm[v] for v in e) for e in self.edges))

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Hypergraph":
        return Hypergraph(self.n, self.k, list(self.edges) + [tuple(e) for e in extra])

    def covered_vertices(self) -> frozenset:
        return frozenset(v for e in self.edges for v in e)

    def is_spanning(self) -> bool:
        return len(self.covered_vertices()) == self.n

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, doc) -> "Hypergraph":
        """Validate a ``{"n", "k", "edges"}`` document.

        Unlike the constructor, the loader insists on strictly ascending
        edges and no duplicates, and reports the offending position.
        """
        if not isinstance(doc, dict):
            raise InputError("BAD_DOCUMENT", "hypergraph document must be a JSON object")
        for key in ("n", "k", "edges"):
            if key not in doc:
                raise InputError("MISSING_FIELD", f"missing field {key!r}", key)
        n, k, edges = doc["n"], doc["k"], doc["edges"]
        if not _is_int(n) or n < 0:
            raise InputError("BAD_FIELD", "n must be a non-negative integer", "n")
        if not _is_int(k) or not 2 <= k <= MAX_K:
            raise InputError("BAD_FIELD", f"k must be an integer in 2..{MAX_K}", "k")
        if not isinstance(edges, list):
            raise InputError("BAD_FIELD", "edges must be a list", "edges")
        seen: dict[tuple, int] = {}
        for i, e in enumerate(edges):
            pos = f"edges[{i}]"
            if not isinstance(e, list) or len(e) != k:
                raise InputError("BAD_EDGE", f"edge must be a list of {k} integers", pos)
            for j, v in enumerate(e):
                if not _is_int(v):
                    raise InputError("BAD_VERTEX", "vertex must be an integer", f"{pos}[{j}]")
                if not 0 <= v < n:
                    raise InputError("VERTEX_OUT_OF_RANGE", f"vertex {v} outside 0..{n - 1}", f"{pos}[{j}]")
            for j in range(1, k):
                if e[j] == e[j - 1] or e[j] in e[:j - 1]:
                    raise InputError("DUPLICATE_VERTEX", f"vertex {e[j]} repeated in edge {e}", f"{pos}[{j}]")
            for j in range(1, k):
                if e[j] < e[j - 1]:
                    raise InputError("NOT_ASCENDING", f"edge {e} is not strictly ascending", f"{pos}[{j}]")
            t = tuple(e)
            if t in seen:
                raise InputError("DUPLICATE_EDGE", f"edge {e} duplicates edges[{seen[t]}]", pos)
            seen[t] = i
        return cls(n, k, seen)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class TightPartition:
    """Edge -> component labelling of a hypergraph.

    ``component_of[e]`` is a dense id; ids are assigned in order of the
    lexicographically first edge of each component.
    """

    n: int
    component_of: dict
    covered_vertices: tuple[frozenset, ...]
    spanning_component_ids: tuple[int, ...]

    @property
    def num_components(self) -> int:
        return len(self.covered_vertices)

    def components(self) -> list[list[tuple[int, ...]]]:
        out: list[list[tuple[int, ...]]] = [[] for _ in self.covered_vertices]
        for e, c in self.component_of.items():
            out[c].append(e)
        for edges in out:
            edges.sort()
        return out

    def to_dict(self) -> dict:
        return {
            "num_components": self.num_components,
            "components": [
                {"id": c, "edges": [list(e) for e in edges], "covered": sorted(self.covered_vertices[c])}
                for c, edges in enumerate(self.components())
            ],
            "spanning_component_ids": list(self.spanning_component_ids),
        }


def faces(e: Sequence[int]) -> list[tuple[int, ...]]:
    """The (k-1)-subsets of an ascending edge, each ascending."""
    return [tuple(e[:i]) + tuple(e[i + 1:]) for i in range(len(e))]


def face_ranks(h: Hypergraph) -> np.ndarray:
    """(m, k) array: colex rank of each face of each edge."""
    arr = h.edge_array
    out = np.zeros((len(arr), h.k), dtype=np.int64)
    for drop in range(h.k):
        cols = [c for c in range(h.k) if c != drop]
        for pos, c in enumerate(cols):
            out[:, drop] += _comb_vec(arr[:, c], pos + 1)
    return out


def tight_components(h: Hypergraph) -> TightPartition:
    """Edges sharing a (k-1)-face are merged; components are the connected
    components of the edge-face incidence graph."""
    m, k = len(h.edges), h.k
    if m == 0:
        return TightPartition(h.n, {}, (), ())
    fr = face_ranks(h)
    _, face_id = np.unique(fr.ravel(), return_inverse=True)
    nfaces = int(face_id.max()) + 1
    rows = np.repeat(np.arange(m), k)
    cols = m + face_id
    graph = coo_matrix((np.ones(m * k, dtype=np.int8), (rows, cols)), shape=(m + nfaces, m + nfaces))
    _, labels = connected_components(graph, directed=False)
    labels = labels[:m]
    # dense ids in order of each component's lexicographically first edge
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first, kind="stable")
    remap = np.empty(labels.max() + 1, dtype=np.int64)
    remap[np.unique(labels)[order]] = np.arange(len(order))
    comp = remap[labels]

    covered: list[frozenset] = []
    arr = h.edge_array
    sort_idx = np.argsort(comp, kind="stable")
    bounds = np.searchsorted(comp[sort_idx], np.arange(len(order) + 1))
    for c in range(len(order)):
        block = arr[sort_idx[bounds[c]:bounds[c + 1]]]
        covered.append(frozenset(np.unique(block).tolist()))
    component_of = dict(zip(h.edges, comp.tolist()))
    spanning = tuple(c for c, vs in enumerate(covered) if len(vs) == h.n)
    return TightPartition(h.n, component_of, tuple(covered), spanning)


def has_spanning_component(h: Hypergraph) -> tuple[bool, int | None]:
    """Whether some tight component covers every vertex; returns the smallest such id."""
    part = tight_components(h)
    if part.spanning_component_ids:
        return True, part.spanning_component_ids[0]
    return False, None


def _lex_rank_table(n: int, r: int) -> np.ndarray:
    """All r-subsets of ``range(n)`` in lexicographic order, as an array."""
    return np.array(list(combinations(range(n), r)), dtype=np.int64).reshape(-1, r)


def colex_rank(t: Sequence[int]) -> int:
    """Rank of an ascending tuple among tuples of the same size in colex order."""
    if len(t) == 3:
        a, b, c = t
        return a + b * (b - 1) // 2 + c * (c - 1) * (c - 2) // 6
    if len(t) == 2:
        a, b = t
        return a + b * (b - 1) // 2
    return sum(comb(v, i + 1) for i, v in enumerate(t))


def codegree_counts(h: Hypergraph) -> np.ndarray:
    """Codegree of every (k-1)-subset, indexed by colex rank."""
    k = h.k
    counts = np.zeros(comb(h.n, k - 1), dtype=np.int64)
    if not h.edges:
        return counts
    return np.bincount(face_ranks(h).ravel(), minlength=len(counts))


def _comb_vec(values: np.ndarray, r: int) -> np.ndarray:
    out = np.ones_like(values)
    for i in range(r):
        out = out * (values - i)
    return out // np.int64(np.prod(np.arange(1, r + 1)))


def min_codegree(h: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Minimum codegree and the lexicographically smallest (k-1)-set attaining it."""
    if h.n < h.k:
        raise DegenerateInstance(f"min codegree needs n >= k (n={h.n}, k={h.k})")
    counts = codegree_counts(h)
    value = int(counts.min())
    subsets = _lex_rank_table(h.n, h.k - 1)
    colex = np.zeros(len(subsets), dtype=np.int64)
    for pos in range(h.k - 1):
        colex += _comb_vec(subsets[:, pos], pos + 1)
    hits = np.flatnonzero(counts[colex] == value)
    return value, tuple(int(v) for v in subsets[hits[0]])
