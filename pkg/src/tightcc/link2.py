"""Monochromatic-triangle abundance and per-vertex colour bookkeeping for
edge-colourings of complete graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from tightcc.colouring import EdgeColouring
from tightcc.errors import DegenerateInstance, PreconditionViolated


def quarter_threshold(n: int) -> int:
    """The preset abundance threshold floor((n+1)/4)."""
    return (n + 1) // 4


def colour_matrix(c: EdgeColouring) -> np.ndarray:
    """Symmetric n x n colour matrix with -1 on the diagonal."""
    if c.arity != 2:
        raise ValueError("operation needs an arity-2 colouring")
    m = np.full((c.n, c.n), -1, dtype=np.int64)
    for (u, v), col in c.items():
        m[u, v] = m[v, u] = col
    return m


def mono_triangle_count(c: EdgeColouring, e: Sequence[int]) -> int:
    u, v = e
    col = c.colour((u, v))
    return sum(
        1 for w in range(c.n)
        if w != u and w != v and c.colour((u, w)) == col and c.colour((v, w)) == col
    )


def mono_triangle_table(c: EdgeColouring) -> np.ndarray:
    """Matrix whose (u, v) entry counts monochromatic triangles on edge uv."""
    m = colour_matrix(c)
    out = np.zeros_like(m)
    for col in c.colours_used:
        a = (m == col).astype(np.int64)
        out += (a @ a) * a
    return out


@dataclass(frozen=True)
class AbundanceProfile:
    per_edge: dict
    minimum: int
    minimizer: tuple[int, int]
    colours_used: int

    def to_dict(self) -> dict:
        return {
            "minimum": self.minimum,
            "minimizer": list(self.minimizer),
            "colours_used": self.colours_used,
            "per_edge": [[u, v, k] for (u, v), k in self.per_edge.items()],
        }


def abundance_profile(c: EdgeColouring) -> AbundanceProfile:
    if c.n < 3:
        raise DegenerateInstance("abundance needs n >= 3")
    table = mono_triangle_table(c)
    per_edge = {(u, v): int(table[u, v]) for u, v in combinations(range(c.n), 2)}
    minimizer = min(per_edge, key=lambda p: (per_edge[p], p))
    return AbundanceProfile(per_edge, per_edge[minimizer], minimizer, len(c.colours_used))


@dataclass(frozen=True)
class VertexColourView:
    """Colours at ``vertex``, its colour neighbourhoods, and the surplus
    ``deg_i(v) - floor((n+1)/4)`` when exactly three colours meet ``vertex``."""

    vertex: int
    incident_colours: frozenset
    neighbourhoods: dict
    gamma: dict | None

    def degree(self, i: int) -> int:
        return len(self.neighbourhoods.get(i, ()))


def vertex_view(c: EdgeColouring, v: int) -> VertexColourView:
    if c.n < 2:
        raise DegenerateInstance("vertex view needs n >= 2")
    groups: dict[int, set] = {}
    for u in range(c.n):
        if u != v:
            groups.setdefault(c.colour((u, v)), set()).add(u)
    nbhd = {i: frozenset(s) for i, s in sorted(groups.items())}
    gamma = None
    if len(nbhd) == 3:
        q = quarter_threshold(c.n)
        gamma = {i: len(s) - q for i, s in nbhd.items()}
    return VertexColourView(v, frozenset(nbhd), nbhd, gamma)


def gamma_sum_expected(n: int) -> int:
    return n - 1 - 3 * quarter_threshold(n)


def check_A1(
    c: EdgeColouring, v: int, i: int, threshold: int | None = None
) -> tuple[bool, int | None]:
    """Every ``u`` in ``N_i(v)`` has at least ``threshold`` ``i``-neighbours
    inside ``N_i(v)``; otherwise returns a violating ``u``."""
    if threshold is None:
        threshold = quarter_threshold(c.n)
    nb = sorted(vertex_view(c, v).neighbourhoods.get(i, ()))
    if not nb:
        raise PreconditionViolated(f"colour {i} is not incident with vertex {v}")
    for u in nb:
        deg = sum(1 for w in nb if w != u and c.colour((u, w)) == i)
        if deg < threshold:
            return False, u
    return True, None


def transversal_mono_triangles(c: EdgeColouring, v: int, e: Sequence[int]) -> set[int]:
    """Vertices of the third colour neighbourhood of ``v`` closing a
    monochromatic triangle on ``e``, whose endpoints sit in the other two."""
    view = vertex_view(c, v)
    if len(view.incident_colours) != 3:
        raise PreconditionViolated(f"vertex {v} meets {len(view.incident_colours)} colours, need 3")
    x, y = e
    if v in (x, y) or x == y:
        raise PreconditionViolated("edge must avoid the pivot vertex")
    cx, cy = c.colour((v, x)), c.colour((v, y))
    if cx == cy:
        raise PreconditionViolated("edge endpoints lie in the same colour neighbourhood")
    col = c.colour((x, y))
    if col in view.incident_colours:
        raise PreconditionViolated(f"edge colour {col} is incident with the pivot")
    (third,) = view.incident_colours - {cx, cy}
    return {
        w for w in view.neighbourhoods[third]
        if c.colour((x, w)) == col and c.colour((y, w)) == col
    }


def colour_profile_partition(c: EdgeColouring) -> dict[frozenset, list[int]]:
    groups: dict[frozenset, list[int]] = {}
    for v in range(c.n):
        key = frozenset(c.colour((u, v)) for u in range(c.n) if u != v)
        groups.setdefault(key, []).append(v)
    return groups
