"""Explicit objects: the extremal 4-graphs H and H', the unique 5- and
6-configurations, and the 6-colour abundant colourings of K_{32m+7}."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product

from tightcc.colouring import (
    EdgeColouring,
    class_sizes,
    covered_by_colour,
    max_pair_colour_count,
    monochromatic_quadruples,
)
from tightcc.errors import DegenerateInstance
from tightcc.hypercore import Hypergraph, has_spanning_component, min_codegree


class VerificationFailed(AssertionError):
    pass


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise VerificationFailed(message)


# ---------------------------------------------------------------------------
# H and H'


@dataclass(frozen=True)
class PartLabelled4Graph:
    hypergraph: Hypergraph
    part_of: tuple[int, ...]  # vertex -> part label in 1..4

    @property
    def n(self) -> int:
        return self.hypergraph.n

    def part(self, i: int) -> list[int]:
        return [v for v, p in enumerate(self.part_of) if p == i]

    def part_sizes(self) -> tuple[int, ...]:
        return tuple(self.part_of.count(i) for i in range(1, 5))


def balanced_parts(n: int) -> tuple[int, ...]:
    """Contiguous labels 1..4 with ascending sizes; larger parts take higher labels."""
    q, r = divmod(n, 4)
    sizes = [q + (1 if i >= 4 - r else 0) for i in range(4)]
    labels: list[int] = []
    for i, s in enumerate(sizes):
        labels.extend([i + 1] * s)
    return tuple(labels)


def _h_label_type(labels: tuple[int, ...]) -> bool:
    return sum(labels) % 4 == 1


def _hprime_extra_type(labels: tuple[int, ...]) -> bool:
    # labels i, i, i+1, i+1 (mod 4) in some order
    for i in range(1, 5):
        j = i % 4 + 1
        if sorted(labels) == sorted((i, i, j, j)):
            return True
    return False


def _build(n: int, accept) -> PartLabelled4Graph:
    if n < 8:
        raise DegenerateInstance(f"construction needs n >= 8 (got {n})")
    part_of = balanced_parts(n)
    parts = {i: [v for v in range(n) if part_of[v] == i] for i in range(1, 5)}
    edges = []
    for labels in combinations_with_replacement(range(1, 5), 4):
        if not accept(labels):
            continue
        mult = {i: labels.count(i) for i in set(labels)}
        pools = [list(combinations(parts[i], k)) for i, k in sorted(mult.items())]
        for pick in product(*pools):
            edges.append(tuple(sorted(v for grp in pick for v in grp)))
    return PartLabelled4Graph(Hypergraph._trusted(n, 4, edges), part_of)


def gen_H(n: int) -> PartLabelled4Graph:
    """abcd is an edge iff the part labels sum to 1 mod 4."""
    return _build(n, _h_label_type)


def gen_Hprime(n: int, verify: bool = True) -> PartLabelled4Graph:
    g = _build(n, lambda t: _h_label_type(t) or _hprime_extra_type(t))
    if verify:
        verify_Hprime(g)
    return g


def v1_v3_v4_triple(g: PartLabelled4Graph) -> tuple[int, int, int]:
    return (g.part(1)[0], g.part(3)[0], g.part(4)[0])


def verify_Hprime(g: PartLabelled4Graph) -> dict:
    h = g.hypergraph
    value, witness = min_codegree(h)
    target = h.n // 4 - 1
    _expect(value == target, f"min codegree {value} != {target}")
    t = v1_v3_v4_triple(g)
    cod = sum(1 for d in range(h.n) if d not in t and tuple(sorted(t + (d,))) in h.edge_set)
    _expect(cod == target, f"V1xV3xV4 triple {t} has codegree {cod} != {target}")
    spanning, _ = has_spanning_component(h)
    _expect(not spanning, "H' has a spanning tight component")
    return {"min_codegree": value, "witness": list(witness), "v1v3v4_triple": list(t), "spanning": spanning}


# ---------------------------------------------------------------------------
# configurations


def gen_config5(verify: bool = True) -> EdgeColouring:
    """Colour i, the one vertex i misses, is the tight path
    {i-1, i+1, i+2}, {i+1, i+2, i+3} (indices mod 5)."""
    mapping = {}
    for i in range(5):
        for t in ((i + 1, i + 2, i + 3), (i - 1, i + 1, i + 2)):
            mapping[tuple(sorted(v % 5 for v in t))] = i
    c = EdgeColouring.from_mapping(5, 3, mapping)
    if verify:
        from tightcc.configsearch import is_r_configuration

        ok, why = is_r_configuration(c)
        _expect(ok, f"config5 is not a 5-configuration: {why}")
        _expect(sorted(class_sizes(c).values()) == [2] * 5, "config5 class sizes are not all 2")
    return c


CENTRE = 5


def gen_config6(verify: bool = True) -> EdgeColouring:
    """Outer vertices 0..4 on a pentagon, centre 5. Colour 5 is the tight
    5-cycle of consecutive outer triples; colour i < 5 is the rotation of
    {1,3,4}, {1,3,5}, {1,2,5} by i."""
    mapping = {}
    for a in range(5):
        mapping[tuple(sorted((a, (a + 1) % 5, (a + 2) % 5)))] = CENTRE
    for i in range(5):
        for t in (
            ((i + 1) % 5, (i + 3) % 5, (i + 4) % 5),
            ((i + 1) % 5, (i + 3) % 5, CENTRE),
            ((i + 1) % 5, (i + 2) % 5, CENTRE),
        ):
            mapping[tuple(sorted(t))] = i
    c = EdgeColouring.from_mapping(6, 3, mapping)
    if verify:
        from tightcc.configsearch import is_r_configuration

        ok, why = is_r_configuration(c)
        _expect(ok, f"config6 is not a 6-configuration: {why}")
        _expect(sorted(class_sizes(c).values()) == [3, 3, 3, 3, 3, 5], "config6 class sizes wrong")
        _expect(max_pair_colour_count(c)[0] == 3, "config6 has a pair in 4 colours")
        _expect(not monochromatic_quadruples(c), "config6 has a monochromatic K4")
        _expect(all(len(vs) == 5 for vs in covered_by_colour(c).values()), "a config6 colour spans != 5 vertices")
    return c


# ---------------------------------------------------------------------------
# abundant colourings of K_{32m+7}

RED, BLUE, BLACK, YELLOW, GREEN, CYAN = range(6)
COLOUR_NAMES = ("red", "blue", "black", "yellow", "green", "cyan")

# Cluster 0 is the large one (8m+1 vertices); clusters 1..6 have 4m+1.
# Diagonal entries are (near colour, far colour) of the intra-cluster circulants.
CLUSTER_TABLE = (
    ((RED, BLUE), BLUE, BLUE, RED, RED, RED, RED),
    (BLUE, (BLACK, YELLOW), BLUE, BLACK, YELLOW, BLACK, YELLOW),
    (BLUE, BLUE, (CYAN, GREEN), GREEN, GREEN, CYAN, CYAN),
    (RED, BLACK, GREEN, (GREEN, BLACK), GREEN, BLACK, RED),
    (RED, YELLOW, GREEN, GREEN, (GREEN, YELLOW), RED, YELLOW),
    (RED, BLACK, CYAN, BLACK, RED, (CYAN, BLACK), CYAN),
    (RED, YELLOW, CYAN, RED, YELLOW, CYAN, (YELLOW, CYAN)),
)

INTRA_SCHEMES = ("circulant", "swapped", "alternating")


def cluster_sizes(m: int) -> tuple[int, ...]:
    return (8 * m + 1,) + (4 * m + 1,) * 6


def _intra_colour(dist: int, half: int, pair: tuple[int, int], scheme: str) -> int:
    near, far = pair
    if scheme == "circulant":
        return near if dist <= half else far
    if scheme == "swapped":
        return far if dist <= half else near
    # alternating: odd distances near, even far; balanced only when half is even
    if half % 2 == 1:
        return near if dist <= half else far
    return near if dist % 2 == 1 else far


def gen_abundant(m: int, scheme: str = "circulant", verify: bool = True) -> EdgeColouring:
    """The 6-colour colouring of K_{32m+7} on seven clusters.

    Each cluster's two intra colours are circulant graphs of equal degree;
    ``scheme`` chooses which circulant distances get which colour.
    """
    if m < 1:
        raise DegenerateInstance(f"abundant construction needs m >= 1 (got {m})")
    if scheme not in INTRA_SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    sizes = cluster_sizes(m)
    cluster: list[int] = []
    offset: list[int] = []
    for i, s in enumerate(sizes):
        cluster.extend([i] * s)
        offset.extend(range(s))
    n = len(cluster)

    def colour(t):
        u, v = t
        a, b = cluster[u], cluster[v]
        if a != b:
            return CLUSTER_TABLE[a][b]
        size = sizes[a]
        d = abs(offset[u] - offset[v])
        d = min(d, size - d)
        return _intra_colour(d, (size - 1) // 4, CLUSTER_TABLE[a][a], scheme)

    c = EdgeColouring.from_function(n, 2, colour)
    if verify:
        verify_abundant(c, m)
    return c


def abundant_cluster_of(m: int) -> list[int]:
    out: list[int] = []
    for i, s in enumerate(cluster_sizes(m)):
        out.extend([i] * s)
    return out


def verify_abundant(c: EdgeColouring, m: int) -> dict:
    from tightcc.link2 import abundance_profile

    _expect(c.n == 32 * m + 7, f"n={c.n} != 32m+7")
    _expect(len(c.colours_used) == 6, f"{len(c.colours_used)} colours used, expected 6")
    prof = abundance_profile(c)
    _expect(prof.minimum == 8 * m + 1, f"minimum abundance {prof.minimum} != {8 * m + 1}")
    return {"colours_used": 6, "minimum": prof.minimum, "minimizer": list(prof.minimizer)}


def _table_is_symmetric() -> bool:
    return all(CLUSTER_TABLE[a][b] == CLUSTER_TABLE[b][a] for a in range(7) for b in range(7) if a != b)


assert _table_is_symmetric()
