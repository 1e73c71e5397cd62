"""Total edge-colourings of complete 2- and 3-graphs and the translation
between 4-graphs and colourings of triples."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

from tightcc.errors import DegenerateInstance, InputError, UncoveredTriple
from tightcc.hypercore import Hypergraph, _is_int, colex_rank, tight_components


def tuples_lex(n: int, arity: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), arity))


class EdgeColouring:
    """Colour assignment on every ascending ``arity``-tuple over ``0..n-1``.

    Colours live in a flat list indexed by colex rank. Instances are treated
    as immutable.
    """

    __slots__ = ("n", "arity", "_colours", "_used")

    def __init__(self, n: int, arity: int, colours: Sequence[int]) -> None:
        if arity not in (2, 3):
            raise ValueError("arity must be 2 or 3")
        if len(colours) != comb(n, arity):
            raise ValueError(f"expected {comb(n, arity)} colours, got {len(colours)}")
        self.n = n
        self.arity = arity
        self._colours = tuple(int(c) for c in colours)
        self._used = tuple(sorted(set(self._colours)))

    # construction -----------------------------------------------------

    @classmethod
    def from_function(cls, n: int, arity: int, f) -> "EdgeColouring":
        cols = [0] * comb(n, arity)
        for t in combinations(range(n), arity):
            cols[colex_rank(t)] = f(t)
        return cls(n, arity, cols)

    @classmethod
    def from_mapping(cls, n: int, arity: int, mapping: Mapping) -> "EdgeColouring":
        cols: list[int | None] = [None] * comb(n, arity)
        for t, c in mapping.items():
            cols[colex_rank(tuple(sorted(t)))] = c
        if any(c is None for c in cols):
            missing = next(t for t in combinations(range(n), arity) if cols[colex_rank(t)] is None)
            raise ValueError(f"colouring is not total: {list(missing)} uncoloured")
        return cls(n, arity, cols)  # type: ignore[arg-type]

    @classmethod
    def monochromatic(cls, n: int, arity: int = 3, colour: int = 0) -> "EdgeColouring":
        return cls(n, arity, [colour] * comb(n, arity))

    @classmethod
    def rainbow(cls, n: int, arity: int = 3) -> "EdgeColouring":
        return cls(n, arity, range(comb(n, arity)))

    # access -----------------------------------------------------------

    @property
    def colours_used(self) -> tuple[int, ...]:
        return self._used

    @property
    def flat(self) -> tuple[int, ...]:
        """Colours indexed by colex rank."""
        return self._colours

    def colour(self, t: Sequence[int]) -> int:
        return self._colours[colex_rank(tuple(sorted(t)))]

    __getitem__ = colour

    def items(self) -> Iterable[tuple[tuple[int, ...], int]]:
        """``(tuple, colour)`` pairs in lexicographic tuple order."""
        for t in combinations(range(self.n), self.arity):
            yield t, self._colours[colex_rank(t)]

    def lex_colours(self) -> list[int]:
        return [c for _, c in self.items()]

    def recolour(self, mapping: Mapping[int, int]) -> "EdgeColouring":
        return EdgeColouring(self.n, self.arity, [mapping.get(c, c) for c in self._colours])

    def relabel_vertices(self, perm: Sequence[int]) -> "EdgeColouring":
        """Colouring whose tuple ``perm(t)`` carries the colour of ``t``."""
        cols = [0] * len(self._colours)
        for t, c in self.items():
            cols[colex_rank(tuple(sorted(perm[v] for v in t)))] = c
        return EdgeColouring(self.n, self.arity, cols)

    def canonical_colours(self) -> "EdgeColouring":
        """Colours renumbered 0,1,... by first occurrence in lexicographic order."""
        mapping: dict[int, int] = {}
        for _, c in self.items():
            mapping.setdefault(c, len(mapping))
        return self.recolour(mapping)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColouring):
            return NotImplemented
        return (self.n, self.arity, self._colours) == (other.n, other.arity, other._colours)

    def __hash__(self) -> int:
        return hash((self.n, self.arity, self._colours))

    def __repr__(self) -> str:
        return f"EdgeColouring(n={self.n}, arity={self.arity}, colours={len(self._used)})"

    # serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "arity": self.arity,
            "colours": [list(t) + [c] for t, c in self.items()],
        }

    @classmethod
    def from_dict(cls, doc) -> "EdgeColouring":
        if not isinstance(doc, dict):
            raise InputError("BAD_DOCUMENT", "colouring document must be a JSON object")
        for key in ("n", "arity", "colours"):
            if key not in doc:
                raise InputError("MISSING_FIELD", f"missing field {key!r}", key)
        n, arity, rows = doc["n"], doc["arity"], doc["colours"]
        if not _is_int(n) or n < 0:
            raise InputError("BAD_FIELD", "n must be a non-negative integer", "n")
        if arity not in (2, 3) or not _is_int(arity):
            raise InputError("BAD_FIELD", "arity must be 2 or 3", "arity")
        if not isinstance(rows, list):
            raise InputError("BAD_FIELD", "colours must be a list", "colours")
        cols: list[int | None] = [None] * comb(n, arity)
        first_row: dict[int, int] = {}
        for i, row in enumerate(rows):
            pos = f"colours[{i}]"
            if not isinstance(row, list) or len(row) != arity + 1:
                raise InputError("BAD_ROW", f"row must be {arity} vertices followed by a colour", pos)
            t, c = row[:arity], row[arity]
            for j, v in enumerate(t):
                if not _is_int(v):
                    raise InputError("BAD_VERTEX", "vertex must be an integer", f"{pos}[{j}]")
                if not 0 <= v < n:
                    raise InputError("VERTEX_OUT_OF_RANGE", f"vertex {v} outside 0..{n - 1}", f"{pos}[{j}]")
            for j in range(1, arity):
                if t[j] in t[:j]:
                    raise InputError("DUPLICATE_VERTEX", f"vertex {t[j]} repeated in {t}", f"{pos}[{j}]")
            for j in range(1, arity):
                if t[j] < t[j - 1]:
                    raise InputError("NOT_ASCENDING", f"tuple {t} is not strictly ascending", f"{pos}[{j}]")
            if not _is_int(c) or c < 0:
                raise InputError("BAD_COLOUR", "colour must be a non-negative integer", f"{pos}[{arity}]")
            r = colex_rank(t)
            if cols[r] is not None:
                raise InputError("DUPLICATE_TUPLE", f"tuple {t} duplicates colours[{first_row[r]}]", pos)
            cols[r] = c
            first_row[r] = i
        for t in combinations(range(n), arity):
            if cols[colex_rank(t)] is None:
                raise InputError("NOT_TOTAL", f"tuple {list(t)} has no colour", "colours")
        return cls(n, arity, cols)  # type: ignore[arg-type]


def load_colouring(doc) -> EdgeColouring:
    return EdgeColouring.from_dict(doc)


# ---------------------------------------------------------------------------
# colour classes and induced colourings


def colour_class(c: EdgeColouring, i: int) -> Hypergraph:
    return Hypergraph(c.n, c.arity, (t for t, col in c.items() if col == i))


def covered_by_colour(c: EdgeColouring) -> dict[int, set[int]]:
    cover: dict[int, set[int]] = {col: set() for col in c.colours_used}
    for t, col in c.items():
        cover[col].update(t)
    return cover


def spanning_colours(c: EdgeColouring) -> set[int]:
    return {col for col, vs in covered_by_colour(c).items() if len(vs) == c.n}


def class_sizes(c: EdgeColouring) -> dict[int, int]:
    sizes: dict[int, int] = {}
    for col in c.flat:
        sizes[col] = sizes.get(col, 0) + 1
    return sizes


def induced_subcolouring(c: EdgeColouring, s: Iterable[int]) -> EdgeColouring:
    verts = sorted(set(s))
    if len(verts) < c.arity:
        raise DegenerateInstance(f"induced subcolouring needs at least {c.arity} vertices")
    return EdgeColouring.from_function(
        len(verts), c.arity, lambda t: c.colour(tuple(verts[i] for i in t))
    )


def coloured_link(c: EdgeColouring, v: int) -> EdgeColouring:
    """Pairs of ``V - {v}`` (re-indexed ascending) coloured by ``c(pair + v)``."""
    if c.arity != 3:
        raise ValueError("coloured link needs an arity-3 colouring")
    if c.n < 3:
        raise DegenerateInstance("coloured link needs n >= 3")
    rest = [u for u in range(c.n) if u != v]
    return EdgeColouring.from_function(
        c.n - 1, 2, lambda t: c.colour((rest[t[0]], rest[t[1]], v))
    )


# ---------------------------------------------------------------------------
# monochromatic and rainbow K4's


def _require_arity3(c: EdgeColouring) -> None:
    if c.arity != 3:
        raise ValueError("operation needs an arity-3 colouring")


def mono_extension_set(c: EdgeColouring, e: Sequence[int]) -> set[int]:
    """Vertices ``v`` outside ``e`` such that ``e + v`` spans a monochromatic K4."""
    _require_arity3(c)
    a, b, d = sorted(e)
    col = c.colour((a, b, d))
    out = set()
    for v in range(c.n):
        if v in (a, b, d):
            continue
        if c.colour((a, b, v)) == col and c.colour((a, d, v)) == col and c.colour((b, d, v)) == col:
            out.add(v)
    return out


def quad_colours(c: EdgeColouring, q: Sequence[int]) -> tuple[int, int, int, int]:
    a, b, d, e = q
    return (c.colour((a, b, d)), c.colour((a, b, e)), c.colour((a, d, e)), c.colour((b, d, e)))


def find_rainbow_k4(c: EdgeColouring) -> tuple[int, ...] | None:
    """Lexicographically smallest 4-set with four distinct colours, or None."""
    if c.n < 4:
        raise DegenerateInstance("rainbow K4 search needs n >= 4")
    if c.arity == 3:
        for q in combinations(range(c.n), 4):
            if len(set(quad_colours(c, q))) == 4:
                return q
        return None
    # arity 2: the six pairs of the 4-set pairwise distinct
    for q in combinations(range(c.n), 4):
        if len({c.colour(p) for p in combinations(q, 2)}) == 6:
            return q
    return None


def monochromatic_quadruples(c: EdgeColouring) -> list[tuple[int, ...]]:
    _require_arity3(c)
    return [q for q in combinations(range(c.n), 4) if len(set(quad_colours(c, q))) == 1]


def max_pair_colour_count(c: EdgeColouring) -> tuple[int, tuple[int, int]]:
    """Largest number of colours seen on triples through a common pair."""
    _require_arity3(c)
    if c.n < 3:
        raise DegenerateInstance("pair colour count needs n >= 3")
    best, witness = -1, (0, 1)
    for u, v in combinations(range(c.n), 2):
        cnt = len({c.colour((u, v, w)) for w in range(c.n) if w != u and w != v})
        if cnt > best:
            best, witness = cnt, (u, v)
    return best, witness


# ---------------------------------------------------------------------------
# colour merging


def incident_colours(c: EdgeColouring) -> list[set[int]]:
    inc: list[set[int]] = [set() for _ in range(c.n)]
    for t, col in c.items():
        for v in t:
            inc[v].add(col)
    return inc


def merge_colours_normalize(c: EdgeColouring) -> tuple[EdgeColouring, list[dict]]:
    """Merge colour classes until every vertex misses at most one used colour.

    While some vertex ``v`` avoids two used colours ``i < i'``, the class of
    ``i'`` is recoloured ``i``; the smallest ``(v, i, i')`` is taken each step.
    """
    log: list[dict] = []
    cur = c
    while True:
        used = cur.colours_used
        inc = incident_colours(cur)
        step = None
        for v in range(cur.n):
            missing = [col for col in used if col not in inc[v]]
            if len(missing) >= 2:
                step = (v, missing[0], missing[1])
                break
        if step is None:
            return cur, log
        v, i, j = step
        log.append({"vertex": v, "into": i, "merged": j})
        cur = cur.recolour({j: i})


def satisfies_merge_property(c: EdgeColouring) -> bool:
    used = set(c.colours_used)
    return all(len(used - inc) <= 1 for inc in incident_colours(c))


# ---------------------------------------------------------------------------
# 4-graph <-> colouring of triples


def to_colouring(h: Hypergraph) -> EdgeColouring:
    """Colour each triple by the tight component of ``h`` containing it."""
    if h.k != 4:
        raise ValueError("to_colouring needs a 4-graph")
    part = tight_components(h)
    cols: list[int | None] = [None] * comb(h.n, 3)
    for e, comp in part.component_of.items():
        for i in range(4):
            f = e[:i] + e[i + 1:]
            cols[colex_rank(f)] = comp
    for t in combinations(range(h.n), 3):
        if cols[colex_rank(t)] is None:
            raise UncoveredTriple(t)
    return EdgeColouring(h.n, 3, cols)  # type: ignore[arg-type]


def to_hypergraph(c: EdgeColouring) -> Hypergraph:
    """The 4-graph of monochromatic quadruples."""
    _require_arity3(c)
    if c.n < 4:
        raise DegenerateInstance("to_hypergraph needs n >= 4")
    return Hypergraph(c.n, 4, monochromatic_quadruples(c))


# ---------------------------------------------------------------------------
# pair statistics


def colour_pair_stats(c: EdgeColouring) -> dict[int, tuple[int, int]]:
    """Per colour: (#pairs in >= 2 edges of it, #quadruples with >= 2 edges of it)."""
    _require_arity3(c)
    phi = {col: 0 for col in c.colours_used}
    big_phi = {col: 0 for col in c.colours_used}
    for u, v in combinations(range(c.n), 2):
        counts: dict[int, int] = {}
        for w in range(c.n):
            if w != u and w != v:
                col = c.colour((u, v, w))
                counts[col] = counts.get(col, 0) + 1
        for col, k in counts.items():
            if k >= 2:
                phi[col] += 1
    for q in combinations(range(c.n), 4):
        counts = {}
        for col in quad_colours(c, q):
            counts[col] = counts.get(col, 0) + 1
        for col, k in counts.items():
            if k >= 2:
                big_phi[col] += 1
    return {col: (phi[col], big_phi[col]) for col in c.colours_used}


def check_pair_uniqueness(c: EdgeColouring) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Scan for triples ``e, e'`` sharing two vertices with a common
    monochromatic extension but different colours. Returns a violating pair."""
    _require_arity3(c)
    ext = {t: mono_extension_set(c, t) for t in combinations(range(c.n), 3)}
    for e in ext:
        for f in ext:
            if f <= e or len(set(e) & set(f)) != 2:
                continue
            if ext[e] & ext[f] and c.colour(e) != c.colour(f):
                return e, f
    return None


__all__ = [
    "EdgeColouring",
    "check_pair_uniqueness",
    "class_sizes",
    "colour_class",
    "colour_pair_stats",
    "coloured_link",
    "covered_by_colour",
    "find_rainbow_k4",
    "incident_colours",
    "induced_subcolouring",
    "load_colouring",
    "max_pair_colour_count",
    "merge_colours_normalize",
    "mono_extension_set",
    "monochromatic_quadruples",
    "satisfies_merge_property",
    "spanning_colours",
    "to_colouring",
    "to_hypergraph",
]
