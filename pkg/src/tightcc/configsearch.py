"""r-configurations: the definitional check, canonical forms, and an
isomorph-free exhaustive enumeration for r in {4, 5, 6}.

A colouring of K_r^(3) is an r-configuration when no colour spans all r
vertices (C1) while every proper vertex subset of size >= 3 induces a
colouring with a spanning colour (C2).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Sequence

import numpy as np

from tightcc.colouring import (
    EdgeColouring,
    class_sizes,
    max_pair_colour_count,
    monochromatic_quadruples,
)
from tightcc.errors import DegenerateInstance, UnsupportedSearch
from tightcc.hypercore import colex_rank

MAX_CANON_N = 8


# ---------------------------------------------------------------------------
# definitional check


def is_r_configuration(c: EdgeColouring) -> tuple[bool, dict | None]:
    """Check C1 and C2 directly. On failure the witness names the clause and
    either the spanning colour (C1) or a subset with no spanning colour (C2)."""
    r = c.n
    if c.arity != 3:
        raise ValueError("r-configurations are colourings of triples")
    if r < 3:
        raise DegenerateInstance("r-configurations need r >= 3")
    if r > 12:
        raise ValueError("r-configuration check supports r <= 12")
    witness = c1_witness(c)
    if witness is None:
        witness = c2_witness(c)
    return witness is None, witness


def _masks(c: EdgeColouring) -> tuple[list[int], list[int]]:
    triples = list(combinations(range(c.n), 3))
    tmask = [(1 << a) | (1 << b) | (1 << d) for a, b, d in triples]
    return tmask, [c.colour(t) for t in triples]


def c1_witness(c: EdgeColouring) -> dict | None:
    """A colour spanning every vertex, if any."""
    tmask, tcol = _masks(c)
    full = (1 << c.n) - 1
    cover: dict[int, int] = {}
    for m, col in zip(tmask, tcol):
        cover[col] = cover.get(col, 0) | m
    for col in sorted(cover):
        if cover[col] == full:
            return {"clause": "C1", "colour": col}
    return None


def c2_witness(c: EdgeColouring) -> dict | None:
    """A proper subset of size >= 3 with no spanning colour, if any; subsets
    are scanned by size, then lexicographically."""
    tmask, tcol = _masks(c)
    for size in range(3, c.n):
        for s in combinations(range(c.n), size):
            smask = sum(1 << v for v in s)
            local: dict[int, int] = {}
            for m, col in zip(tmask, tcol):
                if m & smask == m:
                    local[col] = local.get(col, 0) | m
            if smask not in local.values():
                return {"clause": "C2", "subset": list(s)}
    return None


# ---------------------------------------------------------------------------
# canonical forms


@lru_cache(maxsize=None)
def _perm_index(n: int, arity: int) -> np.ndarray:
    """(n!, T) array: for permutation p, lex index of p applied to each lex tuple."""
    tuples = list(combinations(range(n), arity))
    lex_of = {t: i for i, t in enumerate(tuples)}
    perms = list(permutations(range(n)))
    out = np.empty((len(perms), len(tuples)), dtype=np.int32)
    for pi, p in enumerate(perms):
        out[pi] = [lex_of[tuple(sorted(p[v] for v in t))] for t in tuples]
    return out


def _first_occurrence(rows: np.ndarray) -> np.ndarray:
    """Renumber each row's values 0, 1, ... in order of first appearance."""
    nrows, width = rows.shape
    ncol = int(rows.max()) + 1 if rows.size else 0
    first = np.full((nrows, ncol), width, dtype=np.int64)
    ridx = np.arange(nrows)
    for j in range(width - 1, -1, -1):
        first[ridx, rows[:, j]] = j
    rank = np.argsort(np.argsort(first, axis=1, kind="stable"), axis=1, kind="stable")
    return rank[ridx[:, None], rows]


def canonical_form(c: EdgeColouring, max_n: int = MAX_CANON_N) -> bytes:
    """Minimum over all vertex permutations of the lex-ordered colour sequence
    with colours renumbered by first occurrence."""
    return _canonical(c, max_n)[0]


def _canonical(c: EdgeColouring, max_n: int = MAX_CANON_N) -> tuple[bytes, list[int]]:
    if c.n > max_n:
        raise DegenerateInstance(f"canonical form supports n <= {max_n} (got {c.n})")
    lex = c.canonical_colours().lex_colours()
    if not lex:
        return bytes([c.n, c.arity]), []
    idx = _perm_index(c.n, c.arity)
    base = np.asarray(lex, dtype=np.int64)
    best = None
    chunk = 5040
    for start in range(0, len(idx), chunk):
        rows = _first_occurrence(base[idx[start:start + chunk]])
        order = np.lexsort(rows.T[::-1])
        cand = rows[order[0]]
        if best is None or tuple(cand) < tuple(best):
            best = cand
    seq = [int(x) for x in best]
    return bytes([c.n, c.arity] + seq), seq


def canonical_colouring(c: EdgeColouring) -> EdgeColouring:
    """The representative whose lex colour sequence is the canonical form."""
    _, seq = _canonical(c)
    tuples = combinations(range(c.n), c.arity)
    return EdgeColouring.from_mapping(c.n, c.arity, dict(zip(tuples, seq)))


# ---------------------------------------------------------------------------
# records and reports


@dataclass(frozen=True)
class ConfigurationRecord:
    colouring: EdgeColouring
    canonical_form: bytes
    class_sizes: tuple[int, ...]
    flags: dict

    @classmethod
    def from_colouring(cls, c: EdgeColouring) -> "ConfigurationRecord":
        rep = canonical_colouring(c)
        pair_max, _ = max_pair_colour_count(rep)
        flags = {
            "C1ok": c1_witness(rep) is None,
            "C2ok": c2_witness(rep) is None,
            "pairBoundOk": pair_max <= 3,
            "monoK4free": not monochromatic_quadruples(rep),
            "maxPairColours": pair_max,
        }
        return cls(rep, canonical_form(rep), tuple(sorted(class_sizes(rep).values())), flags)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConfigurationRecord):
            return NotImplemented
        return self.canonical_form == other.canonical_form

    def __hash__(self) -> int:
        return hash(self.canonical_form)

    def to_dict(self) -> dict:
        return {
            "canonical_form": self.canonical_form.hex(),
            "class_sizes": list(self.class_sizes),
            "flags": dict(self.flags),
            "colouring": self.colouring.to_dict(),
        }


@dataclass
class EnumerationReport:
    r: int
    exact_colours: int | None
    pair_bound: int | None
    records: list[ConfigurationRecord]
    nodes_explored: int
    pruned_by: dict[str, int]
    leaves_checked: int = 0
    options: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self, include_time: bool = True) -> dict:
        d = {
            "r": self.r,
            "constraints": {"exact_colours": self.exact_colours, "pair_bound": self.pair_bound},
            "options": dict(self.options),
            "num_records": len(self.records),
            "records": [rec.to_dict() for rec in self.records],
            "nodes_explored": self.nodes_explored,
            "leaves_checked": self.leaves_checked,
            "pruned_by": dict(sorted(self.pruned_by.items())),
        }
        if include_time:
            d["wall_time"] = self.wall_time
        return d


# ---------------------------------------------------------------------------
# search


def colex_triples(r: int) -> list[tuple[int, int, int]]:
    """Triples in colex order: every quadruple inside 0..j is complete once
    the triples with maximum j are placed, which lets the rainbow rule fire
    as early as possible."""
    return sorted(combinations(range(r), 3), key=lambda t: (t[2], t[1], t[0]))


PRUNE_RULES = ("rainbow_quadruple", "pair_bound", "class_size", "colour_count", "missing_colour", "symmetry")


class _Search:
    """Depth-first colouring of the triples of K_r in colex order.

    Two modes. ``free``: colours are introduced in restricted-growth order,
    so every colour relabelling is visited once. ``labelled``: r colours, and
    vertex i never meets colour i, which leaves r - 3 choices per triple;
    the simultaneous vertex/colour symmetric group is quotiented by keeping
    only orbit-minimal colours at each step.
    """

    def __init__(
        self,
        r: int,
        exact_colours: int | None,
        pair_bound: int | None,
        labelled: bool,
        size_window: tuple[int, int] | None,
        symmetry: bool,
    ) -> None:
        self.r = r
        self.exact = exact_colours
        self.pair_bound = pair_bound
        self.labelled = labelled
        self.size_window = size_window
        self.symmetry = symmetry and labelled
        self.order = colex_triples(r)
        self.T = len(self.order)
        pos_of = {t: i for i, t in enumerate(self.order)}

        # quadruples (proper subsets only) that complete at each position
        self.quads_at: list[list[tuple[int, int, int, int]]] = [[] for _ in range(self.T)]
        if r > 4:
            for q in combinations(range(r), 4):
                ps = [pos_of[t] for t in combinations(q, 3)]
                self.quads_at[max(ps)].append(tuple(ps))
        # vertices whose incident triples are all placed at each position
        self.closes_vertex: list[list[int]] = [[] for _ in range(self.T)]
        for v in range(r):
            last = max(i for i, t in enumerate(self.order) if v in t)
            self.closes_vertex[last].append(v)
        self.pair_index = {p: i for i, p in enumerate(combinations(range(r), 2))}
        self.pairs_of = [
            [self.pair_index[p] for p in combinations(t, 2)] for t in self.order
        ]
        self.group = list(permutations(range(r))) if self.symmetry else []
        self.tri_image = (
            [[pos_of[tuple(sorted(g[v] for v in t))] for t in self.order] for g in self.group]
        )

        self.nodes = 0
        self.leaves = 0
        self.pruned = {k: 0 for k in PRUNE_RULES}
        self.found: dict[bytes, EdgeColouring] = {}

        self.col = [-1] * self.T
        self.sizes: dict[int, int] = {}
        self.pair_cols = [dict() for _ in self.pair_index]
        self.vertex_cols = [dict() for _ in range(r)]
        self.ncolours = 0

    # -- state --------------------------------------------------------

    def _push(self, p: int, c: int) -> None:
        self.col[p] = c
        self.sizes[c] = self.sizes.get(c, 0) + 1
        if self.sizes[c] == 1:
            self.ncolours += 1
        for pi in self.pairs_of[p]:
            d = self.pair_cols[pi]
            d[c] = d.get(c, 0) + 1
        for v in self.order[p]:
            d = self.vertex_cols[v]
            d[c] = d.get(c, 0) + 1

    def _pop(self, p: int) -> None:
        c = self.col[p]
        self.col[p] = -1
        self.sizes[c] -= 1
        if self.sizes[c] == 0:
            del self.sizes[c]
            self.ncolours -= 1
        for pi in self.pairs_of[p]:
            d = self.pair_cols[pi]
            d[c] -= 1
            if d[c] == 0:
                del d[c]
        for v in self.order[p]:
            d = self.vertex_cols[v]
            d[c] -= 1
            if d[c] == 0:
                del d[c]

    # -- rules --------------------------------------------------------

    def _violation(self, p: int) -> str | None:
        """First rule broken by the assignment just made at position ``p``."""
        c = self.col[p]
        col = self.col
        for a, b, d, e in self.quads_at[p]:
            if len({col[a], col[b], col[d], col[e]}) == 4:
                return "rainbow_quadruple"
        if self.pair_bound is not None:
            for pi in self.pairs_of[p]:
                if len(self.pair_cols[pi]) > self.pair_bound:
                    return "pair_bound"
        remaining = self.T - p - 1
        if self.exact is not None:
            if self.ncolours > self.exact or self.ncolours + remaining < self.exact:
                return "colour_count"
        if self.size_window is not None:
            lo, hi = self.size_window
            if self.sizes[c] > hi:
                return "class_size"
            deficit = sum(max(0, lo - self.sizes.get(k, 0)) for k in range(self.r))
            if deficit > remaining:
                return "class_size"
        if self.labelled:
            for v in self.closes_vertex[p]:
                if len(self.vertex_cols[v]) < self.r - 1:
                    return "missing_colour"
        return None

    def _choices(self, p: int, stab: list[int]) -> tuple[list[int], int]:
        t = self.order[p]
        if not self.labelled:
            top = self.ncolours + 1
            if self.exact is not None:
                top = min(top, self.exact)
            return list(range(top)), 0
        allowed = [k for k in range(self.r) if k not in t]
        if not self.symmetry:
            return allowed, 0
        fixing = [g for g in stab if self.tri_image[g][p] == p]
        keep = [
            k for k in allowed
            if all(self.group[g][k] >= k for g in fixing)
        ]
        return keep, len(allowed) - len(keep)

    def _next_stab(self, p: int, stab: list[int], k: int) -> list[int]:
        return [g for g in stab if self.tri_image[g][p] == p and self.group[g][k] == k]

    # -- driver -------------------------------------------------------

    def _leaf(self) -> None:
        self.leaves += 1
        mapping = dict(zip(self.order, self.col))
        c = EdgeColouring.from_mapping(self.r, 3, mapping)
        ok, _ = is_r_configuration(c)
        if not ok:
            return
        if self.exact is not None and len(c.colours_used) != self.exact:
            return
        form = canonical_form(c)
        self.found.setdefault(form, c)

    def run(self, p: int, stab: list[int], stop_depth: int | None = None, frontier=None) -> None:
        if p == self.T:
            self._leaf()
            return
        if stop_depth is not None and p == stop_depth:
            frontier.append(tuple(self.col[:p]))
            return
        choices, dropped = self._choices(p, stab)
        self.pruned["symmetry"] += dropped
        for k in choices:
            self.nodes += 1
            self._push(p, k)
            rule = self._violation(p)
            if rule is None:
                nxt = self._next_stab(p, stab, k) if self.symmetry else stab
                self.run(p + 1, nxt, stop_depth, frontier)
            else:
                self.pruned[rule] += 1
            self._pop(p)

    def initial_stab(self) -> list[int]:
        return list(range(len(self.group)))

    def replay(self, prefix: Sequence[int]) -> list[int]:
        stab = self.initial_stab()
        for p, k in enumerate(prefix):
            self._push(p, k)
            if self.symmetry:
                stab = self._next_stab(p, stab, k)
        return stab


def _run_subtree(args) -> tuple[dict, int, int, dict]:
    config, prefix = args
    s = _Search(**config)
    stab = s.replay(prefix)
    s.run(len(prefix), stab)
    return (
        {form: c.to_dict() for form, c in s.found.items()},
        s.nodes,
        s.leaves,
        s.pruned,
    )


def default_jobs() -> int:
    env = os.environ.get("TIGHTCC_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumerate_configs(
    r: int,
    exact_colours: int | None = None,
    pair_bound: int | None = None,
    jobs: int | None = 1,
    split_depth: int = 4,
    size_window: tuple[int, int] | None = None,
    symmetry: bool = True,
) -> EnumerationReport:
    """All r-configurations up to isomorphism, subject to the constraints.

    For r = 6 only the exactly-6-colour case is searched; there vertex i
    is the unique vertex missing colour i, so each triple has three
    admissible colours.
    """
    if r not in (4, 5, 6):
        raise UnsupportedSearch(f"enumeration supports r in {{4, 5, 6}} (got {r})")
    if r == 6 and exact_colours != 6:
        raise UnsupportedSearch("r=6 is only searched with exactly 6 colours")
    labelled = exact_colours == r and r == 6
    config = dict(
        r=r,
        exact_colours=exact_colours,
        pair_bound=pair_bound,
        labelled=labelled,
        size_window=size_window,
        symmetry=symmetry,
    )
    start = time.perf_counter()
    if jobs is None:
        jobs = default_jobs()
    root = _Search(**config)
    found: dict[bytes, EdgeColouring] = {}
    if jobs <= 1 or split_depth <= 0:
        root.run(0, root.initial_stab())
        found.update(root.found)
        nodes, leaves, pruned = root.nodes, root.leaves, dict(root.pruned)
    else:
        frontier: list[tuple[int, ...]] = []
        depth = min(split_depth, root.T)
        root.run(0, root.initial_stab(), stop_depth=depth, frontier=frontier)
        nodes, leaves, pruned = root.nodes, root.leaves, dict(root.pruned)
        tasks = [(config, prefix) for prefix in frontier]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for sub_found, sub_nodes, sub_leaves, sub_pruned in pool.map(_run_subtree, tasks):
                for form_, doc in sub_found.items():
                    found.setdefault(form_, EdgeColouring.from_dict(doc))
                nodes += sub_nodes
                leaves += sub_leaves
                for k, v in sub_pruned.items():
                    pruned[k] += v
    records = sorted(
        (ConfigurationRecord.from_colouring(c) for c in found.values()),
        key=lambda rec: rec.canonical_form,
    )
    return EnumerationReport(
        r=r,
        exact_colours=exact_colours,
        pair_bound=pair_bound,
        records=records,
        nodes_explored=nodes,
        pruned_by=pruned,
        leaves_checked=leaves,
        options={
            "order": "colex",
            "mode": "labelled" if labelled else "restricted-growth",
            "size_window": list(size_window) if size_window else None,
            "symmetry": symmetry and labelled,
            "split_depth": split_depth if jobs > 1 else 0,
        },
        wall_time=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# lemma checks


def classify_lemma_checks(report: EnumerationReport):
    """Per-record checks of the structural facts the classification asserts."""
    from tightcc.certificate import Certificate

    cert = Certificate(command=["classify", f"r={report.r}"])
    r = report.r
    for i, rec in enumerate(report.records):
        name = f"record[{i}]"
        c = rec.colouring
        ok, why = is_r_configuration(c)
        cert.check(f"{name}.is_configuration", True, ok, detail=why)
        cert.check(f"{name}.at_least_r_colours", f">= {r}", len(c.colours_used), len(c.colours_used) >= r)
        if r == 4:
            cert.check(f"{name}.rainbow", 4, len(c.colours_used))
        elif r == 5:
            cert.check(f"{name}.max_class_size", "<= 2", max(rec.class_sizes), max(rec.class_sizes) <= 2)
        elif r == 6 and report.exact_colours == 6:
            sizes = list(rec.class_sizes)
            cert.check(f"{name}.class_sizes", "all in [3,5]", sizes, all(3 <= s <= 5 for s in sizes))
            if report.pair_bound is not None and report.pair_bound <= 3:
                mono = monochromatic_quadruples(c)
                cert.check(f"{name}.mono_k4_free", [], [list(q) for q in mono], not mono)
    return cert


def bell_sweep(r: int) -> tuple[set[bytes], int]:
    """Independent oracle: every set partition of the triples of K_r, filtered
    by the definitional check. Partitions come from sympy, not the search.
    Returns the canonical forms found and the number of partitions seen."""
    from sympy.utilities.iterables import multiset_partitions

    triples = list(combinations(range(r), 3))
    forms: set[bytes] = set()
    seen = 0
    for blocks in multiset_partitions(list(range(len(triples)))):
        seen += 1
        mapping = {}
        for col, block in enumerate(blocks):
            for i in block:
                mapping[triples[i]] = col
        c = EdgeColouring.from_mapping(r, 3, mapping)
        if is_r_configuration(c)[0]:
            forms.add(canonical_form(c))
    return forms, seen


__all__ = [
    "ConfigurationRecord",
    "EnumerationReport",
    "bell_sweep",
    "canonical_colouring",
    "canonical_form",
    "classify_lemma_checks",
    "colex_triples",
    "enumerate_configs",
    "is_r_configuration",
]
