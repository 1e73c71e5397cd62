"""Brute-force reference implementations used only by the tests.

Nothing here calls into the library beyond reading colours and edges, so
each function is an independent route to the quantity it checks.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations


def bfs_components(n, k, edges):
    """Tight components by BFS over the edge graph (adjacent iff |e & f| = k-1)."""
    edges = sorted(tuple(sorted(e)) for e in edges)
    label = {}
    comps = []
    for start in edges:
        if start in label:
            continue
        cid = len(comps)
        label[start] = cid
        members = [start]
        queue = deque([start])
        while queue:
            e = queue.popleft()
            for f in edges:
                if f not in label and len(set(e) & set(f)) == k - 1:
                    label[f] = cid
                    members.append(f)
                    queue.append(f)
        comps.append(members)
    return label, comps


def brute_min_codegree(n, k, edges):
    es = [set(e) for e in edges]
    best = None
    for s in combinations(range(n), k - 1):
        ss = set(s)
        d = sum(1 for e in es if ss <= e)
        if best is None or d < best[0]:
            best = (d, s)
    return best


def colour_of(chi, t):
    return chi[tuple(sorted(t))]


def as_dict(c):
    return {t: col for t, col in c.items()}


def brute_spanning(chi, verts, arity=3):
    verts = set(verts)
    cover = {}
    for t in combinations(sorted(verts), arity):
        cover.setdefault(chi[t], set()).update(t)
    return {col for col, vs in cover.items() if vs == verts}


def brute_is_configuration(chi, r):
    if brute_spanning(chi, range(r)):
        return False
    for size in range(3, r):
        for s in combinations(range(r), size):
            if not brute_spanning(chi, s):
                return False
    return True


def brute_rainbow_k4(chi, n):
    for q in combinations(range(n), 4):
        if len({chi[t] for t in combinations(q, 3)}) == 4:
            return q
    return None


def brute_rainbow_k4_graph(chi, n):
    for q in combinations(range(n), 4):
        if len({chi[p] for p in combinations(q, 2)}) == 6:
            return q
    return None


def brute_pair_count(chi, n):
    best, wit = -1, None
    for u, v in combinations(range(n), 2):
        cols = {colour_of(chi, (u, v, w)) for w in range(n) if w not in (u, v)}
        if len(cols) > best:
            best, wit = len(cols), (u, v)
    return best, wit


def brute_mono_triangles(chi, n, u, v):
    col = colour_of(chi, (u, v))
    return sum(
        1 for w in range(n)
        if w not in (u, v) and colour_of(chi, (u, w)) == col and colour_of(chi, (v, w)) == col
    )


def brute_isomorphic(a, b):
    """Vertex bijection plus colour bijection mapping a onto b."""
    if a.n != b.n or a.arity != b.arity:
        return False
    for p in permutations(range(a.n)):
        fwd, back = {}, {}
        ok = True
        for t, col in a.items():
            d = b.colour(tuple(p[v] for v in t))
            if fwd.setdefault(col, d) != d or back.setdefault(d, col) != col:
                ok = False
                break
        if ok:
            return True
    return False


def brute_phi(chi, n, colour):
    phi = sum(
        1 for u, v in combinations(range(n), 2)
        if sum(1 for w in range(n) if w not in (u, v) and colour_of(chi, (u, v, w)) == colour) >= 2
    )
    big = sum(
        1 for q in combinations(range(n), 4)
        if sum(1 for t in combinations(q, 3) if chi[t] == colour) >= 2
    )
    return phi, big


def batch_is_configuration(r, cols):
    """Definitional check over a batch: ``cols`` is (B, T) with column j the
    colour of the j-th lexicographic triple of range(r). Numpy bitmasks only."""
    import numpy as np

    triples = list(combinations(range(r), 3))
    tmask = np.array([(1 << a) | (1 << b) | (1 << c) for a, b, c in triples], dtype=np.int64)
    palette = np.unique(cols)
    ok = np.ones(len(cols), dtype=bool)
    for size in range(3, r + 1):
        for s in combinations(range(r), size):
            smask = sum(1 << v for v in s)
            inside = [j for j, t in enumerate(triples) if set(t) <= set(s)]
            spans = np.zeros(len(cols), dtype=bool)
            for col in palette:
                cover = np.bitwise_or.reduce(
                    np.where(cols[:, inside] == col, tmask[inside], 0), axis=1
                )
                spans |= cover == smask
            # the full set must have no spanning colour, proper subsets must have one
            ok &= ~spans if size == r else spans
    return ok
