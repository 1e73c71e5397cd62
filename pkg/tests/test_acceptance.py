"""Acceptance criteria, one test each. The terminal summary prints one
PASS/FAIL line per criterion. Tolerances: every quantity is an exact
integer; runtimes are wall-clock budgets on this machine."""

import time
from itertools import combinations

import numpy as np
import pytest
import sympy

from oracles import (
    as_dict,
    brute_is_configuration,
    brute_pair_count,
    brute_rainbow_k4,
    brute_spanning,
)
from tightcc import EdgeColouring, Hypergraph, has_spanning_component, min_codegree
from tightcc.colouring import (
    check_pair_uniqueness,
    find_rainbow_k4,
    max_pair_colour_count,
    mono_extension_set,
    monochromatic_quadruples,
    spanning_colours,
    to_colouring,
    to_hypergraph,
)
from tightcc.configsearch import bell_sweep, canonical_form, default_jobs, enumerate_configs
from tightcc.constructions import gen_abundant, gen_config5, gen_config6, gen_Hprime, v1_v3_v4_triple
from tightcc.link2 import abundance_profile, gamma_sum_expected, vertex_view
from tightcc.probe import probe_theorem

BUDGET = {1: 5.0, 2: 1.0, 3: 30.0, 4: 600.0, 5: 10.0, 6: 30.0, 7: 60.0, 8: 120.0}
CASES = 10_000


@pytest.mark.acceptance(1, "H' extremal tightness for n in 16..48")
def test_1_hprime_tightness():
    start = time.perf_counter()
    bad = []
    for n in range(16, 49):
        g = gen_Hprime(n, verify=False)
        h = g.hypergraph
        value, _ = min_codegree(h)
        t = v1_v3_v4_triple(g)
        cod = sum(1 for d in range(n) if d not in t and tuple(sorted(t + (d,))) in h.edge_set)
        spanning, _ = has_spanning_component(h)
        if (value, cod, spanning) != (n // 4 - 1, n // 4 - 1, False):
            bad.append((n, value, cod, spanning))
    elapsed = time.perf_counter() - start
    assert bad == []
    assert elapsed < BUDGET[1], f"{elapsed:.2f}s"


@pytest.mark.acceptance(2, "4-configurations: exactly the rainbow K4")
def test_2_four_configurations():
    start = time.perf_counter()
    rep = enumerate_configs(4)
    elapsed = time.perf_counter() - start
    assert [r.canonical_form for r in rep.records] == [canonical_form(EdgeColouring.rainbow(4))]
    assert elapsed < BUDGET[2], f"{elapsed:.2f}s"


@pytest.mark.acceptance(3, "5-configurations: exactly one, cross-checked by the Bell sweep")
def test_3_five_configurations():
    start = time.perf_counter()
    rep = enumerate_configs(5)
    forms, partitions = bell_sweep(5)
    elapsed = time.perf_counter() - start
    assert partitions == sympy.bell(10) == 115975
    assert [r.class_sizes for r in rep.records] == [(2, 2, 2, 2, 2)]
    assert rep.records[0].canonical_form == canonical_form(gen_config5())
    assert forms == {r.canonical_form for r in rep.records}
    assert elapsed < BUDGET[3], f"{elapsed:.2f}s"


@pytest.mark.acceptance(4, "6-configurations with 6 colours: sizes in [3,5]; unique under pairBound=3")
def test_4_six_configurations():
    start = time.perf_counter()
    full = enumerate_configs(6, exact_colours=6, jobs=default_jobs())
    bounded = enumerate_configs(6, exact_colours=6, pair_bound=3, jobs=default_jobs())
    elapsed = time.perf_counter() - start
    print(f"\nunbounded: {len(full.records)} records, nodes {full.nodes_explored}, pruned {full.pruned_by}")
    print(f"pairBound=3: {len(bounded.records)} records, nodes {bounded.nodes_explored}, pruned {bounded.pruned_by}")

    assert all(3 <= s <= 5 for r in full.records for s in r.class_sizes)
    assert all(r.flags["monoK4free"] for r in bounded.records)
    assert canonical_form(gen_config6()) in {r.canonical_form for r in bounded.records}
    assert elapsed < BUDGET[4], f"{elapsed:.2f}s"
    assert len(bounded.records) == 1, f"{len(bounded.records)} canonical classes under pairBound=3"


@pytest.mark.acceptance(5, "Abundant construction: 9 on 39 vertices, 17 on 71")
def test_5_abundant():
    start = time.perf_counter()
    one, two = gen_abundant(1, verify=False), gen_abundant(2, verify=False)
    p1, p2 = abundance_profile(one), abundance_profile(two)
    # brute-force recount of the minimum for m=1
    brute = min(
        sum(1 for w in range(39) if w not in (u, v) and one[(u, w)] == one[(v, w)] == one[(u, v)])
        for u, v in combinations(range(39), 2)
    )
    elapsed = time.perf_counter() - start
    assert (one.n, len(one.colours_used), p1.minimum, brute) == (39, 6, 9, 9)
    assert (two.n, len(two.colours_used), p2.minimum) == (71, 6, 17)
    assert elapsed < BUDGET[5], f"{elapsed:.2f}s"


def _random_dense_4graph(rng):
    n = int(rng.integers(10, 17))
    quads = np.array(list(combinations(range(n), 4)))
    while True:
        p = float(rng.uniform(0.3, 0.9))
        h = Hypergraph._trusted(n, 4, [tuple(q) for q in quads[rng.random(len(quads)) < p].tolist()])
        if min_codegree(h)[0] >= 1:
            return h


@pytest.mark.acceptance(6, "Hypergraph/colouring equivalence on 200 random 4-graphs")
def test_6_equivalence():
    rng = np.random.default_rng(20240601)
    start = time.perf_counter()
    failures = []
    for i in range(200):
        h = _random_dense_4graph(rng)
        c = to_colouring(h)
        if has_spanning_component(h)[0] != bool(spanning_colours(c)):
            failures.append((i, "spanning"))
        if not set(h.edges) <= set(to_hypergraph(c).edges):
            failures.append((i, "round trip"))
    # the structured non-spanning case rides along
    hp = gen_Hprime(16).hypergraph
    if has_spanning_component(hp)[0] or spanning_colours(to_colouring(hp)):
        failures.append(("hprime", "spanning"))
    elapsed = time.perf_counter() - start
    assert failures == []
    assert elapsed < BUDGET[6], f"{elapsed:.2f}s"


@pytest.mark.acceptance(7, "Codegree threshold probe n=14, 200 trials: >= 100 retained, 0 counterexamples")
def test_7_probe():
    start = time.perf_counter()
    cert = probe_theorem(14, 200, seed=7)
    elapsed = time.perf_counter() - start
    assert cert.extra["retained"] >= 100
    assert cert.extra["counterexamples"] == []
    assert cert.passed
    assert elapsed < BUDGET[7], f"{elapsed:.2f}s"


def _pair_uniqueness_suite(rng):
    violations = 0
    for _ in range(CASES):
        n = int(rng.integers(4, 10))
        c = EdgeColouring(n, 3, rng.integers(0, int(rng.integers(1, 4)), n * (n - 1) * (n - 2) // 6).tolist())
        if check_pair_uniqueness(c) is not None:
            violations += 1
    return violations


def _gamma_suite(rng):
    violations = 0
    for _ in range(CASES):
        n = int(rng.integers(4, 40))
        c = EdgeColouring(n, 2, rng.integers(0, 3, n * (n - 1) // 2).tolist())
        view = vertex_view(c, int(rng.integers(0, n)))
        if view.gamma is not None and sum(view.gamma.values()) != gamma_sum_expected(n):
            violations += 1
        if view.gamma is None and len(view.incident_colours) == 3:
            violations += 1
    return violations


def _detector_suite(rng):
    violations = 0
    for _ in range(CASES):
        n = int(rng.integers(4, 8))
        c = EdgeColouring(n, 3, rng.integers(0, int(rng.integers(1, 6)), n * (n - 1) * (n - 2) // 6).tolist())
        chi = as_dict(c)
        e = tuple(sorted(rng.choice(n, 3, replace=False).tolist()))
        mono = {v for v in range(n) if v not in e and all(chi[t] == chi[e] for t in combinations(sorted(e + (v,)), 3))}
        ok = (
            find_rainbow_k4(c) == brute_rainbow_k4(chi, n)
            and max_pair_colour_count(c) == brute_pair_count(chi, n)
            and mono_extension_set(c, e) == mono
            and len(monochromatic_quadruples(c)) == sum(
                1 for q in combinations(range(n), 4) if len({chi[t] for t in combinations(q, 3)}) == 1
            )
            and spanning_colours(c) == brute_spanning(chi, range(n))
        )
        violations += not ok
    return violations


def _canonical_suite(rng):
    violations = 0
    for _ in range(CASES):
        n = int(rng.integers(4, 7))
        c = EdgeColouring(n, 3, rng.integers(0, int(rng.integers(1, 5)), n * (n - 1) * (n - 2) // 6).tolist())
        perm = rng.permutation(n).tolist()
        colours = list(c.colours_used)
        shuffled = rng.permutation(colours).tolist()
        d = c.relabel_vertices(perm).recolour({a: b + 100 for a, b in zip(colours, shuffled)})
        violations += canonical_form(c) != canonical_form(d)
    return violations


@pytest.mark.acceptance(8, "Property suites: pair uniqueness, gamma-sum, detectors, canonical form (10^4 cases each)")
def test_8_property_suites():
    rng = np.random.default_rng(8)
    start = time.perf_counter()
    results = {
        "pair_uniqueness": _pair_uniqueness_suite(rng),
        "gamma_sum": _gamma_suite(rng),
        "detectors": _detector_suite(rng),
        "canonical_form": _canonical_suite(rng),
    }
    elapsed = time.perf_counter() - start
    print(f"\nviolations {results} in {elapsed:.1f}s")
    assert results == dict.fromkeys(results, 0)
    assert elapsed < BUDGET[8], f"{elapsed:.2f}s"


def test_configuration_oracle_sanity():
    # the brute-force definitional oracle used above recognises the known objects
    for c, r in ((EdgeColouring.rainbow(4), 4), (gen_config5(), 5), (gen_config6(), 6)):
        assert brute_is_configuration(as_dict(c), r)
