"""Randomized probe of the codegree threshold for spanning tight components.

Every retained draw (min codegree >= floor(n/4)) must have a spanning tight
component; a draw that does not is a counterexample and is kept in full.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations

import numpy as np

from tightcc.certificate import Certificate
from tightcc.errors import DegenerateInstance
from tightcc.hypercore import Hypergraph, has_spanning_component, min_codegree

PRNG_NAME = "numpy.random.PCG64 (SeedSequence(seed).spawn(trials))"
DEFAULT_P = 0.7
FAMILIES = ("random", "hprime")


@lru_cache(maxsize=8)
def _quadruples(n: int) -> np.ndarray:
    return np.array(list(combinations(range(n), 4)), dtype=np.int64)


def random_4graph(n: int, p: float, rng: np.random.Generator) -> Hypergraph:
    quads = _quadruples(n)
    keep = rng.random(len(quads)) < p
    return Hypergraph._trusted(n, 4, [tuple(q) for q in quads[keep].tolist()])


def _trial(args) -> dict:
    n, p, family, seed_seq = args
    if family == "hprime":
        from tightcc.constructions import gen_Hprime

        h = gen_Hprime(n, verify=False).hypergraph
    else:
        h = random_4graph(n, p, np.random.Generator(np.random.PCG64(seed_seq)))
    value, witness = min_codegree(h)
    out = {"edges": len(h), "min_codegree": value}
    if value < n // 4:
        out["status"] = "outside_hypothesis"
        out["witness"] = list(witness)
        return out
    spanning, cid = has_spanning_component(h)
    out["status"] = "ok" if spanning else "counterexample"
    if not spanning:
        out["hypergraph"] = h.to_dict()
    return out


def probe_theorem(
    n: int,
    trials: int,
    seed: int,
    p: float = DEFAULT_P,
    family: str = "random",
    jobs: int = 1,
    command: list[str] | None = None,
) -> Certificate:
    if n < 8:
        raise DegenerateInstance(f"probe needs n >= 8 (got {n})")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    seeds = np.random.SeedSequence(seed).spawn(trials)
    tasks = [(n, p, family, s) for s in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_trial, tasks, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_trial(t) for t in tasks]

    retained = [r for r in results if r["status"] != "outside_hypothesis"]
    counterexamples = [
        {"trial": i, **r} for i, r in enumerate(results) if r["status"] == "counterexample"
    ]
    cert = Certificate(command=command or ["probe", f"--n={n}", f"--trials={trials}", f"--seed={seed}"])
    cert.check("counterexamples", 0, len(counterexamples))
    cert.extra = {
        "prng": PRNG_NAME,
        "seed": seed,
        "n": n,
        "p": p,
        "family": family,
        "threshold": n // 4,
        "trials": trials,
        "retained": len(retained),
        "discarded": trials - len(retained),
        "counterexamples": counterexamples,
        "per_trial": [
            {"trial": i, "status": r["status"], "edges": r["edges"], "min_codegree": r["min_codegree"]}
            for i, r in enumerate(results)
        ],
    }
    return cert.finish()
