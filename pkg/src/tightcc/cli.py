"""Command-line interface.

Exit codes: 0 when every check passed, 1 when a check failed, 2 on bad
input (unparseable or invalid documents, degenerate or unsupported
requests). Errors go to stderr as a JSON object with a ``code`` field.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Any

from tightcc.certificate import Certificate, digest_file
from tightcc.colouring import (
    EdgeColouring,
    class_sizes,
    find_rainbow_k4,
    max_pair_colour_count,
    spanning_colours,
    to_colouring,
    to_hypergraph,
)
from tightcc.errors import InputError, TightccError
from tightcc.hypercore import Hypergraph, min_codegree, tight_components

log = logging.getLogger("tightcc")

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


# ---------------------------------------------------------------------------
# I/O helpers


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("UNREADABLE_INPUT", f"cannot read {path}: {exc.strerror}", path) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("BAD_JSON", exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from exc


def load_hypergraph(path: str) -> Hypergraph:
    return Hypergraph.from_dict(_read_json(path))


def load_colouring(path: str) -> EdgeColouring:
    return EdgeColouring.from_dict(_read_json(path))


def _write_json(obj: Any, path: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(args, cert: Certificate, result: Any) -> int:
    cert.finish()
    _write_json({"result": result, "certificate": cert.to_dict()}, args.out)
    return EXIT_PASS if cert.passed else EXIT_FAIL


def _emit_object(args, cert: Certificate, obj: Any) -> int:
    """Write a produced object to --out and its certificate to --cert or stdout."""
    cert.finish()
    _write_json(obj, args.out)
    _write_json(cert.to_dict(), args.cert)
    return EXIT_PASS if cert.passed else EXIT_FAIL


def _cert(args, inputs: dict[str, str] | None = None) -> Certificate:
    return Certificate(command=list(args.argv), inputs=inputs or {})


# ---------------------------------------------------------------------------
# commands


def cmd_components(args) -> int:
    h = load_hypergraph(args.input)
    cert = _cert(args, {args.input: digest_file(args.input)})
    part = tight_components(h)
    cert.check("edges_partitioned", len(h), len(part.component_of))
    return _emit(args, cert, part.to_dict())


def cmd_codegree(args) -> int:
    h = load_hypergraph(args.input)
    cert = _cert(args, {args.input: digest_file(args.input)})
    value, witness = min_codegree(h)
    if args.expect is not None:
        cert.check("min_codegree", args.expect, value)
    return _emit(args, cert, {"value": value, "witness": list(witness)})


def cmd_to_colouring(args) -> int:
    h = load_hypergraph(args.input)
    cert = _cert(args, {args.input: digest_file(args.input)})
    c = to_colouring(h).canonical_colours()
    part = tight_components(h)
    cert.check("colour_count_equals_component_count", part.num_components, len(c.colours_used))
    cert.check(
        "spanning_equivalence",
        bool(part.spanning_component_ids),
        bool(spanning_colours(c)),
    )
    return _emit_object(args, cert, c.to_dict())


def cmd_to_hypergraph(args) -> int:
    c = load_colouring(args.input)
    if c.arity != 3:
        raise InputError("BAD_FIELD", "to-hypergraph needs an arity-3 colouring", "arity")
    cert = _cert(args, {args.input: digest_file(args.input)})
    h = to_hypergraph(c)
    cert.check("uniformity", 4, h.k)
    return _emit_object(args, cert, h.to_dict())


def cmd_abundance(args) -> int:
    from tightcc.link2 import abundance_profile, quarter_threshold

    c = load_colouring(args.input)
    if c.arity != 2:
        raise InputError("BAD_FIELD", "abundance needs an arity-2 colouring", "arity")
    cert = _cert(args, {args.input: digest_file(args.input)})
    prof = abundance_profile(c)
    threshold = args.threshold
    if args.quarter:
        threshold = quarter_threshold(c.n)
    if threshold is not None:
        cert.check("abundance", f">= {threshold}", prof.minimum, prof.minimum >= threshold)
    result = prof.to_dict()
    if not args.per_edge:
        result.pop("per_edge")
    return _emit(args, cert, result)


def cmd_gen(args) -> int:
    from tightcc import constructions as cons
    from tightcc.configsearch import is_r_configuration

    cert = _cert(args)
    fam = args.family
    verify = not args.no_verify
    if fam in ("h", "hprime"):
        if args.n is None:
            raise InputError("MISSING_FLAG", f"--n is required for family {fam}", "--n")
        g = cons.gen_H(args.n) if fam == "h" else cons.gen_Hprime(args.n, verify=False)
        obj = g.hypergraph.to_dict()
        obj["parts"] = list(g.part_of)
        if verify:
            value, witness = min_codegree(g.hypergraph)
            part = tight_components(g.hypergraph)
            cert.extra = {"min_codegree": value, "witness": list(witness)}
            if fam == "hprime":
                cert.check("min_codegree", args.n // 4 - 1, value)
                t = cons.v1_v3_v4_triple(g)
                cod = sum(1 for d in range(args.n) if tuple(sorted(t + (d,))) in g.hypergraph.edge_set)
                cert.check("v1_v3_v4_triple_codegree", args.n // 4 - 1, cod)
            cert.check("spanning_tight_component", False, bool(part.spanning_component_ids))
    elif fam in ("config5", "config6"):
        c = cons.gen_config5(verify=False) if fam == "config5" else cons.gen_config6(verify=False)
        obj = c.to_dict()
        if verify:
            ok, why = is_r_configuration(c)
            cert.check("is_configuration", True, ok, detail=why)
            sizes = sorted(class_sizes(c).values())
            cert.check("class_sizes", [2] * 5 if fam == "config5" else [3, 3, 3, 3, 3, 5], sizes)
            if fam == "config6":
                cert.check("max_pair_colour_count", 3, max_pair_colour_count(c)[0])
    elif fam == "abundant":
        if args.m is None:
            raise InputError("MISSING_FLAG", "--m is required for family abundant", "--m")
        from tightcc.link2 import abundance_profile

        c = cons.gen_abundant(args.m, scheme=args.scheme, verify=False)
        obj = c.to_dict()
        if verify:
            prof = abundance_profile(c)
            cert.check("colours_used", 6, len(c.colours_used))
            cert.check("min_abundance", 8 * args.m + 1, prof.minimum)
            cert.extra = {"minimizer": list(prof.minimizer)}
    else:  # pragma: no cover - argparse restricts choices
        raise InputError("BAD_FLAG", f"unknown family {fam}", "--family")
    return _emit_object(args, cert, obj)


def cmd_enumerate(args) -> int:
    from tightcc.configsearch import classify_lemma_checks, default_jobs, enumerate_configs

    jobs = args.jobs if args.jobs is not None else default_jobs()
    cap = os.environ.get("TIGHTCC_JOBS")
    if cap:
        jobs = min(jobs, max(1, int(cap)))
    report = enumerate_configs(
        args.r,
        exact_colours=args.exact_colours,
        pair_bound=args.pair_bound,
        jobs=jobs,
        split_depth=args.split_depth,
        size_window=(3, 5) if args.size_window else None,
        symmetry=not args.no_symmetry,
    )
    lemma = classify_lemma_checks(report)
    cert = _cert(args)
    cert.checks.extend(lemma.checks)
    cert.check("records_canonically_distinct", len(report.records),
               len({r.canonical_form for r in report.records}))
    if args.expect_records is not None:
        cert.check("num_records", args.expect_records, len(report.records))
    log.info("enumerated %d records in %.2fs", len(report.records), report.wall_time)
    return _emit(args, cert, report.to_dict())


def cmd_verify_config(args) -> int:
    from tightcc.configsearch import ConfigurationRecord, is_r_configuration

    c = load_colouring(args.input)
    if c.arity != 3:
        raise InputError("BAD_FIELD", "verify-config needs an arity-3 colouring", "arity")
    cert = _cert(args, {args.input: digest_file(args.input)})
    ok, why = is_r_configuration(c)
    cert.check("is_configuration", True, ok, detail=why)
    cert.check("at_least_r_colours", f">= {c.n}", len(c.colours_used), len(c.colours_used) >= c.n)
    result: dict[str, Any] = {"r": c.n, "is_configuration": ok, "witness": why}
    if c.n <= 8:
        rec = ConfigurationRecord.from_colouring(c)
        result.update(
            canonical_form=rec.canonical_form.hex(), class_sizes=list(rec.class_sizes), flags=rec.flags
        )
    if c.n >= 4:
        rk = find_rainbow_k4(c)
        result["rainbow_k4"] = list(rk) if rk else None
    return _emit(args, cert, result)


def cmd_probe(args) -> int:
    from tightcc.probe import probe_theorem

    jobs = args.jobs or 1
    cap = os.environ.get("TIGHTCC_JOBS")
    if cap:
        jobs = min(jobs, max(1, int(cap)))
    cert = probe_theorem(
        args.n, args.trials, args.seed, p=args.p, family=args.family, jobs=jobs, command=list(args.argv)
    )
    if args.min_retained is not None:
        retained = cert.extra["retained"]
        cert.check("retained", f">= {args.min_retained}", retained, retained >= args.min_retained)
    log.info("retained %d of %d draws", cert.extra["retained"], args.trials)
    return _emit(args, cert, {k: cert.extra[k] for k in ("retained", "discarded", "counterexamples")})


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tightcc", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="suppress progress messages")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_io(p, out_help="result document (default: stdout)"):
        p.add_argument("--in", dest="input", required=True, help="input JSON file")
        p.add_argument("--out", default=None, help=out_help)
        return p

    p = with_io(sub.add_parser("components", help="tight components of a hypergraph"))
    p.set_defaults(func=cmd_components)

    p = with_io(sub.add_parser("codegree", help="minimum codegree and witness"))
    p.add_argument("--expect", type=int, default=None, help="fail unless the value matches")
    p.set_defaults(func=cmd_codegree)

    p = with_io(sub.add_parser("to-colouring", help="4-graph -> colouring of triples"), "colouring JSON")
    p.add_argument("--cert", default=None, help="certificate file (default: stdout)")
    p.set_defaults(func=cmd_to_colouring)

    p = with_io(sub.add_parser("to-hypergraph", help="colouring -> 4-graph of monochromatic K4's"), "hypergraph JSON")
    p.add_argument("--cert", default=None, help="certificate file (default: stdout)")
    p.set_defaults(func=cmd_to_hypergraph)

    p = with_io(sub.add_parser("abundance", help="monochromatic triangle profile of a 2-colouring"))
    p.add_argument("--threshold", type=int, default=None)
    p.add_argument("--quarter", action="store_true", help="use floor((n+1)/4) as the threshold")
    p.add_argument("--per-edge", action="store_true", help="include the per-edge table")
    p.set_defaults(func=cmd_abundance)

    p = sub.add_parser("gen", help="generate an explicit construction")
    p.add_argument("--family", required=True, choices=["h", "hprime", "config5", "config6", "abundant"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--scheme", default="circulant", choices=["circulant", "swapped", "alternating"])
    p.add_argument("--out", required=True)
    p.add_argument("--cert", default=None, help="certificate file (default: stdout)")
    p.add_argument("--no-verify", action="store_true", help="skip self-verification")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate-configs", help="isomorph-free enumeration of r-configurations")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--exact-colours", type=int, default=None)
    p.add_argument("--pair-bound", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--split-depth", type=int, default=4)
    p.add_argument("--size-window", action="store_true", help="prune class sizes outside [3,5]")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--expect-records", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = with_io(sub.add_parser("verify-config", help="check the r-configuration definition"))
    p.set_defaults(func=cmd_verify_config)

    p = sub.add_parser("probe", help="randomized probe of the codegree threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--family", default="random", choices=["random", "hprime"])
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--min-retained", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    quiet = "--quiet" in argv
    try:
        args = parser.parse_args([a for a in argv if a != "--quiet"])
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    args.argv = ["tightcc"] + list(argv)
    logging.basicConfig(level=logging.WARNING if quiet else logging.INFO, format="%(message)s")
    if getattr(args, "p", 0) is None:
        from tightcc.probe import DEFAULT_P

        args.p = DEFAULT_P
    try:
        return args.func(args)
    except TightccError as exc:
        sys.stderr.write(json.dumps({"error": exc.to_dict()}) + "\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
