"""Command-line entry points for the workbench.

Verbs: catalog, poset, relations, hilbert, count, classify, conjecture,
report.  Every verb takes a quiver file (--quiver) and most take the
projective/injective multiplicities (--proj/--inj) that pin down the
principal configuration.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .catalog import get_catalog
from .groebner import groebner_basis, hilbert_table, hilbert_table_json, projective_dimension
from .lab import (
    PrincipalConfig,
    check_conjecture,
    classify_all,
    report_dot,
    report_json,
)
from .pluecker import export_macaulay2, export_text, ideal
from .pointcount import classify, count_points
from .poset import build_poset, generic_isoclass
from .quiver import parse_quiver


def _read_quiver(path: str):
    with open(path) as fh:
        return parse_quiver(fh.read())


def _mult(text: str, n: int):
    vals = [int(t) for t in text.replace(",", " ").split()]
    if len(vals) != n:
        raise SystemExit(f"expected {n} multiplicities, got {len(vals)}")
    return vals


def _config(args) -> PrincipalConfig:
    q = _read_quiver(args.quiver)
    kwargs = {}
    if args.prime:
        kwargs["catalog_prime"] = args.prime
    if args.primes:
        kwargs["max_prime"] = max(int(t) for t in args.primes.replace(",", " ").split())
    if args.max_nodes:
        kwargs["max_nodes"] = args.max_nodes
    if args.jobs:
        kwargs["jobs"] = args.jobs
    return PrincipalConfig(q, _mult(args.proj, q.n), _mult(args.inj, q.n), **kwargs)


def _write(args, name: str, text: str):
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, name)
        with open(path, "w") as fh:
            fh.write(text)
        print(path)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="quivergrass",
        description="Exact computations with principal quiver Grassmannians.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, principal=True):
        p.add_argument("--quiver", required=True, help="quiver description file")
        if principal:
            p.add_argument("--proj", required=True, help="projective multiplicities, e.g. 1,1,1")
            p.add_argument("--inj", required=True, help="injective multiplicities")
        p.add_argument("--prime", type=int, default=0, help="working prime (default 107)")
        p.add_argument("--primes", default="", help="interpolation primes, e.g. 2,3,5,7")
        p.add_argument("--max-nodes", type=int, default=0, help="poset size budget")
        p.add_argument("--jobs", type=int, default=0, help="parallel width")
        p.add_argument("--out", default="", help="output directory (default: stdout)")

    p = sub.add_parser("catalog", help="list the indecomposables and Hom matrix")
    common(p, principal=False)

    p = sub.add_parser("poset", help="degeneration poset of one dimension vector")
    common(p)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")

    p = sub.add_parser("relations", help="export the defining ideal of Gr_e(M)")
    common(p)
    p.add_argument("--isoclass", default="", help="module (default: generic)")
    p.add_argument("--scope", choices=["arrows", "paths"], default="arrows")
    p.add_argument("--macaulay2", action="store_true")

    p = sub.add_parser("hilbert", help="multigraded Hilbert values of the ideal")
    common(p)
    p.add_argument("--isoclass", default="")
    p.add_argument("--max-multidegree", type=int, default=2)

    p = sub.add_parser("count", help="count F_p points of one quiver Grassmannian")
    common(p)
    p.add_argument("--isoclass", default="")

    p = sub.add_parser("classify", help="counting polynomial of one isoclass")
    common(p)
    p.add_argument("--isoclass", default="")

    p = sub.add_parser("conjecture", help="evaluate one conjecture statement")
    common(p)
    p.add_argument("which", choices=list("ABCDE"))

    p = sub.add_parser("report", help="classify the whole poset and report")
    common(p)
    p.add_argument("--dot", action="store_true")

    args = parser.parse_args(argv)

    if args.verb == "catalog":
        q = _read_quiver(args.quiver)
        cat = get_catalog(q, args.prime or 107)
        h = cat.hom_matrix()
        data = {
            "quiver": repr(q),
            "indecomposables": [
                {"name": lab.name, "dims": list(lab.dims)} for lab in cat.labels
            ],
            "hom_matrix": h.tolist(),
        }
        _write(args, "catalog.json", json.dumps(data, indent=2) + "\n")
        return 0

    cfg = _config(args)
    cat = cfg.catalog

    def pick_isoclass(text: str):
        if text:
            return cat.parse_isoclass(text)
        return generic_isoclass(cat, cfg.d, budget=cfg.max_nodes)

    if args.verb == "poset":
        poset = build_poset(cat, cfg.d, budget=cfg.max_nodes)
        if args.dot:
            _write(args, "poset.dot", poset.to_dot())
        else:
            _write(args, "poset.json", poset.to_json() + "\n")
    elif args.verb == "relations":
        iso = pick_isoclass(args.isoclass)
        m = cat.realize(iso)
        ring, gens = ideal(m, cfg.e, scope=args.scope)
        if args.macaulay2:
            _write(args, "ideal.m2", export_macaulay2(ring, gens, cfg.catalog_prime))
        else:
            _write(args, "ideal.txt", export_text(gens))
    elif args.verb == "hilbert":
        iso = pick_isoclass(args.isoclass)
        m = cat.realize(iso)
        ring, gens = ideal(m, cfg.e)
        degrees = list(itertools.product(range(args.max_multidegree + 1),
                                         repeat=cfg.quiver.n))
        table = hilbert_table(ring, gens, cfg.catalog_prime, degrees)
        _write(args, "hilbert.json", hilbert_table_json(table) + "\n")
    elif args.verb == "count":
        iso = pick_isoclass(args.isoclass)
        p = args.prime or 2
        m = cfg.catalog_at(p).realize(iso)
        value = count_points(m, cfg.e, p,
                             enum_budget=cfg.enum_budget,
                             pair_budget=cfg.pair_budget)
        _write(args, "count.json",
               json.dumps({"isoclass": str(iso), "p": p, "count": str(value)}) + "\n")
    elif args.verb == "classify":
        iso = pick_isoclass(args.isoclass)
        cls = classify(lambda p: cfg.catalog_at(p).realize(iso), cfg.e,
                       max_prime=cfg.max_prime,
                       enum_budget=cfg.enum_budget,
                       pair_budget=cfg.pair_budget)
        _write(args, "classify.json", cls.to_json(str(iso)) + "\n")
    elif args.verb == "conjecture":
        verdict = check_conjecture(cfg, args.which)
        _write(args, f"conjecture_{args.which}.json", json.dumps({
            "which": verdict.which,
            "holds": verdict.holds,
            "summary": verdict.summary,
            "details": verdict.details,
        }, indent=2) + "\n")
    elif args.verb == "report":
        rep = classify_all(cfg)
        if args.dot:
            _write(args, "report.dot", report_dot(rep))
        else:
            _write(args, "report.json", report_json(rep) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
