"""Command-line workbench.

Subcommands: construct, certify, stats, partition, audit, search,
formulas.  All machine-readable output is JSON on stdout (CSV available
where flat); exact rationals are serialized as "p/q" strings with
optional decimal display fields.  certify exits 0 on a positive verdict,
1 on a negative one, and 2 on errors; other subcommands use 0/2.

Size caps honor the DAISY_MAX_VERTICES / DAISY_MAX_EDGES environment
variables.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, hgf
from fractions import Fraction

from .audit import (AveragingConstants, claim_bounds, global_audit,
                    l2_part_balance, partition_audit)
from .certify import (CertReport, aes_check, is_daisy_free, links_clique_free,
                      links_t_partite)
from .constructions import bounds_table, build_family
from .errors import DaisyError
from .hypergraph import DaisyPattern, Graph
from .search import SearchProblem, naive_oracle, turan_number


def _emit(obj: dict, fmt: str = "json"):
    if fmt == "csv":
        flat = {k: v for k, v in obj.items() if not isinstance(v, (dict, list))}
        print(",".join(flat))
        print(",".join(str(v) for v in flat.values()))
    else:
        print(json.dumps(obj, indent=2))


def cmd_construct(args) -> int:
    params = {}
    for key in ("q", "r", "N", "depth"):
        val = getattr(args, key if key != "N" else "size", None)
        if val is not None:
            params[key] = val
    H, label = build_family(args.family, **params)
    hgf.write(H, args.out, comments=label.comments())
    density = H.edge_density()
    _emit({
        "family": args.family,
        "params": label.params,
        "n": H.n,
        "r": H.r,
        "m": H.m,
        "density": str(density),
        "density_decimal": float(density),
        "out": str(args.out),
    })
    return 0


def cmd_certify(args) -> int:
    H = hgf.read(args.file)
    if args.daisy:
        r, t = (int(x) for x in args.daisy.split(","))
        report = is_daisy_free(H, DaisyPattern(r, t), threads=args.threads)
    elif args.links_clique_free is not None:
        report = links_clique_free(H, args.links_clique_free, threads=args.threads)
    elif args.links_partite is not None:
        report = links_t_partite(H, args.links_partite, setlinks=args.setlinks)
    elif args.aes is not None:
        rec = aes_check(Graph.from_hypergraph(H), args.aes)
        report = CertReport(property="aes-partite", params={"t": args.aes},
                            verdict=(not rec.conclusion_applies) or rec.partite,
                            witness=None if rec.partite else {"S": []},
                            stats={"sets_checked": 1, "elapsed_ms": 0})
        out = report.as_dict()
        out["record"] = rec.as_dict()
        _emit(out)
        return 0 if report.verdict else 1
    else:
        raise DaisyError("pick one of --daisy R,T / --links-clique-free K / "
                         "--links-partite T / --aes T")
    _emit(report.as_dict())
    return 0 if report.verdict else 1


def cmd_stats(args) -> int:
    H = hgf.read(args.file)
    degs = H.degrees()
    density = H.edge_density() if H.n >= H.r else None
    delta_plus = H.positive_min_codegree()
    _emit({
        "n": H.n,
        "r": H.r,
        "m": H.m,
        "density": None if density is None else str(density),
        "density_decimal": None if density is None else float(density),
        "min_degree": int(degs.min()) if H.n else 0,
        "max_degree": int(degs.max()) if H.n else 0,
        "delta_plus": delta_plus,
    }, args.format)
    return 0


def cmd_partition(args) -> int:
    H = hgf.read(args.file)
    if args.all:
        consts = AveragingConstants(t=args.t)
        rows = claim_bounds(H, args.t, consts, mode=args.mode, seed=args.seed)
        _emit({
            "n": H.n,
            "t": args.t,
            "mode": args.mode,
            "seed": args.seed,
            "bad_threshold": str(rows[0].bad_threshold) if rows else None,
            "missing_threshold": str(rows[0].missing_threshold) if rows else None,
            "rows": [{"x": r.x, "bad": r.bad, "missing": r.missing,
                      "bad_ok": r.bad_ok, "missing_ok": r.missing_ok}
                     for r in rows],
        })
        return 0
    if args.vertex is None:
        raise DaisyError("pick --vertex X or --all")
    consts = AveragingConstants(t=args.t)
    aud = partition_audit(H, args.vertex, args.t, mode=args.mode, seed=args.seed)
    balance = l2_part_balance(aud)
    threshold = (1 + 2 * consts.theta) / Fraction(6 * args.t * args.t)
    _emit({
        "n": H.n,
        "t": args.t,
        "x": args.vertex,
        "mode": aud.partition.mode,
        "seed": args.seed,
        "parts": aud.partition.parts,
        "cross_edges": aud.partition.cross_edges,
        "bad": [list(p) for p in aud.bad_pairs],
        "missing": [list(p) for p in aud.missing_pairs],
        "sizes": [str(s) for s in aud.part_sizes],
        "l2_balance": str(balance),
        "l2_threshold": str(threshold),
        "l2_within": balance <= threshold,
    })
    return 0


def cmd_audit(args) -> int:
    H = hgf.read(args.file)
    g = global_audit(H, args.t, mode=args.mode, seed=args.seed)
    out = g.as_dict()
    out["seed"] = args.seed
    _emit(out)
    return 0


def cmd_search(args) -> int:
    prob = SearchProblem(n=args.n, mode=args.mode, t=args.t, r=args.r,
                         threads=args.threads, node_cap=args.node_cap,
                         all_extremal=not args.first_extremal)
    t0 = time.perf_counter()
    res = turan_number(prob)
    out = res.as_dict()
    out["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    if args.oracle:
        value = naive_oracle(prob)
        out["oracle_checked"] = True
        out["oracle_value"] = value
        out["oracle_agrees"] = value == res.optimum
    _emit(out)
    return 0


def cmd_formulas(args) -> int:
    _emit(bounds_table(args.t, args.r).as_dict(), args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="daisy",
        description="Daisy-free hypergraph workbench: construct, certify, "
                    "audit, and search.")
    p.add_argument("--version", action="version", version=f"daisy {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a family member as HGF")
    c.add_argument("--family", required=True,
                   choices=["pg-noncollinear", "pg-recursive", "gf-independent", "gf-blowup"])
    c.add_argument("--q", type=int, help="field / plane order")
    c.add_argument("--r", type=int, help="uniformity (gf families)")
    c.add_argument("--N", dest="size", type=int, help="blow-up class size")
    c.add_argument("--depth", type=int, help="recursion depth (pg-recursive)")
    c.add_argument("--out", required=True, help="output HGF path")
    c.set_defaults(func=cmd_construct)

    ce = sub.add_parser("certify", help="certify a property of an HGF file")
    ce.add_argument("file")
    ce.add_argument("--daisy", metavar="R,T", help="daisy-freeness for pattern (R,T)")
    ce.add_argument("--links-clique-free", type=int, metavar="K",
                    help="every vertex link K_K-free (3-graphs)")
    ce.add_argument("--links-partite", type=int, metavar="T",
                    help="every link properly T-colorable")
    ce.add_argument("--setlinks", action="store_true",
                    help="test all (r-2)-set links, not just vertex links")
    ce.add_argument("--aes", type=int, metavar="T",
                    help="degree-forced T-partiteness record for a 2-graph")
    ce.add_argument("--threads", type=int, default=1,
                    help="worker threads for the link screening")
    ce.set_defaults(func=cmd_certify)

    st = sub.add_parser("stats", help="degree/codegree/density summary")
    st.add_argument("file")
    st.add_argument("--format", choices=["json", "csv"], default="json")
    st.set_defaults(func=cmd_stats)

    pa = sub.add_parser("partition",
                        help="max-cut link partition audit (one vertex or --all)")
    pa.add_argument("file")
    pa.add_argument("--vertex", type=int)
    pa.add_argument("--all", action="store_true",
                    help="per-vertex bad/missing table against the thresholds")
    pa.add_argument("--t", type=int, required=True)
    pa.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    pa.add_argument("--seed", type=int, default=0)
    pa.set_defaults(func=cmd_partition)

    au = sub.add_parser("audit", help="full link-partition audit with potentials")
    au.add_argument("file")
    au.add_argument("--t", type=int, required=True)
    au.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    au.add_argument("--seed", type=int, default=0)
    au.set_defaults(func=cmd_audit)

    se = sub.add_parser("search", help="exact Turán number search")
    se.add_argument("--mode", choices=["daisy", "link-partite"], required=True)
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--t", type=int, required=True)
    se.add_argument("--r", type=int, default=3)
    se.add_argument("--threads", type=int, default=1)
    se.add_argument("--node-cap", type=int, default=SearchProblem.node_cap)
    se.add_argument("--oracle", action="store_true",
                    help="cross-check with the exhaustive oracle (small n only)")
    se.add_argument("--first-extremal", action="store_true",
                    help="report one extremal instance instead of all")
    se.set_defaults(func=cmd_search)

    fo = sub.add_parser("formulas", help="exact density-bound table")
    fo.add_argument("--t", type=int, required=True)
    fo.add_argument("--r", type=int, default=3)
    fo.add_argument("--format", choices=["json", "csv"], default="json")
    fo.set_defaults(func=cmd_formulas)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DaisyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
