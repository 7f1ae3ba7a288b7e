"""Command-line front end: evaluation, specializations, region curves,
certification, and the exploratory zero hunt.

All rationals on the command line are written "p/q" (or "p").  Output is
machine-first: JSON for single results and reports, CSV for region curves.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

# Lets argparse accept bare negative rationals ("-1/2") as option values.
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")

from .certify import BOUNDS, SUITES, run_all, run_suite
from .engine import (coeffs, chromatic, flow, tutte_xy, z_delcon, z_expansion,
                     z_matroid_expansion, z_potts_coloring)
from .exact import RationalEnclosure, rat
from .graphs import enumerate_nonseparable, format_graph, parse_graph
from .matroids import dual as matroid_dual
from .matroids import parse_matroid
from .regions import (Q32_27, diamond_interval, interval_Im, v3_plus, V2, V3)
from .roots import DEFAULT_WIDTH
from .weightmaps import (INF, diamond_fixed_point_enclosure, diamond_map,
                         dualw, par, ser)


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as f:
        return parse_graph(f.read())


def _weights_for(g, file_weights, uniform_v):
    if uniform_v is not None:
        return {eid: rat(uniform_v) for eid in g.edge_ids()}
    missing = [eid for eid in g.edge_ids() if eid not in file_weights]
    if missing:
        raise SystemExit(f"error: missing weights for edges {missing}; "
                         "pass --v or add weights to the file")
    return file_weights


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# Subcommands

def cmd_eval(args) -> int:
    g, fw = _load_graph(args.graph)
    q = rat(args.q)
    w = _weights_for(g, fw, args.v)
    routes = {}
    requested = (["expansion", "delcon", "coloring"] if args.route == "all"
                 else [args.route])
    for route in requested:
        if route == "expansion":
            routes["expansion"] = z_expansion(g, q, w)
        elif route == "delcon":
            routes["delcon"] = z_delcon(g, q, w).value
        elif route == "coloring":
            if q.denominator != 1 or q < 1:
                if args.route == "coloring":
                    raise SystemExit("error: coloring route needs a positive "
                                     "integer q")
                continue
            routes["coloring"] = z_potts_coloring(g, int(q), w)
    values = set(routes.values())
    _emit({"value": str(next(iter(values))), "q": str(q),
           "routes": {k: str(v) for k, v in routes.items()},
           "agree": len(values) == 1})
    return 0 if len(values) == 1 else 1


def cmd_poly(args) -> int:
    g, fw = _load_graph(args.graph)
    if args.chromatic:
        _emit({"poly": "chromatic", "coeffs": [str(c) for c in chromatic(g).coeffs]})
    elif args.flow:
        _emit({"poly": "flow", "coeffs": [str(c) for c in flow(g).coeffs]})
    elif args.tutte:
        t = tutte_xy(g)
        terms = [{"x": i, "y": j, "coeff": str(c)}
                 for (i, j), c in sorted(t.terms.items())]
        _emit({"poly": "tutte", "terms": terms})
    else:
        w = _weights_for(g, fw, args.v)
        _emit({"poly": "coeffs",
               "C": [str(c) for c in coeffs(g, w)]})
    return 0


def _frange(start: Fraction, stop: Fraction, step: Fraction):
    q = start
    while q <= stop:
        yield q
        q += step


def cmd_regions(args) -> int:
    start, stop, step = rat(args.q_grid[0]), rat(args.q_grid[1]), rat(args.q_grid[2])
    if step <= 0:
        raise SystemExit("error: step must be positive")
    width = Fraction(args.width) if args.width else DEFAULT_WIDTH
    cols = ["q", "minus_q_over_2", "minus_3q_over_4",
            "v_diamond_plus_lo", "v_diamond_plus_hi",
            "v_diamond_minus_lo", "v_diamond_minus_hi",
            "v2_plus", "v3_plus_lo", "v3_plus_hi", "v4_plus",
            "V2_lo", "V2_hi", "V3_lo", "V3_hi"]
    out = sys.stdout
    out.write(",".join(cols) + "\n")
    for q in _frange(start, stop, step):
        row = {c: "" for c in cols}
        row["q"] = str(q)
        row["minus_q_over_2"] = str(-q / 2)
        row["minus_3q_over_4"] = str(-3 * q / 4)
        if 0 < q <= Q32_27:
            d = diamond_interval(q, width)
            row["v_diamond_plus_lo"] = str(d.hi.lo)
            row["v_diamond_plus_hi"] = str(d.hi.hi)
            row["v_diamond_minus_lo"] = str(d.lo.lo)
            row["v_diamond_minus_hi"] = str(d.lo.hi)
        if 0 < q < 1:
            i2 = interval_Im(q, 2, width)
            i4 = interval_Im(q, 4, width)
            row["v2_plus"] = str(i2.hi.midpoint)
            row["v4_plus"] = str(i4.hi.midpoint)
            v3 = v3_plus(q, width).interval
            row["v3_plus_lo"] = str(v3.lo)
            row["v3_plus_hi"] = str(v3.hi)
        if 1 < q <= Q32_27:
            r2, r3 = V2(q, width), V3(q, width)
            row["V2_lo"] = str(r2.lo.midpoint)
            row["V2_hi"] = str(r2.hi.midpoint)
            row["V3_lo"] = str(r3.lo.midpoint)
            row["V3_hi"] = str(r3.hi.midpoint)
        out.write(",".join(row[c] for c in cols) + "\n")
    out.write("# q<0: no interval columns; the fixed-sign results hold for "
              "all weights in the stated per-edge ranges\n")
    out.write("# q>32/27: no negative weight interval is closed under the "
              "reduction maps; iterates of the diamond map escape to >= 0\n")
    return 0


def cmd_map(args) -> int:
    vs = [rat(v) for v in args.v]
    if args.op == "par":
        if len(vs) != 2:
            raise SystemExit("error: par needs two weights")
        result = par(vs[0], vs[1])
    elif args.op == "ser":
        if len(vs) != 2 or args.q is None:
            raise SystemExit("error: ser needs --q and two weights")
        result = ser(rat(args.q), vs[0], vs[1])
    elif args.op == "dual":
        if len(vs) != 1 or args.q is None:
            raise SystemExit("error: dual needs --q and one weight")
        result = dualw(rat(args.q), vs[0])
    else:
        if len(vs) != 1 or args.q is None:
            raise SystemExit("error: diamond needs --q and one weight")
        result = diamond_map(rat(args.q), vs[0])
    _emit({"op": args.op, "result": "+inf" if result is INF else str(result)})
    return 0


def cmd_certify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise SystemExit(f"error: unknown suite {args.suite!r}; "
                         f"choose from {sorted(SUITES)} or 'all'")
    if args.bounds not in BOUNDS:
        raise SystemExit(f"error: unknown bounds preset {args.bounds!r}")
    if args.suite == "all":
        reports = run_all(seed=args.seed, bounds=args.bounds, poison=args.poison)
    else:
        reports = [run_suite(args.suite, seed=args.seed, bounds=args.bounds,
                             poison=args.poison)]
    _emit([r.to_dict() for r in reports])
    return 0 if all(r.clean for r in reports) else 1


def _region_test(region: str, q: Fraction, v: Fraction) -> None:
    """Raise SystemExit naming the failing test if (q, v) is outside."""
    if region == "a":
        if not (q < 0 and v < -2):
            raise SystemExit("error: region a requires q < 0 and v < -2")
        return
    if region == "b":
        if not (q < 0 and 0 < v < -q / 2):
            raise SystemExit("error: region b requires q < 0 and 0 < v < -q/2")
        return
    if region == "e":
        if not (q > Q32_27 and v < 0):
            raise SystemExit("error: region e requires q > 32/27 and v < 0")
        return
    if region in ("c", "d"):
        if not (0 < q <= Q32_27 and q != 1):
            raise SystemExit("error: regions c/d require 0 < q <= 32/27, q != 1")
        width = DEFAULT_WIDTH
        for _ in range(8):
            e = diamond_fixed_point_enclosure(q, width)
            if region == "d":
                if v < 0 and v > e.hi:
                    return
                if v >= 0 or v <= e.lo:
                    raise SystemExit("error: region d requires "
                                     "v_diamond_plus < v < 0")
            else:
                # v_diamond_minus = q / v_diamond_plus; enclosure endpoints
                vm = RationalEnclosure(min(q / e.lo, q / e.hi),
                                       max(q / e.lo, q / e.hi))
                if v < vm.lo:
                    return
                if v >= vm.hi:
                    raise SystemExit("error: region c requires "
                                     "v < v_diamond_minus")
            width /= 2 ** 16
        raise SystemExit("error: (q, v) sits on a region boundary")
    raise SystemExit(f"error: unknown region {region!r}")


def cmd_hunt(args) -> int:
    q, v = rat(args.q), rat(args.v)
    _region_test(args.region, q, v)
    max_edges = min(args.max_edges, 5)
    findings = []
    pos = neg = zero = 0
    for m in range(2, max_edges + 1):
        for g in enumerate_nonseparable(m):
            z = z_expansion(g, q, {eid: v for eid in g.edge_ids()})
            sgn = 0 if z == 0 else (1 if z > 0 else -1)
            pos += sgn > 0
            neg += sgn < 0
            zero += sgn == 0
            findings.append({"graph": format_graph(g).strip().split("\n"),
                             "n": g.n, "m": g.m, "sign": sgn, "value": str(z)})
    _emit({"region": args.region, "q": str(q), "v": str(v),
           "findings": findings,
           "summary": {"positive": pos, "negative": neg, "zero": zero,
                       "both_signs": pos > 0 and neg > 0}})
    return 0


def cmd_blocks(args) -> int:
    g, _ = _load_graph(args.graph)
    dec = g.blocks()
    _emit({"components": dec.c, "nontrivial_blocks": dec.b,
           "blocks": [{"vertices": sorted(b.vertices),
                       "edges": sorted(b.edges),
                       "trivial": b.trivial} for b in dec.blocks]})
    return 0


def cmd_matroid(args) -> int:
    base = os.path.dirname(os.path.abspath(args.matroid))

    def read_file(name: str) -> str:
        with open(os.path.join(base, name), "r", encoding="utf-8") as f:
            return f.read()

    with open(args.matroid, "r", encoding="utf-8") as f:
        m, w = parse_matroid(f.read(), read_file)
    if args.dual:
        m = matroid_dual(m)
    out = {"name": m.name, "elements": sorted(m.ground),
           "rank": m.full_rank,
           "two_connected": m.is_2connected(),
           "element_classes": {str(e): m.classify_element(e)
                               for e in sorted(m.ground)}}
    if args.subset is not None:
        subset = [int(x) for x in args.subset.split(",") if x != ""]
        out["subset"] = subset
        out["subset_rank"] = m.rank(subset)
    if args.q is not None:
        if not w:
            raise SystemExit("error: evaluation needs weights in the file")
        out["ztilde"] = str(z_matroid_expansion(m, rat(args.q), w))
    _emit(out)
    return 0


# ---------------------------------------------------------------------------
# Argument parsing

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tuttepoly",
        description="Exact multivariate Tutte polynomial toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    pe = sub.add_parser("eval", help="evaluate Z(q, v) on a graph")
    pe.add_argument("graph")
    pe.add_argument("--q", required=True)
    pe.add_argument("--v", default=None, help="uniform edge weight p/q")
    pe.add_argument("--route", default="all",
                    choices=["expansion", "delcon", "coloring", "all"])
    pe.set_defaults(func=cmd_eval)

    pp = sub.add_parser("poly", help="specialized polynomials")
    pp.add_argument("graph")
    group = pp.add_mutually_exclusive_group()
    group.add_argument("--chromatic", action="store_true")
    group.add_argument("--flow", action="store_true")
    group.add_argument("--tutte", action="store_true")
    group.add_argument("--coeffs", action="store_true")
    pp.add_argument("--v", default=None)
    pp.set_defaults(func=cmd_poly)

    pr = sub.add_parser("regions", help="interval-endpoint curves as CSV")
    pr.add_argument("--q-grid", nargs=3, required=True,
                    metavar=("START", "STOP", "STEP"))
    pr.add_argument("--width", default=None)
    pr.set_defaults(func=cmd_regions)

    pm = sub.add_parser("map", help="weight-map algebra")
    pm.add_argument("--op", required=True,
                    choices=["par", "ser", "dual", "diamond"])
    pm.add_argument("--q", default=None)
    pm.add_argument("--v", nargs="+", required=True)
    pm.set_defaults(func=cmd_map)

    pc = sub.add_parser("certify", help="run the sign-theorem suites")
    pc.add_argument("--suite", default="all")
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--bounds", default="default", choices=sorted(BOUNDS))
    pc.add_argument("--poison", action="store_true",
                    help="negative control: flip one check per suite")
    pc.set_defaults(func=cmd_certify)

    ph = sub.add_parser("hunt", help="exploratory sign sweep in a region")
    ph.add_argument("--region", required=True, choices=list("abcde"))
    ph.add_argument("--q", required=True)
    ph.add_argument("--v", required=True)
    ph.add_argument("--max-edges", type=int, default=5)
    ph.set_defaults(func=cmd_hunt)

    pb = sub.add_parser("blocks", help="block decomposition of a graph")
    pb.add_argument("graph")
    pb.set_defaults(func=cmd_blocks)

    pt = sub.add_parser("matroid", help="matroid rank/dual/connectivity")
    pt.add_argument("matroid")
    pt.add_argument("--dual", action="store_true")
    pt.add_argument("--subset", default=None,
                    help="comma-separated element ids")
    pt.add_argument("--q", default=None,
                    help="evaluate Zt at this q (weights from the file)")
    pt.set_defaults(func=cmd_matroid)

    for parser in (p, pe, pp, pr, pm, pc, ph, pb, pt):
        parser._negative_number_matcher = _NEGATIVE_RATIONAL

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
