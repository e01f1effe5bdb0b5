"""Command line front end.

Four subcommands: ``dims`` tabulates cohomology dimensions against the
closed form, ``relations`` computes relation vectors by one or all of
the three oracles, ``graphs`` runs the graph-identity suites, ``export``
writes machine-readable files.  Exit status is 0 exactly when every
asserted identity passed.  Output is deterministic for fixed inputs.

The environment variable GRT2_THREADS bounds the number of worker
threads used for per-weight fan-out (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .liealg import bracket_kernel, schneps_check
from .linalg import span_equal
from .theta import (
    closed_form_dim,
    cohomology_dim,
    relation_space,
    relation_space_psi,
)

SCHEMA_VERSION = 1

ORACLES = {
    "psi": relation_space_psi,
    "rank": relation_space,
    "ihara": bracket_kernel,
}


def _thread_count():
    raw = os.environ.get("GRT2_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    """Apply fn over items, fanning out across threads but returning
    results in input order.
    """
    workers = _thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# -- dims --------------------------------------------------------------------


def dims_rows(max_weight, degree):
    def one(k):
        dim = cohomology_dim(degree, k)
        closed = closed_form_dim(degree, k)
        return {
            "weight": k,
            "degree": degree,
            "dim": dim,
            "closed_form": closed,
            "match": dim == closed,
        }

    return _map_ordered(one, list(range(1, max_weight + 1)))


def _emit_dims(rows, fmt, out):
    if fmt == "json":
        out.write(json.dumps({"schema": SCHEMA_VERSION, "rows": rows},
                             indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        out.write("weight,degree,dim,closed_form,match\n")
        for r in rows:
            out.write("%d,%d,%d,%d,%s\n" % (
                r["weight"], r["degree"], r["dim"], r["closed_form"],
                str(r["match"]).lower()))
    else:
        out.write("weight  degree  dim  closed_form  match\n")
        for r in rows:
            out.write("%6d  %6d  %3d  %11d  %s\n" % (
                r["weight"], r["degree"], r["dim"], r["closed_form"],
                "ok" if r["match"] else "MISMATCH"))


def cmd_dims(args):
    rows = dims_rows(args.max_weight, args.degree)
    _emit_dims(rows, args.format, sys.stdout)
    return 0 if all(r["match"] for r in rows) else 1


# -- relations ---------------------------------------------------------------


def relations_report(weight, oracle):
    """Relation vectors for one weight; with oracle 'all' the three
    derivations are cross-checked for span equality and every vector is
    run through the symmetry criterion.
    """
    report = {"weight": weight, "status": "pass", "vectors": {}}
    names = list(ORACLES) if oracle == "all" else [oracle]
    spaces = {name: ORACLES[name](weight) for name in names}
    for name, vecs in spaces.items():
        report["vectors"][name] = [list(v.coeffs) for v in vecs]
    if oracle == "all":
        base = [[Fraction(c) for c in v.coeffs] for v in spaces["rank"]]
        for name in ("psi", "ihara"):
            other = [[Fraction(c) for c in v.coeffs] for v in spaces[name]]
            if not span_equal(base, other):
                report["status"] = "oracle-disagreement:%s" % name
        for vecs in spaces.values():
            for v in vecs:
                if not schneps_check(v):
                    report["status"] = "symmetry-criterion-failed"
    return report


def cmd_relations(args):
    if args.weight is not None:
        weights = [args.weight]
    else:
        weights = list(range(8, args.max_weight + 1, 2))
    for k in weights:
        if k % 2 != 0 or k < 8:
            print("error: relation weights are even and >= 8, got %d" % k,
                  file=sys.stderr)
            return 2
    reports = _map_ordered(
        lambda k: relations_report(k, args.oracle), weights)
    failed = False
    for rep in reports:
        shown = sorted(rep["vectors"])
        for name in shown:
            vecs = rep["vectors"][name]
            if vecs:
                body = "; ".join(str(tuple(v)) for v in vecs)
            else:
                body = "(none)"
            print("weight %d  %-5s  %s" % (rep["weight"], name, body))
        if rep["status"] != "pass":
            failed = True
            print("weight %d  FAIL: %s" % (rep["weight"], rep["status"]))
        elif args.oracle == "all":
            print("weight %d  oracles agree, symmetry criterion passed"
                  % rep["weight"])
    return 1 if failed else 0


# -- graphs ------------------------------------------------------------------


def _theta_shapes(grade, max_weight):
    maxdeg = max_weight - (2 - grade)
    shapes = set()
    for c1 in range(maxdeg + 1):
        for c2 in range(maxdeg + 1 - c1):
            for c3 in range(maxdeg + 1 - c1 - c2):
                total = c1 + c2 + c3
                if total < 1 or total > maxdeg:
                    continue
                key = tuple(sorted((c1, c2, c3), reverse=True))
                if sum(1 for c in key if c == 0) > 1:
                    continue
                shapes.add(key)
    return sorted(shapes)


def check_d_squared(weight_cap):
    from .graphs.build import theta_graph
    from .graphs.ops import icg_differential, icg_differential_raw

    results = []
    for grade in (0, 1):
        for counts in _theta_shapes(grade, weight_cap):
            d1 = icg_differential_raw(theta_graph(grade, counts))
            ok = icg_differential(d1).is_zero()
            results.append(("d0^2 theta grade %d %s" % (grade, counts), ok))
    return results


def check_encoding(weight_cap):
    from .graphs.build import theta_graph
    from .graphs.ops import (icg_differential_raw, theta_graph_encode,
                             theta_sum_encode)
    from .poly import Poly3
    from .theta import ThetaElement, d0_theta

    results = []
    for grade in (0, 1):
        for counts in _theta_shapes(grade, weight_cap):
            g = theta_graph(grade, counts)
            image = theta_sum_encode(icg_differential_raw(g))
            lhs = image.get(grade + 1, ThetaElement(grade + 1, Poly3.zero()))
            rhs = d0_theta(theta_graph_encode(g))
            results.append(
                ("encode d0 = d0 encode, grade %d %s" % (grade, counts),
                 lhs.value == rhs.value))
    return results


def check_bowtie(_cap):
    from .graphs.ops import (bowtie_difference, filtration_value,
                             gc2_bracket, wheel_class)

    results = []
    br = gc2_bracket(wheel_class(3), wheel_class(5))
    results.append(
        ("[w3,w5] every term at filtration level >= 2",
         all(filtration_value(c.graph) >= 2 for c in br.terms)))
    level2 = br.restrict(lambda c: filtration_value(c.graph) == 2)
    diff = bowtie_difference(3, 5)
    ok = set(level2.terms) == set(diff.terms)
    if ok:
        ratios = {level2.terms[c] / diff.terms[c] for c in diff.terms}
        ok = len(ratios) == 1 and 0 not in ratios
    results.append(
        ("level-2 part of [w3,w5] is a nonzero multiple of the "
         "bowtie difference", ok))
    return results


def check_filtration(size_cap):
    from .graphs.build import wheel
    from .graphs.ops import filtration_value, gc2_bracket, wheel_class

    results = []
    for s in (3, 5, 7):
        results.append(("wheel(%d) at filtration level 1" % s,
                        filtration_value(wheel(s)) == 1))
    pairs = [(3, 5)]
    if size_cap >= 11:
        pairs.append((3, 7))
    for a, b in pairs:
        br = gc2_bracket(wheel_class(a), wheel_class(b))
        results.append(
            ("[w%d,w%d] every term at filtration level >= 2" % (a, b),
             all(filtration_value(c.graph) >= 2 for c in br.terms)))
    return results


def check_theta_identity(_cap):
    from .graphs.build import figure_eight, theta_graph
    from .graphs.canon import canonicalize
    from .graphs.core import GraphSum
    from .graphs.ops import (bowtie_difference, icg_differential_raw,
                             mark_one_external, two_loop_part)

    results = []
    for i2, j2 in ((2, 4), (2, 6), (4, 6)):
        image = icg_differential_raw(figure_eight(i2, j2))
        cls, sign = canonicalize(theta_graph(1, (i2, j2, 0)))
        marked = two_loop_part(
            mark_one_external(bowtie_difference(i2 + 1, j2 + 1)))
        ok = image == marked + GraphSum({cls: 4 * sign})
        results.append(
            ("d0 E(%d,%d) = D(%d,%d) + 4 theta(%d,%d)"
             % (i2, j2, i2 + 1, j2 + 1, i2, j2), ok))
    return results


GRAPH_CHECKS = {
    "d-squared": check_d_squared,
    "encoding": check_encoding,
    "bowtie": check_bowtie,
    "filtration": check_filtration,
    "theta-identity": check_theta_identity,
}


def cmd_graphs(args):
    if args.size_cap > 12:
        print("error: --size-cap is limited to 12", file=sys.stderr)
        return 2
    results = GRAPH_CHECKS[args.check](args.size_cap)
    ok = True
    for name, passed in results:
        print("%s  %s" % ("pass" if passed else "FAIL", name))
        ok = ok and passed
    return 0 if ok else 1


# -- export ------------------------------------------------------------------


def _write_atomic(path, text):
    tmp = path + ".partial"
    try:
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def _graph_from_spec(spec):
    from .graphs.build import figure_eight, theta_graph, wheel

    kind, _, rest = spec.partition(":")
    if kind == "wheel":
        return wheel(int(rest))
    if kind == "theta":
        grade_s, _, counts_s = rest.partition(":")
        counts = tuple(int(c) for c in counts_s.split(","))
        return theta_graph(int(grade_s), counts)
    if kind == "figure-eight":
        c1, c2 = (int(c) for c in rest.split(","))
        return figure_eight(c1, c2)
    raise ValueError(
        "graph spec must be wheel:<spokes>, theta:<grade>:<k1>,<k2>,<k3> "
        "or figure-eight:<c1>,<c2>; got %r" % spec)


def cmd_export(args):
    from .graphs.core import graph_to_text

    try:
        if args.what == "relations":
            if args.weight is None:
                print("error: export relations needs --weight",
                      file=sys.stderr)
                return 2
            vectors = relation_space(args.weight)
            payload = {
                "schema": SCHEMA_VERSION,
                "weight": args.weight,
                "vectors": [[[int(c), 1] for c in v.coeffs]
                            for v in vectors],
            }
            text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
        elif args.what == "dims":
            if args.max_weight is None:
                print("error: export dims needs --max-weight",
                      file=sys.stderr)
                return 2
            degrees = [args.degree] if args.degree is not None else [0, 1, 2]
            rows = []
            for deg in degrees:
                rows.extend(dims_rows(args.max_weight, deg))
            rows.sort(key=lambda r: (r["weight"], r["degree"]))
            if args.format == "json":
                text = json.dumps({"schema": SCHEMA_VERSION, "rows": rows},
                                  indent=2, sort_keys=True) + "\n"
            else:
                lines = ["weight,degree,dim,closed_form,match"]
                for r in rows:
                    lines.append("%d,%d,%d,%d,%s" % (
                        r["weight"], r["degree"], r["dim"],
                        r["closed_form"], str(r["match"]).lower()))
                text = "\n".join(lines) + "\n"
        else:
            if args.graph is None:
                print("error: export graph needs --graph", file=sys.stderr)
                return 2
            text = graph_to_text(_graph_from_spec(args.graph))
        _write_atomic(args.out, text)
    except (OSError, ValueError) as exc:
        print("error: export to %s failed: %s" % (args.out, exc),
              file=sys.stderr)
        return 1
    print("wrote %s" % args.out)
    return 0


# -- parser ------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="grt2",
        description="Exact two-loop graph cohomology and depth-2 bracket "
                    "relations.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="cohomology dimension table")
    p.add_argument("--max-weight", type=int, default=51)
    p.add_argument("--degree", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--format", choices=("text", "csv", "json"),
                   default="text")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("relations", help="relation vectors per weight")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--weight", type=int)
    group.add_argument("--max-weight", type=int, default=28)
    p.add_argument("--oracle", choices=("psi", "rank", "ihara", "all"),
                   default="all")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("graphs", help="graph-complex property suites")
    p.add_argument("--check", choices=sorted(GRAPH_CHECKS), required=True)
    p.add_argument("--size-cap", type=int, default=12)
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("export", help="write machine-readable files")
    p.add_argument("--what", choices=("relations", "dims", "graph"),
                   required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "csv", "graphtext"),
                   default="json")
    p.add_argument("--weight", type=int)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--degree", type=int, choices=(0, 1, 2))
    p.add_argument("--graph",
                   help="wheel:<s> | theta:<grade>:<k1>,<k2>,<k3> | "
                        "figure-eight:<c1>,<c2>")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
