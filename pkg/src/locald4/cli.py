"""Batch command line: one subcommand per module surface, JSON on stdout.

Exit codes: 0 when every assertion in scope passed, 1 when one failed,
2 when the invocation or an input file is unusable.  Reports are
deterministic apart from the wall-time fields.  Every reported number
carries a provenance tag: "cited" for values quoted from the literature,
"derived" for values computed here, "trivial" for restatements of input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

from . import __version__
from .autiso import are_isomorphic, automorphism_group
from .catalog import dihedral, symmetric
from .classify import _case_c_relation, classify, classify_cubic, \
    reproduce_tables, table_rows
from .errors import InvalidParams, LocalD4Error
from .families import (
    ActedGraph,
    CrsParams,
    GammaTParams,
    build_c333,
    build_crs,
    build_gamma,
)
from .fpgroups import (
    Presentation,
    load_presentation,
    parse_word,
    todd_coxeter,
)
from .graphs import Graph, girth, is_connected, load_graph, save_graph, \
    valency_list
from .localaction import is_arc_transitive, is_vertex_transitive, local_action
from .operators import (
    arc_graph,
    bipartite_double,
    hill_capping,
    line_graph,
    seed,
    squared_arc_graph,
    three_arc_graph,
)
from .perm import PermGroup, Permutation, load_group, parse_group, save_group
from .ranks import (
    bound_threshold,
    dagger_inequality,
    e_sym_alt,
    lemma41_check,
    simple_group_entry,
    two_rank_bruteforce,
)
from .splitmerge import merge, merge_split_isomorphism, split

_TAGS = ("cited", "derived", "trivial")


def _v(value, tag: str) -> dict:
    assert tag in _TAGS
    return {"value": value, "tag": tag}


def _report(command: str, inputs: dict) -> dict:
    return {"command": command, "inputs": inputs, "values": {},
            "assertions": [], "outputs": {}}


def _check(report: dict, name: str, passed: bool) -> bool:
    report["assertions"].append({"name": name, "passed": bool(passed)})
    return bool(passed)


def _ok(report: dict) -> bool:
    return all(a["passed"] for a in report["assertions"])


def _stem(path: str) -> str:
    name = path.rsplit("/", 1)[-1]
    return name.rsplit(".", 1)[0] if "." in name else name


def _acted(graph: Graph, group: PermGroup, tag: str) -> ActedGraph:
    try:
        return ActedGraph(graph, group, ("cli", tag))
    except AssertionError as exc:
        raise InvalidParams(f"group does not act on the graph: {exc}") \
            from None


def _graph_summary(report: dict, g: Graph) -> None:
    report["values"]["order"] = _v(g.n, "trivial")
    report["values"]["valencies"] = _v(
        {str(d): c for d, c in sorted(Counter(valency_list(g)).items())},
        "trivial")
    report["values"]["connected"] = _v(is_connected(g), "derived")


def _write_pair(report: dict, ag: ActedGraph, prefix: str) -> None:
    save_graph(ag.graph, prefix + ".edges")
    save_group(ag.group, prefix + ".group")
    report["outputs"]["graph_file"] = prefix + ".edges"
    report["outputs"]["group_file"] = prefix + ".group"


# ---------------------------------------------------------------------------
# subcommands


def cmd_graph_info(args) -> tuple[dict, bool]:
    g = load_graph(args.path)
    report = _report("graph info", {"path": args.path})
    _graph_summary(report, g)
    report["values"]["num_edges"] = _v(g.num_edges, "trivial")
    report["values"]["girth"] = _v(girth(g), "derived")
    return report, True


_DERIVE_OPS = {
    "line": line_graph,
    "bipartite-double": bipartite_double,
    "arc": arc_graph,
    "three-arc": three_arc_graph,
    "hill-capping": hill_capping,
    "squared-arc": squared_arc_graph,
}


def cmd_derive(args) -> tuple[dict, bool]:
    g = load_graph(args.path)
    derived = _DERIVE_OPS[args.op](g)
    report = _report("derive", {"op": args.op, "path": args.path})
    _graph_summary(report, derived)
    prefix = args.out_prefix or f"{args.op}-{_stem(args.path)}"
    save_graph(derived, prefix + ".edges")
    report["outputs"]["graph_file"] = prefix + ".edges"
    return report, True


def cmd_family(args) -> tuple[dict, bool]:
    if args.which == "crs":
        if args.r is None or args.s is None:
            raise InvalidParams("family crs needs --r and --s")
        ag = build_crs(CrsParams(args.r, args.s))
        expected = args.r * 2 ** args.s
        prefix = args.out_prefix or f"crs-r{args.r}-s{args.s}"
        inputs = {"family": "crs", "r": args.r, "s": args.s}
    elif args.which == "gamma":
        if args.t is None or args.sign is None:
            raise InvalidParams("family gamma needs --t and --sign")
        ag = build_gamma(GammaTParams(args.t, args.sign),
                         max_cosets=args.max_cosets)
        expected = args.t * 2 ** (args.t + 2)
        word = "plus" if args.sign == "+" else "minus"
        prefix = args.out_prefix or f"gamma-t{args.t}-{word}"
        inputs = {"family": "gamma", "t": args.t, "sign": args.sign}
    else:
        ag = build_c333()
        expected = 81
        prefix = args.out_prefix or "c333"
        inputs = {"family": "c333"}

    report = _report("family", inputs)
    _graph_summary(report, ag.graph)
    report["values"]["expected_order"] = _v(expected, "cited")
    report["values"]["group_order"] = _v(ag.group.order, "derived")
    _check(report, "vertex-count", ag.graph.n == expected)
    if _check(report, "vertex-transitive", is_vertex_transitive(ag)):
        report["values"]["stabilizer_order"] = _v(
            ag.group.order // ag.graph.n, "derived")
    _write_pair(report, ag, prefix)
    return report, _ok(report)


def cmd_coset_enum(args) -> tuple[dict, bool]:
    p = load_presentation(args.path)
    names = {name: i + 1 for i, name in enumerate(p.generator_names)}
    words = [parse_word(w, names) for w in args.subgroup]
    ct = todd_coxeter(p, words, max_cosets=args.max_cosets)
    report = _report("coset-enum", {
        "path": args.path, "subgroup": list(args.subgroup),
        "max_cosets": args.max_cosets,
    })
    report["values"]["index"] = _v(ct.num_cosets, "derived")
    report["values"]["closed"] = _v(ct.closed, "derived")
    _check(report, "table-closed", ct.closed)
    return report, _ok(report)


def cmd_local(args) -> tuple[dict, bool]:
    g = load_graph(args.graph)
    grp = load_group(args.group)
    ag = _acted(g, grp, args.graph)
    rep = local_action(ag, args.vertex)
    report = _report("local", {
        "graph": args.graph, "group": args.group, "vertex": args.vertex,
    })
    vals = report["values"]
    vals["neighbourhood"] = _v(list(rep.neighbourhood), "trivial")
    vals["induced_order"] = _v(rep.induced_group.order, "derived")
    vals["kernel_order"] = _v(rep.kernel_order, "derived")
    vals["stabilizer_order"] = _v(
        rep.induced_group.order * rep.kernel_order, "derived")
    vals["local_type"] = _v(repr(rep.local_type), "derived")
    vals["vertex_transitive"] = _v(is_vertex_transitive(ag), "derived")
    vals["arc_transitive"] = _v(is_arc_transitive(ag), "derived")
    return report, True


def cmd_aut(args) -> tuple[dict, bool]:
    g = load_graph(args.path)
    if g.n > args.max_vertices:
        raise InvalidParams(
            f"{g.n} vertices exceeds --max-vertices {args.max_vertices}")
    aut = automorphism_group(g, node_limit=args.node_limit)
    report = _report("aut", {"path": args.path})
    report["values"]["order"] = _v(aut.order, "derived")
    report["values"]["transitive"] = _v(aut.is_transitive(), "derived")
    report["values"]["generators"] = _v(
        [list(p.images) for p in aut.generators], "derived")
    return report, True


def cmd_iso(args) -> tuple[dict, bool]:
    g1 = load_graph(args.path1)
    g2 = load_graph(args.path2)
    witness = are_isomorphic(g1, g2, node_limit=args.node_limit)
    report = _report("iso", {"path1": args.path1, "path2": args.path2})
    report["values"]["isomorphic"] = _v(witness is not None, "derived")
    report["values"]["witness"] = _v(witness, "derived")
    return report, True


def cmd_split(args) -> tuple[dict, bool]:
    g = load_graph(args.graph)
    grp = load_group(args.group)
    ag = _acted(g, grp, args.graph)
    out = split(ag)
    report = _report("split", {"graph": args.graph, "group": args.group})
    _graph_summary(report, out.graph)
    m_in = grp.order // g.n
    m_out = out.group.order // out.graph.n
    report["values"]["stabilizer_order"] = _v(m_out, "derived")
    _check(report, "vertex-count-doubles", out.graph.n == 2 * g.n)
    _check(report, "stabilizer-halves", 2 * m_out == m_in)
    _check(report, "group-order-preserved", out.group.order == grp.order)
    prefix = args.out_prefix or f"split-{_stem(args.graph)}"
    _write_pair(report, out, prefix)
    return report, _ok(report)


def cmd_merge(args) -> tuple[dict, bool]:
    g = load_graph(args.graph)
    grp = load_group(args.group)
    ag = _acted(g, grp, args.graph)
    out = merge(ag)
    report = _report("merge", {"graph": args.graph, "group": args.group})
    _graph_summary(report, out.graph)
    m_in = grp.order // g.n
    m_out = out.group.order // out.graph.n
    report["values"]["stabilizer_order"] = _v(m_out, "derived")
    _check(report, "vertex-count-halves", 2 * out.graph.n == g.n)
    _check(report, "stabilizer-doubles", m_out == 2 * m_in)
    _check(report, "group-order-preserved", out.group.order == grp.order)
    prefix = args.out_prefix or f"merge-{_stem(args.graph)}"
    _write_pair(report, out, prefix)
    return report, _ok(report)


def cmd_rank(args) -> tuple[dict, bool]:
    grp = load_group(args.path)
    rec = two_rank_bruteforce(grp, cap=args.cap,
                              tag=args.tag or _stem(args.path))
    report = _report("rank", {"path": args.path, "cap": args.cap})
    report["values"]["group_order"] = _v(grp.order, "trivial")
    report["values"]["rank"] = _v(rec.r_g, "derived")
    report["values"]["e"] = _v(rec.e_g, "derived")
    report["values"]["method"] = _v(rec.method, "trivial")
    return report, True


def cmd_dagger(args) -> tuple[dict, bool]:
    entry = simple_group_entry(args.entry)
    holds = dagger_inequality(entry, args.l)
    report = _report("dagger", {"entry": args.entry, "l": args.l})
    src_tag = "derived" if entry.source == "computed" else "cited"
    vals = report["values"]
    vals["order"] = _v(entry.order, src_tag)
    vals["odd_part"] = _v(entry.odd_part, src_tag)
    vals["e_aut_upper"] = _v(entry.e_aut_upper, src_tag)
    vals["source"] = _v(entry.source, "trivial")
    vals["holds"] = _v(holds, "derived")
    return report, True


def cmd_bound(args) -> tuple[dict, bool]:
    if args.gv < 2 or args.order < 1:
        raise InvalidParams("need --gv >= 2 and --order >= 1")
    relation = _case_c_relation(args.order, args.gv)
    report = _report("bound", {"gv": args.gv, "order": args.order})
    vals = report["values"]
    if args.gv >= 8 and args.gv & (args.gv - 1) == 0:
        vals["threshold"] = _v(bound_threshold(args.gv).threshold, "derived")
    else:
        vals["threshold"] = _v(None, "derived")
    vals["relation"] = _v(relation, "derived")
    vals["meets_bound"] = _v(relation in ("=", ">"), "derived")
    vals["equality"] = _v(relation == "=", "derived")
    return report, True


def cmd_classify(args) -> tuple[dict, bool]:
    g = load_graph(args.graph)
    grp = load_group(args.group)
    ag = _acted(g, grp, args.graph)
    report = _report("classify", {
        "graph": args.graph, "group": args.group, "cubic": args.cubic,
    })
    verdict = classify_cubic(ag) if args.cubic else classify(ag)
    report["verdict"] = verdict.as_dict()
    report["values"]["cases"] = _v(list(verdict.clauses() if args.cubic
                                        else verdict.cases()), "derived")
    _check(report, "classification-total", bool(report["values"]["cases"]
                                                ["value"]))
    return report, _ok(report)


def cmd_reproduce_tables(args) -> tuple[dict, bool]:
    if args.rows is not None:
        known = set(table_rows(include_large=True))
        unknown = sorted(set(args.rows) - known)
        if unknown:
            raise InvalidParams(f"unknown rows {unknown}; "
                                f"known: {sorted(known)}")
    rep = reproduce_tables(rows=args.rows, include_large=args.include_large)
    report = _report("reproduce-tables", {
        "rows": args.rows, "include_large": args.include_large,
    })
    report["rows"] = [r.as_dict() for r in rep.rows]
    for r in rep.rows:
        _check(report, f"row {r.row_id}", r.passed)
    report["values"]["rows_passed"] = _v(
        sum(r.passed for r in rep.rows), "derived")
    report["values"]["rows_total"] = _v(len(rep.rows), "trivial")
    return report, rep.passed


# ---------------------------------------------------------------------------
# selftest corpus


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _assert_identity_laws() -> None:
    e = Permutation.identity(5)
    assert all(e(i) == i for i in range(5)) and e.order() == 1
    p = Permutation([1, 2, 0, 4, 3])
    q = Permutation([0, 2, 1, 3, 4])
    assert (p * q) * (p * q).inverse() == e
    assert p.inverse() * p == e


def _assert_group_orders() -> None:
    assert symmetric(4).order == 24
    assert dihedral(4).order == 8


def _assert_cycle_info() -> None:
    g = _cycle(5)
    assert is_connected(g) and girth(g) == 5
    assert valency_list(g) == [2] * 5


def _assert_petersen_seed() -> None:
    g = seed("Petersen").graph
    assert g.n == 10 and valency_list(g) == [3] * 10 and girth(g) == 5


def _assert_line_of_k4() -> None:
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    lg = line_graph(k4)
    assert lg.n == 6 and valency_list(lg) == [4] * 6


def _assert_dihedral_enumeration() -> None:
    p = Presentation(["a", "b"], [(1,) * 4, (2, 2), (1, 2, 1, 2)])
    assert todd_coxeter(p, []).num_cosets == 8
    assert todd_coxeter(p, [(1,)]).num_cosets == 2


def _assert_crs_small() -> None:
    ag = build_crs(CrsParams(3, 1))
    assert ag.graph.n == 6 and ag.group.order == 48


def _assert_format_round_trip() -> None:
    from .graphs import format_graph, parse_graph
    g = seed("Petersen").graph
    assert parse_graph(format_graph(g)).adj == g.adj
    s3 = symmetric(3)
    from .perm import format_group
    assert parse_group(format_group(s3)).order == 6


def _assert_threshold_values() -> None:
    bt = bound_threshold(8)
    assert (bt.k, bt.threshold) == (3, 32)
    assert e_sym_alt(5) == 4 and e_sym_alt(5, alternating=True) == 4


def _assert_two_rank_sym5() -> None:
    assert two_rank_bruteforce(symmetric(5)).e_g == 4


def _assert_gamma2_equality() -> None:
    v = classify(build_gamma(GammaTParams(2, "+")))
    assert v.num_vertices == 32 and v.case_c == "equality"


def _assert_round_trip_wreath() -> None:
    ag = build_crs(CrsParams(6, 1))
    witness = merge_split_isomorphism(ag)
    assert sorted(witness) == list(range(ag.graph.n))


def _assert_first_table_row() -> None:
    assert reproduce_tables(rows=["Line(F6)"]).passed


def _assert_dagger_worked_case() -> None:
    entry = simple_group_entry("Alt(5)")
    assert [dagger_inequality(entry, l) for l in range(1, 7)] \
        == [False] * 4 + [True] * 2


def _assert_lemma41_dihedral() -> None:
    rep = lemma41_check(dihedral(4))
    assert rep.passed and rep.witness_e == 4


_SELFTEST = (
    ("identity-laws", "trivial", _assert_identity_laws),
    ("group-orders", "trivial", _assert_group_orders),
    ("cycle-info", "trivial", _assert_cycle_info),
    ("petersen-seed", "trivial", _assert_petersen_seed),
    ("line-of-k4", "trivial", _assert_line_of_k4),
    ("dihedral-enumeration", "trivial", _assert_dihedral_enumeration),
    ("wreath-family-small", "trivial", _assert_crs_small),
    ("format-round-trip", "trivial", _assert_format_round_trip),
    ("threshold-values", "trivial", _assert_threshold_values),
    ("two-rank-sym5", "derived", _assert_two_rank_sym5),
    ("gamma2-equality", "derived", _assert_gamma2_equality),
    ("split-merge-round-trip", "derived", _assert_round_trip_wreath),
    ("first-table-row", "derived", _assert_first_table_row),
    ("dagger-worked-case", "derived", _assert_dagger_worked_case),
    ("lemma41-dihedral", "derived", _assert_lemma41_dihedral),
)


def cmd_selftest(args) -> tuple[dict, bool]:
    report = _report("selftest", {"quick": args.quick})
    for name, tag, fn in _SELFTEST:
        if args.quick and tag != "trivial":
            continue
        try:
            fn()
            passed = True
        except AssertionError as exc:
            print(f"selftest {name}: {exc}", file=sys.stderr)
            passed = False
        report["assertions"].append(
            {"name": name, "tag": tag, "passed": passed})
    report["values"]["checks_passed"] = _v(
        sum(a["passed"] for a in report["assertions"]), "derived")
    report["values"]["checks_total"] = _v(
        len(report["assertions"]), "trivial")
    return report, _ok(report)


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locald4",
        description="exact checks for stabiliser bounds in 4-valent "
                    "arc-transitive and cubic vertex-transitive graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="graph file utilities")
    gsub = p.add_subparsers(dest="graph_command", required=True)
    p = gsub.add_parser("info", help="order, degrees, connectivity, girth")
    p.add_argument("path")
    p.set_defaults(func=cmd_graph_info)

    p = sub.add_parser("derive", help="apply a graph operator")
    p.add_argument("op", choices=sorted(_DERIVE_OPS))
    p.add_argument("path")
    p.add_argument("--out-prefix", default="")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("family", help="build a catalogued family member")
    p.add_argument("which", choices=["crs", "gamma", "c333"])
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--sign", choices=["+", "-"])
    p.add_argument("--max-cosets", type=int, default=1_000_000)
    p.add_argument("--out-prefix", default="")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("coset-enum", help="enumerate cosets of a subgroup")
    p.add_argument("path")
    p.add_argument("--subgroup", nargs="*", default=[],
                   help="subgroup generators as words, e.g. 'a b^2'")
    p.add_argument("--max-cosets", type=int, default=1_000_000)
    p.set_defaults(func=cmd_coset_enum)

    p = sub.add_parser("local", help="local action at a vertex")
    p.add_argument("graph")
    p.add_argument("group")
    p.add_argument("--vertex", type=int, default=0)
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("aut", help="automorphism group of a graph")
    p.add_argument("path")
    p.add_argument("--max-vertices", type=int, default=10_000)
    p.add_argument("--node-limit", type=int, default=1_000_000)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test with witness")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--node-limit", type=int, default=1_000_000)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("split", help="4-valent pair to cubic pair")
    p.add_argument("graph")
    p.add_argument("group")
    p.add_argument("--out-prefix", default="")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("merge", help="cubic pair to 4-valent pair")
    p.add_argument("graph")
    p.add_argument("group")
    p.add_argument("--out-prefix", default="")
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("rank", help="exact 2-rank of a permutation group")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--tag", default="")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("dagger", help="replay the simple-group inequality")
    p.add_argument("--entry", required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_dagger)

    p = sub.add_parser("bound", help="vertex-count bound at a stabiliser "
                                     "order")
    p.add_argument("--gv", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("classify", help="trichotomy verdict for a pair")
    p.add_argument("graph")
    p.add_argument("group")
    p.add_argument("--cubic", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reproduce-tables", help="recompute the census rows")
    p.add_argument("--rows", nargs="*", default=None)
    p.add_argument("--include-large", action="store_true")
    p.set_defaults(func=cmd_reproduce_tables)

    p = sub.add_parser("selftest", help="run the built-in check corpus")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report, ok = args.func(args)
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    except (LocalD4Error, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report["wall_time_s"] = round(time.perf_counter() - t0, 3)
    report["artifact_version"] = __version__
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0 if ok else 1
