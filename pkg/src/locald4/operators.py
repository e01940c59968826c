"""Derived-graph operators on cubic graphs, and the census seed graphs.

Each operator orders the derived vertices canonically by their defining
tuples, so repeated construction is deterministic.  The *_map companions push
a permutation of the base vertices to the induced permutation of the derived
vertices; they are how automorphisms of a seed become automorphisms of a
derived graph without any search.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations

from .errors import SeedInvariantViolated, UnknownSeed
from .graphs import Graph, girth, is_connected, parse_graph, valency_list
from .perm import Permutation


def _arcs(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in g.adj[u]]


# ---------------------------------------------------------------------------
# line graph


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g; two adjacent when they share an endpoint."""
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    out = set()
    for v in range(g.n):
        for a, b in combinations(g.adj[v], 2):
            e1 = index[(min(a, v), max(a, v))]
            e2 = index[(min(b, v), max(b, v))]
            out.add((min(e1, e2), max(e1, e2)))
    labels = [f"{u}-{v}" for u, v in edges]
    return Graph(len(edges), sorted(out), labels=labels)


def line_graph_map(g: Graph, p: Permutation) -> Permutation:
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    images = []
    for u, v in edges:
        a, b = p(u), p(v)
        images.append(index[(min(a, b), max(a, b))])
    return Permutation(images)


# ---------------------------------------------------------------------------
# bipartite double (categorical product with K2); vertex (u, sheet) at 2u+sheet


def bipartite_double(g: Graph) -> Graph:
    edges = []
    for u, v in g.edges():
        edges.append((2 * u, 2 * v + 1))
        edges.append((min(2 * u + 1, 2 * v), max(2 * u + 1, 2 * v)))
    labels = [f"{u}.{i}" for u in range(g.n) for i in (0, 1)]
    return Graph(2 * g.n, sorted(edges), labels=labels)


def bipartite_double_map(g: Graph, p: Permutation, swap: bool = False) -> Permutation:
    """(u, i) -> (p(u), i), or (p(u), 1-i) with the sheet swap."""
    images = [0] * (2 * g.n)
    for u in range(g.n):
        for i in (0, 1):
            images[2 * u + i] = 2 * p(u) + ((1 - i) if swap else i)
    return Permutation(images)


# ---------------------------------------------------------------------------
# arc graph: arcs (u,v), (v,w) adjacent when u != w


def arc_graph(g: Graph) -> Graph:
    arcs = _arcs(g)
    index = {a: i for i, a in enumerate(arcs)}
    out = set()
    for u, v in arcs:
        for w in g.adj[v]:
            if w != u:
                i, j = index[(u, v)], index[(v, w)]
                out.add((min(i, j), max(i, j)))
    labels = [f"{u}>{v}" for u, v in arcs]
    return Graph(len(arcs), sorted(out), labels=labels)


def arc_map(g: Graph, p: Permutation) -> Permutation:
    arcs = _arcs(g)
    index = {a: i for i, a in enumerate(arcs)}
    return Permutation([index[(p(u), p(v))] for u, v in arcs])


# ---------------------------------------------------------------------------
# 3-arc graph: arcs (v1,v2), (w1,w2) adjacent when w1 ~ v1, v1 != w2, v2 != w1


def three_arc_graph(g: Graph) -> Graph:
    arcs = _arcs(g)
    index = {a: i for i, a in enumerate(arcs)}
    out = set()
    for v1, v2 in arcs:
        for w1 in g.adj[v1]:
            if w1 == v2:
                continue
            for w2 in g.adj[w1]:
                if w2 == v1:
                    continue
                i, j = index[(v1, v2)], index[(w1, w2)]
                if i != j:
                    out.add((min(i, j), max(i, j)))
    labels = [f"{u}>{v}" for u, v in arcs]
    return Graph(len(arcs), sorted(out), labels=labels)


three_arc_map = arc_map  # same vertex set, same induced action


# ---------------------------------------------------------------------------
# capped-edge graph: four labeled vertices per edge
#
# Vertex {u_i, v_j} is stored as (min(u,v), its label, max(u,v), its label).
# {u_i, v_j} ~ {v_j, w_{1-i}} whenever u and w are distinct neighbours of v.


def _hc_vertices(g: Graph) -> list[tuple[int, int, int, int]]:
    verts = []
    for a, b in g.edges():
        assert a != b
        for la in (0, 1):
            for lb in (0, 1):
                verts.append((a, la, b, lb))
    return verts


def _hc_key(u: int, lu: int, v: int, lv: int) -> tuple[int, int, int, int]:
    return (u, lu, v, lv) if u < v else (v, lv, u, lu)


def hill_capping(g: Graph) -> Graph:
    verts = _hc_vertices(g)
    index = {t: i for i, t in enumerate(verts)}
    out = set()
    for a, la, b, lb in verts:
        # shared endpoint b_lb, other endpoint w != a among neighbours of b
        for u, lu, v, lv in ((a, la, b, lb), (b, lb, a, la)):
            for w in g.adj[v]:
                if w == u:
                    continue
                i = index[_hc_key(u, lu, v, lv)]
                j = index[_hc_key(v, lv, w, 1 - lu)]
                if i != j:
                    out.add((min(i, j), max(i, j)))
    labels = [f"{a}.{la}|{b}.{lb}" for a, la, b, lb in verts]
    return Graph(len(verts), sorted(out), labels=labels)


def hill_capping_map(g: Graph, p: Permutation) -> Permutation:
    verts = _hc_vertices(g)
    index = {t: i for i, t in enumerate(verts)}
    return Permutation(
        [index[_hc_key(p(a), la, p(b), lb)] for a, la, b, lb in verts])


# ---------------------------------------------------------------------------
# squared arc graph: all ordered pairs of arcs
#
# {(A, S), (S, B)} is an edge whenever A = (v1,v2), B = (v2,v3) with v1 != v3
# and S is any arc; for cubic g every vertex has degree 4.


def squared_arc_graph(g: Graph) -> Graph:
    arcs = _arcs(g)
    m = len(arcs)
    index = {a: i for i, a in enumerate(arcs)}
    out = set()
    for v1, v2 in arcs:
        for v3 in g.adj[v2]:
            if v3 == v1:
                continue
            ia = index[(v1, v2)]
            ib = index[(v2, v3)]
            for s in range(m):
                i = ia * m + s
                j = s * m + ib
                out.add((min(i, j), max(i, j)))
    labels = [f"{arcs[i]}|{arcs[j]}" for i in range(m) for j in range(m)]
    return Graph(m * m, sorted(out), labels=labels)


def squared_arc_map(g: Graph, p: Permutation) -> Permutation:
    """Diagonal action (A, S) -> (p.A, p.S) on ordered arc pairs."""
    arcs = _arcs(g)
    m = len(arcs)
    index = {a: i for i, a in enumerate(arcs)}
    pa = [index[(p(u), p(v))] for u, v in arcs]
    images = [0] * (m * m)
    for i in range(m):
        for j in range(m):
            images[i * m + j] = pa[i] * m + pa[j]
    return Permutation(images)


def squared_arc_swap_map(g: Graph) -> Permutation:
    """(A, S) -> (reverse(S), reverse(A)): the factor-swapping automorphism."""
    arcs = _arcs(g)
    m = len(arcs)
    index = {a: i for i, a in enumerate(arcs)}
    rev = [index[(v, u)] for u, v in arcs]
    images = [0] * (m * m)
    for i in range(m):
        for j in range(m):
            images[i * m + j] = rev[j] * m + rev[i]
    return Permutation(images)


# ---------------------------------------------------------------------------
# seed graphs


@dataclass(frozen=True)
class SeedGraph:
    name: str
    graph: Graph
    expected_order: int
    expected_aut_order: int


def _complete_bipartite_3_3() -> Graph:
    return Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def _petersen() -> Graph:
    pairs = list(combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    edges = [(idx[a], idx[b]) for a, b in combinations(pairs, 2)
             if not set(a) & set(b)]
    return Graph(10, edges, labels=[f"{a}{b}" for a, b in pairs])


def _heawood() -> Graph:
    # incidence graph of the difference-set plane on 7 points: line i = {i, i+1, i+3}
    edges = [((i + d) % 7, i + 7) for i in range(7) for d in (0, 1, 3)]
    return Graph(14, edges)


def _pappus() -> Graph:
    # incidence graph of the 9_3 configuration: points of the order-3 affine
    # plane, lines of the three non-vertical parallel classes
    points = [(x, y) for x in range(3) for y in range(3)]
    pidx = {p: i for i, p in enumerate(points)}
    lines = []
    for slope in range(3):
        for intercept in range(3):
            lines.append(tuple(sorted(pidx[(x, (slope * x + intercept) % 3)]
                                      for x in range(3))))
    edges = []
    for li, line in enumerate(lines):
        for p in line:
            edges.append((p, 9 + li))
    return Graph(18, edges)


def _tutte_coxeter() -> Graph:
    # incidence graph of duads and synthemes of a 6-element set
    duads = list(combinations(range(6), 2))
    didx = {d: i for i, d in enumerate(duads)}
    synthemes = []
    for a in duads:
        if 0 not in a:
            continue
        rest = [x for x in range(6) if x not in a]
        for b in combinations(rest, 2):
            if rest[0] not in b:
                continue
            c = tuple(x for x in rest if x not in b)
            synthemes.append((a, b, c))
    assert len(synthemes) == 15
    edges = []
    for si, syn in enumerate(synthemes):
        for d in syn:
            edges.append((didx[d], 15 + si))
    labels = [f"{a}{b}" for a, b in duads] + [repr(s) for s in synthemes]
    return Graph(30, edges, labels=labels)


_F90_EDGES = (
    "0,1 0,17 0,89 1,2 1,82 2,3 2,39 3,4 3,56 4,5 4,13 5,6 5,78 6,7 6,23 7,8 "
    "7,88 8,9 8,45 9,10 9,62 10,11 10,19 11,12 11,84 12,13 12,29 13,14 14,15 "
    "14,51 15,16 15,68 16,17 16,25 17,18 18,19 18,35 19,20 20,21 20,57 21,22 "
    "21,74 22,23 22,31 23,24 24,25 24,41 25,26 26,27 26,63 27,28 27,80 28,29 "
    "28,37 29,30 30,31 30,47 31,32 32,33 32,69 33,34 33,86 34,35 34,43 35,36 "
    "36,37 36,53 37,38 38,39 38,75 39,40 40,41 40,49 41,42 42,43 42,59 43,44 "
    "44,45 44,81 45,46 46,47 46,55 47,48 48,49 48,65 49,50 50,51 50,87 51,52 "
    "52,53 52,61 53,54 54,55 54,71 55,56 56,57 57,58 58,59 58,67 59,60 60,61 "
    "60,77 61,62 62,63 63,64 64,65 64,73 65,66 66,67 66,83 67,68 68,69 69,70 "
    "70,71 70,79 71,72 72,73 72,89 73,74 74,75 75,76 76,77 76,85 77,78 78,79 "
    "79,80 80,81 81,82 82,83 83,84 84,85 85,86 86,87 87,88 88,89"
)
_F90_DIGEST = "2495c7ed41fa50dead61144f9339950fda10f84a114b8321b39759e60eba760f"


def _f90() -> Graph:
    pairs = [tuple(int(x) for x in tok.split(",")) for tok in _F90_EDGES.split()]
    text = "90 135\n" + "\n".join(f"{u} {v}" for u, v in sorted(pairs)) + "\n"
    digest = hashlib.sha256(text.encode()).hexdigest()
    if digest != _F90_DIGEST:
        raise SeedInvariantViolated("embedded 90-vertex edge list is corrupted")
    return parse_graph(text)


_SEED_BUILDERS = {
    "F6": (_complete_bipartite_3_3, 6, 72),
    "Petersen": (_petersen, 10, 120),
    "Heawood": (_heawood, 14, 336),
    "F18": (_pappus, 18, 216),
    "Tut": (_tutte_coxeter, 30, 1440),
    "F90": (_f90, 90, 4320),
}

_EXPECTED_GIRTH = {"F6": 4, "Petersen": 5, "Heawood": 6, "F18": 6, "Tut": 8, "F90": 10}

_seed_cache: dict[str, SeedGraph] = {}


def seed(name: str) -> SeedGraph:
    """A census seed graph with every stored invariant re-verified."""
    if name not in _SEED_BUILDERS:
        raise UnknownSeed(f"no seed named {name!r}; have {sorted(_SEED_BUILDERS)}")
    if name in _seed_cache:
        return _seed_cache[name]
    builder, order, aut_order = _SEED_BUILDERS[name]
    g = builder()
    if g.n != order:
        raise SeedInvariantViolated(f"{name}: order {g.n}, expected {order}")
    if valency_list(g) != [3] * g.n:
        raise SeedInvariantViolated(f"{name}: not cubic")
    if not is_connected(g):
        raise SeedInvariantViolated(f"{name}: not connected")
    if girth(g) != _EXPECTED_GIRTH[name]:
        raise SeedInvariantViolated(
            f"{name}: girth {girth(g)}, expected {_EXPECTED_GIRTH[name]}")
    from .autiso import automorphism_group

    if automorphism_group(g).order != aut_order:
        raise SeedInvariantViolated(f"{name}: automorphism count mismatch")
    out = SeedGraph(name, g, order, aut_order)
    _seed_cache[name] = out
    return out


def seed_names() -> list[str]:
    return sorted(_SEED_BUILDERS)
