"""Constructors for the named 4-valent families with their acting groups.

Three families: the wreath-family graphs on r*2^s vertices acted on by
C2 wr D_r, the coset graphs of the extended extraspecial 2-groups, and the
81-vertex Cayley graph over the extraspecial group of order 81 and
exponent 3.
"""

from dataclasses import dataclass

from .errors import InvalidParams, DegreeMismatch
from .fpgroups import (Presentation, build_gamma_presentation, coset_action,
                       todd_coxeter, action_of_word, commutator_word,
                       free_reduce)
from .graphs import Graph, _cayley_with_elements, _pair_orbit_edges, \
    is_connected, valency_list
from .perm import Permutation, PermGroup

__all__ = [
    "CrsParams", "GammaTParams", "ActedGraph",
    "build_crs", "build_gamma", "build_c333", "crs_graph",
    "recognize_crs", "crs_matches", "crs_params_for_order",
]


@dataclass(frozen=True)
class CrsParams:
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 3:
            raise InvalidParams(f"r must be at least 3, got {self.r}")
        if not 1 <= self.s <= self.r - 1:
            raise InvalidParams(
                f"s must lie in [1, r-1] = [1, {self.r - 1}], got {self.s}")


@dataclass(frozen=True)
class GammaTParams:
    t: int
    sign: str

    def __post_init__(self) -> None:
        if self.t < 2:
            raise InvalidParams(f"t must be at least 2, got {self.t}")
        if self.sign not in ("+", "-"):
            raise InvalidParams(f"sign must be '+' or '-', got {self.sign!r}")


@dataclass(frozen=True)
class ActedGraph:
    """A graph together with a group acting on it by automorphisms."""

    graph: Graph
    group: PermGroup
    provenance: tuple

    def __post_init__(self) -> None:
        if self.group.degree != self.graph.n:
            raise DegreeMismatch(
                f"group degree {self.group.degree} != {self.graph.n} vertices")
        for p in self.group.generators:
            for u, v in self.graph.edges():
                assert self.graph.has_edge(p(u), p(v)), \
                    "group generator does not preserve adjacency"


def _assert_arc_transitive(graph: Graph, group: PermGroup) -> None:
    assert group.is_transitive(), "acting group is not vertex-transitive"
    stab = group.point_stabilizer(0)
    nbrs = graph.neighbors(0)
    assert set(stab.orbit(nbrs[0])) >= set(nbrs), \
        "vertex stabiliser is not transitive on the neighbourhood"


# ---------------------------------------------------------------------------
# the wreath family


def _ring_points(r: int):
    """Base graph of the family: fibers of size 2 over a ring of length r.

    Point (y, i) sits at index 2y + i; (u, i) ~ (v, j) iff v - u = +-1.
    The wreath group C2 wr D_r is generated by one fiber swap, the ring
    rotation and one reflection.
    """
    swap = Permutation.from_cycles(2 * r, [(0, 1)])
    rot = Permutation([2 * ((p // 2 + 1) % r) + p % 2 for p in range(2 * r)])
    refl = Permutation([2 * ((r - p // 2) % r) + p % 2 for p in range(2 * r)])
    edges = set()
    for y in range(r):
        for i in range(2):
            for j in range(2):
                a, b = 2 * y + i, 2 * ((y + 1) % r) + j
                edges.add((min(a, b), max(a, b)))
    return Graph(2 * r, sorted(edges)), [swap, rot, refl]


def _crs_vertices(r: int, s: int):
    """Path encodings and their index map: point tuples through s
    consecutive fibers, fiber coordinate ascending."""
    verts = []
    for y in range(r):
        for bits in range(2 ** s):
            pts = tuple(2 * ((y + k) % r) + ((bits >> (s - 1 - k)) & 1)
                        for k in range(s))
            verts.append(pts)
    return verts, {pts: i for i, pts in enumerate(verts)}


def crs_graph(p: CrsParams) -> Graph:
    """The graph alone, without the acting group; cheap at any r."""
    r, s = p.r, p.s
    if s == 1:
        return _ring_points(r)[0]
    verts, vindex = _crs_vertices(r, s)
    edges = set()
    for pts in verts:
        i = vindex[pts]
        for c in range(2):
            head = 2 * ((pts[-1] // 2 + 1) % r) + c
            j = vindex[pts[1:] + (head,)]
            edges.add((min(i, j), max(i, j)))
    return Graph(len(verts), sorted(edges))


def build_crs(p: CrsParams) -> ActedGraph:
    """Graph on r*2^s vertices with the wreath group C2 wr D_r acting.

    For s >= 2 the vertices are the paths through s consecutive fibers of
    the base graph, one point per fiber; two paths are adjacent when one is
    the other shifted by a single fiber (they overlap in s - 1 points whose
    union is again a path).  Encodings are normalized so the fiber
    coordinate ascends, which makes the induced wreath action computable
    by acting on base points and re-normalizing.
    """
    r, s = p.r, p.s
    graph = crs_graph(p)
    _, gens = _ring_points(r)
    if s == 1:
        group = PermGroup(gens, 2 * r)
    else:
        verts, vindex = _crs_vertices(r, s)

        def induced(h: Permutation) -> Permutation:
            images = [0] * len(verts)
            for i, pts in enumerate(verts):
                q = [h(x) for x in pts]
                if (q[1] // 2 - q[0] // 2) % r != 1:
                    q.reverse()
                images[i] = vindex[tuple(q)]
            return Permutation(images)

        group = PermGroup([induced(h) for h in gens], len(verts))

    assert graph.n == r * 2 ** s
    assert valency_list(graph) == [4] * graph.n and is_connected(graph)
    assert group.order == 2 * r * 2 ** r, "wreath action is not faithful"
    _assert_arc_transitive(graph, group)
    assert group.point_stabilizer(0).order == 2 ** (r - s + 1)
    return ActedGraph(graph, group, ("crs", (r, s)))


# ---------------------------------------------------------------------------
# coset graphs of the extended extraspecial groups


def build_gamma(p: GammaTParams, max_cosets: int = 1_000_000) -> ActedGraph:
    """Coset graph of the order 2^(2t+1) * 4t group over its stabilizer.

    Vertices are the cosets enumerated by build_gamma_presentation; edges
    form the orbit of {H, Ha} under the right-multiplication action.
    """
    t, sign = p.t, p.sign
    pres, sub_words, edge_word = build_gamma_presentation(t, sign)
    ct = todd_coxeter(pres, sub_words, max_cosets=max_cosets)
    n = ct.num_cosets
    group = coset_action(ct)
    ca = ct.trace(0, edge_word)
    edges = _pair_orbit_edges([g.images for g in group.generators], 0, ca)
    graph = Graph(n, sorted(edges))

    assert n == t * 2 ** (t + 2)
    assert group.order == t * 2 ** (2 * t + 3), "stabilizer is not core-free"
    assert valency_list(graph) == [4] * n and is_connected(graph)
    _assert_arc_transitive(graph, group)
    assert group.point_stabilizer(0).order == 2 ** (t + 1)
    return ActedGraph(graph, group, ("gamma", (t, sign)))


# ---------------------------------------------------------------------------
# the 81-vertex Cayley graph


def _extraspecial_81() -> Presentation:
    m1, m2, m3, g = 1, 2, 3, 4
    rels = [
        (m1,) * 3, (m2,) * 3, (m3,) * 3,
        commutator_word((m1,), (m2,)),
        commutator_word((m1,), (m3,)),
        commutator_word((m2,), (m3,)),
        free_reduce((g, g, g, -m3, -m2, -m1)),
        free_reduce((-g, m1, g, -m2)),
        free_reduce((-g, m2, g, -m3)),
        free_reduce((-g, m3, g, -m1)),
    ]
    return Presentation(["m1", "m2", "m3", "g"], rels)


def build_c333() -> ActedGraph:
    """Cayley graph over the group <m1,m2,m3,g> of order 81 with connection
    set {g, g^-1, g*m1, (g*m1)^-1}; the regular group acts on the side that
    commutes with the connection edges."""
    ct = todd_coxeter(_extraspecial_81(), [])
    reg = coset_action(ct)
    assert reg.order == 81 == ct.num_cosets
    pg = action_of_word(ct, (4,))
    pgm1 = action_of_word(ct, (4, 1))
    conn = [pg, pg.inverse(), pgm1, pgm1.inverse()]
    graph, elems = _cayley_with_elements(reg, conn)
    index = {x: i for i, x in enumerate(elems)}
    vgens = [Permutation([index[x * k] for x in elems]) for k in reg.generators]
    group = PermGroup(vgens, len(elems))

    assert graph.n == 81
    assert valency_list(graph) == [4] * 81 and is_connected(graph)
    assert group.order == 81 and group.is_semiregular() and group.is_transitive()
    return ActedGraph(graph, group, ("c333", ()))


# ---------------------------------------------------------------------------
# recognition


def crs_params_for_order(n: int) -> list[CrsParams]:
    """All valid (r, s) with r * 2^s = n, ordered by ascending s."""
    out = []
    s = 1
    while 2 ** s < n:
        if n % 2 ** s == 0:
            r = n // 2 ** s
            if r >= 3 and s <= r - 1:
                out.append(CrsParams(r, s))
        s += 1
    return out


def crs_matches(g: Graph) -> list[CrsParams]:
    """Every parameter pair whose graph is isomorphic to g, ascending s."""
    from .autiso import are_isomorphic
    if not is_connected(g) or valency_list(g) != [4] * g.n:
        return []
    return [p for p in crs_params_for_order(g.n)
            if are_isomorphic(g, crs_graph(p)) is not None]


def recognize_crs(g: Graph):
    """The matching parameter pair with the smallest s, or None."""
    matches = crs_matches(g)
    return matches[0] if matches else None
