"""The duality between 4-valent arc-transitive pairs with dihedral local
action and cubic vertex-transitive pairs whose local action has order 2.

Split halves the stabiliser and doubles the vertices by gluing each arc to
the unique same-tail arc with an identical stabiliser; Merge is the inverse
quotient by the matching vertex pairing.  Both directions carry the acting
group across and every claim of the construction lemmas is asserted on the
way through.
"""

from dataclasses import dataclass

from .errors import (NotLocallyC23, NotLocallyD4, PairingDegenerate,
                     StabTooSmall)
from .families import ActedGraph
from .graphs import Graph, quotient_graph, quotient_action, valency_list
from .localaction import is_locally_c2_3, is_locally_d4, local_action
from .perm import PermGroup, Permutation, orbits

__all__ = ["ArcPairing", "arc_pairing", "split", "merge", "vertex_pairing",
           "merge_split_isomorphism", "split_merge_isomorphism"]


def _same_subgroup(a: PermGroup, b: PermGroup) -> bool:
    if a.order != b.order:
        return False
    return all(g in b for g in a.generators) and all(g in a for g in b.generators)


@dataclass(frozen=True)
class ArcPairing:
    """Involutory same-tail partner map on the arcs of a graph."""

    arcs: tuple
    partner: dict

    def __post_init__(self) -> None:
        for a in self.arcs:
            b = self.partner[a]
            assert b != a, "pairing must not fix an arc"
            assert b[0] == a[0], "partner must share the tail"
            assert self.partner[b] == a, "pairing must be an involution"

    def block(self, a):
        """Canonical key of the paired-arc vertex: (tail, head, head)."""
        u, v = a
        w = self.partner[a][1]
        return (u, min(v, w), max(v, w))


def arc_pairing(ag: ActedGraph) -> ArcPairing:
    """For each arc (u, v), the unique arc (u, w) with the same stabiliser.

    The pair stabilisers at a common tail both contain the kernel of the
    neighbourhood action, so their equality is decided on the induced
    images: order plus mutual generator membership, per tail.  Uniqueness
    of the partner is asserted per arc.
    """
    graph = ag.graph
    partner = {}
    arcs = []
    for u in range(graph.n):
        la = local_action(ag, u)
        nbrs = la.neighbourhood
        pos = {v: i for i, v in enumerate(nbrs)}
        stabs = {v: la.induced_group.point_stabilizer(pos[v]) for v in nbrs}
        for v in nbrs:
            arcs.append((u, v))
            mates = [w for w in nbrs
                     if w != v and _same_subgroup(stabs[v], stabs[w])]
            assert len(mates) == 1, \
                f"arc ({u}, {v}) has {len(mates)} stabiliser partners"
            partner[(u, v)] = (u, mates[0])
    return ArcPairing(tuple(arcs), partner)


def _split_impl(ag: ActedGraph):
    if not is_locally_d4(ag):
        raise NotLocallyD4("split needs dihedral local action at every vertex")
    graph, group = ag.graph, ag.group
    pairing = arc_pairing(ag)
    keys = sorted(set(pairing.block(a) for a in pairing.arcs))
    index = {k: i for i, k in enumerate(keys)}
    by_tail: dict[int, list[int]] = {}
    for k in keys:
        by_tail.setdefault(k[0], []).append(index[k])
    edges = set()
    for u, v, w in keys:
        i = index[(u, v, w)]
        for x in (v, w):
            j = index[pairing.block((x, u))]
            edges.add((min(i, j), max(i, j)))
        assert len(by_tail[u]) == 2, "a tail must carry exactly two arc pairs"
        j = next(t for t in by_tail[u] if t != i)
        edges.add((min(i, j), max(i, j)))
    out = Graph(len(keys), sorted(edges),
                labels=[f"{u}|{v},{w}" for u, v, w in keys])

    gens = []
    for g in group.generators:
        images = [index[(g(u), min(g(v), g(w)), max(g(v), g(w)))]
                  for u, v, w in keys]
        gens.append(Permutation(images))
    out_group = PermGroup(gens, len(keys))

    assert out.n == 2 * graph.n
    assert valency_list(out) == [3] * out.n
    assert out_group.order == group.order, "split action lost faithfulness"
    old_stab = group.point_stabilizer(0).order
    assert out_group.point_stabilizer(index[pairing.block((0, graph.neighbors(0)[0]))]).order \
        == old_stab // 2
    result = ActedGraph(out, out_group, ("split", ag.provenance))
    assert is_locally_c2_3(result)
    return result, keys


def split(ag: ActedGraph) -> ActedGraph:
    """The cubic pair on the paired arcs of a locally-dihedral input.

    Paired arcs a, b are adjacent when they share a tail or when they are
    each other reversed; the input group acts on pair keys.
    """
    return _split_impl(ag)[0]


def vertex_pairing(ag: ActedGraph) -> list[tuple[int, int]]:
    """The blocks {v, v'} where v' is the unique neighbour of v with
    G_v = G_{v'}; sorted pairs in sorted order.

    A stabiliser generator lies in G_w exactly when it fixes w, so the
    membership scan reads the generator rows at w; with equal orders this
    gives G_v = G_{v'}, and the involution assertion replays the test from
    the partner's side.
    """
    graph, group = ag.graph, ag.group
    order_at = [0] * graph.n
    for orb in orbits(group):
        for v in orb:
            order_at[v] = group.order // len(orb)
    mate = [-1] * graph.n
    for v in range(graph.n):
        rows, o_v = group.stabilizer_generator_rows(v)
        assert o_v == order_at[v]
        found = [w for w in graph.neighbors(v)
                 if order_at[w] == o_v and all(int(r[w]) == w for r in rows)]
        assert len(found) == 1, \
            f"vertex {v} has {len(found)} stabiliser partners"
        mate[v] = found[0]
    for v in range(graph.n):
        assert mate[mate[v]] == v, "vertex pairing is not an involution"
    return sorted({(min(v, mate[v]), max(v, mate[v])) for v in range(graph.n)})


def _merge_impl(ag: ActedGraph):
    graph, group = ag.graph, ag.group
    if not is_locally_c2_3(ag):
        raise NotLocallyC23(
            "merge needs local action of order 2 with a fixed point")
    if group.point_stabilizer(0).order < 4:
        raise StabTooSmall("merge needs a vertex stabiliser of order >= 4")
    blocks = vertex_pairing(ag)
    where = {}
    for i, (v, w) in enumerate(blocks):
        where[v] = i
        where[w] = i
    for v, w in blocks:
        common = set(graph.neighbors(v)) & set(graph.neighbors(w))
        if common:
            raise PairingDegenerate(
                f"3-cycle through the pair ({v}, {w}) and {min(common)}")
    for v, w in blocks:
        outside = [where[x] for x in graph.neighbors(v) if x != w] + \
                  [where[x] for x in graph.neighbors(w) if x != v]
        if len(set(outside)) != 4:
            raise PairingDegenerate(
                f"4-cycle through two pairs at ({v}, {w})")

    block_lists = [[v, w] for v, w in blocks]
    qg, _ = quotient_graph(graph, block_lists)
    qact = quotient_action(group, block_lists)
    assert qact.order == group.order, "merge action lost faithfulness"
    assert qg.n == graph.n // 2 and valency_list(qg) == [4] * qg.n
    v0 = blocks[0][0]
    assert qact.point_stabilizer(0).order == \
        2 * group.point_stabilizer(v0).order
    labeled = Graph(qg.n, list(qg.edges()),
                    labels=[f"{v},{w}" for v, w in blocks])
    result = ActedGraph(labeled, qact, ("merge", ag.provenance))
    assert is_locally_d4(result)
    return result, blocks


def merge(ag: ActedGraph) -> ActedGraph:
    """Quotient of a cubic pair by its stabiliser-matching vertex pairing."""
    return _merge_impl(ag)[0]


def merge_split_isomorphism(ag: ActedGraph) -> list[int]:
    """The map of the round-trip lemma: a merged block of split vertices
    consists of the two arc pairs at one tail, and goes to that tail.
    Returns images indexed by merge(split(ag)) vertices; verified edge by
    edge against the input graph."""
    graph = ag.graph
    sp, keys = _split_impl(ag)
    mg, blocks = _merge_impl(sp)
    theta = [keys[v][0] for v, _ in blocks]
    assert sorted(theta) == list(range(graph.n))
    assert mg.graph.num_edges == graph.num_edges
    for a, b in mg.graph.edges():
        assert graph.has_edge(theta[a], theta[b])
    return theta


def split_merge_isomorphism(ag: ActedGraph) -> list[int]:
    """The inverse round trip: a paired arc of the merged graph points at
    the member of its tail block whose two outside neighbours generate the
    pair of head blocks.  Returns images indexed by split(merge(ag))
    vertices; verified edge by edge."""
    graph = ag.graph
    mg, blocks = _merge_impl(ag)
    where = {}
    for i, (v, w) in enumerate(blocks):
        where[v] = i
        where[w] = i
    sp, keys = _split_impl(mg)
    theta = []
    for bu, b1, b2 in keys:
        hits = [u for u in blocks[bu]
                if {where[x] for x in graph.neighbors(u)
                    if where[x] != bu} == {b1, b2}]
        assert len(hits) == 1, "head blocks fail to pin down a tail member"
        theta.append(hits[0])
    assert sorted(theta) == list(range(graph.n))
    assert sp.graph.num_edges == graph.num_edges
    for a, b in sp.graph.edges():
        assert graph.has_edge(theta[a], theta[b])
    return theta
