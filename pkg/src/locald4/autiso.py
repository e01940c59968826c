"""Graph automorphisms and isomorphism by partition refinement with
individualization, backtracking and orbit pruning."""

from .errors import InvalidParams, SearchBudgetExceeded
from .graphs import Graph, girth
from .perm import Permutation, PermGroup, trivial_group

__all__ = ["automorphism_group", "are_isomorphic", "subgroup_index",
           "refine_partition"]

_DEFAULT_NODE_LIMIT = 1_000_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise SearchBudgetExceeded("refinement node limit exhausted")


def _refine(adj, cells, budget: _Budget):
    """Equitable refinement: split every cell by its degree-into-cell
    vector until stable.  Cell order and boundaries depend only on the
    isomorphism type, never on vertex labels."""
    n = len(adj)
    pos = [0] * n
    while True:
        budget.spend()
        for i, c in enumerate(cells):
            for v in c:
                pos[v] = i
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            by_sig = {}
            for v in c:
                counts = {}
                for w in adj[v]:
                    counts[pos[w]] = counts.get(pos[w], 0) + 1
                by_sig.setdefault(tuple(sorted(counts.items())), []).append(v)
            if len(by_sig) == 1:
                new_cells.append(c)
            else:
                changed = True
                for key in sorted(by_sig):
                    new_cells.append(sorted(by_sig[key]))
        if not changed:
            return new_cells
        cells = new_cells


def refine_partition(g: Graph, cells=None) -> list[list[int]]:
    """Stable ordered partition of g, starting from one cell by default."""
    if cells is None:
        cells = [list(range(g.n))]
    return _refine(g.adj, [sorted(c) for c in cells], _Budget(_DEFAULT_NODE_LIMIT))


def _individualize(cells, v):
    out = []
    for c in cells:
        if v in c and len(c) > 1:
            out.append([v])
            out.append([w for w in c if w != v])
        else:
            out.append(c)
    return out


def _first_target_cell(cells) -> int:
    best = -1
    size = 1
    for i, c in enumerate(cells):
        if len(c) > size:
            best, size = i, len(c)
    return best


def _match(adj_a, cells_a, adj_b, cells_b, budget: _Budget, group_b=None):
    """A bijection sending cell k of the first partition onto cell k of the
    second and preserving adjacency, or None.

    When a group of known automorphisms of the second graph fixing all its
    individualized vertices is supplied, candidate branches are tried one
    per orbit: composing a witness with such an automorphism is again a
    witness, so pruned branches cannot hide the only solution.
    """
    if [len(c) for c in cells_a] != [len(c) for c in cells_b]:
        return None
    i = _first_target_cell(cells_a)
    if i < 0:
        m = [0] * len(adj_a)
        for ca, cb in zip(cells_a, cells_b):
            m[ca[0]] = cb[0]
        for v, nv in enumerate(adj_a):
            img = sorted(m[w] for w in nv)
            if img != list(adj_b[m[v]]):
                return None
        return m
    t = cells_a[i][0]
    sub_a = _refine(adj_a, _individualize(cells_a, t), budget)
    candidates = cells_b[i]
    if group_b is not None:
        pruned = []
        seen = set()
        for u in candidates:
            if u not in seen:
                pruned.append(u)
                seen.update(group_b.orbit(u))
        candidates = pruned
    for u in candidates:
        sub_b = _refine(adj_b, _individualize(cells_b, u), budget)
        child = group_b.point_stabilizer(u) if group_b is not None else None
        m = _match(adj_a, sub_a, adj_b, sub_b, budget, child)
        if m is not None:
            return m
    return None


def _aut_search(adj, cells, degree, budget: _Budget) -> PermGroup:
    cells = _refine(adj, cells, budget)
    i = _first_target_cell(cells)
    if i < 0:
        return trivial_group(degree)
    t = cells[i][0]
    sub = _aut_search(adj, _individualize(cells, t), degree, budget)
    gens = list(sub.generators)
    group = sub
    refined_t = _refine(adj, _individualize(cells, t), budget)
    reached = set(group.orbit(t))
    for u in cells[i][1:]:
        if u in reached:
            continue
        refined_u = _refine(adj, _individualize(cells, u), budget)
        m = _match(adj, refined_t, adj, refined_u, budget)
        if m is not None:
            gens.append(Permutation(m))
            group = PermGroup(gens, degree)
            reached = set(group.orbit(t))
    return group


def automorphism_group(g: Graph, node_limit: int = _DEFAULT_NODE_LIMIT) -> PermGroup:
    """The full automorphism group of g as a permutation group on vertices."""
    if g.n > 10_000:
        raise InvalidParams(f"{g.n} vertices is beyond the supported range")
    if g.n == 0:
        return trivial_group(0)
    budget = _Budget(node_limit)
    group = _aut_search(g.adj, [list(range(g.n))], g.n, budget)
    for p in group.generators:
        assert all(g.has_edge(p(u), p(v)) for u, v in g.edges()), \
            "search produced a non-automorphism"
    return group


def _invariants(g: Graph):
    return (g.n, g.num_edges, sorted(len(a) for a in g.adj), girth(g))


def _distance_profile(g: Graph):
    """Sorted multiset of breadth-first layer-size sequences, one per root."""
    profiles = []
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        queue = [root]
        sizes = [1]
        for v in queue:
            for w in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    if dist[w] == len(sizes):
                        sizes.append(0)
                    sizes[dist[w]] += 1
                    queue.append(w)
        profiles.append(tuple(sizes))
    profiles.sort()
    return profiles


def are_isomorphic(g1: Graph, g2: Graph,
                   node_limit: int = _DEFAULT_NODE_LIMIT):
    """A vertex bijection g1 -> g2 as a list, or None.

    Any witness is re-verified edge by edge before it is returned.
    """
    if max(g1.n, g2.n) > 10_000:
        raise InvalidParams("graph beyond the supported range")
    if _invariants(g1) != _invariants(g2):
        return None
    if g1.n == 0:
        return []
    if _distance_profile(g1) != _distance_profile(g2):
        return None
    budget = _Budget(node_limit)
    cells_1 = _refine(g1.adj, [list(range(g1.n))], budget)
    cells_2 = _refine(g2.adj, [list(range(g2.n))], budget)
    aut_2 = automorphism_group(g2, node_limit)
    m = _match(g1.adj, cells_1, g2.adj, cells_2, budget, aut_2)
    if m is None:
        return None
    assert sorted(m) == list(range(g2.n))
    assert all(g2.has_edge(m[u], m[v]) for u, v in g1.edges())
    assert g1.num_edges == g2.num_edges
    return m


def subgroup_index(big: PermGroup, small: PermGroup) -> int:
    """|big : small| for an actual subgroup, via chain membership."""
    from .errors import NotASubgroup
    if small.degree != big.degree:
        raise NotASubgroup("degree mismatch")
    for p in small.generators:
        if p not in big:
            raise NotASubgroup(f"{p!r} lies outside the alleged supergroup")
    assert big.order % small.order == 0
    return big.order // small.order
