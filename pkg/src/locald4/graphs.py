"""Finite simple graphs: carrier type, quotients, Cayley and coset graphs.

Graphs are immutable once built.  Adjacency is stored as sorted neighbour
tuples; loops and multi-edges are rejected at construction.  Optional vertex
labels carry construction provenance and never affect equality.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    ConnectionNotInverseClosed,
    DegreeMismatch,
    IdentityInConnection,
    InvalidPartition,
    OrderExceedsCap,
    PartitionNotInvariant,
    SelfPairedLoop,
    VertexOutOfRange,
)
from .perm import PermGroup, Permutation, group_from_generators


class Graph:
    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        seen: set[tuple[int, int]] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(ns)) for ns in nbrs)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("label count must match vertex count")
        self.labels = labels

    @property
    def num_edges(self) -> int:
        return sum(len(ns) for ns in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v

    def label(self, v: int) -> str | None:
        return None if self.labels is None else self.labels[v]

    def __eq__(self, other: object) -> bool:
        # labels are provenance only, never part of identity
        return (isinstance(other, Graph) and self.n == other.n
                and self.adj == other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# ---------------------------------------------------------------------------
# quotients


def _check_partition(n: int, blocks: Sequence[Sequence[int]]) -> list[int]:
    """Validate that blocks partition 0..n-1; return the vertex→block map."""
    block_map = [-1] * n
    for bi, block in enumerate(blocks):
        if len(block) == 0:
            raise InvalidPartition(f"block {bi} is empty")
        for v in block:
            if not 0 <= v < n:
                raise InvalidPartition(f"vertex {v} outside 0..{n - 1}")
            if block_map[v] != -1:
                raise InvalidPartition(f"vertex {v} appears in two blocks")
            block_map[v] = bi
    if any(b == -1 for b in block_map):
        missing = block_map.index(-1)
        raise InvalidPartition(f"vertex {missing} not covered by any block")
    return block_map


def quotient_graph(g: Graph, blocks: Sequence[Sequence[int]]) -> tuple[Graph, list[int]]:
    """Quotient by a vertex partition: blocks adjacent whenever some cross edge
    exists.  Intra-block edges vanish; parallel cross edges collapse."""
    block_map = _check_partition(g.n, blocks)
    edges = set()
    for u, v in g.edges():
        bu, bv = block_map[u], block_map[v]
        if bu != bv:
            edges.add((min(bu, bv), max(bu, bv)))
    return Graph(len(blocks), sorted(edges)), block_map


def quotient_action(group: PermGroup, blocks: Sequence[Sequence[int]]) -> PermGroup:
    """Induced action on block indices.  The result is the image group; the
    kernel of the quotient map is not computed here."""
    block_map = _check_partition(group.degree, blocks)
    images = []
    for p in group.generators:
        img = [-1] * len(blocks)
        for bi, block in enumerate(blocks):
            targets = {block_map[p(v)] for v in block}
            if len(targets) != 1:
                raise PartitionNotInvariant(
                    f"generator maps block {bi} across {sorted(targets)}")
            img[bi] = targets.pop()
        images.append(Permutation(img))
    return PermGroup(images, len(blocks))


# ---------------------------------------------------------------------------
# Cayley graphs


def _cayley_with_elements(group: PermGroup, connection: Sequence[Permutation],
                          cap: int = 100_000) -> tuple[Graph, list[Permutation]]:
    for s in connection:
        if s.is_identity():
            raise IdentityInConnection("connection set contains the identity")
        if s not in group:
            raise ValueError("connection element outside the group")
    if {s for s in connection} != {s.inverse() for s in connection}:
        raise ConnectionNotInverseClosed("connection set is not inverse-closed")
    if group.order > cap:
        raise OrderExceedsCap(
            f"group order {group.order} exceeds enumeration cap {cap}")

    # breadth-first from the identity; unreached elements (connection does not
    # generate) follow in enumeration order, each seeding its own component
    elems: list[Permutation] = []
    index: dict[Permutation, int] = {}

    def bfs_from(start: Permutation) -> None:
        index[start] = len(elems)
        elems.append(start)
        queue = [start]
        for x in queue:
            for s in connection:
                y = s * x
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    queue.append(y)

    bfs_from(Permutation.identity(group.degree))
    if len(elems) < group.order:
        for x in group.elements(cap):
            if x not in index:
                bfs_from(x)
    assert len(elems) == group.order

    edges = set()
    for i, x in enumerate(elems):
        for s in connection:
            j = index[s * x]
            if i != j:
                edges.add((min(i, j), max(i, j)))
    labels = [repr(x) for x in elems]
    g = Graph(len(elems), sorted(edges), labels=labels)
    distinct = len(set(connection))
    if distinct == len(connection) and all(not (s * s).is_identity() for s in connection):
        assert all(len(ns) == len(connection) for ns in g.adj), \
            "free connection set must give |S|-valent graph"
    return g, elems


def cayley_graph(group: PermGroup, connection: Sequence[Permutation],
                 cap: int = 100_000) -> Graph:
    """Cayley graph: vertices are the group elements (breadth-first from the
    identity), x ~ sx for each s in the connection set."""
    g, _ = _cayley_with_elements(group, connection, cap)
    return g


# ---------------------------------------------------------------------------
# coset graphs


def _pair_orbit_edges(gen_rows: Sequence[Sequence[int]],
                      u0: int, v0: int) -> set[tuple[int, int]]:
    """Orbit of the unordered pair {u0, v0} under permutations given as rows."""
    e0 = (min(u0, v0), max(u0, v0))
    seen = {e0}
    queue = [e0]
    for u, v in queue:
        for row in gen_rows:
            a, b = row[u], row[v]
            e = (a, b) if a < b else (b, a)
            if e not in seen:
                seen.add(e)
                queue.append(e)
    return seen


def orbital_graph(action: PermGroup, pair: tuple[int, int],
                  labels: Sequence[str] | None = None) -> Graph:
    """Graph on the action's domain whose edges form one orbit of an
    unordered pair under the group."""
    u0, v0 = pair
    if u0 == v0:
        raise SelfPairedLoop("orbital pair is a loop")
    rows = [p.images for p in action.generators]
    edges = _pair_orbit_edges(rows, u0, v0)
    return Graph(action.degree, sorted(edges), labels=labels)


def right_coset_action(group: PermGroup, subgroup: PermGroup,
                 max_index: int = 100_000) -> tuple[PermGroup, list[Permutation]]:
    """Right-multiplication action of ``group`` on the right cosets of
    ``subgroup``.  Coset 0 is the subgroup itself.  Returns the action and the
    canonical coset representatives in discovery order."""
    if subgroup.degree != group.degree:
        raise DegreeMismatch("subgroup degree differs from group degree")
    ident = Permutation.identity(group.degree)
    rep0 = subgroup.canonical_coset_rep(ident)
    reps = [rep0]
    index = {rep0: 0}
    for rep in reps:
        for g in group.generators:
            cand = subgroup.canonical_coset_rep(rep * g)
            if cand not in index:
                if len(reps) >= max_index:
                    raise OrderExceedsCap(
                        f"coset count exceeds max_index {max_index}")
                index[cand] = len(reps)
                reps.append(cand)
    rows = []
    for g in group.generators:
        rows.append(Permutation(
            [index[subgroup.canonical_coset_rep(rep * g)] for rep in reps]))
    action = PermGroup(rows, len(reps))
    assert len(reps) * subgroup.order == group.order, \
        "coset count times subgroup order must equal group order"
    return action, reps


def coset_graph(group: PermGroup, subgroup: PermGroup, a: Permutation,
                max_index: int = 100_000) -> Graph:
    """Coset graph: vertices the right cosets Hg, edges all pairs {Hg, Hag}."""
    if a not in group:
        raise ValueError("connecting element outside the group")
    if a in subgroup:
        raise SelfPairedLoop("connecting element lies in the subgroup")
    action, reps = right_coset_action(group, subgroup, max_index)
    va = next(i for i, rep in enumerate(reps)
              if subgroup.canonical_coset_rep(a) == rep)
    rows = [p.images for p in action.generators]
    edges = _pair_orbit_edges(rows, 0, va)
    labels = [repr(rep) for rep in reps]
    return Graph(len(reps), sorted(edges), labels=labels)


# ---------------------------------------------------------------------------
# structural queries


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    count = 1
    for u in queue:
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def valency_list(g: Graph) -> list[int]:
    """Sorted multiset of vertex degrees."""
    return sorted(len(ns) for ns in g.adj)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best: int | None = None
    dist = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        queue = [root]
        dist[root] = 0
        parent[root] = -1
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            du = dist[u]
            if best is not None and 2 * du + 1 >= best:
                break
            for w in g.adj[u]:
                if w == parent[u]:
                    continue
                if dist[w] == -1:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                else:
                    cand = du + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
        for u in queue:
            dist[u] = -1
            parent[u] = -1
    return best


# ---------------------------------------------------------------------------
# text format: "n m" header, one edge per line as "u v" with u < v


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("graph file must start with a 'n m' line")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edge line must satisfy u < v: {ln!r}")
        edges.append((u, v))
    return Graph(n, edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
