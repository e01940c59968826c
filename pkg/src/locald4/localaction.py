"""Local actions: the permutation group a vertex stabiliser induces on the
neighbourhood, and the predicates built on it."""

from dataclasses import dataclass

from .errors import VertexOutOfRange
from .families import ActedGraph
from .perm import PermGroup, Permutation

__all__ = [
    "LocalType", "LocalActionReport", "local_action",
    "is_vertex_transitive", "is_arc_transitive", "is_locally",
    "is_locally_d4", "is_locally_c2_3",
    "TRIVIAL", "C2_ON_3", "C3", "S3", "C4", "V4", "D4", "A4", "S4",
]


@dataclass(frozen=True)
class LocalType:
    tag: str
    degree: int | None = None
    order: int | None = None
    transitive: bool | None = None

    def __repr__(self) -> str:
        if self.tag != "other":
            return self.tag
        return f"other(degree={self.degree}, order={self.order}, " \
               f"transitive={self.transitive})"


TRIVIAL = LocalType("trivial")
C2_ON_3 = LocalType("C2_on_3")
C3 = LocalType("C3")
S3 = LocalType("S3")
C4 = LocalType("C4")
V4 = LocalType("V4")
D4 = LocalType("D4")
A4 = LocalType("A4")
S4 = LocalType("S4")


def _identify(p: PermGroup) -> LocalType:
    d, o = p.degree, p.order
    if o == 1:
        return TRIVIAL
    if d == 3:
        # subgroups of Sym(3) have order 1, 2, 3 or 6; order 2 fixes a point
        return {2: C2_ON_3, 3: C3, 6: S3}[o]
    if d == 4 and p.is_transitive():
        # transitive on 4 points: C4, V4, D4, A4, S4 -- order separates all
        # but the regular pair, which an element of order 4 settles
        if o == 4:
            return C4 if any(x.order() == 4 for x in p.elements(8)) else V4
        return {8: D4, 12: A4, 24: S4}[o]
    return LocalType("other", degree=d, order=o, transitive=p.is_transitive())


@dataclass(frozen=True)
class LocalActionReport:
    vertex: int
    neighbourhood: tuple[int, ...]
    induced_group: PermGroup
    kernel_order: int
    local_type: LocalType


def local_action(ag: ActedGraph, v: int) -> LocalActionReport:
    """Restrict the stabiliser of v to the neighbourhood of v.

    The induced group acts on positions in the sorted neighbour list; the
    kernel order is recovered from |G_v| = |kernel| * |induced|.
    """
    graph = ag.graph
    if not 0 <= v < graph.n:
        raise VertexOutOfRange(f"vertex {v} outside range [0, {graph.n})")
    nbrs = graph.neighbors(v)
    assert nbrs, "local action needs at least one neighbour"
    pos = {u: i for i, u in enumerate(nbrs)}
    rows, stab_order = ag.group.stabilizer_generator_rows(v)
    gens = [Permutation([pos[int(r[u])] for u in nbrs]) for r in rows]
    induced = PermGroup(gens, len(nbrs))
    assert stab_order % induced.order == 0
    return LocalActionReport(
        vertex=v,
        neighbourhood=tuple(nbrs),
        induced_group=induced,
        kernel_order=stab_order // induced.order,
        local_type=_identify(induced),
    )


def is_vertex_transitive(ag: ActedGraph) -> bool:
    return ag.group.is_transitive()


def is_arc_transitive(ag: ActedGraph) -> bool:
    """Vertex-transitive with transitive local action."""
    if not is_vertex_transitive(ag):
        return False
    return local_action(ag, 0).induced_group.is_transitive()


def is_locally(ag: ActedGraph, t: LocalType) -> bool:
    """Whether every vertex has local type t.

    Checked at all vertices, not just one; on vertex-transitive input this
    is redundant but validates the action globally.
    """
    return all(local_action(ag, v).local_type == t for v in range(ag.graph.n))


def is_locally_d4(ag: ActedGraph) -> bool:
    return is_locally(ag, D4)


def is_locally_c2_3(ag: ActedGraph) -> bool:
    return is_locally(ag, C2_ON_3)
