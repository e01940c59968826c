"""Permutation groups with deterministic stabiliser chains.

Exact arithmetic throughout: orders are Python ints, membership is decided by
sifting through a base-and-strong-generating-set chain.  The chain is built by
a deterministic (non-randomised) Schreier-Sims procedure: base points are the
smallest moved points, orbits are explored breadth-first in generator order,
so identical generator lists always produce identical chains and orders.

Permutations act on the right: ``p * q`` means "apply p, then q", and
``v ** p`` is unsupported on purpose -- use ``p(v)``.  Internally the chain
stores images as numpy integer arrays; the public API deals in tuples.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DegreeMismatch, OrderExceedsCap, VertexOutOfRange

_DTYPE = np.int32


class Permutation:
    """A permutation of {0, ..., n-1} stored by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        seen = [False] * n
        for x in imgs:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {imgs!r}")
            seen[x] = True
        self.images = imgs

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def _from_row(cls, row: "np.ndarray") -> "Permutation":
        # trusted image rows from the chain skip validation
        p = object.__new__(cls)
        p.images = tuple(row.tolist())
        return p

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        imgs = list(range(degree))
        for cyc in cycles:
            for i, pt in enumerate(cyc):
                imgs[pt] = cyc[(i + 1) % len(cyc)]
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self first, then other
        if len(self.images) != len(other.images):
            raise DegreeMismatch("cannot compose permutations of different degree")
        oi = other.images
        return Permutation(tuple(map(oi.__getitem__, self.images)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def moved_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()), 1)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Perm[{self.degree}]{body}"


# ---------------------------------------------------------------------------
# stabiliser chain internals (raw numpy rows)
# ---------------------------------------------------------------------------


class _Level:
    __slots__ = ("point", "gens", "orbit", "slot", "trans", "trans_inv", "tree")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [point]
        self.slot: dict[int, int] = {point: 0}
        self.trans: list[np.ndarray] = []
        self.trans_inv: list[np.ndarray] = []
        self.tree: set[tuple[int, int]] = set()


def _invert(row: np.ndarray) -> np.ndarray:
    inv = np.empty_like(row)
    inv[row] = np.arange(len(row), dtype=row.dtype)
    return inv


def _conjugate_level(sub: _Level, t: np.ndarray, tinv: np.ndarray) -> _Level:
    """The corresponding chain level of t^-1 G t: relabelling every point
    through t preserves each invariant of the structure."""
    out = _Level(int(t[sub.point]))
    out.gens = [t[g[tinv]] for g in sub.gens]
    out.orbit = [int(t[p]) for p in sub.orbit]
    out.slot = {p: i for i, p in enumerate(out.orbit)}
    out.trans = [t[r[tinv]] for r in sub.trans]
    out.trans_inv = [t[r[tinv]] for r in sub.trans_inv]
    out.tree = set()
    return out


def _rebuild_level(level: _Level, idrow: np.ndarray) -> None:
    """Breadth-first orbit and transversal of ``level.point`` under ``level.gens``."""
    pt = level.point
    orbit = [pt]
    slot = {pt: 0}
    trans = [idrow]
    trans_inv = [idrow]
    tree: set[tuple[int, int]] = set()
    i = 0
    while i < len(orbit):
        p = orbit[i]
        t = trans[i]
        for gi, s in enumerate(level.gens):
            q = int(s[p])
            if q not in slot:
                slot[q] = len(orbit)
                orbit.append(q)
                u = s[t]  # t then s
                trans.append(u)
                trans_inv.append(_invert(u))
                tree.add((i, gi))
        i += 1
    level.orbit = orbit
    level.slot = slot
    level.trans = trans
    level.trans_inv = trans_inv
    level.tree = tree


def _sift(levels: list[_Level], row: np.ndarray, idrow: np.ndarray, start: int = 0):
    """Reduce ``row`` through the chain.  Returns (residue-or-None, level index)."""
    g = row
    for j in range(start, len(levels)):
        lvl = levels[j]
        p = int(g[lvl.point])
        if p == lvl.point:
            continue
        s = lvl.slot.get(p)
        if s is None:
            return g, j
        g = lvl.trans_inv[s][g]  # g then t^{-1}
    if np.array_equal(g, idrow):
        return None, len(levels)
    return g, len(levels)


def _schreier_sims(levels: list[_Level], i: int, idrow: np.ndarray) -> None:
    """Verify level ``i``, assuming every deeper level is already complete.

    Level generator sets are nested: levels[l].gens holds every strong
    generator fixing the first l base points.  A residue stuck at level j
    therefore joins levels i+1..j, and those levels are re-verified
    bottom-up before the scan of level i resumes.
    """
    level = levels[i]
    _rebuild_level(level, idrow)
    for si, p in enumerate(level.orbit):
        t = level.trans[si]
        for gi, s in enumerate(level.gens):
            if (si, gi) in level.tree:
                continue
            q = int(s[p])
            tq_inv = level.trans_inv[level.slot[q]]
            sg = tq_inv[s[t]]  # t * s * t_q^{-1}
            if np.array_equal(sg, idrow):
                continue
            residue, j = _sift(levels, sg, idrow, i + 1)
            if residue is None:
                continue
            if j == len(levels):
                base_pt = int(np.nonzero(residue != idrow)[0][0])
                levels.append(_Level(base_pt))
            for l in range(i + 1, j + 1):
                levels[l].gens.append(residue)
            for l in range(j, i, -1):
                _schreier_sims(levels, l, idrow)


def _build_chain(rows: list[np.ndarray], degree: int, base_hint: Sequence[int] = ()):
    idrow = np.arange(degree, dtype=_DTYPE)
    levels = [_Level(int(b)) for b in base_hint]
    for lvl in levels:
        _rebuild_level(lvl, idrow)
    for g in rows:
        if np.array_equal(g, idrow):
            continue
        residue, _ = _sift(levels, g, idrow)
        if residue is None:
            continue  # already generated
        j = 0
        while j < len(levels) and g[levels[j].point] == levels[j].point:
            j += 1
        if j == len(levels):
            base_pt = int(np.nonzero(g != idrow)[0][0])
            levels.append(_Level(base_pt))
        for l in range(j + 1):
            levels[l].gens.append(g)
        for l in range(j, -1, -1):
            _schreier_sims(levels, l, idrow)
    return levels, idrow


class PermGroup:
    """A finite permutation group with a deterministic stabiliser chain."""

    __slots__ = ("degree", "generators", "_levels", "_idrow", "_order")

    def __init__(self, generators: Sequence[Permutation], degree: int,
                 base_hint: Sequence[int] = (), _internal=None):
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        if _internal is not None:
            self._levels, self._idrow = _internal
        else:
            rows = [np.array(g.images, dtype=_DTYPE) for g in self.generators]
            self._levels, self._idrow = _build_chain(rows, degree, base_hint)
        order = 1
        for lvl in self._levels:
            order *= len(lvl.orbit)
        self._order = order

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._levels)

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        row = np.array(p.images, dtype=_DTYPE)
        residue, _ = _sift(self._levels, row, self._idrow)
        return residue is None

    def is_trivial(self) -> bool:
        return self._order == 1

    def orbit(self, v: int) -> list[int]:
        if not 0 <= v < self.degree:
            raise VertexOutOfRange(f"point {v} outside degree {self.degree}")
        seen = {v}
        queue = [v]
        for p in queue:
            for g in self.generators:
                q = g.images[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def orbit_transversal(self, v: int) -> dict[int, np.ndarray]:
        """Map u -> raw image row t with t[v] = u, explored breadth-first."""
        if not 0 <= v < self.degree:
            raise VertexOutOfRange(f"point {v} outside degree {self.degree}")
        idrow = self._idrow
        rows = [np.array(g.images, dtype=_DTYPE) for g in self.generators]
        out = {v: idrow}
        queue = [v]
        for p in queue:
            t = out[p]
            for s in rows:
                q = int(s[p])
                if q not in out:
                    out[q] = s[t]
                    queue.append(q)
        return out

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def point_stabilizer(self, v: int) -> "PermGroup":
        """Stabiliser of ``v``, with the orbit-stabiliser identity asserted."""
        if not 0 <= v < self.degree:
            raise VertexOutOfRange(f"point {v} outside degree {self.degree}")
        if self._levels and v in self._levels[0].slot:
            # conjugate the whole chain below the first base point: for the
            # transversal row t with t[b] = v, G_v = t^-1-then-G_b-then-t,
            # and the deeper levels (all fixing b) conjugate level by level
            lvl = self._levels[0]
            s = lvl.slot[v]
            sub_levels = self._levels[1:]
            if s:
                t = lvl.trans[s]
                tinv = lvl.trans_inv[s]
                sub_levels = [_conjugate_level(x, t, tinv) for x in sub_levels]
            sub_rows = sub_levels[0].gens if sub_levels else []
            gens = [Permutation._from_row(row) for row in sub_rows]
            stab = PermGroup(gens, self.degree, _internal=(sub_levels, self._idrow))
            assert len(lvl.orbit) * stab.order == self.order, \
                "orbit-stabiliser identity failed"
            return stab
        rows = [np.array(g.images, dtype=_DTYPE) for g in self.generators]
        levels, idrow = _build_chain(rows, self.degree, base_hint=(v,))
        sub_levels = levels[1:]
        sub_rows = sub_levels[0].gens if sub_levels else []
        gens = [Permutation._from_row(row) for row in sub_rows]
        stab = PermGroup(gens, self.degree, _internal=(sub_levels, idrow))
        orbit_len = len(levels[0].orbit)
        assert orbit_len * stab.order == self.order, "orbit-stabiliser identity failed"
        return stab

    def stabilizer_generators(self, v: int) -> list[Permutation]:
        return list(self.point_stabilizer(v).generators)

    def stabilizer_generator_rows(self, v: int) -> tuple[list[np.ndarray], int]:
        """Generator image rows of the stabiliser of ``v`` and its order,
        skipping the subgroup's own chain construction.  Rows are shared or
        freshly conjugated; callers must not mutate them."""
        if not 0 <= v < self.degree:
            raise VertexOutOfRange(f"point {v} outside degree {self.degree}")
        if self._levels and v in self._levels[0].slot:
            lvl = self._levels[0]
            s = lvl.slot[v]
            rows = self._levels[1].gens if len(self._levels) > 1 else []
            if s:
                t, tinv = lvl.trans[s], lvl.trans_inv[s]
                rows = [t[h[tinv]] for h in rows]
            return rows, self.order // len(lvl.orbit)
        stab = self.point_stabilizer(v)
        rows = [np.array(g.images, dtype=_DTYPE) for g in stab.generators]
        return rows, stab.order

    def canonical_coset_rep(self, p: Permutation) -> Permutation:
        """The unique member of the right coset (self)*p that minimises the
        image sequence of the chain's base points, level by level.

        Two permutations x, y satisfy canonical_coset_rep(x) == canonical_coset_rep(y)
        exactly when Hx == Hy, so the result is usable as a coset key.
        """
        if p.degree != self.degree:
            raise DegreeMismatch("coset representative degree mismatch")
        row = np.array(p.images, dtype=_DTYPE)
        for lvl in self._levels:
            best = min(range(len(lvl.orbit)), key=lambda s: int(row[lvl.orbit[s]]))
            if best:
                row = row[lvl.trans[best]]  # t then p
        return Permutation(tuple(int(x) for x in row))

    # -- enumeration ------------------------------------------------------

    def element_rows(self, cap: int | None = None) -> np.ndarray:
        """All elements as a 2D array of image rows (one batched gather per level)."""
        if cap is not None and self._order > cap:
            raise OrderExceedsCap(f"group order {self._order} exceeds cap {cap}")
        mat = self._idrow[None, :].copy()
        for lvl in reversed(self._levels):
            if len(lvl.trans) == 1:
                continue
            blocks = [t[mat] for t in lvl.trans]  # each: (rows then t)
            mat = np.concatenate(blocks, axis=0)
        return mat

    def elements(self, cap: int | None = 100_000) -> list[Permutation]:
        mat = self.element_rows(cap)
        return [Permutation(tuple(int(x) for x in row)) for row in mat]

    def iter_elements(self, cap: int | None = 100_000) -> Iterator[Permutation]:
        return iter(self.elements(cap))

    # -- structural predicates ---------------------------------------------

    def is_semiregular(self) -> bool:
        """True when every point stabiliser is trivial."""
        remaining = set(range(self.degree))
        while remaining:
            v = min(remaining)
            orb = self.orbit(v)
            if len(orb) != self._order:
                return False
            remaining.difference_update(orb)
        return True

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self._order}, ngens={len(self.generators)})"


# ---------------------------------------------------------------------------
# module-level operations (the public surface)
# ---------------------------------------------------------------------------


def group_from_generators(generators: Sequence[Permutation],
                          degree: int | None = None) -> PermGroup:
    """Build a group with a valid chain; degree defaults to the generators'."""
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = gens[0].degree
    return PermGroup(gens, degree)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([], degree)


def group_order(group: PermGroup) -> int:
    return group.order


def point_stabilizer(group: PermGroup, v: int) -> PermGroup:
    return group.point_stabilizer(v)


def orbits(group: PermGroup) -> list[list[int]]:
    """Orbits as sorted lists, ordered by their smallest point."""
    remaining = set(range(group.degree))
    out = []
    while remaining:
        v = min(remaining)
        orb = group.orbit(v)
        out.append(orb)
        remaining.difference_update(orb)
    return out


def is_semiregular(group: PermGroup) -> bool:
    return group.is_semiregular()


def elements(group: PermGroup, cap: int = 100_000) -> list[Permutation]:
    return group.elements(cap)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def conjugate(p: Permutation, t: Permutation) -> Permutation:
    """t^{-1} p t."""
    return t.inverse() * p * t


def normal_closure(ambient: PermGroup, seeds: Sequence[Permutation]) -> PermGroup:
    """Smallest subgroup containing ``seeds`` normalised by ``ambient``."""
    gens: list[Permutation] = []
    cl = trivial_group(ambient.degree)
    queue = [s for s in seeds if not s.is_identity()]
    while queue:
        s = queue.pop()
        if s in cl:
            continue
        gens.append(s)
        cl = PermGroup(gens, ambient.degree)
        queue.extend(conjugate(s, g) for g in ambient.generators)
    return cl


def commutator_subgroup(a: PermGroup, ambient: PermGroup) -> PermGroup:
    """[a, ambient], as a subgroup normal in ambient."""
    seeds = [commutator(x, g) for x in a.generators for g in ambient.generators]
    return normal_closure(ambient, seeds)


def nilpotency_class_at_most(group: PermGroup, c: int, cap: int = 2 ** 20) -> bool:
    """Whether the lower central series reaches the trivial group within c steps."""
    if group.order > cap:
        raise OrderExceedsCap(f"group order {group.order} exceeds cap {cap}")
    if c < 0:
        raise ValueError("class bound must be nonnegative")
    cur = group
    for _ in range(c):
        if cur.is_trivial():
            return True
        cur = commutator_subgroup(cur, group)
    return cur.is_trivial()


def is_elementary_abelian_2(group: PermGroup) -> bool:
    gens = group.generators
    if any(not (g * g).is_identity() for g in gens):
        return False
    return all(gens[i] * gens[j] == gens[j] * gens[i]
               for i in range(len(gens)) for j in range(i + 1, len(gens)))


def is_2_group(group: PermGroup) -> bool:
    n = group.order
    return n & (n - 1) == 0


# ---------------------------------------------------------------------------
# text format: "degree k" header, one generator per line as image lists
# ---------------------------------------------------------------------------


def format_group(group: PermGroup) -> str:
    lines = [f"degree {group.degree}"]
    for g in group.generators:
        lines.append(" ".join(str(x) for x in g.images))
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> PermGroup:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("degree"):
        raise ValueError("group file must start with a 'degree k' line")
    degree = int(lines[0].split()[1])
    gens = []
    for ln in lines[1:]:
        images = [int(tok) for tok in ln.split()]
        if len(images) != degree:
            raise DegreeMismatch(
                f"generator line has {len(images)} images, expected {degree}")
        gens.append(Permutation(images))
    return PermGroup(gens, degree)


def load_group(path: str) -> PermGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group(fh.read())


def save_group(group: PermGroup, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_group(group))
