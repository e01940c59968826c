"""Finitely presented groups and Todd-Coxeter coset enumeration.

Words are tuples of signed 1-based generator indices (+k is generator k-1,
-k its inverse) and are freely reduced on ingestion.  Enumeration is
HLT-style with standard coincidence handling; closed tables are renumbered
into breadth-first discovery order from coset 0, which makes the final table
canonical: any fill order produces the identical standardized table.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Sequence

from .errors import CosetLimitExceeded, InvalidParams, TableNotClosed
from .perm import PermGroup, Permutation

Word = tuple[int, ...]


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if letter == 0:
            raise ValueError("word letters are signed 1-based indices, got 0")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(int(letter))
    return tuple(out)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


def commutator_word(u: Sequence[int], v: Sequence[int]) -> Word:
    """[u, v] = u^-1 v^-1 u v, freely reduced."""
    return free_reduce(invert_word(u) + invert_word(v) + tuple(u) + tuple(v))


class Presentation:
    __slots__ = ("generator_names", "relators")

    def __init__(self, generator_names: Sequence[str], relators: Sequence[Sequence[int]]):
        names = tuple(str(x) for x in generator_names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        n = len(names)
        reduced = []
        for rel in relators:
            w = free_reduce(rel)
            for letter in w:
                if not 1 <= abs(letter) <= n:
                    raise ValueError(f"relator letter {letter} out of range 1..{n}")
            reduced.append(w)
        self.generator_names = names
        self.relators = tuple(reduced)

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Presentation)
                and self.generator_names == other.generator_names
                and self.relators == other.relators)

    def __repr__(self) -> str:
        return (f"Presentation({len(self.generator_names)} generators, "
                f"{len(self.relators)} relators)")


class CosetTable:
    """Closed coset table: rows are cosets, columns alternate g, g^-1."""

    __slots__ = ("presentation", "subgroup_words", "table", "closed")

    def __init__(self, presentation: Presentation, subgroup_words: Sequence[Word],
                 table: list[list[int]], closed: bool):
        self.presentation = presentation
        self.subgroup_words = tuple(free_reduce(w) for w in subgroup_words)
        self.table = table
        self.closed = closed

    @property
    def num_cosets(self) -> int:
        return len(self.table)

    def trace(self, coset: int, word: Sequence[int]) -> int:
        """Follow a word through the table from a coset."""
        if not self.closed:
            raise TableNotClosed("cannot trace through an incomplete table")
        c = coset
        for letter in word:
            col = _column(letter)
            c = self.table[c][col]
        return c


def _column(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


class _Enumerator:
    """Mutable state of one HLT enumeration."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.p = [0]
        self.live = 1
        self.queue: deque[int] = deque()

    def rep(self, k: int) -> int:
        # path-halving find
        p = self.p
        while p[k] != k:
            p[k] = p[p[k]]
            k = p[k]
        return k

    def define(self, alpha: int, col: int) -> None:
        if self.live >= self.max_cosets:
            raise CosetLimitExceeded(
                f"enumeration needs more than {self.max_cosets} live cosets")
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self.live += 1
        self.table[alpha][col] = beta
        self.table[beta][col ^ 1] = alpha

    def merge(self, k: int, l: int) -> None:
        k, l = self.rep(k), self.rep(l)
        if k != l:
            mu, nu = (k, l) if k < l else (l, k)
            self.p[nu] = mu
            self.live -= 1
            self.queue.append(nu)

    def coincidence(self, alpha: int, beta: int) -> None:
        self.merge(alpha, beta)
        while self.queue:
            gamma = self.queue.popleft()
            row = self.table[gamma]
            for col in range(self.ncols):
                delta = row[col]
                if delta is None:
                    continue
                self.table[delta][col ^ 1] = None
                mu = self.rep(gamma)
                nu = self.rep(delta)
                tm = self.table[mu][col]
                if tm is not None:
                    self.merge(nu, tm)
                    continue
                tn = self.table[nu][col ^ 1]
                if tn is not None:
                    self.merge(mu, tn)
                    continue
                self.table[mu][col] = nu
                self.table[nu][col ^ 1] = mu

    def scan_and_fill(self, alpha: int, colword: Sequence[int]) -> None:
        if not colword:
            return
        f = alpha
        i = 0
        b = alpha
        j = len(colword) - 1
        while True:
            while i <= j and self.table[f][colword[i]] is not None:
                f = self.table[f][colword[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][colword[j] ^ 1] is not None:
                b = self.table[b][colword[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                # deduction closes the gap
                self.table[f][colword[i]] = b
                self.table[b][colword[i] ^ 1] = f
                return
            self.define(f, colword[i])


def todd_coxeter(presentation: Presentation, subgroup: Sequence[Sequence[int]],
                 max_cosets: int = 1_000_000,
                 fill_order: str = "forward") -> CosetTable:
    """Enumerate the right cosets of the subgroup generated by the given words.

    Raises CosetLimitExceeded when more than max_cosets live cosets are ever
    needed (possible infinite index, or budget too small).  fill_order selects
    the processing order of relators and of blank-entry fills ("forward" or
    "reversed"); any order yields the same standardized table.
    """
    if max_cosets < 1:
        raise InvalidParams("max_cosets must be at least 1")
    if fill_order not in ("forward", "reversed"):
        raise InvalidParams(f"unknown fill_order {fill_order!r}")
    sub_words = [free_reduce(w) for w in subgroup]
    for w in sub_words:
        for letter in w:
            if not 1 <= abs(letter) <= presentation.num_generators:
                raise ValueError(f"subgroup word letter {letter} out of range")

    rel_colwords = [tuple(_column(x) for x in rel)
                    for rel in presentation.relators if rel]
    sub_colwords = [tuple(_column(x) for x in w) for w in sub_words if w]
    cols = list(range(2 * presentation.num_generators))
    if fill_order == "reversed":
        rel_colwords = rel_colwords[::-1]
        cols = cols[::-1]

    st = _Enumerator(presentation.num_generators, max_cosets)
    for cw in sub_colwords:
        st.scan_and_fill(0, cw)
    alpha = 0
    while alpha < len(st.table):
        if st.p[alpha] != alpha:
            alpha += 1
            continue
        for cw in rel_colwords:
            st.scan_and_fill(alpha, cw)
            if st.p[alpha] != alpha:
                break
        if st.p[alpha] == alpha:
            for col in cols:
                if st.table[alpha][col] is None:
                    st.define(alpha, col)
        alpha += 1

    table = _standardize(st)
    ct = CosetTable(presentation, sub_words, table, closed=True)
    _verify_closed(ct)
    return ct


def _standardize(st: _Enumerator) -> list[list[int]]:
    """Compress to live cosets, renumbered breadth-first from coset 0."""
    root = st.rep(0)
    order = [root]
    new_index = {root: 0}
    for c in order:
        for col in range(st.ncols):
            d = st.table[c][col]
            assert d is not None, "table not closed after enumeration"
            d = st.rep(d)
            if d not in new_index:
                new_index[d] = len(order)
                order.append(d)
    live = sum(1 for i, x in enumerate(st.p) if i == x)
    assert len(order) == live, "closed table must be connected"
    out = []
    for c in order:
        out.append([new_index[st.rep(st.table[c][col])] for col in range(st.ncols)])
    return out


def _verify_closed(ct: CosetTable) -> None:
    table = ct.table
    for c in range(len(table)):
        for rel in ct.presentation.relators:
            d = c
            for letter in rel:
                d = table[d][_column(letter)]
            assert d == c, f"relator fails to trace at coset {c}"
    for w in ct.subgroup_words:
        d = 0
        for letter in w:
            d = table[d][_column(letter)]
        assert d == 0, "subgroup word moves coset 0"


def coset_action(ct: CosetTable) -> PermGroup:
    """One permutation of the coset indices per presentation generator."""
    if not ct.closed:
        raise TableNotClosed("coset action requires a closed table")
    n = ct.num_cosets
    gens = [Permutation([ct.table[c][2 * i] for c in range(n)])
            for i in range(ct.presentation.num_generators)]
    return PermGroup(gens, n)


def action_of_word(ct: CosetTable, word: Sequence[int]) -> Permutation:
    if not ct.closed:
        raise TableNotClosed("word action requires a closed table")
    word = free_reduce(word)
    return Permutation([ct.trace(c, word) for c in range(ct.num_cosets)])


# ---------------------------------------------------------------------------
# the two-parameter family of groups acting on the 4-valent coset graphs


def build_gamma_presentation(t: int, sign: str):
    """Presentation of the order 2^(2t+1) * 4t group: an extraspecial-type
    2-group of order 2^(2t+1) extended by a dihedral group of order 4t, with
    sign selecting the split (+) or nonsplit (-) extension.

    Generators: x_0..x_{2t-1}, z, a, b.  Returns (presentation, subgroup
    words generating the vertex stabilizer, edge word).
    """
    if t < 2:
        raise InvalidParams(f"t must be at least 2, got {t}")
    if sign not in ("+", "-"):
        raise InvalidParams(f"sign must be '+' or '-', got {sign!r}")
    x = list(range(1, 2 * t + 1))
    z = 2 * t + 1
    a = 2 * t + 2
    b = 2 * t + 3
    names = [f"x{i}" for i in range(2 * t)] + ["z", "a", "b"]

    rels: list[Word] = []
    for i in range(2 * t):
        rels.append((x[i], x[i]))
    rels.append((z, z))
    for i in range(2 * t):
        rels.append(commutator_word((x[i],), (z,)))
    for i in range(2 * t):
        for j in range(i + 1, 2 * t):
            if j - i != t:
                rels.append(commutator_word((x[i],), (x[j],)))
    for i in range(t):
        rels.append(commutator_word((x[i],), (x[t + i],)) + (-z,))
    # conjugation action of the dihedral part on the x_i
    for i in range(2 * t):
        rels.append(free_reduce((-a, x[i], a, -x[(i + 1) % (2 * t)])))
    for i in range(2 * t):
        rels.append(free_reduce((-b, x[i], b, -x[(t - 1 - i) % (2 * t)])))
    rels.append((b, b))
    rels.append(free_reduce((-b, a, b, a)))  # a^b = a^-1
    if sign == "+":
        rels.append((a,) * (2 * t))
    else:
        rels.append((a,) * (2 * t) + (-z,))

    pres = Presentation(names, rels)
    subgroup_words = [(x[i],) for i in range(t)] + [(b,)]
    edge_word: Word = (a,)
    return pres, subgroup_words, edge_word


# ---------------------------------------------------------------------------
# text format
#
#   gens: x0 x1 x2 x3 z a b
#   a^4 z^-1
#   [x0, x2]
#   b^2

_ATOM = re.compile(
    r"\[\s*([A-Za-z_]\w*)\s*,\s*([A-Za-z_]\w*)\s*\]"
    r"|([A-Za-z_]\w*)(?:\^(-?\d+))?")


def parse_word(text: str, name_index: dict[str, int]) -> Word:
    word: list[int] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _ATOM.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at: {text[pos:]!r}")
        if m.group(1):
            u, v = m.group(1), m.group(2)
            if u not in name_index or v not in name_index:
                raise ValueError(f"unknown generator in commutator [{u}, {v}]")
            word.extend(commutator_word((name_index[u],), (name_index[v],)))
        else:
            name = m.group(3)
            if name not in name_index:
                raise ValueError(f"unknown generator {name!r}")
            exp = int(m.group(4)) if m.group(4) else 1
            letter = name_index[name]
            if exp < 0:
                word.extend([-letter] * (-exp))
            else:
                word.extend([letter] * exp)
        pos = m.end()
    return free_reduce(word)


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    if not word:
        return ""
    atoms = []
    run_letter, run = word[0], 1
    for letter in list(word[1:]) + [0]:
        if letter == run_letter:
            run += 1
            continue
        name = names[abs(run_letter) - 1]
        exp = run if run_letter > 0 else -run
        atoms.append(name if exp == 1 else f"{name}^{exp}")
        run_letter, run = letter, 1
    return " ".join(atoms)


def format_presentation(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.generator_names)]
    lines.extend(format_word(rel, p.generator_names) for rel in p.relators)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("gens:"):
        raise ValueError("presentation must start with a 'gens:' line")
    names = lines[0][len("gens:"):].split()
    name_index = {name: i + 1 for i, name in enumerate(names)}
    relators = [parse_word(ln, name_index) for ln in lines[1:]]
    return Presentation(names, relators)


def load_presentation(path: str) -> Presentation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def save_presentation(p: Presentation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_presentation(p))
