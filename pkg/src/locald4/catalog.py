"""Standard groups realized as explicit permutation groups.

Everything returns a PermGroup on {0, ..., degree-1}.  Orders are
asserted where construction correctness is not obvious from the
generators alone (Mathieu groups, projective semilinear groups).
"""

from __future__ import annotations

from .errors import InvalidParams
from .perm import PermGroup, Permutation, group_from_generators, trivial_group


def symmetric(n: int) -> PermGroup:
    """Sym(n) in its natural action."""
    if n < 1:
        raise InvalidParams(f"symmetric: n must be >= 1, got {n}")
    if n == 1:
        return trivial_group(1)
    if n == 2:
        return group_from_generators([Permutation.from_cycles(2, [(0, 1)])])
    cycle = Permutation(tuple(range(1, n)) + (0,))
    swap = Permutation.from_cycles(n, [(0, 1)])
    return group_from_generators([cycle, swap])


def alternating(n: int) -> PermGroup:
    """Alt(n) in its natural action (trivial for n <= 2)."""
    if n < 1:
        raise InvalidParams(f"alternating: n must be >= 1, got {n}")
    if n <= 2:
        return trivial_group(n)
    if n == 3:
        return group_from_generators([Permutation.from_cycles(3, [(0, 1, 2)])])
    three = Permutation.from_cycles(n, [(0, 1, 2)])
    if n % 2 == 1:
        big = Permutation(tuple(range(1, n)) + (0,))
    else:
        # even n: the full cycle is odd, rotate points 1..n-1 instead
        big = Permutation((0,) + tuple(range(2, n)) + (1,))
    return group_from_generators([three, big])


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise InvalidParams(f"cyclic: n must be >= 1, got {n}")
    if n == 1:
        return trivial_group(1)
    return group_from_generators([Permutation(tuple(range(1, n)) + (0,))])


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on the vertices of an n-gon, n >= 3."""
    if n < 3:
        raise InvalidParams(f"dihedral: n must be >= 3, got {n}")
    rot = Permutation(tuple(range(1, n)) + (0,))
    ref = Permutation(tuple((n - i) % n for i in range(n)))
    return group_from_generators([rot, ref])


def klein_four() -> PermGroup:
    """Klein four-group as the regular action on 4 points."""
    a = Permutation.from_cycles(4, [(0, 1), (2, 3)])
    b = Permutation.from_cycles(4, [(0, 2), (1, 3)])
    return group_from_generators([a, b])


def mathieu11() -> PermGroup:
    """Mathieu group M11 on 11 points, order 7920."""
    a = Permutation(tuple(range(1, 11)) + (0,))
    b = Permutation.from_cycles(11, [(2, 6, 10, 7), (3, 9, 4, 5)])
    g = group_from_generators([a, b])
    assert g.order == 7920
    return g


def mathieu12() -> PermGroup:
    """Mathieu group M12 on 12 points, order 95040."""
    a = Permutation(tuple(range(1, 11)) + (0, 11))
    b = Permutation.from_cycles(12, [(2, 6, 10, 7), (3, 9, 4, 5)])
    c = Permutation.from_cycles(
        12, [(0, 11), (1, 10), (2, 5), (3, 7), (4, 8), (6, 9)]
    )
    g = group_from_generators([a, b, c])
    assert g.order == 95040
    return g


# ---------------------------------------------------------------------------
# Projective semilinear group PGammaL(2,9) on the projective line.
#
# GF(9) = GF(3)[t] with t^2 = 2.  The element a + b*t is encoded as the
# integer a + 3b in {0..8}; the point at infinity is 9.

def _gf9_mul(x: int, y: int) -> int:
    a1, b1 = x % 3, x // 3
    a2, b2 = y % 3, y // 3
    return (a1 * a2 + 2 * b1 * b2) % 3 + 3 * ((a1 * b2 + a2 * b1) % 3)


def _gf9_inv(x: int) -> int:
    assert x != 0
    for y in range(1, 9):
        if _gf9_mul(x, y) == 1:
            return y
    raise AssertionError("GF(9) element without inverse")


def _gf9_neg(x: int) -> int:
    a, b = x % 3, x // 3
    return (-a) % 3 + 3 * ((-b) % 3)


def pgl_2_9() -> PermGroup:
    """PGL(2,9) on the 10 points of the projective line over GF(9)."""
    inf = 9
    shift = Permutation(tuple((x % 3 + 1) % 3 + 3 * (x // 3) for x in range(9)) + (inf,))
    lam = 4  # 1 + t, a primitive element: (1+t)^2 = 2t, (1+t)^4 = 2, (1+t)^8 = 1
    mul = Permutation(tuple(_gf9_mul(lam, x) for x in range(9)) + (inf,))
    inv_images = [inf] + [_gf9_neg(_gf9_inv(x)) for x in range(1, 9)] + [0]
    invm = Permutation(tuple(inv_images))  # x -> -1/x
    g = group_from_generators([shift, mul, invm])
    assert g.order == 720
    return g


def pgammal_2_9() -> PermGroup:
    """PGammaL(2,9) on 10 points: PGL(2,9) extended by the Frobenius map."""
    base = pgl_2_9()
    frob_images = tuple(_gf9_mul(x, _gf9_mul(x, x)) for x in range(9)) + (9,)
    frob = Permutation(frob_images)
    g = group_from_generators(list(base.generators) + [frob])
    assert g.order == 1440
    return g


# ---------------------------------------------------------------------------
# General linear groups acting on nonzero vectors.

def _vector_of_index(idx: int, n: int, q: int) -> list[int]:
    value = idx + 1
    v = []
    for _ in range(n):
        v.append(value % q)
        value //= q
    return v


def _index_of_vector(v: list[int], q: int) -> int:
    value = 0
    for i in reversed(range(len(v))):
        value = value * q + v[i]
    return value - 1


def _matrix_perm(mat: list[list[int]], n: int, q: int) -> Permutation:
    # row vector convention: v -> v * mat
    deg = q**n - 1
    images = []
    for idx in range(deg):
        v = _vector_of_index(idx, n, q)
        w = [sum(v[i] * mat[i][j] for i in range(n)) % q for j in range(n)]
        images.append(_index_of_vector(w, q))
    return Permutation(tuple(images))


def _primitive_root(q: int) -> int:
    for g in range(2, q):
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = x * g % q
            seen.add(x)
        if len(seen) == q - 1:
            return g
    raise InvalidParams(f"no primitive root mod {q}; is {q} prime?")


def general_linear_on_vectors(n: int, q: int) -> PermGroup:
    """GL(n,q) for prime q, acting on the q^n - 1 nonzero row vectors.

    Vector (v_0, ..., v_{n-1}) sits at index sum(v_i * q^i) - 1.
    """
    if n < 1:
        raise InvalidParams(f"general_linear_on_vectors: n must be >= 1, got {n}")
    if q < 2 or any(q % p == 0 for p in range(2, q)):
        raise InvalidParams(f"general_linear_on_vectors: q must be prime, got {q}")
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    diag = [row[:] for row in ident]
    diag[0][0] = _primitive_root(q) if q > 2 else 1
    if n == 1:
        mats = [diag]
    else:
        transvec = [row[:] for row in ident]
        transvec[0][1] = 1
        cycle = [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)]
        mats = [transvec, cycle] + ([diag] if q > 2 else [])
    gens = [_matrix_perm(m, n, q) for m in mats]
    g = group_from_generators(gens, degree=q**n - 1)
    expected = 1
    for i in range(n):
        expected *= q**n - q**i
    assert g.order == expected
    return g


# ---------------------------------------------------------------------------
# Product constructions.

def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of the two domains."""
    da, db = a.degree, b.degree
    gens = []
    for p in a.generators:
        gens.append(Permutation(tuple(p.images) + tuple(range(da, da + db))))
    for p in b.generators:
        gens.append(Permutation(tuple(range(da)) + tuple(x + da for x in p.images)))
    return group_from_generators(gens, degree=da + db)


def wreath_product(bottom: PermGroup, top: PermGroup) -> PermGroup:
    """Imprimitive wreath product: |top.degree| copies of the bottom domain.

    Point (i, j) = position i of block j lives at index j * bottom.degree + i.
    The base group acts blockwise, the top group permutes blocks.
    """
    h, k = bottom.degree, top.degree
    deg = h * k
    gens = []
    for j in range(k):
        for p in bottom.generators:
            images = list(range(deg))
            for i in range(h):
                images[j * h + i] = j * h + p(i)
            gens.append(Permutation(tuple(images)))
    for p in top.generators:
        images = [0] * deg
        for j in range(k):
            for i in range(h):
                images[j * h + i] = p(j) * h + i
        gens.append(Permutation(tuple(images)))
    g = group_from_generators(gens, degree=deg)
    assert g.order == bottom.order**k * top.order
    return g
