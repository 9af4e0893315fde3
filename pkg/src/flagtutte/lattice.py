"""Base polytopes, cones at vertices and exact Hilbert series.

Every polytope this library produces is a generalized permutohedron, so
membership, lattice-point enumeration and face computations all run off the
submodular description z: x(S) <= z(S) for all S with x(E) = z(E), kept as
a full bitmask table.  Polytopes given only by vertices (test
counterexamples, slices) fall back to exact convex-hull membership.

Cones are triangulated by a pulling triangulation over their extreme rays;
pieces are made half-open towards a deterministic generic interior vector,
and fundamental parallelepipeds are enumerated through an integer
diagonalization of the generator matrix, so the Hilbert series

    Hilb(C) = sum over pieces of (sum_{b in FPP} t^b) / prod (1 - t^u)

is exact.
"""

import itertools
from fractions import Fraction
from math import ceil, floor

from .errors import (NegativeShift, NoDecomposition, NotAVertex, NotPointed,
                     OutOfRange, Verdict)
from . import linalg
from .laurent import KRational, LaurentPoly
from .polyflag import polymatroid_of_flag


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class LatticePolytope:
    """Vertex list plus an optional submodular description.

    `z` is a tuple of length 2^n indexed by subset bitmask with z[0] = 0;
    the polytope is {x : x(S) <= z[S] for all S, x(E) = z[full]}.
    """

    __slots__ = ("n", "vertices", "z")

    def __init__(self, n, vertices, z=None):
        self.n = n
        self.vertices = tuple(sorted(tuple(v) for v in set(map(tuple, vertices))))
        self.z = tuple(z) if z is not None else None

    @property
    def dim(self):
        if len(self.vertices) <= 1:
            return 0
        v0 = self.vertices[0]
        return linalg.matrix_rank([_vsub(v, v0) for v in self.vertices[1:]])

    def contains(self, point):
        if self.z is not None:
            return _gp_contains(self.n, self.z, point)
        return linalg.in_hull(self.vertices, point)

    def translate(self, shift):
        verts = [_vadd(v, shift) for v in self.vertices]
        z = None
        if self.z is not None:
            z = [self.z[m] + sum(shift[i] for i in range(self.n) if m >> i & 1)
                 for m in range(1 << self.n)]
        return LatticePolytope(self.n, verts, z)

    def dilate(self, k):
        verts = [tuple(k * x for x in v) for v in self.vertices]
        z = None if self.z is None else [k * v for v in self.z]
        return LatticePolytope(self.n, verts, z)

    def __eq__(self, other):
        return (isinstance(other, LatticePolytope) and self.n == other.n
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.n, self.vertices))

    def __repr__(self):
        return f"LatticePolytope(n={self.n}, {len(self.vertices)} vertices)"


def _gp_contains(n, z, point):
    if len(point) != n:
        raise OutOfRange(f"point has {len(point)} coordinates, need {n}")
    full = (1 << n) - 1
    if sum(point) != z[full]:
        return False
    for m in range(1, full):
        s = 0
        for i in range(n):
            if m >> i & 1:
                s += point[i]
        if s > z[m]:
            return False
    return True


def _greedy_vertex(n, z, order):
    x = [0] * n
    m = 0
    for e in order:
        before = z[m]
        m |= 1 << e
        x[e] = z[m] - before
    return tuple(x)


def _gp_vertices(n, z):
    """All greedy vectors over the n! orderings (the vertex set)."""
    return sorted({_greedy_vertex(n, z, order)
                   for order in itertools.permutations(range(n))})


def base_polytope(matroid):
    """Convex hull of the indicator vectors of the bases."""
    n = matroid.n
    verts = [tuple(1 if i in set(b) else 0 for i in range(n))
             for b in matroid.bases]
    return LatticePolytope(n, verts, matroid.rank_table())


def poly_base_polytope(p):
    return LatticePolytope(p.n, _gp_vertices(p.n, p.rank_table), p.rank_table)


def flag_polytope(flag_matroid):
    """Minkowski sum of the constituent base polytopes."""
    return poly_base_polytope(polymatroid_of_flag(flag_matroid))


def polytope_from_lattice_points(points):
    """Generalized permutohedron spanned by a full set of lattice points.

    Builds the submodular description from coordinate-sum maxima and checks
    that it reproduces exactly the given points (raising otherwise), so the
    result is safe to feed to the counting machinery.
    """
    points = sorted(set(map(tuple, points)))
    if not points:
        raise OutOfRange("empty point set")
    n = len(points[0])
    z = [max(sum(p[i] for i in range(n) if m >> i & 1) for p in points)
         for m in range(1 << n)]
    z[0] = 0
    sums = {sum(p) for p in points}
    if len(sums) != 1 or lattice_points_of_table(n, z) != points:
        raise OutOfRange("point set is not a generalized permutohedron")
    return LatticePolytope(n, _gp_vertices(n, tuple(z)), z)


# ------------------------------------------------------ lattice enumeration

def lattice_points_of_table(n, z):
    """Integer points of {x(S) <= z(S), x(E) = z(E)}, lex sorted."""
    full = (1 << n) - 1
    out = []
    x = [0] * n

    def rec(j, psums):
        if j == n - 1:
            v = z[full] - psums[-1]
            for s in range(1 << j):
                if psums[s] + v > z[s | (1 << j)]:
                    return
            x[j] = v
            out.append(tuple(x))
            return
        hi = min(z[s | (1 << j)] - psums[s] for s in range(1 << j))
        rest = 0
        for i in range(j + 1, n):
            rest |= 1 << i
        maxrest = min(z[rest | s] - psums[s] for s in range(1 << j))
        lo = z[full] - psums[-1] - maxrest
        for v in range(lo, hi + 1):
            x[j] = v
            rec(j + 1, psums + [ps + v for ps in psums])

    if n == 1:
        pt = (z[full],)
        return [pt] if z[full] <= z[1] else []
    rec(0, [0])
    return out


def count_lattice_points_of_table(n, z):
    """Same predicate as :func:`lattice_points_of_table`, counted.

    Closes the last two coordinates by an interval computation instead of
    enumerating them, which is what makes rank-5 grids affordable.
    """
    full = (1 << n) - 1
    if n == 1:
        return 1 if z[full] <= z[1] else 0
    count = 0
    a, b = n - 2, n - 1
    mask_a, mask_b, mask_ab = 1 << a, 1 << b, (1 << a) | (1 << b)

    def rec(j, psums):
        nonlocal count
        if j == a:
            s_needed = z[full] - psums[-1]
            ua = min(z[s | mask_a] - psums[s] for s in range(1 << j))
            ub = min(z[s | mask_b] - psums[s] for s in range(1 << j))
            for s in range(1 << j):
                if psums[s] + s_needed > z[s | mask_ab]:
                    return
            # x_a in [s_needed - ub, ua], x_b determined
            width = ua + ub - s_needed + 1
            if width > 0:
                count += width
            return
        hi = min(z[s | (1 << j)] - psums[s] for s in range(1 << j))
        rest = 0
        for i in range(j + 1, n):
            rest |= 1 << i
        maxrest = min(z[rest | s] - psums[s] for s in range(1 << j))
        lo = z[full] - psums[-1] - maxrest
        for v in range(lo, hi + 1):
            rec(j + 1, psums + [ps + v for ps in psums])

    rec(0, [0])
    return count


def lattice_points(p):
    """All lattice points of the polytope, lex sorted."""
    if p.z is not None:
        return lattice_points_of_table(p.n, p.z)
    lo = [min(v[i] for v in p.vertices) for i in range(p.n)]
    hi = [max(v[i] for v in p.vertices) for i in range(p.n)]
    out = []
    for cand in itertools.product(*[range(l, h + 1) for l, h in zip(lo, hi)]):
        if linalg.in_hull(p.vertices, cand):
            out.append(cand)
    return out


# ----------------------------------------------------------------- faces

def _tight_masks(n, z, v):
    full = 1 << n
    sums = [0] * full
    for m in range(1, full):
        low = m & -m
        sums[m] = sums[m ^ low] + v[low.bit_length() - 1]
    return frozenset(m for m in range(full) if sums[m] == z[m])


def edges(p):
    """Vertex pairs forming 1-faces, as index pairs into p.vertices.

    Uses the tight-set test: the minimal face containing two vertices is
    cut out by their common tight constraints; it is an edge exactly when
    no third vertex is tight on all of them.
    """
    verts = p.vertices
    if p.z is None:
        if len(verts) == 2:
            return [(0, 1)]
        if len(verts) <= 1:
            return []
        raise OutOfRange("edge enumeration needs a submodular description")
    tight = [_tight_masks(p.n, p.z, v) for v in verts]
    out = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            common = tight[i] & tight[j]
            members = [k for k, t in enumerate(tight)
                       if common <= t]
            if members == [i, j]:
                out.append((i, j))
    return out


def edge_direction_check(p, ranks=None):
    """Every edge parallel to some e_i - e_j; flag vertices well shaped."""
    verts = p.vertices
    for i, j in edges(p):
        d = _vsub(verts[j], verts[i])
        support = [x for x in d if x != 0]
        if len(support) != 2 or support[0] + support[1] != 0:
            return Verdict(False, "edge not parallel to e_i - e_j",
                           witness=(verts[i], verts[j]))
    if ranks is not None:
        expected = _rank_vector_pattern(p.n, ranks)
        for v in verts:
            if tuple(sorted(v, reverse=True)) != expected:
                return Verdict(False, "vertex is not a rank vector, expected "
                               f"{expected}", witness=v)
    return Verdict(True)


def _rank_vector_pattern(n, ranks):
    s = len(ranks)
    pattern = []
    prev = 0
    for level, k in enumerate(ranks):
        pattern.extend([s - level] * (k - prev))
        prev = k
    pattern.extend([0] * (n - prev))
    return tuple(pattern)


# ------------------------------------------------------------------ cones

class RationalCone:
    """Pointed rational cone with apex at the origin."""

    __slots__ = ("n", "generators", "_rays")

    def __init__(self, generators, n=None):
        gens = sorted({linalg.primitive(g) for g in map(tuple, generators)
                       if any(x != 0 for x in g)})
        if n is None:
            if not gens:
                raise OutOfRange("dimension needed for the zero cone")
            n = len(gens[0])
        self.n = n
        self.generators = tuple(gens)
        self._rays = None

    def is_pointed(self):
        if not self.generators:
            return True
        cols = [list(g) + [1] for g in self.generators]
        return linalg.lp_nonneg_solve(cols, [0] * self.n + [1]) is None

    def rays(self):
        """Extreme rays (primitive), lex sorted."""
        if self._rays is None:
            if not self.is_pointed():
                raise NotPointed("cone contains a line")
            work = list(self.generators)
            changed = True
            while changed:
                changed = False
                for i, g in enumerate(work):
                    others = work[:i] + work[i + 1:]
                    if others and linalg.in_cone(others, g):
                        work.pop(i)
                        changed = True
                        break
            self._rays = tuple(sorted(work))
        return self._rays

    def dim(self):
        return linalg.matrix_rank(self.generators) if self.generators else 0

    def contains(self, point):
        return linalg.in_cone(self.generators, point)

    def __repr__(self):
        return f"RationalCone({list(self.generators)})"


def cone_at_vertex(p, v):
    """Cone spanned by u - v over all vertices u of the polytope."""
    v = tuple(v)
    if v not in p.vertices:
        raise NotAVertex(f"{v} is not a vertex")
    return RationalCone([_vsub(u, v) for u in p.vertices if u != v], n=p.n)


class HalfOpenSimplicialCone:
    """Linearly independent primitive generators with open-facet flags."""

    __slots__ = ("n", "generators", "open_flags")

    def __init__(self, generators, open_flags):
        self.generators = tuple(map(tuple, generators))
        self.open_flags = tuple(open_flags)
        self.n = len(self.generators[0]) if self.generators else 0

    def parallelepiped_points(self):
        """Lattice points of the half-open fundamental parallelepiped.

        Enumerated through residue classes of the generator lattice inside
        its saturation; the count equals the index (the diagonal product).
        """
        d = len(self.generators)
        if d == 0:
            return [()]
        n = self.n
        rows = [[g[i] for g in self.generators] for i in range(n)]  # n x d
        pinv, diag = linalg.integer_diagonalize(rows)
        assert len(diag) == d, "generators must be linearly independent"
        points = []
        for residue in itertools.product(*[range(di) for di in diag]):
            x0 = [sum(pinv[i][j] * residue[j] for j in range(d))
                  for i in range(n)]
            lam = linalg.solve_exact(rows, x0)
            shifted = []
            for lj, open_j in zip(lam, self.open_flags):
                if open_j:
                    shifted.append(lj - ceil(lj) + 1)   # into (0, 1]
                else:
                    shifted.append(lj - floor(lj))      # into [0, 1)
            pt = tuple(
                sum(sj * self.generators[j][i] for j, sj in enumerate(shifted))
                for i in range(n))
            assert all(x.denominator == 1 for x in map(Fraction, pt))
            points.append(tuple(int(x) for x in pt))
        assert len(set(points)) == len(points)
        return sorted(points)

    def __repr__(self):
        marks = ["(" if o else "[" for o in self.open_flags]
        gens = ", ".join(f"{m}{g}" for m, g in zip(marks, self.generators))
        return f"HalfOpenSimplicialCone({gens})"


def _span_coordinates(rays):
    """Exact coordinates of the rays in the rref basis of their span.

    rref pivot columns are unit columns, so the coordinates of a vector in
    the row space are just its entries at the pivot columns.
    """
    _, pivots = linalg.row_reduce(linalg.frac_rows(rays))
    return [[Fraction(r[col]) for col in pivots] for r in rays]


def _facet_normals_piece(coord_gens):
    """Inward normals of the facets of a simplicial cone, in span coords."""
    d = len(coord_gens)
    normals = []
    for j in range(d):
        others = [coord_gens[k] for k in range(d) if k != j]
        if not others:  # a ray: the facet is the apex
            normals.append(list(coord_gens[j]))
            continue
        ns = linalg.nullspace(others)
        assert len(ns) == 1
        h = ns[0]
        val = _dot(h, coord_gens[j])
        assert val != 0
        if val < 0:
            h = [-x for x in h]
        normals.append(h)
    return normals


def _facets_of(coord_rays):
    """Facets of Cone(coord_rays), full-dimensional in its coordinates.

    Returns a list of ray-index frozensets, each the set of rays lying on
    one supporting hyperplane.  Every facet is spanned by d-1 independent
    rays, so scanning (d-1)-subsets finds them all.
    """
    d = len(coord_rays[0])
    m = len(coord_rays)
    facets = set()
    for subset in itertools.combinations(range(m), d - 1):
        sub = [coord_rays[i] for i in subset]
        ns = linalg.nullspace(sub)
        if len(ns) != 1:
            continue
        h = ns[0]
        vals = [_dot(h, r) for r in coord_rays]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            facets.add(frozenset(i for i, v in enumerate(vals) if v == 0))
    return sorted(facets, key=sorted)


def _pulling_triangulation(rays, indices):
    """Index tuples of a triangulation of Cone(rays), pulling at the first.

    Rays are re-coordinatized into their own span at every level so facet
    normals are always computed full-dimensionally.
    """
    indices = list(indices)
    coord_rays = _span_coordinates(rays)
    d = len(coord_rays[0])
    if len(coord_rays) == d:
        return [tuple(sorted(indices))]
    pivot = 0
    out = []
    facets = _facets_of(coord_rays)
    assert facets, "a non-simplicial cone must have facets"
    for facet in facets:
        if pivot in facet:
            continue
        sub_idx = sorted(facet)
        sub_rays = [rays[i] for i in sub_idx]
        for piece in _pulling_triangulation(sub_rays,
                                            [indices[i] for i in sub_idx]):
            out.append(tuple(sorted(set(piece) | {indices[pivot]})))
    assert out, "pulling produced no pieces"
    return out


def triangulate(cone):
    """Disjoint half-open simplicial decomposition of a pointed cone.

    Pieces are cones over subsets of the extreme rays from a pulling
    triangulation; facets are opened by visibility from a deterministic
    generic interior vector (weights 1, x, x^2, ... over the sorted rays,
    x shrunk until no orthogonality remains), so the pieces partition the
    cone exactly.
    """
    rays = cone.rays()
    if not rays:
        return [HalfOpenSimplicialCone((), ())]
    coords = _span_coordinates(rays)
    pieces_idx = _pulling_triangulation(rays, range(len(rays)))
    piece_normals = []
    for piece in pieces_idx:
        piece_normals.append(_facet_normals_piece([coords[i] for i in piece]))

    for denom in itertools.count(2):
        x = Fraction(1, denom)
        w = [Fraction(0)] * len(coords[0])
        scale = Fraction(1)
        for c in coords:
            w = [wi + scale * ci for wi, ci in zip(w, c)]
            scale *= x
        if all(_dot(h, w) != 0
               for normals in piece_normals for h in normals):
            break
    out = []
    for piece, normals in zip(pieces_idx, piece_normals):
        flags = tuple(_dot(h, w) < 0 for h in normals)
        out.append(HalfOpenSimplicialCone([rays[i] for i in piece], flags))
    return out


def hilbert_series(cone):
    """Exact Hilbert series sum_{a in C cap Z^n} t^a as a KRational."""
    if not cone.is_pointed():
        raise NotPointed("cone contains a line")
    n = cone.n
    total = KRational(LaurentPoly.zero(n))
    for piece in triangulate(cone):
        num = LaurentPoly(n, {})
        for b in piece.parallelepiped_points():
            b = b if b else (0,) * n
            num = num + LaurentPoly.monomial(b)
        total = total + KRational(num, piece.generators)
    return total


def hilbert_numerator(cone, denom):
    """The Laurent polynomial Hilb(C) * prod_{a in denom} (1 - t^a).

    Exactness is asserted: a leftover denominator factor raises
    InexactDivision and signals an upstream bug.
    """
    kr = hilbert_series(cone)
    num = kr.num
    for a in denom:
        num = num * LaurentPoly.one_minus(a)
    return KRational(num, kr.den).as_laurent()


# --------------------------------------------- Minkowski sums and normality

def minkowski_sum(polytopes):
    """Sum polytope with added submodular descriptions."""
    ns = {p.n for p in polytopes}
    if len(ns) != 1:
        raise OutOfRange(f"ambient dimensions {sorted(ns)} differ")
    n = ns.pop()
    if any(p.z is None for p in polytopes):
        raise OutOfRange("summands need submodular descriptions")
    z = tuple(sum(p.z[m] for p in polytopes) for m in range(1 << n))
    return LatticePolytope(n, _gp_vertices(n, z), z)


def decompose_lattice_point(point, polytopes):
    """Write `point` as a sum of lattice points, one per summand.

    Backtracking in canonical order; raises NoDecomposition when no split
    exists (impossible for polymatroid-polytope summands).
    """
    point = tuple(point)
    n = polytopes[0].n
    suffix_z = [None] * (len(polytopes) + 1)
    acc = (0,) * (1 << n)
    for i in range(len(polytopes) - 1, -1, -1):
        acc = tuple(a + b for a, b in zip(acc, polytopes[i].z))
        suffix_z[i] = acc
    parts = []

    def rec(i, residual):
        if i == len(polytopes) - 1:
            if _gp_contains(n, polytopes[i].z, residual):
                parts.append(residual)
                return True
            return False
        for s in lattice_points(polytopes[i]):
            rest = _vsub(residual, s)
            if _gp_contains(n, suffix_z[i + 1], rest):
                parts.append(s)
                if rec(i + 1, rest):
                    return True
                parts.pop()
        return False

    if len(polytopes) == 1:
        if polytopes[0].contains(point):
            return [point]
        raise NoDecomposition(f"{point} not in the polytope")
    if rec(0, point):
        return parts
    raise NoDecomposition(f"{point} admits no lattice decomposition")


def is_normal(p, kmax):
    """Every lattice point of kP a sum of k lattice points of P, k <= kmax.

    The polytope is translated so its lex-least vertex sits at the origin
    before checking; the ambient lattice Z^n is used throughout.
    """
    if kmax < 2:
        raise OutOfRange("kmax must be at least 2")
    shifted = p.translate(tuple(-x for x in p.vertices[0]))
    pts = lattice_points(shifted)
    ptset = set(pts)
    memo = {}

    def can(target, k, start):
        if k == 1:
            return target in ptset
        key = (target, k, start)
        if key in memo:
            return memo[key]
        ok = False
        for idx in range(start, len(pts)):
            s = pts[idx]
            rest = _vsub(target, s)
            if can(rest, k - 1, idx):
                ok = True
                break
        memo[key] = ok
        return ok

    for k in range(2, kmax + 1):
        for q in lattice_points(shifted.dilate(k)):
            if not can(q, k, 0):
                witness = _vadd(q, tuple(k * x for x in p.vertices[0]))
                return Verdict(False, f"point of {k}P not a {k}-fold sum",
                               witness=witness)
    return Verdict(True)


def count_shifted(p, u, t):
    """Number of lattice points of P + u*simplex + t*(-simplex).

    Support functions add: z'(S) = z(S) + u on proper nonempty S and
    x(E) = z(E) + u - t.
    """
    if u < 0 or t < 0:
        raise NegativeShift(f"u={u}, t={t}")
    if p.z is None:
        raise OutOfRange("count_shifted needs a submodular description")
    n = p.n
    full = (1 << n) - 1
    z = list(p.z)
    for m in range(1, full):
        z[m] += u
    z[full] += u - t
    return count_lattice_points_of_table(n, tuple(z))
