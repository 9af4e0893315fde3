"""Torus-fixed-point localization on flag varieties.

A class is stored by its restrictions to the torus-fixed points: set-flags
F with the chart characters t_j^{-1} t_i for pairs (i, j) such that some
level contains i but not j.  Characters are exponent vectors, so the pair
(i, j) contributes e_i - e_j and the chart factor (1 - chi^{-1}) is
1 - t^(e_j - e_i).

The localization class of a flag matroid is zero away from its flags and
the numerator of the vertex-cone Hilbert series against the chart
denominator at them.  Multiplying by the Segre-Veronese line-bundle weight
t^{e_F}, pulling back to the space with ranks (1, k, n-1), pushing forward
to the product of two projective spaces and solving triangularly against
the coordinate-subspace classes produces the bivariate polynomial
invariant; every division along the way must be exact.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor

from .errors import InexactDivision, SpaceMismatch, OutOfRange, Verdict
from .laurent import KRational, LaurentPoly
from .lattice import cone_at_vertex, flag_polytope, hilbert_numerator
from .invariants import BivarPoly


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _chain_str(chain):
    return "|".join("".join(map(str, part)) if all(x < 10 for x in part)
                    else ",".join(map(str, part)) for part in chain)


def parse_chain(text):
    """Inverse of the flag string: "0|01" -> ((0,), (0, 1))."""
    parts = []
    for block in text.split("|"):
        if "," in block:
            parts.append(tuple(sorted(int(x) for x in block.split(","))))
        else:
            parts.append(tuple(sorted(int(ch) for ch in block)))
    return tuple(parts)


class FlagSpace:
    """The variety of flags of the given ranks in C^n with its torus data.

    Ranks are nondecreasing with repeats allowed; fixed points are chains
    over the distinct ranks (equal ranks force equal subsets), while
    line-bundle weights still count each rank with its multiplicity.
    """

    def __init__(self, n, ranks):
        ranks = tuple(ranks)
        if not ranks or any(a > b for a, b in zip(ranks, ranks[1:])):
            raise SpaceMismatch(f"ranks {ranks} not nondecreasing")
        if ranks[0] < 1 or ranks[-1] > n - 1:
            raise SpaceMismatch(f"ranks {ranks} outside 1..{n - 1}")
        self.n = n
        self.ranks = ranks
        self.distinct_ranks = tuple(sorted(set(ranks)))
        self._fixed = None

    def fixed_points(self):
        """All set-flags over the distinct ranks, sorted."""
        if self._fixed is None:
            chains = [()]
            universe = tuple(range(self.n))
            for size in self.distinct_ranks:
                new = []
                for chain in chains:
                    base = chain[-1] if chain else ()
                    rest = [x for x in universe if x not in base]
                    for extra in itertools.combinations(rest, size - len(base)):
                        new.append(chain + (tuple(sorted(base + extra)),))
                chains = new
            self._fixed = tuple(sorted(chains))
        return self._fixed

    def weight_vector(self, chain):
        """e_F: indicator sum over the full rank tuple, with multiplicity."""
        by_size = {len(part): part for part in chain}
        vec = [0] * self.n
        for k in self.ranks:
            for e in by_size[k]:
                vec[e] += 1
        return tuple(vec)

    def chart_pairs(self, chain):
        """S(F): pairs (i, j) with i in some level missing j, sorted."""
        pairs = set()
        for part in chain:
            inside = set(part)
            for i in part:
                for j in range(self.n):
                    if j not in inside:
                        pairs.add((i, j))
        return sorted(pairs)

    def chart_characters(self, chain):
        """Chart character exponents e_i - e_j over S(F)."""
        return [_vsub(_unit(self.n, i), _unit(self.n, j))
                for i, j in self.chart_pairs(chain)]

    def move(self, chain, i, j):
        """The flag with i and j swapped at every level containing i only."""
        out = []
        for part in chain:
            inside = set(part)
            if i in inside and j not in inside:
                inside.discard(i)
                inside.add(j)
            out.append(tuple(sorted(inside)))
        return tuple(out)

    def one_dim_orbits(self):
        """Unordered fixed-point pairs joined by a 1-dim orbit, with the
        pair (i, j) whose character t_j^{-1} t_i acts on it."""
        seen = set()
        out = []
        for chain in self.fixed_points():
            for i, j in self.chart_pairs(chain):
                other = self.move(chain, i, j)
                key = frozenset((chain, other))
                if key not in seen:
                    seen.add(key)
                    out.append((chain, other, (i, j)))
        return out

    def __eq__(self, other):
        return (type(other) is FlagSpace and self.n == other.n
                and self.ranks == other.ranks)

    def __hash__(self):
        return hash((self.n, self.ranks))

    def __repr__(self):
        return f"FlagSpace(ranks={self.ranks}, n={self.n})"


class ProjProductSpace:
    """P^{n-1} x P^{n-1} as lines and hyperplanes with the induced torus.

    Fixed points are pairs ((a,), J) with |J| = n-1; the line need not lie
    in the hyperplane.
    """

    def __init__(self, n):
        self.n = n

    def fixed_points(self):
        hyperplanes = [tuple(x for x in range(self.n) if x != m)
                       for m in range(self.n)]
        return tuple(sorted(((a,), j)
                            for a in range(self.n) for j in hyperplanes))

    def missing(self, hyperplane):
        return next(m for m in range(self.n) if m not in set(hyperplane))

    def chart_pairs(self, point):
        (a,), hyperplane = point
        pairs = [(a, m) for m in range(self.n) if m != a]
        m = self.missing(hyperplane)
        pairs += [(i, m) for i in hyperplane]
        return sorted(pairs)

    def chart_characters(self, point):
        return [_vsub(_unit(self.n, i), _unit(self.n, j))
                for i, j in self.chart_pairs(point)]

    def one_dim_orbits(self):
        out = []
        pts = self.fixed_points()
        for (line, hp) in pts:
            a = line[0]
            for b in range(a + 1, self.n):
                out.append(((line, hp), ((b,), hp), (a, b)))
            m = self.missing(hp)
            for m2 in range(m + 1, self.n):
                hp2 = tuple(x for x in range(self.n) if x != m2)
                # orbit direction: the element leaving hp is m2, entering m
                out.append(((line, hp), (line, hp2), (m2, m)))
        return out

    def __eq__(self, other):
        return type(other) is ProjProductSpace and self.n == other.n

    def __hash__(self):
        return hash(("pp", self.n))

    def __repr__(self):
        return f"ProjProductSpace(n={self.n})"


class EquivariantClass:
    """Map from fixed points to Laurent polynomials; absent means zero."""

    __slots__ = ("space", "values")

    def __init__(self, space, values):
        self.space = space
        self.values = {fp: v for fp, v in values.items() if not v.is_zero()}

    def value(self, fp):
        return self.values.get(fp, LaurentPoly.zero(self.space.n))

    def __mul__(self, other):
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")
        common = set(self.values) & set(other.values)
        return EquivariantClass(
            self.space, {fp: self.values[fp] * other.values[fp]
                         for fp in common})

    def __eq__(self, other):
        return (isinstance(other, EquivariantClass)
                and self.space == other.space and self.values == other.values)

    def items(self):
        return [(fp, self.value(fp)) for fp in self.space.fixed_points()]

    def gkm_verdict(self):
        """Congruence f(x) = f(y) mod (1 - chi) along every 1-dim orbit."""
        for f1, f2, (i, j) in self.space.one_dim_orbits():
            chi = _vsub(_unit(self.space.n, i), _unit(self.space.n, j))
            diff = self.value(f1) - self.value(f2)
            if not diff.divisible_by(LaurentPoly.one_minus(chi)):
                return Verdict(False, "congruence fails",
                               witness=(f1, f2, (i, j)))
        return Verdict(True)

    def assert_gkm(self, stage):
        v = self.gkm_verdict()
        if not v:
            raise InexactDivision(f"{stage}: localization class is "
                                  f"incompatible along orbit {v.witness}")

    def __repr__(self):
        return f"EquivariantClass({self.space}, {len(self.values)} nonzero)"


# ----------------------------------------------------------- constructions

def o1_class(space):
    """The very ample line bundle of the embedding: p_F -> t^{e_F}."""
    return EquivariantClass(
        space, {fp: LaurentPoly.monomial(space.weight_vector(fp))
                for fp in space.fixed_points()})


def _y_value(space, flag_poly, chain):
    vertex = space.weight_vector(chain)
    cone = cone_at_vertex(flag_poly, vertex)
    denom = [_vsub(_unit(space.n, j), _unit(space.n, i))
             for i, j in space.chart_pairs(chain)]
    return hilbert_numerator(cone, denom)


def y_class(flag_matroid, threads=1):
    """Localization class of a flag matroid.

    Zero on non-basis flags; on a basis flag, the numerator of the vertex
    cone's Hilbert series against the chart denominator.  The GKM
    congruence is asserted on the result.
    """
    space = FlagSpace(flag_matroid.n, flag_matroid.ranks)
    by_rank = {m.k: m for m in flag_matroid.constituents}
    poly = flag_polytope(flag_matroid)
    flags = [chain for chain in space.fixed_points()
             if all(by_rank[len(part)].is_basis(part) for part in chain)]
    values = _map_maybe_parallel(
        lambda chain: _y_value(space, poly, chain), flags, threads)
    cls = EquivariantClass(space, dict(zip(flags, values)))
    cls.assert_gkm("y_class")
    return cls


def pullback(cls, target_space):
    """Composition with the forgetful projection to the coarser flags."""
    source = cls.space
    if (target_space.n != source.n
            or not set(source.distinct_ranks)
            <= set(target_space.distinct_ranks)):
        raise SpaceMismatch(f"cannot project {target_space} onto {source}")
    keep = set(source.distinct_ranks)
    values = {}
    for chain in target_space.fixed_points():
        sub = tuple(part for part in chain if len(part) in keep)
        v = cls.value(sub)
        if not v.is_zero():
            values[chain] = v
    return EquivariantClass(target_space, values)


def _pushforward_value(space, cls, target_space, point):
    n = space.n
    (a,), hyperplane = point
    if a not in set(hyperplane):
        return LaurentPoly.zero(n)  # empty fiber
    total = KRational(LaurentPoly.zero(n))
    for chain in space.fixed_points():
        if chain[0] != (a,) or chain[-1] != hyperplane:
            continue
        val = cls.value(chain)
        if val.is_zero():
            continue
        den = [_vsub(_unit(n, j), _unit(n, i))
               for i, j in space.chart_pairs(chain)]
        total = total + KRational(val, den)
    if total.is_zero():
        return LaurentPoly.zero(n)
    for i, j in target_space.chart_pairs(point):
        total = total * LaurentPoly.one_minus(
            _vsub(_unit(n, j), _unit(n, i)))
    return total.as_laurent()


def pushforward_to_pp(cls, threads=1):
    """Pushforward along (first, last) to the line-hyperplane product.

    The source must be a flag space whose distinct ranks start at 1 and end
    at n-1.  Fibers over incident pairs are summed over the chart
    denominators, scaled by the target chart factor; the result must be a
    Laurent polynomial and satisfy GKM, both asserted.
    """
    space = cls.space
    n = space.n
    if space.distinct_ranks[0] != 1 or space.distinct_ranks[-1] != n - 1:
        raise SpaceMismatch(
            f"pushforward needs ranks from 1 to n-1, got {space.ranks}")
    target = ProjProductSpace(n)
    points = target.fixed_points()
    values = _map_maybe_parallel(
        lambda pt: _pushforward_value(space, cls, target, pt),
        points, threads)
    out = EquivariantClass(target, dict(zip(points, values)))
    out.assert_gkm("pushforward")
    return out


def _coordinate_class_line(n, a, i):
    """Structure sheaf of {x_0 = ... = x_{a-1} = 0} at the line point i."""
    if i < a:
        return LaurentPoly.zero(n)
    out = LaurentPoly.one(n)
    for l in range(a):
        out = out * LaurentPoly.one_minus(_vsub(_unit(n, l), _unit(n, i)))
    return out


def _coordinate_class_hyperplane(n, b, missing):
    """Structure sheaf of {H containing e_0, ..., e_{b-1}} at hyperplane
    with the given missing index (the dual torus acts with t_m t_l^{-1})."""
    if missing < b:
        return LaurentPoly.zero(n)
    out = LaurentPoly.one(n)
    for l in range(b):
        out = out * LaurentPoly.one_minus(_vsub(_unit(n, missing),
                                                _unit(n, l)))
    return out


def to_nonequivariant(cls):
    """Solve against the coordinate-subspace basis and evaluate at t = 1.

    Ascending triangular back-substitution in (line index, missing index);
    every division must be exact, otherwise the class is not the
    localization of a genuine equivariant sheaf class (InexactDivision).
    """
    if not isinstance(cls.space, ProjProductSpace):
        raise SpaceMismatch("reduction is defined on the product space")
    n = cls.space.n
    coeffs = {}
    for i in range(n):
        e_i = _coordinate_class_line(n, i, i)
        for m in range(n):
            hyperplane = tuple(x for x in range(n) if x != m)
            rhs = cls.value(((i,), hyperplane))
            for (a, b), cab in sorted(coeffs.items()):
                if a <= i and b <= m:
                    rhs = rhs - (cab * _coordinate_class_line(n, a, i)
                                 * _coordinate_class_hyperplane(n, b, m))
            quot = rhs.exact_divide(
                e_i * _coordinate_class_hyperplane(n, m, m))
            if not quot.is_zero():
                coeffs[(i, m)] = quot
    out = BivarPoly({(b, a): c.subs_one() for (a, b), c in coeffs.items()})
    return out


def k_tutte(flag_matroid, threads=1):
    """Bivariate polynomial invariant of a flag matroid via localization.

    Pipeline: localization class, product with the line-bundle weight,
    pullback to ranks (1, k, n-1), pushforward to the line-hyperplane
    product, triangular reduction.  Exponents stay below n in each
    variable by construction.
    """
    n = flag_matroid.n
    if n < 2:
        raise OutOfRange("the construction needs n >= 2")
    space = FlagSpace(n, flag_matroid.ranks)
    cls = y_class(flag_matroid, threads=threads) * o1_class(space)
    cls.assert_gkm("product with the line bundle")
    big = FlagSpace(n, (1,) + flag_matroid.ranks + (n - 1,))
    lifted = pullback(cls, big)
    lifted.assert_gkm("pullback")
    pushed = pushforward_to_pp(lifted, threads=threads)
    return to_nonequivariant(pushed)


def compare_qprime_ktutte(flag_matroid):
    """Side-by-side report of the two polymatroid polynomials (no identity
    is claimed between them)."""
    from .invariants import qprime_of_polymatroid
    from .polyflag import polymatroid_of_flag
    qp = qprime_of_polymatroid(polymatroid_of_flag(flag_matroid))
    kt = k_tutte(flag_matroid)
    return {"qprime": qp, "k_tutte": kt, "equal": qp == kt}


def _map_maybe_parallel(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]
