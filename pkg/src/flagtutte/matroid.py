"""Matroids on ground set {0, ..., n-1} in canonical basis-list form.

The basis list is the primary representation: every downstream construction
(polytopes, localization classes) consumes bases directly.  Rank functions
are derived and cached as full bitmask tables.  All values are immutable
after construction and all operations are pure.
"""

import itertools
from fractions import Fraction

from .errors import (EmptyBases, ExchangeViolation, MismatchedGroundSets,
                     NotAMatroid, OutOfRange, UnequalCardinality, Verdict)
from . import linalg


def _mask(subset):
    m = 0
    for e in subset:
        m |= 1 << e
    return m


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class Matroid:
    """A matroid given by its sorted list of bases.

    Use :func:`matroid_from_bases` (or the matrix/graph constructors) to get
    a validated instance.
    """

    __slots__ = ("n", "k", "bases", "_basis_masks", "_rank_table")

    def __init__(self, n, bases):
        self.n = n
        self.bases = tuple(sorted(tuple(sorted(b)) for b in set(map(frozenset, bases))))
        self.k = len(self.bases[0]) if self.bases else 0
        self._basis_masks = frozenset(_mask(b) for b in self.bases)
        self._rank_table = None

    # -- core queries -------------------------------------------------------
    def is_basis(self, subset):
        return _mask(subset) in self._basis_masks

    def rank_table(self):
        """Rank of every subset, indexed by bitmask."""
        if self._rank_table is None:
            n, full = self.n, 1 << self.n
            independent = bytearray(full)
            for m in self._basis_masks:
                independent[m] = 1
            # downward closure: subsets of independent sets are independent
            for m in range(full - 1, -1, -1):
                if independent[m]:
                    for i in range(n):
                        if m >> i & 1:
                            independent[m & ~(1 << i)] = 1
            table = [0] * full
            for m in range(1, full):
                if independent[m]:
                    table[m] = bin(m).count("1")
                else:
                    table[m] = max(table[m & ~(1 << i)]
                                   for i in range(n) if m >> i & 1)
            self._rank_table = tuple(table)
        return self._rank_table

    def rank(self, subset):
        subset = list(subset)
        if any(e < 0 or e >= self.n for e in subset):
            raise OutOfRange(f"subset {sorted(subset)} not within 0..{self.n - 1}")
        return self.rank_table()[_mask(subset)]

    def rank_mask(self, mask):
        return self.rank_table()[mask]

    def is_independent(self, subset):
        s = set(subset)
        return self.rank(s) == len(s)

    # -- minors, duality ------------------------------------------------------
    def _relabel(self, bases, e):
        """Drop element e and relabel e+1..n-1 down by one, preserving order."""
        return [[x if x < e else x - 1 for x in b] for b in bases]

    def delete(self, e):
        self._check_element(e)
        if e in self.coloops():
            # rank restriction makes the coloop drop out of every basis
            new = [[x for x in b if x != e] for b in self.bases]
        else:
            new = [list(b) for b in self.bases if e not in b]
        return Matroid(self.n - 1, self._relabel(new, e))

    def contract(self, e):
        self._check_element(e)
        if e in self.loops():
            new = [list(b) for b in self.bases]
        else:
            new = [[x for x in b if x != e] for b in self.bases if e in b]
        return Matroid(self.n - 1, self._relabel(new, e))

    def dual(self):
        ground = set(range(self.n))
        return Matroid(self.n, [ground - set(b) for b in self.bases])

    def _check_element(self, e):
        if not 0 <= e < self.n:
            raise OutOfRange(f"element {e} not in 0..{self.n - 1}")

    # -- circuits and friends -------------------------------------------------
    def circuits(self):
        """Minimal dependent sets, sorted."""
        table = self.rank_table()
        circuits = []
        circuit_masks = []
        for size in range(1, self.n + 1):
            for comb in itertools.combinations(range(self.n), size):
                m = _mask(comb)
                if table[m] == size:
                    continue  # independent
                if any(cm & m == cm for cm in circuit_masks):
                    continue  # contains a smaller circuit
                circuit_masks.append(m)
                circuits.append(comb)
        return sorted(circuits)

    def cocircuits(self):
        return self.dual().circuits()

    def loops(self):
        in_any = set().union(*map(set, self.bases)) if self.bases else set()
        return tuple(sorted(set(range(self.n)) - in_any))

    def coloops(self):
        common = set(range(self.n))
        for b in self.bases:
            common &= set(b)
        return tuple(sorted(common))

    def loops_coloops(self):
        return self.loops(), self.coloops()

    def connected_components(self):
        """Partition of the ground set by the circuit-sharing relation."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for circuit in self.circuits():
            root = find(circuit[0])
            for e in circuit[1:]:
                parent[find(e)] = root
        groups = {}
        for e in range(self.n):
            groups.setdefault(find(e), []).append(e)
        return sorted(tuple(g) for g in groups.values())

    # -- misc -----------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Matroid) and self.n == other.n
                and self.bases == other.bases)

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, k={self.k}, {len(self.bases)} bases)"


def matroid_from_bases(n, bases):
    """Validate the basis axioms (B1, equal size, exchange B2) and build."""
    if n < 1:
        raise OutOfRange(f"ground set size {n} < 1")
    bases = [sorted(set(b)) for b in bases]
    if not bases:
        raise EmptyBases("a matroid needs at least one basis")
    for b in bases:
        for e in b:
            if not 0 <= e < n:
                raise OutOfRange(f"element {e} not in 0..{n - 1}")
    sizes = {len(b) for b in bases}
    if len(sizes) != 1:
        raise UnequalCardinality(f"basis sizes {sorted(sizes)} differ")
    family = {frozenset(b) for b in bases}
    _check_exchange(family)
    return Matroid(n, family)


def _check_exchange(family):
    for b1 in family:
        for b2 in family:
            for e in b1 - b2:
                if not any((b1 - {e}) | {f} in family for f in b2 - b1):
                    raise ExchangeViolation(b1, b2, e)


def uniform_matroid(k, n):
    """U_{k,n}: every k-subset of an n-set is a basis."""
    if not 0 <= k <= n:
        raise OutOfRange(f"rank {k} not in 0..{n}")
    return Matroid(n, itertools.combinations(range(n), k))


def check_rank_axioms(table, n, polymatroid=False):
    """Check a 2^n rank table against the rank axioms, bitmask-indexed.

    In matroid mode: R1 (0 <= r(X) <= |X|), R2 monotone, R3 submodular.
    In polymatroid mode R1 relaxes to r(empty) = 0 with nonnegative values.
    Returns a Verdict whose witness identifies the first violation.
    """
    full = 1 << n
    if len(table) != full:
        return Verdict(False, f"table has {len(table)} entries, need {full}")
    if table[0] != 0:
        return Verdict(False, "R1: r(empty) != 0", witness=((), table[0]))
    for m in range(full):
        r = table[m]
        if r < 0 or (not polymatroid and r > bin(m).count("1")):
            return Verdict(False, "R1: r(X) outside 0..|X|",
                           witness=(tuple(_bits(m)), r))
    for m in range(full):
        for i in range(n):
            if not m >> i & 1:
                if table[m | 1 << i] < table[m]:
                    return Verdict(False, "R2: monotonicity fails",
                                   witness=(tuple(_bits(m)),
                                            tuple(_bits(m | 1 << i))))
    # local submodularity is equivalent to R3 in full
    for m in range(full):
        for i in range(n):
            if m >> i & 1:
                continue
            for j in range(i + 1, n):
                if m >> j & 1:
                    continue
                x, y = m | 1 << i, m | 1 << j
                if table[x | y] + table[m] > table[x] + table[y]:
                    return Verdict(False, "R3: submodularity fails",
                                   witness=(tuple(_bits(x)), tuple(_bits(y))))
    return Verdict(True)


# ---------------------------------------------------------------- Gale order

def gale_key(subset, position):
    """Sort a subset by the position of its elements under an ordering."""
    return tuple(sorted(position[e] for e in subset))


def gale_leq(a, b, position):
    """Dominance order: a <= b componentwise in sorted omega-positions."""
    ka, kb = gale_key(a, position), gale_key(b, position)
    return all(x <= y for x, y in zip(ka, kb))


def _positions(order):
    pos = [0] * len(order)
    for p, e in enumerate(order):
        pos[e] = p
    return pos


def check_ordering(n, order):
    if sorted(order) != list(range(n)):
        raise OutOfRange(f"{order} is not a permutation of 0..{n - 1}")


def gale_max(matroid, order):
    """The Gale-maximal basis for the linear order (smallest element first).

    Computed greedily: scan elements from omega-largest down, keeping each
    one that preserves independence.  Under __debug__ the result is verified
    to dominate every basis.
    """
    check_ordering(matroid.n, order)
    current = []
    for e in reversed(order):
        if matroid.rank(current + [e]) == len(current) + 1:
            current.append(e)
    best = frozenset(current)
    if __debug__:
        pos = _positions(order)
        assert matroid.is_basis(best)
        assert all(gale_leq(b, best, pos) for b in matroid.bases)
    return tuple(sorted(best))


def gale_max_family(n, family, order):
    """Unique dominating member of a raw k-subset family, for probing.

    Raises NotAMatroid when no member dominates all others under the Gale
    order induced by `order`.
    """
    check_ordering(n, order)
    family = [frozenset(b) for b in family]
    pos = _positions(order)
    for cand in family:
        if all(gale_leq(b, cand, pos) for b in family):
            return tuple(sorted(cand))
    raise NotAMatroid(f"no Gale-maximal member for ordering {tuple(order)}")


# --------------------------------------------------------------- matroid union

def union_rank(matroids, subset):
    """Rank of `subset` in the union matroid: min |A-B| + sum r_i(B)."""
    ns = {m.n for m in matroids}
    if len(ns) != 1:
        raise MismatchedGroundSets(f"ground set sizes {sorted(ns)} differ")
    a = _mask(subset)
    tables = [m.rank_table() for m in matroids]
    best = None
    b = a
    while True:  # all submasks of a
        val = bin(a & ~b).count("1") + sum(t[b] for t in tables)
        if best is None or val < best:
            best = val
        if b == 0:
            break
        b = (b - 1) & a
    return best


def cover_by_independent(matroids):
    """Partition E into sets independent in each matroid, or None.

    None exactly when some A has |A| > sum_i r_i(A).
    """
    ns = {m.n for m in matroids}
    if len(ns) != 1:
        raise MismatchedGroundSets(f"ground set sizes {sorted(ns)} differ")
    n = matroids[0].n
    k = len(matroids)
    parts = [[] for _ in range(k)]

    def place(e):
        if e == n:
            return True
        for i in range(k):
            parts[i].append(e)
            if matroids[i].is_independent(parts[i]) and place(e + 1):
                return True
            parts[i].pop()
        return False

    if place(0):
        return tuple(tuple(p) for p in parts)
    return None


# ---------------------------------------------------- representable / graphic

def matroid_from_matrix(rows):
    """Column matroid of an exact rational matrix.

    Bases are the column subsets of size rank(matrix) with a nonzero maximal
    minor, found by exact elimination.  A zero matrix yields the rank-0
    matroid with the single empty basis.
    """
    rows = [[Fraction(x) for x in row] for row in rows]
    if not rows or not rows[0]:
        raise OutOfRange("matrix needs at least one row and one column")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise OutOfRange("ragged matrix")
    r = linalg.matrix_rank(rows)
    if r == 0:
        return Matroid(width, [frozenset()])
    bases = []
    for cols in itertools.combinations(range(width), r):
        sub = [[row[c] for c in cols] for row in rows]
        if linalg.matrix_rank(sub) == r:
            bases.append(cols)
    return Matroid(width, bases)


def matroid_from_graph(edges, vertices=None):
    """Cycle matroid of a multigraph; bases are maximal spanning forests."""
    edges = [tuple(e) for e in edges]
    seen = {v for e in edges for v in e}
    nv = max(seen) + 1 if seen else 0
    if vertices is not None:
        if seen and max(seen) >= vertices:
            raise OutOfRange("edge endpoint exceeds vertex count")
        nv = vertices
    m = len(edges)
    if m == 0:
        raise OutOfRange("graph needs at least one edge")

    def forest_size(edge_idx):
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        size = 0
        for i in edge_idx:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                size += 1
        return size

    k = forest_size(range(m))
    if k == 0:
        return Matroid(m, [frozenset()])
    bases = [c for c in itertools.combinations(range(m), k)
             if forest_size(c) == k]
    return Matroid(m, bases)
