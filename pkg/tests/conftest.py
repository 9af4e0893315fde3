"""Shared fixture matroids and independent oracles.

Expected values tagged in the test suite were either verified against the
source worked examples or computed by the brute-force oracles here, which
deliberately avoid the library code paths they check.
"""

import itertools

import pytest

from flagtutte.matroid import (matroid_from_bases,
                               matroid_from_graph, matroid_from_matrix,
                               uniform_matroid)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

# non-bases of the rank-3 matroid on [9] that defies Pappus, 0-indexed
NON_PAPPUS_NONBASES = [
    frozenset(s) for s in
    [(0, 1, 2), (3, 4, 5), (0, 4, 6), (0, 5, 7),
     (1, 3, 6), (1, 5, 8), (2, 3, 7), (2, 4, 8)]
]

PAPPUS8_ROWS = [
    [1, 0, 1, 0, 1, 1, 0, 1],
    [0, 1, 1, 0, 2, 2, 2, 1],
    [0, 0, 0, 1, 1, 2, 1, 1],
]


def non_pappus():
    bases = [b for b in itertools.combinations(range(9), 3)
             if frozenset(b) not in NON_PAPPUS_NONBASES]
    return matroid_from_bases(9, bases)


def doubled_points_rank2():
    """Rank-2 matroid on [8]: every 2-subset except {1,5} and {2,4}."""
    bases = [b for b in itertools.combinations(range(8), 2)
             if set(b) not in ({1, 5}, {2, 4})]
    return matroid_from_bases(8, bases)


def two_component_matroid():
    """Bases {02,03,12,13} on [4]: components {0,1} and {2,3}."""
    return matroid_from_bases(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def m2_rank2():
    """Rank-2 matroid on [3] with bases {0,1}, {0,2}."""
    return matroid_from_bases(3, [(0, 1), (0, 2)])


def k4():
    return matroid_from_graph(K4_EDGES)


def u12_plus_loop():
    """U_{1,2} with a loop adjoined as element 2."""
    return matroid_from_bases(3, [(0,), (1,)])


def u12_plus_coloop():
    """U_{1,2} with a coloop adjoined as element 2."""
    return matroid_from_bases(3, [(0, 2), (1, 2)])


def fixture_matroids():
    """The fixture family used by the property suite."""
    return {
        "u11": uniform_matroid(1, 1),
        "u12": uniform_matroid(1, 2),
        "u22": uniform_matroid(2, 2),
        "u13": uniform_matroid(1, 3),
        "u23": uniform_matroid(2, 3),
        "u33": uniform_matroid(3, 3),
        "u14": uniform_matroid(1, 4),
        "u24": uniform_matroid(2, 4),
        "u34": uniform_matroid(3, 4),
        "u15": uniform_matroid(1, 5),
        "u25": uniform_matroid(2, 5),
        "u45": uniform_matroid(4, 5),
        "m2": m2_rank2(),
        "two_comp": two_component_matroid(),
        "loop_ext": u12_plus_loop(),
        "coloop_ext": u12_plus_coloop(),
        "k4": k4(),
        "nonpappus": non_pappus(),
        "ex68": matroid_from_matrix(PAPPUS8_ROWS),
        "ex69n": doubled_points_rank2(),
    }


def fixture_matroids_n5():
    return {name: m for name, m in fixture_matroids().items() if m.n <= 5}


@pytest.fixture(scope="session")
def fixtures():
    return fixture_matroids()


@pytest.fixture(scope="session")
def fixtures_n5():
    return fixture_matroids_n5()


# ------------------------------------------------------------------ oracles

def oracle_rank(bases, subset):
    """max |X ∩ B| over bases, straight from the definition."""
    s = set(subset)
    return max(len(s & set(b)) for b in bases)


def oracle_independent_sets(m):
    """All independent sets by downward closure of the basis list."""
    out = set()
    for b in m.bases:
        for size in range(len(b) + 1):
            out.update(map(frozenset, itertools.combinations(b, size)))
    return out


def oracle_union_rank(matroids, subset):
    """Largest union of per-matroid independent sets inside `subset`."""
    independents = [oracle_independent_sets(m) for m in matroids]
    s = frozenset(subset)
    best = 0
    pools = [sorted(map(tuple, (i for i in ind if i <= s)))
             for ind in independents]

    def rec(level, acc):
        nonlocal best
        if level == len(pools):
            best = max(best, len(acc))
            return
        for ind in pools[level]:
            rec(level + 1, acc | set(ind))

    rec(0, set())
    return best


def oracle_simple_cycles_k4():
    """Simple cycles of K4 as edge-index sets (triangles and 4-cycles)."""
    index = {frozenset(e): i for i, e in enumerate(K4_EDGES)}
    cycles = set()
    for size in (3, 4):
        for verts in itertools.permutations(range(4), size):
            if verts[0] != min(verts):
                continue
            edges = [frozenset((verts[i], verts[(i + 1) % size]))
                     for i in range(size)]
            if len(set(edges)) == size:
                cycles.add(frozenset(index[e] for e in edges))
    return cycles
