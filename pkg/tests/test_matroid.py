import itertools

import pytest

from flagtutte.errors import (EmptyBases, ExchangeViolation,
                              MismatchedGroundSets, NotAMatroid, OutOfRange,
                              UnequalCardinality)
from flagtutte.matroid import (check_rank_axioms,
                               cover_by_independent, gale_leq, gale_max,
                               gale_max_family, matroid_from_bases,
                               matroid_from_graph, matroid_from_matrix,
                               uniform_matroid, union_rank)

from conftest import (PAPPUS8_ROWS, k4, m2_rank2, non_pappus, oracle_rank,
                      oracle_simple_cycles_k4, oracle_union_rank,
                      two_component_matroid)


class TestConstruction:
    def test_uniform_accepted(self):
        m = matroid_from_bases(4, itertools.combinations(range(4), 2))
        assert m == uniform_matroid(2, 4)
        assert len(m.bases) == 6

    def test_non_pappus_accepted_with_76_bases(self):
        assert len(non_pappus().bases) == 84 - 8 == 76

    def test_mixed_cardinality_rejected(self):
        with pytest.raises((UnequalCardinality, ExchangeViolation)):
            matroid_from_bases(2, [(0,), (0, 1)])

    def test_empty_family_rejected(self):
        with pytest.raises(EmptyBases):
            matroid_from_bases(2, [])

    def test_exchange_violation_carries_witness(self):
        with pytest.raises(ExchangeViolation) as info:
            matroid_from_bases(4, [(0, 1), (2, 3)])
        err = info.value
        assert err.element in err.basis1

    def test_out_of_range_element(self):
        with pytest.raises(OutOfRange):
            matroid_from_bases(2, [(0, 5)])

    def test_duplicates_are_canonicalized(self):
        m = matroid_from_bases(2, [(0,), (0,), (1,)])
        assert m.bases == ((0,), (1,))


class TestRank:
    def test_uniform_rank_is_min(self):
        assert uniform_matroid(2, 4).rank({0, 1, 2}) == 2

    def test_empty_set_rank_zero(self, fixtures):
        for m in fixtures.values():
            assert m.rank(set()) == 0

    def test_k4_triangle_rank(self):
        # spanning-forest size of the triangle 0-1-2, edges 0,1,3
        assert k4().rank({0, 1, 3}) == 2

    def test_rank_matches_definition_oracle(self, fixtures):
        for m in fixtures.values():
            if m.n > 6:
                continue
            for size in range(m.n + 1):
                for s in itertools.combinations(range(m.n), size):
                    assert m.rank(s) == oracle_rank(m.bases, s)

    def test_rank_out_of_range(self):
        with pytest.raises(OutOfRange):
            uniform_matroid(1, 2).rank({3})


class TestRankAxioms:
    def test_uniform_table_passes(self):
        m = uniform_matroid(2, 4)
        assert check_rank_axioms(m.rank_table(), 4)

    def test_nonzero_empty_rank_fails_r1(self):
        v = check_rank_axioms((1, 1, 1, 2), 2)
        assert not v and v.reason.startswith("R1")
        assert v.witness[0] == ()

    def test_square_cardinality_fails_submodularity(self):
        table = [0, 1, 1, 4]  # r(X) = |X|^2 on n=2, polymatroid mode
        v = check_rank_axioms(table, 2, polymatroid=True)
        assert not v and v.reason.startswith("R3")
        assert set(v.witness) == {(0,), (1,)}

    def test_derived_tables_satisfy_axioms(self, fixtures):
        for m in fixtures.values():
            if m.n <= 8:
                assert check_rank_axioms(m.rank_table(), m.n)


class TestMinorsAndDuality:
    def test_delete_uniform(self):
        assert uniform_matroid(2, 4).delete(3) == uniform_matroid(2, 3)

    def test_contract_uniform(self):
        assert uniform_matroid(2, 4).contract(3) == uniform_matroid(1, 3)

    def test_contract_loop_equals_delete(self):
        m = matroid_from_bases(3, [(0,), (1,)])  # element 2 is a loop
        assert m.contract(2) == m.delete(2)

    def test_delete_coloop_drops_rank(self):
        m = matroid_from_bases(3, [(0, 2), (1, 2)])  # element 2 is a coloop
        assert m.delete(2) == uniform_matroid(1, 2)

    def test_minor_ranks_match_rank_formulas(self, fixtures):
        for m in fixtures.values():
            if m.n > 6 or m.n < 2:
                continue
            for e in range(m.n):
                dele, cont = m.delete(e), m.contract(e)
                keep = [x for x in range(m.n) if x != e]
                for size in range(m.n):
                    for s in itertools.combinations(keep, size):
                        relab = [x if x < e else x - 1 for x in s]
                        assert dele.rank(relab) == m.rank(s)
                        assert cont.rank(relab) == m.rank(set(s) | {e}) - m.rank({e})

    def test_dual_examples(self):
        assert uniform_matroid(2, 4).dual() == uniform_matroid(2, 4)
        assert uniform_matroid(1, 3).dual() == uniform_matroid(2, 3)
        free2 = uniform_matroid(2, 2)
        assert free2.dual().bases == ((),)

    def test_dual_involution_and_minor_duality(self, fixtures):
        for m in fixtures.values():
            if m.n > 6:
                continue
            assert m.dual().dual() == m
            for e in range(m.n):
                assert m.delete(e).dual() == m.dual().contract(e)


class TestCircuits:
    def test_u23_single_circuit(self):
        assert uniform_matroid(2, 3).circuits() == [(0, 1, 2)]

    def test_free_matroid_all_coloops(self):
        m = uniform_matroid(4, 4)
        assert m.coloops() == (0, 1, 2, 3)
        assert m.circuits() == []

    def test_k4_circuits_are_the_seven_cycles(self):
        got = {frozenset(c) for c in k4().circuits()}
        assert got == oracle_simple_cycles_k4()
        assert len(got) == 7

    def test_loops_coloops(self):
        m = matroid_from_bases(3, [(0,), (1,)])
        loops, coloops = m.loops_coloops()
        assert loops == (2,) and coloops == ()

    def test_cocircuits_are_dual_circuits(self, fixtures):
        for m in fixtures.values():
            if m.n <= 5:
                assert m.cocircuits() == m.dual().circuits()


class TestComponents:
    def test_uniform_connected(self):
        assert uniform_matroid(2, 4).connected_components() == [(0, 1, 2, 3)]

    def test_two_component_fixture(self):
        assert two_component_matroid().connected_components() == [(0, 1), (2, 3)]

    def test_u11_single_component(self):
        assert uniform_matroid(1, 1).connected_components() == [(0,)]

    def test_loops_and_coloops_are_singletons(self):
        m = matroid_from_bases(3, [(0, 2), (1, 2)])  # coloop 2
        assert (2,) in m.connected_components()


class TestGale:
    def test_u23_natural(self):
        assert gale_max(uniform_matroid(2, 3), (0, 1, 2)) == (1, 2)

    def test_u23_reversed(self):
        assert gale_max(uniform_matroid(2, 3), (2, 1, 0)) == (0, 1)

    def test_m2_natural(self):
        assert gale_max(m2_rank2(), (0, 1, 2)) == (0, 2)

    def test_dominance_over_all_orderings(self, fixtures):
        for m in fixtures.values():
            if m.n > 6:
                continue
            for order in itertools.permutations(range(m.n)):
                best = gale_max(m, order)
                pos = [0] * m.n
                for p, e in enumerate(order):
                    pos[e] = p
                assert m.is_basis(best)
                assert all(gale_leq(b, best, pos) for b in m.bases)

    def test_non_matroid_family_fails_some_ordering(self):
        family = [(0, 1), (2, 3)]
        failures = 0
        for order in itertools.permutations(range(4)):
            try:
                gale_max_family(4, family, order)
            except NotAMatroid:
                failures += 1
        assert failures > 0

    def test_matroid_family_never_fails(self, fixtures_n5):
        for m in fixtures_n5.values():
            for order in itertools.permutations(range(m.n)):
                gale_max_family(m.n, m.bases, order)


class TestUnion:
    def test_two_u12_cover_ground_set(self):
        ms = [uniform_matroid(1, 2)] * 2
        assert union_rank(ms, {0, 1}) == 2
        assert union_rank(ms, {0, 1}) == oracle_union_rank(ms, {0, 1})

    def test_single_matroid_is_identity(self, fixtures_n5):
        for m in fixtures_n5.values():
            for size in range(m.n + 1):
                for s in itertools.combinations(range(m.n), size):
                    assert union_rank([m], s) == m.rank(s)

    def test_rank_zero_union(self):
        z = matroid_from_bases(2, [()])
        assert union_rank([z, z], {0}) == 0

    def test_union_matches_oracle(self, fixtures_n5):
        small = [m for m in fixtures_n5.values() if m.n <= 4][:5]
        for m in small:
            for reps in (2, 3):
                ms = [m] * reps
                full = tuple(range(m.n))
                assert union_rank(ms, full) == oracle_union_rank(ms, full)

    def test_mismatched_ground_sets(self):
        with pytest.raises(MismatchedGroundSets):
            union_rank([uniform_matroid(1, 2), uniform_matroid(1, 3)], {0})

    def test_cover_two_u12(self):
        parts = cover_by_independent([uniform_matroid(1, 2)] * 2)
        assert parts is not None
        assert sorted(e for p in parts for e in p) == [0, 1]
        assert all(len(p) <= 1 for p in parts)

    def test_cover_single_u12_impossible(self):
        assert cover_by_independent([uniform_matroid(1, 2)]) is None

    def test_cover_free_matroid(self):
        assert cover_by_independent([uniform_matroid(3, 3)]) == ((0, 1, 2),)

    def test_cover_iff_rank_condition(self, fixtures_n5):
        for m in fixtures_n5.values():
            if m.n > 4:
                continue
            for reps in (1, 2):
                ms = [m] * reps
                feasible = all(
                    bin(a).count("1") <= reps * m.rank_mask(a)
                    for a in range(1 << m.n))
                assert (cover_by_independent(ms) is not None) == feasible


class TestRepresentableAndGraphic:
    def test_small_matrix_gives_u23(self):
        assert matroid_from_matrix([(1, 0, 1), (0, 1, 1)]) == uniform_matroid(2, 3)

    def test_rank3_matrix_on_8_elements(self):
        m = matroid_from_matrix(PAPPUS8_ROWS)
        assert m.n == 8 and m.k == 3

    def test_k4_has_16_spanning_trees(self):
        assert len(k4().bases) == 16  # Cayley: 4^2

    def test_zero_matrix_gives_single_empty_basis(self):
        assert matroid_from_matrix([(0, 0), (0, 0)]).bases == ((),)

    def test_rational_entries(self):
        m = matroid_from_matrix([("1/2", "1/3"), ("1/4", "1/6")])
        # rows proportional: rank 1, parallel elements
        assert m == uniform_matroid(1, 2)

    def test_graph_with_loop_and_multiedge(self):
        m = matroid_from_graph([(0, 0), (0, 1), (0, 1)])
        assert m.loops() == (0,)
        assert m.bases == ((1,), (2,))

    def test_graphic_rank_is_forest_size(self):
        m = k4()
        assert m.k == 3
        assert m.rank(range(6)) == 3


class TestExchangeProperties:
    def test_basis_exchange_on_all_fixtures(self, fixtures):
        for m in fixtures.values():
            family = {frozenset(b) for b in m.bases}
            for b1 in family:
                for b2 in family:
                    for e in b1 - b2:
                        assert any((b1 - {e}) | {f} in family
                                   for f in b2 - b1)

    def test_multi_element_symmetric_exchange_small(self, fixtures_n5):
        # optional stronger exchange: subsets trade symmetrically
        for m in fixtures_n5.values():
            family = {frozenset(b) for b in m.bases}
            for b1 in family:
                for b2 in family:
                    for size in range(1, len(b1 - b2) + 1):
                        for a in itertools.combinations(sorted(b1 - b2), size):
                            a = frozenset(a)
                            assert any(
                                (b1 - a) | ap in family and (b2 - ap) | a in family
                                for r in range(len(b2 - b1) + 1)
                                for ap in map(frozenset,
                                              itertools.combinations(sorted(b2 - b1), r))
                            )
