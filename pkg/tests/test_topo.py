import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clopen.errors import InvalidMapError, InvalidSpaceError
from clopen.topo import (
    ContinuousMap,
    FiniteSpace,
    are_homeomorphic,
    enumerate_topologies,
    fiber_transfer_check,
    find_section,
    mask_of,
    points_of,
    preorder_topologies,
    product_space,
    pullback_clopens,
    random_space,
)


def opens_as_sets(space):
    return sorted(tuple(points_of(u)) for u in space.opens)


class TestFromSubbasis:
    def test_sierpinski(self):
        space = FiniteSpace.from_subbasis(2, [{1}])
        assert opens_as_sets(space) == [(), (0, 1), (1,)]

    def test_empty_subbasis_is_indiscrete(self):
        space = FiniteSpace.from_subbasis(3, [])
        assert opens_as_sets(space) == [(), (0, 1, 2)]

    def test_pseudocircle_has_seven_opens(self, pseudocircle):
        # frozen from closing {0},{1},{0,1,2},{0,1,3} by hand:
        # intersections give {0,1} and the empty set, unions give the rest
        assert opens_as_sets(pseudocircle) == [
            (), (0,), (0, 1), (0, 1, 2), (0, 1, 2, 3), (0, 1, 3), (1,)]


class TestComponents:
    def test_sierpinski_connected(self, sierpinski):
        assert sierpinski.connected_components().as_lists() == [[0, 1]]

    def test_discrete_three_points(self):
        space = FiniteSpace.discrete(3)
        assert space.connected_components().as_lists() == [[0], [1], [2]]

    def test_pseudocircle_connected(self, pseudocircle):
        assert pseudocircle.connected_components().as_lists() == [[0, 1, 2, 3]]

    def test_quasi_components_examples(self, sierpinski):
        assert sierpinski.quasi_components().as_lists() == [[0, 1]]
        assert FiniteSpace.discrete(3).quasi_components().as_lists() == [[0], [1], [2]]
        assert FiniteSpace.indiscrete(3).quasi_components().as_lists() == [[0, 1, 2]]

    def test_component_inside_quasi_component(self, sierpinski_plus_point):
        space = sierpinski_plus_point
        quasi = space.quasi_components()
        for block in space.connected_components().blocks:
            x = points_of(block)[0]
            assert block & quasi.block_of(x) == block


class TestClopens:
    def test_sierpinski_trivial(self, sierpinski):
        assert [points_of(a) for a in sierpinski.clopen_masks] == [[], [0, 1]]

    def test_discrete_two_point_all_subsets(self):
        assert len(FiniteSpace.discrete(2).clopen_masks) == 4

    def test_pseudocircle_trivial(self, pseudocircle):
        assert [points_of(a) for a in pseudocircle.clopen_masks] == [[], [0, 1, 2, 3]]


class TestComponentSpace:
    def test_discrete_is_fixed(self):
        space = FiniteSpace.discrete(3)
        assert space.component_space() == FiniteSpace.discrete(3)

    def test_sierpinski_collapses(self, sierpinski):
        assert sierpinski.component_space().n == 1

    def test_sierpinski_plus_point(self, sierpinski_plus_point):
        # two components, quotient is the discrete 2-point space
        assert sierpinski_plus_point.component_space() == FiniteSpace.discrete(2)

    def test_indicator_basis(self, sierpinski, pseudocircle):
        assert FiniteSpace.discrete(2).component_indicator_basis() == ((1, 0), (0, 1))
        assert sierpinski.component_indicator_basis() == ((1, 1),)
        assert pseudocircle.component_indicator_basis() == ((1, 1, 1, 1),)


class TestSober:
    def test_discrete_sober(self):
        ok, witness = FiniteSpace.discrete(4).is_sober()
        assert ok and witness is None

    def test_indiscrete_two_generic_points(self):
        ok, witness = FiniteSpace.indiscrete(2).is_sober()
        assert not ok
        assert witness["closed_set"] == [0, 1]
        assert sorted(witness["generic_points"]) == [0, 1]

    def test_sierpinski_sober(self, sierpinski):
        # closed sets are {}, {0}, {0,1}; each irreducible one has a unique generic point
        ok, witness = sierpinski.is_sober()
        assert ok and witness is None


class TestPullback:
    def test_identity(self, sierpinski):
        out = pullback_clopens(ContinuousMap.identity(sierpinski))
        assert out == {0: 0, 0b11: 0b11}

    def test_constant_to_point(self, pseudocircle):
        point = FiniteSpace.discrete(1)
        f = ContinuousMap(pseudocircle, point, (0, 0, 0, 0))
        assert pullback_clopens(f) == {0: 0, 1: 0b1111}

    def test_discrete_projection(self):
        # pair up points: 4-point discrete -> 2-point discrete
        f = ContinuousMap(FiniteSpace.discrete(4), FiniteSpace.discrete(2), (0, 0, 1, 1))
        out = pullback_clopens(f)
        assert out[0b01] == 0b0011
        assert out[0b10] == 0b1100

    def test_discontinuous_rejected(self, sierpinski):
        with pytest.raises(InvalidMapError):
            ContinuousMap(sierpinski, FiniteSpace.discrete(2), (0, 1))


class TestFiberTransfer:
    def test_identity_closed(self, sierpinski):
        report = fiber_transfer_check(ContinuousMap.identity(sierpinski), "closed")
        assert report.applicable and report.subsets_checked == 4

    def test_pseudocircle_to_point(self, pseudocircle):
        f = ContinuousMap(pseudocircle, FiniteSpace.discrete(1), (0, 0, 0, 0))
        report = fiber_transfer_check(f, "closed")
        assert report.applicable

    def test_discrete_bijection_open(self):
        f = ContinuousMap(FiniteSpace.discrete(2), FiniteSpace.discrete(2), (1, 0))
        report = fiber_transfer_check(f, "open")
        assert report.applicable

    def test_disconnected_fiber_not_applicable(self):
        f = ContinuousMap(FiniteSpace.discrete(2), FiniteSpace.discrete(1), (0, 0))
        report = fiber_transfer_check(f, "closed")
        assert not report.applicable
        assert "fiber" in report.reason

    def test_section_mode(self):
        f = ContinuousMap(FiniteSpace.discrete(2), FiniteSpace.discrete(1), (0, 0))
        # fiber disconnected: even with a section the check must refuse
        assert not fiber_transfer_check(f, "section").applicable
        g = ContinuousMap(FiniteSpace.indiscrete(2), FiniteSpace.discrete(1), (0, 0))
        report = fiber_transfer_check(g, "section")
        assert report.applicable

    def test_section_search(self, sierpinski):
        f = ContinuousMap(sierpinski, FiniteSpace.discrete(1), (0, 0))
        section = find_section(f)
        assert section is not None
        assert f.values[section.values[0]] == 0


class TestEnumeration:
    def test_counts_match_known_values(self):
        assert [len(enumerate_topologies(n)) for n in (1, 2, 3, 4)] == [1, 4, 29, 355]

    def test_preorder_recount_agrees(self):
        for n in (1, 2, 3, 4):
            via_families = {s.opens for s in enumerate_topologies(n)}
            via_preorders = {s.opens for s in preorder_topologies(n)}
            assert via_families == via_preorders


class TestValidation:
    def test_union_closure_enforced(self):
        with pytest.raises(InvalidSpaceError):
            FiniteSpace.from_opens(3, [[0], [1]])

    def test_missing_full_set(self):
        with pytest.raises(InvalidSpaceError):
            FiniteSpace(2, frozenset({0, 0b01}))

    def test_json_needs_exactly_one_family(self):
        with pytest.raises(InvalidSpaceError):
            FiniteSpace.from_json_dict({"n": 2, "opens": [[]], "subbasis": [[0]]})

    def test_json_roundtrip(self, pseudocircle):
        assert FiniteSpace.from_json_dict(pseudocircle.to_json_dict()) == pseudocircle


class TestHomeomorphism:
    def test_relabelled_spaces(self):
        a = FiniteSpace.from_subbasis(2, [{1}])
        b = FiniteSpace.from_subbasis(2, [{0}])
        assert are_homeomorphic(a, b)

    def test_distinct_spaces(self):
        assert not are_homeomorphic(FiniteSpace.discrete(2), FiniteSpace.indiscrete(2))


class TestDot:
    def test_sierpinski_single_edge(self, sierpinski):
        dot = sierpinski.specialization_dot()
        assert dot.count("->") == 1

    def test_discrete_two_clusters_no_edges(self):
        dot = FiniteSpace.discrete(2).specialization_dot()
        assert dot.count("->") == 0
        assert dot.count("cluster_") == 2

    def test_pseudocircle_four_edges_one_cluster(self, pseudocircle):
        dot = pseudocircle.specialization_dot()
        assert dot.count("->") == 4
        assert dot.count("cluster_") == 1


def spaces(max_points=4):
    return st.integers(min_value=1, max_value=max_points).flatmap(
        lambda n: st.lists(
            st.integers(min_value=0, max_value=(1 << n) - 1), max_size=5
        ).map(lambda masks: FiniteSpace.from_subbasis(n, masks))
    )


class TestProperties:
    @settings(max_examples=200, deadline=None)
    @given(spaces())
    def test_quasi_components_are_unions_of_components(self, space):
        comp = space.connected_components()
        quasi = space.quasi_components()
        for q in quasi.blocks:
            covered = 0
            for c in comp.blocks:
                if c & q:
                    assert c & q == c
                    covered |= c
            assert covered == q

    @settings(max_examples=200, deadline=None)
    @given(spaces())
    def test_clopen_count_is_power_of_components(self, space):
        k = len(space.connected_components())
        assert len(space.clopen_masks) == 1 << k

    @settings(max_examples=100, deadline=None)
    @given(spaces())
    def test_component_space_totally_disconnected(self, space):
        quotient = space.component_space()
        assert all(
            block.bit_count() == 1
            for block in quotient.connected_components().blocks
        )

    @settings(max_examples=100, deadline=None)
    @given(spaces())
    def test_components_are_open_and_closed(self, space):
        for block in space.connected_components().blocks:
            assert space.is_open(block)
            assert space.is_closed(block)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2**30))
    def test_random_spaces_validate(self, seed):
        import random as random_mod

        space = random_space(random_mod.Random(seed), 4)
        FiniteSpace.from_opens(space.n, list(space.opens))

    @settings(max_examples=150, deadline=None)
    @given(spaces(), st.integers(min_value=0, max_value=15))
    def test_subset_connected_matches_clopen_definition(self, space, raw_mask):
        # independent route: S is connected iff S is nonempty and the
        # subspace topology {U & S} has no nontrivial clopen subset of S
        mask = raw_mask & space.full
        rel = {u & mask for u in space.opens}
        clopen_def = mask != 0 and not any(
            a not in (0, mask) and (mask & ~a) in rel for a in rel
        )
        assert space.subset_connected(mask) == clopen_def


class TestProductSpace:
    def test_projection_is_open_and_closed(self, sierpinski):
        prod, pairs = product_space(sierpinski, FiniteSpace.indiscrete(2))
        f = ContinuousMap(prod, sierpinski, tuple(p[0] for p in pairs))
        assert f.is_open_map()
        assert f.is_closed_map()
