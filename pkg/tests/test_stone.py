import pytest

from clopen.errors import InvalidRingError, ResourceBoundError
from clopen.stone import (
    BoolRing,
    atoms,
    boolean_spectrum,
    clop_ring,
    clopen_count_check,
    finiteness_suite,
    prime_ideals_bruteforce,
    selfdual_check,
    stone_homeo_check,
    stone_map,
)
from clopen.reports import all_passed
from clopen.topo import FiniteSpace, enumerate_topologies, points_of


def z2_power_tables(k):
    """(Z/2)^k as explicit tables: elements are bitmasks 0..2^k-1."""
    size = 1 << k
    add = [[a ^ b for b in range(size)] for a in range(size)]
    mul = [[a & b for b in range(size)] for a in range(size)]
    return size, add, mul, 0, size - 1


def exhaustive_prime_ideals(ring):
    """All prime ideals by scanning every subset; only for tiny rings.

    Completely independent of both the atom construction and the
    principal-ideal enumeration.
    """
    els = ring.elements
    n = len(els)
    assert n <= 16
    out = []
    for bits in range(1 << n):
        subset = frozenset(els[i] for i in range(n) if (bits >> i) & 1)
        if ring.zero not in subset or ring.one in subset:
            continue
        if not all(ring.add(a, b) in subset for a in subset for b in subset):
            continue
        if not all(ring.mul(r, a) in subset for r in els for a in subset):
            continue
        if not all(
            ring.mul(a, b) not in subset or a in subset or b in subset
            for a in els
            for b in els
        ):
            continue
        out.append(subset)
    return set(out)


class TestBoolRing:
    def test_two_element_ring(self):
        ring = BoolRing.from_tables(*z2_power_tables(1))
        assert atoms(ring) == (1,)

    def test_corrupt_table_rejected(self):
        size, add, mul, zero, one = z2_power_tables(2)
        add = [list(r) for r in add]
        add[1][2] = 1  # breaks x + x = 0 consistency / associativity
        with pytest.raises(InvalidRingError):
            BoolRing.from_tables(size, add, mul, zero, one)

    def test_table_json_roundtrip(self):
        ring = BoolRing.from_tables(*z2_power_tables(2))
        data = ring.to_table_json()
        again = BoolRing.from_tables(
            data["size"], data["add"], data["mul"], data["zero"], data["one"])
        assert atoms(again) == atoms(ring)

    def test_clop_ring_laws(self, pseudocircle):
        ring = clop_ring(pseudocircle)
        assert len(ring) == 2
        for a in ring.elements:
            assert ring.add(a, a) == 0
            assert ring.mul(a, a) == a

    def test_clop_ring_discrete(self):
        ring = clop_ring(FiniteSpace.discrete(2))
        # {0} + {1} = {0,1}; {0} * {1} = empty
        assert ring.add(0b01, 0b10) == 0b11
        assert ring.mul(0b01, 0b10) == 0


class TestAtoms:
    def test_discrete_three_point_atoms_are_singletons(self):
        ring = clop_ring(FiniteSpace.discrete(3))
        assert set(atoms(ring)) == {0b001, 0b010, 0b100}

    def test_sierpinski_plus_point(self, sierpinski_plus_point):
        ring = clop_ring(sierpinski_plus_point)
        assert sorted(points_of(a) for a in atoms(ring)) == [[0, 1], [2]]


class TestAtomLaws:
    @pytest.mark.parametrize("build", [
        lambda: BoolRing.from_tables(*z2_power_tables(2)),
        lambda: BoolRing.from_tables(*z2_power_tables(4)),
        lambda: clop_ring(FiniteSpace.discrete(3)),
        lambda: clop_ring(FiniteSpace.from_subbasis(4, [{0}, {1}, {0, 1, 2}, {0, 1, 3}])),
    ])
    def test_cardinality_orthogonality_unit_sum(self, build):
        ring = build()
        ats = atoms(ring)
        assert len(ring) == 1 << len(ats)
        total = ring.zero
        for i, a in enumerate(ats):
            total = ring.add(total, a)
            for b in ats[i + 1:]:
                assert ring.mul(a, b) == ring.zero
        assert total == ring.one


class TestBooleanSpectrum:
    @pytest.mark.parametrize("k,expected_points", [(1, 1), (2, 2), (3, 3)])
    def test_z2_power_spectrum(self, k, expected_points):
        ring = BoolRing.from_tables(*z2_power_tables(k))
        spec = boolean_spectrum(ring)
        assert spec.space.n == expected_points
        assert len(spec.space.opens) == 1 << expected_points  # discrete

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_primes_match_both_oracles(self, k):
        ring = BoolRing.from_tables(*z2_power_tables(k))
        spec = boolean_spectrum(ring)
        assert set(spec.primes) == set(prime_ideals_bruteforce(ring))
        assert set(spec.primes) == exhaustive_prime_ideals(ring)

    def test_zero_ring_gives_empty_space(self):
        ring = BoolRing([0], lambda a, b: 0, lambda a, b: 0, 0, 0)
        assert boolean_spectrum(ring).space.n == 0


class TestStoneMap:
    def test_discrete_two_point_bijection(self):
        sm = stone_map(FiniteSpace.discrete(2))
        assert sorted(sm.point_map) == [0, 1]

    def test_sierpinski_single_prime(self, sierpinski):
        sm = stone_map(sierpinski)
        assert sm.point_map == (0,)
        assert sm.spectrum.primes[0] == frozenset({0})  # the prime is {empty set}

    def test_pseudocircle_plus_point(self, pseudocircle):
        space = FiniteSpace.from_opens(
            5,
            [mask for mask in pseudocircle.opens] +
            [mask | 0b10000 for mask in pseudocircle.opens],
        )
        sm = stone_map(space)
        assert len(sm.components) == 2
        assert sorted(sm.point_map) == [0, 1]

    def test_homeo_check_examples(self, pseudocircle):
        assert stone_homeo_check(FiniteSpace.discrete(1)).passed
        assert stone_homeo_check(FiniteSpace.indiscrete(4)).passed
        assert stone_homeo_check(pseudocircle).passed

    def test_homeo_check_corpus_three_points(self):
        for space in enumerate_topologies(3):
            assert stone_homeo_check(space).passed
            assert clopen_count_check(space).passed


class TestSelfDuality:
    def test_examples(self, sierpinski):
        assert selfdual_check(FiniteSpace.discrete(3))
        assert not selfdual_check(sierpinski)
        assert not selfdual_check(FiniteSpace.indiscrete(2))

    def test_corpus_selfdual_iff_discrete(self):
        for space in enumerate_topologies(3):
            discrete = len(space.opens) == (1 << space.n)
            assert selfdual_check(space) == discrete


class TestFinitenessSuite:
    def test_discrete_three_point(self):
        reports = finiteness_suite(FiniteSpace.discrete(3))
        assert all_passed(reports)
        z2n = next(r for r in reports if r.check == "clopen-ring-is-z2-power")
        assert z2n.witness == {"k": 3, "clopens": 8}

    def test_pseudocircle(self, pseudocircle):
        reports = finiteness_suite(pseudocircle)
        assert all_passed(reports)
        z2n = next(r for r in reports if r.check == "clopen-ring-is-z2-power")
        assert z2n.witness == {"k": 1, "clopens": 2}

    def test_empty_space(self):
        reports = finiteness_suite(FiniteSpace(0, frozenset({0})))
        assert all_passed(reports)


class TestBounds:
    def test_oversized_table_rejected(self):
        with pytest.raises(ResourceBoundError):
            BoolRing.from_tables(512, [[0]] * 512, [[0]] * 512, 0, 1)
