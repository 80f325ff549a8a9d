import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clopen import primaryspec as P
from clopen import ring as R
from clopen.errors import InvalidRingError
from clopen.reports import all_passed


def brute_primary_ideals_zmod(n):
    """Independent oracle: every ideal of Z/n is (d) for d | n; apply the
    primary definition directly to the materialized sets."""
    out = []
    for d in range(1, n + 1):
        if n % d:
            continue
        members = {x for x in range(n) if x % d == 0}
        if members == set(range(n)):
            continue  # the unit ideal (d = 1)
        radical_members = set()
        for a in range(n):
            power = a
            for _ in range(n):
                if power in members:
                    radical_members.add(a)
                    break
                power = (power * a) % n
        primary = True
        for a in range(n):
            if a in radical_members:
                continue
            for b in range(n):
                if (a * b) % n in members and b not in members:
                    primary = False
                    break
            if not primary:
                break
        if primary:
            out.append(frozenset(members))
    return set(out)


class TestPrimaryIdeals:
    def test_z4(self):
        ideals = P.primary_ideals(R.Zmod(4))
        assert [i.render(R.Zmod(4)) for i in ideals] == ["(2)", "(0)"]

    def test_z12(self):
        ideals = P.primary_ideals(R.Zmod(12))
        assert [i.render(R.Zmod(12)) for i in ideals] == ["(2)", "(3)", "(4)"]

    def test_z5_field(self):
        ideals = P.primary_ideals(R.Zmod(5))
        assert [i.render(R.Zmod(5)) for i in ideals] == ["(0)"]

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=2, max_value=80))
    def test_matches_brute_oracle(self, n):
        ring = R.Zmod(n)
        symbolic = {
            frozenset(x for x in range(n) if i.contains(ring, x))
            for i in P.primary_ideals(ring)
        }
        assert symbolic == brute_primary_ideals_zmod(n)

    def test_table_ring_matches_zmod(self):
        ring = R.Zmod(12)
        tbl = R.to_table(ring)  # indices are residues
        sym = {frozenset(x for x in range(12) if i.contains(ring, x))
               for i in P.primary_ideals(ring)}
        table_sets = {frozenset(i.data) for i in P.primary_ideals(tbl)}
        assert table_sets == sym

    def test_primary_condition_holds(self):
        ring = R.Zmod(12)
        for ideal in P.primary_ideals(ring):
            members = frozenset(x for x in range(12) if ideal.contains(ring, x))
            assert P.is_primary_ideal(ring, members)

    def test_non_primary_rejected(self):
        # (6) in Z/12: 2*3 in (6), 2 not in sqrt((6)), 3 not in (6)
        members = frozenset(x for x in range(12) if x % 6 == 0)
        assert not P.is_primary_ideal(R.Zmod(12), members)

    def test_unsupported_ring(self):
        with pytest.raises(InvalidRingError):
            P.primary_ideals(R.PolyQuot(2, (0, 1)))


class TestPrimarySpace:
    def test_z4_indiscrete(self):
        ps = P.primary_space(R.Zmod(4))
        assert ps.labels() == ["(2)", "(0)"]
        assert sorted(ps.space.opens) == [0, 0b11]

    def test_z12_opens(self):
        ps = P.primary_space(R.Zmod(12))
        assert ps.labels() == ["(2)", "(3)", "(4)"]
        assert ps.u_mask(2) == 0b010      # U_2 = {(3)}
        assert ps.u_mask(3) == 0b101      # U_3 = {(2), (4)}
        assert ps.u_mask(6) == 0
        assert sorted(ps.space.opens) == [0, 0b010, 0b101, 0b111]

    def test_z5_point(self):
        assert P.primary_space(R.Zmod(5)).space.n == 1

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=2, max_value=100))
    def test_basis_identities(self, n):
        assert P.basis_identity_check(R.Zmod(n)).passed

    def test_u_squared_of_two_in_z4(self):
        ps = P.primary_space(R.Zmod(4))
        assert ps.u_mask(2) & ps.u_mask(2) == ps.u_mask(0)  # U_2 ^ 2 = U_4 = U_0


class TestRadicalProjection:
    def test_z4(self):
        ps, spec, fmap = P.radical_projection(R.Zmod(4))
        assert spec.labels() == ["(2)"]
        assert fmap.values == (0, 0)  # both (0) and (2) map to (2)

    def test_z12(self):
        ps, spec, fmap = P.radical_projection(R.Zmod(12))
        # points (2),(3),(4) -> primes (2),(3),(2)
        labels = [spec.labels()[v] for v in fmap.values]
        assert labels == ["(2)", "(3)", "(2)"]

    def test_field(self):
        ps, spec, fmap = P.radical_projection(R.Zmod(5))
        assert fmap.values == (0,)


class TestSoberness:
    @pytest.mark.parametrize("n,p", [(4, 2), (9, 3), (25, 5), (8, 2), (27, 3)])
    def test_prime_power_witness(self, n, p):
        witness = P.sober_witness(R.Zmod(n))
        assert witness is not None
        assert f"({p})" in witness["generic_points"]
        assert "(0)" in witness["generic_points"]

    def test_z6_sober(self):
        assert P.sober_witness(R.Zmod(6)) is None

    def test_closure_law(self):
        for n in (4, 6, 12, 30, 60):
            assert P.closure_law_check(R.Zmod(n)).passed


class TestSuite:
    @pytest.mark.parametrize("n", [2, 4, 5, 6, 9, 12, 30, 36, 100])
    def test_zmod_suite(self, n):
        assert all_passed(P.primary_suite(R.Zmod(n)))

    def test_table_suite(self):
        assert all_passed(P.primary_suite(R.to_table(R.Zmod(8))))

    def test_spectrum_embedding_z12(self):
        report = P.spectrum_embeds_check(R.Zmod(12))
        assert report.passed
        assert report.witness == {"primes": 2}
