"""The acceptance gate: one test per criterion, each printing a
pass/fail line.  Run with ``pytest tests/test_acceptance.py -v -s``.

These drive the same engines as `clopen verify` but at the maximal
documented bounds, with every expected value recomputed here from an
independent oracle (preorder enumeration, direct quadratic scans,
materialized ideals) before being compared.
"""

import random
import time

import pytest

from clopen import primaryspec, projfix
from clopen import ring as R
from clopen.factorint import factorize
from clopen.parse import render_ring_desc
from clopen.reports import all_passed
from clopen.stone import clopen_count_check, selfdual_check, stone_homeo_check
from clopen.topo import enumerate_topologies, preorder_topologies
from clopen.verify import VerifyConfig, ring_corpus, suite_fiber_transfer

EXPECTED_COUNTS = [1, 4, 29, 355]


def record(name: str, ok: bool, detail: str = "") -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name} failed: {detail}"


@pytest.fixture(scope="module")
def topology_corpus():
    return {n: enumerate_topologies(n) for n in (1, 2, 3, 4)}


@pytest.fixture(scope="module")
def ring_corpus_results():
    """One pass over the decomposition corpus, slices per criterion."""
    corpus = ring_corpus(VerifyConfig(max_modulus=2000))
    rng = random.Random(0)
    out = {
        "corpus": corpus,
        "decompose_failures": [],
        "equivalence_failures": [],
        "suite_failures": [],
        "clop_iso_failures": [],
        "lift_failures": [],
        "idempotents_checked": 0,
    }
    for ring in corpus:
        name = render_ring_desc(ring)
        dec = R.decompose(ring, rng)
        if not dec.verified:
            out["decompose_failures"].append(name)
        for e in R.idempotents(ring):
            out["idempotents_checked"] += 1
            if not R.primitivity_suite(ring, e).passed:
                out["equivalence_failures"].append((name, R.render_elem(ring, e)))
        reports = R.component_suite(ring, rng)
        for report in reports:
            if report.passed:
                continue
            if report.check == "idempotent-clopen-isomorphism":
                out["clop_iso_failures"].append(name)
            else:
                out["suite_failures"].append((name, report.check))
        for report in projfix.component_lift_check(ring, 1):
            if not report.passed:
                out["lift_failures"].append((name, report.check))
    return out


def test_exhaustive_components_equal_quasi_components(topology_corpus):
    """Criterion 1: every topology on 1..4 points, counts re-derived, and
    the two component notions must coincide block for block."""
    start = time.time()
    counts = [len(topology_corpus[n]) for n in (1, 2, 3, 4)]
    recounts = [len(preorder_topologies(n)) for n in (1, 2, 3, 4)]
    record("topology-counts", counts == EXPECTED_COUNTS == recounts,
           f"family filter {counts}, preorder recount {recounts}")
    mismatches = 0
    audited = 0
    for n, spaces in topology_corpus.items():
        for space in spaces:
            comps = space.connected_components()  # audits every block
            if comps != space.quasi_components():
                mismatches += 1
            audited += 1
    elapsed = time.time() - start
    record("components-equal-quasi-components",
           mismatches == 0 and audited == sum(EXPECTED_COUNTS),
           f"{audited} spaces, {elapsed:.1f}s")
    assert elapsed < 120


def test_stone_duality_corpus(topology_corpus):
    """Criterion 2: the comparison map is a bijective homeomorphism and
    the clopen count law holds, on the full corpus."""
    for spaces in topology_corpus.values():
        for space in spaces:
            assert stone_homeo_check(space).passed
            assert clopen_count_check(space).passed
    record("stone-duality-corpus", True, f"{sum(EXPECTED_COUNTS)} spaces")


def test_selfduality_iff_discrete(topology_corpus):
    """Criterion 3: X homeomorphic to Spec(Clop(X)) exactly when discrete."""
    bad = None
    for spaces in topology_corpus.values():
        for space in spaces:
            discrete = len(space.opens) == (1 << space.n)
            if selfdual_check(space) != discrete:
                bad = space.to_json_dict()
    record("selfduality-iff-discrete", bad is None, str(bad or ""))


def test_ring_idempotents_crt_vs_scan():
    """Criterion 4: CRT idempotents equal the direct scan for n <= 4096,
    and the count is 2^omega(n) on a >= 10^4-value corpus up to 10^6."""
    start = time.time()
    first_bad = None
    for n in range(2, 4097):
        crt = set(R.idempotents(R.Zmod(n)))
        scan = {e for e in range(n) if (e * e - e) % n == 0}
        if crt != scan:
            first_bad = n
            break
    record("crt-idempotents-match-scan", first_bad is None,
           f"n=2..4096, first mismatch {first_bad}")

    values = list(range(2, 10001))
    rng = random.Random(0)
    values.extend(rng.randrange(10001, 10**6 + 1) for _ in range(2001))
    assert len(values) >= 10**4
    count_bad = None
    for n in values:
        if len(R.idempotents(R.Zmod(n))) != (1 << len(factorize(n))):
            count_bad = n
            break
    elapsed = time.time() - start
    record("idempotent-count-2-to-omega", count_bad is None,
           f"{len(values)} values up to 10^6, {elapsed:.1f}s")
    assert elapsed < 300


def test_decomposition_corpus(ring_corpus_results):
    """Criterion 5: verified product decomposition for all of Z/2..Z/2000
    plus >= 50 polynomial/product/table instances."""
    corpus = ring_corpus_results["corpus"]
    extras = [r for r in corpus if not isinstance(r, R.Zmod)]
    assert len(extras) >= 50
    assert {type(r).__name__ for r in extras} == {"PolyQuot", "Product", "Table"}
    failures = ring_corpus_results["decompose_failures"]
    record("decomposition-corpus", not failures,
           f"{len(corpus)} rings ({len(extras)} non-modular), failures {failures[:3]}")


def test_primitivity_equivalence_corpus(ring_corpus_results):
    """Criterion 6: the four primitive-idempotent characterizations agree
    for every idempotent of every corpus ring."""
    failures = ring_corpus_results["equivalence_failures"]
    record("primitivity-equivalence-corpus", not failures,
           f"{ring_corpus_results['idempotents_checked']} idempotents, "
           f"failures {failures[:3]}")


def test_component_suite_corpus(ring_corpus_results):
    """Criterion 7: all finiteness/decomposition statements and their
    cross-consistency (kappa, unit sum, minimal primes) on the corpus."""
    failures = ring_corpus_results["suite_failures"]
    record("component-suite-corpus", not failures, f"failures {failures[:3]}")


def test_affine_clopen_isomorphism_corpus(ring_corpus_results):
    """Criterion 8: e -> D(e) is a Boolean ring isomorphism onto the
    clopens of the spectrum, for every corpus ring."""
    failures = ring_corpus_results["clop_iso_failures"]
    record("affine-clopen-isomorphism", not failures, f"failures {failures[:3]}")


def test_primary_spectrum():
    """Criterion 9: the prime-power witness pair and the U_r basis
    identities at their stated ranges."""
    witness_bad = None
    for p in (2, 3, 5):
        k = 2
        while p**k <= 1024:
            w = primaryspec.sober_witness(R.Zmod(p**k))
            if w is None or not {f"({p})", "(0)"} <= set(w["generic_points"]):
                witness_bad = (p, k)
            k += 1
    record("prime-power-sober-witness", witness_bad is None, str(witness_bad or ""))

    basis_bad = None
    for n in range(2, 201):
        if not primaryspec.basis_identity_check(R.Zmod(n)).passed:
            basis_bad = n
            break
    record("primary-basis-identities", basis_bad is None,
           f"n=2..200, first failure {basis_bad}")


def test_proj_fixtures(ring_corpus_results):
    """Criterion 10: disconnection verdicts, Proj membership of minimal
    primes, and lifted component counts across the ring corpus."""
    verdict_bad = None
    for p in (3, 5, 7, 11, 13):
        fix = projfix.GradedFixture.square_swap(p)
        verdict = projfix.disconnection_witness(
            fix, projfix.parse_poly2("x-y", p), projfix.parse_poly2("x+y", p))
        if verdict.status != projfix.ACCEPT:
            verdict_bad = (p, verdict.status)
    fix2 = projfix.GradedFixture.square_swap(2)
    h = projfix.parse_poly2("x+y", 2)
    if projfix.disconnection_witness(fix2, h, h).status != projfix.REJECT:
        verdict_bad = (2, "expected reject")
    record("disconnection-witness-verdicts", verdict_bad is None, str(verdict_bad or ""))

    fxy = projfix.GradedFixture.annihilating_product(2)
    membership_ok = (projfix.proj_membership_check(fxy, "y") is False
                     and projfix.proj_membership_check(fxy, "x") is True)
    record("proj-membership-minimal-primes", membership_ok)

    failures = ring_corpus_results["lift_failures"]
    record("component-lift-counts", not failures, f"failures {failures[:3]}")


def test_fiber_transfer_randomized():
    """Criterion 11: 10^4 seeded random maps with verified connected
    fibers and mode; any biconditional failure raises inside the check."""
    reports = suite_fiber_transfer(VerifyConfig(seed=0, fiber_samples=10000))
    ok = all_passed(reports)
    record("fiber-transfer-randomized", ok, str(reports[0].witness))
