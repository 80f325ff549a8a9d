"""The verification orchestrator: every suite behind `clopen verify`.

Each suite is a pure function VerifyConfig -> [CheckReport]; the
orchestrator fans them out over an optional process pool, merges, and
sorts.  All randomness is seeded from the config, so reports are
reproducible bit for bit.

The default bounds keep a full run in the minutes range; the acceptance
tests drive the same suites at their maximal documented bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import projfix
from .errors import ResourceBoundError
from .factorint import factorize
from .parse import parse_ring_desc, render_ring_desc
from .primaryspec import basis_identity_check, primary_suite, sober_witness
from .reports import CheckReport, all_passed
from .ring import (
    PolyQuot,
    RingDesc,
    Zmod,
    component_suite,
    decompose,
    idempotents,
    primitivity_suite,
    product_of,
    ring_size,
    to_table,
)
from .stone import clopen_count_check, finiteness_suite, selfdual_check, stone_homeo_check
from .topo import (
    ContinuousMap,
    FiniteSpace,
    enumerate_topologies,
    fiber_transfer_check,
    find_section,
    preorder_topologies,
    product_space,
    random_space,
)

EXPECTED_TOPOLOGY_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355}


@dataclass(frozen=True)
class VerifyConfig:
    max_points: int = 4
    max_modulus: int = 10000
    max_table_size: int = 16
    seed: int = 0
    jobs: int = 1
    fiber_samples: int = 10000

    def validated(self) -> "VerifyConfig":
        if self.max_points > 5:
            raise ResourceBoundError("max_points is capped at 5 (exhaustive enumeration guard)")
        for name in ("max_points", "max_modulus", "max_table_size", "jobs", "fiber_samples"):
            if getattr(self, name) < 1:
                raise ResourceBoundError(f"{name} must be positive")
        return self


# -- topology corpus -----------------------------------------------------


def suite_topology(config: VerifyConfig) -> list[CheckReport]:
    reports = []
    for n in range(1, config.max_points + 1):
        spaces = enumerate_topologies(n)
        recount = len(preorder_topologies(n))
        count_ok = len(spaces) == recount
        if n in EXPECTED_TOPOLOGY_COUNTS:
            count_ok = count_ok and len(spaces) == EXPECTED_TOPOLOGY_COUNTS[n]
        reports.append(CheckReport(
            "topology-count", f"n={n}", count_ok,
            witness={"family_filter": len(spaces), "preorder_recount": recount}))

        quasi_fail = selfdual_fail = finite_fail = None
        for space in spaces:
            comps = space.connected_components()
            quasi = space.quasi_components()
            if comps != quasi and quasi_fail is None:
                quasi_fail = space.to_json_dict()
            stone_homeo_check(space)  # raises on any failure
            clopen_count_check(space)
            discrete = len(space.opens) == (1 << space.n)
            if selfdual_check(space) != discrete and selfdual_fail is None:
                selfdual_fail = space.to_json_dict()
            if not all_passed(finiteness_suite(space)) and finite_fail is None:
                finite_fail = space.to_json_dict()
        reports.append(CheckReport(
            "components-equal-quasi-components", f"n={n}",
            quasi_fail is None, witness=quasi_fail or {"spaces": len(spaces)}))
        reports.append(CheckReport(
            "stone-duality-corpus", f"n={n}", True,
            witness={"spaces": len(spaces)}))
        reports.append(CheckReport(
            "selfdual-iff-discrete", f"n={n}", selfdual_fail is None,
            witness=selfdual_fail or {"spaces": len(spaces)}))
        reports.append(CheckReport(
            "finiteness-suite-corpus", f"n={n}", finite_fail is None,
            witness=finite_fail or {"spaces": len(spaces)}))
    return reports


# -- idempotent counting ---------------------------------------------------


def suite_idempotent_counts(config: VerifyConfig) -> list[CheckReport]:
    reports = []
    crt_limit = min(4096, config.max_modulus)
    bad = None
    for n in range(2, crt_limit + 1):
        crt = set(idempotents(Zmod(n)))
        scan = {e for e in range(n) if (e * e - e) % n == 0}
        if crt != scan:
            bad = n
            break
    reports.append(CheckReport(
        "crt-idempotents-match-scan", f"n=2..{crt_limit}", bad is None,
        witness={"first_mismatch": bad} if bad else {"values": crt_limit - 1}))

    dense_limit = min(10000, config.max_modulus)
    values = list(range(2, dense_limit + 1))
    if config.max_modulus > dense_limit:
        rng = random.Random(config.seed)
        values.extend(
            rng.randrange(dense_limit + 1, config.max_modulus + 1) for _ in range(2001)
        )
    bad = None
    for n in values:
        k = len(factorize(n))
        if len(idempotents(Zmod(n))) != (1 << k):
            bad = n
            break
    reports.append(CheckReport(
        "idempotent-count-is-2-to-omega", f"values={len(values)},max={config.max_modulus}",
        bad is None, witness={"first_mismatch": bad} if bad else {"values": len(values)}))
    return reports


# -- ring corpus ------------------------------------------------------------


def ring_corpus(config: VerifyConfig) -> list[RingDesc]:
    """Z/n up to the decomposition bound, plus a fixed panel of
    polynomial-quotient, product and table instances."""
    out: list[RingDesc] = [Zmod(n) for n in range(2, min(2000, config.max_modulus) + 1)]
    poly_instances = [
        (2, "x^2+x"), (2, "x^3+x"), (2, "x^3+x^2"), (2, "x^4+x^2"),
        (2, "x^2+x+1"), (2, "x^5+x"), (2, "x^6+x^2"), (2, "x^4+x^3+x^2+x"),
        (3, "x^2+2x"), (3, "x^3+2x"), (3, "x^2+1"), (3, "x^3+x"),
        (3, "x^4+x^2"), (3, "x^2+x+2"), (3, "x^5+2x^3+x"),
        (5, "x^2+4x"), (5, "x^3+x"), (5, "x^2+2"), (5, "x^4+4x^2"),
        (5, "x^3+4x"), (5, "x^2+x+1"),
        (7, "x^2+6x"), (7, "x^3+x"), (7, "x^2+3"),
        (11, "x^2+10x"), (11, "x^2+1"),
        (13, "x^2+12x"), (13, "x^3+12x"),
        (2, "x^7+x^5"), (3, "x^3+2x^2"), (5, "x^3+2x^2+x"), (7, "x^3+6x^2"),
    ]
    from .parse import parse_poly

    for p, text in poly_instances:
        out.append(PolyQuot(p, parse_poly(text, p)))
    product_instances = [
        [Zmod(4), Zmod(3)],
        [Zmod(6), Zmod(10)],
        [Zmod(8), Zmod(9)],
        [Zmod(2), Zmod(2), Zmod(2)],
        [Zmod(4), Zmod(9), Zmod(25)],
        [Zmod(30), Zmod(7)],
        [PolyQuot(2, (0, 1, 0, 1)), Zmod(9)],
        [PolyQuot(3, (0, 0, 1)), Zmod(5)],
        [PolyQuot(2, (1, 1, 1)), PolyQuot(2, (1, 1, 1))],
        [Zmod(12), Zmod(12)],
        [Zmod(16), PolyQuot(5, (0, 1))],
        [Zmod(2), Zmod(3), Zmod(5), Zmod(7)],
    ]
    out.extend(product_of(fs) for fs in product_instances)
    table_sources = [Zmod(6), Zmod(8), Zmod(12), PolyQuot(2, (0, 0, 1)),
                     PolyQuot(2, (1, 1, 1)), PolyQuot(3, (0, 0, 1)),
                     product_of([Zmod(2), Zmod(2)]), Zmod(15), Zmod(16), Zmod(10)]
    for src in table_sources:
        if ring_size(src) <= config.max_table_size:
            out.append(to_table(src))
    return out


def suite_ring_corpus(config: VerifyConfig) -> list[CheckReport]:
    corpus = ring_corpus(config)
    rng = random.Random(config.seed + 1)
    decompose_fail = None
    equivalence_fail = None
    suite_fail = None
    idempotent_total = 0
    for ring in corpus:
        dec = decompose(ring, rng)
        if not dec.verified and decompose_fail is None:
            decompose_fail = render_ring_desc(ring)
        for e in idempotents(ring):
            idempotent_total += 1
            report = primitivity_suite(ring, e)
            if not report.passed and equivalence_fail is None:
                equivalence_fail = {"ring": render_ring_desc(ring), "witness": report.witness}
        suite_reports = component_suite(ring, rng)
        if not all_passed(suite_reports) and suite_fail is None:
            suite_fail = {
                "ring": render_ring_desc(ring),
                "failed": [r.check for r in suite_reports if not r.passed],
            }
    instance = f"rings={len(corpus)}"
    return [
        CheckReport("decomposition-corpus", instance, decompose_fail is None,
                    witness=decompose_fail or {"rings": len(corpus)}),
        CheckReport("primitivity-equivalence-corpus",
                    f"idempotents={idempotent_total}", equivalence_fail is None,
                    witness=equivalence_fail or {"idempotents": idempotent_total}),
        CheckReport("component-suite-corpus", instance, suite_fail is None,
                    witness=suite_fail or {"rings": len(corpus)}),
    ]


# -- primary spectra ---------------------------------------------------------


def suite_primary(config: VerifyConfig) -> list[CheckReport]:
    reports = []
    witness_fail = None
    checked = 0
    for p in (2, 3, 5):
        k = 2
        while p**k <= 1000:
            n = p**k
            w = sober_witness(Zmod(n))
            checked += 1
            want = {f"({p})", "(0)"}
            if w is None or not want <= set(w["generic_points"]):
                witness_fail = {"n": n, "witness": w}
            k += 1
    reports.append(CheckReport(
        "prime-power-non-sober-witness", f"instances={checked}",
        witness_fail is None, witness=witness_fail or {"instances": checked}))

    basis_fail = None
    limit = min(200, config.max_modulus)
    for n in range(2, limit + 1):
        if not basis_identity_check(Zmod(n)).passed:
            basis_fail = n
            break
    reports.append(CheckReport(
        "primary-basis-identities-range", f"n=2..{limit}", basis_fail is None,
        witness={"first_failure": basis_fail} if basis_fail else {"values": limit - 1}))

    suite_fail = None
    sampled = [2, 4, 5, 6, 9, 12, 16, 30, 36, 60, 100, 128, 180, 200]
    table_rings = [to_table(Zmod(6)), to_table(Zmod(8)), to_table(Zmod(12))]
    for ring in [Zmod(n) for n in sampled if n <= config.max_modulus] + table_rings:
        if not all_passed(primary_suite(ring)) and suite_fail is None:
            suite_fail = render_ring_desc(ring)
    reports.append(CheckReport(
        "primary-suite-sampled", f"instances={len(sampled) + len(table_rings)}",
        suite_fail is None, witness=suite_fail or {}))
    return reports


# -- graded fixtures ----------------------------------------------------------


def suite_proj(config: VerifyConfig) -> list[CheckReport]:
    reports = []
    accept_fail = None
    for p in (3, 5, 7, 11, 13):
        fix = projfix.GradedFixture.square_swap(p)
        f = projfix.parse_poly2("x-y", p)
        g = projfix.parse_poly2("x+y", p)
        verdict = projfix.disconnection_witness(fix, f, g)
        if verdict.status != projfix.ACCEPT:
            accept_fail = {"p": p, "verdict": verdict.status, "reason": verdict.reason}
    fix2 = projfix.GradedFixture.square_swap(2)
    h = projfix.parse_poly2("x+y", 2)
    reject = projfix.disconnection_witness(fix2, h, h)
    reports.append(CheckReport(
        "disconnection-witness-odd-accept-char2-reject", "p in {3,5,7,11,13} + GF(2)",
        accept_fail is None and reject.status == projfix.REJECT,
        witness=accept_fail or {"char2": reject.reason}))

    fxy = projfix.GradedFixture.annihilating_product(2)
    membership_ok = (
        projfix.proj_membership_check(fxy, "y") is False
        and projfix.proj_membership_check(fxy, "x") is True
    )
    reports.append(CheckReport(
        "irrelevant-prime-excluded-from-proj", "xy->0, deg x=0, deg y=1",
        membership_ok))
    reports.append(projfix.irreducible_components_check(fxy))

    lift_fail = None
    lifted = 0
    lift_sample = [Zmod(n) for n in (2, 5, 6, 12, 30, 360)] + [
        PolyQuot(2, (0, 1, 0, 1)), product_of([Zmod(4), Zmod(3)])]
    for ring in lift_sample:
        for report in projfix.component_lift_check(ring, 1):
            lifted += 1
            if not report.passed and lift_fail is None:
                lift_fail = {"ring": render_ring_desc(ring), "check": report.check}
    reports.append(CheckReport(
        "component-lift-corpus", f"checks={lifted}", lift_fail is None,
        witness=lift_fail or {"checks": lifted}))

    rng = random.Random(config.seed + 2)
    nf_fail = None
    for fix in (projfix.GradedFixture.square_swap(3),
                projfix.GradedFixture.annihilating_product(3)):
        for _ in range(250):
            poly = {}
            for _ in range(rng.randrange(1, 6)):
                m = (rng.randrange(0, 5), rng.randrange(0, 5))
                poly[m] = (poly.get(m, 0) + rng.randrange(1, fix.p)) % fix.p
            nf = fix.normal_form(poly)
            if fix.normal_form(nf) != nf and nf_fail is None:
                nf_fail = projfix.p2_render(poly)
            hd = fix.homogeneous_degree(poly)
            if hd is not None and nf and fix.homogeneous_degree(nf) != hd:
                nf_fail = projfix.p2_render(poly)
    reports.append(CheckReport(
        "normal-form-idempotent-and-graded", "500 random polynomials", nf_fail is None,
        witness=nf_fail or {}))

    domain = projfix.integral_domain_irreducibility_check(3, 1, seed=config.seed)
    domain2 = projfix.integral_domain_irreducibility_check(2, 2, seed=config.seed)
    reports.append(CheckReport(
        "projective-space-over-domain-irreducible", "GF(3) dim 1, GF(2) dim 2",
        domain["irreducible"] and domain2["irreducible"]))
    return reports


# -- fiber transfer ------------------------------------------------------------


def _quotient_instance(rng: random.Random):
    nx = rng.randint(2, 4) if rng.random() < 0.97 else 5
    source = random_space(rng, nx)
    ny = rng.randint(1, nx)
    values = [rng.randrange(ny) for _ in range(nx)]
    pts = list(range(nx))
    rng.shuffle(pts)
    for y in range(ny):
        values[pts[y]] = y
    opens = frozenset(
        v for v in range(1 << ny)
        if _preimage_mask(values, v) in source.opens
    )
    target = FiniteSpace(ny, opens)
    return ContinuousMap(source, target, tuple(values))


def _preimage_mask(values, target_mask: int) -> int:
    m = 0
    for x, v in enumerate(values):
        if (target_mask >> v) & 1:
            m |= 1 << x
    return m


def _product_instance(rng: random.Random):
    ny = rng.randint(1, 3)
    target = random_space(rng, ny)
    while True:
        fiber = random_space(rng, rng.randint(1, 3), edge_bias=0.6)
        if fiber.is_connected():
            break
    source, pairs = product_space(target, fiber)
    return ContinuousMap(source, target, tuple(pair[0] for pair in pairs))


def suite_fiber_transfer(config: VerifyConfig) -> list[CheckReport]:
    rng = random.Random(config.seed + 3)
    accepted = 0
    attempts = 0
    mode_counts = {"closed": 0, "open": 0, "section": 0}
    max_attempts = config.fiber_samples * 80
    while accepted < config.fiber_samples:
        attempts += 1
        if attempts > max_attempts:
            raise ResourceBoundError("fiber-transfer sampling failed to hit its quota")
        f = _quotient_instance(rng) if rng.random() < 0.5 else _product_instance(rng)
        if any(not f.source.subset_connected(fib) for fib in f.fibers()):
            continue
        modes = []
        if f.is_closed_map():
            modes.append("closed")
        if f.is_open_map():
            modes.append("open")
        section = None
        if rng.random() < 0.2:  # the section search is the costly one
            section = find_section(f)
            if section is not None:
                modes.append("section")
        if not modes:
            continue
        mode = rng.choice(modes)
        report = fiber_transfer_check(f, mode, section if mode == "section" else None)
        if not report.applicable:
            continue
        mode_counts[mode] += 1
        accepted += 1
    return [CheckReport(
        "fiber-transfer-biconditional", f"samples={accepted}", True,
        witness={"attempts": attempts, "modes": mode_counts})]


# -- descriptor grammar ---------------------------------------------------------


def suite_parse(config: VerifyConfig) -> list[CheckReport]:
    texts = [
        "Z/2", "Z/12", "Z/360", "GF(2)[x]/(x^3+x)", "GF(3)[x]/(x^2+1)",
        "GF(13)", "Z/4 x GF(3)", "Z/6 x Z/10 x Z/15",
        "GF(5)[x]/(x^4+4x^2) x Z/9",
    ]
    bad = None
    for text in texts:
        desc = parse_ring_desc(text)
        if parse_ring_desc(render_ring_desc(desc)) != desc:
            bad = text
    return [CheckReport(
        "descriptor-render-parse-roundtrip", f"texts={len(texts)}", bad is None,
        witness={"first_failure": bad} if bad else {"texts": len(texts)})]


# -- orchestrator ---------------------------------------------------------------


SUITES: tuple[tuple[str, Callable[[VerifyConfig], list[CheckReport]]], ...] = (
    ("topology", suite_topology),
    ("idempotent-counts", suite_idempotent_counts),
    ("ring-corpus", suite_ring_corpus),
    ("primary-spectra", suite_primary),
    ("graded-fixtures", suite_proj),
    ("fiber-transfer", suite_fiber_transfer),
    ("descriptor-grammar", suite_parse),
)


def _run_suite(name: str, config: VerifyConfig) -> list[CheckReport]:
    fn = dict(SUITES)[name]
    return fn(config)


@dataclass
class VerifyResult:
    reports: list[CheckReport]
    passed: bool

    def to_json_dicts(self) -> list[dict]:
        return [r.to_json_dict() for r in self.reports]


def run_verify(config: VerifyConfig) -> VerifyResult:
    config = config.validated()
    names = [name for name, _ in SUITES]
    if config.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_suite_for_pool, [(n, config) for n in names]))
    else:
        chunks = [_run_suite(name, config) for name in names]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (r.check, r.instance))
    return VerifyResult(reports, all_passed(reports))


def _run_suite_for_pool(arg: tuple[str, VerifyConfig]) -> list[CheckReport]:
    return _run_suite(*arg)
