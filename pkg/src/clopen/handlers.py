"""Request -> response handlers shared by the FastAPI routes and the CLI.

Everything here is pure: parse the request model, run the core package,
build the response model.  Domain errors propagate as the package's
exception types; the service and CLI translate them to HTTP codes /
exit codes at their own edges.
"""

from __future__ import annotations

from . import primaryspec, projfix, ring as ring_mod
from .models import (
    CheckReportOut,
    ComponentsResponse,
    DecomposeResponse,
    DotResponse,
    IdempotentsResponse,
    ProjLiftRequest,
    ProjWitnessRequest,
    ProjWitnessResponse,
    QspecResponse,
    RingRequest,
    SpaceRequest,
    SpectrumResponse,
    StoneResponse,
    SuiteResponse,
    VerifyRequest,
    VerifyResponse,
)
from .parse import parse_ring_desc, render_ring_desc
from .reports import CheckReport, all_passed
from .stone import clopen_count_check, finiteness_suite, selfdual_check, stone_homeo_check, stone_map
from .topo import points_of
from .verify import VerifyConfig, run_verify


def _report_out(report: CheckReport) -> CheckReportOut:
    return CheckReportOut(check=report.check, instance=report.instance,
                          passed=report.passed, witness=report.witness)


def _suite_response(reports) -> SuiteResponse:
    return SuiteResponse(passed=all_passed(reports),
                         reports=[_report_out(r) for r in reports])


# -- ring ---------------------------------------------------------------------


def ring_idempotents(req: RingRequest) -> IdempotentsResponse:
    desc = parse_ring_desc(req.desc)
    return IdempotentsResponse(
        ring=render_ring_desc(desc),
        idempotents=[ring_mod.render_elem(desc, e) for e in ring_mod.idempotents(desc)],
        primitive=[ring_mod.render_elem(desc, e) for e in ring_mod.primitive_idempotents(desc)],
    )


def ring_decompose(req: RingRequest) -> DecomposeResponse:
    desc = parse_ring_desc(req.desc)
    dec = ring_mod.decompose(desc)
    return DecomposeResponse(
        ring=render_ring_desc(desc),
        primitive_idempotents=[ring_mod.render_elem(desc, e) for e in dec.primitive],
        factors=[render_ring_desc(f) for f in dec.factors],
        iso_verified=dec.verified,
    )


def ring_spectrum(req: RingRequest) -> SpectrumResponse:
    desc = parse_ring_desc(req.desc)
    spec = ring_mod.spectrum(desc)
    return SpectrumResponse(
        ring=render_ring_desc(desc),
        points=spec.labels(),
        opens=[points_of(u) for u in spec.space.opens_sorted],
        discrete=len(spec.space.opens) == (1 << spec.space.n),
    )


def ring_suite(req: RingRequest) -> SuiteResponse:
    desc = parse_ring_desc(req.desc)
    reports = list(ring_mod.component_suite(desc))
    reports.extend(ring_mod.primitivity_suite(desc, e) for e in ring_mod.idempotents(desc))
    return _suite_response(reports)


# -- spaces -------------------------------------------------------------------


def space_components(req: SpaceRequest) -> ComponentsResponse:
    space = req.space.to_space()
    comps = space.connected_components()
    quasi = space.quasi_components()
    return ComponentsResponse(
        n=space.n,
        components=comps.as_lists(),
        quasi_components=quasi.as_lists(),
        clopens=[points_of(a) for a in space.clopen_masks],
        integer_function_basis=[list(v) for v in space.component_indicator_basis()],
    )


def space_stone(req: SpaceRequest) -> StoneResponse:
    space = req.space.to_space()
    sm = stone_map(space)
    homeo = stone_homeo_check(space)
    return StoneResponse(
        components=sm.components.as_lists(),
        spectrum_points=sm.spectrum.space.n,
        point_map=list(sm.point_map),
        homeomorphism=homeo.passed,
        clopen_count=len(space.clopen_masks),
    )


def space_suite(req: SpaceRequest) -> SuiteResponse:
    space = req.space.to_space()
    reports = [stone_homeo_check(space), clopen_count_check(space)]
    discrete = len(space.opens) == (1 << space.n)
    reports.append(CheckReport(
        "selfdual-iff-discrete", f"n={space.n}",
        selfdual_check(space) == discrete,
        witness={"discrete": discrete}))
    reports.extend(finiteness_suite(space))
    quasi_ok = space.quasi_components() == space.connected_components()
    reports.append(CheckReport(
        "components-equal-quasi-components", f"n={space.n}", quasi_ok))
    return _suite_response(reports)


def space_dot(req: SpaceRequest) -> DotResponse:
    return DotResponse(dot=req.space.to_space().specialization_dot())


# -- primary spectra ------------------------------------------------------------


def qspec(req: RingRequest) -> QspecResponse:
    desc = parse_ring_desc(req.desc)
    ps = primaryspec.primary_space(desc)
    witness = primaryspec.sober_witness(desc)
    return QspecResponse(
        ring=render_ring_desc(desc),
        points=ps.labels(),
        opens=[points_of(u) for u in ps.space.opens_sorted],
        sober=witness is None,
        witness=witness,
    )


# -- graded fixtures -------------------------------------------------------------


def proj_witness(req: ProjWitnessRequest) -> ProjWitnessResponse:
    if req.fixture == "square-swap":
        fixture = projfix.GradedFixture.square_swap(req.char)
    else:
        fixture = projfix.GradedFixture.annihilating_product(req.char)
    f = projfix.parse_poly2(req.f, req.char)
    g = projfix.parse_poly2(req.g, req.char)
    verdict = projfix.disconnection_witness(fixture, f, g, req.nilpotency_bound)
    return ProjWitnessResponse(
        verdict=verdict.status,
        certificates=list(verdict.certificates),
        reason=verdict.reason,
    )


def proj_lift(req: ProjLiftRequest) -> SuiteResponse:
    desc = parse_ring_desc(req.desc)
    return _suite_response(projfix.component_lift_check(desc, req.dim))


# -- verify -----------------------------------------------------------------------


def verify(req: VerifyRequest) -> VerifyResponse:
    config = VerifyConfig(
        max_points=req.max_points,
        max_modulus=req.max_modulus,
        max_table_size=req.max_table_size,
        seed=req.seed,
        jobs=req.jobs,
        fiber_samples=req.fiber_samples,
    )
    result = run_verify(config)
    return VerifyResponse(
        passed=result.passed,
        reports=[_report_out(r) for r in result.reports],
    )
