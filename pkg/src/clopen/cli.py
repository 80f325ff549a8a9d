"""Command-line front end.

A thin client over the handler layer the HTTP service uses: parse
arguments into the request models, call the handler, print JSON.
Output is line-delimited JSON unless --pretty is given.

Exit codes: 0 pass, 1 counterexample/falsified check, 2 usage or parse
error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import handlers
from .errors import (
    DescriptorError,
    FalsifiedInvariantError,
    InvalidMapError,
    InvalidRingError,
    InvalidSpaceError,
    ResourceBoundError,
)
from .models import (
    ProjLiftRequest,
    ProjWitnessRequest,
    RingRequest,
    SpaceIn,
    SpaceRequest,
    VerifyRequest,
)

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit(obj: Any, pretty: bool) -> None:
    print(json.dumps(obj, indent=2 if pretty else None, sort_keys=False))


def _emit_reports(reports: list[dict], pretty: bool) -> None:
    for r in reports:
        _emit(r, pretty)


def _load_space(path: str) -> SpaceIn:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return SpaceIn.model_validate(data)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clopen",
        description="Connected components, Stone duality, idempotent "
                    "decomposition, primary spectra, graded witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_pretty(p):
        p.add_argument("--pretty", action="store_true", help="indent JSON output")
        return p

    ring = sub.add_parser("ring", help="ring operations on a descriptor")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    for verb in ("idempotents", "decompose", "spec", "suite"):
        p = with_pretty(ring_sub.add_parser(verb))
        p.add_argument("desc", help="ring descriptor, e.g. 'Z/12' or 'GF(2)[x]/(x^3+x)'")

    space = sub.add_parser("space", help="operations on a finite space JSON file")
    space_sub = space.add_subparsers(dest="space_command", required=True)
    for verb in ("components", "stone", "suite", "dot"):
        p = with_pretty(space_sub.add_parser(verb))
        p.add_argument("file", help="space JSON path, or - for stdin")

    qspec = with_pretty(sub.add_parser("qspec", help="primary-ideal spectrum"))
    qspec.add_argument("desc")

    proj = sub.add_parser("proj", help="graded fixture checks")
    proj_sub = proj.add_subparsers(dest="proj_command", required=True)
    witness = with_pretty(proj_sub.add_parser("witness"))
    witness.add_argument("--char", type=int, required=True, help="field characteristic")
    witness.add_argument("--f", default="x-y")
    witness.add_argument("--g", default="x+y")
    witness.add_argument("--bound", type=int, default=16, help="nilpotency search bound")
    witness.add_argument("--fixture", default="square-swap",
                         choices=["square-swap", "annihilating-product"])
    lift = with_pretty(proj_sub.add_parser("lift"))
    lift.add_argument("--ring", required=True, dest="ring_desc")
    lift.add_argument("--dim", type=int, required=True)

    verify = with_pretty(sub.add_parser("verify", help="run every verification suite"))
    verify.add_argument("--max-points", type=int, default=4)
    verify.add_argument("--max-n", type=int, default=10000, dest="max_modulus")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--fiber-samples", type=int, default=10000)
    verify.add_argument("--max-table-size", type=int, default=16)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    pretty = getattr(args, "pretty", False)
    if args.command == "ring":
        req = RingRequest(desc=args.desc)
        if args.ring_command == "idempotents":
            _emit(handlers.ring_idempotents(req).model_dump(), pretty)
        elif args.ring_command == "decompose":
            _emit(handlers.ring_decompose(req).model_dump(), pretty)
        elif args.ring_command == "spec":
            _emit(handlers.ring_spectrum(req).model_dump(), pretty)
        else:
            resp = handlers.ring_suite(req)
            _emit_reports([r.model_dump(by_alias=True) for r in resp.reports], pretty)
            return EXIT_PASS if resp.passed else EXIT_COUNTEREXAMPLE
        return EXIT_PASS
    if args.command == "space":
        req = SpaceRequest(space=_load_space(args.file))
        if args.space_command == "components":
            _emit(handlers.space_components(req).model_dump(), pretty)
        elif args.space_command == "stone":
            _emit(handlers.space_stone(req).model_dump(), pretty)
        elif args.space_command == "dot":
            print(handlers.space_dot(req).dot)
        else:
            resp = handlers.space_suite(req)
            _emit_reports([r.model_dump(by_alias=True) for r in resp.reports], pretty)
            return EXIT_PASS if resp.passed else EXIT_COUNTEREXAMPLE
        return EXIT_PASS
    if args.command == "qspec":
        _emit(handlers.qspec(RingRequest(desc=args.desc)).model_dump(), pretty)
        return EXIT_PASS
    if args.command == "proj":
        if args.proj_command == "witness":
            req = ProjWitnessRequest(
                char=args.char, f=args.f, g=args.g,
                nilpotency_bound=args.bound, fixture=args.fixture)
            _emit(handlers.proj_witness(req).model_dump(), pretty)
            return EXIT_PASS
        req = ProjLiftRequest(desc=args.ring_desc, dim=args.dim)
        resp = handlers.proj_lift(req)
        _emit_reports([r.model_dump(by_alias=True) for r in resp.reports], pretty)
        return EXIT_PASS if resp.passed else EXIT_COUNTEREXAMPLE
    if args.command == "verify":
        req = VerifyRequest(
            max_points=args.max_points,
            max_modulus=args.max_modulus,
            max_table_size=args.max_table_size,
            seed=args.seed,
            jobs=args.jobs,
            fiber_samples=args.fiber_samples,
        )
        resp = handlers.verify(req)
        _emit_reports([r.model_dump(by_alias=True) for r in resp.reports], pretty)
        _emit({"verify": "pass" if resp.passed else "fail",
               "reports": len(resp.reports)}, pretty)
        return EXIT_PASS if resp.passed else EXIT_COUNTEREXAMPLE
    if args.command == "serve":
        import uvicorn

        uvicorn.run("clopen.service:app", host=args.host, port=args.port)
        return EXIT_PASS
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        return _dispatch(args)
    except ResourceBoundError as exc:
        print(json.dumps({"error": str(exc), "kind": "resource-bound"}), file=sys.stderr)
        return EXIT_RESOURCE
    except FalsifiedInvariantError as exc:
        print(json.dumps({"error": str(exc), "kind": "falsified-invariant",
                          "witness": exc.witness}), file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except (DescriptorError, InvalidRingError, InvalidSpaceError, InvalidMapError) as exc:
        print(json.dumps({"error": str(exc), "kind": "invalid-input"}), file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(json.dumps({"error": str(exc), "kind": "invalid-input"}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
