"""Command line interface.

Every command prints a single JSON document to stdout:

    {"command": ..., "spec": ..., "result": ..., "version": ..., "elapsedMs": ...}

with sorted keys.  Everything except elapsedMs is deterministic for a fixed
command line, so scripts may compare reports byte for byte after dropping
that one key.  Progress lines (corpus runs) go to stderr.

Exit codes: 0 success, 2 a checked property is false and --fail-on-false was
given, 64 usage or input error, 65 a size guard refused the computation,
70 an internal defect (a verified invariant failed, which is a bug here).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import __version__
from .errors import GuardExceededError, InternalDefectError, SpecSyntaxError
from .matrices import Matrix, det, gl_lift
from .rings import (
    INTEGERS,
    build_ring,
    enumerate_ideals,
    gf_polynomial_ring,
    ideal_closure,
    quotient_ring,
)
from .semiunits import (
    Rho,
    is_semifield,
    rho_table,
    semi_inverses,
    semi_unit_decomposition,
)
from .specs import (
    ModularSpec,
    PolyQuotSpec,
    ProductSpec,
    QuotientSpec,
    parse_poly_text,
    spec_to_string,
)
from .spectrum import (
    idempotents,
    is_connected_mod_rad,
    jacobson_radical,
    maximal_ideals,
)
from .star import (
    StarMethod,
    crt_unit_lift,
    presented_star_check,
    ring_has_star,
    star_report,
)
from .verify import report_to_dict, run_corpus

EX_OK = 0
EX_FALSE = 2
EX_USAGE = 64
EX_GUARD = 65
EX_DEFECT = 70

_KIND_NAMES = {
    ModularSpec: "modular",
    PolyQuotSpec: "polynomialQuotient",
    ProductSpec: "product",
    QuotientSpec: "quotient",
}


class _Parser(argparse.ArgumentParser):
    """argparse's default exit code for bad usage is 2; use 64 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _split_top(text: str, sep: str = ",") -> list[str]:
    """Split on a separator, ignoring separators inside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecSyntaxError("unbalanced parentheses", i)
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise SpecSyntaxError("unbalanced parentheses", len(text))
    parts.append(text[start:])
    return parts


def _parse_presented(text: str):
    t = text.strip()
    if t == "Z":
        return INTEGERS
    m = re.fullmatch(r"GF\((\d+)\)(\[x\])?", t)
    if m:
        return gf_polynomial_ring(int(m.group(1)))
    raise SpecSyntaxError("expected Z or GF(p)[x]", 0)


def _ideal_from_arg(ring, text: str):
    gens = [ring.parse_element(part) for part in _split_top(text)]
    return ideal_closure(ring, gens)


def _ideal_json(ring, ideal) -> dict:
    return {
        "generators": [ring.render(g) for g in ideal.generators],
        "size": len(ideal),
    }


# ---------------------------------------------------------------------------
# handlers: each returns (spec string or None, result dict, exit code)


def _cmd_ring_info(args):
    ring = build_ring(args.spec)
    rad = jacobson_radical(ring)
    idem = idempotents(ring)
    result = {
        "kind": _KIND_NAMES[type(ring.spec)],
        "carrier": ring.carrier_size,
        "zero": ring.render(ring.zero),
        "one": ring.render(ring.one),
        "unitCount": len(ring.units()),
        "radSize": len(rad),
        "idempotentCount": len(idem),
        "maximalIdeals": len(maximal_ideals(ring).ideals),
        "connectedModRadical": is_connected_mod_rad(ring),
        "isSemifield": is_semifield(ring),
    }
    if ring.carrier_size <= 64:
        result["units"] = [ring.render(u) for u in sorted(ring.units())]
        result["rad"] = [ring.render(r) for r in sorted(rad.elements)]
        result["idempotents"] = [ring.render(e) for e in sorted(idem)]
    return spec_to_string(ring.spec), result, EX_OK


def _cmd_ring_ideals(args):
    ring = build_ring(args.spec)
    ideals = enumerate_ideals(ring)
    maximal = {m.elements for m in maximal_ideals(ring).ideals}
    items = [
        {
            **_ideal_json(ring, ideal),
            "isProper": ideal.is_proper(),
            "isMaximal": ideal.elements in maximal,
        }
        for ideal in ideals
    ]
    return spec_to_string(ring.spec), {"count": len(items), "ideals": items}, EX_OK


def _cmd_rho_table(args):
    ring = build_ring(args.spec)
    table = rho_table(ring)
    counts = {str(v.json()): 0 for v in Rho}
    for value in table:
        counts[str(value.json())] += 1
    result = {
        "carrier": ring.carrier_size,
        "counts": counts,
        "table": [{"element": ring.render(r), "rho": v.json()}
                  for r, v in zip(ring.elements(), table)],
    }
    return spec_to_string(ring.spec), result, EX_OK


def _cmd_decompose(args):
    ring = build_ring(args.spec)
    r = ring.parse_element(args.element)
    rad = jacobson_radical(ring)
    if r in rad:
        result = {"element": ring.render(r), "rho": 0,
                  "u": None, "e": None, "t": None}
        return spec_to_string(ring.spec), result, EX_OK
    dec = semi_unit_decomposition(ring, r)
    inverses = semi_inverses(ring, r)
    result = {
        "element": ring.render(r),
        "rho": 1,
        "u": ring.render(dec.u),
        "e": ring.render(dec.e),
        "t": ring.render(dec.t),
        "semiInverseCount": len(inverses),
        "minimalSemiInverse": ring.render(min(inverses)),
        "certificates": list(dec.certificates),
    }
    return spec_to_string(ring.spec), result, EX_OK


def _cmd_star_check(args):
    ring = build_ring(args.spec)
    ideal = _ideal_from_arg(ring, args.ideal)
    if not ideal.is_proper():
        raise ValueError("the generators span the whole ring; "
                         "star checks need a proper ideal")
    report = star_report(ring, ideal)
    quotient, hom = quotient_ring(ring, ideal)
    witnesses = []
    for check in report.checks:
        if check.witness is None:
            continue
        shown = (quotient.render(check.witness)
                 if check.method is StarMethod.DIRECT
                 else ring.render(check.witness))
        witnesses.append({"method": check.method.value, "witness": shown})
    result = {
        "ring": spec_to_string(ring.spec),
        "ideal": _ideal_json(ring, ideal),
        "holds": report.holds,
        "methods": {c.method.value: c.holds for c in report.checks},
        "witnesses": witnesses,
    }
    if report.holds:
        units = sorted(quotient.units())[:16]
        result["lifts"] = [
            {"unit": quotient.render(v),
             "lift": ring.render(crt_unit_lift(ring, ideal, v))}
            for v in units
        ]
    code = EX_FALSE if args.fail_on_false and not report.holds else EX_OK
    return spec_to_string(ring.spec), result, code


def _cmd_star_ring(args):
    ring = build_ring(args.spec)
    report = ring_has_star(ring)
    items = [
        {**_ideal_json(ring, ideal), "holds": check.holds}
        for ideal, check in report.entries
    ]
    result = {
        "holds": report.holds,
        "properIdeals": len(items),
        "ideals": items,
    }
    code = EX_FALSE if args.fail_on_false and not report.holds else EX_OK
    return spec_to_string(ring.spec), result, code


def _cmd_star_presented(args):
    presented = _parse_presented(args.presented)
    if presented.kind == "integers":
        try:
            modulus = int(args.modulus)
        except ValueError:
            raise SpecSyntaxError("integer modulus expected", 0) from None
        shown = "Z"
    else:
        modulus = parse_poly_text(args.modulus, presented.p)
        shown = f"GF({presented.p})[x]"
    check = presented_star_check(presented, modulus)
    result = {
        "presented": shown,
        "modulus": presented.render(modulus),
        "hasStar": check.has_star,
        "quotient": spec_to_string(check.quotient.spec),
        "witness": None if check.has_star else check.quotient.render(check.witness),
    }
    code = EX_FALSE if args.fail_on_false and not check.has_star else EX_OK
    return None, result, code


def _cmd_gl_lift(args):
    ring = build_ring(args.spec)
    ideal = _ideal_from_arg(ring, args.ideal)
    if not ideal.is_proper():
        raise ValueError("the generators span the whole ring")
    quotient, hom = quotient_ring(ring, ideal)
    rows = [[hom(ring.parse_element(entry)) for entry in _split_top(row)]
            for row in args.matrix.split(";")]
    matrix = Matrix(quotient, rows)
    lifted = gl_lift(hom, matrix)
    result = {
        "ideal": _ideal_json(ring, ideal),
        "quotient": spec_to_string(quotient.spec),
        "targetMatrix": matrix.render(),
        "lift": lifted.render(),
        "liftDeterminant": ring.render(det(lifted)),
        "verified": True,
    }
    return spec_to_string(ring.spec), result, EX_OK


def _cmd_corpus_run(args):
    report = run_corpus(
        max_carrier=args.max_carrier,
        seed=args.seed,
        gl_samples=args.gl_samples,
        progress=lambda r: print(r.line(), file=sys.stderr, flush=True),
    )
    if report.defects:
        code = EX_DEFECT
    elif args.fail_on_false and not report.passed:
        code = EX_FALSE
    else:
        code = EX_OK
    return None, report_to_dict(report), code


def _build_parser() -> _Parser:
    parser = _Parser(prog="unitlift",
                     description="Exact verification of unit lifting, "
                                 "semi-inverses, and semi-unit structure on "
                                 "finite commutative rings.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    ring = top.add_parser("ring", help="inspect a ring")
    ring_sub = ring.add_subparsers(dest="subcommand", required=True)
    info = ring_sub.add_parser("info", help="carrier, units, radical, structure")
    info.add_argument("spec")
    info.set_defaults(handler=_cmd_ring_info, command_name="ring info")
    ideals = ring_sub.add_parser("ideals", help="enumerate all ideals")
    ideals.add_argument("spec")
    ideals.set_defaults(handler=_cmd_ring_ideals, command_name="ring ideals")

    rho_p = top.add_parser("rho", help="the rho invariant")
    rho_sub = rho_p.add_subparsers(dest="subcommand", required=True)
    table = rho_sub.add_parser("table", help="rho of every element")
    table.add_argument("spec")
    table.set_defaults(handler=_cmd_rho_table, command_name="rho table")

    dec = top.add_parser("decompose",
                         help="write an element as unit*idempotent + radical")
    dec.add_argument("spec")
    dec.add_argument("element")
    dec.set_defaults(handler=_cmd_decompose, command_name="decompose")

    star = top.add_parser("star", help="unit lifting checks")
    star_sub = star.add_subparsers(dest="subcommand", required=True)
    check = star_sub.add_parser("check", help="one quotient, all four methods")
    check.add_argument("spec")
    check.add_argument("--ideal", required=True,
                       help="comma-separated ideal generators")
    check.add_argument("--fail-on-false", action="store_true")
    check.set_defaults(handler=_cmd_star_check, command_name="star check")
    sring = star_sub.add_parser("ring", help="every proper quotient of a ring")
    sring.add_argument("spec")
    sring.add_argument("--fail-on-false", action="store_true")
    sring.set_defaults(handler=_cmd_star_ring, command_name="star ring")
    spres = star_sub.add_parser("presented",
                                help="unit image of Z or GF(p)[x] in a quotient")
    spres.add_argument("presented", help="Z or GF(p)[x]")
    spres.add_argument("modulus", help="an integer, or a polynomial over GF(p)")
    spres.add_argument("--fail-on-false", action="store_true")
    spres.set_defaults(handler=_cmd_star_presented, command_name="star presented")

    gl = top.add_parser("gl", help="matrix groups")
    gl_sub = gl.add_subparsers(dest="subcommand", required=True)
    lift = gl_sub.add_parser("lift",
                             help="lift an invertible matrix along a radical "
                                  "quotient")
    lift.add_argument("spec", help="the source ring")
    lift.add_argument("ideal",
                      help="kernel generators, comma separated (must sit "
                           "inside the radical)")
    lift.add_argument("--matrix", required=True,
                      help="rows separated by ';', entries by ',', written "
                           "as source-ring elements")
    lift.set_defaults(handler=_cmd_gl_lift, command_name="gl lift")

    corpus = top.add_parser("corpus", help="the verification corpus")
    corpus_sub = corpus.add_subparsers(dest="subcommand", required=True)
    run = corpus_sub.add_parser("run", help="run every criterion")
    run.add_argument("--max-carrier", type=int, default=None,
                     help="restrict the corpus to rings of at most this size")
    run.add_argument("--seed", type=int, default=0,
                     help="seed for the sampled checks (corpus membership and "
                          "exhaustive checks do not depend on it)")
    run.add_argument("--gl-samples", type=int, default=1000,
                     help="random matrix lifts per (ring, dimension) pair")
    run.add_argument("--fail-on-false", action="store_true")
    run.set_defaults(handler=_cmd_corpus_run, command_name="corpus run")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        spec_text, result, code = args.handler(args)
    except SpecSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_GUARD
    except InternalDefectError as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return EX_DEFECT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    envelope = {
        "command": args.command_name,
        "spec": spec_text,
        "result": result,
        "version": __version__,
        "elapsedMs": int((time.perf_counter() - start) * 1000),
    }
    print(json.dumps(envelope, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
