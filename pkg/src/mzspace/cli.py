"""Command-line front end: JSON in, JSON out.

Exit codes: 0 for affirmative verdicts (MS / maximal / agreement),
1 for negative verdicts carrying a witness, 2 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import SCHEMA_VERSION, debondt_sample, ms_census, oracle_compare
from .classify2 import basechange_demo, char_poly_roots, predicted_maximal_families
from .constructions import (
    build_cor26,
    build_example22,
    build_example23_extension,
    build_example24,
    thm21_certify,
)
from .errors import ConfigError, MzSpaceError
from .fields import FieldSpec
from .literals import (
    field_to_json,
    matrix_from_json,
    matrix_to_json,
    scalar_to_json,
    subspace_from_json,
    subspace_to_json,
    verdict_to_json,
)
from .maximality import certify_maximal, maximality_witness
from .mscore import is_maximal_ms, ms_by_idempotent_criterion

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _emit(payload: dict, output: str = None) -> None:
    payload = {"schema": SCHEMA_VERSION, **payload}
    text = json.dumps(payload, indent=2, sort_keys=True)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_json_arg(value: str):
    """Parse an inline JSON string or, with an @ prefix, a JSON file."""
    try:
        if value.startswith("@"):
            with open(value[1:]) as fh:
                return json.load(fh)
        return json.loads(value)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot parse JSON argument: {exc}") from exc


def _field_from_args(args) -> FieldSpec:
    modulus = tuple(args.modulus) if getattr(args, "modulus", None) else None
    return FieldSpec(args.p, getattr(args, "k", 1), modulus)


# ---------------------------------------------------------------------------
# subcommands


def cmd_certify(args) -> int:
    with open(args.subspace) as fh:
        S = subspace_from_json(json.load(fh))
    verdict = ms_by_idempotent_criterion(S, args.budget)
    _emit({"verdict": verdict_to_json(verdict),
           "subspace": subspace_to_json(S)}, args.output)
    return EXIT_OK if verdict.is_ms else EXIT_NEGATIVE


def cmd_construct(args) -> int:
    params = _load_json_arg(args.params)
    field = FieldSpec(int(params["p"]), int(params.get("k", 1)),
                      tuple(params["modulus"]) if params.get("modulus") else None)
    if args.family == "ex22":
        V, g, lam = build_example22(params["ranks"], params["sigmas"], field)
        cert = thm21_certify(V, g, lam)
        _emit({"family": "ex22", "subspace": subspace_to_json(V),
               "certificate": cert.to_json()}, args.output)
        return EXIT_OK
    if args.family == "ex23":
        V, g, lam = build_example22(params["ranks"], params["sigmas"], field)
        u = matrix_from_json(params["u"], field)
        w = matrix_from_json(params["w"], field)
        ext = build_example23_extension(V, g, u, w)
        _emit({"family": "ex23", "subspace": subspace_to_json(ext.subspace),
               "base": subspace_to_json(V),
               "e1_U_e3_vanishes": ext.e1_u_e3_vanishes}, args.output)
        return EXIT_OK
    if args.family == "ex24":
        fam = build_example24(params["n1"], params["n2"], params["n3"],
                              params["s1"], params["s2"], field)
    elif args.family == "cor26":
        fam = build_cor26(params["n"], params["r"],
                          params["s1"], params["s2"], field)
    else:
        raise ConfigError(f"unknown family {args.family!r}")
    cert = thm21_certify(fam.subspace, fam.grouped, fam.lam)
    _emit({"family": args.family, "subspace": subspace_to_json(fam.subspace),
           "certificate": cert.to_json()}, args.output)
    return EXIT_OK


def _family_from_params(params) -> object:
    field = FieldSpec(int(params["p"]), int(params.get("k", 1)),
                      tuple(params["modulus"]) if params.get("modulus") else None)
    if "r" in params:
        return build_cor26(params["n"], params["r"],
                           params["s1"], params["s2"], field)
    return build_example24(params["n1"], params["n2"], params["n3"],
                           params["s1"], params["s2"], field)


def cmd_maximal(args) -> int:
    fam = _family_from_params(_load_json_arg(args.family_params))
    if args.direction:
        w = matrix_from_json(_load_json_arg(args.direction), fam.field)
        bundle = maximality_witness(fam, w)
        _emit({"witness": bundle.to_json(),
               "subspace": subspace_to_json(fam.subspace)}, args.output)
        return EXIT_OK
    cert = certify_maximal(fam)
    _emit({"is_maximal": cert.is_maximal, "mode": cert.mode,
           "directions": len(cert.bundles),
           "witnesses": [b.to_json() for b in cert.bundles],
           "subspace": subspace_to_json(fam.subspace)}, args.output)
    return EXIT_OK if cert.is_maximal else EXIT_NEGATIVE


def cmd_census(args) -> int:
    field = _field_from_args(args)
    report = ms_census(args.n, field, args.budget,
                       compare_classification=args.compare_classification)
    payload = report.to_json()
    payload["details"].pop("maximal_subspaces", None)
    _emit(payload, args.output)
    return EXIT_OK


def cmd_oracle_compare(args) -> int:
    field = _field_from_args(args)
    report = oracle_compare(args.n, field, args.budget)
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.oracle_agreement else EXIT_NEGATIVE


def cmd_classify2(args) -> int:
    field = _field_from_args(args)
    predicted = predicted_maximal_families(field, 2)
    report = ms_census(2, field, args.budget, compare_classification=True)
    payload = report.to_json()
    payload["details"].pop("maximal_subspaces", None)
    payload["predicted"] = [
        {"kind": p.kind, "closure_dependent": p.closure_dependent,
         "subspace": subspace_to_json(p.subspace)}
        for p in predicted
    ]
    _emit(payload, args.output)
    return EXIT_OK


def cmd_demo_basechange(args) -> int:
    field = FieldSpec(args.p) if args.p else FieldSpec(0)
    demo = basechange_demo(field, field.scalar(args.s))
    _emit({
        "base_field": field_to_json(demo.base_field),
        "s": scalar_to_json(demo.s),
        "subspace": subspace_to_json(demo.subspace),
        "base_is_ms": demo.base_is_ms,
        "base_is_maximal": demo.base_is_maximal,
        "extension_field": field_to_json(demo.extension_field),
        "extension_idempotent": matrix_to_json(demo.idempotent),
        "extension_is_ms": False,
    }, args.output)
    return EXIT_OK


def cmd_debondt_sample(args) -> int:
    report = debondt_sample(args.samples, args.seed, FieldSpec(args.p),
                            n=args.n, budget=args.budget)
    report["counterexamples"] = [subspace_to_json(S)
                                 for S in report["counterexamples"]]
    _emit(report, args.output)
    return EXIT_OK if not report["counterexamples"] else EXIT_NEGATIVE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzspace",
        description="Exact construction and certification of Mathieu-Zhao "
                    "subspaces of matrix algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--budget", type=int, default=10_000_000,
                       help="element budget for exhaustive scans")
        p.add_argument("--output", help="write the JSON report here")

    p = sub.add_parser("certify", help="MS verdict for a subspace literal")
    p.add_argument("--subspace", required=True, help="subspace JSON file")
    add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("construct", help="build a certified family member")
    p.add_argument("--family", required=True,
                   choices=["ex22", "ex23", "ex24", "cor26"])
    p.add_argument("--params", required=True,
                   help="JSON parameters (inline or @file)")
    add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("maximal", help="maximality witnesses for a family member")
    p.add_argument("--family-params", required=True, dest="family_params")
    p.add_argument("--direction", help="single direction matrix literal")
    p.add_argument("--exhaustive", action="store_true",
                   help="witness every extension direction (default)")
    add_common(p)
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("census", help="full MS census of M_n(F_q)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--q", dest="p", type=int, required=True,
                   help="prime field order")
    p.add_argument("--compare-classification", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_census, k=1, modulus=None)

    p = sub.add_parser("oracle-compare",
                       help="definition vs idempotent criterion, exhaustively")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--q", dest="p", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_oracle_compare, k=1, modulus=None)

    p = sub.add_parser("classify2", help="predicted families vs census for M_2")
    p.add_argument("--field", dest="p", type=int, required=True,
                   help="prime field order")
    add_common(p)
    p.set_defaults(func=cmd_classify2, k=1, modulus=None)

    p = sub.add_parser("demo-basechange",
                       help="MS that dies under a quadratic base change")
    p.add_argument("--p", type=int, default=5,
                   help="prime base field (0 for the rationals)")
    p.add_argument("--s", type=int, required=True, help="nonsquare parameter")
    add_common(p)
    p.set_defaults(func=cmd_demo_basechange)

    p = sub.add_parser("debondt-sample",
                       help="sampled contrapositive of the low-codimension law")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--n", type=int, default=3)
    add_common(p)
    p.set_defaults(func=cmd_debondt_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except MzSpaceError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
