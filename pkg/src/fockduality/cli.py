"""Command line interface.

Subcommands:

* ``verify``    -- check one duality decomposition mechanically
* ``enumerate`` -- list the frame pairs and dimension bookkeeping only
* ``pin-check`` -- reflection and Pin generator identities
* ``ph-check``  -- particle-hole conjugation relations for one shell
* ``suite``     -- a fixed battery over small parameters

Exit codes: 0 all checks pass, 1 at least one check fails, 2 invalid
parameters, 3 resource limit exceeded.  JSON output is byte-deterministic:
timings are reported as 0.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, liealg, oracle, pinops, shell, young
from .params import (DomainError, ModelParams, ResourceLimitError,
                     ORTHOGONAL)
from .sparse import SparseOperator


def _report_json(command, payload):
    return {"version": __version__, "command": command, "elapsedMs": 0,
            **payload}


def _emit(args, report, checks):
    ok = all(checks.values())
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        lines = []
        for name, value in checks.items():
            lines.append(f"{'PASS' if value else 'FAIL'} {name}")
        lines.append(f"{'all checks passed' if ok else 'CHECKS FAILED'}")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def _duality_payload(report):
    return {
        "duality": report.duality,
        "params": {"d": report.d, "k": report.k,
                   "family": oracle.family_of(report.duality)},
        "pairs": [p.to_json() for p in report.pairs],
        "dimensionSum": report.dimension_sum,
        "checks": report.checks,
        "allPass": report.all_pass,
    }


def cmd_verify(args):
    report = oracle.verify_duality(args.duality, args.d, args.k,
                                   with_closure=args.closure)
    return _emit(args, _report_json("verify", _duality_payload(report)),
                 report.checks)


def cmd_enumerate(args):
    pairs = young.enumerate_pairs(args.duality, args.d, args.k)
    total = young.dimension_sum(pairs)
    checks = {"dimensionSum": total == 2 ** (args.d * args.k)}
    payload = {
        "duality": args.duality,
        "params": {"d": args.d, "k": args.k,
                   "family": oracle.family_of(args.duality)},
        "pairs": [p.to_json() for p in pairs],
        "dimensionSum": total,
        "checks": checks,
        "allPass": all(checks.values()),
    }
    return _emit(args, _report_json("enumerate", payload), checks)


def pin_checks(d, k):
    """Identity battery for the reflection lift and the Pin generator."""
    params = ModelParams(d, k, ORTHOGONAL)
    ident = SparseOperator.identity(params.dim)
    r = pinops.reflection_lift(params)
    sigma = pinops.sigma_form_basis(params)
    checks = {
        "reflectionSquare": (r @ r) == ident,
        "sigmaSquare": (sigma @ sigma) == ident.scale((-1) ** d),
        "sigmaPushthroughAgrees":
            sigma == pinops.sigma_pushthrough(params),
        "sigmaSignFormula": oracle.check_sigma_sign_formula(params),
        "sigmaCommutesWithAlgebra": all(
            sigma.commutator(x).is_zero()
            for x in liealg.dside_basis_images(params)),
        "rhoOfMinusOne":
            pinops.rho_of_minus_one(params) == ident.scale((-1) ** d),
        "sigmaCosetSigns": pinops.sigma_coset_checks(params),
    }
    checks.update(pinops.sigma_vacuum_checks(params))
    return checks


def cmd_pin_check(args):
    checks = pin_checks(args.d, args.k)
    payload = {
        "params": {"d": args.d, "k": args.k, "family": ORTHOGONAL},
        "checks": checks,
        "allPass": all(checks.values()),
    }
    return _emit(args, _report_json("pin-check", payload), checks)


def cmd_ph_check(args):
    checks = shell.conjugation_checks(args.l, args.k)
    payload = {
        "params": {"l": args.l, "k": args.k, "d": 2 * args.l + 1,
                   "family": ORTHOGONAL},
        "checks": checks,
        "allPass": all(checks.values()),
    }
    return _emit(args, _report_json("ph-check", payload), checks)


SUITE_VERIFY = (
    (young.SP_SP, 2, 2), (young.SP_SP, 4, 2), (young.SP_SP, 2, 3),
    (young.O_O, 2, 2), (young.O_O, 3, 2), (young.O_O, 4, 2),
    (young.GROUP_O_O, 2, 2), (young.GROUP_O_O, 3, 2), (young.GROUP_O_O, 4, 2),
    (young.O_PIN, 2, 2), (young.O_PIN, 3, 2), (young.O_PIN, 4, 2),
)

SUITE_PIN = ((2, 2), (3, 2), (4, 2))


def cmd_suite(args):
    checks = {}
    sections = []
    for duality, d, k in SUITE_VERIFY:
        report = oracle.verify_duality(duality, d, k)
        sections.append(_duality_payload(report))
        for name, value in report.checks.items():
            checks[f"{duality}:d{d}k{k}:{name}"] = value
    for d, k in SUITE_PIN:
        pc = pin_checks(d, k)
        sections.append({"params": {"d": d, "k": k}, "checks": pc})
        for name, value in pc.items():
            checks[f"pin:d{d}k{k}:{name}"] = value
    sc = shell.conjugation_checks(1, 2)
    sections.append({"params": {"l": 1, "k": 2}, "checks": sc})
    for name, value in sc.items():
        checks[f"ph:l1k2:{name}"] = value
    payload = {"sections": sections, "checks": checks,
               "allPass": all(checks.values())}
    return _emit(args, _report_json("suite", payload), checks)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fockduality",
        description="Exact verification of fermion Fock-space dualities.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, duality=False, dk=False, shell_args=False):
        if duality:
            p.add_argument("--duality", required=True,
                           choices=young.DUALITIES)
        if dk:
            p.add_argument("--d", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        if shell_args:
            p.add_argument("--l", type=int, required=True)
            p.add_argument("--k", type=int, default=2, choices=(2, 4))
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="verify one duality decomposition")
    common(p, duality=True, dk=True)
    p.add_argument("--closure", action="store_true",
                   help="also check both maps are Lie homomorphisms")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list frame pairs and dimensions")
    common(p, duality=True, dk=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pin-check", help="reflection and Pin identities")
    common(p, dk=True)
    p.set_defaults(func=cmd_pin_check)

    p = sub.add_parser("ph-check", help="particle-hole conjugation relations")
    common(p, shell_args=True)
    p.set_defaults(func=cmd_ph_check)

    p = sub.add_parser("suite", help="fixed battery over small parameters")
    common(p)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
