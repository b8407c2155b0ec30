"""Command-line interface.

Subcommands: bound, verify, certify, optimality, search, energy, construct.
Exit codes: 0 on success, 1 on a negative mathematical verdict (not a
design, cone violation, uncertified search, infinite energy), 2 on
usage or format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .certificates import (
    ConeViolationError,
    cardinality_bound,
    certificate_to_json,
    energy_lower_bound,
    energy_upper_bound,
)
from .codes import (
    InfiniteEnergyError,
    UnknownConstructionError,
    construct,
    energy,
    is_kk_design,
    load_code,
    save_code,
)
from .gegenbauer import GegenbauerExpansion, expand
from .polynomials import Polynomial
from .potentials import parse_potential
from .quadrature import optimality_scan, scan_to_csv
from .search import search
from .universal import tightness, universal_bound

__all__ = ["main"]


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _load_expansion(path: str, n: int) -> GegenbauerExpansion:
    data = json.loads(Path(path).read_text())
    if "monomial" in data:
        poly = Polynomial([Fraction(c) for c in data["monomial"]])
        return expand(poly, n)
    if "gegenbauer" in data:
        block = data["gegenbauer"]
        file_n = int(block["n"])
        if file_n != n:
            raise ValueError(f"expansion dimension {file_n} does not match --n {n}")
        return GegenbauerExpansion(n, tuple(Fraction(c) for c in block["coeffs"]))
    raise ValueError(f"polynomial file {path} needs a 'monomial' or 'gegenbauer' entry")


def _cmd_bound(args) -> int:
    result = universal_bound(args.n, args.k)
    verdict = tightness(args.n, args.k)
    if args.json:
        payload = result.to_dict()
        payload["tightness"] = verdict.to_dict()
        print(json.dumps(payload, indent=2))
        return 0
    print(f"universal bound C(n+k-1,k): {result.bound}")
    print(f"DGS reference D(n,2k+1): {result.dgs_reference}")
    ips = ", ".join(_fmt(loc.approx) for loc in result.attaining_inner_products)
    print(f"attaining inner products: {ips}")
    line = f"tightness: {verdict.status} ({verdict.citation_case})"
    if verdict.forbidden_cardinality is not None:
        line += f"; cardinality {verdict.forbidden_cardinality} separately impossible"
    print(line)
    return 0


def _cmd_verify(args) -> int:
    code = load_code(args.code, normalize=args.normalize)
    report = is_kk_design(code, args.k, args.tol)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.passed else 1


def _cmd_certify(args) -> int:
    f = _load_expansion(args.poly, args.n)
    try:
        if args.energy:
            if args.M is None or args.potential is None:
                raise ValueError("--energy requires --M and --potential")
            h = parse_potential(args.potential)
            if args.upper:
                cert = energy_upper_bound(f, args.k, args.M, h)
            else:
                cert = energy_lower_bound(f, args.k, args.M, h)
        else:
            cert = cardinality_bound(f, args.k)
    except ConeViolationError as exc:
        print(json.dumps(exc.membership.to_dict(), indent=2))
        return 1
    print(certificate_to_json(cert))
    return 0


def _cmd_optimality(args) -> int:
    table = optimality_scan(args.n, args.k, args.jmax)
    sys.stdout.write(scan_to_csv(table))
    print(f"# verdict: {table.verdict}")
    return 0


def _cmd_search(args) -> int:
    outcome = search(args.n, args.k, args.degree)
    print(json.dumps(outcome.to_dict(), indent=2))
    return 0 if outcome.certified else 1


def _cmd_energy(args) -> int:
    code = load_code(args.code, normalize=args.normalize)
    h = parse_potential(args.potential)
    try:
        value = energy(code, h)
    except InfiniteEnergyError as exc:
        print(f"energy is infinite: {exc}", file=sys.stderr)
        return 1
    print(_fmt(value))
    return 0


def _cmd_construct(args) -> int:
    code = construct(args.name, args.n)
    save_code(code, args.out)
    print(f"wrote {code.cardinality} points in R^{code.dimension} to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kkdesign", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="universal cardinality bound and tightness lookup")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", help="check a code file for the (k,k)-design property")
    p.add_argument("--code", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--normalize", action="store_true", help="normalize input points to unit length")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("certify", help="check cone membership and emit a bound certificate")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--energy", action="store_true")
    p.add_argument("--M", type=int)
    p.add_argument("--potential")
    p.add_argument("--upper", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("optimality", help="test-function scan for bound improvability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jmax", type=int, default=None)
    p.set_defaults(func=_cmd_optimality)

    p = sub.add_parser("search", help="cutting-plane search for improving polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("energy", help="h-energy of a code file")
    p.add_argument("--code", required=True)
    p.add_argument("--potential", required=True, help="riesz:s | gaussian:sigma | poly:FILE")
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=_cmd_energy)

    p = sub.add_parser("construct", help="write a built-in configuration to a code file")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_construct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnknownConstructionError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
