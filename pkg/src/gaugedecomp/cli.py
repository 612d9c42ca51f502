"""Command-line interface.

Every subcommand computes a JSON payload (printed with ``--json``) whose
``pretty`` field is the human-readable report printed otherwise, so the
two outputs never diverge.  Output is deterministic for fixed inputs and
tables.

Exit codes: 0 success; 1 domain error (unsupported case, missing table
key, violated precondition); 2 parse error (bad JSON, bad flag values).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .abelian import AbelianGroup
from .classify import classify_conditions, principal_bundles
from .decompose import (
    gauge_decomposition,
    gauge_equivalent,
    pointed_gauge_decomposition,
    pointed_gauge_pi,
)
from .manifolds import ConnectedSumSpec, suspension_splitting
from .matrices import (
    IntMatrix,
    MixedMatrix,
    orbit_reduce,
    row_echelon_int,
    row_echelon_mixed,
)
from .residues import Modulus
from .tables import (
    UNKNOWN,
    LieGroup,
    MissingTableError,
    SpaceId,
    Sphere,
    load_tables,
    space_to_dict,
)

TABLES_ENV_VAR = "GAUGEDECOMP_TABLES"


class ParseError(Exception):
    """Malformed user input; maps to exit code 2."""


def parse_group(text: str) -> LieGroup:
    """Parse a Lie group name such as SU2, SU(2), Sp3, Spin7, G2, E8."""
    cleaned = text.strip().replace("(", "").replace(")", "")
    for family in ("Spin", "SU", "Sp"):
        if cleaned.startswith(family):
            tail = cleaned[len(family):]
            if tail.isdigit():
                try:
                    return LieGroup(family, int(tail))
                except ValueError as e:
                    raise ParseError(str(e)) from e
    if cleaned in ("G2", "F4", "E6", "E7", "E8"):
        rank = int(cleaned[1])
        return LieGroup(cleaned, rank)
    raise ParseError(
        f"cannot parse group {text!r}; expected SU<m>, Sp<m>, Spin<m>, "
        f"G2, F4, E6, E7 or E8"
    )


def parse_space(text: str) -> SpaceId:
    if text.startswith("sphere:"):
        tail = text.split(":", 1)[1]
        if not tail.isdigit():
            raise ParseError(f"cannot parse sphere dimension from {text!r}")
        return Sphere(int(tail))
    return parse_group(text)


def parse_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as e:
        raise ParseError(f"{flag} expects comma-separated integers, got {text!r}") from e


def parse_spec(text: str) -> ConnectedSumSpec:
    """Manifold spec from inline JSON or a file path."""
    raw = text.strip()
    if not raw.startswith("{"):
        path = Path(raw)
        if not path.exists():
            raise ParseError(f"spec file not found: {raw}")
        raw = path.read_text()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON spec at line {e.lineno} column {e.colno}: {e.msg}") from e
    try:
        return ConnectedSumSpec.from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid manifold spec: {e}") from e


def parse_matrix(text: str) -> list[list[int]]:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON matrix at position {e.pos}: {e.msg}") from e
    if (
        not isinstance(rows, list)
        or not rows
        or not all(isinstance(r, list) for r in rows)
        or not all(isinstance(v, int) for r in rows for v in r)
    ):
        raise ParseError("matrix must be a JSON array of integer rows")
    return rows


def group_json(g) -> dict | str:
    if g is UNKNOWN:
        return "Unknown"
    return g.to_dict()


def build_table(args):
    paths = []
    env = os.environ.get(TABLES_ENV_VAR)
    if env:
        paths.extend(p for p in env.split(os.pathsep) if p)
    if args.tables:
        for chunk in args.tables:
            paths.extend(p for p in chunk.split(",") if p)
    return load_tables(paths)


def cmd_classify(args) -> dict:
    table = build_table(args)
    group = parse_group(args.group)
    spec = parse_spec(args.spec)
    case = classify_conditions(group, spec, table)
    payload = {"case": case.kind}
    if case.reason:
        payload["reason"] = case.reason
        payload["pretty"] = f"{case.kind}: {case.reason}"
        return payload
    result = principal_bundles(group, spec, table)
    if result.free_rank is not None:
        payload["bundles"] = {"free_rank": result.free_rank}
        payload["note"] = result.note
    else:
        payload["bundles"] = {
            "terms": [
                {"group": group_json(g), "multiplicity": m}
                for g, m in result.formula.terms
            ],
            "residual": result.formula.residual,
        }
    payload["pretty"] = f"{case.kind}: bundles over M <-> {result}"
    return payload


def cmd_decompose(args) -> dict:
    table = build_table(args)
    group = parse_group(args.group)
    spec = parse_spec(args.spec)
    ks = parse_ints(args.k, "--k") if args.k else None
    if args.pointed:
        expr = pointed_gauge_decomposition(group, spec, ks, table)
    else:
        if ks is None:
            raise ParseError("decompose needs --k unless --pointed is given")
        expr = gauge_decomposition(group, spec, ks, table)
    payload = {"expression": expr.to_dict(), "pointed": bool(args.pointed)}
    payload["pretty"] = str(expr)
    return payload


def cmd_equivalent(args) -> dict:
    table = build_table(args)
    group = parse_group(args.group)
    spec = parse_spec(args.spec)
    ks = parse_ints(args.k, "--k")
    ks2 = parse_ints(args.k2, "--k2")
    verdict = gauge_equivalent(group, spec, ks, ks2, table)
    return {
        "verdict": verdict.verdict,
        "reason": verdict.reason,
        "pretty": f"{verdict.verdict}: {verdict.reason}",
    }


def cmd_pi(args) -> dict:
    table = build_table(args)
    group = parse_group(args.group)
    spec = parse_spec(args.spec)
    result = pointed_gauge_pi(group, spec, args.j, table)
    payload = result.to_dict()
    payload["j"] = args.j
    return payload


def cmd_orbit_reduce(args) -> dict:
    if args.m is None or args.m < 0:
        raise ParseError("--m must be a non-negative integer")
    xs = parse_ints(args.x, "--x")
    cert = orbit_reduce(Modulus(args.m), xs)
    canonical = [res.value for res in cert.canonical]
    det = cert.transform.det()
    return {
        "modulus": args.m,
        "canonical": canonical,
        "gcd": cert.divisor,
        "det": det,
        "transform": cert.transform.to_lists(),
        "pretty": (
            f"({', '.join(str(v) for v in xs)}) -> ({', '.join(str(v) for v in canonical)})"
            f" mod {args.m}, gcd {cert.divisor}, det {det}"
        ),
    }


def cmd_echelon(args) -> dict:
    rows = parse_matrix(args.matrix)
    ncols = len(rows[0])
    if args.m is not None:
        moduli = parse_ints(args.m, "--m")
        if len(moduli) != ncols:
            raise ParseError(
                f"--m lists {len(moduli)} moduli but the matrix has {ncols} columns"
            )
        if any(m < 0 for m in moduli):
            raise ParseError("column moduli must be non-negative")
    else:
        moduli = (0,) * ncols
    if all(m == 0 for m in moduli):
        d, b = row_echelon_int(IntMatrix.from_rows(rows))
        reduced = b.to_lists()
    else:
        mixed = MixedMatrix.from_rows([Modulus(m) for m in moduli], rows)
        d, b = row_echelon_mixed(mixed)
        reduced = b.to_lists()
    return {
        "moduli": list(moduli),
        "echelon": reduced,
        "transform": d.to_lists(),
        "det": d.det(),
        "pretty": "\n".join(" ".join(str(v) for v in row) for row in reduced),
    }


def cmd_tables(args) -> dict:
    table = build_table(args)
    if args.lookup:
        head, _, deg = args.lookup.rpartition(",")
        if not head or not deg.lstrip("-").isdigit():
            raise ParseError(
                "--lookup expects SPACE,DEGREE, e.g. sphere:3,6 or SU2,6"
            )
        space = parse_space(head)
        entry = table.entry(space, int(deg))
        if entry is None:
            return {
                "space": space_to_dict(space),
                "degree": int(deg),
                "group": "Unknown",
                "pretty": f"pi_{deg}({space}) = Unknown (not in tables)",
            }
        return {
            "space": space_to_dict(space),
            "degree": int(deg),
            "group": entry.group.to_dict(),
            "citation": entry.citation,
            "pretty": f"pi_{deg}({space}) = {entry.group}  [{entry.citation}]",
        }
    entries = table.entries()
    listing = [
        {
            "space": space_to_dict(e.space),
            "degree": e.degree,
            "group": e.group.to_dict(),
            "citation": e.citation,
        }
        for e in entries
    ]
    pretty = "\n".join(
        f"pi_{e.degree}({e.space}) = {e.group}" for e in entries
    )
    return {"entries": listing, "count": len(listing), "pretty": pretty}


def cmd_splitting(args) -> dict:
    table = build_table(args)
    spec = parse_spec(args.spec)
    splitting = suspension_splitting(spec, table)
    payload = splitting.to_dict()
    payload["pretty"] = f"Sigma M ~ {splitting}"
    return payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaugedecomp",
        description=(
            "Classify principal G-bundles over connected sums of sphere "
            "bundles over spheres and decompose their gauge groups."
        ),
        epilog=(
            f"Table files listed in --tables or in ${TABLES_ENV_VAR} "
            f"(path-separated) are merged over the built-in core; later "
            f"files win."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=False, group=False):
        p.add_argument("--tables", action="append", default=[],
                       help="comma-separated table JSON files (repeatable)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        if group:
            p.add_argument("--group", required=True, help="structure group, e.g. SU2")
        if spec:
            p.add_argument("--spec", required=True,
                           help='manifold JSON, inline or a file: {"n":4,"q":3,"xi":[1,0]}')

    p = sub.add_parser("classify", help="classification case and bundle set")
    common(p, spec=True, group=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="gauge-group homotopy decomposition")
    common(p, spec=True, group=True)
    p.add_argument("--k", help="classifying integers, e.g. 5,7")
    p.add_argument("--pointed", action="store_true", help="pointed gauge group")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("equivalent", help="decide gauge-group equivalence")
    common(p, spec=True, group=True)
    p.add_argument("--k", required=True)
    p.add_argument("--k2", required=True)
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("pi", help="homotopy groups of the pointed gauge group")
    common(p, spec=True, group=True)
    p.add_argument("--j", type=int, required=True, help="homotopy degree")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("orbit-reduce", help="canonical form of a residue vector")
    common(p)
    p.add_argument("--m", type=int, required=True, help="modulus (0 = integers)")
    p.add_argument("--x", required=True, help="vector entries, e.g. 6,4")
    p.set_defaults(func=cmd_orbit_reduce)

    p = sub.add_parser("echelon", help="unimodular row echelon form")
    common(p)
    p.add_argument("matrix", help='row-major JSON, e.g. "[[2,6],[4,0]]"')
    p.add_argument("--m", help="per-column moduli, e.g. 0,12 (default: all Z)")
    p.set_defaults(func=cmd_echelon)

    p = sub.add_parser("tables", help="inspect the homotopy tables")
    common(p)
    p.add_argument("--lookup", help="SPACE,DEGREE, e.g. sphere:3,6 or SU2,6")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("splitting", help="suspension splitting of the manifold")
    common(p, spec=True)
    p.set_defaults(func=cmd_splitting)

    return parser


def emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(payload.get("pretty", json.dumps(payload, sort_keys=True)))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except MissingTableError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 1
    except (ValueError, LookupError) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 1
    emit(payload, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
