"""Command-line front end.

Subcommands: construct, verify, certify, search, hyperplanes, points.
Exit codes: 0 success, 1 verification/certification failure, 2 usage or
input error, 3 search node budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .certify import build_certificate, certify_projective_bound
from .families import (
    AFFINE,
    PROJECTIVE,
    FamilyPair,
    construct_extremal_affine,
    construct_lower_bound_affine,
    dump_family,
    load_family,
    verify_cross_intersecting,
)
from .field import Field, is_prime
from .geometry import enumerate_projective_points
from .linalg import Space, enumerate_hyperplanes
from .search import (
    DEFAULT_CANDIDATE_CAP,
    BudgetExceeded,
    candidates_affine,
    candidates_projective,
    max_family,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def parse_prime_power(text: str) -> Field:
    """Accept q as a plain prime power ("9") or explicit "p^k" ("3^2")."""
    if "^" in text:
        base, _, exp = text.partition("^")
        try:
            p, k = int(base), int(exp)
        except ValueError:
            raise ValueError(f"cannot parse field order {text!r}") from None
    else:
        try:
            value = int(text)
        except ValueError:
            raise ValueError(f"cannot parse field order {text!r}") from None
        if value < 2:
            raise ValueError(f"field order must be at least 2, got {value}")
        p = next(d for d in range(2, value + 1) if value % d == 0)
        k = 0
        while value % p == 0:
            value //= p
            k += 1
        if value != 1:
            raise ValueError(f"{text} is not a prime power")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Field(p, k)


def _emit(args, payload: dict, text_lines: list[str]):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _write_family(fam: FamilyPair, out: str | None):
    text = dump_family(fam)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_family(path: str) -> FamilyPair:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_family(fh.read())
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_construct(args) -> int:
    field = parse_prime_power(args.q)
    if args.lower_bound:
        fam = construct_lower_bound_affine(args.n, field)
    else:
        fam = construct_extremal_affine(args.n, field)
    _write_family(fam, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    fam = _read_family(args.file)
    report = verify_cross_intersecting(fam)
    payload = {"ok": report.ok, "m": fam.m, "kind": fam.kind}
    lines = [f"kind: {fam.kind}", f"m: {fam.m}", f"ok: {str(report.ok).lower()}"]
    if report.violation is not None:
        i, j, reason = report.violation
        payload["violation"] = {"i": i, "j": j, "reason": reason}
        lines.append(f"violation: ({i}, {j}) {reason}")
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_certify(args) -> int:
    fam = _read_family(args.file)
    if fam.kind != PROJECTIVE:
        raise ValueError("certify requires a projective family file")
    verify = verify_cross_intersecting(fam)
    if not verify.ok:
        i, j, reason = verify.violation
        print(f"family does not verify: ({i}, {j}) {reason}", file=sys.stderr)
        return EXIT_FAILED
    report = certify_projective_bound(fam)
    payload = asdict(report)
    lines = [
        f"m: {report.m}",
        f"t: {report.t}",
        f"rank: {report.rank}",
        f"independent: {str(report.independent).lower()}",
        f"bound_confirmed: {str(report.bound_confirmed).lower()} (m <= {report.t - 1})",
        f"evaluation_table_ok: {str(report.evaluation_table_ok).lower()}",
    ]
    if report.q2_bound is not None:
        lines.append(f"q2_bound: {report.q2_bound}")
    if args.emit_matrix:
        mat = build_certificate(fam)
        payload["matrix"] = [list(row) for row in mat.rows]
        lines.append("matrix:")
        lines.extend("  " + " ".join(str(c) for c in row) for row in mat.rows)
    _emit(args, payload, lines)
    return EXIT_OK if report.bound_confirmed else EXIT_FAILED


def cmd_search(args) -> int:
    field = parse_prime_power(args.q)
    if args.kind == AFFINE:
        cands = candidates_affine(args.n, field, args.restricted,
                                  max_candidates=args.max_candidates)
    else:
        if args.restricted:
            raise ValueError("--restricted applies to affine searches only")
        cands = candidates_projective(args.n, field,
                                      max_candidates=args.max_candidates)
    report = max_family(cands, limit=args.budget, restricted=args.restricted)
    payload = {
        "max_size": report.max_size,
        "witness": list(report.witness),
        "nodes_explored": report.nodes_explored,
        "restricted": report.restricted,
        "candidates": len(cands),
    }
    lines = [
        f"candidates: {len(cands)}",
        f"max_size: {report.max_size}",
        f"witness: {list(report.witness)}",
        f"nodes_explored: {report.nodes_explored}",
        f"restricted: {str(report.restricted).lower()}",
    ]
    _emit(args, payload, lines)
    if args.out is not None:
        by_id = {c.id: c for c in cands}
        pairs = tuple((by_id[i].A, by_id[i].B) for i in report.witness)
        _write_family(FamilyPair(args.kind, field, args.n, pairs), args.out)
    return EXIT_OK


def cmd_hyperplanes(args) -> int:
    field = parse_prime_power(args.q)
    normals = [h.normal for h in enumerate_hyperplanes(Space(field, args.n))]
    payload = {"n": args.n, "q": field.q, "count": len(normals),
               "normals": [list(v) for v in normals]}
    lines = [f"count: {len(normals)}"]
    lines.extend("(" + ", ".join(str(c) for c in v) + ")" for v in normals)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_points(args) -> int:
    field = parse_prime_power(args.q)
    points = enumerate_projective_points(args.n, field)
    payload = {"n": args.n, "q": field.q, "count": len(points),
               "points": [list(v) for v in points]}
    lines = [f"count: {len(points)}"]
    lines.extend("(" + ", ".join(str(c) for c in v) + ")" for v in points)
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossflats",
        description="Cross-intersecting families of affine flats and "
                    "projective subspaces over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default: text)")

    p = sub.add_parser("construct", help="build the extremal affine family")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("--q", required=True, help="field order, e.g. 4 or 2^2")
    p.add_argument("--lower-bound", action="store_true",
                   help="first half only: t pairs instead of 2t")
    p.add_argument("--out", default=None, help="family file path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the cross-intersecting conditions")
    p.add_argument("file", help="family file")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="rank certificate for a projective family")
    p.add_argument("file", help="family file")
    p.add_argument("--emit-matrix", action="store_true",
                   help="include the certificate matrix in the output")
    add_format(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", help="exhaustive maximum-family search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--kind", choices=(AFFINE, PROJECTIVE), required=True)
    p.add_argument("--restricted", action="store_true",
                   help="affine only: hyperplane-coset candidates")
    p.add_argument("--budget", type=int, default=None, help="node budget")
    p.add_argument("--max-candidates", type=int, default=DEFAULT_CANDIDATE_CAP)
    p.add_argument("--out", default=None, help="write the witness family file here")
    add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("hyperplanes", help="list the canonical hyperplane normals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", required=True)
    add_format(p)
    p.set_defaults(func=cmd_hyperplanes)

    p = sub.add_parser("points", help="list the projective point order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", required=True)
    add_format(p)
    p.set_defaults(func=cmd_points)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported to stderr
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
