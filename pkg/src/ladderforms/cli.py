"""Command line front end.

    ladderforms generate --family cl --n 4 --matrix qplus --format csv
    ladderforms verify --family all --n 3..16
    ladderforms trees --family mobius --n 3..8
    ladderforms kirchhoff --family ladder --n 1..10
    ladderforms identities

Exit status is 0 when every check passes, 1 when any check fails and 2 on a
usage error. The default output format can be set with ``LADDERFORMS_FORMAT``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import closed_form as cf
from .export import dump_json, format_rational, matrix_payload, matrix_to_csv, table_to_csv
from .graphs import Family, FamilySpec, build_graph, graph_to_json, incidence_matrix, laplacian_matrix
from .linalg import matrix_tree_count, pinv_laplacian, resistance_matrix_from_lplus
from .sequences import IdentityId, check_identity
from .verify import verify_range

FORMAT_ENV = "LADDERFORMS_FORMAT"
MATRIX_KINDS = ("qplus", "lplus", "resistance", "incidence", "laplacian", "kirchhoff", "trees", "graph")
ALL_FAMILIES = (Family.LADDER, Family.CIRCULAR_LADDER, Family.MOBIUS)


class UsageError(Exception):
    pass


def parse_n_range(text: str) -> range:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad n range {text!r}; use N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty n range {text!r}")
    return range(lo, hi + 1)


def _families(name: str) -> tuple[Family, ...]:
    if name.strip().lower() == "all":
        return ALL_FAMILIES
    try:
        return (Family.parse(name),)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _specs(families: Sequence[Family], ns: range) -> list[FamilySpec]:
    for fam in families:
        if ns.start < fam.min_n:
            raise UsageError(f"{fam.value} needs n >= {fam.min_n}, got range starting at {ns.start}")
    return [FamilySpec(fam, n) for fam in families for n in ns]


def _build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "csv")
    if default_format not in ("csv", "json"):
        default_format = "csv"
    parser = argparse.ArgumentParser(prog="ladderforms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, family_required=True, n_required=True):
        p.add_argument("--family", required=family_required, default="all",
                       help="ladder, cl, mobius or all")
        p.add_argument("--n", required=n_required, help="N or LO..HI")
        p.add_argument("--format", choices=("csv", "json"), default=default_format)
        p.add_argument("--output", "-o", help="write here instead of standard output")

    gen = sub.add_parser("generate", help="emit one closed-form matrix or scalar")
    common(gen)
    gen.add_argument("--matrix", choices=MATRIX_KINDS, required=True)
    gen.add_argument("--bare", action="store_true", help="CSV entries only, no labels")

    ver = sub.add_parser("verify", help="check closed forms against the oracle")
    common(ver)
    ver.add_argument("--jobs", type=int, default=1, help="worker processes")

    for name in ("trees", "kirchhoff"):
        common(sub.add_parser(name, help=f"tabulate {name} with oracle confirmation"))

    ident = sub.add_parser("identities", help="sweep the sequence identities")
    common(ident, family_required=False, n_required=False)
    return parser


def _generate(args) -> tuple[str, int]:
    families = _families(args.family)
    ns = parse_n_range(args.n)
    if len(families) != 1 or len(ns) != 1:
        raise UsageError("generate needs a single family and a single n")
    spec = _specs(families, ns)[0]
    kind = args.matrix

    if kind in ("kirchhoff", "trees"):
        value = cf.kirchhoff_index(spec) if kind == "kirchhoff" else cf.tree_count(spec)
        if args.format == "json":
            return dump_json({"spec": spec.to_dict(), "kind": kind, "value": format_rational(value)}), 0
        return format_rational(value) + "\n", 0
    if kind == "graph":
        g = build_graph(spec)
        if args.format == "json":
            return dump_json(graph_to_json(g)), 0
        return table_to_csv(["id", "tail", "head"], [(e.id.label, e.tail.label, e.head.label) for e in g.edges]), 0

    if kind == "incidence":
        m = incidence_matrix(build_graph(spec))
    elif kind == "laplacian":
        m = laplacian_matrix(build_graph(spec))
    else:
        m = {"qplus": cf.qplus, "lplus": cf.lplus, "resistance": cf.resistance}[kind](spec).matrix
    if args.format == "json":
        return dump_json(matrix_payload(spec, kind, m)), 0
    return matrix_to_csv(m, labels=not args.bare), 0


def _verify(args) -> tuple[str, int]:
    specs = _specs(_families(args.family), parse_n_range(args.n))
    results = verify_range(specs, jobs=args.jobs)
    failures = [r for r in results if not r.passed]
    for r in failures:
        print(json.dumps(r.to_dict()), file=sys.stderr)
    if args.format == "json":
        text = dump_json({"results": [r.to_dict() for r in results],
                          "passed": not failures, "failures": len(failures)})
    else:
        text = table_to_csv(["family", "n", "check", "status", "detail"],
                            [(r.family, r.n, r.check, "pass" if r.passed else "fail", r.detail) for r in results])
    return text, 1 if failures else 0


def _oracle_tables(args, verb: str) -> tuple[str, int]:
    specs = _specs(_families(args.family), parse_n_range(args.n))
    rows = []
    ok_all = True
    for spec in specs:
        g = build_graph(spec)
        if verb == "trees":
            closed = cf.tree_count(spec)
            oracles = [matrix_tree_count(g)]
        else:
            closed = cf.kirchhoff_index(spec)
            lp = pinv_laplacian(laplacian_matrix(g))
            oracles = [2 * spec.n * lp.trace(), resistance_matrix_from_lplus(lp).grand_sum() / 2]
        ok = all(closed == o for o in oracles)
        ok_all &= ok
        rows.append([spec.family.value, spec.n, format_rational(closed)]
                    + [format_rational(o) for o in oracles] + ["pass" if ok else "fail"])
    header = (["family", "n", "trees", "oracle_matrix_tree", "status"] if verb == "trees"
              else ["family", "n", "kirchhoff", "oracle_trace", "oracle_half_resistance_sum", "status"])
    if args.format == "json":
        return dump_json([dict(zip(header, r)) for r in rows]), 0 if ok_all else 1
    return table_to_csv(header, rows), 0 if ok_all else 1


def identity_cases(identity: IdentityId, ns: range | None) -> list[tuple[int, int | None]]:
    """``(n, k)`` pairs swept for ``identity``; defaults follow the documented sweep sizes."""
    if ns is None:
        ns = range(0, 101) if identity in (IdentityId.CONVOLUTION, IdentityId.SPLIT) else range(0, 201)
    if identity in (IdentityId.CONVOLUTION, IdentityId.SPLIT):
        return [(n, k) for n in ns for k in range(n + 1)]
    if identity is IdentityId.FACTOR_ODD:
        return [(n, None) for n in ns if n % 2 == 1]
    if identity is IdentityId.FACTOR_EVEN:
        return [(n, None) for n in ns if n % 2 == 0 and n >= 2]
    return [(n, None) for n in ns]


def _identities(args) -> tuple[str, int]:
    ns = parse_n_range(args.n) if args.n else None
    if ns is not None and ns.start < 0:
        raise UsageError("identities need n >= 0")
    rows = []
    ok_all = True
    for identity in IdentityId:
        cases = identity_cases(identity, ns)
        failed = [(n, k) for n, k in cases if not check_identity(identity, n, k)]
        ok_all &= not failed
        first = "" if not failed else f"n={failed[0][0]}" + ("" if failed[0][1] is None else f",k={failed[0][1]}")
        rows.append([identity.value, len(cases), len(cases) - len(failed), len(failed), first])
    header = ["identity", "cases", "passed", "failed", "first_failure"]
    if args.format == "json":
        return dump_json([dict(zip(header, r)) for r in rows]), 0 if ok_all else 1
    return table_to_csv(header, rows), 0 if ok_all else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "generate": _generate,
        "verify": _verify,
        "trees": lambda a: _oracle_tables(a, "trees"),
        "kirchhoff": lambda a: _oracle_tables(a, "kirchhoff"),
        "identities": _identities,
    }
    try:
        text, code = handlers[args.verb](args)
    except UsageError as exc:
        print(f"ladderforms {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
