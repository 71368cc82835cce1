"""Command-line front end: validate data files, compute rank reports,
wreath ranks, and symmetric-group rank polynomials.

Exit codes: 0 success, 1 domain failure (validation, inconsistency),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import perms, rank, symmetry, wreath
from .errors import (
    DegreeMismatch,
    DualityViolation,
    GcrankError,
    GroupTooLarge,
    InconsistencyError,
    NotAnAutomorphism,
    NotPrime,
    OutOfRange,
    ParseError,
    TooLarge,
)
from .mtc import load_mtc, validate_mtc
from .perms import DEFAULT_GROUP_CAP

_USAGE_ERRORS = (ParseError, OutOfRange, NotPrime, DegreeMismatch, TooLarge)
_DOMAIN_ERRORS = (
    NotAnAutomorphism,
    DualityViolation,
    InconsistencyError,
    GroupTooLarge,
    GcrankError,
)


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2, ensure_ascii=False))


def _load_symmetry(args):
    mtc = load_mtc(args.mtc) if args.mtc else None
    mtc, generators = symmetry.load_symmetry(args.sym, mtc=mtc)
    return symmetry.build_symmetry(mtc, generators, cap=args.cap)


def _print_violations(title: str, report) -> None:
    print(f"{title}: FAIL ({len(report.violations)} violation(s))")
    for v in report.violations:
        print(f"  [{v.rule}] {v.message}")


def _violations_json(report):
    return [
        {"rule": v.rule, "indices": list(v.indices), "message": v.message}
        for v in report.violations
    ]


def cmd_validate(args) -> int:
    mtc = load_mtc(args.mtc)
    report = validate_mtc(mtc)
    ok = report.ok
    doc = {
        "mtc": {"name": mtc.name, "ok": report.ok,
                "violations": _violations_json(report)},
    }
    if not args.json:
        if report.ok:
            print(f"{mtc.name}: ok ({mtc.rank} labels)")
        else:
            _print_violations(mtc.name, report)
    if args.sym:
        _, generators = symmetry.load_symmetry(args.sym, mtc=mtc)
        doc["generators"] = {}
        for name, p in generators.items():
            gen_report = symmetry.validate_automorphism(mtc, p)
            doc["generators"][name] = {
                "ok": gen_report.ok,
                "violations": _violations_json(gen_report),
            }
            if not gen_report.ok:
                ok = False
            if not args.json:
                if gen_report.ok:
                    print(f"generator {name}: ok")
                else:
                    _print_violations(f"generator {name}", gen_report)
        if ok:
            group = perms.generate_group(mtc.rank, generators, cap=args.cap)
            doc["group_order"] = group.order
            if not args.json:
                print(f"symmetry group order: {group.order}")
    if args.json:
        _print_json(doc)
    return 0 if ok else 1


def _render_rank_table(report: rank.RankReport, by_class: bool) -> None:
    s = report.symmetry
    # large groups are unreadable element-by-element
    if by_class or s.group.order > 50:
        rows = [
            (s.label_cycles(s.group.elements[rep]), str(size), str(rk))
            for rep, size, rk in report.per_class
        ]
        _print_table(("representative", "class size", "rank"), rows)
    else:
        sizes = {i: len(c) for c in report.classes.classes for i in c}
        rows = [
            (s.label_cycles(e), str(sizes[i]), str(report.per_element[i]))
            for i, e in enumerate(s.group.elements)
        ]
        _print_table(("element", "class size", "rank"), rows)
    print(f"group order: {s.group.order}")
    print(f"orbit count: {report.orbit_count}")
    print(f"total rank:  {report.total_rank}")


def _print_table(header: tuple[str, ...], rows) -> None:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)))


def cmd_rank(args) -> int:
    s = _load_symmetry(args)
    report = rank.rank_report(s)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        _render_rank_table(report, args.by_class)
    return 0


def cmd_burnside(args) -> int:
    s = _load_symmetry(args)
    report = rank.rank_report(s)
    labels = s.mtc.labels
    orbit_strs = [
        "{" + ", ".join(labels[i] for i in sorted(orbit)) + "}"
        for orbit in report.orbits
    ]
    if args.json:
        _print_json({
            "orbits": [[labels[i] for i in sorted(o)] for o in report.orbits],
            "orbit_count": report.orbit_count,
            "group_order": s.group.order,
            "fixed_point_sum": str(report.total_rank),
            "burnside_total": str(report.burnside_total),
        })
    else:
        for line in orbit_strs:
            print(line)
        print(f"orbit count: {report.orbit_count}")
        print(f"sum of fixed points:   {report.total_rank}")
        print(f"|G| x orbit count:     {report.burnside_total}")
    return 0


def _wreath_json(total: int, terms, rk: int, n: int, group_spec: str, order: int):
    return {
        "rk": str(rk),
        "n": n,
        "group": group_spec,
        "group_order": order,
        "total_rank": str(total),
        "per_class": [
            {
                "cycle_type": list(t.cycle_type.a),
                "representative": (
                    perms.format_cycles(t.representative)
                    if t.representative is not None
                    else str(t.cycle_type)
                ),
                "class_size": str(t.class_size),
                "num_cycles": t.num_cycles,
                "contribution": str(t.contribution),
            }
            for t in terms
        ],
    }


def cmd_wreath(args) -> int:
    if (args.rk is None) == (args.mtc is None):
        raise ParseError("exactly one of --rk and --mtc is required")
    if args.rk is not None:
        rk = args.rk
        if rk < 0:
            raise ParseError("--rk must be non-negative")
    else:
        rk = load_mtc(args.mtc).rank
    n = args.n
    spec = args.group.strip().lower()

    if args.closed_form:
        if spec != f"z{n}":
            raise ParseError("--closed-form applies only to --group z<n>")
        total = wreath.rank_wreath_cyclic_prime(rk, n)
        if args.json:
            _print_json({
                "rk": str(rk), "n": n, "group": spec,
                "closed_form": True, "total_rank": str(total),
            })
        else:
            print(f"rank of C wr Z_{n} at rk(C) = {rk}: {total}")
        return 0

    if spec == f"s{n}":
        total, terms = wreath.rank_wreath_symmetric(rk, n)
        order = sum(t.class_size for t in terms)
    else:
        group = wreath.preset_group(args.group, n, cap=args.cap)
        total, terms = wreath.rank_wreath_subgroup(rk, group)
        order = group.order
    if args.json:
        _print_json(_wreath_json(total, terms, rk, n, spec, order))
    else:
        rows = [
            (
                str(t.cycle_type),
                perms.format_cycles(t.representative)
                if t.representative is not None else "-",
                str(t.class_size),
                str(t.num_cycles),
                str(t.contribution),
            )
            for t in terms
        ]
        _print_table(
            ("cycle type", "representative", "class size", "cycles", "contribution"),
            rows,
        )
        print(f"group order: {order}")
        print(f"total rank:  {total}")
    return 0


def cmd_poly(args) -> int:
    poly = wreath.rank_polynomial_symmetric(args.n)
    if args.json:
        _print_json({
            "n": args.n,
            "text": str(poly),
            "coefficients": [
                [k, str(poly.coefficients[k])]
                for k in range(poly.degree, 0, -1)
                if poly.coefficients[k]
            ],
        })
    else:
        print(poly)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcrank",
        description="Ranks of G-crossed braided extensions of modular tensor "
                    "categories from fusion data and label permutations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, mtc=False, sym=False):
        if mtc:
            p.add_argument("--mtc", help="path to an MTC data file")
        if sym:
            p.add_argument("--sym", help="path to a symmetry file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP,
                       help="group-size cap (default %(default)s)")

    p = sub.add_parser("validate", help="validate an MTC file and optional symmetry")
    p.add_argument("--mtc", required=True)
    p.add_argument("--sym")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("rank", help="per-element and total extension ranks")
    common(p, mtc=True, sym=True)
    p.add_argument("--by-class", action="store_true",
                   help="one row per conjugacy class")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("burnside", help="orbits and the two total-rank expressions")
    common(p, mtc=True, sym=True)
    p.set_defaults(func=cmd_burnside)

    p = sub.add_parser("wreath", help="rank of the permutation extension C wr G")
    common(p, mtc=True)
    p.add_argument("--rk", type=int, help="base rank rk(C)")
    p.add_argument("--n", type=int, required=True, help="degree of the action")
    p.add_argument("--group", required=True,
                   help='"s<n>", "a<n>", "z<n>", or cycle-notation generators')
    p.add_argument("--closed-form", action="store_true",
                   help="use the prime-cyclic closed form (group must be z<n>)")
    p.set_defaults(func=cmd_wreath)

    p = sub.add_parser("poly", help="rank polynomial of the symmetric group S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
