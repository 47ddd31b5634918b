"""Batch command-line front end.

Subcommands: ``table``, ``product``, ``verify``, ``witness``, ``catalog``.
Group sources are catalog ids or generator files; output is text or JSON.
Exit codes: 0 success, 1 verification failure, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, verify
from .charops import decompose
from .chartab import dixon_table
from .errors import CharprodError
from .verify import STATEMENTS, monomial_witness_search


def _load_group(source):
    if os.path.exists(source):
        with open(source) as fh:
            return os.path.basename(source), catalog.parse_group(fh.read())
    return source, catalog.builtin(source)


def _emit(payload, text, args, out):
    if args.format == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True))
        out.write("\n")
    else:
        out.write(text)
        if not text.endswith("\n"):
            out.write("\n")


def _cmd_table(args, out):
    _, group = _load_group(args.group)
    table = dixon_table(group)
    _emit(table.to_json(), table.to_text(), args, out)
    return 0


def _cmd_product(args, out):
    gid, group = _load_group(args.group)
    table = dixon_table(group)
    size = len(table.irreducibles)
    if not (0 <= args.chi < size and 0 <= args.psi < size):
        raise CharprodError(f"character indices must lie in [0, {size})")
    product = table.irreducibles[args.chi] * table.irreducibles[args.psi]
    dec = decompose(product, table)
    payload = {"group": gid, "chi": args.chi, "psi": args.psi}
    payload.update(dec.to_json(table))
    lines = [f"chi_{args.chi} (degree {table.degrees[args.chi]}) * "
             f"chi_{args.psi} (degree {table.degrees[args.psi]})"]
    for item in payload["constituents"]:
        lines.append(f"  {item['multiplicity']} * chi_{item['irr_index']} (degree {item['degree']})")
    lines.append(f"eta = {payload['eta']}")
    _emit(payload, "\n".join(lines), args, out)
    return 0


def _cmd_verify(args, out):
    statements = tuple(s.strip() for s in args.statements.split(",") if s.strip())
    if args.catalog:
        groups = catalog.builtin_ids()
    elif args.group:
        groups = [_load_group(args.group)]
    else:
        raise CharprodError("verify needs a group source or --catalog")
    report = verify.run_suite(groups, statements, jobs=args.jobs)
    lines = []
    for group_report in report.reports:
        s = group_report.summary
        lines.append(
            f"{group_report.group_id}: pass {s['pass']}, fail {s['fail']}, "
            f"hypothesis-not-met {s['hypothesis_not_met']}, skipped {s['skipped']}"
        )
        for c in group_report.failures:
            lines.append(f"  FAIL {c.statement} {json.dumps(c.instance, sort_keys=True)} "
                         f"{json.dumps(c.witness, sort_keys=True)}")
    total = report.summary
    lines.append(
        f"total: pass {total['pass']}, fail {total['fail']}, "
        f"hypothesis-not-met {total['hypothesis_not_met']}, skipped {total['skipped']}"
    )
    _emit(report.to_json(), "\n".join(lines), args, out)
    return 0 if report.all_pass else 1


def _cmd_witness(args, out):
    gid, group = _load_group(args.group)
    table = dixon_table(group)
    witness = monomial_witness_search(group, args.chi, table=table)
    payload = {"group": gid}
    payload.update(witness.to_json())
    lines = [
        f"chi_{args.chi} (degree {table.degrees[args.chi]}): "
        f"H of order {witness.subgroup_order} (index {witness.subgroup_index})",
        "H generators: " + " ".join(witness.subgroup_generators),
        "alpha values: " + " ".join(str(v) for v in witness.alpha_values),
        f"(alpha^2)^G = chi_{witness.square_induced_index}",
    ]
    for step in witness.chain:
        lines.append("  descent: " + json.dumps(step, sort_keys=True))
    _emit(payload, "\n".join(lines), args, out)
    return 0


def _cmd_catalog(args, out):
    specs = catalog.group_specs()
    payload = [spec.to_json() for spec in specs]
    lines = [
        f"{spec.id:28s} order {spec.expected_order:4d}  classes {spec.expected_classes:3d}  {spec.description}"
        for spec in specs
    ]
    _emit(payload, "\n".join(lines), args, out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="charprod",
        description="Exact character theory engine for finite permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, group_required=True):
        if group_required:
            p.add_argument("group", help="catalog id or generator file path")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to this path instead of stdout")

    p_table = sub.add_parser("table", help="print the character table")
    add_common(p_table)

    p_product = sub.add_parser("product", help="decompose a product of irreducibles")
    add_common(p_product)
    p_product.add_argument("--chi", type=int, required=True, help="row index of chi")
    p_product.add_argument("--psi", type=int, required=True, help="row index of psi")

    p_verify = sub.add_parser("verify", help="run theorem suites")
    p_verify.add_argument("group", nargs="?", help="catalog id or generator file path")
    p_verify.add_argument("--catalog", action="store_true", help="run over every builtin")
    p_verify.add_argument("--statements", default=",".join(STATEMENTS),
                          help="comma list from: " + ",".join(STATEMENTS))
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel group workers")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--output", help="write to this path instead of stdout")

    p_witness = sub.add_parser("witness", help="monomial witness for one irreducible")
    add_common(p_witness)
    p_witness.add_argument("--chi", type=int, required=True, help="row index of chi")

    p_catalog = sub.add_parser("catalog", help="list builtin groups")
    p_catalog.add_argument("--format", choices=("text", "json"), default="text")
    p_catalog.add_argument("--output", help="write to this path instead of stdout")
    return parser


_COMMANDS = {
    "table": _cmd_table,
    "product": _cmd_product,
    "verify": _cmd_verify,
    "witness": _cmd_witness,
    "catalog": _cmd_catalog,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.output:
            with open(args.output, "w") as out:
                return _COMMANDS[args.command](args, out)
        return _COMMANDS[args.command](args, sys.stdout)
    except CharprodError as exc:
        print(f"charprod: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"charprod: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
