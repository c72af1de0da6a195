"""Command-line interface.

Examples::

    flagrep verify-kostant --type A --rank 2 --format json
    flagrep decompose-tensor --type D --rank 4 --lambda 1,1,1,1 --mu 1,1,1,1
    flagrep bwb --type A --rank 1 --weight -2

Exit codes: 0 success, 2 bad arguments or type, 3 feasibility limit
(use ``--force``), 4 integer overflow.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .bwb import bwb_line_bundle
from .flag_cohomology import (
    FeasibilityError,
    check_feasible,
    hh_component_report,
    polyvector_euler_decomposition,
    verify_kostant,
    wahl_h0,
)
from .rep_theory import Decomposition, decompose, tensor_character, weyl_dimension
from .root_system import (
    RootSystem,
    RootSystemError,
    build_root_system,
    enumerate_dominant_below,
    weight_sort_key,
)

COMMANDS = (
    "decompose-tensor",
    "verify-kostant",
    "euler-char",
    "bwb",
    "wahl",
    "report-hh",
    "dominant-below",
)
_WEIGHT_FLAGS = ("--lambda", "--mu", "--weight")
_INT_ARRAY = re.compile(r"\[\s+(-?\d+(?:,\s+-?\d+)*)\s+\]")


def _collapse(match) -> str:
    # keep weight vectors on one line in indented JSON
    return "[" + ", ".join(x.strip() for x in match.group(1).split(",")) + "]"


class UsageError(Exception):
    pass


def parse_weight(text: str, rank: int) -> tuple:
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}; expected comma-separated integers")
    if len(coords) != rank:
        raise UsageError(f"weight {text!r} has {len(coords)} coordinates, rank is {rank}")
    return coords


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagrep",
        description="Characters, tensor products and polyvector Euler characteristics on G/B.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, dest="type_label", help="Cartan type A-G")
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--output", "-o", help="write here instead of standard output")
        p.add_argument("--force", action="store_true", help="run types beyond the feasibility limit")
        return p

    p = add("decompose-tensor", "decompose V(lambda) (x) V(mu)")
    p.add_argument("--lambda", required=True, dest="lam")
    p.add_argument("--mu", required=True)
    add("verify-kostant", "compare the support of V(rho)(x)V(rho) with {lambda <= 2 rho}")
    p = add("euler-char", "decompose the Euler characteristic of polyvector fields")
    p.add_argument("--degree", type=int, default=None, help="single exterior degree p")
    p = add("bwb", "cohomology of the line bundle L(weight)")
    p.add_argument("--weight", required=True)
    add("wahl", "H^0 of the (n-1)-st polyvector fields")
    add("report-hh", "lower bounds for components of HH^*(G/B)")
    p = add("dominant-below", "dominant weights below a dominant weight")
    p.add_argument("--weight", required=True)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # "--weight -1,2" would otherwise be read as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _WEIGHT_FLAGS:
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def _wstr(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _ordered(rs: RootSystem, weights) -> list:
    return sorted(weights, key=weight_sort_key(rs, tuple(2 * x for x in rs.rho)))


def _decomposition_result(rs: RootSystem, dec: Decomposition) -> dict:
    comps = [
        {"weight": list(w), "multiplicity": m, "dimension": str(weyl_dimension(rs, w))}
        for w, m in dec.items()
    ]
    return {
        "components": comps,
        "virtual": dec.virtual,
        "total_multiplicity": dec.total_multiplicity,
        "total_dimension": str(dec.dimension(rs)),
    }


def compute(args, rs: RootSystem) -> dict:
    """Run one command and return its JSON-ready ``result`` payload."""
    cmd = args.command
    if cmd == "decompose-tensor":
        lam = parse_weight(args.lam, rs.rank)
        mu = parse_weight(args.mu, rs.rank)
        if min(lam + mu) < 0:
            raise UsageError("--lambda and --mu must be dominant")
        dec = decompose(rs, tensor_character(rs, lam, mu), check=False)
        return {"lambda": list(lam), "mu": list(mu), **_decomposition_result(rs, dec)}
    if cmd == "verify-kostant":
        rep = verify_kostant(rs, force=args.force)
        return {
            "conjecture_holds": rep.conjecture_holds,
            "support_tensor": [list(w) for w in _ordered(rs, rep.support_tensor)],
            "support_order": [list(w) for w in _ordered(rs, rep.support_order)],
            "counterexamples": [list(w) for w in _ordered(rs, rep.counterexamples)],
            **_decomposition_result(rs, rep.multiplicities),
        }
    if cmd == "euler-char":
        if args.degree is not None and not 0 <= args.degree <= rs.num_positive_roots:
            raise UsageError(f"--degree must lie in 0..{rs.num_positive_roots}")
        dec = polyvector_euler_decomposition(rs, args.degree, force=args.force)
        return {"degree": args.degree, **_decomposition_result(rs, dec)}
    if cmd == "bwb":
        lam = parse_weight(args.weight, rs.rank)
        res = bwb_line_bundle(rs, lam)
        return {
            "weight": list(lam),
            "vanishes": res.vanishes,
            "degree": res.degree,
            "highest_weight": None if res.vanishes else list(res.highest_weight),
            "description": res.describe(),
        }
    if cmd == "wahl":
        check_feasible(rs, args.force)
        return _decomposition_result(rs, wahl_h0(rs))
    if cmd == "report-hh":
        rep = hh_component_report(rs, force=args.force)
        return {
            "note": rep.note,
            "components": [
                {"weight": list(c.weight), "lower_bound": c.lower_bound, "candidate": c.candidate}
                for c in rep.components
            ],
            "flagged": [list(w) for w in rep.flagged],
            "total_lower_bound": rep.total_lower_bound,
        }
    if cmd == "dominant-below":
        mu = parse_weight(args.weight, rs.rank)
        if min(mu) < 0:
            raise UsageError("--weight must be dominant")
        ws = enumerate_dominant_below(rs, mu)
        return {"weight": list(mu), "count": len(ws), "weights": [list(w) for w in ws]}
    raise UsageError(f"unknown command {cmd!r}")


def _table_rows(command: str, result: dict):
    """(header, rows, footer) for the table and csv renderers."""
    if command == "bwb":
        hw = result["highest_weight"]
        return (
            ["weight", "vanishes", "degree", "highest_weight"],
            [[_wstr(result["weight"]), result["vanishes"], result["degree"], "" if hw is None else _wstr(hw)]],
            [result["description"]],
        )
    if command == "dominant-below":
        return ["weight"], [[_wstr(w)] for w in result["weights"]], [f"count: {result['count']}"]
    if command == "report-hh":
        rows = [[_wstr(c["weight"]), c["lower_bound"], c["candidate"]] for c in result["components"]]
        foot = [result["note"], f"total lower bound: {result['total_lower_bound']}",
                f"flagged: {len(result['flagged'])}"]
        return ["weight", "lower_bound", "candidate"], rows, foot
    rows = [[_wstr(c["weight"]), c["multiplicity"], c["dimension"]] for c in result["components"]]
    foot = [f"total multiplicity: {result['total_multiplicity']}",
            f"total dimension: {result['total_dimension']}"]
    if result["virtual"]:
        foot.append("virtual: yes")
    if command == "verify-kostant":
        foot.append(f"conjecture holds: {result['conjecture_holds']}")
        foot.append(f"support size: {len(result['support_tensor'])} (tensor), "
                    f"{len(result['support_order'])} (dominance order)")
        for w in result["counterexamples"]:
            foot.append(f"counterexample: {_wstr(w)}")
    return ["weight", "multiplicity", "dimension"], rows, foot


def render(fmt: str, rs: RootSystem, command: str, result: dict) -> str:
    if fmt == "json":
        doc = {"type": rs.type_label, "rank": rs.rank, "command": command, "result": result}
        return _INT_ARRAY.sub(_collapse, json.dumps(doc, indent=2)) + "\n"
    header, rows, foot = _table_rows(command, result)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
        writer.writerow(header)
        for row in rows:
            coords = row[0].strip("()").replace(",", " ")
            writer.writerow([coords, *["" if x is None else x for x in row[1:]]])
        return buf.getvalue()
    cells = [header] + [["" if x is None else str(x) for x in r] for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    lines = [f"# {rs.name} {command}"]
    for r in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    lines += [f"# {f}" for f in foot]
    return "\n".join(lines) + "\n"


def run_cli(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rs = build_root_system(args.type_label, args.rank)
        result = compute(args, rs)
        text = render(args.format, rs, args.command, result)
    except (UsageError, RootSystemError) as exc:
        print(f"flagrep: error: {exc}", file=stderr)
        return 2
    except FeasibilityError as exc:
        print(f"flagrep: error: {exc}", file=stderr)
        return 3
    except OverflowError as exc:
        print(f"flagrep: error: integer overflow: {exc}", file=stderr)
        return 4
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run_cli())
