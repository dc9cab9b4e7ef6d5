"""Command-line front end.

Every report is a sequence of ``key=value`` lines.  Exit status is 0 on
success, 1 when a tested property is false (``covers --expect``, an empty
search, failed verification) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import logging
import operator
import os
import re
import sys

from . import cover, oracle
from .enumeration import rooted_trees, search_genus_order, unrooted_trees
from .invariants import curve_data
from .maps import FORMATS, MapError, format_rotation, parse
from .walk import canonical_form, genus, to_involution, to_tree, to_walk

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2

_OPS = {
    "<=": operator.le,
    ">=": operator.ge,
    "!=": operator.ne,
    "=": operator.eq,
    "<": operator.lt,
    ">": operator.gt,
}
_FILTER_KEYS = ("n", "o", "genus", "d_c", "d_s", "order")
_CLAUSE = re.compile(r"^\s*(\w+)\s*(<=|>=|!=|=|<|>)\s*(-?\d+)\s*$")


class InputError(Exception):
    pass


def parse_filter(expr):
    """``"genus=1,order<=3"`` -> list of (key, op, value)."""
    clauses = []
    for part in expr.split(","):
        m = _CLAUSE.match(part)
        if not m or m.group(1) not in _FILTER_KEYS:
            raise InputError(f"bad filter clause {part!r}; keys are {', '.join(_FILTER_KEYS)}")
        clauses.append((m.group(1), _OPS[m.group(2)], int(m.group(3))))
    return clauses


def _read_input(arg):
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def _load(args):
    text = _read_input(args.input)
    try:
        return parse(text, args.format)
    except MapError as exc:
        raise InputError(str(exc)) from None


def _format_inv(inv, fmt):
    if fmt == "involution":
        return str(inv)
    if genus(inv) != 0:
        raise InputError(f"{fmt} output needs a genus-0 dessin")
    if fmt == "walk":
        return to_walk(inv)
    return format_rotation(to_tree(inv))


def _emit(out, **pairs):
    for k, v in pairs.items():
        if isinstance(v, bool):
            v = str(v).lower()
        out.write(f"{k}={v}\n")


def cmd_invariants(args, out):
    cmap = _load(args)
    if not cmap.is_tree():
        raise InputError("invariants need a plane tree")
    _emit(out, **curve_data(cmap).as_dict())
    return EXIT_OK


def cmd_phi(args, out):
    inv = to_involution(_load(args))
    if args.canonical:
        inv = canonical_form(inv)
    out.write(f"{inv}\n")
    return EXIT_OK


def cmd_covers(args, out):
    cmap = _load(args)
    if args.d <= 0:
        raise InputError("--d must be positive")
    inv = to_involution(cmap)
    report = cover.covers_dessin(inv, args.d)
    is_tree = genus(inv) == 0
    if args.target == "tree":
        result = report.covers and genus(report.quotient) == 0
    elif is_tree:
        check = cover.covers_chain if args.target == "chain" else cover.covers_star
        result = check(inv, args.d)
    else:
        recognize = cover.is_chain if args.target == "chain" else cover.is_star
        result = report.covers and recognize(report.quotient)
    _emit(out, n=inv.n, d=args.d, target=args.target, covers=result)
    if result:
        _emit(out, quotient=report.quotient)
    elif report.reason:
        _emit(out, reason=report.reason)
    if args.expect is not None and result != (args.expect == "yes"):
        return EXIT_FALSE
    return EXIT_OK


def cmd_quotient(args, out):
    inv = to_involution(_load(args))
    if args.d <= 0:
        raise InputError("--d must be positive")
    report = cover.covers_dessin(inv, args.d)
    if not report.covers:
        _emit(out, covers=False, reason=report.reason)
        return EXIT_FALSE
    _emit(out, covers=True, d=args.d)
    text = _format_inv(report.quotient, args.out_format)
    if args.out_format == "rotation":
        out.write(text + "\n")
    else:
        _emit(out, quotient=text)
    return EXIT_OK


def cmd_enumerate(args, out):
    if args.edges < 1:
        raise InputError("--edges must be positive")
    clauses = parse_filter(args.filter) if args.filter else []
    stream = rooted_trees(args.edges) if args.mode == "rooted" else unrooted_trees(args.edges)
    count = 0
    for inv in stream:
        if clauses:
            data = curve_data(to_tree(inv)).as_dict()
            if not all(op(data[key], value) for key, op, value in clauses):
                continue
        count += 1
        if not args.count_only:
            _emit(out, tree=to_walk(inv))
    _emit(out, count=count)
    return EXIT_OK


def cmd_search(args, out):
    if args.genus < 0 or args.order < 1 or args.max_edges < 1:
        raise InputError("need --genus >= 0, --order >= 1, --max-edges >= 1")
    tree = search_genus_order(args.genus, args.order, args.max_edges)
    if tree is None:
        _emit(out, found=False)
        return EXIT_FALSE
    inv = canonical_form(to_involution(tree))
    _emit(out, found=True, tree=to_walk(inv), **curve_data(tree).as_dict())
    return EXIT_OK


def cmd_verify(args, out):
    if args.max_edges < 1:
        raise InputError("--max-edges must be positive")
    per_n = {}
    found = oracle.cross_check_all(args.max_edges, per_n=per_n)
    for n, count in per_n.items():
        _emit(out, **{f"trees_{n}": count})
    for disc in found:
        out.write(f"discrepancy: {disc}\n")
    leafless = oracle.leafless_star_congruences(min(args.max_edges, 5))
    _emit(out, discrepancies=len(found), leafless_star_congruences=len(leafless))
    return EXIT_OK if not found else EXIT_FALSE


def build_parser():
    p = argparse.ArgumentParser(
        prog="treecover",
        description="Coverings of plane trees onto chains and stars.",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True)

    def with_input(sp):
        sp.add_argument("--format", choices=FORMATS, default=None,
                        help="input format (guessed when omitted)")
        sp.add_argument("input", help="literal tree, file path, or '-' for stdin")

    sp = sub.add_parser("invariants", help="n, o, genus, d_c, d_s and divisor order")
    with_input(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("phi", help="print the normalized involution")
    with_input(sp)
    sp.add_argument("--canonical", action="store_true")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("covers", help="test a covering of a d-edge tree, chain or star")
    with_input(sp)
    sp.add_argument("--target", choices=("tree", "chain", "star"), required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--expect", choices=("yes", "no"))
    sp.set_defaults(func=cmd_covers)

    sp = sub.add_parser("quotient", help="print the d-edge quotient")
    with_input(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--out-format", choices=FORMATS, default="involution")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("enumerate", help="list plane trees with N edges")
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--mode", choices=("rooted", "unrooted"), default="unrooted")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--filter", help='e.g. "genus=1,order=3"')
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("search", help="find a tree of given genus and divisor order")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--max-edges", type=int, default=14)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="cross-check all covering methods exhaustively")
    sp.add_argument("--max-edges", type=int, default=10)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())
