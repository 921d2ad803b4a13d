"""Command-line front end.

Exit status: 0 success, 1 bad grid shape, 2 oracle capacity guard hit,
3 a verification came out negative, 64 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import counting, serialize
from .errors import CapacityError, DomainError, InternalConsistencyError
from .facets import enumerate_facets
from .grid import GridShape
from .ideal import generators
from .oracle import enumerate_faces_bruteforce
from .shelling import (
    construct_witness,
    f_from_h,
    h_vector,
    shelling_sequence,
    validate_all_witnesses,
    verify_shelling,
)

EXIT_OK, EXIT_DOMAIN, EXIT_CAPACITY, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 3, 64
DEFAULT_WITNESS_LIMIT = 20000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-m", "--rows", type=int, required=True)
    common.add_argument("-n", "--cols", type=int, required=True)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", type=Path, default=None, help="write here instead of stdout")

    parser = _Parser(prog="jetcomplex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("generators", parents=[common], help="generator families A-E")
    p = sub.add_parser("facets", parents=[common], help="structured facet enumeration")
    p.add_argument("--profile", action="store_true", help="include pivot and path steps")
    for name, text in (("oracle", "brute-force faces and facets"), ("check", "oracle vs structured facets")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--prune", action="store_true", help="skip supersets of non-faces")
    sub.add_parser("count", parents=[common], help="multiplicity and dimension")
    p = sub.add_parser("shelling-verify", parents=[common], help="check the shelling order")
    p.add_argument("--certificates", action="store_true", help="emit one witness per ordered pair")
    p.add_argument(
        "--witness-limit",
        type=int,
        default=DEFAULT_WITNESS_LIMIT,
        help="skip witness construction above this many pairs",
    )
    sub.add_parser("hvector", parents=[common], help="h-vector from the shelling")
    return parser


def _cmd_generators(shape, args):
    return serialize.generators_payload(generators(shape)), True


def _cmd_facets(shape, args):
    items = [serialize.facet_json(f, profile=args.profile) for f in enumerate_facets(shape)]
    return {"count": str(len(items)), "facets": items}, True


def _sorted_sets(sets):
    return sorted(serialize.vertex_list_json(s) for s in sets)


def _facet_sort_key(vs):
    return [(v["layer"], v["row"], v["col"]) for v in vs]


def _cmd_oracle(shape, args):
    census = enumerate_faces_bruteforce(shape, prune=args.prune)
    facets = sorted((serialize.vertex_list_json(f) for f in census.facets), key=_facet_sort_key)
    return {
        "pruned": args.prune,
        "facet_count": str(len(facets)),
        "faces_by_dim": {str(d): str(c) for d, c in sorted(census.faces_by_dim.items())},
        "facets": facets,
    }, True


def _cmd_count(shape, args):
    total, closed = counting.multiplicity_sum(shape), counting.multiplicity_closed(shape)
    return {
        "sum_formula": str(total),
        "closed_form": str(closed),
        "agree": total == closed,
        "krull_dimension": counting.krull_dimension(shape),
        "complex_dimension": counting.complex_dimension(shape),
        "terms": {f"{i},{j}": str(t) for (i, j), t in counting.multiplicity_terms(shape).items()},
    }, total == closed


def _cmd_check(shape, args):
    oracle = enumerate_faces_bruteforce(shape, prune=args.prune).facets
    structured = frozenset(f.vertices for f in enumerate_facets(shape))
    equal = oracle == structured
    return {
        "structured_facets": str(len(structured)),
        "oracle_facets": str(len(oracle)),
        "equal": equal,
        "missing_from_structured": sorted(
            (serialize.vertex_list_json(f) for f in oracle - structured), key=_facet_sort_key
        ),
        "missing_from_oracle": sorted(
            (serialize.vertex_list_json(f) for f in structured - oracle), key=_facet_sort_key
        ),
    }, equal


def _cmd_shelling(shape, args):
    order = shelling_sequence(shape)
    result = verify_shelling(order)
    pairs = len(order) * (len(order) - 1) // 2
    payload = {
        "facets": str(result.facets),
        "pairs_checked": str(result.pairs_checked),
        "shelling_valid": result.ok,
        "failing_pair": list(result.failing_pair) if result.failing_pair else None,
        "witnesses_validated": None,
        "witness_pairs": "0",
        "witness_cases": {},
    }
    ok = result.ok
    if pairs <= args.witness_limit:
        try:
            cases = validate_all_witnesses(order)
        except InternalConsistencyError as exc:
            print(f"witness failure: {exc}", file=sys.stderr)
            payload["witnesses_validated"] = False
            ok = False
        else:
            payload["witnesses_validated"] = True
            payload["witness_pairs"] = str(pairs)
            payload["witness_cases"] = {k: str(v) for k, v in sorted(cases.items())}
    if args.certificates and payload["witnesses_validated"]:
        certs = []
        for i, q in enumerate(order.facets):
            for j, p in enumerate(order.facets[:i]):
                w = construct_witness(p, q, order)
                certs.append({
                    "later": i + 1,
                    "earlier": j + 1,
                    "pivot_vertex": serialize.vertex_json(w.pivot_vertex),
                    "intermediate": order.position_of(w.intermediate) + 1,
                    "case": w.case,
                })
        payload["certificates"] = certs
    return payload, ok


def _cmd_hvector(shape, args):
    order = shelling_sequence(shape)
    h = h_vector(order)
    return {
        "facet_count": str(len(order)),
        "h_vector": [str(v) for v in h],
        "f_vector": [str(v) for v in f_from_h(h, shape.facet_size)],
    }, True


COMMANDS = {
    "generators": _cmd_generators,
    "facets": _cmd_facets,
    "oracle": _cmd_oracle,
    "count": _cmd_count,
    "check": _cmd_check,
    "shelling-verify": _cmd_shelling,
    "hvector": _cmd_hvector,
}


def run_cli(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        shape = GridShape(args.rows, args.cols)
        payload, ok = COMMANDS[args.command](shape, args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    if args.format == "json":
        text = serialize.dumps(serialize.document(args.command, shape, payload))
    else:
        text = serialize.render_text(args.command, payload)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
    return EXIT_OK if ok else EXIT_VERIFY


def main():
    sys.exit(run_cli())
