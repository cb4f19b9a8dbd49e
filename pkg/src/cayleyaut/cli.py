"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import logging
import math
import sys
from pathlib import Path

from . import autsearch
from .cayley import BUILD_BOUND, FAMILIES, build_cayley, family_generators
from .errors import CapacityError
from .groups import recognize_dihedral
from .perm import CycleParseError, format_cycles
from .tgraph import (
    Precheck,
    TranspositionSet,
    build_transposition_graph,
    generates_symmetric_group,
    girth,
    normality_precheck,
    small_graph_automorphisms,
)
from .verify import MBS_BOUND, verify_direct_product

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
_JSON_SAFE = 2**53


class UsageError(Exception):
    pass


def _json_int(x: int):
    return str(x) if abs(x) > _JSON_SAFE else x


def _generator_set(args) -> tuple[TranspositionSet, str | None]:
    if args.family and args.generators:
        raise UsageError("--family and --generators are mutually exclusive")
    if not args.family and not args.generators:
        raise UsageError("one of --family or --generators is required")
    if args.n is None:
        raise UsageError("--n is required")
    if args.family:
        try:
            return family_generators(args.family, args.n), args.family
        except ValueError as e:
            raise UsageError(str(e)) from e
    try:
        return TranspositionSet.parse(args.generators, args.n), None
    except CycleParseError as e:
        pointer = " " * e.position + "^"
        raise UsageError(f"cannot parse generators: {e}\n  {args.generators}\n  {pointer}") from e
    except ValueError as e:
        raise UsageError(f"bad generator set: {e}") from e


def _cayley(args, default_bound: int):
    S, family = _generator_set(args)
    bound = args.max_n if args.max_n is not None else default_bound
    if args.n < 3:
        raise UsageError(f"Cayley graphs are built for n >= 3, got {args.n}")
    return build_cayley(args.n, S, bound=bound), family


def cmd_build(args) -> tuple[dict, int]:
    X, family = _cayley(args, BUILD_BOUND)
    T = build_transposition_graph(X.S)
    out = {
        "n": X.n,
        "family": family,
        "generators": X.S.to_strings(),
        "vertices": X.vertex_count,
        "edges": X.edge_count,
        "degree": X.degree,
        "connected": generates_symmetric_group(T),
    }
    if args.dot:
        Path(args.dot).write_text(X.to_dot())
    return out, EXIT_OK


def cmd_tgraph(args) -> tuple[dict, int]:
    S, family = _generator_set(args)
    T = build_transposition_graph(S)
    connected = generates_symmetric_group(T)
    aut_t = small_graph_automorphisms(T)
    g = girth(T)
    out = {
        "n": S.n,
        "family": family,
        "generators": S.to_strings(),
        "connected": connected,
        "girth": "inf" if math.isinf(g) else int(g),
        "t_aut_order": aut_t.order,
        "t_aut_generators": [format_cycles(p) for p in aut_t.generators],
        "dihedral_m": recognize_dihedral(aut_t),
        "precheck": normality_precheck(T).value if connected else None,
    }
    if args.dot:
        Path(args.dot).write_text(T.to_dot())
    return out, EXIT_OK


def cmd_aut(args) -> tuple[dict, int]:
    X, family = _cayley(args, MBS_BOUND)
    A = autsearch.automorphism_group(X)
    out = {
        "n": X.n,
        "family": family,
        "generators": X.S.to_strings(),
        "vertices": X.vertex_count,
        "aut_order": str(A.order),
        "base": [b + 1 for b in A.base],
        # vertex v is written as v + 1, the same 1-based convention as points
        "aut_generators": [format_cycles(p) for p in A.generators],
    }
    return out, EXIT_OK


def cmd_oracle(args) -> tuple[dict, int]:
    X, family = _cayley(args, BUILD_BOUND)
    A = autsearch.brute_force_automorphisms(X, bound=args.oracle_cap)
    out = {
        "n": X.n,
        "family": family,
        "generators": X.S.to_strings(),
        "vertices": X.vertex_count,
        "aut_order": str(A.order),
    }
    return out, EXIT_OK


def expected_verdict(precheck: str) -> bool | None:
    if precheck in (Precheck.TREE_NORMAL.value, Precheck.GIRTH5_NORMAL.value):
        return True
    if precheck == Precheck.SMALL_CYCLE_NONNORMAL.value:
        return False
    return None


def report_json(report, timestamp: str | None = None) -> dict:
    d = report.as_dict()
    out = {}
    for key, value in d.items():
        if key in ("aut_order", "r_order"):
            out[key] = str(value)
        elif isinstance(value, int) and not isinstance(value, bool):
            out[key] = _json_int(value)
        else:
            out[key] = value
    out["timestamp"] = timestamp or _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return out


def cmd_verify(args) -> tuple[dict, int]:
    X, family = _cayley(args, MBS_BOUND)
    T = build_transposition_graph(X.S)
    if not generates_symmetric_group(T):
        raise UsageError("transposition graph is disconnected; S does not generate S_n")
    report = verify_direct_product(X, family=family)
    expected = expected_verdict(report.precheck)
    code = EXIT_OK if expected is None or expected == report.is_direct_product else EXIT_MISMATCH
    return report_json(report), code


COMMANDS = {
    "build": cmd_build,
    "tgraph": cmd_tgraph,
    "aut": cmd_aut,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="degree of the symmetric group")
    common.add_argument("--family", choices=FAMILIES, help="named generator family")
    common.add_argument("--generators", help='explicit transpositions, e.g. "(1,2),(2,3),(3,1)"')
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--dot", help="write a DOT export to this path (build, tgraph)")
    common.add_argument("--max-n", type=int, dest="max_n", help="override the largest n accepted")
    common.add_argument("--oracle-cap", type=int, default=autsearch.ORACLE_BOUND, dest="oracle_cap",
                        help="vertex cap for the brute-force oracle")
    common.add_argument("--parallel", type=int, default=1,
                        help="accepted for compatibility; the search runs in one thread")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="cayleyaut",
        description="Automorphism groups of Cayley graphs of S_n generated by transpositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="build Cay(S_n, S) and print statistics")
    sub.add_parser("tgraph", parents=[common], help="analyse the transposition graph T(S)")
    sub.add_parser("aut", parents=[common], help="automorphism group of Cay(S_n, S)")
    sub.add_parser("verify", parents=[common], help="check the direct-product decomposition")
    sub.add_parser("oracle", parents=[common], help="brute-force automorphism count (small graphs)")
    return parser


def _render(out: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out, indent=2) + "\n"
    lines = []
    for key, value in out.items():
        if isinstance(value, list):
            value = " ".join(str(v) for v in value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        out, code = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as e:
        print(f"capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    text = _render(out, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_MISMATCH:
        print("verification mismatch: is_direct_product disagrees with the precheck expectation",
              file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
