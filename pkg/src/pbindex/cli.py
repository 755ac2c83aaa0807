"""Command-line front end.

Each subcommand reads maps as JSON (inline, from a file path, or ``-`` for
standard input) and writes one JSON document to standard output. Failures
are reported as ``{"error": code, "detail": text}`` on standard error with
exit status 1 for invalid maps, 2 for unmet theorem hypotheses and 3 for
I/O or parse problems.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import compose, extend_to_permutation, factor_left, factor_right, inverse
from .errors import PreconditionError, ValidationError
from .near_bijection import (
    NearBijection,
    legacy_index,
    monoset_complement,
    range_complement,
    restrict_to_partial,
)
from .oracle import bound_of, check_near, check_partial, oracle_compose_check
from .partial_bijection import INFINITE, PartialBijection, disagreement_set, index
from .quotient import Ind, class_of

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PRECONDITION = 2
EXIT_IO = 3


class InputError(Exception):
    pass


def load_json(source: str):
    text = source.strip()
    try:
        if text.startswith(("{", "[")):
            return json.loads(text)
        if source == "-":
            return json.load(sys.stdin)
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{source}: {exc}") from None


def load_map(source: str) -> PartialBijection:
    return PartialBijection.from_json(load_json(source))


def load_near(source: str) -> NearBijection:
    return NearBijection.from_json(load_json(source))


def cmd_index(args):
    return {"index": index(load_map(args.map))}


def cmd_compose(args):
    return compose(load_map(args.g), load_map(args.f)).to_json()


def cmd_invert(args):
    return inverse(load_map(args.map)).to_json()


def cmd_extend(args):
    return extend_to_permutation(load_map(args.map)).to_json()


def cmd_factor(args):
    f, g = load_map(args.f), load_map(args.g)
    return {"lambda": factor_left(f, g).to_json(), "rho": factor_right(f, g).to_json()}


def cmd_equal(args):
    d = disagreement_set(load_map(args.f), load_map(args.g))
    if d is INFINITE:
        return {"almost_equal": False, "disagreements": "infinite"}
    return {"almost_equal": True, "disagreements": d.to_json()}


def cmd_class(args):
    germ = class_of(load_map(args.map))
    return {"germ": germ.to_json(), "Ind": Ind(germ)}


def cmd_near(args):
    f = load_near(args.map)
    return {
        "monoset_complement": monoset_complement(f).to_json(),
        "range_complement": range_complement(f).to_json(),
        "legacy_index": legacy_index(f),
        "restriction": restrict_to_partial(f).to_json(),
    }


def cmd_check(args):
    data = load_json(args.map)
    if isinstance(data, dict) and "prefix" in data:
        return check_near(NearBijection.from_json(data), args.window)
    f = PartialBijection.from_json(data)
    if args.g is None:
        return check_partial(f, args.window)
    # two maps: the first is applied after the second, as in `compose`
    g = load_map(args.g)
    r = compose(f, g)
    W = args.window or max(bound_of(f), bound_of(g), bound_of(r))
    return {"window": W, "composite": r.to_json(), "ok": oracle_compose_check(f, g, W)}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--window", type=int, default=None, help="oracle window (default: structural bound)")

    parser = argparse.ArgumentParser(prog="pbindex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, *params):
        p = sub.add_parser(name, help=help, parents=[common])
        for param, param_help in params:
            p.add_argument(param, help=param_help)
        p.set_defaults(func=func)
        return p

    m = ("map", "map as inline JSON, a file path, or - for stdin")
    add("index", cmd_index, "index of a partial bijection", m)
    add("compose", cmd_compose, "composite g after f", ("g", "outer map"), ("f", "inner map"))
    add("invert", cmd_invert, "inverse map", m)
    add("extend", cmd_extend, "extend an index-zero map to a permutation", m)
    add("factor", cmd_factor, "permutations lambda, rho with lambda.f ~ g ~ f.rho", ("f", "first map"), ("g", "second map"))
    add("equal", cmd_equal, "almost-equality and the disagreement set", ("f", "first map"), ("g", "second map"))
    add("class", cmd_class, "germ class and its index", m)
    add("near", cmd_near, "monoset, range and index of a near-bijection", m)
    chk = add("check", cmd_check, "recount a map (or a composite) on a finite window", m)
    chk.add_argument("g", nargs="?", default=None, help="inner map; when given, check compose(map, g)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    def fail(code, detail, status):
        print(json.dumps({"error": code, "detail": detail}), file=sys.stderr)
        return status

    try:
        result = args.func(args)
    except InputError as exc:
        return fail("IOError", str(exc), EXIT_IO)
    except ValidationError as exc:
        return fail(exc.code, exc.detail, EXIT_INVALID)
    except PreconditionError as exc:
        return fail(exc.code, exc.detail, EXIT_PRECONDITION)
    except (TypeError, ValueError) as exc:
        return fail("ParseError", str(exc), EXIT_IO)
    print(json.dumps(result, indent=2 if args.pretty else None))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
