"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
error, 4 precondition failure, 10 unknown (bounded equality search gave no
answer; not an error). VBRAID_BFS_DEPTH overrides the default search depth.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .braidword import bfs_equal, free_reduce, parse_word
from .errors import (
    FlavorError,
    MonoidHasNoInversesError,
    NonUnitDeterminantError,
    NotAKnotError,
    SizeMismatchError,
    VbraidError,
    WordSyntaxError,
)
from .gauss import closure_code
from .lpmatrix import mat_det
from .reps import abelianize, burau, perm_proj
from .verify import CHECKS_BY_FLAVOR, verify_range

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_PRECONDITION = 4
EXIT_UNKNOWN = 10

_FLAVORS = ["br", "sym", "vb", "bp", "sb", "sg"]


def _default_depth():
    try:
        return int(os.environ.get("VBRAID_BFS_DEPTH", "6"))
    except ValueError:
        return 6


def _parse_range(text):
    if ".." in text:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    v = int(text)
    return v, v


def build_parser():
    p = argparse.ArgumentParser(
        prog="vbraid",
        description="Exact word algebra and representations for virtual braid groups.",
    )
    p.add_argument("--json", action="store_true", help="emit JSON output everywhere")
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, help_text):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("--flavor", choices=_FLAVORS, default="vb")
        c.add_argument("-n", type=int, required=True, help="strand count")
        c.add_argument("word", help="word text, e.g. 's1 s2^-1 z1'")
        return c

    word_cmd("reduce", "freely reduce a word")
    word_cmd("burau", "Burau matrix of a word")
    word_cmd("det", "determinant of the Burau matrix")
    word_cmd("perm", "permutation image of a word")
    word_cmd("abelianize", "image in Z/2 + Z")
    word_cmd("closure-gauss", "Gauss code of the braid closure")

    v = sub.add_parser("verify", help="check every relator under every representation")
    v.add_argument("--flavor", choices=_FLAVORS, default="vb")
    v.add_argument("-n", required=True, help="strand count or range, e.g. 3 or 2..7")
    v.add_argument(
        "--reps",
        help="comma-separated subset of checks (default: all applicable)",
    )

    e = sub.add_parser("equal", help="bounded search for a rewrite derivation")
    e.add_argument("--flavor", choices=_FLAVORS, default="vb")
    e.add_argument("-n", type=int, required=True)
    e.add_argument("--depth", type=int, default=None)
    e.add_argument("word1")
    e.add_argument("word2")

    return p


def _run(args) -> int:
    out = sys.stdout

    if args.command == "verify":
        lo, hi = _parse_range(args.n)
        checks = args.reps.split(",") if args.reps else None
        records = verify_range(args.flavor, lo, hi, checks)
        if args.json:
            out.write(json.dumps([r.to_json_obj() for r in records]) + "\n")
        else:
            for r in records:
                out.write(r.line() + "\n")
        return EXIT_OK if all(r.passed for r in records) else EXIT_VERIFY_FAIL

    if args.command == "equal":
        depth = args.depth if args.depth is not None else _default_depth()
        w1 = parse_word(args.word1, args.flavor, args.n)
        w2 = parse_word(args.word2, args.flavor, args.n)
        result = bfs_equal(w1, w2, depth)
        if args.json:
            obj = {"result": "equal" if result.equal else "unknown"}
            if result.equal:
                obj["witness"] = [
                    {"rule": s.rule, "direction": s.direction, "position": s.position}
                    for s in result.witness
                ]
            out.write(json.dumps(obj) + "\n")
        else:
            if result.equal:
                out.write("equal\n")
                for s in result.witness:
                    arrow = "->" if s.direction == 1 else "<-"
                    out.write(f"  {s.rule} {arrow} at {s.position}\n")
            else:
                out.write("unknown\n")
        return EXIT_OK if result.equal else EXIT_UNKNOWN

    word = parse_word(args.word, args.flavor, args.n)

    if args.command == "reduce":
        out.write(str(free_reduce(word)) + "\n")
    elif args.command == "burau":
        out.write(burau(word).to_json() + "\n")
    elif args.command == "det":
        d = mat_det(burau(word))
        out.write((d.to_json() if args.json else str(d)) + "\n")
    elif args.command == "perm":
        p = perm_proj(word)
        if args.json:
            out.write(json.dumps(list(p.images)) + "\n")
        else:
            out.write(str(p) + "\n")
    elif args.command == "abelianize":
        out.write(json.dumps(abelianize(word).to_json_obj(), sort_keys=True) + "\n")
    elif args.command == "closure-gauss":
        out.write(str(closure_code(word)) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except WordSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NonUnitDeterminantError, NotAKnotError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (
        FlavorError,
        MonoidHasNoInversesError,
        SizeMismatchError,
        VbraidError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
