"""Command line interface.

Elements are accepted in either of two textual forms and auto-detected:

* a tree pair diagram ``"NEG:POS"`` (preorder bitstrings, reduced on input);
* a word in the infinite generating set, e.g. ``"x0^2 x1 x4^-1"``; plain
  ``x0``/``x1`` words are the special case with indices below two.

Exit codes: 0 on success, 1 on malformed input or domain errors, 2 when a
verification subcommand finds a genuine failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .errors import ThompsonFError
from .fordham import classify_pair, length
from .geodesy import bfs_ball, fellow_traveller_demo, greedy_geodesic
from .group_ops import (
    DEFAULT_ORDER,
    Generator,
    format_genword,
    inverse,
    multiply,
)
from .normal_form import format_nf, nf_to_genword, nf_to_pair, pair_to_nf, parse_nf
from .seesaw import SeesawParams, reducing_generators, seesaw_word, verify_swing
from .trees import IDENTITY, Tree, TreePair


def parse_element(text: str) -> TreePair:
    """Auto-detect and parse an element argument."""
    text = text.strip()
    if text == "<id>":
        return IDENTITY
    if ":" in text:
        return TreePair.from_text(text)
    return nf_to_pair(parse_nf(text))


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _element_payload(pair: TreePair) -> dict:
    return {
        "pair": pair.text(),
        "normal_form": format_nf(pair_to_nf(pair)),
        "length": length(pair),
    }


def cmd_len(args) -> int:
    pair = parse_element(args.element)
    _emit({"element": pair.text(), "length": length(pair)})
    return 0


def cmd_mul(args) -> int:
    pairs = [parse_element(e) for e in args.elements]
    out = pairs[0]
    for p in pairs[1:]:
        out = multiply(out, p)
    _emit(_element_payload(out))
    return 0


def cmd_inv(args) -> int:
    _emit(_element_payload(inverse(parse_element(args.element))))
    return 0


def cmd_nf(args) -> int:
    pair = parse_element(args.element)
    nf = pair_to_nf(pair)
    _emit(
        {
            "pair": pair.text(),
            "normal_form": format_nf(nf),
            "positive": [list(t) for t in nf.positive],
            "negative": [list(t) for t in nf.negative],
        }
    )
    return 0


def cmd_word(args) -> int:
    pair = parse_element(args.element)
    word = nf_to_genword(pair_to_nf(pair))
    _emit(
        {
            "pair": pair.text(),
            "word": format_genword(word),
            "word_length": len(word),
            "length": length(pair),
        }
    )
    return 0


def cmd_reducers(args) -> int:
    pair = parse_element(args.element)
    red = sorted(reducing_generators(pair))
    _emit(
        {
            "element": pair.text(),
            "length": length(pair),
            "reducers": [g.token for g in red],
        }
    )
    return 0


_GEN_BY_TOKEN = {g.token: g for g in Generator}


def cmd_geodesic(args) -> int:
    pair = parse_element(args.element)
    prefer = None
    if args.prefer:
        if args.prefer not in _GEN_BY_TOKEN:
            raise ThompsonFError(
                f"unknown generator {args.prefer!r}; choose from "
                f"{sorted(_GEN_BY_TOKEN)}"
            )
        fav = _GEN_BY_TOKEN[args.prefer]
        prefer = lambda g: 0 if g == fav else 1
    path = greedy_geodesic(pair, DEFAULT_ORDER, prefer)
    _emit(
        {
            "element": pair.text(),
            "length": length(pair),
            "geodesic": format_genword(path.word),
        }
    )
    return 0


def cmd_seesaw_gen(args) -> int:
    w = seesaw_word(SeesawParams(args.l, args.m))
    payload = _element_payload(w)
    payload["reducers"] = [g.token for g in sorted(reducing_generators(w))]
    _emit(payload)
    return 0


def cmd_seesaw_verify(args) -> int:
    l = args.l if args.l is not None else args.k
    m = args.m if args.m is not None else args.k
    w = seesaw_word(SeesawParams(l, m))
    report = verify_swing(w, Generator.X0, args.k)
    _emit(report.as_dict())
    return 0 if report.swing >= args.k else 2


def cmd_ball(args) -> int:
    ball = bfs_ball(args.radius)
    payload = {
        "radius": ball.radius,
        "sphere_sizes": list(ball.sphere_sizes),
        "ball_sizes": list(ball.ball_sizes),
    }
    if args.dump:
        with open(args.dump, "w") as fh:
            for sphere in ball.spheres:
                for pair in sphere:
                    fh.write(f"{ball.distances[pair.text()]} {pair.text()}\n")
        payload["dump"] = args.dump
    _emit(payload)
    return 0


def cmd_oracle_check(args) -> int:
    ball = bfs_ball(args.radius)
    mismatches = []
    for sphere in ball.spheres:
        for pair in sphere:
            d = ball.distance(pair)
            f = length(pair)
            if d != f:
                mismatches.append(
                    {"pair": pair.text(), "bfs": d, "fordham": f}
                )
    _emit(
        {
            "radius": args.radius,
            "checked": len(ball.distances),
            "mismatches": mismatches,
        }
    )
    return 0 if not mismatches else 2


def cmd_demo_fellow_traveller(args) -> int:
    if args.s < 2:
        raise ThompsonFError("the demo needs --s >= 2")
    ks = list(range(2, args.s + 1))
    words = [seesaw_word(SeesawParams(k, k)) for k in ks]
    records = fellow_traveller_demo(words)
    _emit(
        {
            "generator": "x0",
            "records": [
                {
                    "k": k,
                    "length_w": r.length_w,
                    "length_wg": r.length_wg,
                    "gap": r.gap,
                }
                for k, r in zip(ks, records)
            ],
        }
    )
    return 0


def _ascii_tree(tree: Tree, prefix: str = "", tag: str = "") -> list[str]:
    label = tag + ("." if tree.is_leaf else "^")
    lines = [prefix + label]
    if not tree.is_leaf:
        child_prefix = prefix + "  "
        lines += _ascii_tree(tree.left, child_prefix, "L ")
        lines += _ascii_tree(tree.right, child_prefix, "R ")
    return lines


def _dot_tree(tree: Tree, name: str, out: list[str]) -> None:
    counter = [0]

    def rec(node: Tree) -> str:
        nid = f"{name}{counter[0]}"
        counter[0] += 1
        shape = "point" if node.is_leaf else "triangle"
        out.append(f'  {nid} [shape={shape}, label=""];')
        if not node.is_leaf:
            out.append(f"  {nid} -> {rec(node.left)};")
            out.append(f"  {nid} -> {rec(node.right)};")
        return nid

    rec(tree)


def cmd_render(args) -> int:
    pair = parse_element(args.element)
    if args.format == "ascii":
        neg_t, pos_t = classify_pair(pair)
        print(f"T- ({', '.join(map(str, neg_t)) or 'empty'}):")
        print("\n".join(_ascii_tree(pair.neg)))
        print(f"T+ ({', '.join(map(str, pos_t)) or 'empty'}):")
        print("\n".join(_ascii_tree(pair.pos)))
    else:
        out = ["digraph pair {", "  node [fontsize=10];"]
        _dot_tree(pair.neg, "n", out)
        _dot_tree(pair.pos, "p", out)
        out.append("}")
        print("\n".join(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompsonf",
        description="Thompson's group F: exact word lengths, normal forms, "
        "seesaw words, and a Cayley-graph oracle "
        f"(kernel backend: {kernels.BACKEND}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("len", help="exact word length of an element")
    p.add_argument("element")
    p.set_defaults(func=cmd_len)

    p = sub.add_parser("mul", help="product of two or more elements")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", help="inverse of an element")
    p.add_argument("element")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("nf", help="unique normal form of an element")
    p.add_argument("element")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser(
        "word", help="{x0, x1} word from the normal form (not minimal)"
    )
    p.add_argument("element")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser(
        "reducers", help="generators that shorten the element by one"
    )
    p.add_argument("element")
    p.set_defaults(func=cmd_reducers)

    p = sub.add_parser("geodesic", help="a minimal {x0, x1} word")
    p.add_argument("element")
    p.add_argument(
        "--prefer",
        metavar="GEN",
        help="tie-break toward this generator (x0, x0^-1, x1, x1^-1)",
    )
    p.set_defaults(func=cmd_geodesic)

    seesaw = sub.add_parser("seesaw", help="the seesaw family S(l, m)")
    ssub = seesaw.add_subparsers(dest="seesaw_command", required=True)
    p = ssub.add_parser("gen", help="construct S(l, m)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_seesaw_gen)
    p = ssub.add_parser(
        "verify", help="verify the swing clauses (exit 2 on failure)"
    )
    p.add_argument("--k", type=int, required=True, help="target swing")
    p.add_argument("--l", type=int, help="defaults to k")
    p.add_argument("--m", type=int, help="defaults to k")
    p.set_defaults(func=cmd_seesaw_verify)

    p = sub.add_parser("ball", help="enumerate a ball in the Cayley graph")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--dump", metavar="PATH", help="write 'dist NEG:POS' lines")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser(
        "oracle-check",
        help="compare the metric against raw BFS distances (exit 2 on mismatch)",
    )
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_oracle_check)

    demo = sub.add_parser("demo", help="demonstrations")
    dsub = demo.add_subparsers(dest="demo_command", required=True)
    p = dsub.add_parser(
        "fellow-traveller",
        help="growing synchronous gap between geodesics of w and w·x0",
    )
    p.add_argument(
        "--s", type=int, required=True, help="largest seesaw parameter k"
    )
    p.set_defaults(func=cmd_demo_fellow_traveller)

    p = sub.add_parser("render", help="draw the two trees of an element")
    p.add_argument("element")
    p.add_argument("--format", choices=("ascii", "dot"), default="ascii")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ThompsonFError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
