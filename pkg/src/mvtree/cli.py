"""Command-line front end.

Every analysis command reads a tree in edge-list format and prints a JSON
report to stdout. Counts are emitted as decimal strings so arbitrarily large
values survive JSON consumers. Exit codes: 0 ok, 1 property failure,
2 input error, 3 precondition error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import __version__
from .cq import is_disjoint_visible, maximal_absolute_cq_visible_sets
from .errors import InputError, PreconditionError
from .generators import path_tree, random_tree, spider_tree, star_tree
from .graph import BRUTE_FORCE_LIMIT, brute_force_mu, line_graph, mu_block_graph, mu_line_graph_of_tree
from .io import format_tree, read_tree
from .tree import Tree, legs, steiner_subtree
from .verify import run_verify
from .visibility import (
    enumerate_maximum_mv_sets,
    is_mv_set_fast,
    mu_tree,
    mu_tree_via_branch_degrees,
    r_mu,
)

EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


def make_report(command: str, input_summary: dict, results: dict) -> dict:
    return {
        "command": command,
        "input_summary": input_summary,
        "results": results,
        "version": __version__,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def parse_set(text: str) -> list[int]:
    """Parse ``"a,b,c"`` into vertex ids; the empty string is the empty set."""
    if text == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"bad vertex set {text!r}: expected comma-separated integers") from None


def _summary(t: Tree) -> dict:
    return {"n": t.n, "edges": len(t.edges)}


def cmd_mu(t: Tree, args) -> dict:
    mu = mu_tree(t)
    formula = mu_tree_via_branch_degrees(t) if t.n >= 2 else None
    return {
        "mu": str(mu.mu),
        "witness": list(mu.witness),
        "branch_degree_formula": None if formula is None else str(formula),
        "agree": formula is None or formula == mu.mu,
    }


def cmd_rmu(t: Tree, args) -> dict:
    res = r_mu(t)
    return {"count": str(res.count), "regime": res.regime}


def cmd_enumerate(t: Tree, args) -> dict:
    stream = enumerate_maximum_mv_sets(t)
    if args.limit is not None:
        stream = itertools.islice(stream, args.limit)
    sets = [list(s) for s in stream]
    total = r_mu(t).count
    return {"sets": sets, "total": str(total), "truncated": len(sets) < total}


def cmd_steiner(t: Tree, args) -> dict:
    h = steiner_subtree(t, parse_set(args.set))
    return {
        "seed": list(h.seed),
        "vertices": list(h.vertices),
        "edges": [list(e) for e in h.edges],
        "leaves": list(h.leaves),
    }


def cmd_legs(t: Tree, args) -> dict:
    return {
        "legs": [
            {
                "leaf": leg.leaf,
                "branch": leg.branch,
                "length": str(leg.length),
                "path": list(leg.path.vertices),
                "interior_plus_leaf": list(leg.interior_plus_leaf),
            }
            for leg in legs(t)
        ]
    }


def cmd_check_mv(t: Tree, args) -> dict:
    s = sorted(set(parse_set(args.set)))
    out = {"set": s, "is_mv": is_mv_set_fast(t, s)}
    if s:
        out["steiner_leaves"] = list(steiner_subtree(t, s).leaves)
    return out


def cmd_cq(t: Tree, args) -> dict:
    q = parse_set(args.q)
    report = maximal_absolute_cq_visible_sets(t, q)
    return {
        "q": list(report.q),
        "q_is_mv": report.q_is_mv,
        "construction": report.construction,
        "maximal_sets": [list(s) for s in report.maximal_sets],
        "disjoint_visible": is_disjoint_visible(t, q),
    }


def cmd_linegraph_mu(t: Tree, args) -> dict:
    value = mu_line_graph_of_tree(t)
    lg = line_graph(t)
    block = mu_block_graph(lg)
    brute = brute_force_mu(lg).mu if lg.n <= BRUTE_FORCE_LIMIT else None
    mu = mu_tree(t).mu
    return {
        "mu_line_graph": str(value),
        "mu_block_graph": str(block),
        "mu_brute_force": None if brute is None else str(brute),
        "mu_tree": str(mu),
        "agree": value == block == mu and brute in (None, value),
    }


TREE_COMMANDS = {
    "mu": (cmd_mu, "mutual-visibility number and a witness set"),
    "rmu": (cmd_rmu, "number of maximum mutual-visibility sets"),
    "enumerate": (cmd_enumerate, "list maximum mutual-visibility sets"),
    "steiner": (cmd_steiner, "Steiner subtree of a vertex set"),
    "legs": (cmd_legs, "legs of a tree with a branch vertex"),
    "check-mv": (cmd_check_mv, "decide whether a set is a mutual-visibility set"),
    "cq": (cmd_cq, "maximal absolute c_Q-visible sets"),
    "linegraph-mu": (cmd_linegraph_mu, "mutual-visibility number of the line graph"),
}


def cmd_generate(args) -> str:
    kind = args.kind
    if kind == "path":
        t = path_tree(_required(args.n, "--n"))
    elif kind == "star":
        t = star_tree(_required(args.leaves, "--leaves"))
    elif kind == "spider":
        t = spider_tree(parse_set(_required(args.legs, "--legs")))
    else:
        t = random_tree(_required(args.n, "--n"), args.seed)
    return format_tree(t)


def _required(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required for this kind")
    return value


def cmd_verify(args) -> tuple[dict, int]:
    res = run_verify(max_n=args.max_n, seed=args.seed, trials=args.trials,
                     exhaustive_max_n=args.exhaustive_max_n)
    properties = {
        name: {"checked": str(o.checked), "passed": o.passed, "counterexample": o.counterexample}
        for name, o in res.outcomes.items()
    }
    summary = {"max_n": res.max_n, "seed": res.seed, "trials": res.trials,
               "exhaustive_max_n": res.exhaustive_max_n, "trees": res.trees}
    report = make_report("verify", summary, {"all_passed": res.all_passed, "properties": properties})
    return report, EXIT_OK if res.all_passed else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mvtree", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in TREE_COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="edge-list file")
        if name == "enumerate":
            p.add_argument("--limit", type=int, default=None, help="stop after this many sets")
        if name in ("steiner", "check-mv"):
            p.add_argument("--set", required=True, help="comma-separated vertex ids")
        if name == "cq":
            p.add_argument("--q", required=True, help="comma-separated vertex ids")

    g = sub.add_parser("generate", help="print a tree in edge-list format")
    g.add_argument("kind", choices=["path", "star", "spider", "random"])
    g.add_argument("--n", type=int, help="vertex count (path, random)")
    g.add_argument("--leaves", type=int, help="leaf count (star)")
    g.add_argument("--legs", help="comma-separated leg lengths (spider)")
    g.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="run the property suite against the oracle")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=20, help="random trees per size above the exhaustive range")
    v.add_argument("--exhaustive-max-n", type=int, default=6)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            sys.stdout.write(cmd_generate(args))
            return EXIT_OK
        if args.command == "verify":
            report, code = cmd_verify(args)
            print(dumps(report))
            return code
        try:
            t = read_tree(args.path)
        except OSError as exc:
            raise InputError(f"cannot read {args.path}: {exc.strerror}") from None
        handler = TREE_COMMANDS[args.command][0]
        print(dumps(make_report(args.command, _summary(t), handler(t, args))))
        return EXIT_OK
    except InputError as exc:
        print(f"mvtree {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"mvtree {args.command}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
