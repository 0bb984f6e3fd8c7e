"""Command-line front door.

Exit codes: 0 holds/success, 1 fails/counterexample found, 2 input
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import finite_epigroups as fin
from .decider import decide_identity, render_trace
from .lcp import longest_common_prefix
from .normalizer import normalize
from .omega_poly import parse_poly
from .sword import InternalError, s_canonical
from .zterm import ParseError, expand, parse, render, to_json


def _split_identity(text):
    if text.count("=") != 1:
        raise ParseError("an identity needs exactly one '='", text.find("="))
    l, r = text.split("=")
    return parse(l), parse(r)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="epidecide",
        description="decide unary-semigroup identities over all (finite) epigroups",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("decide", help="decide an identity 'lhs = rhs'")
    p.add_argument("identity")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--counterexample", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("normalize", help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("canon", help="canonical class representative only")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lcp", help="longest common prefix of two expressions")
    p.add_argument("e1")
    p.add_argument("e2")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("expand", help="replace w by an integer k")
    p.add_argument("expr")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("finite", help="finite-model operations")
    fsub = p.add_subparsers(dest="fcmd", required=True)

    c = fsub.add_parser("check", help="check an identity against tables")
    c.add_argument("identity")
    c.add_argument("--table", help="JSON table file")
    c.add_argument("--corpus", choices=["default"], help="use the built-in corpus")
    c.add_argument("--json", action="store_true")

    pv = fsub.add_parser("pseudoinv", help="print the computed pseudoinversion")
    pv.add_argument("--table", required=True)
    pv.add_argument("--json", action="store_true")

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


def _dispatch(args):
    if args.cmd == "decide":
        lhs, rhs = _split_identity(args.identity)
        v = decide_identity(lhs, rhs, search_counterexample=args.counterexample)
        if args.json:
            print(json.dumps(v.to_json()))
        else:
            print("HOLDS" if v.holds else "FAILS")
            if args.trace or v.counterexample is not None:
                print(render_trace(v))
        return 0 if v.holds else 1

    if args.cmd == "normalize":
        trace = []
        ns = normalize(parse(args.expr), trace)
        if args.json:
            d = ns.to_json()
            if args.trace:
                d["steps"] = trace
            print(json.dumps(d))
        else:
            print(render(ns.rep))
            if args.trace:
                for i, st in enumerate(trace, 1):
                    print(f"{i}. {st['rule']} at {st['at']}: {st['before']} -> {st['after']}")
        return 0

    if args.cmd == "canon":
        c = s_canonical(parse(args.expr))
        print(json.dumps(to_json(c)) if args.json else render(c))
        return 0

    if args.cmd == "lcp":
        from .normalizer import normalize as _norm

        a = _norm(parse(args.e1))
        b = _norm(parse(args.e2))
        p = longest_common_prefix(a, b)
        print(json.dumps(p.to_json()) if args.json else render(p.rep))
        return 0

    if args.cmd == "expand":
        print(expand(parse(args.expr), args.k))
        return 0

    if args.cmd == "finite":
        return _dispatch_finite(args)

    raise ValueError(f"unknown command {args.cmd}")


def _dispatch_finite(args):
    if args.fcmd == "check":
        lhs, rhs = _split_identity(args.identity)
        from .zterm import term_to_zword, zword_to_term

        lt = zword_to_term(term_to_zword(lhs))
        rt = zword_to_term(term_to_zword(rhs))
        if args.table:
            members = fin.load_corpus_path(args.table)
        elif args.corpus:
            members = fin.build_corpus()
        else:
            raise ValueError("need --table FILE or --corpus default")
        for E in members:
            asg = fin.check_identity(E, lt, rt)
            if asg is not None:
                if args.json:
                    print(json.dumps({"holds": False, "table": E.to_json(), "assignment": asg}))
                else:
                    pretty = ", ".join(f"{k}->{asg[k]}" for k in sorted(asg))
                    print(f"FAILS in {E.name}: {pretty}")
                return 1
        print(json.dumps({"holds": True}) if args.json else "HOLDS")
        return 0

    if args.fcmd == "pseudoinv":
        members = fin.load_corpus_path(args.table)
        out = []
        for E in members:
            table = E.table
            un = [fin.pseudoinverse(table, x) for x in range(E.n)]
            out.append({"name": E.name, "pseudoinverse": un})
            if not args.json:
                print(f"{E.name}: " + " ".join(f"{x}->{v}" for x, v in enumerate(un)))
        if args.json:
            print(json.dumps(out))
        return 0

    raise ValueError(f"unknown finite subcommand {args.fcmd}")


if __name__ == "__main__":
    raise SystemExit(main())
