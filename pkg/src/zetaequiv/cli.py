"""Command-line entry point.

Exit codes: 0 for success or a true predicate, 1 for a false predicate or a
failed check, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import charpoly, invasion, search, switching, zeta
from .formats import (
    FormatError,
    format_digraph,
    parse_digraph,
    parse_graph,
    parse_invader,
    parse_partition,
    read_text,
)
from .graphs import GraphError

log = logging.getLogger("zetaequiv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 2 with a one-line diagnostic
        raise UsageError(message)


def _load_digraph(path: str):
    return parse_digraph(read_text(path))


def cmd_eta(args) -> int:
    g = _load_digraph(args.file)
    if args.graph and args.complete:
        raise UsageError("--graph and --complete are exclusive")
    if args.graph:
        p = charpoly.eta_bar(g)
    elif args.complete:
        p = charpoly.eta_complete(g)
    else:
        p = charpoly.eta(g)
    print(p.to_text())
    return 0


def cmd_zeta_inv(args) -> int:
    g = parse_graph(read_text(args.file))
    print(zeta.zeta_inverse(g, args.spec).to_text())
    if args.oracle:
        if args.trunc is None:
            raise UsageError("--oracle needs --trunc L")
        tally = zeta.walk_series_oracle(g, args.trunc)
        for k in range(1, args.trunc + 1):
            print(f"walks[{k}] = {tally[k].to_text()}")
    elif args.trunc is not None:
        raise UsageError("--trunc is only used with --oracle")
    return 0


def cmd_equiv(args) -> int:
    g, h = _load_digraph(args.a), _load_digraph(args.b)
    pred = charpoly.zeta_equivalent_graphs if args.mode == "graph" else charpoly.zeta_equivalent_digraphs
    same = pred(g, h)
    print("zeta-equivalent" if same else "not zeta-equivalent")
    return 0 if same else 1


def cmd_invade(args) -> int:
    s = parse_invader(read_text(args.invader))
    g = _load_digraph(args.graph)
    if args.symmetric:
        out = invasion.symmetric_invade(s, g)
        formula = lambda: invasion.symmetric_invasion_char_poly(s, g)  # noqa: E731
    else:
        out = invasion.invade(s, g)
        formula = lambda: invasion.invasion_char_poly(s, g)  # noqa: E731
    sys.stdout.write(format_digraph(out))
    status = 0
    if args.charpoly in ("formula", "both"):
        f = formula()
        print(f"charpoly (formula): {f.to_text()}")
    if args.charpoly in ("direct", "both"):
        d = invasion.direct_char_poly(out)
        print(f"charpoly (direct): {d.to_text()}")
    if args.charpoly == "both" and f != d:
        print("MISMATCH between formula and direct characteristic polynomial")
        status = 1
    return status


def cmd_switch(args) -> int:
    g = _load_digraph(args.graph)
    p = parse_partition(read_text(args.partition), g.n)
    rep = switching.validate_partition(g, p)
    if not rep.ok:
        print(rep, file=sys.stderr)
        return 1
    h = switching.perform_switching(g, p)
    sys.stdout.write(format_digraph(h))
    if args.certify:
        cert = switching.certify(g, h, switching.build_conjugators(g, p, deltas=rep.deltas))
        print(cert.summary())
        return 0 if cert.ok else 1
    return 0


def cmd_search(args) -> int:
    cfg = search.SearchConfig(args.n, args.mode, args.connected, args.seed, args.workers)
    text = search.mine_pairs(cfg).to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    from .identities import run_identity_suite

    res = run_identity_suite(args.seed, args.trials)
    print(res.text())
    return 0 if res.ok else 1


def cmd_reproduce(args) -> int:
    from .reproduce import reproduce_figures

    lines = reproduce_figures()
    for name, ok in lines:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if all(ok for _, ok in lines) else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zetaequiv", description="Zeta-equivalent digraphs: polynomials, invasions, switchings.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("eta", help="generalized characteristic polynomial of a digraph")
    s.add_argument("file")
    s.add_argument("--graph", action="store_true", help="eta-bar(x, tu, uu) for a graph")
    s.add_argument("--complete", action="store_true", help="include the y J term")
    s.set_defaults(func=cmd_eta)

    s = sub.add_parser("zeta-inv", help="1/zeta = det(I - M) for a (weighted) digraph")
    s.add_argument("file")
    s.add_argument("--spec", choices=sorted(zeta.SPECIALIZATIONS), default="full")
    s.add_argument("--trunc", type=int, metavar="L", help="walk length for --oracle")
    s.add_argument("--oracle", action="store_true", help="also print closed-walk tallies up to L")
    s.set_defaults(func=cmd_zeta_inv)

    s = sub.add_parser("equiv", help="exit 0 iff two digraphs are zeta-equivalent")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--mode", choices=("digraph", "graph"), default="digraph")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("invade", help="invade a digraph with an invader")
    s.add_argument("invader")
    s.add_argument("graph")
    s.add_argument("--symmetric", action="store_true", help="one copy per undirected edge")
    s.add_argument("--charpoly", choices=("formula", "direct", "both"), help="also print the characteristic polynomial")
    s.set_defaults(func=cmd_invade)

    s = sub.add_parser("switch", help="apply a switching given by a partition file")
    s.add_argument("graph")
    s.add_argument("partition")
    s.add_argument("--certify", action="store_true", help="check the (Q + tR) conjugation identities")
    s.set_defaults(func=cmd_switch)

    s = sub.add_parser("search", help="exhaustive search for zeta-equivalent pairs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=search.MODES, default="digraph")
    s.add_argument("--connected", action="store_true", help="weakly connected inputs only")
    s.add_argument("--seed", type=int, default=0, help="fingerprint seed")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", help="write the report to this file")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify-identities", help="randomized identity suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=20)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reproduce-figures", help="check the Figure 1 claims")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FormatError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
