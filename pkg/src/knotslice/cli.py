"""Command-line front end.

Knots are given inline as ``kind:payload`` (``pd:X(1,4,2,5)...``,
``dt:4 6 2``, ``braid:2 | s1 s1 s1``) or, for ``scan``, one per line in a
corpus file.  Exit status is 0 on success, 1 if any knot failed, 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .braid import (
    BraidError,
    bennequin_euler,
    exponent_sum,
    is_quasipositive_presentation,
    parse_braid,
    quasipositive_factor_count,
    s_quasipositive,
)
from .diagram import DiagramError
from .khovanov import (
    ResourceLimitError,
    homological_width,
    homology_ranks,
    poincare_polynomial,
)
from .pipeline import (
    ReportCache,
    analyze,
    parse_knot,
    read_corpus,
    scan,
    write_csv,
    write_json,
)
from .polyinv import alexander, homfly, v_span
from .rasmussen import ExtractionError, extract_s
from .skein import SkeinBudgetError

_KNOT_ERRORS = (DiagramError, BraidError, ExtractionError, ResourceLimitError,
                SkeinBudgetError)


def _parse_inline(text: str):
    kind, sep, payload = text.partition(":")
    if not sep:
        raise DiagramError("knot must be given as kind:payload (pd, dt or braid)")
    return parse_knot(kind.strip(), payload.strip())


def _cmd_kh(args) -> int:
    d = _parse_inline(args.knot)
    ranks = homology_ranks(d, max_crossings=args.max_crossings)
    print("Kh(t, q) =", poincare_polynomial(ranks).to_string(("t", "q")))
    print("width =", homological_width(ranks))
    if args.plot:
        from . import plots

        plots.rank_grid(ranks, args.knot, args.plot)
        print("figure =", args.plot)
    return 0


def _cmd_s(args) -> int:
    d = _parse_inline(args.knot)
    print("s =", extract_s(homology_ranks(d, max_crossings=args.max_crossings)))
    return 0


def _cmd_homfly(args) -> int:
    p = homfly(_parse_inline(args.knot))
    span = v_span(p)
    print("P(v, z) =", p.to_string())
    print(f"e = {span.e}  E = {span.E}")
    return 0


def _cmd_alexander(args) -> int:
    print("Delta(t) =", alexander(homfly(_parse_inline(args.knot))).to_string())
    return 0


def _cmd_braid_s(args) -> int:
    if os.path.exists(args.braidfile):
        with open(args.braidfile, encoding="utf-8") as fh:
            text = fh.read().strip()
    else:
        text = args.braidfile
    word = parse_braid(text)
    b = quasipositive_factor_count(word)
    print(f"strands k = {word.strands}")
    print(f"exponent sum e = {exponent_sum(word)}")
    if is_quasipositive_presentation(word):
        print(f"quasipositive factors b = {b}")
        print(f"Bennequin surface chi = {bennequin_euler(b, word.strands)}")
        print(f"s = b - k + 1 = {s_quasipositive(b, word.strands)}")
    else:
        print("word is not a quasipositive presentation; s formula not applicable")
    return 0


def _cmd_scan(args) -> int:
    entries = read_corpus(args.corpus)
    cache = ReportCache(args.cache) if args.cache else None
    result = scan(entries, jobs=args.jobs, cache=cache,
                  max_crossings=args.max_crossings)
    if args.format == "json":
        write_json(result, sys.stdout)
    else:
        write_csv(result, sys.stdout)
    if args.plots:
        from . import plots

        for path in plots.render_scan(result, args.plots):
            print("figure =", path, file=sys.stderr)
    summary = result.summary()
    print(
        "summary: total={total} errors={errors} alexander_trivial={alexander_trivial} "
        "nonzero_s_among_trivial={nonzero_s_among_trivial} "
        "ambiguous_s={ambiguous_s}".format(**summary),
        file=sys.stderr,
    )
    return 1 if summary["errors"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotslice",
        description="Exact knot invariants: Khovanov ranks, s, HOMFLY, sliceness scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("knot", help="knot as kind:payload (pd, dt or braid)")
        p.set_defaults(func=func)
        return p

    p_kh = knot_command("kh", _cmd_kh, "bigraded Khovanov ranks and width")
    p_kh.add_argument("--max-crossings", type=int, default=16)
    p_kh.add_argument("--plot", metavar="FILE", help="save the rank grid as a figure")
    p_s = knot_command("s", _cmd_s, "Rasmussen s invariant")
    p_s.add_argument("--max-crossings", type=int, default=16)
    knot_command("homfly", _cmd_homfly, "HOMFLY polynomial and v-span")
    knot_command("alexander", _cmd_alexander, "Alexander polynomial via HOMFLY")

    p_braid = sub.add_parser("braid-s", help="s from a quasipositive braid word")
    p_braid.add_argument("braidfile", help="file containing a braid word (or the word itself)")
    p_braid.set_defaults(func=_cmd_braid_s)

    p_scan = sub.add_parser("scan", help="batch sliceness scan over a corpus file")
    p_scan.add_argument("corpus", help="file of name<TAB>kind:payload lines")
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--cache", metavar="DIR")
    p_scan.add_argument("--max-crossings", type=int, default=16)
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--plots", metavar="DIR",
                        help="also render summary figures into this directory")
    p_scan.set_defaults(func=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _KNOT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
