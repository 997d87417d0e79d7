"""Command line front end.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 an exhaustive operation exceeded its budget. The default budgets can be
raised with the ``DOWORDS_ENUM_BUDGET`` and ``DOWORDS_REALIZE_BUDGET``
environment variables or the ``--budget`` flags.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import count as counting
from .classify import circle_graph, irreducible_factors, is_connected, is_irreducible, is_strongly_irreducible
from .enumeration import DEFAULT_BUDGET, FILTERS, DowStream, count_by_enumeration
from .errors import BudgetExceeded, DowError
from .genome import REALIZABLE_BUDGET, format_arrangement, is_realizable, parse_arrangement, rho
from .render import DiagramSpec, render_svg
from .seqio import FORMATS, emit_table
from .word import canonicalize, format_word, is_palindrome, parse

# class flag vocabulary -> count sequence id
CLASS_SEQUENCES = {
    "all": "K",
    "palindrome": "L",
    "irreducible": "I",
    "irreducible-palindrome": "J",
    "strong": "S",
    "strong-palindrome": "T",
    "diagrams-all": "diagrams-all",
    "diagrams-irreducible": "diagrams-irr",
    "diagrams-strong": "diagrams-sir",
    "arrangements": "A",
}

# the six word classes checked by `verify`, in output order
VERIFY_CLASSES = ("all", "palindrome", "irreducible", "irreducible-palindrome",
                  "strong", "strong-palindrome")


class UsageError(Exception):
    pass


def _env_budget(name, default):
    raw = os.environ.get(name)
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def cmd_count(args):
    classes = [c.strip() for c in args.classes.split(",") if c.strip()]
    unknown = [c for c in classes if c not in CLASS_SEQUENCES]
    if unknown or not classes:
        raise UsageError(f"unknown class(es): {', '.join(unknown) or '(none)'}; "
                         f"choose from {', '.join(CLASS_SEQUENCES)}")
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    tables = [counting.table(CLASS_SEQUENCES[c], args.n_max) for c in classes]
    headers = None if args.ids else classes
    _write(emit_table(tables, args.format, headers=headers), args.output)
    return 0


def cmd_enumerate(args):
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.cls not in FILTERS:
        raise UsageError(f"unknown class {args.cls!r}")
    budget = args.budget if args.budget is not None else _env_budget("DOWORDS_ENUM_BUDGET", DEFAULT_BUDGET)
    if args.n > budget:
        raise BudgetExceeded("enumeration", args.n, budget)
    out = sys.stdout
    for w in DowStream(args.n, args.cls):
        out.write(format_word(w) + "\n")
    return 0


def cmd_classify(args):
    w = parse(args.word)
    if not w.letters:
        raise UsageError("cannot classify the empty word")
    c = canonicalize(w)
    g = circle_graph(c)
    factors = irreducible_factors(c)
    edges = " ".join(f"{a}-{b}" for a, b in sorted(g.edges)) or "(none)"
    lines = [
        f"word: {format_word(w)}",
        f"canonical: {format_word(c)}",
        f"size: {w.size}",
        f"palindrome: {str(is_palindrome(c)).lower()}",
        f"irreducible: {str(is_irreducible(c)).lower()}",
        f"factors: {' | '.join(format_word(f) for f in factors)}",
        f"strongly irreducible: {str(is_strongly_irreducible(c)).lower()}",
        f"circle graph edges: {edges}",
        f"circle graph connected: {str(is_connected(g)).lower()}",
    ]
    print("\n".join(lines))
    return 0


def cmd_verify(args):
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    budget = args.budget if args.budget is not None else _env_budget("DOWORDS_ENUM_BUDGET", DEFAULT_BUDGET)
    if args.n_max > budget:
        raise BudgetExceeded("verification", args.n_max, budget)
    failures = 0
    total = 0
    for n in range(1, args.n_max + 1):
        for cls in VERIFY_CLASSES:
            seq = CLASS_SEQUENCES[cls]
            computed = counting.SEQUENCES[seq][0](n)
            found = count_by_enumeration(n, cls, budget=budget, workers=args.jobs)
            ok = found == computed
            failures += not ok
            total += 1
            print(f"{n} {cls} {found} {computed} {'PASS' if ok else 'FAIL'}", flush=True)
    print(f"{total - failures}/{total} checks agree", file=sys.stderr)
    return 1 if failures else 0


def cmd_map_arrangement(args):
    a = parse_arrangement(args.arrangement)
    print(format_word(rho(a)))
    return 0


def cmd_realizable(args):
    w = parse(args.word)
    budget = args.budget if args.budget is not None else _env_budget("DOWORDS_REALIZE_BUDGET", REALIZABLE_BUDGET)
    ok, witness = is_realizable(w, budget=budget)
    if ok:
        print("realizable")
        print(f"witness: {format_arrangement(witness)}")
    else:
        print("not realizable")
    return 0


def cmd_render(args):
    w = parse(args.word)
    if not w.letters:
        raise UsageError("cannot render the empty word")
    spec = DiagramSpec(w, style=args.style, size=args.size, radius=args.radius,
                       font_size=args.font_size, base_point_mark=not args.no_base_point)
    _write(render_svg(spec), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dowords",
                                description="Enumerate, classify, count and draw double occurrence words.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="tabulate counting sequences")
    c.add_argument("--classes", default="all,irreducible,strong",
                   help=f"comma-separated, from: {', '.join(CLASS_SEQUENCES)}")
    c.add_argument("--n-max", type=int, default=12)
    c.add_argument("--format", choices=FORMATS, default="aligned-text")
    c.add_argument("--ids", action="store_true", help="label columns by sequence id instead of class name")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="list every word of one size in ascending order")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--class", dest="cls", default="all", help=", ".join(FILTERS))
    e.add_argument("--budget", type=int)
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("classify", help="report the classes a word belongs to")
    k.add_argument("word")
    k.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="compare every recurrence with exhaustive counts")
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--budget", type=int)
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("map-arrangement", help="pointer word of a micronuclear arrangement")
    m.add_argument("arrangement", help='e.g. "-M2 M4 M1 -M5 M3"')
    m.set_defaults(func=cmd_map_arrangement)

    r = sub.add_parser("realizable", help="search for an arrangement mapping onto a word")
    r.add_argument("word")
    r.add_argument("--budget", type=int)
    r.set_defaults(func=cmd_realizable)

    d = sub.add_parser("render", help="draw a word as SVG")
    d.add_argument("word")
    d.add_argument("--style", choices=("chord", "linked"), default="chord")
    d.add_argument("-o", "--output", default="-")
    d.add_argument("--size", type=float, default=320.0)
    d.add_argument("--radius", type=float, default=120.0)
    d.add_argument("--font-size", type=float, default=14.0)
    d.add_argument("--no-base-point", action="store_true")
    d.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    # allow arrangement strings such as "-M2 M4" as positionals
    argv = list(sys.argv[1:] if argv is None else argv)
    if len(argv) >= 2 and argv[0] == "map-arrangement" and argv[1].startswith("-M"):
        argv.insert(1, "--")
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DowError, ValueError) as exc:
        print(f"dowords {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"dowords {args.command}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
