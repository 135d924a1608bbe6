"""Command-line entry point.

    closure-ops verify --ring cusp --p 2 --max 6 --suite tables
    closure-ops diagram --ring cusp --p 2 --max 5 --op 'cusp:fpoint(m=4,a=0,zero=closed)'

Exit status: 0 when every record passes, 2 when something fails or a finding is
reported, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .config import FORMATS, SUITES, SuiteConfig
from .ideals import UsageError, Window
from .report import EXIT_USAGE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _window_args(p):
    p.add_argument("--ring", required=True, choices=["dvr", "ded", "cusp"])
    p.add_argument("--max", type=int, default=None, help="window degree bound D")
    p.add_argument("--p", type=int, default=2, help="field characteristic (cusp)")
    p.add_argument("--primes", type=int, default=2, help="number of maximal ideals (ded)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="closure-ops", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run verification suites")
    _window_args(v)
    v.add_argument("--suite", action="append", choices=list(SUITES) + ["all"],
                   help="suite to run; repeatable (default all)")
    v.add_argument("--format", default="human", choices=FORMATS)
    v.add_argument("--output", default=None, help="write the report here instead of stdout")
    v.add_argument("--mode", default="corrected", choices=["corrected", "literal"],
                   help="composition-table rows with or without the supplied corrections")

    d = sub.add_parser("diagram", help="DOT text of the window lattice")
    _window_args(d)
    d.add_argument("--op", default=None, help="operation literal, e.g. dvr:f(3)")
    d.add_argument("--output", default=None)
    return ap


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            from .suites import run

            cfg = SuiteConfig(args.ring, args.max, args.p, args.primes, tuple(args.suite or ["all"]),
                              args.format, args.output, args.mode)
            rep = run(cfg)
            _emit(rep.to_structured() if cfg.fmt == "structured" else rep.to_human(), cfg.output)
            return rep.exit_code
        from .diagram import emit_diagram
        from .config import DEFAULT_MAX
        from .ops import parse_op

        w = Window(args.ring, DEFAULT_MAX[args.ring] if args.max is None else args.max, args.p, args.primes)
        op = parse_op(args.op) if args.op else None
        if op is not None:
            op.validate(w)
        _emit(emit_diagram(w, op), args.output)
        return 0
    except UsageError as err:
        print(f"closure-ops: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
