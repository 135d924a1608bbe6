"""Group composition-table failures by row, by which operand sits on the left and
by the kind of result, with one example each.

    python3 scripts/table_breakdown.py --max 8 --mode literal M5 M6
"""

import argparse
from collections import Counter

from closure_ops.ideals import Window
from closure_ops.tables import verify_tables


def outer_kind(expr):
    left = expr.split(" o ")[0]
    return left.split(":")[1].split("(")[0]


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("tables", nargs="*")
    ap.add_argument("--max", type=int, default=8)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--mode", default="corrected", choices=["corrected", "literal"])
    args = ap.parse_args()
    w = Window("cusp", args.max, args.p)
    for rep in verify_tables(w, args.mode, args.tables or None):
        fails = rep.rows("fail")
        by = Counter()
        example = {}
        for c in fails:
            key = (c.row, outer_kind(c.expr), c.got.split("(")[0])
            by[key] += 1
            example.setdefault(key, c)
        tid = rep.checks[0].table if rep.checks else "?"
        print(f"{tid}: {len(rep.rows('pass'))} pass, {len(fails)} fail, "
              f"{len(rep.conflicts)} conflicts, {len(rep.gaps)} uncovered")
        for key, n in sorted(by.items()):
            e = example[key]
            print(f"   {key[0]:<7} outer={key[1]:<7} got={key[2]:<12} x{n:<5} e.g. {e.expr} | {e.params}")
            print(f"           expected {e.expected}; got {e.got}")


if __name__ == "__main__":
    main()
