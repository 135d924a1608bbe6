"""Run every suite on the default windows plus the larger table window.

Writes one structured report per window into ``--out`` and prints a tally line
for each. Usage::

    python3 scripts/run_experiments.py --out results
"""

import argparse
import time
from pathlib import Path

from closure_ops.config import SuiteConfig
from closure_ops.suites import run

WINDOWS = [
    ("dvr", dict(max_deg=8)),
    ("ded", dict(max_deg=4, primes=2)),
    ("ded", dict(max_deg=5, primes=2, suites=("prime-scan",))),
    ("cusp", dict(max_deg=6, p=2)),
    ("cusp", dict(max_deg=5, p=3)),
    ("cusp", dict(max_deg=8, p=2, suites=("tables", "act", "prime-scan", "exceptional"))),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--mode", default="corrected", choices=["corrected", "literal"])
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for ring, kw in WINDOWS:
        cfg = SuiteConfig(ring, fmt="structured", mode=args.mode, **kw)
        t0 = time.perf_counter()
        rep = run(cfg)
        dt = time.perf_counter() - t0
        w = cfg.window
        name = f"{w}_{'-'.join(cfg.selected()) if len(cfg.selected()) < 6 else 'all'}_{args.mode}.txt"
        name = name.replace("(", "_").replace(")", "").replace(",", "_").replace("=", "")
        (out / name).write_text(rep.to_structured())
        c = rep.counts()
        print(f"{str(w):<22} {dt:6.1f}s exit={rep.exit_code} "
              + " ".join(f"{k}={v}" for k, v in sorted(c.items())) + f"  -> {out / name}")


if __name__ == "__main__":
    main()
