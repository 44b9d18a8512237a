#!/usr/bin/env python3
"""Sweep slice cohomology over all shifted weight pairs in a box and report
how the vanishing pattern lines up with the congruence and order conditions.

Example:
    python3 scripts/run_block_sweep.py --n 2 --p 31 --max 3
    python3 scripts/run_block_sweep.py --n 3 --p 37 --max 2 --out sweep.json
"""

import argparse
import json
import sys
import time

from decatkit import cohomology
from decatkit.exactlin import is_prime


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--p", type=int, default=31)
    ap.add_argument("--max", type=int, default=3, help="largest weight entry")
    ap.add_argument("--out", help="write the full JSON report here")
    args = ap.parse_args()

    if not is_prime(args.p):
        print(f"p={args.p} is not prime", file=sys.stderr)
        return 2

    started = time.monotonic()
    sweep = cohomology.blocks_sweep(args.n, args.p, args.max)
    elapsed = time.monotonic() - started

    print(f"n={sweep.n} p={sweep.p} entries 0..{sweep.max_entry}")
    print(f"pairs checked      {sweep.pairs}")
    print(f"nonvanishing       {sweep.nonvanishing_pairs}")
    print(f"counterexamples    {len(sweep.counterexamples)}")
    print(f"componentwise form {'holds on every nonvanishing pair' if sweep.componentwise_always else 'fails somewhere'}")
    print(f"root-order form    {'holds on every nonvanishing pair' if sweep.root_order_always else 'fails somewhere'}")
    print(f"elapsed            {elapsed:.2f}s")

    for rep in sweep.counterexamples:
        print(f"  counterexample: a={rep.a} b={rep.b} dims={rep.homology}")

    if args.out:
        with open(args.out, "w") as fh:
            json.dump(sweep.to_json(), fh, indent=2, sort_keys=True)
        print(f"wrote {args.out}")

    return 0 if not sweep.counterexamples else 1


if __name__ == "__main__":
    raise SystemExit(main())
