"""Compute reference values with the naive oracles and freeze them as JSON.

Run once; the test suite compares the fast kernels against the frozen file.

    python scripts/freeze_oracles.py [--out tests/data/oracle_values.json]
"""
from __future__ import annotations

import argparse
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor

from stampbasis import oracles


def _h(args):
    N, k = args
    value, witness = oracles.naive_h(N, k)
    return N, k, value, list(witness)


def _big(args):
    h, k = args
    return h, k, oracles.naive_big_n(h, k)


def _brute(args):
    h, k = args
    return h, k, oracles.brute_n(h, k)


def _chain(args):
    h, k = args
    value, witness = oracles.chain_n(h, k)
    return h, k, value, list(witness)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="tests/data/oracle_values.json")
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--max-n", type=int, default=60)
    args = ap.parse_args()
    t0 = time.time()
    h_cells = [(N, k) for k in (1, 2, 3) for N in range(k + 1, args.max_n + 1)]
    big_cells = [(h, k) for k in (1, 2, 3) for h in range(1, 60) if math.comb(h + k, k) <= args.max_n]
    n_cells = [(h, k) for h in range(1, 9) for k in range(1, 10 - h)]
    brute_cells = [(h, k) for h in range(1, 6) for k in range(1, 7 - h)]
    with ProcessPoolExecutor(args.workers) as pool:
        # largest cells first so the pool stays busy
        h_rows = sorted(pool.map(_h, sorted(h_cells, key=lambda c: -math.comb(c[0] - 1, c[1]))))
        big_rows = sorted(pool.map(_big, big_cells))
        n_rows = sorted(pool.map(_chain, n_cells))
        brute_rows = sorted(pool.map(_brute, brute_cells))
    data = {
        "h_of": [{"N": N, "k": k, "value": v, "witness": w} for N, k, v, w in h_rows],
        "big_n": [{"h": h, "k": k, "value": v} for h, k, v in big_rows],
        "n_chain": [{"h": h, "k": k, "value": v, "witness": w} for h, k, v, w in n_rows],
        "n_brute": [{"h": h, "k": k, "value": v} for h, k, v in brute_rows],
    }
    with open(args.out, "w") as fh:
        json.dump(data, fh, indent=1)
    print(f"wrote {args.out}: {sum(len(v) for v in data.values())} values in {time.time() - t0:.1f} s")


if __name__ == "__main__":
    main()
