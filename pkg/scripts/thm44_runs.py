"""Sweep the A_t family over a list of primes and report formula agreement and run lengths."""
import argparse

from stampbasis.construct.thm44 import consecutive_run, sweep
from stampbasis.primes import floor_kth_root, sieve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--lo", type=int, default=1000)
    ap.add_argument("--hi", type=int, default=10000)
    ap.add_argument("--count", type=int, default=20, help="primes sampled evenly from [lo, hi]")
    args = ap.parse_args()

    primes = [int(p) for p in sieve(args.hi).primes if p >= args.lo]
    step = max(1, len(primes) // args.count)
    print("p,x,swept,mismatches,v0_bfs,v0_formula,run")
    total = 0
    for p in primes[::step][: args.count]:
        pts = sweep(p, args.k)
        bad = sum(not pt.agrees for pt in pts)
        total += bad
        print(f"{p},{floor_kth_root(p, args.k)},{len(pts)},{bad},"
              f"{pts[0].verified_offset},{pts[0].formula_offset},{consecutive_run(pts)}")
    print(f"# total mismatches: {total}")


if __name__ == "__main__":
    main()
