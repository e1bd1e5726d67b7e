"""Print exact n, N, h and the normalized ratios for one k over a range of h."""
import argparse

from stampbasis.cli import main

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--range", default="1..8")
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()
    argv = ["ratios", "--k", str(args.k), "--range", args.range]
    raise SystemExit(main(argv + (["--csv"] if args.csv else [])))
