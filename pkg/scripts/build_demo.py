"""Build and verify the two essential-subset constructions on small grids."""
import argparse
import time

from stampbasis.construct.section3 import build_section3
from stampbasis.construct.section4 import build_section4, crt_check
from stampbasis.errors import Infeasible


def fixed_h(hs, ks):
    print("fixed h: h,k,s,P,result")
    for h in hs:
        for k in ks:
            try:
                plan, _ = build_section3(h, k)
                print(f"{h},{k},{plan.s},{plan.P},ok")
            except Infeasible as exc:
                print(f"{h},{k},-,-,infeasible: {exc}")


def fixed_k(k, hs, budget):
    print("fixed k: h,k,primes,count,crt,seconds")
    for h in hs:
        start = time.time()
        try:
            plan, _ = build_section4(h, k, prime_budget=budget)
        except Infeasible as exc:
            print(f"{h},{k},-,-,-,infeasible: {exc}")
            continue
        chk = crt_check(plan)
        print(f"{h},{k},{'x'.join(map(str, plan.primes))},{plan.count},{chk.holds},{time.time() - start:.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prime-budget", type=int, default=10**6)
    args = ap.parse_args()
    fixed_h([2, 3, 4], [24, 30, 60, 120, 300])
    fixed_k(2, [10, 20, 30, 40], args.prime_budget)
