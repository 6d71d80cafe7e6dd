"""Seeded random search for a diagram with gamma2_bar = t^2.

    python scripts/search_gamma2.py --candidates 1000000 --max-n 10 --seed 20240611

Prints progress, any hit, any code with gamma = 2 + 4t and gamma2_bar = t^2,
and how often the number of opposite-parity interlaced pairs was odd.
"""
import argparse

from vkinv.codec import render_gauss_code
from vkinv.invariants import gamma2_oracle
from vkinv.search import SearchConfig, run_search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--candidates", type=int, default=1_000_000)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--time-limit", type=float, default=300.0)
    ap.add_argument("--all", action="store_true", help="keep going after the first hit")
    args = ap.parse_args()

    cfg = SearchConfig(max_candidates=args.candidates, min_n=args.min_n, max_n=args.max_n,
                       seed=args.seed, time_limit=args.time_limit, stop_at_first=not args.all)

    def progress(k, res):
        print(f"{k:>8} candidates, {len(res.hits)} hits, odd |P| {res.pair_count_parity[1]}", flush=True)

    res = run_search(cfg, progress)
    print(f"done: {res.candidates} candidates in {res.elapsed:.1f}s")
    print(f"candidates with nonempty pair set: {res.nonempty_pairs}")
    print(f"|P| parity histogram: {res.pair_count_parity}")
    print(f"t^3 terms seen: {len(res.t3_violations)}")
    for k in res.hits:
        print(f"hit: {render_gauss_code(k)}  oracle: {gamma2_oracle(k)}")
    for k in res.watched:
        print(f"gamma = 2 + 4t, gamma2_bar = t^2: {render_gauss_code(k)}")
    if not res.hits:
        print("no code with gamma2_bar = t^2 found")


if __name__ == "__main__":
    main()
