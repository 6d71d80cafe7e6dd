"""Exhaustive plus random comparison of the fast invariants against their oracles.

    python scripts/oracle_sweep.py --exhaustive 4 --random 10000 --seed 1
"""
import argparse
import itertools
import random
import time

from vkinv import invariants as inv
from vkinv.codec import render_gauss_code
from vkinv.moves import random_code, slots_to_code


def layouts(n):
    def rec(free):
        if not free:
            yield []
            return
        for i in range(1, len(free)):
            for m in rec(free[1:i] + free[i + 1:]):
                yield [(free[0], free[i])] + m
    for m in rec(list(range(2 * n))):
        chord_of = [0] * (2 * n)
        for k, (a, b) in enumerate(m):
            chord_of[a] = chord_of[b] = k
        yield chord_of


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exhaustive", type=int, default=4, help="all codes with at most this many chords")
    ap.add_argument("--random", type=int, default=10_000)
    ap.add_argument("--min-n", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    codes = []
    for n in range(args.exhaustive + 1):
        for chord_of in layouts(n):
            for sg in itertools.product((1, -1), repeat=n):
                for of in itertools.product((True, False), repeat=n):
                    codes.append(slots_to_code(chord_of, list(sg), list(of)))
    rng = random.Random(args.seed)
    codes += [random_code(rng.randint(args.min_n, args.max_n), rng) for _ in range(args.random)]

    t0 = time.perf_counter()
    mismatches = 0
    for c in codes:
        if inv.gamma(c) != inv.gamma_oracle(c) or inv.gamma2_bar(c) != inv.gamma2_oracle(c):
            mismatches += 1
            print("mismatch:", render_gauss_code(c))
    print(f"{len(codes)} codes, {mismatches} mismatches, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
