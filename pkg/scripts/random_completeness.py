"""Compare the alpha-cut refutation with the semantic optimum on random bases."""

import argparse
import random
import time

from posslogic.engine import SearchConfig, refute
from posslogic.generators import GroundBaseConfig, random_ground_base, random_goal
from posslogic.semantics import best_necessity, ground_kb
from posslogic.model import Clause


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--engine", choices=["alpha_cut", "best_first"], default="alpha_cut")
    ap.add_argument("--atoms", type=int, default=6)
    ap.add_argument("--clauses", type=int, default=10)
    args = ap.parse_args()

    cfg = GroundBaseConfig(max_atoms=args.atoms, max_clauses=args.clauses)
    agree = below = 0
    start = time.perf_counter()
    for i in range(args.n):
        rng = random.Random(args.seed + i)
        kb = random_ground_base(rng, cfg)
        goal = random_goal(rng, kb)
        got = refute(kb, goal, SearchConfig(engine=args.engine)).necessity
        want = best_necessity(ground_kb(kb), Clause(goal.literals))
        if got == want:
            agree += 1
        elif got < want:
            below += 1
        else:
            print(f"seed {args.seed + i}: unsound {got} > {want}")
    elapsed = time.perf_counter() - start
    print(f"{args.engine}: {agree}/{args.n} exact, {below} below optimum, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
