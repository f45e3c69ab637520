"""Compare probability-bounded resolution with the optimum of the linear system.

The linear optimum is found by scanning the 4-point simplex on a grid.
Two readings are reported: the linear system in the four unknowns as
stated alongside the example, and the direct world semantics of the three
probabilistic clauses.
"""

import argparse
from fractions import Fraction

from posslogic.model import Clause, Literal
from posslogic.probabilistic import prob_clause, prob_lower_bound, saturate_prob


def grid_min(constraints, objective, step):
    best = None
    for a in range(step + 1):
        for b in range(step + 1 - a):
            for c in range(step + 1 - a - b):
                x = (a, b, c, step - a - b - c)
                if all(sum(k * v for k, v in zip(coeffs, x)) >= bound * step for coeffs, bound in constraints):
                    value = sum(k * v for k, v in zip(objective, x))
                    best = value if best is None else min(best, value)
    return Fraction(best, step)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--step", type=int, default=100, help="grid resolution (1/step)")
    args = ap.parse_args()

    clauses = [prob_clause(["~r", "q"], "0.7"), prob_clause(["r"], "0.6"), prob_clause(["~q"], "0.5")]
    for c, w in sorted(saturate_prob(clauses).items(), key=lambda kv: str(kv[0])):
        print(f"derived {c} >= {w}")
    target = Clause((Literal("q"), Literal("r")))
    print("resolution bound on q | r:", prob_lower_bound(clauses, target))

    f = Fraction
    system = [((1, 1, 0, 1), f(7, 10)), ((0, 0, 1, 1), f(3, 5)), ((1, 0, 1, 0), f(1, 2))]
    print("linear-system optimum:", grid_min(system, (1, 0, 1, 1), args.step))
    worlds = [((1, 1, 0, 1), f(7, 10)), ((1, 0, 1, 0), f(3, 5)), ((0, 0, 1, 1), f(1, 2))]
    print("world-semantics optimum:", grid_min(worlds, (1, 1, 1, 0), args.step))


if __name__ == "__main__":
    main()
