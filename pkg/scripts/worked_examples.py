"""Run the worked examples on the bundled knowledge bases and print results."""

import argparse

from posslogic.engine import SearchConfig, refute
from posslogic.hypotheses import HypothesisSet, hypothesize
from posslogic.parser import parse_goal, parse_literal, serialize_trace
from posslogic.revision import check_min_relation, inconsistency_degree, preferred_extensions, query
from posslogic.cli import load_kb
from posslogic.model import format_number as fmt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trace", action="store_true", help="print the meeting proof trace")
    args = ap.parse_args()

    meeting = load_kb("meeting.kb")
    r = refute(meeting, parse_goal("~quiet(m)"), SearchConfig(collect_all_refutations=True))
    print("meeting: ~quiet(m)", r.best, r.status.value, "| refutations:", ", ".join(str(t.valuation) for t in r.all))
    if args.trace:
        print(serialize_trace(r.trace), end="")

    print("tweety + bird: flies(Tweety)", refute(load_kb("tweety-bird.kb"), parse_goal("flies(Tweety)")).best)
    print("tweety + antarctica: ~flies(Tweety)", refute(load_kb("tweety-antarctica.kb"), parse_goal("~flies(Tweety)")).best)

    updated = load_kb("meeting-updated.kb")
    print("updated meeting: Inc =", fmt(inconsistency_degree(updated)))
    for g in ("quiet(m)", "~quiet(m)"):
        print(f"  {g}:", query(updated, parse_goal(g)))
    m = check_min_relation(updated, parse_goal("quiet(m)"))
    print(f"  min({fmt(m.beta)}, {fmt(m.beta_prime)}) = Inc: {m.holds}")

    hs = HypothesisSet((parse_literal("comes(Bob,X)"),))
    answer = hypothesize(meeting, hs, parse_goal("~quiet(m)"))
    print("hypothesis comes(Bob,X):", " ; ".join(map(str, answer.alternatives)))
    for value in (True, False, None):
        print(f"  comes(Bob,m)={value}:", answer.evaluate({parse_literal("comes(Bob,m)"): value}))

    for e in preferred_extensions(load_kb("extensions.kb")):
        print("extension", e, "rank", e.rank)


if __name__ == "__main__":
    main()
