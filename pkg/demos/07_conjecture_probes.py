"""Probing open claims.  Some observed patterns have no proof yet, so the
verifier never marks them PASS: all-clear probes return EVIDENCE, and a
single exact miss returns FAIL with a replayable witness.  Exit codes ignore
EVIDENCE; only FAIL is an error.
"""

import dataclasses
import random
from fractions import Fraction

from affinefrieze import (FriezeTable, build_affine_quiver, conjecture_specs,
                          probe_conjecture)

rng = random.Random(20260816)


def rand_seed(n):
    return [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]


q = build_affine_quiver("E8")
specs = conjecture_specs(q)
print("open claims probed for the largest tree:",
      [s["name"] for s in specs])

tables = [FriezeTable(q, x0=rand_seed(q.n)) for _ in range(8)]
for spec in specs:
    rep = probe_conjecture(q, spec, tables, window=12)
    print(f"  {rep.verdict.value:9s} {rep.id}  ({rep.trials} seeds, "
          f"window {rep.n_window})")
    assert rep.verdict.value == "EVIDENCE"

# a deliberately wrong prediction shows the FAIL path and witness format:
# the witness carries the exact seed and offset that broke it
bogus = dict(specs[0], name="gap15_period3",
             citation="deliberately wrong variant for the demo",
             pred=lambda V, n: ((V(0, n + 3 + 30) + V(0, n + 3)) / V(0, n + 3 + 15)
                                == (V(0, n + 30) + V(0, n)) / V(0, n + 15)))
rep = probe_conjecture(q, bogus, tables[:2], window=12)
print(f"\nwrong variant: {rep.verdict.value} at n = {rep.witness['n']}")
print("witness seed:", rep.witness["seed"])
assert rep.verdict.value == "FAIL"

# replay the witness: rebuild the table from the recorded seed and watch the
# same predicate fail at the same offset
seed = [Fraction(s) for s in rep.witness["seed"].split(",")]
tb = FriezeTable(q, x0=seed)
tb.extend(rep.witness["n"] + 3 + 32)
V = lambda v, n: tb.value(v, n)
n = rep.witness["n"]
assert not bogus["pred"](V, n)
print("witness replays: the recorded seed fails at the recorded offset")

# E7 has a closed-form claim that holds in every exact test but has no proof
q7 = build_affine_quiver("E7")
t7 = [FriezeTable(q7, x0=rand_seed(q7.n)) for _ in range(8)]
for spec in conjecture_specs(q7):
    rep = probe_conjecture(q7, spec, t7, window=12)
    print(f"\n{rep.id}: {rep.verdict.value}")
    assert rep.verdict.value == "EVIDENCE"
