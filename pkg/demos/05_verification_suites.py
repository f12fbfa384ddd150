"""The verification suites: theorem claims re-checked at desk scale.

Each suite builds its witnesses, re-solves them, and re-runs the family
recognizers; randomized suites draw seeded samples so reports reproduce
byte-for-byte.  Family-level upper bounds cannot be verified exhaustively,
so the report wording separates "construction-verified" equalities from
"bound spot-checked" properties.

    python demos/05_verification_suites.py
"""

from mngraph.verification import (
    SUITE_IDS,
    verify_bound_properties,
    verify_lemma1_equivalence,
    verify_theorem_suite,
)

for suite in SUITE_IDS:
    report = verify_theorem_suite(suite)
    print(report.text())

# The pairwise-seeing shortcut against the quotient-search ground truth,
# over every connected graph on at most 5 vertices with 25 random
# labelings each for (1,1) and (0,2).
report = verify_lemma1_equivalence(seed=0)
print(report.text())

# Randomized bound properties: the sandwich chain, the Delta^2+1 cap and
# the seeing-graph degeneracy bound on 120 seeded samples (the acceptance
# suite runs 500).
report = verify_bound_properties(seed=0, samples=120)
print(report.text())
