"""
Which label conditions can be dropped?
======================================

Complete labellings satisfy three forward and three backward implication
families (one pair per label). Of the 64 subsets of those six terms,
only some still pin down exactly the complete labellings. This script
classifies all 64 and digs out a concrete counterexample for one of the
near-miss subsets.
"""

from collections import Counter

from afsat.constraints import Term, classify_all, classify_subset
from afsat.fileformats import serialize_apx

rows = classify_all(find_witnesses=True)
counts = Counter(c.verdict for c in rows)
print(dict(counts))

# per cardinality: how many subsets of each size still work
by_card = Counter((len(c.terms), c.verdict != "weak") for c in rows)
print("size  weak  correct")
for size in range(7):
    print(f"{size:>4} {by_card[(size, False)]:>5} {by_card[(size, True)]:>8}")

# the five minimal characterizations, by their term names
for c in rows:
    if c.verdict == "correct_non_redundant":
        print("minimal:", "+".join(sorted(t.value for t in c.terms)))

# the interesting frontier: four-term subsets that still fail. Each one
# carries a small framework and a labelling that slips through.
for c in rows:
    if c.verdict == "weak" and len(c.terms) == 4:
        af, lab = c.witness
        print("\nweak despite four terms:",
              "+".join(sorted(t.value for t in c.terms)))
        print(serialize_apx(af).strip())
        print("leaked labelling:", lab.as_dict(af))
        break

# classify_subset answers one-off questions too
verdict = classify_subset({Term.IN_FWD, Term.OUT_FWD, Term.UNDEC_FWD},
                          find_witnesses=False)
print("\nforward-only terms:", verdict.verdict)
