"""
Frameworks, semantics, and the exhaustive oracle
================================================

Build a small argumentation framework, poke at the classic semantics
predicates, and let the oracle list every extension by brute force.
"""

from afsat.core import (ArgumentationFramework, is_admissible, is_complete,
                        is_conflict_free, is_preferred,
                        labelling_from_extension)
from afsat.fileformats import parse, serialize_apx
from afsat.oracle import oracle_complete, oracle_preferred

# a five-argument framework with a contested cycle and one bystander:
#   a <-> b,  b -> c -> d -> e,  e -> c
af = ArgumentationFramework.from_names(
    "abcde",
    [("a", "b"), ("b", "a"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "c")])
print(af)

# the same framework round-trips through the statement format
text = serialize_apx(af)
print(text)
assert parse(text) == af

# indices are 1-based; sets of arguments are sets of indices
a, b, c, d, e = (af.index(x) for x in "abcde")

# {a} is admissible (a defends itself against b); {c} is conflict-free
# but not admissible, since nothing in {c} answers b's attack
print("conflict-free {a}:  ", is_conflict_free(af, {a}))
print("admissible   {a}:  ", is_admissible(af, {a}))
print("admissible   {c}:  ", is_admissible(af, {c}))

# completeness also demands taking in everything the set defends
print("complete {a}:      ", is_complete(af, {a}))
print("complete {a, c}:   ", is_complete(af, {a, c}))

# the oracle scans all 2^k subsets, so it is gospel on small inputs
names = lambda s: "{" + ",".join(sorted(af.name(i) for i in s)) + "}"
print("complete extensions:", sorted(names(s) for s in oracle_complete(af)))
print("preferred extensions:", sorted(names(s) for s in oracle_preferred(af)))

for s in oracle_preferred(af):
    assert is_preferred(af, s)
    # each extension corresponds to exactly one three-valued labelling
    lab = labelling_from_extension(af, s)
    print(f"labelling for {names(s)}:", lab.as_dict(af))
