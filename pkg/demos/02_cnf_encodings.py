"""
Six ways to compile a framework to CNF
======================================

Every complete labelling obeys six implication families between an
argument's label and its attackers' labels. Compiling different subsets
of those families gives six logically equivalent encodings with very
different clause mixes; this script encodes one framework under all of
them and shows the DIMACS that the solver actually sees.
"""

from itertools import product

from afsat.cnf import (ENCODINGS, EncodingId, encode, model_to_labelling,
                       satisfies, standard_comments, to_dimacs, VarLayout)
from afsat.core import ArgumentationFramework, is_complete_labelling
from afsat.oracle import oracle_complete_labellings

af = ArgumentationFramework.from_names(
    "abc", [("a", "b"), ("b", "a"), ("b", "c")])

# variable numbering is fixed: argument i owns variables 3i-2 / 3i-1 / 3i
# for the labels in / out / undec
layout = VarLayout(af.k)
print("in(b) is variable", layout.in_var(af.index("b")))

# clause counts differ a lot even on three arguments
for enc in ENCODINGS:
    formula = encode(af, enc, nonempty=False)
    print(f"{enc.value:<4} {len(formula.clauses):>3} clauses")

# the DIMACS text is byte-stable, comments included
formula = encode(af, EncodingId.C2)
print()
print(to_dimacs(formula, standard_comments(af, EncodingId.C2)))

# all six encodings accept exactly the complete labellings and nothing
# else; check it the slow way by trying every assignment
want = oracle_complete_labellings(af)
for enc in ENCODINGS:
    formula = encode(af, enc, nonempty=False)
    found = set()
    for bits in product((False, True), repeat=formula.num_vars):
        model = (None,) + bits
        if satisfies(formula, model):
            found.add(model_to_labelling(layout, model))
    assert found == want, enc
print(f"model sets of all six encodings = {len(want)} complete labellings")
