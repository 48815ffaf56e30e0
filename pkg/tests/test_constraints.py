"""Classification of labelling-condition term subsets."""

from itertools import combinations

import pytest

from afsat.constraints import (
    CORRECT_NON_REDUNDANT,
    MINIMAL_CORRECT,
    REDUNDANT,
    TERMS,
    WEAK,
    Term,
    all_subsets,
    classify_all,
    classify_subset,
    find_witness,
    satisfies_terms,
    witness_battery,
)
from afsat.core import IN, OUT, UNDEC, Labelling, is_complete_labelling
from afsat.oracle import all_labellings

from conftest import SELF1, make_af

FWD3 = frozenset({Term.IN_FWD, Term.OUT_FWD, Term.UNDEC_FWD})
BWD3 = frozenset({Term.IN_BWD, Term.OUT_BWD, Term.UNDEC_BWD})

# the six four-term subsets that still admit non-complete labellings
WEAK4 = [
    frozenset({Term.UNDEC_FWD, Term.UNDEC_BWD, Term.IN_FWD, Term.OUT_BWD}),
    frozenset({Term.UNDEC_FWD, Term.UNDEC_BWD, Term.IN_BWD, Term.OUT_FWD}),
    frozenset({Term.OUT_FWD, Term.OUT_BWD, Term.IN_FWD, Term.UNDEC_BWD}),
    frozenset({Term.OUT_FWD, Term.OUT_BWD, Term.IN_BWD, Term.UNDEC_FWD}),
    frozenset({Term.IN_FWD, Term.IN_BWD, Term.OUT_FWD, Term.UNDEC_BWD}),
    frozenset({Term.IN_FWD, Term.IN_BWD, Term.OUT_BWD, Term.UNDEC_FWD}),
]


class TestTermSemantics:
    def test_out_without_in_attacker(self):
        # a self-attacker labelled out: passes these four terms yet the
        # labelling is not complete
        lab = Labelling([OUT])
        terms = {Term.UNDEC_FWD, Term.UNDEC_BWD, Term.IN_FWD, Term.OUT_BWD}
        assert satisfies_terms(SELF1, lab, terms)
        assert not is_complete_labelling(SELF1, lab)
        assert not satisfies_terms(SELF1, lab, {Term.OUT_FWD})

    def test_unattacked_argument(self):
        af = make_af("a", [])
        assert satisfies_terms(af, Labelling([IN]), TERMS)
        # in_bwd forces unattacked arguments in
        assert not satisfies_terms(af, Labelling([OUT]), {Term.IN_BWD})
        assert not satisfies_terms(af, Labelling([UNDEC]), {Term.IN_BWD})
        # undec_fwd forbids undec without an undec attacker
        assert not satisfies_terms(af, Labelling([UNDEC]), {Term.UNDEC_FWD})
        # but out alone only trips out_fwd
        assert satisfies_terms(af, Labelling([OUT]), {Term.IN_FWD, Term.OUT_BWD})
        assert not satisfies_terms(af, Labelling([OUT]), {Term.OUT_FWD})

    def test_empty_subset_accepts_everything(self, small_afs):
        af = small_afs[0]
        for lab in all_labellings(af.k):
            assert satisfies_terms(af, lab, frozenset())

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            satisfies_terms(SELF1, Labelling([IN, IN]), TERMS)

    def test_all_six_terms_equal_completeness(self):
        for af in witness_battery(3):
            for lab in all_labellings(af.k):
                assert satisfies_terms(af, lab, TERMS) == is_complete_labelling(af, lab)


class TestMinimalSets:
    def test_the_five(self):
        assert len(MINIMAL_CORRECT) == 5
        assert FWD3 in MINIMAL_CORRECT
        assert BWD3 in MINIMAL_CORRECT
        # no minimal set contains another
        for m in MINIMAL_CORRECT:
            for o in MINIMAL_CORRECT:
                assert m is o or not m < o

    def test_each_is_correct_on_battery(self):
        """Each minimal subset carves out exactly the complete labellings."""
        for terms in MINIMAL_CORRECT:
            for af in witness_battery(3):
                for lab in all_labellings(af.k):
                    assert (satisfies_terms(af, lab, terms)
                            == is_complete_labelling(af, lab)), (terms, af, lab)

    def test_each_is_minimal(self):
        for terms in MINIMAL_CORRECT:
            for t in terms:
                assert classify_subset(terms - {t}, find_witnesses=False).verdict == WEAK


class TestClassification:
    def test_verdict_spot_checks(self):
        assert classify_subset(frozenset(TERMS)).verdict == REDUNDANT
        assert classify_subset(FWD3).verdict == CORRECT_NON_REDUNDANT
        assert classify_subset(FWD3 | {Term.IN_BWD}).verdict == REDUNDANT
        assert classify_subset(frozenset()).verdict == WEAK
        assert classify_subset({Term.IN_FWD}).verdict == WEAK

    def test_subset_enumeration(self):
        subsets = all_subsets()
        assert len(subsets) == 64
        assert len(set(subsets)) == 64
        sizes = [len(s) for s in subsets]
        assert sizes == sorted(sizes)

    def test_counts(self):
        results = classify_all(find_witnesses=False)
        by_verdict = {}
        for c in results:
            by_verdict.setdefault(c.verdict, []).append(c.terms)
        assert len(by_verdict[WEAK]) == 46
        assert len(by_verdict[CORRECT_NON_REDUNDANT]) == 5
        assert len(by_verdict[REDUNDANT]) == 13
        assert set(by_verdict[CORRECT_NON_REDUNDANT]) == set(MINIMAL_CORRECT)

    def test_counts_by_cardinality(self):
        results = classify_all(find_witnesses=False)
        weak_by_size = {r: 0 for r in range(7)}
        for c in results:
            if c.verdict == WEAK:
                weak_by_size[len(c.terms)] += 1
        assert weak_by_size == {0: 1, 1: 6, 2: 15, 3: 18, 4: 6, 5: 0, 6: 0}

    def test_weak_four_term_subsets(self):
        got = [c.terms for c in classify_all(find_witnesses=False)
               if c.verdict == WEAK and len(c.terms) == 4]
        assert sorted(got, key=lambda s: sorted(t.value for t in s)) == \
            sorted(WEAK4, key=lambda s: sorted(t.value for t in s))

    def test_three_term_correct_sets(self):
        correct3 = [c.terms for c in classify_all(find_witnesses=False)
                    if c.verdict != WEAK and len(c.terms) == 3]
        assert set(correct3) == {FWD3, BWD3}


class TestWitnesses:
    def test_every_weak_subset_has_verified_witness(self):
        for c in classify_all(find_witnesses=True):
            if c.verdict == WEAK:
                assert c.witness is not None, c
                af, lab = c.witness
                assert satisfies_terms(af, lab, c.terms)
                assert not is_complete_labelling(af, lab)
            else:
                assert c.witness is None

    def test_witnesses_deterministic(self):
        first = find_witness({Term.IN_FWD})
        second = find_witness({Term.IN_FWD})
        assert first[0] == second[0] and first[1] == second[1]

    def test_no_witness_for_correct_set(self):
        with pytest.raises(LookupError):
            find_witness(FWD3)

    def test_battery_shape(self):
        # non-isomorphic digraphs with self-loops on 1, 2, 3 nodes
        assert len(witness_battery(1)) == 2
        assert len(witness_battery(2)) == 12
        assert len(witness_battery(3)) == 116
        ks = [af.k for af in witness_battery(3)]
        assert ks == sorted(ks)


class TestCorrectSetsAreExactlySupersets:
    def test_exhaustive_equivalence_up_to_three_args(self):
        """A subset agrees with completeness on every small framework iff it
        contains a minimal correct subset; checked by brute force."""
        battery = witness_battery(3)
        for r in range(7):
            for terms in map(frozenset, combinations(TERMS, r)):
                agrees = all(
                    satisfies_terms(af, lab, terms) == is_complete_labelling(af, lab)
                    for af in battery for lab in all_labellings(af.k))
                expected = any(m <= terms for m in MINIMAL_CORRECT)
                assert agrees == expected, terms
