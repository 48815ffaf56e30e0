"""Preferred- and complete-extension enumeration through a SAT solver.

Preferred extensions are found by maximizing complete extensions: an outer
loop asks for any not-yet-covered non-empty complete extension, and an
inner loop (run on a cloned session, so the growth constraints stay local)
repeatedly forces a strict in-set superset until the solver reports none
exists; the last in-set found is subset-maximal, hence preferred. The outer
session then receives a clause requiring some argument outside that
extension, which excludes exactly its subsets from later rounds. When the
very first query of a round is unsatisfiable the enumeration is finished;
if nothing was ever found, the unique preferred extension is the empty set.

The inner loop is correct for any model the solver happens to return, so
any session backend (built-in, external, perturbed seeds) can drive it.
"""

import time

from .cnf import EncodingId, VarLayout, encode, model_in_args
from .solver import BudgetExhausted, Solver


class EnumerationIncomplete(RuntimeError):
    """Budget ran out mid-enumeration; carries what was found so far."""

    def __init__(self, partial):
        super().__init__("enumeration stopped early: solver budget exhausted")
        self.partial = partial


class EnumerationResult:
    """Extensions found plus search statistics.

    ``extensions`` is a tuple of frozensets of argument indices, sorted by
    size descending then by member names; ``complete`` is False only for
    partial results surfaced through EnumerationIncomplete.
    """

    __slots__ = ("semantics", "encoding", "extensions", "stats", "complete")

    def __init__(self, semantics, encoding, extensions, stats, complete=True):
        self.semantics = semantics
        self.encoding = encoding
        self.extensions = tuple(extensions)
        self.stats = dict(stats)
        self.complete = complete

    def __repr__(self):
        return (f"EnumerationResult({self.semantics!r}, {self.encoding.value},"
                f" {len(self.extensions)} extensions, complete={self.complete})")


def _default_factory(formula):
    return Solver.from_formula(formula)


def _sorted_extensions(af, extensions):
    def key(s):
        return (-len(s), tuple(sorted(af.name(i) for i in s)))
    return sorted(extensions, key=key)


def enumerate_preferred(af, encoding=EncodingId.C2, session_factory=None):
    """All preferred extensions of a framework.

    Raises EnumerationIncomplete when the session budget runs out; the
    exception carries the extensions confirmed so far.
    """
    factory = session_factory or _default_factory
    layout = VarLayout(af.k)
    all_args = frozenset(range(1, af.k + 1))
    outer = factory(encode(af, encoding, nonempty=True))
    found = []
    sat_calls = 0
    inner_iterations = 0
    outer_iterations = 0
    t0 = time.perf_counter()

    def result(complete=True):
        extensions = found if found else [frozenset()]
        stats = {"sat_calls": sat_calls,
                 "inner_iterations": inner_iterations,
                 "outer_iterations": outer_iterations,
                 "wall_time_s": time.perf_counter() - t0}
        return EnumerationResult("preferred", encoding,
                                 _sorted_extensions(af, extensions), stats,
                                 complete=complete)

    try:
        while True:
            outer_iterations += 1
            inner = outer.clone()
            candidate = None
            while True:
                inner_iterations += 1
                sat_calls += 1
                model = inner.solve()
                if model is None:
                    break
                candidate = model_in_args(layout, model)
                if candidate == all_args:
                    break
                # grow: freeze the current members, require one more
                for a in sorted(candidate):
                    inner.add_clause([layout.in_var(a)])
                inner.add_clause([layout.in_var(a)
                                  for a in sorted(all_args - candidate)])
            if candidate is None:
                break
            found.append(candidate)
            # exclude this extension and all its subsets from later rounds;
            # an empty clause here (candidate covers everything) correctly
            # makes the outer session permanently unsatisfiable
            outer.add_clause([layout.in_var(a)
                              for a in sorted(all_args - candidate)])
    except BudgetExhausted:
        raise EnumerationIncomplete(result(complete=False)) from None
    return result()


def enumerate_complete(af, encoding=EncodingId.C2, session_factory=None):
    """All complete extensions of a framework (the empty one included when
    it is complete), by blocking each found in-set projection."""
    factory = session_factory or _default_factory
    layout = VarLayout(af.k)
    all_args = frozenset(range(1, af.k + 1))
    session = factory(encode(af, encoding, nonempty=False))
    found = []
    sat_calls = 0
    t0 = time.perf_counter()

    def result(complete=True):
        stats = {"sat_calls": sat_calls,
                 "inner_iterations": sat_calls,
                 "outer_iterations": 0,
                 "wall_time_s": time.perf_counter() - t0}
        return EnumerationResult("complete", encoding,
                                 _sorted_extensions(af, found), stats,
                                 complete=complete)

    try:
        while True:
            sat_calls += 1
            model = session.solve()
            if model is None:
                break
            s = model_in_args(layout, model)
            found.append(s)
            blocking = ([-layout.in_var(a) for a in sorted(s)]
                        + [layout.in_var(a) for a in sorted(all_args - s)])
            session.add_clause(blocking)
    except BudgetExhausted:
        raise EnumerationIncomplete(result(complete=False)) from None
    return result()


def credulous_accept(af, a, encoding=EncodingId.C2, session_factory=None):
    """True iff argument index a is in at least one preferred extension.

    Membership in any complete extension suffices, so this is a single
    satisfiability call with the argument forced in.
    """
    factory = session_factory or _default_factory
    layout = VarLayout(af.k)
    session = factory(encode(af, encoding, nonempty=True))
    session.add_clause([layout.in_var(a)])
    return session.solve() is not None


def skeptical_accept(af, a, encoding=EncodingId.C2, session_factory=None):
    """True iff argument index a is in every preferred extension."""
    result = enumerate_preferred(af, encoding, session_factory)
    return all(a in s for s in result.extensions)
