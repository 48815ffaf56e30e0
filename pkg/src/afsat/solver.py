"""Built-in CDCL SAT solver.

A deterministic conflict-driven clause-learning solver: two-watched-literal
propagation, first-UIP conflict analysis, exponentially decayed variable
activities with saved phases, and geometric restarts. Ties in branching
always break toward the lowest variable index, so runs are reproducible;
a nonzero seed perturbs the initial activities and phases for variance
experiments.

Sessions are incremental in one direction only: clauses can be added
between ``solve()`` calls, never removed. ``clone()`` produces an
independent session with the same logical content, which is how callers
explore restricted subproblems without disturbing the parent session.
"""

import random
from heapq import heapify, heappop, heappush


class BudgetExhausted(RuntimeError):
    """The conflict budget ran out before the call could finish."""


class ConflictBudget:
    """Pool of conflicts that a session and all its clones may spend."""

    __slots__ = ("limit", "used")

    def __init__(self, limit):
        if limit < 1:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExhausted(f"conflict budget of {self.limit} exhausted")


class Solver:
    """One solving session over a fixed variable range."""

    RESTART_FIRST = 100
    RESTART_MULT = 1.5
    VAR_DECAY = 0.95

    def __init__(self, num_vars, seed=0, budget=None):
        if num_vars < 0:
            raise ValueError("negative variable count")
        n = num_vars
        self.num_vars = n
        self._n = n
        # literal state indexed lit+n: True/False/None
        self._val = [None] * (2 * n + 1)
        self._watches = [[] for _ in range(2 * n + 1)]
        self._clauses = []  # length >= 2 clauses: original, added, learned
        self._trail = []
        self._trail_lim = []
        self._qhead = 0
        self._reason = [None] * (n + 1)
        self._level = [0] * (n + 1)
        self._activity = [0.0] * (n + 1)
        self._phase = [False] * (n + 1)
        self._seen = bytearray(n + 1)
        self._var_inc = 1.0
        self._unsat = False
        self._budget = budget
        self._seed = seed
        self.stats = {"decisions": 0, "propagations": 0, "conflicts": 0,
                      "restarts": 0}
        if seed:
            rng = random.Random(seed)
            for v in range(1, n + 1):
                self._activity[v] = rng.random() * 1e-4
                self._phase[v] = rng.random() < 0.5
        self._heap = [(-self._activity[v], v) for v in range(1, n + 1)]
        heapify(self._heap)

    @classmethod
    def from_formula(cls, formula, seed=0, budget=None):
        s = cls(formula.num_vars, seed=seed, budget=budget)
        for clause in formula.clauses:
            s.add_clause(clause)
        return s

    # ------------------------------------------------------------------
    # assignment plumbing

    def _assign(self, lit, reason):
        n = self._n
        self._val[lit + n] = True
        self._val[-lit + n] = False
        v = lit if lit > 0 else -lit
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(lit)

    def _enqueue(self, lit, reason):
        cur = self._val[lit + self._n]
        if cur is True:
            return True
        if cur is False:
            return False
        self._assign(lit, reason)
        return True

    def _backtrack(self, target):
        if len(self._trail_lim) <= target:
            return
        n = self._n
        limit = self._trail_lim[target]
        trail = self._trail
        val = self._val
        for t in range(len(trail) - 1, limit - 1, -1):
            lit = trail[t]
            v = lit if lit > 0 else -lit
            self._phase[v] = lit > 0
            val[lit + n] = None
            val[-lit + n] = None
            self._reason[v] = None
            heappush(self._heap, (-self._activity[v], v))
        del trail[limit:]
        del self._trail_lim[target:]
        self._qhead = limit

    # ------------------------------------------------------------------
    # clause management

    def add_clause(self, lits):
        """Add a clause; legal between solve() calls.

        Literals false under the fixed (level-0) assignments are dropped and
        clauses already satisfied there are skipped. An empty clause, or a
        unit contradicting the fixed assignments, makes the session
        permanently unsatisfiable.
        """
        if self._unsat:
            return
        self._backtrack(0)
        n = self._n
        seen = set()
        out = []
        satisfied = False
        for lit in lits:
            lit = int(lit)
            if lit == 0 or abs(lit) > n:
                raise ValueError(f"literal out of range: {lit}")
            if -lit in seen:
                return  # tautology
            if lit in seen:
                continue
            seen.add(lit)
            cur = self._val[lit + n]
            if cur is True:
                satisfied = True
            elif cur is None:
                out.append(lit)
        if satisfied:
            return
        if not out:
            self._unsat = True
            return
        if len(out) == 1:
            if not self._enqueue(out[0], None):
                self._unsat = True
            return
        self._attach(out)

    def _attach(self, clause):
        n = self._n
        self._clauses.append(clause)
        self._watches[clause[0] + n].append(clause)
        self._watches[clause[1] + n].append(clause)

    # ------------------------------------------------------------------
    # search

    def _propagate(self):
        n = self._n
        val = self._val
        watches = self._watches
        trail = self._trail
        props = 0
        while self._qhead < len(trail):
            lit = trail[self._qhead]
            self._qhead += 1
            props += 1
            fl = -lit  # the literal that just became false
            wl = watches[fl + n]
            i = 0
            j = 0
            end = len(wl)
            confl = None
            while i < end:
                clause = wl[i]
                i += 1
                if clause[0] == fl:
                    clause[0] = clause[1]
                    clause[1] = fl
                first = clause[0]
                fv = val[first + n]
                if fv is True:
                    wl[j] = clause
                    j += 1
                    continue
                swapped = False
                for t in range(2, len(clause)):
                    lt = clause[t]
                    if val[lt + n] is not False:
                        clause[1] = lt
                        clause[t] = fl
                        watches[lt + n].append(clause)
                        swapped = True
                        break
                if swapped:
                    continue
                wl[j] = clause
                j += 1
                if fv is False:
                    # conflict; keep the unvisited tail of the watch list
                    while i < end:
                        wl[j] = wl[i]
                        j += 1
                        i += 1
                    confl = clause
                    break
                self._assign(first, clause)
            del wl[j:]
            if confl is not None:
                self.stats["propagations"] += props
                return confl
        self.stats["propagations"] += props
        return None

    def _bump(self, v):
        act = self._activity[v] + self._var_inc
        self._activity[v] = act
        if act > 1e100:
            scale = 1e-100
            for u in range(1, self._n + 1):
                self._activity[u] *= scale
            self._var_inc *= scale
            self._heap = [(-self._activity[u], u)
                          for u in range(1, self._n + 1)]
            heapify(self._heap)
        else:
            heappush(self._heap, (-act, v))

    def _analyze(self, confl):
        level = self._level
        reason = self._reason
        trail = self._trail
        seen = self._seen
        cur = len(self._trail_lim)
        learnt = [0]
        to_clear = []
        counter = 0
        p = None
        idx = len(trail) - 1
        c = confl
        while True:
            # skip c[0] for reason clauses: it is the implied literal itself
            for t in range(0 if p is None else 1, len(c)):
                q = c[t]
                v = q if q > 0 else -q
                if not seen[v] and level[v] > 0:
                    seen[v] = 1
                    to_clear.append(v)
                    self._bump(v)
                    if level[v] >= cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while True:
                p = trail[idx]
                v = p if p > 0 else -p
                idx -= 1
                if seen[v]:
                    break
            counter -= 1
            if counter == 0:
                break
            # only the decision lacks a reason and it is consumed last
            c = reason[v]
        learnt[0] = -p
        for v in to_clear:
            seen[v] = 0
        if len(learnt) == 1:
            return learnt, 0
        mi = 1
        for t in range(2, len(learnt)):
            if level[abs(learnt[t])] > level[abs(learnt[mi])]:
                mi = t
        learnt[1], learnt[mi] = learnt[mi], learnt[1]
        return learnt, level[abs(learnt[1])]

    def _decide(self):
        n = self._n
        val = self._val
        act = self._activity
        heap = self._heap
        while heap:
            negact, v = heappop(heap)
            if val[v + n] is None and -negact == act[v]:
                self._trail_lim.append(len(self._trail))
                self._assign(v if self._phase[v] else -v, None)
                self.stats["decisions"] += 1
                return
        # stale heap (rare): fall back to the lowest unassigned index
        for v in range(1, n + 1):
            if val[v + n] is None:
                self._trail_lim.append(len(self._trail))
                self._assign(v if self._phase[v] else -v, None)
                self.stats["decisions"] += 1
                return
        raise AssertionError("decide called with a full assignment")

    def solve(self):
        """Search for a model of everything added so far.

        Returns a list indexed by variable (entry 0 unused, True/False per
        variable) or None when unsatisfiable. Raises BudgetExhausted when
        the shared conflict budget runs out; the outcome is then unknown and
        the session stays usable.
        """
        if self._unsat:
            return None
        self._backtrack(0)
        n = self._n
        restart_limit = self.RESTART_FIRST
        since_restart = 0
        while True:
            confl = self._propagate()
            if confl is not None:
                self.stats["conflicts"] += 1
                if self._budget is not None:
                    try:
                        self._budget.spend(1)
                    except BudgetExhausted:
                        self._backtrack(0)
                        raise
                if not self._trail_lim:
                    self._unsat = True
                    return None
                learnt, bt = self._analyze(confl)
                self._backtrack(bt)
                if len(learnt) == 1:
                    if not self._enqueue(learnt[0], None):
                        self._unsat = True
                        return None
                else:
                    self._attach(learnt)
                    self._assign(learnt[0], learnt)
                self._var_inc /= self.VAR_DECAY
                since_restart += 1
            else:
                if since_restart >= restart_limit:
                    since_restart = 0
                    restart_limit = int(restart_limit * self.RESTART_MULT)
                    self.stats["restarts"] += 1
                    self._backtrack(0)
                    continue
                if len(self._trail) == n:
                    model = [False] * (n + 1)
                    for lit in self._trail:
                        if lit > 0:
                            model[lit] = True
                    self._backtrack(0)
                    return model
                self._decide()

    def clone(self):
        """Independent session with the same logical content.

        Learned clauses, activities and saved phases carry over; statistics
        start fresh; a conflict budget object is shared with the clone.
        """
        s = Solver(self.num_vars, seed=0, budget=self._budget)
        s._activity = list(self._activity)
        s._phase = list(self._phase)
        s._var_inc = self._var_inc
        s._heap = [(-s._activity[v], v) for v in range(1, self._n + 1)]
        heapify(s._heap)
        if self._unsat:
            s._unsat = True
            return s
        limit = self._trail_lim[0] if self._trail_lim else len(self._trail)
        for lit in self._trail[:limit]:
            s.add_clause([lit])
        for clause in self._clauses:
            s.add_clause(clause)
        return s


def builtin_session_factory(seed=0, conflict_budget=None):
    """Session factory for enumeration runs.

    All sessions produced by one factory (the base session and everything
    cloned from it) draw on a single conflict budget pool when one is set.
    """
    budget = ConflictBudget(conflict_budget) if conflict_budget else None

    def make(formula):
        return Solver.from_formula(formula, seed=seed, budget=budget)

    return make
