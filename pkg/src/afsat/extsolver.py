"""Bridge to external DIMACS solvers run as subprocesses.

The bridge writes the formula to a temporary DIMACS file, invokes the
configured command with that path appended, and reads the stock solver
output protocol from stdout: an ``s SATISFIABLE`` / ``s UNSATISFIABLE`` /
``s UNKNOWN`` status line plus ``v`` value lines for models. Variables the
solver leaves unmentioned default to false. Every reported model is
re-verified in process against the exact formula that was written; a model
that does not check out, or output with no status line, is a protocol
error. A wall-clock timeout (or an UNKNOWN verdict) surfaces as the same
budget outcome the built-in solver uses, never as unsatisfiable.

``ExternalSession`` wraps the one-shot bridge in the session interface the
enumeration code expects (add_clause / solve / clone) by keeping the clause
list and re-emitting the whole accumulated formula on every call.
"""

import os
import subprocess
import tempfile

from .cnf import CnfFormula, satisfies, to_dimacs
from .solver import BudgetExhausted


class SolverProtocolError(RuntimeError):
    """The external solver produced unusable output."""


class ExternalSolverConfig:
    """How to run the external solver.

    ``command`` is the executable plus fixed arguments; the DIMACS path is
    appended as the final argument. ``budget_s`` is a wall-clock limit per
    call (None for unlimited). ``workdir`` hosts the temporary files.
    """

    __slots__ = ("command", "budget_s", "workdir")

    def __init__(self, command, budget_s=None, workdir=None):
        if isinstance(command, str):
            command = [command]
        if not command:
            raise ValueError("empty solver command")
        self.command = list(command)
        self.budget_s = budget_s
        self.workdir = workdir

    def __repr__(self):
        return (f"ExternalSolverConfig({self.command!r}, "
                f"budget_s={self.budget_s!r})")


def _parse_output(stdout):
    status = None
    values = []
    for line in stdout.splitlines():
        if line.startswith("s ") or line == "s":
            status = line[1:].strip()
        elif line.startswith("v ") or line == "v":
            for tok in line[1:].split():
                try:
                    values.append(int(tok))
                except ValueError:
                    raise SolverProtocolError(
                        f"bad value token in solver output: {tok!r}") from None
    return status, values


def solve_external(config, formula):
    """Run the external solver on a formula.

    Returns a model (list indexed by variable) or None for unsatisfiable;
    raises BudgetExhausted on timeout or an UNKNOWN verdict and
    SolverProtocolError on anything unintelligible.
    """
    fd, path = tempfile.mkstemp(suffix=".cnf", prefix="afsat-",
                                dir=config.workdir)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(to_dimacs(formula))
        try:
            proc = subprocess.run(config.command + [path],
                                  capture_output=True, text=True,
                                  timeout=config.budget_s)
        except subprocess.TimeoutExpired:
            raise BudgetExhausted(
                f"external solver exceeded {config.budget_s}s") from None
        except OSError as exc:
            raise SolverProtocolError(
                f"cannot run {config.command[0]!r}: {exc}") from None
    finally:
        os.unlink(path)

    status, values = _parse_output(proc.stdout)
    if status == "SATISFIABLE":
        model = [False] * (formula.num_vars + 1)
        for lit in values:
            if lit == 0:
                continue
            var = abs(lit)
            if var > formula.num_vars:
                raise SolverProtocolError(
                    f"model mentions unknown variable {var}")
            model[var] = lit > 0
        if not satisfies(formula, model):
            raise SolverProtocolError(
                "external solver returned a model that does not satisfy "
                "the formula it was given")
        return model
    if status == "UNSATISFIABLE":
        return None
    if status == "UNKNOWN":
        raise BudgetExhausted("external solver gave up (s UNKNOWN)")
    raise SolverProtocolError(
        f"no status line in solver output (exit code {proc.returncode})")


class ExternalSession:
    """Session interface over the one-shot bridge.

    Keeps the accumulated clause list and re-emits the whole formula for
    every solve() call, so external solvers need no incremental mode.
    """

    def __init__(self, config, formula):
        self._config = config
        self.num_vars = formula.num_vars
        self._clauses = [list(c) for c in formula.clauses]
        self._unsat = False
        self.stats = {"calls": 0}

    def add_clause(self, lits):
        lits = [int(l) for l in lits]
        for lit in lits:
            if lit == 0 or abs(lit) > self.num_vars:
                raise ValueError(f"literal out of range: {lit}")
        if not lits:
            self._unsat = True
            return
        if any(-l in lits for l in lits):
            return  # tautology
        self._clauses.append(sorted(set(lits), key=abs))

    def solve(self):
        if self._unsat:
            return None
        self.stats["calls"] += 1
        formula = CnfFormula(self.num_vars, self._clauses)
        return solve_external(self._config, formula)

    def clone(self):
        s = ExternalSession.__new__(ExternalSession)
        s._config = self._config
        s.num_vars = self.num_vars
        s._clauses = [list(c) for c in self._clauses]
        s._unsat = self._unsat
        s.stats = {"calls": 0}
        return s


def external_session_factory(command, budget_s=None, workdir=None):
    """Session factory running every SAT call through an external solver."""
    config = ExternalSolverConfig(command, budget_s=budget_s, workdir=workdir)

    def make(formula):
        return ExternalSession(config, formula)

    return make
