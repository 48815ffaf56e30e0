#!/usr/bin/env python3
"""Small reference DPLL solver for DIMACS CNF files.

Reads one DIMACS file and prints the stock solver output protocol: an
``s SATISFIABLE`` / ``s UNSATISFIABLE`` status line, plus ``v`` value
lines for the model. The test suite drives it through the external
solver bridge as an independent cross-check of the built-in engine, so
it is deliberately a different algorithm family: plain recursive DPLL
with unit propagation and shortest-clause branching, no clause
learning, no watched literals, no shared code.
"""

import sys


def parse_dimacs(path):
    num_vars = 0
    clauses = []
    current = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line[0] in "c%":
                continue
            if line[0] == "p":
                num_vars = int(line.split()[2])
                continue
            for tok in line.split():
                lit = int(tok)
                if lit == 0:
                    if current:
                        clauses.append(current)
                        current = []
                else:
                    current.append(lit)
    if current:
        clauses.append(current)
    return num_vars, clauses


def simplify(clauses, lit):
    """Clause list under lit=true; None on an empty clause."""
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            rest = [l for l in c if l != -lit]
            if not rest:
                return None
            out.append(rest)
        else:
            out.append(c)
    return out


def dpll(clauses, assigned):
    while True:
        if not clauses:
            return assigned
        shortest = min(clauses, key=len)
        if len(shortest) > 1:
            break
        lit = shortest[0]
        clauses = simplify(clauses, lit)
        if clauses is None:
            return None
        assigned = assigned + [lit]
    lit = shortest[0]
    for choice in (lit, -lit):
        sub = simplify(clauses, choice)
        if sub is not None:
            result = dpll(sub, assigned + [choice])
            if result is not None:
                return result
    return None


def main(argv):
    if len(argv) != 2:
        print("usage: refdpll.py FILE.cnf", file=sys.stderr)
        return 2
    num_vars, clauses = parse_dimacs(argv[1])
    sys.setrecursionlimit(100000)
    assigned = dpll(clauses, [])
    if assigned is None:
        print("s UNSATISFIABLE")
        return 20
    value = {abs(lit): lit > 0 for lit in assigned}
    model = [v if value.get(v, False) else -v for v in range(1, num_vars + 1)]
    print("s SATISFIABLE")
    for start in range(0, len(model), 20):
        print("v " + " ".join(str(lit) for lit in model[start:start + 20]))
    print("v 0")
    return 10


if __name__ == "__main__":
    sys.exit(main(sys.argv))
