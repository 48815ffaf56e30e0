"""The ``afsat`` command.

One binary, subcommand style:

* parse      - validate a framework file, emit a canonical form
* encode     - write the CNF encoding of a framework as DIMACS
* enumerate  - list preferred (or complete) extensions as JSON
* query      - credulous or skeptical acceptance of one argument
* generate   - random frameworks and benchmark suites
* classify   - the 64-row constraint-subset classification table
* bench      - timed runs of encoding/solver systems over a suite
* sat        - plain DIMACS solving (the bridge target for self-hosted
               external-solver setups)

Exit codes: 0 success, 1 usage error, 2 input error, 3 budget exhausted.
JSON output is stable: keys sorted, fixed schemas, no timing fields unless
requested, so identical inputs give byte-identical output.
"""

import argparse
import json
import sys

from . import __version__

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code pinned to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_af(args):
    from .fileformats import parse

    return parse(_read_text(args.input), args.format)


def _encoding(args):
    from .cnf import encoding_from_string

    return encoding_from_string(args.encoding)


def _session_factory(args):
    from .solver import builtin_session_factory

    solver = getattr(args, "solver", "builtin")
    if solver == "builtin":
        return builtin_session_factory(
            seed=getattr(args, "seed", 0),
            conflict_budget=getattr(args, "conflict_budget", None))
    if solver.startswith("ext:") and solver[4:]:
        from .extsolver import external_session_factory

        return external_session_factory(
            [solver[4:]], budget_s=getattr(args, "solver_budget", None))
    raise ValueError(f"bad --solver value: {solver!r} "
                     "(expected 'builtin' or 'ext:<command>')")


def _print_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _extension_names(af, extension):
    return sorted(af.name(i) for i in extension)


# ----------------------------------------------------------------------
# subcommands

def cmd_parse(args):
    from .fileformats import serialize

    af = _read_af(args)
    if args.to == "json":
        _print_json({
            "arguments": list(af.arguments),
            "attacks": sorted([af.name(i), af.name(j)] for i, j in af.attacks),
        })
    else:
        sys.stdout.write(serialize(af, args.to))
    return EXIT_OK


def cmd_encode(args):
    from .cnf import encode, standard_comments, to_dimacs

    af = _read_af(args)
    encoding = _encoding(args)
    formula = encode(af, encoding, nonempty=not args.without_nonempty)
    source = None if args.input == "-" else args.input
    text = to_dimacs(formula, standard_comments(af, encoding, source=source))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_enumerate(args):
    from .enumeration import (EnumerationIncomplete, enumerate_complete,
                              enumerate_preferred)

    af = _read_af(args)
    encoding = _encoding(args)
    factory = _session_factory(args)
    run = (enumerate_preferred if args.semantics == "preferred"
           else enumerate_complete)
    exit_code = EXIT_OK
    try:
        result = run(af, encoding, factory)
    except EnumerationIncomplete as exc:
        result = exc.partial
        exit_code = EXIT_BUDGET

    payload = {
        "semantics": result.semantics,
        "encoding": result.encoding.value,
        "complete": result.complete,
        "num_extensions": len(result.extensions),
        "stats": {
            "sat_calls": result.stats["sat_calls"],
            "inner_iterations": result.stats["inner_iterations"],
            "outer_iterations": result.stats["outer_iterations"],
        },
    }
    if not args.stats_only:
        payload["extensions"] = [_extension_names(af, s)
                                 for s in result.extensions]
    if args.timing:
        payload["stats"]["wall_time_s"] = round(result.stats["wall_time_s"], 6)

    queries = {}
    if args.query_credulous or args.query_skeptical:
        from .enumeration import credulous_accept, skeptical_accept

        if args.query_credulous:
            queries["credulous"] = {
                name: credulous_accept(af, af.index(name), encoding,
                                       _session_factory(args))
                for name in args.query_credulous}
        if args.query_skeptical:
            ext_sets = [set(s) for s in result.extensions]
            if result.complete:
                queries["skeptical"] = {
                    name: all(af.index(name) in s for s in ext_sets)
                    for name in args.query_skeptical}
            else:
                queries["skeptical"] = {
                    name: skeptical_accept(af, af.index(name), encoding,
                                           _session_factory(args))
                    for name in args.query_skeptical}
    if queries:
        payload["queries"] = queries

    _print_json(payload)
    return exit_code


def cmd_query(args):
    from .enumeration import credulous_accept, skeptical_accept

    af = _read_af(args)
    encoding = _encoding(args)
    factory = _session_factory(args)
    index = af.index(args.argument)
    if args.mode == "credulous":
        accepted = credulous_accept(af, index, encoding, factory)
    else:
        accepted = skeptical_accept(af, index, encoding, factory)
    _print_json({"argument": args.argument, "mode": args.mode,
                 "encoding": encoding.value, "accepted": accepted})
    return EXIT_OK


def cmd_generate(args):
    from . import generators
    from .fileformats import serialize_apx

    if args.k is not None:
        # single-instance mode
        if args.method == generators.METHOD_PROBABILITY:
            if args.p_att is None:
                raise ValueError("--p-att is required for the probability method")
            param = args.p_att
        elif args.method == generators.METHOD_COUNT:
            param = args.n_att  # None draws the count at random
        else:
            param = None
        af = generators.generate(args.method, args.k, param, args.seed)
        text = serialize_apx(af)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if not args.out:
        raise ValueError("suite mode needs --out DIRECTORY (or pass --k "
                         "for a single instance)")
    classes = generators.suite_classes(
        scale=args.scale,
        include_count=not args.no_count_classes,
        include_extremes=not args.no_extremes)
    manifest = generators.build_suite(args.out, scale=args.scale,
                                      base_seed=args.seed, classes=classes)
    print(f"wrote {len(manifest['instances'])} instances to {args.out}")
    return EXIT_OK


def cmd_classify(args):
    from .constraints import classify_all
    from .fileformats import serialize_apx

    rows = []
    counts = {"weak": 0, "correct_non_redundant": 0, "redundant": 0}
    for c in classify_all(find_witnesses=not args.no_witnesses):
        counts[c.verdict] += 1
        row = {
            "terms": sorted(t.value for t in c.terms),
            "cardinality": len(c.terms),
            "verdict": c.verdict,
            "witness": None,
        }
        if c.witness is not None:
            af, lab = c.witness
            row["witness"] = {"framework_apx": serialize_apx(af),
                              "labelling": lab.as_dict(af)}
        rows.append(row)

    if args.text:
        for row in rows:
            terms = "+".join(row["terms"]) or "(none)"
            line = f"{row['cardinality']}  {terms:<60} {row['verdict']}"
            if row["witness"]:
                attacks = row["witness"]["framework_apx"].replace("\n", " ").strip()
                lab = ",".join(f"{a}:{l}" for a, l in
                               sorted(row["witness"]["labelling"].items()))
                line += f"  [{attacks} | {lab}]"
            print(line)
        print(f"counts: {counts['weak']} weak, "
              f"{counts['correct_non_redundant']} correct_non_redundant, "
              f"{counts['redundant']} redundant")
    else:
        _print_json({"rows": rows, "counts": counts})
    return EXIT_OK


def cmd_bench(args):
    import os

    from .bench import ipc_score, manifest_groups, run_bench, success_rate
    from .generators import load_manifest

    manifest = load_manifest(args.manifest)
    systems = [s.strip() for s in args.systems.split(",") if s.strip()]
    if not systems:
        raise ValueError("no systems given")

    def progress(rec):
        print(f"  {rec.instance_id} {rec.system_id} {rec.outcome} "
              f"{rec.seconds:.2f}s", file=sys.stderr)

    records = run_bench(manifest, systems, args.budget, args.out,
                        repetitions=args.repetitions, jobs=args.jobs,
                        resume=not args.no_resume,
                        progress=progress if args.verbose else None)
    groups = manifest_groups(manifest, args.group_by)
    ipc = ipc_score(records, budget_s=args.budget, groups=groups)
    succ = success_rate(records, groups=groups)
    sys.stdout.write(ipc.to_text())
    sys.stdout.write(succ.to_text())
    base = os.path.splitext(args.out)[0]
    with open(base + ".ipc.csv", "w") as fh:
        fh.write(ipc.to_csv())
    with open(base + ".ipc.dat", "w") as fh:
        fh.write(ipc.to_gnuplot())
    with open(base + ".success.csv", "w") as fh:
        fh.write(succ.to_csv())
    return EXIT_OK


def cmd_sat(args):
    from .cnf import parse_dimacs
    from .solver import BudgetExhausted, ConflictBudget, Solver

    formula = parse_dimacs(_read_text(args.input))
    budget = ConflictBudget(args.conflict_budget) if args.conflict_budget else None
    solver = Solver.from_formula(formula, seed=args.seed, budget=budget)
    try:
        model = solver.solve()
    except BudgetExhausted:
        print("s UNKNOWN")
        return EXIT_BUDGET
    if model is None:
        print("s UNSATISFIABLE")
        return EXIT_OK
    print("s SATISFIABLE")
    lits = [v if model[v] else -v for v in range(1, formula.num_vars + 1)]
    lits.append(0)
    for start in range(0, len(lits), 32):
        print("v " + " ".join(str(l) for l in lits[start:start + 32]))
    return EXIT_OK


# ----------------------------------------------------------------------
# parser assembly

def _add_input_args(sub):
    sub.add_argument("input", help="framework file, or - for stdin")
    sub.add_argument("--format", choices=("auto", "apx", "tgf"),
                     default="auto", help="input format (default: sniff)")


def _add_solver_args(sub):
    sub.add_argument("--encoding", default="C2",
                     help="encoding id: C1, C1a, C1b, C1c, C2, C3 (default C2)")
    sub.add_argument("--solver", default="builtin",
                     help="'builtin' or 'ext:<command>' for an external "
                          "DIMACS solver (default builtin)")
    sub.add_argument("--seed", type=int, default=0,
                     help="branching perturbation seed for the built-in "
                          "solver (default 0: none)")
    sub.add_argument("--conflict-budget", type=int, default=None,
                     help="conflict limit for the built-in solver")
    sub.add_argument("--solver-budget", type=float, default=None,
                     help="per-call wall-clock limit for an external solver")


def build_parser():
    parser = _Parser(prog="afsat",
                     description="SAT-based preferred-extension tools for "
                                 "abstract argumentation frameworks")
    parser.add_argument("--version", action="version",
                        version=f"afsat {__version__}")
    subs = parser.add_subparsers(dest="cmd", required=True, metavar="COMMAND")

    p = subs.add_parser("parse", help="validate and canonicalize a framework")
    _add_input_args(p)
    p.add_argument("--to", choices=("json", "apx", "tgf"), default="json",
                   help="output form (default json)")
    p.set_defaults(func=cmd_parse)

    p = subs.add_parser("encode", help="emit the CNF encoding as DIMACS")
    _add_input_args(p)
    p.add_argument("--encoding", default="C2",
                   help="encoding id (default C2)")
    p.add_argument("--without-nonempty", action="store_true",
                   help="omit the non-empty-extension clause")
    p.add_argument("--out", default=None, help="write to a file, not stdout")
    p.set_defaults(func=cmd_encode)

    p = subs.add_parser("enumerate",
                        help="enumerate preferred or complete extensions")
    _add_input_args(p)
    _add_solver_args(p)
    p.add_argument("--semantics", choices=("preferred", "complete"),
                   default="preferred")
    p.add_argument("--stats-only", action="store_true",
                   help="omit the extension list from the output")
    p.add_argument("--timing", action="store_true",
                   help="include wall time in the stats (output is then "
                        "no longer byte-reproducible)")
    p.add_argument("--query-credulous", action="append", default=[],
                   metavar="ARG", help="also report credulous acceptance")
    p.add_argument("--query-skeptical", action="append", default=[],
                   metavar="ARG", help="also report skeptical acceptance")
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("query", help="acceptance of a single argument")
    _add_input_args(p)
    _add_solver_args(p)
    p.add_argument("--mode", choices=("credulous", "skeptical"),
                   required=True)
    p.add_argument("--argument", required=True, metavar="NAME")
    p.set_defaults(func=cmd_query)

    p = subs.add_parser("generate",
                        help="random frameworks and benchmark suites")
    p.add_argument("--out", default=None,
                   help="suite directory, or output file in single mode")
    p.add_argument("--scale", type=float, default=1.0,
                   help="suite size factor (default 1.0 = 2816 instances)")
    p.add_argument("--seed", type=int, default=0,
                   help="base seed (default 0)")
    p.add_argument("--no-count-classes", action="store_true",
                   help="suite: skip the count-model classes")
    p.add_argument("--no-extremes", action="store_true",
                   help="suite: skip the empty/full singletons")
    p.add_argument("--k", type=int, default=None,
                   help="single mode: argument count")
    p.add_argument("--method",
                   choices=("probability", "count", "empty", "full"),
                   default="probability", help="single mode: attack model")
    p.add_argument("--p-att", type=float, default=None,
                   help="single mode: attack probability")
    p.add_argument("--n-att", type=int, default=None,
                   help="single mode: exact attack count (omit to draw it)")
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("classify",
                        help="classify all 64 labelling-condition subsets")
    p.add_argument("--text", action="store_true",
                   help="aligned text instead of JSON")
    p.add_argument("--no-witnesses", action="store_true",
                   help="skip the weakness witness search")
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("bench", help="timed system comparison over a suite")
    p.add_argument("--manifest", required=True,
                   help="suite manifest (file or directory)")
    p.add_argument("--systems", required=True,
                   help="comma list like C2:builtin,C3:builtin,"
                        "C2:ext:/path/solver")
    p.add_argument("--budget", type=float, default=900.0,
                   help="wall-clock seconds per run (default 900; use 60 "
                        "for desk-scale runs)")
    p.add_argument("--jobs", type=int, default=1,
                   help="concurrent runs (default 1)")
    p.add_argument("--out", required=True, help="results CSV (appended)")
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--group-by", choices=("k", "class", "method", "all"),
                   default="k")
    p.add_argument("--no-resume", action="store_true",
                   help="ignore existing rows in the results CSV")
    p.add_argument("--verbose", action="store_true",
                   help="print each finished run to stderr")
    p.set_defaults(func=cmd_bench)

    p = subs.add_parser("sat", help="solve a DIMACS file directly")
    p.add_argument("input", help="DIMACS file, or - for stdin")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--conflict-budget", type=int, default=None)
    p.set_defaults(func=cmd_sat)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except KeyError as exc:
        print(f"afsat: error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"afsat: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # parse errors and bad parameter combinations
        print(f"afsat: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RuntimeError as exc:
        from .enumeration import EnumerationIncomplete
        from .solver import BudgetExhausted

        if isinstance(exc, (BudgetExhausted, EnumerationIncomplete)):
            print(f"afsat: budget exhausted: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"afsat: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
