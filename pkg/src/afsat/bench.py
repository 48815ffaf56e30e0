"""Benchmark harness and competition-style speed scoring.

A *system* is an encoding plus a solver backend, written ``C2:builtin`` or
``C1:ext:/path/to/solver``. Every (instance, system) run happens in a fresh
subprocess (the package's own CLI) under a wall-clock budget, with hard
kill on overrun, and is appended to a CSV as soon as it finishes so an
interrupted campaign resumes where it stopped.

Scoring follows the planning-competition speed rule: a case is valid when
at least one system solved it; with T* the fastest solving time on that
case, a solved run scores 1/(1+log10(T/T*)), any solved run below one
second scores exactly 1, and failures score 0. A system's normalized score
is its sum over valid cases divided by the number of valid cases, times
100.
"""

import csv
import math
import os
import subprocess
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed

from . import __version__
from .cnf import encoding_from_string
from .generators import instance_path, load_manifest

OUTCOME_SOLVED = "solved"
OUTCOME_TIMEOUT = "timeout"
OUTCOME_ERROR = "error"

CSV_HEADER = ["instance_id", "system_id", "outcome", "seconds"]


class BenchRecord:
    """One timed run of one system on one instance."""

    __slots__ = ("instance_id", "system_id", "outcome", "seconds")

    def __init__(self, instance_id, system_id, outcome, seconds):
        if outcome not in (OUTCOME_SOLVED, OUTCOME_TIMEOUT, OUTCOME_ERROR):
            raise ValueError(f"bad outcome: {outcome!r}")
        self.instance_id = instance_id
        self.system_id = system_id
        self.outcome = outcome
        self.seconds = float(seconds)

    def __repr__(self):
        return (f"BenchRecord({self.instance_id!r}, {self.system_id!r}, "
                f"{self.outcome!r}, {self.seconds:.3f})")


def parse_system(spec):
    """Split a system spec into (encoding, backend tuple).

    Backends: ``("builtin",)`` or ``("ext", command_path)``.
    """
    parts = spec.split(":", 1)
    if len(parts) != 2:
        raise ValueError(f"bad system spec (want ENCODING:backend): {spec!r}")
    encoding = encoding_from_string(parts[0])
    backend = parts[1]
    if backend == "builtin":
        return encoding, ("builtin",)
    if backend.startswith("ext:") and backend[4:]:
        return encoding, ("ext", backend[4:])
    raise ValueError(f"bad solver backend in system spec: {spec!r}")


def _system_command(system_id, apx_path):
    encoding, backend = parse_system(system_id)
    cmd = [sys.executable, "-m", "afsat", "enumerate", "--format", "apx",
           "--encoding", encoding.value, "--stats-only"]
    if backend[0] == "ext":
        cmd += ["--solver", f"ext:{backend[1]}"]
    cmd.append(apx_path)
    return cmd


def run_one(system_id, apx_path, budget_s):
    """Run one system on one instance in a fresh process; returns
    (outcome, seconds, detail)."""
    cmd = _system_command(system_id, apx_path)
    t0 = time.perf_counter()
    try:
        proc = subprocess.run(cmd, capture_output=True, text=True,
                              timeout=budget_s)
    except subprocess.TimeoutExpired:
        return OUTCOME_TIMEOUT, float(budget_s), ""
    dt = time.perf_counter() - t0
    if proc.returncode == 0:
        return OUTCOME_SOLVED, dt, ""
    detail = (proc.stderr or "").strip().splitlines()
    return OUTCOME_ERROR, dt, detail[-1] if detail else f"exit {proc.returncode}"


def read_records(csv_path):
    """Read bench records back from a results CSV (comment lines skipped)."""
    records = []
    with open(csv_path, newline="") as fh:
        rows = csv.reader(line for line in fh if not line.startswith("#"))
        header = next(rows, None)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header in {csv_path}: {header}")
        for row in rows:
            if not row:
                continue
            records.append(BenchRecord(row[0], row[1], row[2], float(row[3])))
    return records


def _rep_id(instance_id, rep):
    return instance_id if rep == 0 else f"{instance_id}@r{rep + 1}"


def run_bench(manifest, systems, budget_s, out_csv, repetitions=1, jobs=1,
              resume=True, progress=None):
    """Run every system on every manifest instance; returns all records.

    ``manifest`` is a loaded suite manifest or a path to one. Existing rows
    in ``out_csv`` are kept and their runs skipped when ``resume`` is set.
    ``progress`` (optional) is called with each new BenchRecord.
    """
    if isinstance(manifest, (str, os.PathLike)):
        manifest = load_manifest(manifest)
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    systems = list(systems)
    for s in systems:
        parse_system(s)  # validate early

    done = []
    if resume and os.path.exists(out_csv):
        done = read_records(out_csv)
    done_keys = {(r.instance_id, r.system_id) for r in done}

    tasks = []
    for row in manifest["instances"]:
        path = instance_path(manifest, row)
        for system_id in systems:
            for rep in range(repetitions):
                rid = _rep_id(row["id"], rep)
                if (rid, system_id) not in done_keys:
                    tasks.append((rid, system_id, path))

    new_file = not (resume and os.path.exists(out_csv))
    lock = threading.Lock()
    records = list(done)
    with open(out_csv, "a" if not new_file else "w", newline="") as fh:
        if new_file:
            fh.write(f"# afsat {__version__} bench; budget_s={budget_s}\n")
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            fh.flush()
        writer = csv.writer(fh)

        def work(task):
            rid, system_id, path = task
            outcome, seconds, _ = run_one(system_id, path, budget_s)
            return BenchRecord(rid, system_id, outcome, seconds)

        if jobs <= 1:
            produced = map(work, tasks)
            for rec in produced:
                records.append(rec)
                writer.writerow([rec.instance_id, rec.system_id, rec.outcome,
                                 f"{rec.seconds:.6f}"])
                fh.flush()
                if progress:
                    progress(rec)
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(work, t) for t in tasks]
                for fut in as_completed(futures):
                    rec = fut.result()
                    with lock:
                        records.append(rec)
                        writer.writerow([rec.instance_id, rec.system_id,
                                         rec.outcome, f"{rec.seconds:.6f}"])
                        fh.flush()
                    if progress:
                        progress(rec)
    return records


# ----------------------------------------------------------------------
# scoring

def _case_score(seconds, best):
    if seconds < 1.0:
        return 1.0
    if seconds <= best:
        return 1.0
    if best <= 0.0:
        return 0.0
    return 1.0 / (1.0 + math.log10(seconds / best))


class ScoreTable:
    """Per-(group, system) aggregates with text/CSV/gnuplot renderings."""

    def __init__(self, kind, systems, groups, cells, cases_per_group):
        self.kind = kind  # "ipc" or "success"
        self.systems = list(systems)
        self.groups = list(groups)
        self.cells = cells  # (group, system) -> float
        self.cases_per_group = cases_per_group

    def value(self, group, system):
        return self.cells.get((group, system), 0.0)

    def to_text(self):
        label = {"ipc": "normalized IPC", "success": "success rate %"}[self.kind]
        width = max([len(str(g)) for g in self.groups] + [5])
        out = [f"{self.kind} table ({label}; cases per group in parens)"]
        head = " ".join(f"{s:>12}" for s in self.systems)
        out.append(f"{'group':<{width}} {head}   cases")
        for g in self.groups:
            row = " ".join(f"{self.value(g, s):>12.2f}" for s in self.systems)
            out.append(f"{g:<{width}} {row}   ({self.cases_per_group[g]})")
        return "\n".join(out) + "\n"

    def to_csv(self):
        lines = ["group," + ",".join(self.systems) + ",cases"]
        for g in self.groups:
            vals = ",".join(f"{self.value(g, s):.4f}" for s in self.systems)
            lines.append(f"{g},{vals},{self.cases_per_group[g]}")
        return "\n".join(lines) + "\n"

    def to_gnuplot(self):
        """Whitespace table: one row per group, one column per system."""
        lines = ["# group " + " ".join(self.systems)]
        for g in self.groups:
            vals = " ".join(f"{self.value(g, s):.4f}" for s in self.systems)
            lines.append(f"{g} {vals}")
        return "\n".join(lines) + "\n"


def _group_label(groups, instance_id):
    if groups is None:
        return "all"
    # repetition suffixes share their base instance's group
    base = instance_id.split("@r", 1)[0]
    return groups.get(base, groups.get(instance_id, "other"))


def ipc_score(records, budget_s=None, groups=None):
    """Competition speed scores per system, normalized to 0..100.

    ``groups`` maps instance ids to group labels (default: one group
    "all"). A solved run over the budget counts as a failure. Cases no
    system solved are ignored. Raises on an empty record list.
    """
    if not records:
        raise ValueError("no bench records to score")
    by_case = {}
    systems = []
    for r in records:
        if r.system_id not in systems:
            systems.append(r.system_id)
        solved = r.outcome == OUTCOME_SOLVED and (budget_s is None
                                                  or r.seconds <= budget_s)
        by_case.setdefault(r.instance_id, []).append((r.system_id, solved,
                                                      r.seconds))
    raw = {}
    valid_cases = {}
    group_order = []
    for case_id, runs in by_case.items():
        solved_times = [sec for (_, ok, sec) in runs if ok]
        if not solved_times:
            continue  # invalid case: nobody solved it
        best = min(solved_times)
        label = _group_label(groups, case_id)
        if label not in group_order:
            group_order.append(label)
        valid_cases[label] = valid_cases.get(label, 0) + 1
        for system_id, ok, sec in runs:
            score = _case_score(sec, best) if ok else 0.0
            raw[(label, system_id)] = raw.get((label, system_id), 0.0) + score
    cells = {}
    for label in group_order:
        for s in systems:
            n = valid_cases[label]
            cells[(label, s)] = 100.0 * raw.get((label, s), 0.0) / n
    group_order.sort(key=str)
    return ScoreTable("ipc", systems, group_order, cells, valid_cases)


def success_rate(records, groups=None):
    """Fraction of cases solved per system (percent), by group."""
    if not records:
        raise ValueError("no bench records to score")
    systems = []
    counts = {}
    solved = {}
    group_order = []
    for r in records:
        if r.system_id not in systems:
            systems.append(r.system_id)
        label = _group_label(groups, r.instance_id)
        if label not in group_order:
            group_order.append(label)
        counts[(label, r.system_id)] = counts.get((label, r.system_id), 0) + 1
        if r.outcome == OUTCOME_SOLVED:
            solved[(label, r.system_id)] = solved.get((label, r.system_id), 0) + 1
    cells = {}
    cases = {}
    for (label, s), n in counts.items():
        cells[(label, s)] = 100.0 * solved.get((label, s), 0) / n
        cases[label] = max(cases.get(label, 0), n)
    group_order.sort(key=str)
    return ScoreTable("success", systems, group_order, cells, cases)


def manifest_groups(manifest, by="k"):
    """Instance-id -> group label maps from manifest metadata.

    ``by`` is one of: "k" (argument-count buckets), "class" (the exact
    generation class), "method" (generation methods kept separate), or
    "all" (single merged group).
    """
    out = {}
    for row in manifest["instances"]:
        if by == "k":
            label = f"k={row['k']:03d}"
        elif by == "class":
            label = row["class_id"]
        elif by == "method":
            label = row["method"]
        elif by == "all":
            label = "all"
        else:
            raise ValueError(f"unknown grouping: {by!r}")
        out[row["id"]] = label
    return out
