"""Text formats for argumentation frameworks.

Two formats are supported:

* the logic-programming style ``arg(name).`` / ``att(a,b).`` statement
  format, one statement per line, ``%`` starting a comment;
* the trivial-graph edge-list format: one argument name per line, a single
  ``#`` separator line, then ``attacker target`` lines.

Argument names are restricted to ``[A-Za-z0-9_]`` in both formats. Parsers
report 1-based line numbers on error; serializers are byte-deterministic
(declaration order for arguments, sorted index pairs for attacks).
"""

import re

from .core import ArgumentationFramework

_ARG_RE = re.compile(r"arg\(([A-Za-z0-9_]+)\)\.\Z")
_ATT_RE = re.compile(r"att\(([A-Za-z0-9_]+),([A-Za-z0-9_]+)\)\.\Z")


class ParseError(ValueError):
    """Malformed framework text; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def parse_apx(text):
    """Parse statement-format text into a framework."""
    names = []
    declared = set()
    attack_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stmt = raw.split("%", 1)[0]
        stmt = "".join(stmt.split())
        if not stmt:
            continue
        m = _ARG_RE.match(stmt)
        if m:
            name = m.group(1)
            if name in declared:
                raise ParseError(f"duplicate argument declaration: {name}", lineno)
            declared.add(name)
            names.append(name)
            continue
        m = _ATT_RE.match(stmt)
        if m:
            attack_lines.append((lineno, m.group(1), m.group(2)))
            continue
        raise ParseError(f"unrecognized statement: {raw.strip()!r}", lineno)
    if not names:
        raise ParseError("no arguments declared")
    index = {name: i for i, name in enumerate(names, 1)}
    attacks = []
    for lineno, a, b in attack_lines:
        if a not in index:
            raise ParseError(f"attack references undeclared argument: {a}", lineno)
        if b not in index:
            raise ParseError(f"attack references undeclared argument: {b}", lineno)
        attacks.append((index[a], index[b]))
    return ArgumentationFramework(names, attacks)


def serialize_apx(af):
    """Statement-format text for a framework."""
    lines = [f"arg({name})." for name in af.arguments]
    for i, j in sorted(af.attacks):
        lines.append(f"att({af.name(i)},{af.name(j)}).")
    return "\n".join(lines) + "\n"


def parse_tgf(text):
    """Parse edge-list text into a framework."""
    names = []
    declared = set()
    attacks = []
    in_edges = False
    separator_seen = False
    index = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if separator_seen:
                raise ParseError("second separator line", lineno)
            separator_seen = True
            in_edges = True
            index = {name: i for i, name in enumerate(names, 1)}
            continue
        if not in_edges:
            if len(line.split()) != 1:
                raise ParseError(f"expected one argument name: {raw.strip()!r}", lineno)
            if not re.fullmatch(r"[A-Za-z0-9_]+", line):
                raise ParseError(f"bad argument name: {line!r}", lineno)
            if line in declared:
                raise ParseError(f"duplicate argument name: {line}", lineno)
            declared.add(line)
            names.append(line)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'attacker target': {raw.strip()!r}", lineno)
            a, b = parts
            if a not in index:
                raise ParseError(f"attack references undeclared argument: {a}", lineno)
            if b not in index:
                raise ParseError(f"attack references undeclared argument: {b}", lineno)
            attacks.append((index[a], index[b]))
    if not separator_seen:
        raise ParseError("missing '#' separator line")
    if not names:
        raise ParseError("no arguments declared")
    return ArgumentationFramework(names, attacks)


def serialize_tgf(af):
    """Edge-list text for a framework."""
    lines = list(af.arguments)
    lines.append("#")
    for i, j in sorted(af.attacks):
        lines.append(f"{af.name(i)} {af.name(j)}")
    return "\n".join(lines) + "\n"


def sniff_format(text):
    """Guess the format of framework text: 'apx' or 'tgf'."""
    for raw in text.splitlines():
        stmt = raw.split("%", 1)[0].strip()
        if not stmt:
            continue
        if stmt == "#":
            return "tgf"
        if stmt.startswith(("arg(", "att(")):
            return "apx"
    # A file with only name lines and no separator is not valid either way;
    # defaulting to tgf gives the more useful error message.
    return "tgf"


def parse(text, fmt="auto"):
    """Parse framework text in the named format ('apx', 'tgf', or 'auto')."""
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "apx":
        return parse_apx(text)
    if fmt == "tgf":
        return parse_tgf(text)
    raise ValueError(f"unknown format: {fmt!r}")


def serialize(af, fmt="apx"):
    """Serialize a framework in the named format."""
    if fmt == "apx":
        return serialize_apx(af)
    if fmt == "tgf":
        return serialize_tgf(af)
    raise ValueError(f"unknown format: {fmt!r}")
