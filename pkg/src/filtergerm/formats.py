"""Semigroup text files, DOT graphs and JSON documents."""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import (
    InverseSemigroup,
    _as_array,
    _find_zeros,
    adjoin_zero,
    order_relation,
    validate_inverse_semigroup,
)
from .errors import MalformedTable, MissingZero, ParseError, ValidationError
from .groupoid import FiniteGroupoid

SCHEMA_VERSION = 1


def parse_semigroup_text(text: str, adjoin: bool = False) -> InverseSemigroup:
    """Parse the table format: a count line, ``n`` rows, then ``label i name`` lines."""
    lines = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty input")
    no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"expected element count, got {first!r}", no, 1) from None
    if n < 1:
        raise ParseError("element count must be positive", no, 1)
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}", lines[-1][0])
    table = []
    for no, ln in lines[1:n + 1]:
        fields = ln.split()
        if fields[0] == "label":
            raise ParseError(f"expected {n} table rows before labels", no, 1)
        if len(fields) != n:
            raise ParseError(f"row has {len(fields)} entries, expected {n}", no)
        row = []
        for col, f in enumerate(fields, 1):
            try:
                x = int(f)
            except ValueError:
                raise ParseError(f"not an integer: {f!r}", no, col) from None
            if not 0 <= x < n:
                raise ParseError(f"entry {x} out of range [0, {n})", no, col)
            row.append(x)
        table.append(row)
    labels = [str(i) for i in range(n)]
    named = False
    for no, ln in lines[n + 1:]:
        fields = ln.split(None, 2)
        if len(fields) != 3 or fields[0] != "label":
            raise ParseError(f"expected 'label i name', got {ln!r}", no)
        try:
            i = int(fields[1])
        except ValueError:
            raise ParseError(f"bad label index {fields[1]!r}", no, 2) from None
        if not 0 <= i < n:
            raise ParseError(f"label index {i} out of range", no, 2)
        labels[i] = fields[2]
        named = True

    try:
        t = _as_array(table)
    except MalformedTable as exc:
        raise ParseError(str(exc)) from None
    if not _find_zeros(t):
        core = validate_inverse_semigroup(table, labels, require_zero=False)
        if not core.ok:
            raise ValidationError(core.violations)
        if not adjoin:
            raise MissingZero("table has no zero element; rerun with --adjoin-zero")
        # unnamed elements keep index labels, which shift past the new zero
        return adjoin_zero(table, labels if named else None)
    report = validate_inverse_semigroup(table, labels)
    if not report.ok:
        raise ValidationError(report.violations)
    return report.semigroup


def parse_semigroup_file(path, adjoin: bool = False) -> InverseSemigroup:
    return parse_semigroup_text(Path(path).read_text(encoding="utf-8"), adjoin)


def format_semigroup(S: InverseSemigroup) -> str:
    width = len(str(S.n - 1))
    out = [str(S.n)]
    for row in S.table:
        out.append(" ".join(str(x).rjust(width) for x in row))
    if S.labels is not None:
        out += [f"label {i} {name}" for i, name in enumerate(S.labels)]
    return "\n".join(out) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def groupoid_to_dot(G: FiniteGroupoid, name: str = "G") -> str:
    """Units as nodes, non-unit arrows as edges from source to range."""
    units = sorted(G.units)
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;"]
    for u in units:
        lines.append(f"  u{u} [label={_dot_quote(G.label(u))}];")
    for a in G.arrows:
        if a in G.units:
            continue
        lines.append(f"  u{G.d(a)} -> u{G.r(a)} [label={_dot_quote(G.label(a))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(G: FiniteGroupoid, path, name: str = "G") -> None:
    Path(path).write_text(groupoid_to_dot(G, name), encoding="utf-8")


def instance_json(S: InverseSemigroup, name: str = "") -> dict:
    return {
        "name": name,
        "n": S.n,
        "zero": S.zero,
        "labels": [S.label(a) for a in S.elements()],
        "idempotents": sorted(S.idempotent_members),
    }


def groupoid_json(G: FiniteGroupoid) -> dict:
    return {
        "name": G.name,
        "units": sorted(G.units),
        "arrows": [
            {"id": a, "d": G.d(a), "r": G.r(a), "label": G.label(a)} for a in G.arrows
        ],
    }


def info_json(S: InverseSemigroup) -> dict:
    order = order_relation(S)
    return {
        "idempotents": [S.label(e) for e in sorted(S.idempotent_members)],
        "hasse": [[S.label(a), S.label(b)] for a, b in order.hasse],
        "zero": S.label(S.zero),
    }


def document(S: InverseSemigroup, name: str = "", **sections) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "instance": instance_json(S, name)}
    doc.update(sections)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def emit_json(doc: dict, path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")
