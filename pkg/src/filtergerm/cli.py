"""Command line entry point.

Exit codes: 0 success (or every claim passes), 1 a claim or validation
failed, 2 the input could not be read or used.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import formats
from .algebra import build_standard
from .errors import FilterGermError, MissingZero, ParseError, ValidationError
from .filter_groupoid import basic_set, build_filter_groupoid, patch_basis
from .filters import (
    classify_subset,
    efilters,
    enumerate_filters,
)
from .germ_groupoid import build_germ_groupoid
from .isomorphism import Mutation, verify_all
from .topology import efilter_topology, generate_topology, is_hausdorff, subspace

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

GROUPOID_KINDS = {
    "filters": ("filters", "proper"),
    "ultra": ("filters", "ultra"),
    "tight": ("filters", "tight"),
    "germs": ("germs", "proper"),
    "ultragerms": ("germs", "ultra"),
    "tightgerms": ("germs", "tight"),
}


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    build: str | None = None
    adjoin_zero: bool = False
    kind: str = "filters"
    select: str = "proper"
    mode: str = "principal"
    efilters: bool = False
    space: str = "units"
    basis: str = "patch"
    mutate: str | None = None
    timings: bool = False
    format: str = "text"
    output: str | None = None
    bruteforce_cap: int = 20
    point_cap: int = 1 << 14

    def __post_init__(self):
        if (self.input is None) == (self.build is None):
            raise ValueError("give exactly one of an input file or --build")
        if self.bruteforce_cap <= 0 or self.point_cap <= 0:
            raise ValueError("caps must be positive")


def _parse_build(spec: str):
    family, _, param = spec.partition(":")
    family = family.replace("-", "_")
    if family in ("brandt", "symmetric_inverse", "chain"):
        try:
            return build_standard(family, int(param))
        except ValueError as exc:
            raise ParseError(f"bad builder parameter in {spec!r}: {exc}") from None
    raise ParseError(f"unknown builder {spec!r}; use brandt:K, symmetric_inverse:K or chain:K")


def _load(cfg: RunConfig):
    if cfg.build is not None:
        return _parse_build(cfg.build), cfg.build
    return formats.parse_semigroup_file(cfg.input, cfg.adjoin_zero), Path(cfg.input).name


def _write(cfg: RunConfig, text: str):
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _groupoid(S, kind: str):
    family, k = GROUPOID_KINDS[kind]
    if family == "filters":
        return build_filter_groupoid(S, k)
    return build_germ_groupoid(S, k)


def _cmd_validate(cfg, S, name):
    if cfg.format == "json":
        return formats.dumps(formats.document(S, name, valid=True)), EXIT_OK
    return f"ok: {name}: {S.n} elements, zero {S.label(S.zero)}\n", EXIT_OK


def _cmd_info(cfg, S, name):
    info = formats.info_json(S)
    if cfg.format == "json":
        return formats.dumps(formats.document(S, name, info=info)), EXIT_OK
    lines = [
        f"instance\t{name}",
        f"elements\t{S.n}",
        f"zero\t{info['zero']}",
        "idempotents\t" + " ".join(info["idempotents"]),
    ]
    lines += [f"hasse\t{a}\t{b}" for a, b in info["hasse"]]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_filters(cfg, S, name):
    if cfg.efilters:
        found = efilters(S, cfg.select, cfg.mode)
    else:
        found = enumerate_filters(S, cfg.mode, cfg.select)
    rows = []
    for F in found:
        c = classify_subset(S, F.carrier)
        rows.append(
            {
                "minimum": S.label(F.minimum),
                "carrier": [S.label(a) for a in sorted(F.carrier)],
                "proper": F.is_proper,
                "ultra": c.is_ultra if not cfg.efilters else F in set(efilters(S, "ultra")),
                "idempotent": c.is_idempotent,
            }
        )
    if cfg.format == "json":
        return formats.dumps(formats.document(S, name, filters=rows)), EXIT_OK
    lines = [f"# {len(rows)} {'E-' if cfg.efilters else ''}filters ({cfg.select}, {cfg.mode})"]
    for r in rows:
        flags = ",".join(k for k in ("proper", "ultra", "idempotent") if r[k]) or "-"
        lines.append(f"{r['minimum']}\t{{{' '.join(r['carrier'])}}}\t{flags}")
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_groupoid(cfg, S, name):
    G = _groupoid(S, cfg.kind)
    if cfg.format == "dot":
        return formats.groupoid_to_dot(G, cfg.kind), EXIT_OK
    if cfg.format == "json":
        return formats.dumps(formats.document(S, name, groupoid=formats.groupoid_json(G))), EXIT_OK
    lines = [f"# {cfg.kind}: {len(G)} arrows, {len(G.units)} units"]
    for a in G.arrows:
        tag = "unit" if a in G.units else "arrow"
        lines.append(f"{a}\t{tag}\t{G.label(a)}\td={G.d(a)}\tr={G.r(a)}")
    return "\n".join(lines) + "\n", EXIT_OK


def _topology(cfg, S):
    G = build_filter_groupoid(S, "proper")
    if cfg.space == "efilters":
        T = efilter_topology(S, cfg.basis)
        return T, lambda x: x.up_label()
    if cfg.basis == "principal":
        sets = [basic_set(S, "principal", s, (), G).members for s in S.elements()]
    else:
        sets = [b.members for b in patch_basis(S, G)]
    T = generate_topology(G.arrows, sets)
    if cfg.space == "units":
        T = subspace(T, sorted(G.units))
    return T, lambda a: G.payload[a].up_label()


def _cmd_topology(cfg, S, name):
    T, label = _topology(cfg, S)
    if len(T.points) > cfg.point_cap:
        raise FilterGermError(f"{len(T.points)} points exceed --point-cap")
    hd = is_hausdorff(T)
    witness = None if hd.witness is None else [label(x) for x in hd.witness]
    if cfg.format == "json":
        doc = formats.document(
            S,
            name,
            topology={
                "space": cfg.space,
                "basis": cfg.basis,
                "points": [label(x) for x in T.points],
                "hausdorff": hd.hausdorff,
                "witness": witness,
                "basis_ok": T.basis_report.ok,
            },
        )
        return formats.dumps(doc), EXIT_OK
    if hd.hausdorff:
        verdict = "Hausdorff"
    else:
        verdict = f"non-Hausdorff, witness ({witness[0]}, {witness[1]})"
    return f"{cfg.space}\t{cfg.basis}\t{len(T.points)} points\t{verdict}\n", EXIT_OK


def _cmd_check(cfg, S, name):
    mutation = Mutation(cfg.mutate) if cfg.mutate else None
    report = verify_all(S, mutation, name)
    code = EXIT_OK if report.ok else EXIT_FAIL
    if cfg.format == "json":
        doc = formats.document(
            S,
            name,
            verdict="PASS" if report.ok else "FAIL",
            claims=[c.as_dict(cfg.timings) for c in report.claims],
        )
        return formats.dumps(doc), code
    lines = []
    for c in report.claims:
        line = f"{'PASS' if c.passed else 'FAIL'}\t{c.claim}\tchecked={c.checked}"
        if cfg.timings:
            line += f"\t{c.seconds:.4f}s"
        if c.note:
            line += f"\t{c.note}"
        if c.witness:
            line += f"\t{c.witness}"
        lines.append(line)
    lines.append(f"{'PASS' if report.ok else 'FAIL'}\t{name}\t{sum(c.passed for c in report.claims)}/{len(report.claims)} claims")
    return "\n".join(lines) + "\n", code


def _cmd_emit_dot(cfg, S, name):
    return formats.groupoid_to_dot(_groupoid(S, cfg.kind), cfg.kind), EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "info": _cmd_info,
    "filters": _cmd_filters,
    "groupoid": _cmd_groupoid,
    "topology": _cmd_topology,
    "check": _cmd_check,
    "emit-dot": _cmd_emit_dot,
}


def run(cfg: RunConfig) -> int:
    try:
        if cfg.command == "validate" and cfg.input is not None:
            code = _validate_file(cfg)
            if code is not None:
                return code
        S, name = _load(cfg)
        from . import filters as _filters

        _filters.BRUTEFORCE_CAP = min(_filters.BRUTEFORCE_CAP, cfg.bruteforce_cap)
        text, code = COMMANDS[cfg.command](cfg, S, name)
    except MissingZero as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        for v in exc.violations:
            print(f"invalid: {v}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FilterGermError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(cfg, text)
    return code


def _validate_file(cfg: RunConfig) -> int | None:
    """Report axiom violations on stdout with exit 1 instead of failing as bad input."""
    try:
        formats.parse_semigroup_file(cfg.input, cfg.adjoin_zero)
    except ValidationError as exc:
        lines = [f"invalid\t{v}" for v in exc.violations]
        _write(cfg, "\n".join(lines) + "\n")
        return EXIT_FAIL
    return None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="semigroup table file")
    common.add_argument("--build", metavar="FAMILY:K", help="brandt:K, symmetric_inverse:K or chain:K")
    common.add_argument("--adjoin-zero", action="store_true", help="add a zero if the table lacks one")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--bruteforce-cap", type=int, default=20)
    common.add_argument("--point-cap", type=int, default=1 << 14)

    parser = argparse.ArgumentParser(
        prog="filtergerm",
        description="Filter and germ groupoids of finite inverse semigroups with zero.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the inverse semigroup axioms")
    sub.add_parser("info", parents=[common], help="idempotents, order and zero")
    p = sub.add_parser("filters", parents=[common], help="list filters")
    p.add_argument("--select", choices=("all", "proper", "ultra", "idempotent"), default="proper")
    p.add_argument("--mode", choices=("principal", "bruteforce"), default="principal")
    p.add_argument("--efilters", action="store_true", help="filters of the idempotent semilattice")
    for cmd in ("groupoid", "emit-dot"):
        p = sub.add_parser(cmd, parents=[common], help=f"{cmd} of filters or germs")
        p.add_argument("--kind", choices=tuple(GROUPOID_KINDS), default="filters")
    p = sub.add_parser("topology", parents=[common], help="Hausdorff verdict for a finite space")
    p.add_argument("--space", choices=("units", "efilters", "arrows"), default="units")
    p.add_argument("--basis", choices=("principal", "patch"), default="patch")
    p = sub.add_parser("check", parents=[common], help="verify every claim")
    p.add_argument("--mutate", choices=("compose", "germ-equiv"),
                   help="corrupt one table entry first (sanity check of the checks)")
    p.add_argument("--timings", action="store_true", help="include per-claim timings")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fields = {k.replace("-", "_"): v for k, v in vars(args).items()}
    if fields["command"] == "emit-dot":
        fields["format"] = "dot"
    try:
        cfg = RunConfig(**fields)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
