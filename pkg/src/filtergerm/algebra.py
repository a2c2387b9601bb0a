"""Finite inverse semigroups with zero, given by multiplication tables.

Elements are the integers ``0..n-1`` and the zero is always index 0 once a
table has been validated.  Products are read row-first: ``table[a][b] == a*b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import MalformedTable, MeetMissing, ValidationError
from .report import Violation

MAX_ELEMENTS = 256


@dataclass(frozen=True)
class InverseSemigroup:
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    zero: int | None = 0

    @property
    def n(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def label(self, a: int) -> str:
        if self.labels is None:
            return str(a)
        return self.labels[a]

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def elements(self) -> range:
        return range(self.n)

    @cached_property
    def idempotent_members(self) -> frozenset[int]:
        return frozenset(a for a in self.elements() if self.table[a][a] == a)

    @cached_property
    def leq_matrix(self) -> tuple[tuple[bool, ...], ...]:
        t, inv = self.table, self.inv
        return tuple(
            tuple(t[t[a][inv[a]]][b] == a for b in self.elements())
            for a in self.elements()
        )

    @cached_property
    def up_sets(self) -> tuple[frozenset[int], ...]:
        leq = self.leq_matrix
        return tuple(
            frozenset(b for b in self.elements() if leq[a][b]) for a in self.elements()
        )

    @cached_property
    def down_sets(self) -> tuple[frozenset[int], ...]:
        leq = self.leq_matrix
        return tuple(
            frozenset(b for b in self.elements() if leq[b][a]) for a in self.elements()
        )

    def leq(self, a: int, b: int) -> bool:
        return self.leq_matrix[a][b]

    def is_idempotent(self, a: int) -> bool:
        return a in self.idempotent_members

    def source(self, a: int) -> int:
        """``a⁻¹a``."""
        return self.table[self.inv[a]][a]

    def range_(self, a: int) -> int:
        """``aa⁻¹``."""
        return self.table[a][self.inv[a]]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    semigroup: InverseSemigroup | None = None
    # relabel[old] == new index; the zero moves to 0, other elements keep order
    relabel: tuple[int, ...] | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class OrderRelation:
    leq: tuple[tuple[bool, ...], ...]
    hasse: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IdempotentSet:
    members: tuple[int, ...]
    # meet_table[i][j] is the product of members[i] and members[j]
    meet_table: tuple[tuple[int, ...], ...]


def _as_array(table) -> np.ndarray:
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise MalformedTable("empty table")
    if n > MAX_ELEMENTS:
        raise MalformedTable(f"table has {n} elements; the cap is {MAX_ELEMENTS}")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise MalformedTable(f"row {i} has {len(r)} entries, expected {n}")
        for j, x in enumerate(r):
            if not isinstance(x, (int, np.integer)) or not 0 <= x < n:
                raise MalformedTable(f"entry ({i},{j}) = {x!r} out of range [0, {n})")
    return np.array(rows, dtype=np.int64).reshape(n, n)


def _find_zeros(t: np.ndarray) -> list[int]:
    n = len(t)
    return [z for z in range(n) if (t[z, :] == z).all() and (t[:, z] == z).all()]


def _check_core(t: np.ndarray, require_zero: bool):
    """Associativity, regularity and idempotent commutativity.

    Returns ``(violations, inverse map or None, zero or None)``.
    """
    n = len(t)
    violations = []
    left = t[t]  # [a,b,c] -> (ab)c
    right = t[:, t]  # [a,b,c] -> a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(x) for x in bad[0])
        violations.append(
            Violation("associativity", f"({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c))
        )
        return violations, None, None

    inv = [None] * n
    for a in range(n):
        # x with a x a = a and x a x = x
        axa = t[t[a, :], a]
        xax = t[t[:, a], np.arange(n)]
        cands = np.nonzero((axa == a) & (xax == np.arange(n)))[0]
        if len(cands) == 0:
            violations.append(Violation("regularity", f"element {a} has no inverse", (a,)))
        else:
            inv[a] = int(cands[0])

    idem = [e for e in range(n) if t[e, e] == e]
    for e, f in itertools.combinations(idem, 2):
        if t[e, f] != t[f, e]:
            violations.append(
                Violation(
                    "idempotents do not commute",
                    f"{e}*{f} = {t[e, f]} != {t[f, e]} = {f}*{e}",
                    (e, f),
                )
            )
            break

    zeros = _find_zeros(t)
    zero = zeros[0] if zeros else None
    if require_zero and zero is None:
        violations.append(Violation("zero", "no zero element", ()))
    if violations:
        return violations, None, zero
    return violations, tuple(inv), zero


def validate_inverse_semigroup(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    require_zero: bool = True,
) -> ValidationReport:
    """Check the inverse semigroup axioms and canonicalize the zero to index 0.

    Raises :class:`MalformedTable` for non-square tables or out-of-range
    entries; axiom failures are returned as violations.
    """
    t = _as_array(table)
    n = len(t)
    if labels is not None and len(labels) != n:
        raise MalformedTable(f"{len(labels)} labels for {n} elements")
    violations, inv, zero = _check_core(t, require_zero)
    if violations:
        return ValidationReport(tuple(violations))

    if zero is None:
        perm = list(range(n))
    else:
        perm = [zero] + [a for a in range(n) if a != zero]
    relabel = [0] * n
    for new, old in enumerate(perm):
        relabel[old] = new
    new_table = tuple(
        tuple(relabel[int(t[perm[i], perm[j]])] for j in range(n)) for i in range(n)
    )
    new_inv = tuple(relabel[inv[perm[i]]] for i in range(n))
    new_labels = tuple(labels[perm[i]] for i in range(n)) if labels is not None else None
    S = InverseSemigroup(new_table, new_inv, new_labels, 0 if zero is not None else None)
    return ValidationReport((), S, tuple(relabel))


def from_table(table, labels=None) -> InverseSemigroup:
    """Validate and return, raising :class:`ValidationError` on failure."""
    report = validate_inverse_semigroup(table, labels)
    if not report.ok:
        raise ValidationError(report.violations)
    return report.semigroup


def adjoin_zero(S, labels=None, force: bool = False) -> InverseSemigroup:
    """Return ``S`` with an absorbing element added unless it already has one.

    ``S`` may be an :class:`InverseSemigroup` or a raw multiplication table.
    A one-element group is its own zero; pass ``force=True`` to treat it (or
    any table) as zero-free and adjoin a fresh zero anyway.
    """
    if isinstance(S, InverseSemigroup):
        if not force:
            return S
        labels = S.labels if labels is None else labels
        S = S.table
    t = _as_array(S)
    if _find_zeros(t) and not force:
        return from_table(S, labels)
    violations, _, _ = _check_core(t, require_zero=False)
    if violations:
        raise ValidationError(violations)
    n = len(t)
    # new zero goes in front
    rows = [[0] * (n + 1)]
    for a in range(n):
        rows.append([0] + [int(t[a, b]) + 1 for b in range(n)])
    new_labels = None
    if labels is not None:
        fresh = next(z for z in ("0", "z", *(f"z{i}" for i in range(n + 1))) if z not in labels)
        new_labels = [fresh] + list(labels)
    return from_table(rows, new_labels)


def idempotents(S: InverseSemigroup) -> IdempotentSet:
    members = tuple(sorted(S.idempotent_members))
    assert set(members) == {S.source(s) for s in S.elements()}
    meet = tuple(tuple(S.table[e][f] for f in members) for e in members)
    return IdempotentSet(members, meet)


def natural_leq(S: InverseSemigroup, a: int, b: int) -> bool:
    """``a <= b`` iff ``a == a a⁻¹ b``."""
    return S.mul(a, S.inv[a], b) == a


def order_relation(S: InverseSemigroup) -> OrderRelation:
    els = S.elements()
    leq = tuple(tuple(natural_leq(S, a, b) for b in els) for a in els)
    hasse = []
    for a in els:
        for b in els:
            if a == b or not leq[a][b]:
                continue
            if not any(c != a and c != b and leq[a][c] and leq[c][b] for c in els):
                hasse.append((a, b))
    return OrderRelation(leq, tuple(hasse))


def restrict(S: InverseSemigroup, members) -> tuple[InverseSemigroup, tuple[int, ...]]:
    """The subsemigroup on ``members`` (which must be closed) and its embedding."""
    emb = tuple(sorted(members))
    pos = {a: i for i, a in enumerate(emb)}
    try:
        table = [[pos[S.table[a][b]] for b in emb] for a in emb]
        labels = [S.label(a) for a in emb] if S.labels is not None else [str(a) for a in emb]
        inv = [pos[S.inv[a]] for a in emb]
    except KeyError as exc:
        raise ValueError(f"subset is not closed: produces {exc.args[0]}") from None
    T = from_table(table, labels)
    # zero of S is the smallest index, so it stays in front
    assert T.inv == tuple(inv)
    return T, emb


def inverse_closure_subsemigroup(S: InverseSemigroup, gens):
    """Smallest inverse subsemigroup containing ``gens`` and the zero.

    Returns ``(T, embedding)`` with ``embedding[i]`` the index in ``S`` of
    element ``i`` of ``T``.
    """
    gens = set(gens)
    if not gens:
        raise ValueError("need at least one generator")
    current = {S.zero} | gens | {S.inv[g] for g in gens}
    frontier = set(current)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(current):
                for p in (S.table[a][b], S.table[b][a]):
                    if p not in current:
                        new.add(p)
        new |= {S.inv[x] for x in new}
        new -= current
        current |= new
        frontier = new
    return restrict(S, current)


# standard families


def brandt(k: int) -> InverseSemigroup:
    """Matrix units ``e_ij`` (``1 <= i,j <= k``) with a zero; ``k*k + 1`` elements."""
    if k < 1:
        raise ValueError("k must be >= 1")
    units = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]
    idx = {u: m + 1 for m, u in enumerate(units)}
    n = len(units) + 1
    table = [[0] * n for _ in range(n)]
    for (i, j) in units:
        for (p, q) in units:
            if j == p:
                table[idx[i, j]][idx[p, q]] = idx[i, q]
    sep = "" if k < 10 else ","
    labels = ["0"] + [f"e{i}{sep}{j}" for (i, j) in units]
    return from_table(table, labels)


def _pmap_label(pm) -> str:
    if not pm:
        return "0"
    return ",".join(f"{x}->{y}" for x, y in pm)


def partial_injections(k: int) -> list[tuple[tuple[int, int], ...]]:
    """All partial injections of ``{1..k}``, ordered by domain then image."""
    points = range(1, k + 1)
    out = []
    for size in range(k + 1):
        for dom in itertools.combinations(points, size):
            for img in itertools.permutations(points, size):
                out.append(tuple(zip(dom, img)))
    return out


def symmetric_inverse(k: int) -> InverseSemigroup:
    """All partial injections on ``k`` points; ``a*b`` applies ``a`` first."""
    if k < 1:
        raise ValueError("k must be >= 1")
    maps = partial_injections(k)
    idx = {m: i for i, m in enumerate(maps)}
    table = []
    for a in maps:
        row = []
        for b in maps:
            db = dict(b)
            row.append(idx[tuple((x, db[y]) for x, y in a if y in db)])
        table.append(row)
    return from_table(table, [_pmap_label(m) for m in maps])


def chain(k: int) -> InverseSemigroup:
    """The chain ``0 < x1 < ... < xk`` under meet."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = k + 1
    table = [[min(a, b) for b in range(n)] for a in range(n)]
    return from_table(table, ["0"] + [f"x{i}" for i in range(1, n)])


def meet_semilattice(leq, labels=None) -> InverseSemigroup:
    """Semilattice from a partial order matrix with all binary meets and a bottom."""
    leq = [[bool(x) for x in row] for row in leq]
    n = len(leq)
    if any(len(r) != n for r in leq):
        raise MalformedTable("order matrix must be square")
    for a in range(n):
        if not leq[a][a]:
            raise MalformedTable(f"order is not reflexive at {a}")
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                raise MalformedTable(f"order is not antisymmetric at ({a},{b})")
            for c in range(n):
                if leq[a][b] and leq[b][c] and not leq[a][c]:
                    raise MalformedTable(f"order is not transitive at ({a},{b},{c})")
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if leq[c][a] and leq[c][b]]
            greatest = [c for c in lower if all(leq[d][c] for d in lower)]
            if not greatest:
                raise MeetMissing(f"no meet for ({a},{b})")
            table[a][b] = greatest[0]
    if not any(all(leq[z][a] for a in range(n)) for z in range(n)):
        raise MeetMissing("no bottom element")
    return from_table(table, labels)


def build_standard(family: str, param) -> InverseSemigroup:
    builders = {
        "brandt": brandt,
        "symmetric_inverse": symmetric_inverse,
        "chain": chain,
        "meet_semilattice": meet_semilattice,
    }
    try:
        return builders[family](param)
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
