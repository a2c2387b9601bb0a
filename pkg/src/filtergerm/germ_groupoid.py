"""Germs of the standard action of ``S`` on proper E-filters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Iterable

from .algebra import InverseSemigroup
from .errors import BadBase, DomainError, NotComposable
from .filters import EFilter, efilters, up_closure
from .groupoid import FiniteGroupoid
from .topology import tight_efilters


@dataclass(frozen=True)
class GermPoint:
    s: int
    xi: EFilter

    @property
    def sort_key(self):
        return (self.s, tuple(sorted(self.xi.carrier)))

    def label(self) -> str:
        return f"({self.xi.semigroup.label(self.s)}, {self.xi.label()})"


@dataclass(frozen=True)
class Germ:
    rep: GermPoint
    members: tuple[GermPoint, ...]

    @property
    def s(self) -> int:
        return self.rep.s

    @property
    def xi(self) -> EFilter:
        return self.rep.xi

    def label(self) -> str:
        return f"[{self.xi.semigroup.label(self.s)}, {self.xi.label()}]"


def beta(S: InverseSemigroup, s: int, xi: EFilter) -> EFilter:
    """``{f in E : s e s⁻¹ <= f for some e in xi}``."""
    if S.source(s) not in xi.carrier:
        raise DomainError(f"{S.label(S.source(s))} is not in {xi.label()}")
    t, si = S.table, S.inv[s]
    conj = {t[t[s][e]][si] for e in xi.carrier}
    return EFilter(up_closure(S, conj) & S.idempotent_members, S)


def is_germ_point(S: InverseSemigroup, p: GermPoint) -> bool:
    return S.source(p.s) in p.xi.carrier


def germ_equiv(S: InverseSemigroup, p: GermPoint, q: GermPoint) -> bool:
    if not (is_germ_point(S, p) and is_germ_point(S, q)):
        return False
    if p.xi != q.xi:
        return False
    t = S.table
    return any(t[p.s][e] == t[q.s][e] for e in p.xi.carrier)


def germ_points(S: InverseSemigroup, xis: Iterable[EFilter]) -> list[GermPoint]:
    xis = list(xis)
    pts = [GermPoint(s, xi) for s in S.elements() for xi in xis if S.source(s) in xi.carrier]
    return sorted(pts, key=lambda p: p.sort_key)


def germ_class(S: InverseSemigroup, s: int, xi: EFilter) -> Germ:
    p = GermPoint(s, xi)
    if not is_germ_point(S, p):
        raise DomainError(f"{p.label()} is not a germ point")
    members = [GermPoint(u, xi) for u in S.elements() if germ_equiv(S, p, GermPoint(u, xi))]
    return Germ(members[0], tuple(members))


def efilters_for_kind(S: InverseSemigroup, kind: str) -> list[EFilter]:
    if kind == "proper":
        return efilters(S, "proper")
    if kind == "ultra":
        return efilters(S, "ultra")
    if kind == "tight":
        return tight_efilters(S)
    raise ValueError(f"unknown kind {kind!r}")


def _partition(points, equiv) -> list[list[GermPoint]]:
    parent = list(range(len(points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(points)), 2):
        if equiv(points[i], points[j]):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    classes: dict[int, list[GermPoint]] = {}
    for i, p in enumerate(points):
        classes.setdefault(find(i), []).append(p)
    return list(classes.values())


def build_germ_groupoid(
    S: InverseSemigroup,
    kind: str = "proper",
    equiv: Callable[[InverseSemigroup, GermPoint, GermPoint], bool] | None = None,
) -> FiniteGroupoid:
    """Germ classes over proper, tight or ultra E-filters.

    ``equiv`` overrides the germ relation (used for fault injection); the
    default is :func:`germ_equiv`.
    """
    if equiv is None:
        return _build_cached(S, kind)
    return _build(S, kind, equiv)


@lru_cache(maxsize=128)
def _build_cached(S, kind):
    return _build(S, kind, germ_equiv)


def _build(S, kind, equiv) -> FiniteGroupoid:
    points = germ_points(S, efilters_for_kind(S, kind))
    classes = _partition(points, lambda p, q: equiv(S, p, q))
    germs = sorted(
        (Germ(min(c, key=lambda p: p.sort_key), tuple(c)) for c in classes),
        key=lambda g: g.rep.sort_key,
    )
    where = {p: a for a, g in enumerate(germs) for p in g.members}
    by_xi: dict[EFilter, list[int]] = {}
    for a, g in enumerate(germs):
        by_xi.setdefault(g.xi, []).append(a)
    t = S.table
    compose = {}
    for b, h in enumerate(germs):
        target = beta(S, h.s, h.xi)
        for a in by_xi.get(target, ()):
            compose[(a, b)] = where[GermPoint(t[germs[a].s][h.s], h.xi)]
    invert = [where[GermPoint(S.inv[g.s], beta(S, g.s, g.xi))] for g in germs]
    return FiniteGroupoid(MappingProxyType(compose), tuple(invert), tuple(germs), f"germs:{kind}")


def point_index(G: FiniteGroupoid) -> dict[GermPoint, int]:
    return {p: a for a, g in enumerate(G.payload) for p in g.members}


def invert_germ(S: InverseSemigroup, g: Germ) -> Germ:
    results = {germ_class(S, S.inv[p.s], beta(S, p.s, p.xi)) for p in g.members}
    if len(results) != 1:
        raise AssertionError(f"inverse of {g.label()} depends on the representative")
    return results.pop()


def compose_germs(S: InverseSemigroup, g: Germ, h: Germ) -> Germ:
    if g.xi != beta(S, h.s, h.xi):
        raise NotComposable(f"{g.label()} and {h.label()} are not composable")
    results = set()
    for p, q in itertools.product(g.members, h.members):
        if p.xi != beta(S, q.s, q.xi):
            raise AssertionError(f"composability of {p.label()}, {q.label()} depends on representatives")
        results.add(germ_class(S, S.table[p.s][q.s], q.xi))
    if len(results) != 1:
        raise AssertionError(f"product of {g.label()} and {h.label()} depends on representatives")
    return results.pop()


def theta(S: InverseSemigroup, s: int, A: Iterable[EFilter]) -> frozenset[Germ]:
    """``{[s, xi] : xi in A}``."""
    A = list(A)
    for xi in A:
        if S.source(s) not in xi.carrier:
            raise BadBase(f"{xi.label()} does not contain {S.label(S.source(s))}")
    return frozenset(germ_class(S, s, xi) for xi in A)


def theta_arrows(G: FiniteGroupoid, S: InverseSemigroup, s: int, A: Iterable[EFilter], index=None) -> frozenset[int]:
    index = point_index(G) if index is None else index
    out = set()
    for xi in A:
        if S.source(s) not in xi.carrier:
            raise BadBase(f"{xi.label()} does not contain {S.label(S.source(s))}")
        out.add(index[GermPoint(s, xi)])
    return frozenset(out)
