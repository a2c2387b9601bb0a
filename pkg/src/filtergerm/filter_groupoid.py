"""The groupoid of proper filters and its basic open sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from .algebra import InverseSemigroup
from .errors import BadPatchSet, TooLarge
from .filters import EFilter, Filter, enumerate_filters, epsilon, up_closure
from .groupoid import FiniteGroupoid, is_etale_basis, is_local_bisection
from .report import CheckReport
from .topology import MAX_PATCH_DOWNSET, tight_efilters

KINDS = ("proper", "ultra", "tight")


def compose_filters(F: Filter, G: Filter) -> Filter:
    """``↑(FG)``; defined for every pair, composable or not."""
    S = F.semigroup
    t = S.table
    return Filter(up_closure(S, {t[f][g] for f in F.carrier for g in G.carrier}), S)


def filter_inverse(F: Filter) -> Filter:
    S = F.semigroup
    return Filter(frozenset(S.inv[a] for a in F.carrier), S)


def filter_d(F: Filter) -> Filter:
    return compose_filters(filter_inverse(F), F)


def filter_r(F: Filter) -> Filter:
    return compose_filters(F, filter_inverse(F))


def composable(F: Filter, G: Filter) -> bool:
    return filter_d(F).carrier == filter_r(G).carrier


def eta(F: Filter) -> EFilter:
    """``d(F) ∩ E`` as an E-filter."""
    S = F.semigroup
    return EFilter(filter_d(F).carrier & S.idempotent_members, S)


def _arrows_for(S: InverseSemigroup, kind: str) -> list[Filter]:
    if kind == "proper":
        return enumerate_filters(S, "principal", "proper")
    if kind == "ultra":
        return enumerate_filters(S, "principal", "ultra")
    if kind == "tight":
        tight = set(tight_efilters(S))
        E = S.idempotent_members
        return [
            F
            for F in enumerate_filters(S, "principal", "proper")
            if EFilter(filter_d(F).carrier & E, S) in tight
            and EFilter(filter_r(F).carrier & E, S) in tight
        ]
    raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=128)
def build_filter_groupoid(S: InverseSemigroup, kind: str = "proper") -> FiniteGroupoid:
    filters = _arrows_for(S, kind)
    idx = {F: a for a, F in enumerate(filters)}
    d = [filter_d(F) for F in filters]
    r = [filter_r(F) for F in filters]
    by_range: dict[frozenset, list[int]] = {}
    for b, rb in enumerate(r):
        by_range.setdefault(rb.carrier, []).append(b)
    compose = {}
    for a, F in enumerate(filters):
        for b in by_range.get(d[a].carrier, ()):
            compose[(a, b)] = idx[compose_filters(F, filters[b])]
    invert = [idx[filter_inverse(F)] for F in filters]
    return FiniteGroupoid(MappingProxyType(compose), tuple(invert), tuple(filters), f"filters:{kind}")


@dataclass(frozen=True)
class BasicSet:
    kind: str
    s: int
    T: frozenset[int]
    members: frozenset[int]


def basic_set(
    S: InverseSemigroup,
    kind: str,
    s: int,
    T=(),
    groupoid: FiniteGroupoid | None = None,
) -> BasicSet:
    """``F_s`` (principal), ``F_{s:T}`` (patch) or ``U_s`` (ultra) as arrow ids.

    Arrow ids refer to ``groupoid`` (the proper-filter groupoid by default).
    """
    T = frozenset(T)
    if not T <= S.down_sets[s]:
        raise BadPatchSet(f"{sorted(T)} is not below {S.label(s)}")
    if kind != "patch" and T:
        raise BadPatchSet("only patch sets take an exclusion set")
    G = groupoid if groupoid is not None else build_filter_groupoid(S, "proper")
    ultra = None
    if kind == "ultra":
        ultra = set(enumerate_filters(S, "principal", "ultra"))
    elif kind not in ("principal", "patch"):
        raise ValueError(f"unknown basic set kind {kind!r}")
    members = frozenset(
        a
        for a, F in enumerate(G.payload)
        if s in F.carrier
        and not F.carrier & T
        and (ultra is None or F in ultra)
    )
    return BasicSet(kind, s, T, members)


def _subsets(xs):
    xs = sorted(xs)
    return itertools.chain.from_iterable(
        itertools.combinations(xs, k) for k in range(len(xs) + 1)
    )


def patch_basis(S: InverseSemigroup, G: FiniteGroupoid, elements=None) -> list[BasicSet]:
    """Every ``F_{s:T}`` with ``T ⊆ ↓s``, over the arrows of ``G``."""
    out = []
    for s in elements if elements is not None else S.elements():
        below = S.down_sets[s]
        if len(below) > MAX_PATCH_DOWNSET:
            raise TooLarge(f"down-set of {S.label(s)} has {len(below)} elements")
        for T in _subsets(below):
            out.append(basic_set(S, "patch", s, T, G))
    return out


def principal_basis(S: InverseSemigroup, G: FiniteGroupoid) -> list[BasicSet]:
    return [basic_set(S, "principal", s, (), G) for s in S.elements()]


def check_filter_calculus(S: InverseSemigroup) -> CheckReport:
    """``F = ↑(s d(F))`` for ``s in F``, and ``F = G`` when they meet with equal sources."""
    rep = CheckReport("filter calculus")
    proper = enumerate_filters(S, "principal", "proper")
    t = S.table
    ds = {F: filter_d(F) for F in proper}
    for F in proper:
        for s in sorted(F.carrier):
            rep.checked += 1
            if up_closure(S, {t[s][x] for x in ds[F].carrier}) != F.carrier:
                rep.fail("(a)", "F != up(s d(F))", F.label(), S.label(s))
    for F, G in itertools.product(proper, repeat=2):
        rep.checked += 1
        if F.carrier & G.carrier and ds[F] == ds[G] and F != G:
            rep.fail("(b)", "distinct filters meet and share a source", F.label(), G.label())
    return rep


def check_principal_basic_sets(S: InverseSemigroup) -> CheckReport:
    """Inverse, product, bisection and source laws for the sets ``F_s``."""
    rep = CheckReport("principal basic sets")
    G = build_filter_groupoid(S, "proper")
    Fs = {s: basic_set(S, "principal", s, (), G).members for s in S.elements()}
    inv, t = S.inv, S.table
    for s in S.elements():
        rep.checked += 1
        if G.inverse_set(Fs[s]) != Fs[inv[s]]:
            rep.fail("(a)", "F_s^-1 != F_{s^-1}", S.label(s))
    for s, u in itertools.product(S.elements(), repeat=2):
        rep.checked += 1
        if G.product_set(Fs[s], Fs[u]) != Fs[t[s][u]]:
            rep.fail("(b)", "F_s F_t != F_st", S.label(s), S.label(u))
    for s in S.elements():
        rep.checked += 1
        if not is_local_bisection(G, Fs[s]):
            rep.fail("(c)", "F_s is not a local bisection", S.label(s))
        sources = frozenset(G.d(a) for a in Fs[s])
        if sources != Fs[S.source(s)] or not sources <= G.units:
            rep.fail("(d)", "d(F_s) != F_{s^-1 s}", S.label(s))
    etale = is_etale_basis(G, Fs.values())
    rep.checked += etale.checked
    for v in etale.violations:
        rep.fail("(e)", v.message, *v.witness)
    return rep


def check_embedding(S: InverseSemigroup) -> CheckReport:
    """``s -> ↑s`` is injective and multiplicative."""
    rep = CheckReport("principal embedding")
    ups = [Filter(S.up_sets[s], S) for s in S.elements()]
    if len(set(ups)) != len(ups):
        rep.fail("injective", "two elements share an up-set")
    for s, u in itertools.product(S.elements(), repeat=2):
        rep.checked += 1
        if compose_filters(ups[s], ups[u]) != ups[S.table[s][u]]:
            rep.fail("multiplicative", "up(s) up(t) != up(st)", S.label(s), S.label(u))
    return rep


def unit_filters(G: FiniteGroupoid) -> list[Filter]:
    return [G.payload[a] for a in sorted(G.units)]


def d_epsilon(F: Filter) -> EFilter:
    """``ε(d(F))``, which is the same E-filter as :func:`eta`."""
    return epsilon(filter_d(F))


# short names kept for existing callers
check_lemma31 = check_filter_calculus
check_lemma32 = check_principal_basic_sets
