"""Finite groupoids as explicit tables, and generic checkers over them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

from .report import CheckReport

Arrow = int


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """Arrows are ``0..m-1``; ``compose[(a, b)]`` is defined exactly on composable pairs."""

    compose: Mapping[tuple[Arrow, Arrow], Arrow]
    invert: Sequence[Arrow]
    payload: Sequence[Any] = field(default=())
    name: str = ""

    @property
    def arrows(self) -> range:
        return range(len(self.invert))

    def __len__(self):
        return len(self.invert)

    def composable(self, a: Arrow, b: Arrow) -> bool:
        return (a, b) in self.compose

    def d(self, a: Arrow) -> Arrow:
        return self.compose[(self.invert[a], a)]

    def r(self, a: Arrow) -> Arrow:
        return self.compose[(a, self.invert[a])]

    @cached_property
    def units(self) -> frozenset[Arrow]:
        return frozenset(self.d(a) for a in self.arrows)

    @cached_property
    def by_payload(self) -> dict[Any, Arrow]:
        return {p: a for a, p in enumerate(self.payload)}

    def arrow_of(self, p) -> Arrow:
        return self.by_payload[p]

    def inverse_set(self, A: Iterable[Arrow]) -> frozenset[Arrow]:
        return frozenset(self.invert[a] for a in A)

    def product_set(self, A: Iterable[Arrow], B: Iterable[Arrow]) -> frozenset[Arrow]:
        B = list(B)
        return frozenset(
            self.compose[(a, b)] for a in A for b in B if (a, b) in self.compose
        )

    def label(self, a: Arrow) -> str:
        if self.payload:
            p = self.payload[a]
            return p.label() if hasattr(p, "label") else str(p)
        return str(a)


def pair_groupoid(k: int) -> FiniteGroupoid:
    """The groupoid of all pairs ``(i, j)`` on ``k`` objects; arrow ``(i,j)`` goes j -> i."""
    pairs = [(i, j) for i in range(k) for j in range(k)]
    idx = {p: m for m, p in enumerate(pairs)}
    compose = {}
    for (i, j) in pairs:
        for (p, q) in pairs:
            if j == p:
                compose[(idx[i, j], idx[p, q])] = idx[i, q]
    invert = [idx[j, i] for (i, j) in pairs]
    return FiniteGroupoid(compose, invert, pairs, f"pair({k})")


def check_axioms(G: FiniteGroupoid) -> CheckReport:
    rep = CheckReport("groupoid axioms")
    m = len(G)
    for (a, b), c in G.compose.items():
        if not (0 <= a < m and 0 <= b < m and 0 <= c < m):
            rep.fail("table", "composition refers to a missing arrow", a, b, c)
    if not rep.ok:
        return rep
    inv = G.invert

    # (i)
    for g in G.arrows:
        rep.checked += 1
        if inv[inv[g]] != g:
            rep.fail("(i)", "inverse is not an involution", g)
            break
        if (inv[g], g) not in G.compose:
            rep.fail("(i)", "(g^-1, g) is not composable", g)
            break

    # (ii)
    comp = G.compose
    right = {}
    for (a, b) in comp:
        right.setdefault(a, []).append(b)
    done = False
    for (a, b), ab in comp.items():
        for c in right.get(b, ()):
            rep.checked += 1
            bc = comp[(b, c)]
            if (a, bc) not in comp or (ab, c) not in comp:
                rep.fail("(ii)", "composability does not propagate", a, b, c)
                done = True
            elif comp[(a, bc)] != comp[(ab, c)]:
                rep.fail("(ii)", "composition is not associative", a, b, c)
                done = True
            if done:
                break
        if done:
            break

    # (iii)
    for (g, h), gh in comp.items():
        rep.checked += 1
        left_ok = (inv[g], gh) in comp and comp[(inv[g], gh)] == h
        right_ok = (gh, inv[h]) in comp and comp[(gh, inv[h])] == g
        if not (left_ok and right_ok):
            rep.fail("(iii)", "cancellation law fails", g, h)
            break
    return rep


def _injective(f, A) -> bool:
    seen = set()
    for a in A:
        v = f(a)
        if v in seen:
            return False
        seen.add(v)
    return True


def is_local_bisection(G: FiniteGroupoid, A: Iterable[Arrow]) -> bool:
    A = list(A)
    via_d = _injective(G.d, A)
    via_r = _injective(G.r, A)
    if via_d != via_r:
        raise AssertionError(f"source and range injectivity disagree on {sorted(A)}")
    return via_d


def is_etale_basis(G: FiniteGroupoid, B: Iterable[Iterable[Arrow]]) -> CheckReport:
    B = [frozenset(O) for O in B]
    members = set(B)
    rep = CheckReport("etale basis")
    distinct = sorted(members, key=lambda O: sorted(O))
    for O in distinct:
        rep.checked += 1
        Oinv = G.inverse_set(O)
        if Oinv not in members:
            rep.fail("inverse", "O^-1 is not in the family", sorted(O))
        if not G.product_set(Oinv, O) <= G.units:
            rep.fail("units", "O^-1 O is not contained in the units", sorted(O))
    for O, N in itertools.product(distinct, repeat=2):
        rep.checked += 1
        if G.product_set(O, N) not in members:
            rep.fail("product", "ON is not in the family", sorted(O), sorted(N))
            break
    return rep


def is_isomorphism(G: FiniteGroupoid, H: FiniteGroupoid, phi) -> CheckReport:
    """``phi`` maps arrows of ``G`` to arrows of ``H`` (a mapping or sequence)."""
    rep = CheckReport("groupoid isomorphism")
    image = [phi[a] for a in G.arrows]
    if len(set(image)) != len(image):
        a, b = next(
            (a, b) for a, b in itertools.combinations(G.arrows, 2) if image[a] == image[b]
        )
        rep.fail("bijective", "map is not injective", a, b)
    if set(image) != set(H.arrows):
        rep.fail("bijective", "map is not onto", sorted(set(H.arrows) - set(image))[:5])
    if not rep.ok:
        return rep
    back = {image[a]: a for a in G.arrows}
    for (a, b), ab in G.compose.items():
        rep.checked += 1
        pa, pb = image[a], image[b]
        if (pa, pb) not in H.compose:
            rep.fail("composable", "image pair is not composable", a, b)
            break
        if H.compose[(pa, pb)] != image[ab]:
            rep.fail("homomorphism", "phi(ab) != phi(a)phi(b)", a, b)
            break
    for (x, y) in H.compose:
        rep.checked += 1
        if (back[x], back[y]) not in G.compose:
            rep.fail("composable", "preimage pair is not composable", back[x], back[y])
            break
    for a in G.arrows:
        if image[G.invert[a]] != H.invert[image[a]]:
            rep.fail("inverse", "phi(a^-1) != phi(a)^-1", a)
            break
    return rep


def is_subgroupoid(G: FiniteGroupoid, H: Iterable[Arrow]) -> bool:
    H = frozenset(H)
    if any(G.invert[g] not in H for g in H):
        return False
    return all(G.compose[(a, b)] in H for a in H for b in H if (a, b) in G.compose)
