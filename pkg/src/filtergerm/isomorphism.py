"""The filter-to-germ isomorphism and the consolidated verification run."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Callable

from .algebra import InverseSemigroup
from .errors import TooLarge
from .filter_groupoid import (
    basic_set,
    build_filter_groupoid,
    check_embedding,
    check_filter_calculus,
    check_principal_basic_sets,
    eta,
    filter_inverse,
    patch_basis,
)
from .filters import (
    BRUTEFORCE_CAP,
    Filter,
    efilters,
    enumerate_filters,
    epsilon,
    epsilon_inv,
    idempotent_proper_filters,
    is_efilter,
    up_closure,
)
from .germ_groupoid import (
    Germ,
    GermPoint,
    beta,
    build_germ_groupoid,
    germ_class,
    germ_equiv,
    germ_points,
    point_index,
    theta_arrows,
)
from .groupoid import FiniteGroupoid, check_axioms, is_isomorphism, is_subgroupoid
from .report import CheckReport
from .topology import (
    FiniteTopology,
    check_map_topology,
    efilter_basis,
    efilter_topology,
    generate_topology,
    is_hausdorff,
    map_is_homeomorphism,
    same_topology,
    subspace,
    tight_efilters,
)

# bruteforce cross-checks inside verify_all stay below this size
VERIFY_BRUTEFORCE_CAP = 14


def pi(F: Filter, check: bool = True) -> Germ:
    """``[s, eta(F)]`` for the smallest index ``s`` in ``F``."""
    S = F.semigroup
    xi = eta(F)
    g = germ_class(S, min(F.carrier), xi)
    if check:
        for s in F.carrier:
            if GermPoint(s, xi) not in g.members:
                raise AssertionError(f"pi({F.label()}) depends on the choice of {S.label(s)}")
    return g


def pi_inv(g: Germ, check: bool = True) -> Filter:
    """``↑(s xi)`` for the canonical representative ``(s, xi)``."""
    S = g.xi.semigroup

    def lift(p):
        return up_closure(S, {S.table[p.s][e] for e in p.xi.carrier})

    carrier = lift(g.rep)
    if check:
        for p in g.members:
            if lift(p) != carrier:
                raise AssertionError(f"pi^-1({g.label()}) depends on the representative {p.label()}")
    return Filter(carrier, S)


@dataclass(frozen=True)
class Mutation:
    """Deliberate corruption used to confirm the checks are not vacuous.

    ``kind`` is ``"compose"`` (reroute one entry of the proper-filter
    composition table) or ``"germ-equiv"`` (flip one germ-equivalence verdict).
    """

    kind: str


@dataclass
class ClaimResult:
    claim: str
    passed: bool
    checked: int = 0
    witness: str | None = None
    note: str = ""
    seconds: float = 0.0

    def as_dict(self, timings: bool = False) -> dict:
        d = {"claim": self.claim, "passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note:
            d["note"] = self.note
        if timings:
            d["seconds"] = round(self.seconds, 6)
        return d


@dataclass
class VerificationReport:
    instance: str
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def __getitem__(self, claim: str) -> ClaimResult:
        for c in self.claims:
            if c.claim == claim:
                return c
        raise KeyError(claim)


def _reroute(G: FiniteGroupoid) -> FiniteGroupoid:
    compose = dict(G.compose)
    if len(G) < 2:
        raise ValueError("need at least two arrows to reroute a composition")
    key = min(k for k in compose if k[0] not in G.units) if any(
        k[0] not in G.units for k in compose
    ) else min(compose)
    compose[key] = (compose[key] + 1) % len(G)
    return FiniteGroupoid(MappingProxyType(compose), G.invert, G.payload, G.name + ":mutated")


def _flipped_equiv(S: InverseSemigroup) -> Callable:
    pts = germ_points(S, efilters(S, "proper"))
    target = None
    for p, q in itertools.combinations(pts, 2):
        if p.xi == q.xi:
            target = (p, q)
            if germ_equiv(S, p, q):
                break
    if target is None:
        if not pts:
            raise ValueError("no germ points to mutate")
        target = (pts[0], pts[0])

    def equiv(S_, p, q):
        verdict = germ_equiv(S_, p, q)
        return not verdict if (p, q) == target else verdict

    equiv.target = target
    return equiv


class _Context:
    """Lazily built structures shared by the claims of one run."""

    def __init__(self, S: InverseSemigroup, mutation: Mutation | None):
        self.S = S
        self.mutation = mutation
        self.equiv = germ_equiv
        if mutation is not None and mutation.kind == "germ-equiv":
            self.equiv = _flipped_equiv(S)
        elif mutation is not None and mutation.kind != "compose":
            raise ValueError(f"unknown mutation {mutation.kind!r}")

    def filters(self, kind) -> FiniteGroupoid:
        G = build_filter_groupoid(self.S, kind)
        if kind == "proper" and self.mutation is not None and self.mutation.kind == "compose":
            return self._mutated
        return G

    @cached_property
    def _mutated(self):
        return _reroute(build_filter_groupoid(self.S, "proper"))

    def germs(self, kind) -> FiniteGroupoid:
        if self.equiv is germ_equiv:
            return build_germ_groupoid(self.S, kind)
        return self._germs_mutated(kind)

    def _germs_mutated(self, kind):
        cache = self.__dict__.setdefault("_gm", {})
        if kind not in cache:
            cache[kind] = build_germ_groupoid(self.S, kind, self.equiv)
        return cache[kind]

    @cached_property
    def G(self) -> FiniteGroupoid:
        return self.filters("proper")

    @cached_property
    def H(self) -> FiniteGroupoid:
        return self.germs("proper")

    @cached_property
    def H_index(self):
        return point_index(self.H)

    @cached_property
    def phi(self) -> list[int]:
        """pi as a map of arrow ids, G -> H."""
        return [self.H_index[GermPoint(min(F.carrier), eta(F))] for F in self.G.payload]

    @cached_property
    def patch_sets(self):
        return patch_basis(self.S, self.G)

    @cached_property
    def TG(self) -> FiniteTopology:
        return generate_topology(self.G.arrows, [b.members for b in self.patch_sets])

    def theta_basis(self, H: FiniteGroupoid, xis) -> list[tuple[int, frozenset, frozenset]]:
        """``(s, A, Θ(s, A))`` for every ``s`` and basic open ``A ⊆ F_{s⁻¹s}`` within ``xis``."""
        S = self.S
        xis = frozenset(xis)
        index = point_index(H)
        out = []
        for s in S.elements():
            dom = frozenset(xi for xi in xis if S.source(s) in xi.carrier)
            seen = set()
            for B in efilter_basis(S, "patch"):
                A = B & dom
                if A in seen:
                    continue
                seen.add(A)
                out.append((s, A, theta_arrows(H, S, s, A, index)))
        return out

    @cached_property
    def TH(self) -> FiniteTopology:
        basis = self.theta_basis(self.H, efilters(self.S, "proper"))
        return generate_topology(self.H.arrows, [b for _, _, b in basis])


def _relabel(T: FiniteTopology, f, points) -> FiniteTopology:
    return generate_topology(points, [frozenset(f[x] for x in B) for B in T.basis])


# claims


def _claim_filter_enumeration(ctx, rep):
    S = ctx.S
    principal = enumerate_filters(S, "principal", "all")
    rep.checked += len(principal)
    if S.n <= min(VERIFY_BRUTEFORCE_CAP, BRUTEFORCE_CAP):
        for select in ("all", "proper", "ultra", "idempotent"):
            a = {F.carrier for F in enumerate_filters(S, "principal", select)}
            b = {F.carrier for F in enumerate_filters(S, "bruteforce", select)}
            if a != b:
                rep.fail(select, "principal and bruteforce enumerations differ",
                         sorted(tuple(sorted(c)) for c in a ^ b)[:3])
        for select in ("proper", "ultra"):
            a = set(efilters(S, select, "principal"))
            b = set(efilters(S, select, "bruteforce"))
            if a != b:
                rep.fail("E-" + select, "principal and bruteforce E-filters differ")
        rep.note = "bruteforce cross-check"
    else:
        rep.note = "principal only"


def _claim_groupoid_axioms(ctx, rep):
    S = ctx.S
    for kind in ("proper", "ultra", "tight"):
        for G in (ctx.filters(kind), ctx.germs(kind)):
            r = check_axioms(G)
            rep.checked += r.checked
            for v in r.violations:
                rep.fail(f"{G.name} {v.check}", v.message, *v.witness)
            if not r.ok:
                continue
            for a in G.arrows:
                if G.d(G.invert[a]) != G.r(a):
                    rep.fail(G.name, "d(g^-1) != r(g)", a)
                    break
            fixed = {a for a in G.arrows if G.d(a) == a and G.r(a) == a}
            if fixed != set(G.units):
                rep.fail(G.name, "units are not the fixed points of d and r")
    if not rep.ok:
        return
    G = ctx.G
    for kind in ("ultra", "tight"):
        sub = {G.arrow_of(F) for F in ctx.filters(kind).payload}
        if not is_subgroupoid(G, sub):
            rep.fail(kind, f"{kind} filters do not form a subgroupoid")
    for kind in ("ultra", "tight"):
        H = ctx.H
        idx = ctx.H_index
        sub = {idx[g.rep] for g in ctx.germs(kind).payload}
        if not is_subgroupoid(H, sub):
            rep.fail(kind, f"{kind} germs do not form a subgroupoid")
    unit_filters = {G.payload[a] for a in G.units}
    if unit_filters != set(idempotent_proper_filters(S)):
        rep.fail("units", "unit space is not the set of idempotent proper filters")
    ultra = set(enumerate_filters(S, "principal", "ultra"))
    expected = [F for F in G.payload if F in ultra]
    if list(ctx.filters("ultra").payload) != expected:
        rep.fail("ultra", "ultra arrows differ from proper arrows filtered by ultra")
    for (a, b), c in G.compose.items():
        rep.checked += 1
        if G.payload[b] in ultra and G.payload[c] not in ultra:
            rep.fail("ideal", "F.U is not an ultrafilter", G.label(a), G.label(b))
            break


def _claim_germ_equivalence(ctx, rep):
    S = ctx.S
    pts = germ_points(S, efilters(S, "proper"))
    eq = ctx.equiv
    rel = {(p, q): eq(S, p, q) for p in pts for q in pts}
    rep.checked = len(rel)
    for p in pts:
        if not rel[p, p]:
            rep.fail("reflexive", "point is not equivalent to itself", p.label())
            return
    for p, q in itertools.combinations(pts, 2):
        if rel[p, q] != rel[q, p]:
            rep.fail("symmetric", "verdict is not symmetric", p.label(), q.label())
            return
    for p, q in itertools.permutations(pts, 2):
        if not rel[p, q]:
            continue
        for r in pts:
            if rel[q, r] and not rel[p, r]:
                rep.fail("transitive", "verdict is not transitive", p.label(), q.label(), r.label())
                return
    for g in ctx.H.payload:
        for p, q in itertools.product(g.members, repeat=2):
            if not rel[p, q]:
                rep.fail("classes", "germ class mixes inequivalent points", p.label(), q.label())
                return


def _claim_germ_action(ctx, rep):
    S = ctx.S
    proper = efilters(S, "proper")
    ultra = set(efilters(S, "ultra"))
    tight = set(tight_efilters(S))
    t, inv = S.table, S.inv
    for s in S.elements():
        for xi in proper:
            if S.source(s) not in xi.carrier:
                continue
            rep.checked += 1
            b = beta(S, s, xi)
            if not is_efilter(S, b.carrier) or S.range_(s) not in b.carrier:
                rep.fail("range", "beta_s(xi) is not an E-filter containing ss^-1", S.label(s), xi.label())
            if beta(S, inv[s], b) != xi:
                rep.fail("inverse", "beta_{s^-1} beta_s != id", S.label(s), xi.label())
            if xi in ultra and b not in ultra:
                rep.fail("ultra", "beta_s does not preserve E-ultrafilters", S.label(s), xi.label())
            if xi in tight and b not in tight:
                rep.fail("tight", "beta_s does not preserve tight E-filters", S.label(s), xi.label())
    for s, u in itertools.product(S.elements(), repeat=2):
        su = t[s][u]
        for xi in proper:
            if S.source(u) not in xi.carrier or S.source(su) not in xi.carrier:
                continue
            bu = beta(S, u, xi)
            if S.source(s) not in bu.carrier:
                continue
            rep.checked += 1
            if beta(S, su, xi) != beta(S, s, bu):
                rep.fail("action", "beta_st != beta_s beta_t", S.label(s), S.label(u), xi.label())
                return


def _claim_unit_correspondence(ctx, rep):
    S = ctx.S
    G = ctx.G
    units = sorted(G.units)
    unit_filters = [G.payload[a] for a in units]
    proper_e = efilters(S, "proper")
    eps = {a: epsilon(G.payload[a]) for a in units}
    rep.checked += len(units)
    if sorted(eps.values(), key=lambda x: x.sort_key) != proper_e:
        rep.fail("bijection", "epsilon is not a bijection onto proper E-filters")
        return
    for F in unit_filters:
        if epsilon_inv(epsilon(F)) != F:
            rep.fail("round-trip", "eps^-1(eps(F)) != F", F.label())
    for xi in proper_e:
        if epsilon(epsilon_inv(xi)) != xi:
            rep.fail("round-trip", "eps(eps^-1(xi)) != xi", xi.label())

    T_units = subspace(ctx.TG, units)
    T_e = efilter_topology(S, "patch")
    h = map_is_homeomorphism(T_units, T_e, eps)
    rep.checked += h.checked
    for v in h.violations:
        rep.fail("homeomorphism", v.message)
    back = check_map_topology(T_e, T_units, {eps[a]: a for a in units})
    if not (back.continuous and back.open):
        rep.fail("homeomorphism", "inverse of epsilon is not continuous and open")
    for name, T in (("units", T_units), ("E-filters", T_e)):
        hd = is_hausdorff(T)
        if not hd.hausdorff:
            rep.fail("hausdorff", f"patch topology on {name} is not Hausdorff", *map(str, hd.witness))

    # idempotent-indexed patch sets give the same topology on the units
    E_sets = patch_basis(S, G, sorted(S.idempotent_members))
    T_idem = generate_topology(units, [b.members for b in E_sets])
    if not same_topology(T_units, T_idem):
        rep.fail("idempotent basis", "sets F_{e:X} do not generate the unit patch topology")

    ultra_units = [F for F in unit_filters if F in set(enumerate_filters(S, "principal", "ultra"))]
    if {epsilon(F) for F in ultra_units} != set(efilters(S, "ultra")) or len(ultra_units) != len(
        efilters(S, "ultra")
    ):
        rep.fail("ultra", "epsilon does not map idempotent ultrafilters onto E-ultrafilters")


def _wrap(check: Callable[[InverseSemigroup], CheckReport]):
    def claim(ctx, rep):
        r = check(ctx.S)
        rep.checked += r.checked
        for v in r.violations:
            rep.fail(v.check, v.message, *v.witness)

    return claim


def _claim_eta(ctx, rep):
    S = ctx.S
    ultra = set(enumerate_filters(S, "principal", "ultra"))
    e_ultra = set(efilters(S, "ultra"))
    e_proper = set(efilters(S, "proper"))
    for F in enumerate_filters(S, "principal", "proper"):
        x = eta(F)
        rep.checked += 1
        if x not in e_proper:
            rep.fail("(a)", "eta(F) is not a proper E-filter", F.label())
        if F in ultra and x not in e_ultra:
            rep.fail("(a)", "eta(U) is not an E-ultrafilter", F.label())
        g = germ_class(S, min(F.carrier), x)
        x_inv = eta(filter_inverse(F))
        for s in F.carrier:
            rep.checked += 1
            if GermPoint(s, x) not in g.members:
                rep.fail("(b)", "[s, eta(F)] depends on s", F.label(), S.label(s))
            if beta(S, s, x) != x_inv:
                rep.fail("(c)", "beta_s(eta(F)) != eta(F^-1)", F.label(), S.label(s))


def _claim_pi_bijection(ctx, rep):
    G, H, phi = ctx.G, ctx.H, ctx.phi
    rep.checked = len(G)
    if sorted(phi) != list(H.arrows):
        rep.fail("bijective", "pi is not a bijection of arrows", len(G), len(H))
        return
    for a, F in enumerate(G.payload):
        g = pi(F)
        if g != H.payload[phi[a]]:
            rep.fail("pi", "pi(F) disagrees with the germ groupoid", F.label())
        if pi_inv(g) != F:
            rep.fail("round-trip", "pi^-1(pi(F)) != F", F.label())
    for g in H.payload:
        if pi(pi_inv(g)) != g:
            rep.fail("round-trip", "pi(pi^-1(g)) != g", g.label())


def _claim_pi_isomorphism(ctx, rep):
    G, H, phi = ctx.G, ctx.H, ctx.phi
    r = is_isomorphism(G, H, phi)
    rep.checked += r.checked
    for v in r.violations:
        rep.fail(v.check, v.message, *v.witness)
    if not r.ok:
        return
    for a, F in enumerate(G.payload):
        dg = H.payload[H.d(phi[a])]
        rg = H.payload[H.r(phi[a])]
        if phi[G.d(a)] != H.d(phi[a]) or phi[G.r(a)] != H.r(phi[a]):
            rep.fail("units", "pi does not commute with d and r", F.label())
        # unit germ [e, xi] corresponds to the unit filter up(xi)
        if epsilon_inv(dg.xi) != G.payload[G.d(a)] or epsilon_inv(rg.xi) != G.payload[G.r(a)]:
            rep.fail("units", "unit identification disagrees with d/r", F.label())
    for (a, b), c in G.compose.items():
        rep.checked += 1
        if eta(G.payload[c]) != eta(G.payload[b]):
            rep.fail("eta", "eta(F.G) != eta(G)", G.label(a), G.label(b))


def _claim_pi_homeomorphism(ctx, rep):
    phi = {a: ctx.phi[a] for a in ctx.G.arrows}
    fwd = check_map_topology(ctx.TG, ctx.TH, phi)
    rep.checked += fwd.violations.checked
    if not fwd.continuous:
        rep.fail("continuous", "pi is not continuous")
    if not fwd.open:
        rep.fail("open", "pi is not open")
    for name, T in (("filters", ctx.TG), ("germs", ctx.TH)):
        if not T.basis_report.ok:
            rep.fail("basis", f"patch family on {name} fails the basis criterion")


def _claim_pi_basis_identities(ctx, rep):
    S, G, H, phi = ctx.S, ctx.G, ctx.H, ctx.phi
    index = ctx.H_index
    Fs = {s: basic_set(S, "principal", s, (), G).members for s in S.elements()}
    for s, A, theta in ctx.theta_basis(H, efilters(S, "proper")):
        rep.checked += 1
        lhs = frozenset(a for a in G.arrows if phi[a] in theta)
        lifted = {epsilon_inv(xi) for xi in A}
        rhs = frozenset(a for a in Fs[s] if G.payload[G.d(a)] in lifted)
        if lhs != rhs:
            rep.fail("preimage", "pi^-1(Theta(s,A)) != F_s ∩ d^-1(eps^-1(A))", S.label(s),
                     tuple(xi.label() for xi in sorted(A, key=lambda x: x.sort_key)))
            return
    for b in ctx.patch_sets:
        rep.checked += 1
        lhs = frozenset(phi[a] for a in b.members)
        A = {epsilon(G.payload[G.d(a)]) for a in b.members}
        rhs = theta_arrows(H, S, b.s, A, index)
        if lhs != rhs:
            rep.fail("image", "pi(F_{s:T}) != Theta(s, eps(d(F_{s:T})))", S.label(b.s),
                     tuple(S.label(x) for x in sorted(b.T)))
            return


def _ultra_views(ctx):
    """Ultra groupoids and subspace topologies expressed on their own arrow ids."""
    G = ctx.G
    GU, HU = ctx.filters("ultra"), ctx.germs("ultra")
    in_G = {a: G.arrow_of(F) for a, F in enumerate(GU.payload)}
    in_H = {a: ctx.H_index[g.rep] for a, g in enumerate(HU.payload)}
    back_G = {v: k for k, v in in_G.items()}
    back_H = {v: k for k, v in in_H.items()}
    TU = _relabel(subspace(ctx.TG, in_G.values()), back_G, GU.arrows)
    THU = _relabel(subspace(ctx.TH, in_H.values()), back_H, HU.arrows)
    return GU, HU, in_G, in_H, TU, THU


def _claim_ultra_image(ctx, rep):
    G, H, phi = ctx.G, ctx.H, ctx.phi
    GU, HU = ctx.filters("ultra"), ctx.germs("ultra")
    image = {H.payload[phi[G.arrow_of(F)]] for F in GU.payload}
    rep.checked = len(GU)
    if image != set(HU.payload):
        rep.fail("image", "pi(U) differs from the ultragerms", len(image), len(HU))


def _claim_ultra_restriction(ctx, rep):
    S = ctx.S
    GU, HU, in_G, in_H, TU, THU = _ultra_views(ctx)
    back_H = {v: k for k, v in in_H.items()}
    phi_u = [back_H.get(ctx.phi[in_G[a]]) for a in GU.arrows]
    if None in phi_u:
        rep.fail("image", "an ultrafilter is not sent to an ultragerm")
        return
    r = is_isomorphism(GU, HU, phi_u)
    rep.checked += r.checked
    for v in r.violations:
        rep.fail(v.check, v.message, *v.witness)
    h = map_is_homeomorphism(TU, THU, dict(enumerate(phi_u)))
    rep.checked += h.checked
    for v in h.violations:
        rep.fail("homeomorphism", v.message)
    # the restricted families agree with the subspace topologies
    own_G = generate_topology(GU.arrows, [b.members for b in patch_basis(S, GU)])
    if not same_topology(own_G, TU):
        rep.fail("subspace", "patch family on U differs from the subspace topology")
    own_H = generate_topology(HU.arrows, [th for _, _, th in ctx.theta_basis(HU, efilters(S, "ultra"))])
    if not same_topology(own_H, THU):
        rep.fail("subspace", "Theta family on ultragerms differs from the subspace topology")


def _claim_ultra_basis(ctx, rep):
    S = ctx.S
    GU, _, _, _, TU, _ = _ultra_views(ctx)
    Us = [basic_set(S, "ultra", s, (), GU).members for s in S.elements()]
    T = generate_topology(GU.arrows, Us)
    rep.checked = len(Us)
    if not T.basis_report.ok:
        rep.fail("basis", "sets U_s fail the basis criterion")
    if not same_topology(T, TU):
        x = next(x for x in TU.points if T.neighbourhood(x) != TU.neighbourhood(x))
        rep.fail("topology", "U_s do not generate the patch topology on U", GU.label(x))


def _claim_principal_hausdorff(ctx, rep):
    S, G = ctx.S, ctx.G
    units = sorted(G.units)
    E = sorted(S.idempotent_members)
    overlapping = [(e, f) for e, f in itertools.combinations(E, 2) if S.table[e][f] != S.zero]
    principal = [basic_set(S, "principal", s, (), G).members for s in S.elements()]
    T_principal = generate_topology(units, [B & frozenset(units) for B in principal])
    hd = is_hausdorff(T_principal)
    rep.checked = len(units) * (len(units) - 1) // 2
    if hd.hausdorff == bool(overlapping):
        rep.fail("principal", "Hausdorff verdict disagrees with the overlap condition",
                 hd.hausdorff, [(S.label(e), S.label(f)) for e, f in overlapping[:3]])
    if hd.witness is not None:
        rep.note = "non-Hausdorff under principal basis, witness ({})".format(
            ", ".join(G.payload[a].up_label() for a in hd.witness)
        )
    else:
        rep.note = "Hausdorff under principal basis"
    if not is_hausdorff(subspace(ctx.TG, units)).hausdorff:
        rep.fail("patch", "units are not Hausdorff in the patch topology")


def _claim_tight_arrows(ctx, rep):
    tight = ctx.filters("tight")
    HT = ctx.germs("tight")
    pulled = {pi_inv(g) for g in HT.payload}
    rep.checked = len(tight) + len(HT)
    if set(tight.payload) != pulled:
        rep.fail("pullback", "tight filters differ from pi^-1 of the tight germs", len(tight), len(pulled))
    if set(tight.payload) != set(ctx.filters("ultra").payload):
        rep.fail("ultra", "tight filter arrows differ from ultrafilter arrows")


def _claim_compactable(ctx, rep):
    S = ctx.S
    T, U = set(tight_efilters(S)), set(efilters(S, "ultra"))
    rep.checked = len(T)
    if T != U:
        rep.fail("compactable", "tight E-filters differ from E-ultrafilters",
                 sorted(x.label() for x in T ^ U))
    else:
        rep.note = "compactable"


CLAIMS: list[tuple[str, Callable]] = [
    ("filter-enumeration", _claim_filter_enumeration),
    ("groupoid-axioms", _claim_groupoid_axioms),
    ("germ-equivalence", _claim_germ_equivalence),
    ("germ-action", _claim_germ_action),
    ("unit-correspondence", _claim_unit_correspondence),
    ("filter-calculus", _wrap(check_filter_calculus)),
    ("principal-basis", _wrap(check_principal_basic_sets)),
    ("principal-embedding", _wrap(check_embedding)),
    ("eta-properties", _claim_eta),
    ("pi-bijection", _claim_pi_bijection),
    ("pi-isomorphism", _claim_pi_isomorphism),
    ("pi-homeomorphism", _claim_pi_homeomorphism),
    ("pi-basis-identities", _claim_pi_basis_identities),
    ("ultra-image", _claim_ultra_image),
    ("ultra-restriction", _claim_ultra_restriction),
    ("ultra-basis", _claim_ultra_basis),
    ("principal-hausdorff", _claim_principal_hausdorff),
    ("tight-arrows", _claim_tight_arrows),
    ("compactable", _claim_compactable),
]


def verify_all(
    S: InverseSemigroup,
    mutation: Mutation | None = None,
    instance: str = "",
    only: set[str] | None = None,
) -> VerificationReport:
    """Run every claim exhaustively over ``S`` and collect the verdicts."""
    ctx = _Context(S, mutation)
    report = VerificationReport(instance or f"n={S.n}")
    for name, claim in CLAIMS:
        if only is not None and name not in only:
            continue
        rep = CheckReport(name)
        result = ClaimResult(name, False)
        start = time.perf_counter()
        try:
            claim(ctx, rep)
        except TooLarge:
            raise
        except Exception as exc:  # a corrupted structure may break a claim outright
            rep.fail("error", f"{type(exc).__name__}: {exc}")
        result.seconds = time.perf_counter() - start
        result.passed = rep.ok
        result.checked = rep.checked
        result.note = rep.note
        if not rep.ok:
            result.witness = str(rep.violations[0])
        report.claims.append(result)
    return report
