"""Finite topological spaces generated by a family of basic sets.

A finite topology is pinned down by the smallest open set around each point
(the intersection of every generating set that contains it), so all the
checks below work from those minimal neighbourhoods.  The full open family is
still available through :attr:`FiniteTopology.opens` for small spaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Mapping, NamedTuple

from .algebra import InverseSemigroup
from .errors import TooLarge
from .filters import EFilter, efilters
from .report import CheckReport

MAX_POINTS = 1 << 14
MAX_OPENS = 1 << 16
MAX_PATCH_DOWNSET = 16


@dataclass(frozen=True, eq=False)
class FiniteTopology:
    points: tuple[Hashable, ...]
    basis: tuple[frozenset, ...]
    basis_report: CheckReport = field(repr=False)

    @cached_property
    def point_set(self) -> frozenset:
        return frozenset(self.points)

    @cached_property
    def neighbourhoods(self) -> dict[Hashable, frozenset]:
        nbhd = {x: self.point_set for x in self.points}
        for B in self.basis:
            for x in B:
                nbhd[x] = nbhd[x] & B
        return nbhd

    def neighbourhood(self, x) -> frozenset:
        return self.neighbourhoods[x]

    def is_open(self, U: Iterable) -> bool:
        U = frozenset(U)
        return all(self.neighbourhoods[x] <= U for x in U)

    @cached_property
    def opens(self) -> frozenset[frozenset]:
        """Every open set: the union-closure of the minimal neighbourhoods."""
        family = {frozenset()}
        for N in set(self.neighbourhoods.values()):
            family |= {U | N for U in family}
            if len(family) > MAX_OPENS:
                raise TooLarge(f"more than {MAX_OPENS} open sets")
        family.add(self.point_set)
        return frozenset(family)


def _basis_report(points: tuple, basis: tuple[frozenset, ...]) -> CheckReport:
    rep = CheckReport("basis criterion")
    covered = frozenset().union(*basis) if basis else frozenset()
    for x in points:
        if x not in covered:
            rep.fail("cover", "point lies in no basic set", x)
            break
    distinct = list(set(basis))
    containing: dict = {x: [] for x in points}
    for B in distinct:
        for x in B:
            containing[x].append(B)
    for x in points:
        sets = containing[x]
        if not sets:
            continue
        smallest = frozenset.intersection(*sets)
        rep.checked += 1
        # the basis criterion at x holds iff some basic set is the intersection
        if not any(B == smallest for B in sets):
            rep.fail("intersection", "basic intersection is not a union of basic sets", x)
            break
    return rep


def generate_topology(points: Iterable[Hashable], basis: Iterable[Iterable]) -> FiniteTopology:
    points = tuple(points)
    if len(points) > MAX_POINTS:
        raise TooLarge(f"{len(points)} points exceed the cap of {MAX_POINTS}")
    pset = frozenset(points)
    basis = tuple(frozenset(B) for B in basis)
    for B in basis:
        if not B <= pset:
            raise ValueError("basic set is not a subset of the points")
    return FiniteTopology(points, basis, _basis_report(points, basis))


def subspace(T: FiniteTopology, Y: Iterable[Hashable]) -> FiniteTopology:
    Y = tuple(y for y in T.points if y in frozenset(Y))
    Yset = frozenset(Y)
    return generate_topology(Y, {B & Yset for B in T.basis})


def same_topology(T1: FiniteTopology, T2: FiniteTopology) -> bool:
    return T1.point_set == T2.point_set and all(
        T1.neighbourhood(x) == T2.neighbourhood(x) for x in T1.points
    )


class HausdorffResult(NamedTuple):
    hausdorff: bool
    witness: tuple | None


def is_hausdorff(T: FiniteTopology) -> HausdorffResult:
    for x, y in itertools.combinations(T.points, 2):
        if T.neighbourhood(x) & T.neighbourhood(y):
            return HausdorffResult(False, (x, y))
    return HausdorffResult(True, None)


def closure(T: FiniteTopology, A: Iterable) -> frozenset:
    A = frozenset(A)
    return frozenset(x for x in T.points if T.neighbourhood(x) & A)


@dataclass
class MapReport:
    continuous: bool
    open: bool
    violations: CheckReport

    @property
    def homeomorphic_embedding(self):
        return self.continuous and self.open


def check_map_topology(src: FiniteTopology, dst: FiniteTopology, f: Mapping) -> MapReport:
    """Continuity and openness of a point map between finite spaces."""
    rep = CheckReport("map topology")
    continuous = True
    is_open = True
    for x in src.points:
        rep.checked += 1
        fx = f[x]
        image = frozenset(f[y] for y in src.neighbourhood(x))
        if continuous and not image <= dst.neighbourhood(fx):
            continuous = False
            pre = frozenset(y for y in src.points if f[y] in dst.neighbourhood(fx))
            rep.fail("continuous", "preimage of an open set is not open", fx, sorted_repr(pre))
        if is_open and not dst.is_open(image):
            is_open = False
            rep.fail("open", "image of an open set is not open", x, sorted_repr(image))
    return MapReport(continuous, is_open, rep)


def sorted_repr(A) -> tuple:
    return tuple(sorted(A, key=repr))


def map_is_homeomorphism(src: FiniteTopology, dst: FiniteTopology, f: Mapping) -> CheckReport:
    rep = CheckReport("homeomorphism")
    image = [f[x] for x in src.points]
    if len(set(image)) != len(image) or set(image) != dst.point_set:
        rep.fail("bijective", "map is not a bijection of points")
        return rep
    mr = check_map_topology(src, dst, f)
    rep.extend(mr.violations)
    return rep


# patch topology on E-filters


def _subsets(xs):
    xs = list(xs)
    return itertools.chain.from_iterable(
        itertools.combinations(xs, k) for k in range(len(xs) + 1)
    )


def efilter_basic(S: InverseSemigroup, e: int, X=(), points=None) -> frozenset[EFilter]:
    """``{xi : e in xi, xi disjoint from X}`` over proper E-filters."""
    if points is None:
        points = efilters(S, "proper")
    X = frozenset(X)
    return frozenset(xi for xi in points if e in xi.carrier and not xi.carrier & X)


@lru_cache(maxsize=128)
def efilter_basis(S: InverseSemigroup, kind: str = "patch") -> tuple[frozenset[EFilter], ...]:
    points = efilters(S, "proper")
    out = []
    for e in sorted(S.idempotent_members):
        if kind == "principal":
            out.append(efilter_basic(S, e, (), points))
            continue
        below = S.down_sets[e]
        if len(below) > MAX_PATCH_DOWNSET:
            raise TooLarge(f"down-set of {e} has {len(below)} elements")
        seen = set()
        for X in _subsets(sorted(below)):
            B = efilter_basic(S, e, X, points)
            if B not in seen:
                seen.add(B)
                out.append(B)
    return tuple(out)


def efilter_topology(S: InverseSemigroup, kind: str = "patch") -> FiniteTopology:
    return generate_topology(efilters(S, "proper"), efilter_basis(S, kind))


def tight_efilters(S: InverseSemigroup) -> list[EFilter]:
    """Closure of the E-ultrafilters in the patch topology on proper E-filters."""
    T = efilter_topology(S, "patch")
    cl = closure(T, efilters(S, "ultra"))
    return [xi for xi in T.points if xi in cl]


def is_compactable(S: InverseSemigroup) -> bool:
    return set(tight_efilters(S)) == set(efilters(S, "ultra"))
