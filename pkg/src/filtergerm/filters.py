"""Filters of a finite inverse semigroup and of its semilattice of idempotents."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .algebra import InverseSemigroup, restrict
from .errors import NotIdempotentFilter, NotProper, TooLarge

BRUTEFORCE_CAP = 20


@dataclass(frozen=True)
class _Carrier:
    carrier: frozenset[int]
    semigroup: InverseSemigroup = field(compare=False, repr=False, hash=False)

    def __contains__(self, a):
        return a in self.carrier

    def __iter__(self):
        return iter(sorted(self.carrier))

    def __len__(self):
        return len(self.carrier)

    @property
    def minimum(self) -> int:
        """The least element under the natural order."""
        leq = self.semigroup.leq_matrix
        for m in sorted(self.carrier):
            if all(leq[m][b] for b in self.carrier):
                return m
        raise ValueError("carrier has no minimum")

    @property
    def is_proper(self) -> bool:
        return self.semigroup.zero not in self.carrier

    @property
    def sort_key(self):
        return (self.minimum, tuple(sorted(self.carrier)))

    def label(self) -> str:
        S = self.semigroup
        return "{" + " ".join(S.label(a) for a in sorted(self.carrier)) + "}"

    def up_label(self) -> str:
        """``↑m`` for the minimum ``m``; every filter of a finite semigroup is principal."""
        return "↑" + self.semigroup.label(self.minimum)


class Filter(_Carrier):
    """A nonempty down-directed up-set of ``S``."""


class EFilter(_Carrier):
    """A filter of the idempotent semilattice; carrier holds ``S`` indices."""


@dataclass(frozen=True)
class FilterClassification:
    is_filter: bool
    is_proper: bool
    is_ultra: bool
    is_idempotent: bool


def up_closure(S: InverseSemigroup, A: Iterable[int]) -> frozenset[int]:
    out = set()
    for a in A:
        out |= S.up_sets[a]
    return frozenset(out)


def down_closure(S: InverseSemigroup, A: Iterable[int]) -> frozenset[int]:
    out = set()
    for a in A:
        out |= S.down_sets[a]
    return frozenset(out)


def is_down_directed(S: InverseSemigroup, A) -> bool:
    A = frozenset(A)
    return all(S.down_sets[a] & S.down_sets[b] & A for a in A for b in A)


def is_filter(S: InverseSemigroup, A) -> bool:
    A = frozenset(A)
    return bool(A) and up_closure(S, A) == A and is_down_directed(S, A)


def is_efilter(S: InverseSemigroup, A) -> bool:
    """Filter test relative to the semilattice of idempotents."""
    A = frozenset(A)
    E = S.idempotent_members
    if not A or not A <= E:
        return False
    if up_closure(S, A) & E != A:
        return False
    return all(S.down_sets[a] & S.down_sets[b] & A for a in A for b in A)


def classify_subset(S: InverseSemigroup, A) -> FilterClassification:
    A = frozenset(A)
    filt = is_filter(S, A)
    proper = filt and S.zero not in A
    ultra = proper and not any(
        A < F.carrier for F in enumerate_filters(S, "principal", "proper")
    )
    return FilterClassification(filt, proper, ultra, bool(A & S.idempotent_members))


def principal_filter(S: InverseSemigroup, a: int) -> Filter:
    return Filter(S.up_sets[a], S)


def _is_atom(S: InverseSemigroup, a: int) -> bool:
    return a != S.zero and S.down_sets[a] == {S.zero, a}


def _bruteforce_carriers(S: InverseSemigroup) -> list[frozenset[int]]:
    n = S.n
    if n > BRUTEFORCE_CAP:
        raise TooLarge(f"bruteforce enumeration needs n <= {BRUTEFORCE_CAP}, got {n}")
    up = [sum(1 << b for b in S.up_sets[a]) for a in range(n)]
    down = [sum(1 << b for b in S.down_sets[a]) for a in range(n)]
    found = []
    for mask in range(1, 1 << n):
        bits = [a for a in range(n) if mask >> a & 1]
        if any(up[a] & ~mask for a in bits):
            continue
        if all(down[a] & down[b] & mask for i, a in enumerate(bits) for b in bits[i + 1:]):
            found.append(frozenset(bits))
    return found


def _select(S, filters: list[Filter], select: str, mode: str) -> list[Filter]:
    if select == "all":
        return filters
    if select == "proper":
        return [F for F in filters if F.is_proper]
    if select == "idempotent":
        return [F for F in filters if F.carrier & S.idempotent_members]
    if select == "ultra":
        proper = [F for F in filters if F.is_proper]
        if mode == "principal":
            return [F for F in proper if _is_atom(S, F.minimum)]
        return [F for F in proper if not any(F.carrier < G.carrier for G in proper)]
    raise ValueError(f"unknown selection {select!r}")


@lru_cache(maxsize=256)
def _enumerate(S: InverseSemigroup, mode: str, select: str) -> tuple[Filter, ...]:
    if mode == "principal":
        carriers = {S.up_sets[a] for a in S.elements()}
    elif mode == "bruteforce":
        carriers = set(_bruteforce_carriers(S))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    filters = sorted((Filter(c, S) for c in carriers), key=lambda F: F.sort_key)
    return tuple(_select(S, filters, select, mode))


def enumerate_filters(
    S: InverseSemigroup, mode: str = "principal", select: str = "all"
) -> list[Filter]:
    """Filters of ``S`` ordered by the index of their minimum element.

    ``mode="principal"`` lists the up-closures of single elements;
    ``mode="bruteforce"`` tests every subset and is capped at 20 elements.
    ``select`` is one of ``all``, ``proper``, ``ultra`` or ``idempotent``.
    """
    return list(_enumerate(S, mode, select))


def idempotent_proper_filters(S: InverseSemigroup) -> list[Filter]:
    return [F for F in enumerate_filters(S, "principal", "proper") if F.carrier & S.idempotent_members]


@lru_cache(maxsize=256)
def _semilattice(S: InverseSemigroup):
    return restrict(S, S.idempotent_members)


@lru_cache(maxsize=256)
def _efilters(S: InverseSemigroup, select: str, mode: str) -> tuple[EFilter, ...]:
    E, emb = _semilattice(S)
    out = [
        EFilter(frozenset(emb[i] for i in F.carrier), S)
        for F in enumerate_filters(E, mode, select)
    ]
    return tuple(sorted(out, key=lambda x: x.sort_key))


def efilters(S: InverseSemigroup, select: str = "proper", mode: str = "principal") -> list[EFilter]:
    """Filters of the idempotent semilattice, as subsets of ``S``."""
    return list(_efilters(S, select, mode))


def epsilon(F: Filter) -> EFilter:
    S = F.semigroup
    if not F.is_proper:
        raise NotProper(f"{F.label()} contains zero")
    xi = F.carrier & S.idempotent_members
    if not xi:
        raise NotIdempotentFilter(f"{F.label()} contains no idempotent")
    return EFilter(xi, S)


def epsilon_inv(xi: EFilter) -> Filter:
    S = xi.semigroup
    if not xi.is_proper:
        raise NotProper(f"{xi.label()} contains zero")
    return Filter(up_closure(S, xi.carrier), S)
