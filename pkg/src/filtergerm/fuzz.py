"""Random inverse subsemigroups of a fixed ambient semigroup, with shrinking."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import InverseSemigroup, inverse_closure_subsemigroup, symmetric_inverse
from .formats import format_semigroup
from .isomorphism import VerificationReport, verify_all


@dataclass
class FuzzCase:
    seed: int
    gens: tuple[int, ...]
    semigroup: InverseSemigroup
    embedding: tuple[int, ...]


@dataclass
class FuzzFailure:
    case: FuzzCase
    gens: tuple[int, ...]
    report: VerificationReport
    table: str


def random_case(ambient: InverseSemigroup, seed: int, max_gens: int = 3) -> FuzzCase:
    rng = random.Random(seed)
    k = rng.randint(1, max_gens)
    gens = tuple(sorted(rng.sample(range(1, ambient.n), k)))
    T, emb = inverse_closure_subsemigroup(ambient, gens)
    return FuzzCase(seed, gens, T, tuple(emb))


def shrink(ambient: InverseSemigroup, gens, fails) -> tuple[int, ...]:
    """Drop generators one at a time while ``fails`` still holds."""
    gens = list(gens)
    changed = True
    while changed and len(gens) > 1:
        changed = False
        for g in list(gens):
            trial = [x for x in gens if x != g]
            T, _ = inverse_closure_subsemigroup(ambient, trial)
            if fails(T):
                gens = trial
                changed = True
                break
    return tuple(gens)


def run_fuzz(count: int = 100, seed: int = 0, ambient: InverseSemigroup | None = None):
    """Yield ``(case, report, failure)`` for ``count`` seeded instances."""
    ambient = ambient or symmetric_inverse(3)
    for i in range(count):
        case = random_case(ambient, seed + i)
        report = verify_all(case.semigroup, instance=f"fuzz-{seed + i}")
        failure = None
        if not report.ok:
            gens = shrink(ambient, case.gens, lambda T: not verify_all(T).ok)
            T, _ = inverse_closure_subsemigroup(ambient, gens)
            failure = FuzzFailure(case, gens, verify_all(T), format_semigroup(T))
        yield case, report, failure
