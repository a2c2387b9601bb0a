"""Filter and germ groupoids of finite inverse semigroups with zero."""

from .algebra import (
    InverseSemigroup,
    adjoin_zero,
    brandt,
    build_standard,
    chain,
    from_table,
    inverse_closure_subsemigroup,
    symmetric_inverse,
    validate_inverse_semigroup,
)
from .filter_groupoid import build_filter_groupoid
from .filters import EFilter, Filter, efilters, enumerate_filters
from .germ_groupoid import Germ, build_germ_groupoid
from .groupoid import FiniteGroupoid, check_axioms, is_isomorphism
from .isomorphism import Mutation, pi, pi_inv, verify_all

__all__ = [
    "EFilter",
    "Filter",
    "FiniteGroupoid",
    "Germ",
    "InverseSemigroup",
    "Mutation",
    "adjoin_zero",
    "brandt",
    "build_filter_groupoid",
    "build_germ_groupoid",
    "build_standard",
    "chain",
    "check_axioms",
    "clear_caches",
    "efilters",
    "enumerate_filters",
    "from_table",
    "inverse_closure_subsemigroup",
    "is_isomorphism",
    "pi",
    "pi_inv",
    "symmetric_inverse",
    "validate_inverse_semigroup",
    "verify_all",
]


def clear_caches() -> None:
    """Drop memoized enumerations, so the next call measures a cold start."""
    from . import filter_groupoid, filters, germ_groupoid, topology

    for fn in (
        filters._enumerate,
        filters._semilattice,
        filters._efilters,
        filter_groupoid.build_filter_groupoid,
        germ_groupoid._build_cached,
        topology.efilter_basis,
    ):
        fn.cache_clear()
