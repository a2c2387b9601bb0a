import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ID1, ID2, ID12, efilt, filt, idx, naive_filters
from filtergerm.algebra import from_table, inverse_closure_subsemigroup, symmetric_inverse
from filtergerm.errors import NotIdempotentFilter, NotProper, TooLarge
from filtergerm.filters import (
    classify_subset,
    down_closure,
    efilters,
    enumerate_filters,
    epsilon,
    epsilon_inv,
    idempotent_proper_filters,
    is_filter,
    principal_filter,
    up_closure,
)


def carriers(fs):
    return {F.carrier for F in fs}


def test_closures(B2, C2):
    f, e = idx(C2, "x1", "x2")
    assert up_closure(C2, {f}) == {f, e}
    assert up_closure(C2, set()) == frozenset() == down_closure(B2, set())
    (e11,) = idx(B2, "e11")
    assert up_closure(B2, {e11}) == {e11}
    assert down_closure(B2, {e11}) == {0, e11}


def test_classify(B2, C2):
    c = classify_subset(C2, set(idx(C2, "x1", "x2")))
    assert (c.is_filter, c.is_proper, c.is_ultra, c.is_idempotent) == (True, True, True, True)
    c = classify_subset(C2, set(C2.elements()))
    assert c.is_filter and not c.is_proper and not c.is_ultra
    c = classify_subset(B2, set(idx(B2, "e12")))
    assert (c.is_filter, c.is_proper, c.is_ultra, c.is_idempotent) == (True, True, True, False)
    c = classify_subset(B2, set(idx(B2, "e12", "e21")))
    assert not c.is_filter


def test_principal_filter(B2, C2):
    f, e = idx(C2, "x1", "x2")
    assert principal_filter(C2, f).carrier == {f, e}
    assert principal_filter(C2, 0).carrier == frozenset(C2.elements())
    assert principal_filter(B2, B2.index("e12")) == filt(B2, "e12")


def test_enumerate_chain2(C2):
    assert carriers(enumerate_filters(C2, "principal", "proper")) == {
        filt(C2, "x2").carrier,
        filt(C2, "x1", "x2").carrier,
    }
    assert enumerate_filters(C2, "principal", "ultra") == [filt(C2, "x1", "x2")]


def test_enumerate_brandt2(B2):
    proper = enumerate_filters(B2, "principal", "proper")
    assert carriers(proper) == {frozenset({a}) for a in range(1, 5)}
    assert enumerate_filters(B2, "principal", "ultra") == proper


def test_enumerate_i2(I2):
    assert len(enumerate_filters(I2, "principal", "proper")) == 6
    ultra = enumerate_filters(I2, "principal", "ultra")
    assert {F.minimum for F in ultra} == set(idx(I2, ID1, "1->2", "2->1", ID2))


@pytest.mark.parametrize("mode", ["principal", "bruteforce"])
def test_enumeration_matches_definition(curated, mode):
    assert carriers(enumerate_filters(curated, mode, "all")) == set(naive_filters(curated))


def test_ultra_is_maximal_proper(curated):
    proper = carriers(enumerate_filters(curated, "bruteforce", "proper"))
    maximal = {F for F in proper if not any(F < G for G in proper)}
    assert carriers(enumerate_filters(curated, "principal", "ultra")) == maximal


def test_select_idempotent(I2):
    got = idempotent_proper_filters(I2)
    assert {F.minimum for F in got} == set(idx(I2, ID1, ID2, ID12))


def test_bruteforce_cap():
    with pytest.raises(TooLarge):
        enumerate_filters(symmetric_inverse(3), "bruteforce", "all")


def test_efilters(B2, C2):
    assert carriers(efilters(B2, "proper")) == {efilt(B2, "e11").carrier, efilt(B2, "e22").carrier}
    assert carriers(efilters(B2, "ultra")) == carriers(efilters(B2, "proper"))
    assert carriers(efilters(C2, "proper")) == {efilt(C2, "x2").carrier, efilt(C2, "x1", "x2").carrier}
    assert efilters(from_table([[0]]), "proper") == []


def test_epsilon(B2, C2, I2):
    assert epsilon(filt(B2, "e11")) == efilt(B2, "e11")
    assert epsilon_inv(efilt(B2, "e11")) == filt(B2, "e11")
    assert epsilon(filt(C2, "x1", "x2")).carrier == filt(C2, "x1", "x2").carrier
    F = principal_filter(I2, I2.index(ID1))
    assert epsilon(F) == efilt(I2, ID1, ID12)


def test_epsilon_errors(B2):
    with pytest.raises(NotIdempotentFilter):
        epsilon(filt(B2, "e12"))
    with pytest.raises(NotProper):
        epsilon(principal_filter(B2, 0))


def test_epsilon_round_trip(curated):
    S = curated
    for F in idempotent_proper_filters(S):
        assert epsilon_inv(epsilon(F)) == F
    for xi in efilters(S, "proper"):
        assert epsilon(epsilon_inv(xi)) == xi


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(1, 33), min_size=1, max_size=3))
def test_bruteforce_agrees_on_random_subsemigroups(gens):
    S, _ = inverse_closure_subsemigroup(symmetric_inverse(3), gens)
    if S.n > 14:
        return
    for select in ("all", "proper", "ultra", "idempotent"):
        assert carriers(enumerate_filters(S, "principal", select)) == carriers(
            enumerate_filters(S, "bruteforce", select)
        )
    assert all(is_filter(S, F) for F in naive_filters(S))
