from conftest import efilt, filt, idx
from filtergerm.algebra import chain
from filtergerm.filter_groupoid import build_filter_groupoid, patch_basis
from filtergerm.filters import efilters, epsilon, idempotent_proper_filters
from filtergerm.topology import (
    check_map_topology,
    closure,
    efilter_topology,
    generate_topology,
    is_compactable,
    is_hausdorff,
    map_is_homeomorphism,
    same_topology,
    subspace,
    tight_efilters,
)


def chain_units(C2, basis):
    """Proper filters of chain(2) with the principal or patch basis."""
    f, e = idx(C2, "x1", "x2")
    up_e, up_f = filt(C2, "x2"), filt(C2, "x1", "x2")
    points = [up_e, up_f]
    if basis == "principal":
        sets = [{up_e, up_f}, {up_f}]
    else:
        sets = [{up_e, up_f}, {up_f}, {up_e}]
    return generate_topology(points, sets), up_e, up_f


def test_principal_opens(C2):
    T, up_e, up_f = chain_units(C2, "principal")
    assert T.opens == {frozenset(), frozenset({up_f}), frozenset({up_e, up_f})}


def test_patch_is_discrete(C2):
    T, up_e, up_f = chain_units(C2, "patch")
    assert len(T.opens) == 4


def test_singletons_give_discrete_topology():
    T = generate_topology(range(3), [{0}, {1}, {2}])
    assert len(T.opens) == 8
    assert T.basis_report.ok


def test_hausdorff(C2):
    T, up_e, up_f = chain_units(C2, "principal")
    hd = is_hausdorff(T)
    assert not hd.hausdorff and set(hd.witness) == {up_e, up_f}
    assert is_hausdorff(chain_units(C2, "patch")[0]).hausdorff
    assert is_hausdorff(generate_topology(["p"], [{"p"}])).hausdorff


def test_closure(C2):
    T, up_e, up_f = chain_units(C2, "principal")
    assert closure(T, T.points) == T.point_set
    assert closure(T, {up_f}) == {up_e, up_f}
    E = efilter_topology(C2, "patch")
    ultra = efilters(C2, "ultra")
    assert closure(E, ultra) == set(ultra) == {efilt(C2, "x1", "x2")}


def test_tight_efilters(B2, C2):
    assert tight_efilters(C2) == [efilt(C2, "x1", "x2")]
    assert set(tight_efilters(B2)) == {efilt(B2, "e11"), efilt(B2, "e22")}
    assert tight_efilters(chain(1)) == efilters(chain(1), "proper")
    assert is_compactable(C2) and is_compactable(B2)


def test_tight_equals_ultra(curated):
    assert set(tight_efilters(curated)) == set(efilters(curated, "ultra"))


def test_identity_map():
    T = generate_topology("abc", [{"a"}, {"a", "b"}, {"c"}])
    mr = check_map_topology(T, T, {x: x for x in "abc"})
    assert mr.continuous and mr.open


def test_constant_map_not_open():
    src = generate_topology("ab", [{"a"}, {"b"}])
    # Sierpinski space: {1} open, {0} not
    dst = generate_topology([0, 1], [{1}, {0, 1}])
    mr = check_map_topology(src, dst, {"a": 0, "b": 0})
    assert mr.continuous and not mr.open


def test_discontinuous_map():
    src = generate_topology([0, 1], [{1}, {0, 1}])
    dst = generate_topology("ab", [{"a"}, {"b"}])
    mr = check_map_topology(src, dst, {0: "a", 1: "b"})
    assert not mr.continuous and mr.violations.violations[0].check == "continuous"


def test_epsilon_is_homeomorphism(B2, curated):
    for S in (B2, curated):
        G = build_filter_groupoid(S, "proper")
        idem = idempotent_proper_filters(S)
        sets = [{G.payload[a] for a in b.members} & set(idem) for b in patch_basis(S, G)]
        src = generate_topology(idem, sets)
        dst = efilter_topology(S, "patch")
        assert map_is_homeomorphism(src, dst, {F: epsilon(F) for F in idem}).ok


def test_subspace(C2):
    T, up_e, up_f = chain_units(C2, "principal")
    sub = subspace(T, [up_e])
    assert sub.points == (up_e,) and sub.opens == {frozenset(), frozenset({up_e})}
    assert same_topology(T, T)
    assert not same_topology(T, chain_units(C2, "patch")[0])


def test_bad_basis_is_reported_but_used():
    # {a,b} and {b,c} meet in {b} which is not a union of basic sets
    T = generate_topology("abc", [{"a", "b"}, {"b", "c"}])
    assert not T.basis_report.ok
    assert T.neighbourhood("b") == {"b"}


def test_efilter_principal_basis_not_hausdorff(C2, B2):
    assert not is_hausdorff(efilter_topology(C2, "principal")).hausdorff
    assert is_hausdorff(efilter_topology(B2, "principal")).hausdorff
