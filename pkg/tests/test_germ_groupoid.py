import itertools

import pytest

from conftest import ID1, ID2, ID12, SWAP, efilt, idx
from filtergerm.errors import BadBase, DomainError, NotComposable
from filtergerm.filters import efilters
from filtergerm.germ_groupoid import (
    GermPoint,
    beta,
    build_germ_groupoid,
    compose_germs,
    germ_class,
    germ_equiv,
    germ_points,
    invert_germ,
    theta,
)
from filtergerm.groupoid import check_axioms


def test_beta(B2, I2):
    assert beta(B2, B2.index("e12"), efilt(B2, "e22")) == efilt(B2, "e11")
    assert beta(I2, I2.index(SWAP), efilt(I2, ID1, ID12)) == efilt(I2, ID2, ID12)


def test_beta_fixes_own_idempotents(curated):
    for xi in efilters(curated, "proper"):
        for e in xi.carrier:
            assert beta(curated, e, xi) == xi


def test_beta_domain(B2):
    with pytest.raises(DomainError):
        beta(B2, B2.index("e12"), efilt(B2, "e11"))


def test_germ_equiv(C2):
    f, e = idx(C2, "x1", "x2")
    top = efilt(C2, "x1", "x2")
    assert germ_equiv(C2, GermPoint(e, top), GermPoint(f, top))
    assert germ_equiv(C2, GermPoint(e, top), GermPoint(e, top))
    assert not germ_equiv(C2, GermPoint(e, efilt(C2, "x2")), GermPoint(f, efilt(C2, "x2")))


def test_germ_equiv_is_an_equivalence(curated):
    S = curated
    pts = germ_points(S, efilters(S, "proper"))
    for p in pts:
        assert germ_equiv(S, p, p)
    for p, q in itertools.product(pts, repeat=2):
        assert germ_equiv(S, p, q) == germ_equiv(S, q, p)
    for p, q, r in itertools.product(pts, repeat=3):
        if germ_equiv(S, p, q) and germ_equiv(S, q, r):
            assert germ_equiv(S, p, r)


def test_brandt2_germs(B2):
    G = build_germ_groupoid(B2, "proper")
    assert len(G) == 4 and len(G.units) == 2
    assert check_axioms(G).ok
    g = germ_class(B2, B2.index("e12"), efilt(B2, "e22"))
    h = germ_class(B2, B2.index("e21"), efilt(B2, "e11"))
    assert compose_germs(B2, g, h) == germ_class(B2, B2.index("e11"), efilt(B2, "e11"))
    a, b = G.by_payload[g], G.by_payload[h]
    assert G.payload[G.compose[(a, b)]].label() == "[e11, {e11}]"


def test_chain2_germs_collapse(C2):
    G = build_germ_groupoid(C2, "proper")
    assert len(G) == 2 and G.units == frozenset(G.arrows)
    f, e = idx(C2, "x1", "x2")
    top = efilt(C2, "x1", "x2")
    assert germ_class(C2, e, top) == germ_class(C2, f, top)


def test_i2_ultragerms(I2):
    G = build_germ_groupoid(I2, "ultra")
    assert len(G) == 4 and len(G.units) == 2


@pytest.mark.parametrize("kind", ["proper", "ultra", "tight"])
def test_germ_groupoids_satisfy_axioms(curated, kind):
    assert check_axioms(build_germ_groupoid(curated, kind)).ok


def test_invert_and_compose(B2, curated):
    g = germ_class(B2, B2.index("e12"), efilt(B2, "e22"))
    assert invert_germ(B2, g) == germ_class(B2, B2.index("e21"), efilt(B2, "e11"))
    unit = germ_class(B2, B2.index("e22"), efilt(B2, "e22"))
    assert compose_germs(B2, g, unit) == g
    with pytest.raises(NotComposable):
        compose_germs(B2, g, g)
    for u in build_germ_groupoid(curated, "proper").units:
        h = build_germ_groupoid(curated, "proper").payload[u]
        assert invert_germ(curated, h) == h


def test_table_matches_direct_operations(I2):
    G = build_germ_groupoid(I2, "proper")
    for (a, b), c in G.compose.items():
        assert compose_germs(I2, G.payload[a], G.payload[b]) == G.payload[c]
    for a in G.arrows:
        assert invert_germ(I2, G.payload[a]) == G.payload[G.invert[a]]


def test_theta(B2, C2):
    e12 = B2.index("e12")
    assert theta(B2, e12, [efilt(B2, "e22")]) == {germ_class(B2, e12, efilt(B2, "e22"))}
    assert theta(B2, e12, []) == frozenset()
    with pytest.raises(BadBase):
        theta(B2, e12, [efilt(B2, "e11")])
    f, e = idx(C2, "x1", "x2")
    top = [efilt(C2, "x1", "x2")]
    assert theta(C2, e, top) == theta(C2, f, top)


def test_germ_class_rejects_non_points(C2):
    with pytest.raises(DomainError):
        germ_class(C2, C2.index("x1"), efilt(C2, "x2"))
