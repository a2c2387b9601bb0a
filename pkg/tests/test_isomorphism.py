import pytest

from conftest import CURATED, ID12, SWAP, efilt, filt
from filtergerm.filter_groupoid import build_filter_groupoid
from filtergerm.filters import efilters, enumerate_filters, epsilon_inv
from filtergerm.germ_groupoid import build_germ_groupoid, germ_class
from filtergerm.groupoid import is_isomorphism
from filtergerm.isomorphism import CLAIMS, Mutation, pi, pi_inv, verify_all

CLAIM_NAMES = [name for name, _ in CLAIMS]


def test_pi_examples(B2, C2):
    e12 = B2.index("e12")
    assert pi(filt(B2, "e12")) == germ_class(B2, e12, efilt(B2, "e22"))
    top = efilt(C2, "x1", "x2")
    g = pi(filt(C2, "x1", "x2"))
    assert g == germ_class(C2, C2.index("x1"), top) == germ_class(C2, C2.index("x2"), top)


def test_units_go_to_unit_germs(curated):
    for xi in efilters(curated, "proper"):
        g = pi(epsilon_inv(xi))
        for e in xi.carrier:
            assert g == germ_class(curated, e, xi)


def test_pi_inv_examples(B2, I2):
    assert pi_inv(germ_class(B2, B2.index("e12"), efilt(B2, "e22"))) == filt(B2, "e12")
    assert pi_inv(germ_class(I2, I2.index(SWAP), efilt(I2, ID12))) == filt(I2, SWAP)
    for xi in efilters(B2, "proper"):
        e = min(xi.carrier)
        assert pi_inv(germ_class(B2, e, xi)) == epsilon_inv(xi)


def test_pi_round_trips(curated):
    for F in enumerate_filters(curated, "principal", "proper"):
        assert pi_inv(pi(F)) == F
    for g in build_germ_groupoid(curated, "proper").payload:
        assert pi(pi_inv(g)) == g


def test_pi_is_groupoid_isomorphism(B2):
    G = build_filter_groupoid(B2, "proper")
    H = build_germ_groupoid(B2, "proper")
    phi = [H.by_payload[pi(F)] for F in G.payload]
    assert is_isomorphism(G, H, phi).ok


def test_verify_all_passes_on_curated(curated):
    report = verify_all(curated)
    assert [c.claim for c in report.claims] == CLAIM_NAMES
    assert report.ok, [c.as_dict() for c in report.claims if not c.passed]


def test_hausdorff_notes(B2, C2):
    assert verify_all(B2)["principal-hausdorff"].note == "Hausdorff under principal basis"
    note = verify_all(C2)["principal-hausdorff"].note
    assert note.startswith("non-Hausdorff") and "↑x1" in note and "↑x2" in note


def test_only_subset(B2):
    report = verify_all(B2, only={"pi-bijection"})
    assert [c.claim for c in report.claims] == ["pi-bijection"]


# single-arrow instances (chain:1, brandt:1) have nothing to reroute
MUTABLE = ["chain:2", "chain:3", "brandt:2", "brandt:3", "symmetric_inverse:2"]


@pytest.mark.parametrize("name", MUTABLE)
@pytest.mark.parametrize("kind", ["compose", "germ-equiv"])
def test_mutations_are_caught(name, kind):
    S = CURATED[name]()
    assert len(build_filter_groupoid(S, "proper")) >= 2
    report = verify_all(S, Mutation(kind))
    assert not report.ok
    failed = [c for c in report.claims if not c.passed]
    assert all(c.witness for c in failed)


def test_compose_mutation_hits_axioms(B2):
    report = verify_all(B2, Mutation("compose"))
    assert not report["groupoid-axioms"].passed
    assert not report["pi-isomorphism"].passed


def test_germ_mutation_hits_equivalence(B2):
    report = verify_all(B2, Mutation("germ-equiv"))
    assert not report["germ-equivalence"].passed
    assert not report["pi-bijection"].passed


def test_as_dict_is_deterministic(B2):
    a = [c.as_dict() for c in verify_all(B2).claims]
    b = [c.as_dict() for c in verify_all(B2).claims]
    assert a == b and all("seconds" not in d for d in a)
    assert "seconds" in verify_all(B2).claims[0].as_dict(timings=True)
