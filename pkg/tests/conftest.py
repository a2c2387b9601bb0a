import itertools

import pytest

from filtergerm.algebra import brandt, chain, symmetric_inverse
from filtergerm.filters import EFilter, Filter

CURATED = {
    "chain:1": lambda: chain(1),
    "chain:2": lambda: chain(2),
    "chain:3": lambda: chain(3),
    "brandt:1": lambda: brandt(1),
    "brandt:2": lambda: brandt(2),
    "brandt:3": lambda: brandt(3),
    "symmetric_inverse:2": lambda: symmetric_inverse(2),
}

# symmetric_inverse(2) labels
EMPTY, ID1, ID2, ID12, SWAP = "0", "1->1", "2->2", "1->1,2->2", "1->2,2->1"


@pytest.fixture(params=sorted(CURATED))
def curated(request):
    return CURATED[request.param]()


@pytest.fixture
def B2():
    return brandt(2)


@pytest.fixture
def C2():
    """0 < f < e with f = x1 and e = x2."""
    return chain(2)


@pytest.fixture
def I2():
    return symmetric_inverse(2)


def idx(S, *labels):
    return [S.index(x) for x in labels]


def filt(S, *labels):
    return Filter(frozenset(idx(S, *labels)), S)


def efilt(S, *labels):
    return EFilter(frozenset(idx(S, *labels)), S)


def naive_filters(S):
    """Every filter by direct subset search from the definition."""
    out = []
    elems = list(S.elements())
    for r in range(1, S.n + 1):
        for A in itertools.combinations(elems, r):
            A = set(A)
            up = all(b in A for a in A for b in elems if a == S.mul(a, S.inv[a], b))
            if not up:
                continue
            directed = all(
                any(c == S.mul(c, S.inv[c], a) and c == S.mul(c, S.inv[c], b) for c in A)
                for a in A
                for b in A
            )
            if directed:
                out.append(frozenset(A))
    return out
