import json

import pytest

from fsdual.constructions import sporadic_order64
from fsdual.errors import DomainError
from fsdual.groups import Group
from fsdual.serialize import (bundle, format_set, load_bundle, parse_element, parse_elements,
                              parse_pairing, parse_set)


def test_parse_literals():
    G = Group((4,))
    assert parse_element(G, "3") == (3,)
    assert parse_set(G, "{0,1}").members == ((0,), (1,))
    H = Group((2, 4))
    assert parse_set(H, "{(0,0),(1,3)}").members == ((0, 0), (1, 3))
    assert parse_elements(H, "(0,1),(1,1)") == [(0, 1), (1, 1)]
    with pytest.raises(DomainError):
        parse_set(H, "{(0,0),x}")
    with pytest.raises(DomainError):
        parse_element(G, "a")


def test_parse_pairing(tmp_path):
    G = Group((2, 4))
    assert parse_pairing(G, "standard").matrix == ((2, 0), (0, 1))
    assert parse_pairing(G, "[[2,0],[0,3]]").matrix == ((2, 0), (0, 3))
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"pairing": [[2, 0], [0, 1]]}))
    assert parse_pairing(G, str(p)).matrix == ((2, 0), (0, 1))
    with pytest.raises(DomainError):
        parse_pairing(G, "nonsense")


def test_bundle_roundtrip():
    for P, S in sporadic_order64():
        doc = json.loads(json.dumps(bundle(P, S)))
        P2, S2, T2 = load_bundle(doc)
        assert P2 == P and S2 == S and T2 is None
        assert format_set(S2).startswith("{(0,0,")
