"""Text literals and JSON bundles for groups, sets and pairings."""
from __future__ import annotations

import json
import re
from pathlib import Path

from .duality import SetInGroup
from .errors import DomainError
from .groups import Group
from .pairing import Pairing, standard_pairing

_TUPLE = re.compile(r"\(([^()]*)\)")


def parse_element(G: Group, text: str) -> tuple:
    """'(1,0,5)', or a bare integer for cyclic groups."""
    t = text.strip()
    if t.startswith("("):
        if not t.endswith(")"):
            raise DomainError(f"bad element literal {text!r}")
        body = t[1:-1].strip()
        vals = [int(v) for v in body.split(",") if v.strip()] if body else []
    else:
        try:
            vals = [int(t)]
        except ValueError:
            raise DomainError(f"bad element literal {text!r}") from None
    return G.check(tuple(vals))


def parse_set(G: Group, text: str, allow_empty: bool = False) -> SetInGroup:
    """'{0,1}' for cyclic groups or '{(0,0),(1,1)}'."""
    t = text.strip()
    if t.startswith("{") != t.endswith("}"):
        raise DomainError(f"bad set literal {text!r}")
    body = t[1:-1] if t.startswith("{") else t
    if "(" in body:
        rest = _TUPLE.sub("", body)
        if rest.replace(",", "").strip():
            raise DomainError(f"bad set literal {text!r}")
        items = [f"({m})" for m in _TUPLE.findall(body)]
    else:
        items = [v for v in body.split(",") if v.strip()]
    return SetInGroup.of(G, [parse_element(G, v) for v in items], allow_empty=allow_empty)


def parse_elements(G: Group, text: str) -> list:
    """Comma separated elements without braces (used for seed prefixes)."""
    if not text.strip():
        return []
    return list(parse_set(G, "{" + text + "}").members)


def parse_pairing(G: Group, text: str) -> Pairing:
    """'standard', a JSON matrix literal, or a path to a JSON file holding one."""
    t = text.strip()
    if t == "standard":
        return standard_pairing(G)
    if not t.startswith("["):
        p = Path(t)
        if not p.exists():
            raise DomainError(f"pairing {text!r} is neither 'standard', a matrix nor a file")
        doc = json.loads(p.read_text())
        M = doc["pairing"] if isinstance(doc, dict) else doc
    else:
        try:
            M = json.loads(t)
        except json.JSONDecodeError as e:
            raise DomainError(f"bad pairing literal: {e}") from None
    if G.rank == 0 and M in ([], [[]]):
        M = []
    return Pairing(G, tuple(tuple(int(v) for v in row) for row in M))


def bundle(P: Pairing, S: SetInGroup, T: SetInGroup = None, **extra) -> dict:
    doc = {"group": str(P.group), "pairing": P.to_json(), "set": S.to_json()}
    if T is not None:
        doc["dual_set"] = T.to_json()
    doc.update(extra)
    return doc


def load_bundle(doc: dict) -> tuple:
    G = Group.parse(doc["group"])
    M = doc["pairing"]
    P = standard_pairing(G) if M == "standard" else Pairing(G, tuple(tuple(r) for r in M))
    S = SetInGroup.of(G, [tuple(m) for m in doc["set"]])
    T = SetInGroup.of(G, [tuple(m) for m in doc["dual_set"]]) if doc.get("dual_set") else None
    return P, S, T


def format_element(e: tuple) -> str:
    return str(e[0]) if len(e) == 1 else "(" + ",".join(str(v) for v in e) + ")"


def format_set(S: SetInGroup) -> str:
    return "{" + ",".join(format_element(m) for m in S.members) + "}"
