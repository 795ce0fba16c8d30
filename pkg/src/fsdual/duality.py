"""Weight enumerators, character sums and exact formal duality checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .cyclotomic import CyclotomicInt, norms_from_counts
from .errors import DomainError, InternalConsistencyError
from .groups import Group, Subgroup, quotient_group, smallest_containing_coset
from .pairing import (Pairing, adjoint_pairing, annihilator, pairing_is_nondegenerate,
                      standard_pairing)

FULL_TABLE_BOUND = 256


@dataclass(frozen=True)
class SetInGroup:
    group: Group
    members: tuple

    def __post_init__(self):
        mem = sorted({self.group.check(m) for m in self.members})
        object.__setattr__(self, "members", tuple(mem))

    @classmethod
    def of(cls, group: Group, members: Iterable, allow_empty: bool = False) -> "SetInGroup":
        S = cls(group, tuple(members))
        if not S.members and not allow_empty:
            raise DomainError("empty sets are not supported")
        return S

    @classmethod
    def from_indices(cls, group: Group, indices) -> "SetInGroup":
        return cls(group, tuple(group.element(int(i)) for i in indices))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, a):
        return tuple(a) in set(self.members)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.array([self.group.index(m) for m in self.members], dtype=np.int64)

    def translate(self, t) -> "SetInGroup":
        return SetInGroup(self.group, tuple(self.group.add(m, t) for m in self.members))

    def map(self, f) -> "SetInGroup":
        return SetInGroup(self.group, tuple(f(m) for m in self.members))

    def to_json(self):
        return [list(m) for m in self.members]


def _nonempty(S: SetInGroup):
    if len(S) == 0:
        raise DomainError("empty sets are not supported")


def nu_array(S: SetInGroup) -> np.ndarray:
    """Weight enumerator indexed by group index."""
    G = S.group
    i = S.indices
    diffs = G.sub_idx(np.repeat(i, len(i)), np.tile(i, len(i)))
    return np.bincount(diffs, minlength=G.order)


def weight_enumerator(S: SetInGroup) -> dict:
    """nu_S(g) = #{(x, y) in S x S : x - y = g}, for every g in G."""
    nu = nu_array(S)
    return {S.group.element(k): int(v) for k, v in enumerate(nu)}


def char_sum(P: Pairing, g, S: SetInGroup) -> CyclotomicInt:
    """sum_{x in S} <g, x>, exactly."""
    g = P.group.check(g)
    counts = [0] * P.N
    for x in S.members:
        counts[P.exponent(g, x)] += 1
    return CyclotomicInt.from_exponent_counts(P.N, counts)


def char_sum_norms(P: Pairing, S: SetInGroup, rows=None) -> list:
    """|sum_{x in S} <g, x>|^2 for g over ``rows`` (default all of G).

    Entries are Fractions, or None where the value is irrational.
    """
    G = P.group
    rows = np.arange(G.order) if rows is None else np.asarray(rows)
    E = P.exponent_matrix(rows, S.indices)
    N = P.N
    flat = E + N * np.arange(len(rows))[:, None]
    counts = np.bincount(flat.ravel(), minlength=len(rows) * N).reshape(len(rows), N)
    return norms_from_counts(N, counts)


def _fmt(q):
    if q is None:
        return "irrational"
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class DualityCertificate:
    verdict: bool
    group: str
    pairing: list
    set: list
    dual_set: Optional[list] = None
    table: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    size_condition: Optional[bool] = None
    kind: str = "pair"

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None

    def to_json(self) -> dict:
        doc = {
            "group": self.group,
            "pairing": self.pairing,
            "set": self.set,
        }
        if self.dual_set is not None:
            doc["dual_set"] = self.dual_set
        doc["verdict"] = self.verdict
        if self.size_condition is not None:
            doc["size_condition"] = self.size_condition
        doc["table"] = [{"element": list(e), "nu": nu, "norm": _fmt(q)} for e, nu, q in self.table]
        doc["violations"] = [list(v) for v in self.violations]
        return doc


def _side_check(P: Pairing, S: SetInGroup, T: SetInGroup):
    """Rows (norm of g-sum over S, nu_T(g)) and the indices violating the duality identity."""
    norms = char_sum_norms(P, S)
    nuT = nu_array(T)
    s2, t = len(S) ** 2, len(T)
    bad = []
    for k, (q, nu) in enumerate(zip(norms, nuT)):
        if q is None or q * t != s2 * int(nu):
            bad.append(k)
    return norms, nuT, bad


def is_formally_dual_pair(P: Pairing, S: SetInGroup, T: SetInGroup) -> DualityCertificate:
    """Exact check of |chi_g(S)|^2 = |S|^2/|T| nu_T(g) for every g.

    The equivalent form |g(T)|^2 = |T|^2/|S| nu_S(g) is evaluated as well,
    through the adjoint pairing; disagreement raises.
    """
    _nonempty(S)
    _nonempty(T)
    if S.group != P.group or T.group != P.group:
        raise DomainError("sets and pairing live in different groups")
    if not pairing_is_nondegenerate(P):
        raise DomainError("pairing is degenerate")
    norms, nuT, bad = _side_check(P, S, T)
    _, _, bad2 = _side_check(adjoint_pairing(P), T, S)
    if bool(bad) != bool(bad2):
        raise InternalConsistencyError("the two equivalent duality conditions disagree")
    G = P.group
    if G.order <= FULL_TABLE_BOUND:
        table = [(G.element(k), int(nuT[k]), norms[k]) for k in range(G.order)]
        violations = [G.element(k) for k in bad]
    else:
        table = [(G.element(k), int(nuT[k]), norms[k]) for k in bad[:1]]
        violations = [G.element(k) for k in bad[:1]]
    return DualityCertificate(
        verdict=not bad, group=str(G), pairing=P.to_json(), set=S.to_json(),
        dual_set=T.to_json(), table=table, violations=violations)


def is_formally_self_dual(P: Pairing, S: SetInGroup) -> DualityCertificate:
    cert = is_formally_dual_pair(P, S, S)
    cert.dual_set = None
    cert.kind = "self"
    cert.size_condition = len(S) ** 2 == P.group.order
    return cert


def is_primitive(S: SetInGroup) -> tuple:
    """(primitive?, reason). Reason is "coset", "union", "coset+union" or ""."""
    _nonempty(S)
    G = S.group
    H, _ = smallest_containing_coset(G, S.members)
    reasons = []
    if not H.is_whole():
        reasons.append("coset")
    if not stabilizer(S).is_trivial():
        reasons.append("union")
    return (not reasons, "+".join(reasons))


def stabilizer(S: SetInGroup) -> Subgroup:
    """{k : S + k = S}; S is a union of K-cosets iff K lies in it."""
    G = S.group
    idx = S.indices
    base = set(int(i) for i in idx)
    members = [0]
    # any stabilising k maps S[0] into S, so k in S - S[0]
    for k in G.sub_idx(idx, np.full(len(idx), idx[0])):
        k = int(k)
        if k and set(int(v) for v in G.add_idx(idx, np.full(len(idx), k))) == base:
            members.append(k)
    return Subgroup.from_indices(G, members, check=False)


@dataclass
class ReductionStep:
    group: str
    set_size: int
    containing_subgroup_order: int
    annihilator_order: int
    quotient: str
    reduced_size: int
    verified: bool

    def to_json(self):
        return dict(self.__dict__)


def induced_pairing(P: Pairing, Q) -> Pairing:
    """Pairing on Q = H/K given by <aK, bK> = <a, b>."""
    lifts = Q.basis_lifts
    N2 = Q.group.exponent
    B = []
    for a in lifts:
        row = []
        for b in lifts:
            e = P.exponent(a, b) * N2
            if e % P.N:
                raise DomainError("induced pairing is ill-defined")
            row.append(e // P.N)
        B.append(tuple(row))
    return Pairing(Q.group, tuple(B))


def reduce_to_primitive(P: Pairing, S: SetInGroup, verify: bool = True) -> tuple:
    """Reduce a formally self dual set to a primitive one.

    Each round: S lies in s0 + H with H minimal, the annihilator K of H sits
    inside H, and the image of S - s0 in H/K is self dual under the induced
    pairing. Returns ``(pairing, set, trace)``.
    """
    if verify and not is_formally_self_dual(P, S).verdict:
        raise DomainError("set is not formally self dual under this pairing")
    trace = []
    while True:
        prim, reason = is_primitive(S)
        if prim:
            break
        G = S.group
        H, s0 = smallest_containing_coset(G, S.members)
        if H.is_whole():
            raise InternalConsistencyError(
                "self dual set is a union of cosets but lies in no proper coset")
        K = annihilator(P, H)
        if not K.is_subgroup_of(H):
            raise DomainError("annihilator not inside H: set is not self dual under P")
        Q = quotient_group(H, K)
        S2 = SetInGroup(Q.group, tuple(Q.project(G.sub(s, s0)) for s in S.members))
        if len(S2) * K.order != len(S):
            raise DomainError("set is not a union of annihilator cosets")
        P2 = induced_pairing(P, Q)
        ok = is_formally_self_dual(P2, S2).verdict
        if not ok:
            raise InternalConsistencyError("reduced set failed verification")
        trace.append(ReductionStep(str(G), len(S), H.order, K.order, str(Q.group), len(S2), ok))
        P, S = P2, S2
    return P, S, trace


__all__ = [
    "SetInGroup", "DualityCertificate", "weight_enumerator", "nu_array", "char_sum",
    "char_sum_norms", "is_formally_dual_pair", "is_formally_self_dual", "is_primitive",
    "stabilizer", "reduce_to_primitive", "induced_pairing", "ReductionStep",
    "standard_pairing",
]
