"""Group-algebra computations for even sets.

A set S is even when S S^(-1) is a rational combination of subgroup
indicators. The canonical self-dual coefficients are obtained by averaging
an arbitrary decomposition over the sigma-orbit and the annihilator swap.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .duality import SetInGroup, nu_array
from .errors import DomainError, InternalConsistencyError
from .groups import Group, Subgroup, enumerate_subgroups
from .pairing import Pairing, annihilator, permutation_order, sigma_permutation

@dataclass(frozen=True)
class GroupAlgebraElement:
    """Finite formal sum over G with rational coefficients; zeros are dropped."""

    group: Group
    coeffs: tuple  # sorted ((element, Fraction), ...)

    @classmethod
    def from_dict(cls, group: Group, d: dict) -> "GroupAlgebraElement":
        items = sorted((group.check(k), Fraction(v)) for k, v in d.items() if v != 0)
        merged = {}
        for k, v in items:
            merged[k] = merged.get(k, 0) + v
        return cls(group, tuple((k, v) for k, v in sorted(merged.items()) if v != 0))

    @classmethod
    def indicator(cls, group: Group, elements) -> "GroupAlgebraElement":
        return cls.from_dict(group, {group.check(e): 1 for e in elements})

    @classmethod
    def one(cls, group: Group) -> "GroupAlgebraElement":
        return cls.from_dict(group, {group.identity: 1})

    @classmethod
    def zero(cls, group: Group) -> "GroupAlgebraElement":
        return cls(group, ())

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __getitem__(self, g):
        return self.as_dict().get(tuple(g), Fraction(0))

    def _same(self, other):
        if not isinstance(other, GroupAlgebraElement) or other.group != self.group:
            raise DomainError("group algebra elements over different groups")

    def __add__(self, other):
        self._same(other)
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return GroupAlgebraElement.from_dict(self.group, d)

    def __neg__(self):
        return GroupAlgebraElement(self.group, tuple((k, -v) for k, v in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement.from_dict(self.group, {k: c * v for k, v in self.coeffs})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return group_algebra_product(self, other)

    __rmul__ = __mul__

    def reversed(self) -> "GroupAlgebraElement":
        """A^(-1) = sum a_g g^{-1}."""
        G = self.group
        return GroupAlgebraElement.from_dict(G, {G.neg(k): v for k, v in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs

    def dense(self) -> list:
        """Coefficient list indexed by group index."""
        out = [Fraction(0)] * self.group.order
        for k, v in self.coeffs:
            out[self.group.index(k)] = v
        return out

def group_algebra_product(A: GroupAlgebraElement, B: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution: coefficient of g is sum_h a_h b_{g-h}."""
    A._same(B)
    G = A.group
    out = {}
    for g, a in A.coeffs:
        for h, b in B.coeffs:
            k = G.add(g, h)
            out[k] = out.get(k, 0) + a * b
    return GroupAlgebraElement.from_dict(G, out)

def ss_inverse(S: SetInGroup) -> GroupAlgebraElement:
    """S S^(-1), cross-checked against the weight enumerator."""
    G = S.group
    ind = GroupAlgebraElement.indicator(G, S.members)
    prod = group_algebra_product(ind, ind.reversed())
    nu = nu_array(S)
    if prod.dense() != [Fraction(int(v)) for v in nu]:
        raise InternalConsistencyError("S S^(-1) disagrees with the weight enumerator")
    return prod

@dataclass(frozen=True)
class SubgroupCombination:
    terms: tuple  # ((Subgroup, Fraction), ...)

    def __post_init__(self):
        keys = [H.indices for H, _ in self.terms]
        if len(keys) != len(set(keys)):
            raise DomainError("subgroups in a combination must be distinct")

    @classmethod
    def of(cls, terms) -> "SubgroupCombination":
        return cls(tuple((H, Fraction(c)) for H, c in terms))

    def coefficient(self, H: Subgroup) -> Fraction:
        for K, c in self.terms:
            if K.indices == H.indices:
                return c
        return Fraction(0)

    def as_map(self) -> dict:
        return {H.indices: c for H, c in self.terms}

    def expand(self, group: Group) -> GroupAlgebraElement:
        d = {}
        for H, c in self.terms:
            for e in H.elements():
                d[e] = d.get(e, 0) + c
        return GroupAlgebraElement.from_dict(group, d)

    def nonzero(self) -> "SubgroupCombination":
        return SubgroupCombination(tuple((H, c) for H, c in self.terms if c != 0))

    def to_json(self) -> list:
        out = []
        for H, c in self.terms:
            lam = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append({"generators": [list(g) for g in H.generators], "order": H.order,
                        "lambda": lam})
        return out

def solve_rational(A: list, b: list) -> Optional[list]:
    """One exact solution of A x = b (free variables 0), or None.

    Gauss-Jordan over Fractions, pivoting on the first nonzero entry of each
    column, so the output is deterministic.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [[Fraction(v) for v in A[i]] + [Fraction(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        if pv != 1:
            M[r] = [x / pv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                Mi, Mr = M[i], M[r]
                M[i] = [x - f * y for x, y in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if M[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = M[i][cols]
    return x

def even_decomposition(S: SetInGroup, subgroups=None) -> Optional[SubgroupCombination]:
    """Any rational combination of subgroups re-expanding to S S^(-1), or None."""
    G = S.group
    subs = enumerate_subgroups(G) if subgroups is None else subgroups
    target = ss_inverse(S).dense()
    A = [[0] * len(subs) for _ in range(G.order)]
    for j, H in enumerate(subs):
        for i in H.indices:
            A[i][j] = 1
    x = solve_rational(A, target)
    if x is None:
        return None
    comb = SubgroupCombination(tuple((H, c) for H, c in zip(subs, x) if c != 0))
    if comb.expand(G) != ss_inverse(S):
        raise InternalConsistencyError("decomposition does not re-expand to S S^(-1)")
    return comb

class SubgroupTables:
    """Subgroup list with sigma action and annihilator map, keyed by index tuples."""

    def __init__(self, P: Pairing, subgroups=None):
        G = P.group
        self.pairing = P
        self.subgroups = enumerate_subgroups(G) if subgroups is None else list(subgroups)
        self.by_key = {H.indices: H for H in self.subgroups}
        perm = sigma_permutation(P)
        self.sigma_order = permutation_order(perm)
        self.sigma = {}
        self.ann = {}
        for H in self.subgroups:
            img = tuple(sorted(int(perm[i]) for i in H.indices))
            self.sigma[H.indices] = img
            self.ann[H.indices] = annihilator(P, H).indices

    def sigma_power(self, key, i):
        for _ in range(i):
            key = self.sigma[key]
        return key

def canonical_fsd_coefficients(P: Pairing, S: SetInGroup, mu: SubgroupCombination,
                               tables: SubgroupTables = None) -> SubgroupCombination:
    """lambda_H = 1/(2s) sum_i (mu_{sigma^i H} + |S|/|H| mu_{sigma^i ann(H)})."""
    G = P.group
    if len(S) ** 2 != G.order:
        raise DomainError("canonical coefficients need |S|^2 = |G|")
    tab = tables or SubgroupTables(P)
    m = mu.as_map()
    s = tab.sigma_order
    k = len(S)
    out = []
    for H in tab.subgroups:
        key = H.indices
        acc = Fraction(0)
        a = tab.ann[key]
        for i in range(s):
            acc += m.get(tab.sigma_power(key, i), 0)
            acc += Fraction(k, H.order) * m.get(tab.sigma_power(a, i), 0)
        lam = acc / (2 * s)
        if lam:
            out.append((H, lam))
    return SubgroupCombination(tuple(out))

def canonical_symmetry_holds(P: Pairing, S: SetInGroup, lam: SubgroupCombination,
                             tables: SubgroupTables = None) -> tuple:
    """(lambda_{sigma H} == lambda_H for all H, lambda_{ann H} == |H|/|S| lambda_H for all H)."""
    tab = tables or SubgroupTables(P)
    m = lam.as_map()
    k = len(S)
    sig_ok = all(m.get(tab.sigma[H.indices], 0) == m.get(H.indices, 0) for H in tab.subgroups)
    ann_ok = all(m.get(tab.ann[H.indices], 0) == Fraction(H.order, k) * m.get(H.indices, 0)
                 for H in tab.subgroups)
    return sig_ok, ann_ok

def zero_sum_check(P: Pairing, S: SetInGroup, mu: SubgroupCombination,
                   tables: SubgroupTables = None) -> bool:
    """True iff sum_H (mu_H - lambda_H) H vanishes in the group algebra."""
    lam = canonical_fsd_coefficients(P, S, mu, tables)
    G = P.group
    return (mu.expand(G) - lam.expand(G)).is_zero()

def dual_side_combination(P: Pairing, S: SetInGroup, lam: SubgroupCombination) -> SubgroupCombination:
    """Coefficients lambda_H |G||H|/|S|^3 placed on ann(H); expands to T T^(-1)."""
    G = P.group
    acc = {}
    keep = {}
    for H, c in lam.terms:
        A = annihilator(P, H)
        keep[A.indices] = A
        acc[A.indices] = acc.get(A.indices, 0) + c * Fraction(G.order * H.order, len(S) ** 3)
    return SubgroupCombination(tuple((keep[k], v) for k, v in acc.items() if v != 0))
