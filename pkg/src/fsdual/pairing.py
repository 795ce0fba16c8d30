"""Pairings on finite abelian groups.

A pairing is given by an integer matrix ``B`` and means
``<a, b> = exp(2 pi i * (a^T B b) / N)`` with ``N`` the group exponent.
Every isomorphism ``G -> G^`` arises from exactly one nondegenerate such
matrix (entries taken mod N), so the dual group is never materialised.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .cyclotomic import CyclotomicInt
from .errors import DomainError, InvariantError
from .groups import Group, Subgroup


@dataclass(frozen=True)
class Pairing:
    group: Group
    matrix: tuple

    def __post_init__(self):
        G = self.group
        N = G.exponent
        m = G.rank
        B = tuple(tuple(int(v) % N for v in row) for row in self.matrix)
        if len(B) != m or any(len(r) != m for r in B):
            raise InvariantError(f"pairing matrix must be {m}x{m}")
        for j, k in itertools.product(range(m), repeat=2):
            if (G.moduli[j] * B[j][k]) % N or (G.moduli[k] * B[j][k]) % N:
                raise InvariantError(f"entry B[{j}][{k}]={B[j][k]} is not well defined on {G}")
        object.__setattr__(self, "matrix", B)

    @property
    def N(self) -> int:
        return self.group.exponent

    @cached_property
    def B(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.group.rank, self.group.rank)

    def exponent(self, a, b) -> int:
        a = self.group.check(a)
        b = self.group.check(b)
        return int(sum(a[j] * self.matrix[j][k] * b[k]
                       for j in range(self.group.rank) for k in range(self.group.rank))) % self.N

    def __call__(self, a, b) -> CyclotomicInt:
        return pairing_eval(self, a, b)

    def exponent_matrix(self, rows, cols) -> np.ndarray:
        """``a^T B b mod N`` for index arrays ``rows`` x ``cols``."""
        c = self.group.coords
        left = (c[np.asarray(rows)] @ self.B) % self.N
        return (left @ c[np.asarray(cols)].T) % self.N

    @cached_property
    def left_signatures(self) -> np.ndarray:
        """Row x -> (exponent of <x, e_k>)_k."""
        return (self.group.coords @ self.B) % self.N

    @cached_property
    def right_signatures(self) -> np.ndarray:
        """Row x -> (exponent of <e_k, x>)_k."""
        return (self.group.coords @ self.B.T) % self.N

    def to_json(self):
        return [list(r) for r in self.matrix]


def standard_pairing(G: Group) -> Pairing:
    N = G.exponent
    m = G.rank
    return Pairing(G, tuple(tuple(N // G.moduli[j] if j == k else 0 for k in range(m))
                            for j in range(m)))


def pairing_eval(P: Pairing, a, b) -> CyclotomicInt:
    return CyclotomicInt.root(P.N, P.exponent(a, b))


def pairing_is_nondegenerate(P: Pairing) -> bool:
    sig = P.left_signatures
    return int((~sig.any(axis=1)).sum()) == 1


def adjoint_pairing(P: Pairing) -> Pairing:
    return Pairing(P.group, tuple(zip(*P.matrix)) if P.group.rank else ())


def _require_nondegenerate(P: Pairing):
    if not pairing_is_nondegenerate(P):
        raise DomainError("pairing is degenerate")


def sigma_permutation(P: Pairing) -> np.ndarray:
    """Index permutation of sigma, defined by <sigma(x), y> = <y, x> for all y."""
    _require_nondegenerate(P)
    left = {tuple(int(v) for v in row): i for i, row in enumerate(P.left_signatures)}
    perm = np.array([left[tuple(int(v) for v in row)] for row in P.right_signatures],
                    dtype=np.int64)
    return perm


def sigma_automorphism(P: Pairing):
    """sigma as a function on element tuples."""
    perm = sigma_permutation(P)
    G = P.group

    def sigma(x):
        return G.element(int(perm[G.index(G.check(x))]))

    sigma.permutation = perm
    return sigma


def permutation_order(perm: np.ndarray) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    order = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = int(perm[j])
            n += 1
        order = math.lcm(order, n)
    return order


def annihilator(P: Pairing, H: Subgroup) -> Subgroup:
    """``{g : <g, h> = 1 for all h in H}``, i.e. Delta^{-1}(H^perp)."""
    if H.group != P.group:
        raise DomainError("subgroup is not in the pairing's group")
    if H.order != len(set(H.indices)) or 0 not in H.indices:
        raise InvariantError("not a subgroup")
    G = P.group
    gens = [G.index(g) for g in H.generators] or [0]
    E = P.exponent_matrix(np.arange(G.order), np.array(gens))
    members = np.nonzero(~E.any(axis=1))[0]
    return Subgroup.from_indices(G, members, check=False)


def pairing_direct_sum(P: Pairing, Q: Pairing) -> Pairing:
    """Pairing on P.group x Q.group acting blockwise."""
    G = Group(P.group.moduli + Q.group.moduli)
    N = G.exponent
    sp, sq = N // P.N, N // Q.N
    m1, m2 = P.group.rank, Q.group.rank
    B = [[0] * (m1 + m2) for _ in range(m1 + m2)]
    for j in range(m1):
        for k in range(m1):
            B[j][k] = P.matrix[j][k] * sp
    for j in range(m2):
        for k in range(m2):
            B[m1 + j][m1 + k] = Q.matrix[j][k] * sq
    return Pairing(G, tuple(map(tuple, B)))


def enumerate_pairings(G: Group, nondegenerate_only: bool = True):
    """Every well-defined pairing matrix on G (mod N), optionally nondegenerate."""
    N = G.exponent
    m = G.rank
    choices = []
    for j, k in itertools.product(range(m), repeat=2):
        g = math.gcd(G.moduli[j], G.moduli[k])
        step = N // g
        choices.append([t * step for t in range(g)])
    for entries in itertools.product(*choices):
        B = tuple(tuple(entries[j * m:(j + 1) * m]) for j in range(m))
        P = Pairing(G, B)
        if not nondegenerate_only or pairing_is_nondegenerate(P):
            yield P
