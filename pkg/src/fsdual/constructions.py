"""Known families of formally (self) dual sets, each certified on output."""
from __future__ import annotations


import numpy as np

from .cyclotomic import CyclotomicInt
from .duality import (SetInGroup, is_formally_dual_pair, is_formally_self_dual, is_primitive,
                      nu_array)
from .errors import DomainError, InternalConsistencyError
from .fields import OddField
from .groups import Group, Subgroup
from .pairing import Pairing, standard_pairing


def _certified_self_dual(P: Pairing, S: SetInGroup):
    if not is_formally_self_dual(P, S).verdict:
        raise InternalConsistencyError(f"construction output {S.members} failed verification")
    return P, S


def tito():
    G = Group((4,))
    return _certified_self_dual(standard_pairing(G), SetInGroup.of(G, [(0,), (1,)]))


def lattice_example(n: int):
    """Multiples of n in Z_{n^2}."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if n == 1:
        G = Group((1,))
        return _certified_self_dual(standard_pairing(G), SetInGroup.of(G, [(0,)]))
    G = Group((n * n,))
    return _certified_self_dual(standard_pairing(G), SetInGroup.of(G, [(n * k,) for k in range(n)]))


def gaussian_example(p: int, alpha: int):
    """{(k, k alpha)} in Z_p^2 where alpha^2 = -1 mod p."""
    if p < 2 or (alpha * alpha + 1) % p:
        raise DomainError(f"{alpha}^2 is not -1 mod {p}")
    G = Group((p, p))
    S = SetInGroup.of(G, [(k, (k * alpha) % p) for k in range(p)])
    return _certified_self_dual(standard_pairing(G), S)


def is_relative_difference_set(S: SetInGroup, N: Subgroup) -> tuple:
    """(verdict, lambda) with nu(0)=|S|, nu=0 on N minus 0 and nu=lambda off N."""
    G = S.group
    nu = nu_array(S)
    inN = np.zeros(G.order, dtype=bool)
    inN[list(N.indices)] = True
    if nu[0] != len(S):
        return False, None
    if np.any(nu[inN][1:] != 0):
        return False, None
    off = nu[~inN]
    if len(off) == 0:
        return True, 0
    lam = int(off[0])
    if np.any(off != lam):
        return False, None
    return True, lam


def field_group(F: OddField) -> Group:
    return Group((F.p,) * F.m)


def field_set(F: OddField, elems) -> SetInGroup:
    return SetInGroup.of(field_group(F), [F.digits(x) for x in elems])


def paley_set(F: OddField) -> SetInGroup:
    """Nonzero squares of F_q, q = 3 mod 4."""
    if F.q % 4 != 3:
        raise DomainError(f"q={F.q} is not 3 mod 4")
    D = field_set(F, sorted(F.squares))
    if not is_skew_hadamard(D):
        raise InternalConsistencyError("Paley set is not skew Hadamard")
    return D


def is_skew_hadamard(D: SetInGroup) -> bool:
    G = D.group
    idx = set(int(i) for i in D.indices)
    neg = set(int(i) for i in G.neg_idx(D.indices))
    if 0 in idx or idx & neg or len(idx) + len(neg) + 1 != G.order:
        return False
    nu = nu_array(D)
    return bool(np.all(nu[1:] == nu[1])) if G.order > 1 else True


def trace_pairing(F: OddField) -> Pairing:
    """<a, b> = zeta_p^Tr(ab) in the polynomial basis."""
    return Pairing(field_group(F), F.trace_form())


def quadratic_gauss_sum(F: OddField, a: int = 1) -> CyclotomicInt:
    """sum_x zeta_p^Tr(a x^2), exactly."""
    counts = [0] * F.p
    for x in range(F.q):
        counts[F.trace(F.mul(a, F.mul(x, x)))] += 1
    return CyclotomicInt.from_exponent_counts(F.p, counts)


def i_sqrt_q(F: OddField) -> CyclotomicInt:
    """i sqrt(q) in Z[zeta_p]: the Gauss sum or its negative, whichever has positive imaginary part."""
    if F.q % 4 != 3:
        raise DomainError("i sqrt(q) lies in Z[zeta_p] only for q = 3 mod 4 here")
    g = quadratic_gauss_sum(F)
    if g * g != CyclotomicInt.from_int(F.p, -F.q):
        raise InternalConsistencyError("Gauss sum does not square to -q")
    return g if g.to_complex().imag > 0 else -g


def dual_set_Dstar(P: Pairing, D: SetInGroup, F: OddField = None) -> SetInGroup:
    """{a : 2 <a, D> = -1 + i sqrt(q)} by exact comparison.

    ``F`` supplies i sqrt(q); by default the prime field of matching order
    (only valid for m = 1) or a field built from the group shape.
    """
    G = P.group
    if F is None:
        p = G.moduli[0]
        F = OddField(p, G.rank)
    target = i_sqrt_q(F) - 1
    out = []
    for a in G.elements():
        counts = [0] * P.N
        for x in D.members:
            counts[P.exponent(a, x)] += 1
        s = CyclotomicInt.from_exponent_counts(P.N, counts)
        if s + s == target:
            out.append(a)
    return SetInGroup.of(G, out, allow_empty=True)


def _zp_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DomainError("division by zero in Z_p")
    return pow(a, -1, p)


def shds_pair(D: SetInGroup, Dstar: SetInGroup, alpha: int, beta: int, P: Pairing = None) -> tuple:
    """The pair (S, T) in Z_p^m x Z_p^m built from a skew Hadamard D and its dual D*.

    When ``P`` (pairing on Z_p^m) is given, the pair is verified under P x P.
    """
    G0 = D.group
    p = G0.moduli[0]
    if any(n != p for n in G0.moduli):
        raise DomainError("D must live in Z_p^m")
    alpha %= p
    beta %= p
    if alpha == 0 or beta == 0 or alpha == beta:
        raise DomainError("alpha, beta must be nonzero and distinct mod p")
    G = Group(G0.moduli * 2)
    inv_ab = _zp_inv(alpha - beta, p)
    inv_ba = _zp_inv(beta - alpha, p)

    def mul(c, x):
        return tuple((c * v) % p for v in x)

    zero = G0.identity
    S = [zero + zero]
    S += [x + mul(alpha, x) for x in D.members]
    S += [G0.neg(x) + mul(beta, G0.neg(x)) for x in D.members]
    T = [zero + zero]
    T += [mul(alpha * inv_ab, x) + mul(inv_ba, x) for x in Dstar.members]
    T += [mul(beta * inv_ab, G0.neg(x)) + mul(inv_ba, G0.neg(x)) for x in Dstar.members]
    S, T = SetInGroup.of(G, S), SetInGroup.of(G, T)
    if P is not None:
        if not is_formally_dual_pair(product_pairing(P), S, T).verdict:
            raise InternalConsistencyError("constructed pair failed verification")
    return S, T


def product_pairing(P: Pairing) -> Pairing:
    """P x P on G x G (same exponent, block diagonal)."""
    m = P.group.rank
    B = [[0] * (2 * m) for _ in range(2 * m)]
    for j in range(m):
        for k in range(m):
            B[j][k] = B[m + j][m + k] = P.matrix[j][k]
    return Pairing(Group(P.group.moduli * 2), tuple(map(tuple, B)))


def pi_matrix(p: int, m: int, alpha: int, beta: int, dstar_is_d: bool) -> np.ndarray:
    """Coordinate matrix of the map pi with T = pi(S)."""
    c1 = _zp_inv(alpha - beta, p)
    c2 = _zp_inv(beta - alpha, p)
    c3 = ((alpha + beta) * c1) % p
    I = np.eye(m, dtype=np.int64)
    Z = np.zeros((m, m), dtype=np.int64)
    if dstar_is_d:
        M = np.block([[Z, c1 * I], [c2 * I, Z]])
    else:
        M = np.block([[c3 * I, c2 * I], [c2 * I, Z]])
    return M % p


def composed_pairing(P: Pairing, M: np.ndarray) -> Pairing:
    """<a, b>' = <pi(a), b> under P x P, for pi with coordinate matrix M."""
    PP = product_pairing(P)
    B = (M.T @ PP.B) % PP.N
    return Pairing(PP.group, tuple(tuple(int(v) for v in r) for r in B))


def paley_self_dual(F: OddField, alpha: int, beta: int) -> tuple:
    """Full pipeline for Paley D: returns (composed pairing, S, T, report dict).

    Verifies the dual pair under the product trace pairing, that D* is D or
    -D, that T = pi(S), and that S is self dual under the composed pairing.
    """
    P = trace_pairing(F)
    D = paley_set(F)
    Ds = dual_set_Dstar(P, D, F)
    negD = D.map(D.group.neg)
    if Ds == D:
        which = True
    elif Ds == negD:
        which = False
    else:
        raise InternalConsistencyError("D* is neither D nor D^(-1)")
    S, T = shds_pair(D, Ds, alpha, beta, P)
    M = pi_matrix(F.p, F.m, alpha % F.p, beta % F.p, which)
    G = S.group
    piS = S.map(lambda s: tuple(int(v) for v in (M @ np.array(s)) % F.p))
    if piS != T:
        raise InternalConsistencyError("T differs from pi(S)")
    Pc = composed_pairing(P, M)
    cert = is_formally_self_dual(Pc, S)
    if not cert.verdict:
        raise InternalConsistencyError("S is not self dual under the composed pairing")
    report = {"q": F.q, "alpha": alpha, "beta": beta, "Dstar": "D" if which else "-D",
              "size": len(S), "group": str(G)}
    return Pc, S, T, report


SPORADIC_64 = (
    ((2, 4, 8), [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 0, 5), (0, 1, 0), (0, 3, 0), (1, 0, 0),
                 (1, 2, 6)]),
    ((2, 2, 2, 8), [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2), (0, 0, 0, 5), (0, 0, 1, 0),
                    (0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 1, 6)]),
)


def sporadic_order64() -> list:
    out = []
    for moduli, members in SPORADIC_64:
        G = Group(moduli)
        P, S = _certified_self_dual(standard_pairing(G), SetInGroup.of(G, members))
        if not is_primitive(S)[0]:
            raise InternalConsistencyError("sporadic set is not primitive")
        out.append((P, S))
    return out


def gauss_sum_signs(F: OddField) -> dict:
    """Map a -> +1/-1 with sum_x zeta^Tr(a x^2) = sign * eta(a) * i sqrt(q), a != 0."""
    isq = i_sqrt_q(F)
    out = {}
    for a in range(1, F.q):
        g = quadratic_gauss_sum(F, a)
        e = F.eta(a)
        if g == isq * e:
            out[a] = 1
        elif g == -(isq * e):
            out[a] = -1
        else:
            raise InternalConsistencyError(f"Gauss sum at {a} is not +-eta(a) i sqrt(q)")
    return out


__all__ = [
    "tito", "lattice_example", "gaussian_example", "is_relative_difference_set", "paley_set",
    "is_skew_hadamard", "trace_pairing", "dual_set_Dstar", "shds_pair", "sporadic_order64",
    "quadratic_gauss_sum", "i_sqrt_q", "paley_self_dual", "pi_matrix", "composed_pairing",
    "product_pairing", "field_group", "field_set", "gauss_sum_signs",
]
