"""Vectorial Boolean functions on F_{2^n} and graph self-duality.

The graph {(x, F(x))} lives in Z_2^{2n} with coordinates (bits of x, bits of
y), bit 0 first, and carries the trace pairing (-1)^Tr(ax + by).
"""
from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from .duality import DualityCertificate, FULL_TABLE_BOUND, SetInGroup, is_formally_self_dual
from .errors import CapacityError, DomainError, InternalConsistencyError
from .fields import BinaryField
from .groups import Group
from .pairing import Pairing

FULL_TABLE_MAX_N = 16


def fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform along axis 0 (length a power of 2)."""
    a = np.array(a, dtype=np.int64, copy=True)
    n = a.shape[0]
    if n & (n - 1):
        raise DomainError("length must be a power of two")
    rest = a.shape[1:]
    h = 1
    while h < n:
        v = a.reshape((n // (2 * h), 2, h) + rest)
        x, y = v[:, 0].copy(), v[:, 1].copy()
        v[:, 0] = x + y
        v[:, 1] = x - y
        h *= 2
    return a


@dataclass(frozen=True, eq=False)
class VectorialFunction:
    field: BinaryField
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.field.size:
            raise DomainError(f"value table must have length {self.field.size}")
        vals = tuple(int(v) for v in self.values)
        if any(not 0 <= v < self.field.size for v in vals):
            raise DomainError("values outside the field")
        object.__setattr__(self, "values", vals)

    def __eq__(self, other):
        return (isinstance(other, VectorialFunction) and other.field.n == self.field.n
                and other.field.poly == self.field.poly and other.values == self.values)

    def __hash__(self):
        return hash((self.field.n, self.field.poly, self.values))

    @property
    def n(self) -> int:
        return self.field.n

    @cached_property
    def table(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def __call__(self, x: int) -> int:
        return self.values[x]

    @classmethod
    def from_table(cls, field: BinaryField, values) -> "VectorialFunction":
        return cls(field, tuple(values))

    @classmethod
    def power(cls, field: BinaryField, d: int) -> "VectorialFunction":
        """x -> x^d (with 0^0 = 1)."""
        vals = field.pow_vec(np.arange(field.size), d)
        return cls(field, tuple(int(v) for v in vals))

    @classmethod
    def from_polynomial(cls, field: BinaryField, coeffs: dict) -> "VectorialFunction":
        """sum_k coeffs[k] x^k."""
        xs = np.arange(field.size)
        acc = np.zeros(field.size, dtype=np.int64)
        for k, c in coeffs.items():
            if c:
                if k == 0:
                    acc ^= c
                else:
                    acc ^= field.mul_vec(c, np.where(xs == 0, 0, field.pow_vec(xs, k)))
        return cls(field, tuple(int(v) for v in acc))

    def compose(self, other: "VectorialFunction") -> "VectorialFunction":
        """self o other."""
        return VectorialFunction(self.field, tuple(self.values[v] for v in other.values))

    def is_bijective(self) -> bool:
        return len(set(self.values)) == self.field.size

    def inverse(self) -> "VectorialFunction":
        if not self.is_bijective():
            raise DomainError("function is not bijective")
        inv = [0] * self.field.size
        for x, y in enumerate(self.values):
            inv[y] = x
        return VectorialFunction(self.field, tuple(inv))

    def polynomial(self) -> dict:
        """Univariate coefficients {k: c_k}, degree < 2^n, by interpolation."""
        Fq = self.field
        q = Fq.size
        out = {}
        if self.values[0]:
            out[0] = self.values[0]
        xs = np.arange(1, q)
        vals = self.table[1:]
        for k in range(1, q):
            if k == q - 1:
                c = int(np.bitwise_xor.reduce(self.table))
            else:
                # c_k = sum_{x != 0} F(x) x^(-k)
                c = int(np.bitwise_xor.reduce(Fq.mul_arrays(vals, Fq.pow_vec(xs, q - 1 - k))))
            if c:
                out[k] = c
        return out

    def graph(self) -> SetInGroup:
        return SetInGroup.from_indices(graph_group(self.n), graph_indices(self.field, self.table))


def element_str(field: BinaryField, c: int, var: str = "a") -> str:
    """Field element in the polynomial basis, e.g. 'a^2+a+1'."""
    if c == 0:
        return "0"
    terms = []
    for j in reversed(range(field.n)):
        if c >> j & 1:
            terms.append("1" if j == 0 else var if j == 1 else f"{var}^{j}")
    return "+".join(terms)


def polynomial_str(field: BinaryField, coeffs: dict, var: str = "x") -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        cs = element_str(field, c)
        if c == 1:
            parts.append(mono or "1")
        else:
            cs = f"({cs})" if "+" in cs and mono else cs
            parts.append(cs + mono)
    return "+".join(parts)


def parse_function(field: BinaryField, text: str) -> VectorialFunction:
    """'x^d', 'coeffs:c0,c1,...' (c_k at x^k), 'poly:k:c,k:c,...' or a value table."""
    text = text.strip().replace(" ", "")
    if text.startswith("x^"):
        return VectorialFunction.power(field, int(text[2:]))
    if text == "x":
        return VectorialFunction.power(field, 1)
    if text.startswith("coeffs:"):
        cs = [int(v, 0) for v in text[7:].split(",") if v]
        return VectorialFunction.from_polynomial(field, dict(enumerate(cs)))
    if text.startswith("poly:"):
        coeffs = {}
        for part in text[5:].split(","):
            k, c = part.split(":")
            coeffs[int(k)] = int(c, 0)
        return VectorialFunction.from_polynomial(field, coeffs)
    vals = [int(v, 0) for v in text.strip("[]").split(",") if v]
    return VectorialFunction.from_table(field, vals)


# --- spectra ---------------------------------------------------------------

def _require_table_size(n: int):
    if n > FULL_TABLE_MAX_N:
        raise CapacityError(f"full tables are limited to n <= {FULL_TABLE_MAX_N}")


def walsh_column(F: VectorialFunction, b: int) -> np.ndarray:
    """W_F(a, b) for all a, via one fast transform."""
    Fq = F.field
    f = 1 - 2 * Fq.trace_table[Fq.mul_vec(b, F.table)]
    return fwht(f)[Fq.trace_dual_bits]


def walsh_table(F: VectorialFunction) -> np.ndarray:
    """W[a, b] = sum_x (-1)^Tr(b F(x) + a x)."""
    _require_table_size(F.n)
    Fq = F.field
    q = Fq.size
    B = np.arange(q)
    prod = np.empty((q, q), dtype=np.int64)
    for b in range(q):
        prod[:, b] = Fq.mul_vec(b, F.table)
    f = 1 - 2 * Fq.trace_table[prod]
    return fwht(f)[Fq.trace_dual_bits][:, B]


def walsh_naive(F: VectorialFunction) -> np.ndarray:
    """Direct double sum, the oracle for walsh_table."""
    Fq = F.field
    q = Fq.size
    W = np.zeros((q, q), dtype=np.int64)
    tr = Fq.trace_table
    for a in range(q):
        ax = Fq.mul_vec(a, np.arange(q))
        for b in range(q):
            W[a, b] = int(np.sum(1 - 2 * (tr[Fq.mul_vec(b, F.table)] ^ tr[ax])))
    return W


def differential_table(F: VectorialFunction) -> np.ndarray:
    """delta[a, b] = #{x : F(x + a) + F(x) = b}."""
    _require_table_size(F.n)
    q = F.field.size
    x = np.arange(q)
    T = F.table
    D = T[x[None, :] ^ x[:, None]] ^ T[None, :]
    flat = D + q * x[:, None]
    return np.bincount(flat.ravel(), minlength=q * q).reshape(q, q)


@dataclass
class Classification:
    bijective: bool
    apn: bool
    ab: bool
    note: str = ""

    def to_json(self):
        return dict(self.__dict__)


def classify(F: VectorialFunction, W: np.ndarray = None, delta: np.ndarray = None) -> Classification:
    n = F.n
    W = walsh_table(F) if W is None else W
    delta = differential_table(F) if delta is None else delta
    bij = F.is_bijective()
    if bij != bool(np.all(W[0, 1:] == 0)):
        raise InternalConsistencyError("bijectivity disagrees with W(0, b)")
    apn = bool(delta[1:].max() <= 2) if F.field.size > 1 else True
    note = ""
    if n % 2 == 0:
        ab = False
        note = "almost bent is only defined for odd n"
    else:
        v = np.abs(W[:, 1:])
        ab = bool(np.all((v == 0) | (v == 2 ** ((n + 1) // 2))))
    if ab and not apn:
        raise InternalConsistencyError("AB function that is not APN")
    return Classification(bij, apn, ab, note)


# --- graph self duality ----------------------------------------------------

def graph_group(n: int) -> Group:
    return Group((2,) * (2 * n))


def graph_indices(field: BinaryField, ys: np.ndarray, xs: np.ndarray = None) -> np.ndarray:
    """Group index of (x, y); coordinate j is bit j of x, coordinate n + j bit j of y."""
    n = field.n
    xs = np.arange(field.size) if xs is None else np.asarray(xs)
    ys = np.asarray(ys)
    idx = np.zeros(len(xs), dtype=np.int64)
    for j in range(n):
        idx = idx * 2 + (xs >> j & 1)
    for j in range(n):
        idx = idx * 2 + (ys >> j & 1)
    return idx


def index_to_pair(n: int, i: int) -> tuple:
    bits = [(i >> (2 * n - 1 - k)) & 1 for k in range(2 * n)]
    x = sum(b << j for j, b in enumerate(bits[:n]))
    y = sum(b << j for j, b in enumerate(bits[n:]))
    return x, y


def trace_pairing_binary(field: BinaryField) -> Pairing:
    n = field.n
    T = field.trace_form()
    B = [[0] * (2 * n) for _ in range(2 * n)]
    for j in range(n):
        for k in range(n):
            B[j][k] = B[n + j][n + k] = T[j][k]
    return Pairing(graph_group(n), tuple(map(tuple, B)))


def graph_fsd_check(F: VectorialFunction, cross_check: Optional[bool] = None) -> DualityCertificate:
    """2^n delta(a, b) == W(a, b)^2 for all (a, b).

    With ``cross_check`` (default: n <= 5) the verdict is compared with the
    generic verifier applied to the graph under the trace pairing.
    """
    Fq = F.field
    n = F.n
    W = walsh_table(F)
    delta = differential_table(F)
    ok_mask = (Fq.size * delta) == W * W
    verdict = bool(ok_mask.all())
    if F.is_bijective():
        if not (ok_mask[0, :].all() and ok_mask[:, 0].all()):
            raise InternalConsistencyError("bijective F fails the trivial a=0 or b=0 cases")
    P = trace_pairing_binary(Fq)
    G = P.group
    a_idx, b_idx = np.meshgrid(np.arange(Fq.size), np.arange(Fq.size), indexing="ij")
    gidx = graph_indices(Fq, b_idx.ravel(), a_idx.ravel())
    order = np.argsort(gidx)
    flat_ok = ok_mask.ravel()[order]
    flat_delta = delta.ravel()[order]
    flat_w2 = (W * W).ravel()[order]
    bad = np.nonzero(~flat_ok)[0]
    if G.order <= FULL_TABLE_BOUND:
        rows = range(G.order)
        viol = bad
    else:
        rows = bad[:1]
        viol = bad[:1]
    table = [(G.element(int(k)), int(flat_delta[k]), Fraction(int(flat_w2[k]))) for k in rows]
    S = F.graph()
    cert = DualityCertificate(
        verdict=verdict, group=str(G), pairing=P.to_json(), set=S.to_json(), table=table,
        violations=[G.element(int(k)) for k in viol], size_condition=True, kind="self")
    if cross_check is None:
        cross_check = n <= 5
    if cross_check:
        other = is_formally_self_dual(P, S)
        if other.verdict != verdict:
            raise InternalConsistencyError("graph criterion disagrees with the generic verifier")
    return cert


def walsh_divisibility_check(F: VectorialFunction, W: np.ndarray = None) -> bool:
    W = walsh_table(F) if W is None else W
    return bool(np.all(W % (2 ** math.ceil((F.n + 1) / 2)) == 0))


def ab_fsd_criterion(F: VectorialFunction) -> bool:
    """delta(a,b) = 0 iff W(a,b) = 0, for bijective AB F with n odd."""
    W = walsh_table(F)
    delta = differential_table(F)
    c = classify(F, W, delta)
    if F.n % 2 == 0 or not c.bijective or not c.ab:
        raise DomainError("criterion needs a bijective almost bent function and odd n")
    return bool(np.all((delta == 0) == (W == 0)))


# --- Gold functions and AB exponents ---------------------------------------

def _gold_params(n: int, i: int):
    if n % 2 == 0:
        raise DomainError("Gold analysis needs odd n")
    if not 0 < i < n or math.gcd(i, n) != 1:
        raise DomainError(f"need 0 < i < n and gcd(i, n) = 1, got i={i}, n={n}")


@dataclass
class GoldPredicates:
    walsh_zero: bool
    delta_zero: bool


def gold_zero_predicates(field: BinaryField, i: int, a: int, b: int) -> GoldPredicates:
    """Closed forms: W(a,b)=0 iff Tr(a b^(-1/d)) = 0; delta(a,b)=0 iff Tr(a^(-d) b) = 0."""
    n = field.n
    _gold_params(n, i)
    if a == 0 or b == 0:
        raise DomainError("a and b must be nonzero")
    d = 2 ** i + 1
    m = field.size - 1
    dinv = pow(d, -1, m)
    w = field.trace(field.mul(a, field.pow(b, (-dinv) % m))) == 0
    dz = field.trace(field.mul(field.pow(a, (-d) % m), b)) == 0
    return GoldPredicates(w, dz)


def gold_exponent(n: int, r: int) -> int:
    return 2 ** r + 1


def kasami_exponent(n: int, r: int) -> int:
    if math.gcd(r, n) != 1:
        raise DomainError("Kasami exponent needs gcd(r, n) = 1")
    return 2 ** (2 * r) - 2 ** r + 1


def welch_exponent(n: int) -> int:
    if n % 2 == 0:
        raise DomainError("n must be odd")
    return 2 ** ((n - 1) // 2) + 3


def niho_exponent(n: int) -> int:
    """2^t + 2^(t/2) - 1 (t even) or 2^t + 2^((3t+1)/2) - 1 (t odd), n = 2t + 1, reduced mod 2^n - 1."""
    if n % 2 == 0:
        raise DomainError("n must be odd")
    t = (n - 1) // 2
    if t % 2 == 0:
        d = 2 ** t + 2 ** (t // 2) - 1
    else:
        d = 2 ** t + 2 ** ((3 * t + 1) // 2) - 1
    return d % (2 ** n - 1)


AB_FAMILIES = ("gold", "kasami", "welch", "niho")


def ab_exponents(n: int) -> list:
    """(family, parameter, exponent) for the known AB monomials on F_{2^n}, n odd."""
    if n % 2 == 0:
        raise DomainError("n must be odd")
    out = []
    for r in range(1, n):
        if math.gcd(r, n) == 1:
            out.append(("gold", r, gold_exponent(n, r)))
    for r in range(1, n):
        if math.gcd(r, n) == 1:
            out.append(("kasami", r, kasami_exponent(n, r) % (2 ** n - 1)))
    if n >= 3:
        out.append(("welch", None, welch_exponent(n) % (2 ** n - 1)))
        out.append(("niho", None, niho_exponent(n)))
    return out


@dataclass
class ScanRow:
    n: int
    i: int
    exponent: int
    verdict: bool

    def to_json(self):
        return dict(self.__dict__)


def gold_scan(n_list, i_list=None) -> list:
    """graph_fsd_check for x^(2^i+1) over the given n (all valid i when i_list is None)."""
    rows = []
    for n in n_list:
        Fq = BinaryField(n)
        its = [i for i in range(1, n) if math.gcd(i, n) == 1] if i_list is None else i_list
        for i in its:
            _gold_params(n, i)
            d = 2 ** i + 1
            cert = graph_fsd_check(VectorialFunction.power(Fq, d), cross_check=n <= 3)
            rows.append(ScanRow(n, i, d, cert.verdict))
    return rows


def ab_scan(n_list) -> list:
    """Graph self-duality verdicts for every tabulated AB monomial."""
    rows = []
    for n in n_list:
        Fq = BinaryField(n)
        for fam, r, d in ab_exponents(n):
            F = VectorialFunction.power(Fq, d)
            c = classify(F)
            cert = graph_fsd_check(F, cross_check=False)
            rows.append({"n": n, "family": fam, "parameter": r, "exponent": d,
                         "bijective": c.bijective, "ab": c.ab, "verdict": cert.verdict})
    return rows


# --- linearized polynomials ------------------------------------------------

def _gf2_inverse(M: np.ndarray) -> Optional[np.ndarray]:
    n = M.shape[0]
    A = np.concatenate([M % 2, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r, c]), None)
        if piv is None:
            return None
        A[[c, piv]] = A[[piv, c]]
        for r in range(n):
            if r != c and A[r, c]:
                A[r] ^= A[c]
    return A[:, n:]


@dataclass(frozen=True)
class LinearizedPolynomial:
    """L(x) = sum_i c_i x^(2^i), i = 0..n-1."""

    field: BinaryField = field(compare=False)
    coeffs: tuple = ()

    def __post_init__(self):
        n = self.field.n
        c = tuple(int(v) for v in self.coeffs) + (0,) * (n - len(self.coeffs))
        if len(c) != n:
            raise DomainError(f"need at most {n} coefficients")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def identity(cls, field: BinaryField) -> "LinearizedPolynomial":
        return cls(field, (1,))

    @classmethod
    def frobenius(cls, field: BinaryField, i: int) -> "LinearizedPolynomial":
        c = [0] * field.n
        c[i % field.n] = 1
        return cls(field, tuple(c))

    @cached_property
    def table(self) -> np.ndarray:
        Fq = self.field
        xs = np.arange(Fq.size)
        acc = np.zeros(Fq.size, dtype=np.int64)
        for i, c in enumerate(self.coeffs):
            if c:
                acc ^= Fq.mul_vec(c, Fq.pow_vec(xs, 1 << i) if i else xs)
        return acc

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def as_function(self) -> VectorialFunction:
        return VectorialFunction(self.field, tuple(int(v) for v in self.table))

    def matrix(self) -> np.ndarray:
        """F_2 matrix: column j holds the bits of L(2^j)."""
        n = self.field.n
        return np.array([[(int(self.table[1 << j]) >> i) & 1 for j in range(n)] for i in range(n)],
                        dtype=np.int64)

    @classmethod
    def from_map(cls, field: BinaryField, images) -> "LinearizedPolynomial":
        """Coefficients of the F_2-linear map with L(2^j) = images[j] (Moore system)."""
        n = field.n
        beta = [1 << j for j in range(n)]
        # rows j: sum_i c_i beta_j^(2^i) = images[j]
        A = [[field.pow(bj, 1 << i) for i in range(n)] + [int(images[j])] for j, bj in enumerate(beta)]
        for c in range(n):
            piv = next((r for r in range(c, n) if A[r][c]), None)
            if piv is None:
                raise InternalConsistencyError("Moore matrix is singular")
            A[c], A[piv] = A[piv], A[c]
            inv = field.inv(A[c][c])
            A[c] = [field.mul(inv, v) for v in A[c]]
            for r in range(n):
                if r != c and A[r][c]:
                    f = A[r][c]
                    A[r] = [v ^ field.mul(f, w) for v, w in zip(A[r], A[c])]
        return cls(field, tuple(A[r][n] for r in range(n)))

    @classmethod
    def from_table(cls, field: BinaryField, table) -> "LinearizedPolynomial":
        L = cls.from_map(field, [table[1 << j] for j in range(field.n)])
        if not np.array_equal(L.table, np.asarray(table)):
            raise DomainError("map is not F_2-linear")
        return L

    def compose(self, other: "LinearizedPolynomial") -> "LinearizedPolynomial":
        """self o other."""
        return LinearizedPolynomial.from_table(self.field, self.table[other.table])

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.table, np.arange(self.field.size)))

    def is_additive(self, samples: int = 64, seed: int = 0) -> bool:
        rng = np.random.default_rng(seed)
        q = self.field.size
        x = rng.integers(0, q, samples)
        y = rng.integers(0, q, samples)
        return bool(np.all(self.table[x ^ y] == self.table[x] ^ self.table[y]))

    def __str__(self):
        return polynomial_str(self.field, {1 << i: c for i, c in enumerate(self.coeffs) if c})


def linpoly_adjoint(L: LinearizedPolynomial) -> LinearizedPolynomial:
    """L*(x) = sum_i c_i^(2^(n-i)) x^(2^(n-i))."""
    Fq = L.field
    n = Fq.n
    out = [0] * n
    for i, c in enumerate(L.coeffs):
        out[(n - i) % n] ^= Fq.frob(c, n - i)
    return LinearizedPolynomial(Fq, tuple(out))


def linpoly_inverse(L: LinearizedPolynomial) -> Optional[LinearizedPolynomial]:
    Fq = L.field
    Minv = _gf2_inverse(L.matrix())
    if Minv is None:
        return None
    images = [sum(int(Minv[i, j]) << i for i in range(Fq.n)) for j in range(Fq.n)]
    inv = LinearizedPolynomial.from_map(Fq, images)
    if not L.compose(inv).is_identity():
        raise InternalConsistencyError("computed inverse does not invert")
    return inv


def selfdual_condition(L: LinearizedPolynomial) -> bool:
    """sum_i c_i^(2^(n-i)) = 1 and sum_i (c_i c_{i+j})^(2^(n-i)) = 0 for j = 1..n-1."""
    Fq = L.field
    n = Fq.n
    c = L.coeffs
    s0 = 0
    for i in range(n):
        s0 ^= Fq.frob(c[i], n - i)
    if s0 != 1:
        return False
    for j in range(1, n):
        s = 0
        for i in range(n):
            s ^= Fq.frob(Fq.mul(c[i], c[(i + j) % n]), n - i)
        if s:
            return False
    return True


def selfdual_semantic(L: LinearizedPolynomial) -> bool:
    """L* o L = id, checked pointwise."""
    return linpoly_adjoint(L).compose(L).is_identity()


def transform_graph(F: VectorialFunction, L1: LinearizedPolynomial,
                    L2: LinearizedPolynomial) -> VectorialFunction:
    """F' = L2 o F o L1 for invertible L1, L2 with L = (L^-1)*."""
    for L in (L1, L2):
        if linpoly_inverse(L) is None or not selfdual_condition(L):
            raise DomainError("L1, L2 must be invertible and satisfy L = (L^-1)*")
    t = L2.table[F.table[L1.table]]
    return VectorialFunction(F.field, tuple(int(v) for v in t))


def inverse_graph(F: VectorialFunction) -> VectorialFunction:
    """Graph of the compositional inverse (the swap (x, y) -> (y, x))."""
    return F.inverse()


@dataclass
class BlockAutomorphism:
    """phi(a, b) = (L1(a) + L2(b), L3(a) + L4(b)) on F_{2^n}^2."""

    L1: LinearizedPolynomial
    L2: LinearizedPolynomial
    L3: LinearizedPolynomial
    L4: LinearizedPolynomial

    def __call__(self, a: int, b: int) -> tuple:
        return (self.L1(a) ^ self.L2(b), self.L3(a) ^ self.L4(b))

    def adjoint(self) -> "BlockAutomorphism":
        adj = linpoly_adjoint
        return BlockAutomorphism(adj(self.L1), adj(self.L3), adj(self.L2), adj(self.L4))

    def matrix(self) -> np.ndarray:
        """2n x 2n F_2 matrix on the graph-group coordinates."""
        return np.block([[self.L1.matrix(), self.L2.matrix()],
                         [self.L3.matrix(), self.L4.matrix()]]) % 2

    def is_adjoint_inverse(self) -> bool:
        """phi = (phi*)^-1, checked on a basis."""
        n = self.L1.field.n
        adj = self.adjoint()
        basis = [(1 << j, 0) for j in range(n)] + [(0, 1 << j) for j in range(n)]
        return all(adj(*self(a, b)) == (a, b) for a, b in basis)

    def apply_to_set(self, pairs) -> list:
        return [self(a, b) for a, b in pairs]


def matrix_adjoint_mod2(P: Pairing, M: np.ndarray) -> np.ndarray:
    """Phi* = B^-1 Phi^T B over F_2, the adjoint of x -> M x under P."""
    Binv = _gf2_inverse(P.B % 2)
    if Binv is None:
        raise DomainError("pairing matrix is singular mod 2")
    return (Binv @ M.T @ P.B) % 2


def pairs_to_set(field: BinaryField, pairs) -> SetInGroup:
    xs = np.array([a for a, _ in pairs], dtype=np.int64)
    ys = np.array([b for _, b in pairs], dtype=np.int64)
    return SetInGroup.from_indices(graph_group(field.n), graph_indices(field, ys, xs))


def example_linear_map(field: BinaryField = None) -> LinearizedPolynomial:
    """(a+1)x + (a^2+a+1)x^2 + (a^2+1)x^4 over F_8 = F_2[a]/(a^3+a+1)."""
    field = field or BinaryField(3, 0b1011)
    if field.n != 3 or field.poly != 0b1011:
        raise DomainError("example map is defined over F_8 = F_2[a]/(a^3+a+1)")
    return LinearizedPolynomial(field, (0b011, 0b111, 0b101))
