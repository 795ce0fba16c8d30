"""Exact arithmetic in Z[zeta_N] = Z[x]/Phi_N(x).

Elements are stored by their canonical representative of degree below
phi(N), so equality is coefficient-wise.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np


def _polydiv_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for j, dc in enumerate(den):
            num[k + j] -= c * dc
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple:
    """Coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValueError("N must be positive")
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num = _polydiv_exact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_rows(N: int) -> tuple:
    phi = cyclotomic_poly(N)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(N):
        rows.append(tuple(cur))
        # multiply by x, then subtract top * Phi_N
        shifted = [0] + cur
        top = shifted[deg]
        if top:
            shifted = [a - top * b for a, b in zip(shifted, phi)]
        cur = shifted[:deg]
    return tuple(rows)


@lru_cache(maxsize=None)
def reduction_matrix(N: int) -> np.ndarray:
    """``R[k]`` is the canonical representative of x^k, as int64 rows."""
    return np.array(_reduction_rows(N), dtype=np.int64).reshape(N, len(cyclotomic_poly(N)) - 1)


def degree(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


class CyclotomicInt:
    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != degree(N):
            raise ValueError(f"need {degree(N)} coefficients for N={N}")
        self.N = int(N)
        self.coeffs = coeffs

    @classmethod
    def from_exponent_counts(cls, N: int, counts) -> "CyclotomicInt":
        """``sum_k counts[k] * zeta_N^k``; exponents are taken mod N."""
        folded = [0] * N
        for k, c in enumerate(counts):
            folded[k % N] += int(c)
        rows = _reduction_rows(N)
        d = degree(N)
        out = [0] * d
        for k, c in enumerate(folded):
            if c:
                for j, r in enumerate(rows[k]):
                    if r:
                        out[j] += c * r
        return cls(N, out)

    @classmethod
    def root(cls, N: int, k: int = 1) -> "CyclotomicInt":
        counts = [0] * N
        counts[k % N] = 1
        return cls.from_exponent_counts(N, counts)

    @classmethod
    def from_int(cls, N: int, v: int) -> "CyclotomicInt":
        return cls.from_exponent_counts(N, [v] + [0] * (N - 1))

    @classmethod
    def zero(cls, N: int) -> "CyclotomicInt":
        return cls(N, [0] * degree(N))

    def lift(self, M: int) -> "CyclotomicInt":
        """Same number viewed in Z[zeta_M], M a multiple of N."""
        if M % self.N:
            raise ValueError(f"{self.N} does not divide {M}")
        step = M // self.N
        counts = [0] * M
        for j, c in enumerate(self.coeffs):
            counts[j * step] += c
        return CyclotomicInt.from_exponent_counts(M, counts)

    def _common(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.N, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented, None
        if other.N == self.N:
            return self, other
        M = math.lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return a
        return CyclotomicInt(a.N, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.N, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return a
        return CyclotomicInt(a.N, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return a
        counts = [0] * a.N
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        counts[(i + j) % a.N] += x * y
        return CyclotomicInt.from_exponent_counts(a.N, counts)

    __rmul__ = __mul__

    def conj(self) -> "CyclotomicInt":
        """Complex conjugation, the Galois action zeta -> zeta^{-1}."""
        counts = [0] * self.N
        for j, c in enumerate(self.coeffs):
            counts[-j % self.N] += c
        return CyclotomicInt.from_exponent_counts(self.N, counts)

    def norm(self) -> "CyclotomicInt":
        return self * self.conj()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self):
        """Exact value as a Fraction, or None when not rational."""
        if not self.is_rational():
            return None
        return Fraction(self.coeffs[0] if self.coeffs else 0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(c * z ** j for j, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and (self.coeffs[0] if self.coeffs else 0) == other
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.N, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*z^{j}" if j else str(c) for j, c in enumerate(self.coeffs) if c]
        return f"CyclotomicInt(N={self.N}: {' + '.join(terms) or '0'})"


def cyclo_norm(z: CyclotomicInt) -> CyclotomicInt:
    return z.norm()


def cyclo_as_rational(z: CyclotomicInt):
    return z.as_rational()


def norms_from_counts(N: int, counts: np.ndarray) -> list:
    """|sum_k c_k zeta_N^k|^2 for each row of an integer count matrix.

    Returns a list of Fractions, with None for rows whose squared modulus is
    irrational. Exact: the autocorrelation and reduction are integer ops.
    """
    counts = np.asarray(counts, dtype=np.int64)
    R = reduction_matrix(N)
    if N == 1:
        return [Fraction(int(c[0]) ** 2) for c in counts]
    auto = np.zeros_like(counts)
    for d in range(N):
        auto[:, d] = (counts * np.roll(counts, -d, axis=1)).sum(axis=1)
    red = auto @ R
    out = []
    for row in red:
        out.append(Fraction(int(row[0])) if not row[1:].any() else None)
    return out
