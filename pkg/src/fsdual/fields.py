"""Small finite fields F_{p^m} (tabulated) and F_{2^n} (log tables).

F_{p^m} elements are ints whose base-p digits d_0, d_1, ... are the
coefficients of 1, x, x^2, ... in the polynomial basis. The matching group
coordinates are the digit tuple (d_0, ..., d_{m-1}).

F_{2^n} elements are ints whose bits are polynomial coefficients.
"""
from __future__ import annotations

import itertools
import math
from functools import cached_property

import numpy as np

from .errors import CapacityError, DomainError

# Primitive polynomials, bit i = coefficient of x^i.
DEFAULT_BINARY_POLYS = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,                  # x^3 + x + 1
    4: 0b10011,                 # x^4 + x + 1
    5: 0b100101,                # x^5 + x^2 + 1
    6: 0b1000011,               # x^6 + x + 1
    7: 0b10000011,              # x^7 + x + 1
    8: 0b100011101,             # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,            # x^9 + x^4 + 1
    10: 0b10000001001,          # x^10 + x^3 + 1
    11: 0b100000000101,         # x^11 + x^2 + 1
    12: 0b1000001010011,        # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,       # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,      # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,     # x^15 + x + 1
    16: 0b10001000000001011,    # x^16 + x^12 + x^3 + x + 1
    17: 0b100000000000001001,   # x^17 + x^3 + 1
    18: 0b1000000000010000001,  # x^18 + x^7 + 1
    19: 0b10000000000000100111,  # x^19 + x^5 + x^2 + x + 1
    20: 0b100000000000000001001,  # x^20 + x^3 + 1
}

BINARY_FIELD_MAX_N = 20


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _prime_factors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return sorted(set(out))


# --- odd characteristic -------------------------------------------------------

def _poly_mod(a: list, f: list, p: int) -> list:
    """Remainder of a modulo monic f over F_p (lowest degree first)."""
    a = [c % p for c in a]
    df = len(f) - 1
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k]
        if c:
            for j in range(df + 1):
                a[k - df + j] = (a[k - df + j] - c * f[j]) % p
    return (a[:df] + [0] * df)[:df]


def _has_factor_of_degree(f: list, d: int, p: int) -> bool:
    for tail in itertools.product(range(p), repeat=d):
        g = list(tail) + [1]
        if not any(_poly_mod(f, g, p)):
            return True
    return False


def is_irreducible(f: list, p: int) -> bool:
    m = len(f) - 1
    return all(not _has_factor_of_degree(f, d, p) for d in range(1, m // 2 + 1))


def first_irreducible(p: int, m: int) -> tuple:
    """Lexicographically first monic irreducible of degree m.

    Order: compare coefficients from x^{m-1} down to x^0.
    """
    for tail in itertools.product(range(p), repeat=m):
        f = list(reversed(tail)) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise DomainError("no irreducible polynomial found")


class OddField:
    """F_{p^m} for odd prime p, fully tabulated."""

    MAX_ORDER = 3 ** 7

    def __init__(self, p: int, m: int = 1, poly=None):
        if not _is_prime(p) or p == 2:
            raise DomainError(f"{p} is not an odd prime")
        if m < 1:
            raise DomainError("degree must be positive")
        self.p, self.m = p, m
        self.q = p ** m
        if self.q > self.MAX_ORDER:
            raise CapacityError(f"field of order {self.q} exceeds table bound")
        self.poly = tuple(poly) if poly is not None else first_irreducible(p, m)
        if len(self.poly) != m + 1 or self.poly[-1] != 1 or not is_irreducible(list(self.poly), p):
            raise DomainError(f"{self.poly} is not monic irreducible of degree {m}")

    def digits(self, x: int) -> tuple:
        return tuple((x // self.p ** j) % self.p for j in range(self.m))

    def from_digits(self, d) -> int:
        return sum((int(c) % self.p) * self.p ** j for j, c in enumerate(d))

    # group coordinates coincide with digits
    to_coords = digits
    from_coords = from_digits

    @cached_property
    def add_table(self) -> np.ndarray:
        D = np.array([self.digits(x) for x in range(self.q)], dtype=np.int64).reshape(self.q, self.m)
        w = self.p ** np.arange(self.m)
        return (((D[:, None, :] + D[None, :, :]) % self.p) @ w).astype(np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        T = np.zeros((self.q, self.q), dtype=np.int64)
        f = list(self.poly)
        for a in range(self.q):
            da = self.digits(a)
            for b in range(a, self.q):
                db = self.digits(b)
                prod = [0] * (2 * self.m - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            prod[i + j] += x * y
                r = self.from_digits(_poly_mod(prod, f, self.p))
                T[a, b] = T[b, a] = r
        return T

    def add(self, a, b):
        return int(self.add_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return self.from_digits([-c for c in self.digits(a)])

    def scalar(self, c: int) -> int:
        """The prime-field element c."""
        return c % self.p

    def pow(self, a, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    @cached_property
    def trace_table(self) -> np.ndarray:
        out = np.zeros(self.q, dtype=np.int64)
        for x in range(self.q):
            acc, y = 0, x
            for _ in range(self.m):
                acc = self.add(acc, y)
                y = self.pow(y, self.p)
            d = self.digits(acc)
            if any(d[1:]):
                raise ArithmeticError("trace left the prime field")
            out[x] = d[0]
        return out

    def trace(self, x) -> int:
        return int(self.trace_table[x])

    @cached_property
    def squares(self) -> frozenset:
        return frozenset(self.mul(x, x) for x in range(1, self.q))

    def eta(self, a) -> int:
        """Quadratic character: 1 on nonzero squares, -1 on nonsquares, 0 at 0."""
        if a == 0:
            return 0
        return 1 if a in self.squares else -1

    def trace_form(self) -> tuple:
        """Matrix Tr(x^j x^k) of the trace bilinear form in the polynomial basis."""
        basis = [self.p ** j for j in range(self.m)]
        return tuple(tuple(self.trace(self.mul(a, b)) for b in basis) for a in basis)


# --- characteristic two -------------------------------------------------------

def _clmul_mod(a: int, b: int, poly: int, n: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> n & 1:
            a ^= poly
    return r


def parse_field_spec(text: str) -> "BinaryField":
    """``"n=3,poly=0b1011"`` (poly optional)."""
    kv = {}
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        k, _, v = part.partition("=")
        kv[k] = v
    if "n" not in kv:
        raise DomainError(f"field spec {text!r} lacks n")
    poly = int(kv["poly"], 0) if "poly" in kv else None
    return BinaryField(int(kv["n"]), poly)


class BinaryField:
    """F_{2^n} with log/antilog tables relative to a generator."""

    def __init__(self, n: int, poly: int = None):
        if not 1 <= n <= BINARY_FIELD_MAX_N:
            raise CapacityError(f"n must be in 1..{BINARY_FIELD_MAX_N}")
        self.n = n
        self.size = 1 << n
        self.poly = DEFAULT_BINARY_POLYS[n] if poly is None else int(poly)
        if self.poly >> n != 1:
            raise DomainError(f"poly {bin(self.poly)} does not have degree {n}")
        self._build_tables()

    def _build_tables(self):
        q1 = self.size - 1
        primes = _prime_factors(q1) if q1 > 1 else []
        gen = None
        for g in range(1, self.size):
            if q1 == 1:
                gen = 1
                break
            if all(self._slow_pow(g, q1 // r) != 1 for r in primes) and self._slow_pow(g, q1) == 1:
                gen = g
                break
        if gen is None:
            raise DomainError(f"{bin(self.poly)} is not irreducible over F_2")
        self.generator = gen
        exp = np.zeros(2 * q1 + 1, dtype=np.int64)
        log = np.full(self.size, -1, dtype=np.int64)
        x = 1
        for k in range(q1):
            exp[k] = x
            log[x] = k
            x = _clmul_mod(x, gen, self.poly, self.n)
        exp[q1:2 * q1] = exp[:q1]
        self.exp_table = exp
        self.log_table = log

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = _clmul_mod(r, a, self.poly, self.n)
            a = _clmul_mod(a, a, self.poly, self.n)
            e >>= 1
        return r

    def __repr__(self):
        return f"BinaryField(n={self.n}, poly={bin(self.poly)})"

    def spec(self) -> str:
        return f"n={self.n},poly={bin(self.poly)}"

    def elements(self) -> range:
        return range(self.size)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[self.log_table[a] + self.log_table[b]])

    def mul_vec(self, b: int, xs: np.ndarray) -> np.ndarray:
        """b * x for an integer array xs."""
        xs = np.asarray(xs, dtype=np.int64)
        if b == 0:
            return np.zeros_like(xs)
        out = self.exp_table[(self.log_table[xs] + self.log_table[b]) % (self.size - 1)]
        return np.where(xs == 0, 0, out)

    def mul_arrays(self, xs, ys) -> np.ndarray:
        """Elementwise products."""
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        out = self.exp_table[self.log_table[xs] + self.log_table[ys]]
        return np.where((xs == 0) | (ys == 0), 0, out)

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.size - 1)])

    def pow_vec(self, xs, e: int) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if e == 0:
            return np.ones_like(xs)
        out = self.exp_table[(self.log_table[xs] * e) % (self.size - 1)]
        return np.where(xs == 0, 0, out)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.exp_table[(-int(self.log_table[a])) % (self.size - 1)])

    def frob(self, a: int, i: int) -> int:
        """a^(2^i), i taken mod n."""
        return self.pow(a, 1 << (i % self.n))

    @cached_property
    def trace_table(self) -> np.ndarray:
        xs = np.arange(self.size, dtype=np.int64)
        acc = np.zeros(self.size, dtype=np.int64)
        y = xs.copy()
        for _ in range(self.n):
            acc ^= y
            y = self.pow_vec(y, 2)
        if np.any(acc > 1):
            raise ArithmeticError("trace left F_2")
        return acc

    def trace(self, a: int) -> int:
        return int(self.trace_table[a])

    @cached_property
    def trace_dual_bits(self) -> np.ndarray:
        """Row a: bits u_j = Tr(a * 2^j), so that Tr(a x) = <u(a), bits(x)> mod 2."""
        out = np.zeros(self.size, dtype=np.int64)
        xs = np.arange(self.size, dtype=np.int64)
        for j in range(self.n):
            out |= self.trace_table[self.mul_vec(1 << j, xs)] << j
        return out

    def trace_form(self) -> tuple:
        basis = [1 << j for j in range(self.n)]
        return tuple(tuple(self.trace(self.mul(a, b)) for b in basis) for a in basis)
