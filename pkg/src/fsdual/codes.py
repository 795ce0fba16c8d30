"""Codes as explicit word lists: enumerators, MacWilliams, Gray map, Z4 codes."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .duality import SetInGroup, char_sum_norms, is_formally_dual_pair, nu_array
from .errors import DomainError
from .fields import BinaryField, _is_prime
from .groups import Group
from .pairing import Pairing, standard_pairing

MAX_CODE_SIZE = 1 << 16


@dataclass(frozen=True)
class Alphabet:
    """``kind`` is "prime" (F_p), "z4" (Z_4) or "binary" (F_{2^k}, k >= 2)."""

    kind: str
    q: int

    def __post_init__(self):
        if self.kind == "prime" and not _is_prime(self.q):
            raise DomainError(f"F_{self.q}: not a prime")
        if self.kind == "z4" and self.q != 4:
            raise DomainError("Z4 alphabet has q = 4")
        if self.kind == "binary" and (self.q < 4 or self.q & (self.q - 1)):
            raise DomainError("F_{2^k} alphabet needs q = 2^k, k >= 2")
        if self.kind not in ("prime", "z4", "binary"):
            raise DomainError(f"unknown alphabet kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        """'F3', 'Z4', 'F2^3' or 'F8'."""
        t = text.strip().upper()
        if t == "Z4":
            return cls("z4", 4)
        if t.startswith("F"):
            body = t[1:]
            if "^" in body:
                p, k = (int(v) for v in body.split("^"))
                q = p ** k
            else:
                q = int(body)
            if _is_prime(q):
                return cls("prime", q)
            return cls("binary", q)
        raise DomainError(f"cannot parse alphabet {text!r}")

    def __str__(self):
        return "Z4" if self.kind == "z4" else f"F{self.q}"

    @property
    def k(self) -> int:
        return self.q.bit_length() - 1


@dataclass(frozen=True)
class CodeSet:
    alphabet: Alphabet
    n: int
    words: tuple

    def __post_init__(self):
        q = self.alphabet.q
        ws = []
        seen = set()
        for w in self.words:
            w = tuple(int(v) % q for v in w)
            if len(w) != self.n:
                raise DomainError(f"word {w} does not have length {self.n}")
            if w not in seen:
                seen.add(w)
                ws.append(w)
        if len(ws) > MAX_CODE_SIZE:
            raise DomainError("code too large")
        object.__setattr__(self, "words", tuple(ws))

    @classmethod
    def of(cls, alphabet, words) -> "CodeSet":
        if isinstance(alphabet, str):
            alphabet = Alphabet.parse(alphabet)
        words = [tuple(w) for w in words]
        if not words:
            raise DomainError("empty code")
        return cls(alphabet, len(words[0]), tuple(words))

    def __len__(self):
        return len(self.words)

    @property
    def q(self) -> int:
        return self.alphabet.q

    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64).reshape(len(self.words), self.n)

    def as_set(self) -> SetInGroup:
        """The words as a subset of (F_q^n, +); F_{2^k} symbols are expanded to k bits."""
        G = code_group(self.alphabet, self.n)
        return SetInGroup.of(G, [_expand(self.alphabet, w) for w in self.words])


def _expand(alphabet: Alphabet, w) -> tuple:
    if alphabet.kind != "binary":
        return tuple(w)
    k = alphabet.k
    return tuple((s >> j) & 1 for s in w for j in range(k))


def code_group(alphabet: Alphabet, n: int) -> Group:
    if alphabet.kind == "binary":
        return Group((2,) * (n * alphabet.k))
    return Group((alphabet.q,) * n)


def canonical_pairing(alphabet: Alphabet, n: int) -> Pairing:
    """x -> chi_x with chi_x(c) = zeta_p^Tr(x . c)."""
    G = code_group(alphabet, n)
    if alphabet.kind == "z4":
        raise DomainError("character sums over Z4 codes are not the F_q construction")
    if alphabet.kind == "prime":
        return standard_pairing(G)
    F = BinaryField(alphabet.k)
    T = F.trace_form()
    k = alphabet.k
    B = [[0] * (n * k) for _ in range(n * k)]
    for i in range(n):
        for j in range(k):
            for l in range(k):
                B[i * k + j][i * k + l] = T[j][l]
    return Pairing(G, tuple(map(tuple, B)))


# --- enumerators -----------------------------------------------------------

def _coef_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


@dataclass(frozen=True)
class EnumeratorPoly:
    """sum_w A_w X^(n-w) Y^w."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coeffs)
        if len(c) != self.n + 1:
            raise DomainError(f"need {self.n + 1} coefficients")
        object.__setattr__(self, "coeffs", c)

    def __str__(self):
        parts = []
        for w, a in enumerate(self.coeffs):
            if a == 0:
                continue
            x = self.n - w
            mono = ("" if x == 0 else "X" if x == 1 else f"X^{x}") + \
                   ("" if w == 0 else "Y" if w == 1 else f"Y^{w}")
            mag = abs(a)
            cs = "" if mag == 1 and mono else _coef_str(mag)
            sign = "-" if a < 0 else "+"
            parts.append((sign, cs + mono))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, t in parts[1:]:
            out += f" {sign} {t}"
        return out

    def coeff_line(self) -> str:
        return " ".join(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
                        for c in self.coeffs)

    def total(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))


def weights(C: CodeSet) -> np.ndarray:
    return (C.array() != 0).sum(axis=1)


def weight_enumerator_poly(C: CodeSet) -> EnumeratorPoly:
    counts = np.bincount(weights(C), minlength=C.n + 1)
    return EnumeratorPoly(C.n, tuple(int(v) for v in counts))


def distance_enumerator_poly(C: CodeSet) -> EnumeratorPoly:
    A = C.array()
    counts = np.zeros(C.n + 1, dtype=np.int64)
    step = max(1, (1 << 22) // max(1, len(A) * C.n))
    for s in range(0, len(A), step):
        d = (A[s:s + step, None, :] != A[None, :, :]).sum(axis=2)
        counts += np.bincount(d.ravel(), minlength=C.n + 1)
    return EnumeratorPoly(C.n, tuple(Fraction(int(v), len(C)) for v in counts))


def macwilliams_transform(E: EnumeratorPoly, q: int, size) -> EnumeratorPoly:
    """(1/size) E(X + (q-1)Y, X - Y)."""
    if q < 2:
        raise DomainError("q must be >= 2")
    size = Fraction(size)
    if size <= 0:
        raise DomainError("size must be positive")
    n = E.n
    out = [Fraction(0)] * (n + 1)
    for w, a in enumerate(E.coeffs):
        if a == 0:
            continue
        for i in range(n - w + 1):
            ci = math.comb(n - w, i) * (q - 1) ** i
            for j in range(w + 1):
                out[i + j] += a * ci * math.comb(w, j) * (-1) ** j
    return EnumeratorPoly(n, tuple(v / size for v in out))


@dataclass
class FormalDualCodes:
    weight_dual: bool
    distance_dual: bool

    @property
    def formal_dual(self) -> bool:
        return self.weight_dual and self.distance_dual

    def to_json(self):
        return {"weight_dual": self.weight_dual, "distance_dual": self.distance_dual,
                "formal_dual": self.formal_dual}


def formal_dual_codes_check(C: CodeSet, Cp: CodeSet) -> FormalDualCodes:
    if C.n != Cp.n or C.q != Cp.q:
        raise DomainError("codes differ in length or alphabet size")
    q = C.q
    w = macwilliams_transform(weight_enumerator_poly(C), q, len(C)) == weight_enumerator_poly(Cp)
    d = macwilliams_transform(distance_enumerator_poly(C), q, 1) == \
        EnumeratorPoly(C.n, tuple(len(C) * v for v in distance_enumerator_poly(Cp).coeffs))
    return FormalDualCodes(bool(w), bool(d))


# --- Z4 and the Gray map ---------------------------------------------------

GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


def gray_map(word) -> tuple:
    """Symbolwise 0->00, 1->01, 2->11, 3->10; all first bits, then all second bits."""
    pairs = [GRAY[int(s) % 4] for s in word]
    return tuple(a for a, _ in pairs) + tuple(b for _, b in pairs)


def gray_image(C: CodeSet) -> CodeSet:
    if C.alphabet.kind != "z4":
        raise DomainError("Gray map needs a Z4 code")
    return CodeSet(Alphabet("prime", 2), 2 * C.n, tuple(gray_map(w) for w in C.words))


def lee_weight(word) -> int:
    return sum(min(int(s) % 4, 4 - int(s) % 4) for s in word)


def z4_span(generators, n: int = None) -> CodeSet:
    gens = [tuple(int(v) % 4 for v in g) for g in generators]
    if not gens:
        if n is None:
            raise DomainError("need the length for an empty generator list")
        return CodeSet(Alphabet("z4", 4), n, ((0,) * n,))
    n = len(gens[0])
    words = set()
    for coefs in itertools.product(range(4), repeat=len(gens)):
        words.add(tuple(sum(c * g[i] for c, g in zip(coefs, gens)) % 4 for i in range(n)))
    return CodeSet(Alphabet("z4", 4), n, tuple(sorted(words)))


def z4_dual(C: CodeSet) -> CodeSet:
    A = C.array()
    out = []
    for x in itertools.product(range(4), repeat=C.n):
        if not np.any((A @ np.array(x)) % 4):
            out.append(x)
    return CodeSet(Alphabet("z4", 4), C.n, tuple(out))


# --- set-level connections -------------------------------------------------

def char_sum_distance_identity_check(C: CodeSet) -> bool:
    """D_C(X+(q-1)Y, X-Y) == (1/|C|) sum_x |sum_c chi_x(c)|^2 X^(n-wt x) Y^(wt x)."""
    if C.alphabet.kind == "z4":
        raise DomainError("identity is stated for F_q alphabets")
    lhs = macwilliams_transform(distance_enumerator_poly(C), C.q, 1)
    P = canonical_pairing(C.alphabet, C.n)
    S = C.as_set()
    norms = char_sum_norms(P, S)
    G = P.group
    k = C.alphabet.k if C.alphabet.kind == "binary" else 1
    rhs = [Fraction(0)] * (C.n + 1)
    for idx, v in enumerate(norms):
        if v is None:
            return False
        e = G.element(idx)
        wt = sum(1 for i in range(C.n) if any(e[i * k:(i + 1) * k]))
        rhs[wt] += v
    rhs = EnumeratorPoly(C.n, tuple(v / len(C) for v in rhs))
    return lhs == rhs


def count_zero_charsums_and_zero_nu(C: CodeSet, Cp: CodeSet) -> tuple:
    """(#x with sum_c (-1)^(x.c) = 0, #x with nu_C'(x) = 0) over F_2^n."""
    if C.q != 2 or Cp.q != 2 or C.n != Cp.n:
        raise DomainError("need binary codes of equal length")
    P = canonical_pairing(C.alphabet, C.n)
    norms = char_sum_norms(P, C.as_set())
    zero_chi = sum(1 for v in norms if v == 0)
    zero_nu = int((nu_array(Cp.as_set()) == 0).sum())
    return zero_chi, zero_nu


def no_pairing_certificate(C: CodeSet, Cp: CodeSet) -> Optional[dict]:
    """Evidence that no pairing makes (C, C') formally dual as sets, or None.

    Any pairing is a bijection g -> chi_g, so formal duality forces the number
    of vanishing character sums of C to equal the number of zeros of nu_C'.
    """
    zc, zn = count_zero_charsums_and_zero_nu(C, Cp)
    if zc == zn:
        return None
    return {"zero_char_sums": zc, "zero_nu": zn,
            "reason": "vanishing character sums and zeros of nu differ in number"}


# --- sample codes ----------------------------------------------------------

F3_EXAMPLE = (
    (0, 0, 0, 0), (0, 1, 0, 1), (0, -1, 0, 1), (1, 0, 0, -1), (1, 1, -1, 0), (1, -1, 1, 0),
    (-1, 0, 0, -1), (-1, 1, 1, 0), (-1, -1, -1, 0),
)

Z4_GENERATORS = ((2, 1, 3, 1), (1, 2, 1, 3))
Z4_DUAL_GENERATORS = ((1, 3, 1, 0), (3, 1, 0, 1))


def delta_map(x) -> tuple:
    """(x1, x2, x3, x4) -> (x3, -x4, x1, -x2)."""
    return (x[2], -x[3], x[0], -x[1])


def f3_example() -> tuple:
    """The F_3^4 code C and C' = Delta(C)."""
    C = CodeSet.of("F3", F3_EXAMPLE)
    Cp = CodeSet.of("F3", [delta_map(w) for w in F3_EXAMPLE])
    return C, Cp


def f3_example_is_dual_pair() -> bool:
    C, Cp = f3_example()
    P = canonical_pairing(C.alphabet, C.n)
    return is_formally_dual_pair(P, C.as_set(), Cp.as_set()).verdict


def quadratic_code(p: int) -> CodeSet:
    return CodeSet.of(f"F{p}", [(x, x * x % p) for x in range(p)])


# --- file format -----------------------------------------------------------

def read_code(path, alphabet: str = None) -> CodeSet:
    """One word per line, symbols separated by spaces; '# alphabet: F3' sets the alphabet."""
    words = []
    alpha = alphabet
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.lower().startswith("alphabet") and alpha is None:
                    alpha = body.split(":", 1)[1].strip() if ":" in body else body.split("=", 1)[1]
                continue
            words.append(tuple(int(s) for s in line.replace(",", " ").split()))
    if alpha is None:
        raise DomainError("alphabet not given (use a '# alphabet: F3' header)")
    return CodeSet.of(alpha, words)


def write_code(path, C: CodeSet):
    with open(path, "w") as fh:
        fh.write(f"# alphabet: {C.alphabet}\n")
        for w in C.words:
            fh.write(" ".join(str(s) for s in w) + "\n")
