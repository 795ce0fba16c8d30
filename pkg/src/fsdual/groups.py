"""Finite abelian groups Z_{n_1} x ... x Z_{n_m}, subgroups and quotients.

Elements are tuples of residues. Internally every element also has an
index: the mixed-radix number with the first coordinate most significant,
so index order coincides with lexicographic order of the tuples.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, DimensionError, DomainError, InvariantError
from .snf import integer_inverse, smith_normal_form

SUBGROUP_ORDER_BOUND = 4096

Element = tuple


@dataclass(frozen=True)
class Group:
    moduli: tuple

    def __post_init__(self):
        mods = tuple(int(n) for n in self.moduli)
        if any(n < 1 for n in mods):
            raise InvariantError(f"moduli must be >= 1, got {mods}")
        object.__setattr__(self, "moduli", mods)

    @classmethod
    def parse(cls, text: str) -> "Group":
        """Parse literals such as ``Z4xZ2^3`` or ``Z2xZ4xZ8``; ``1`` is trivial."""
        s = text.replace(" ", "")
        if s in ("", "1", "Z1", "{1}", "trivial"):
            return cls(())
        mods = []
        for part in re.split(r"[x*×]", s):
            m = re.fullmatch(r"Z_?\{?(\d+)\}?(?:\^\{?(\d+)\}?)?", part)
            if not m:
                raise DomainError(f"bad group literal {text!r}")
            mods.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(tuple(mods))

    def __str__(self):
        if not self.moduli:
            return "1"
        parts = []
        for n, grp in itertools.groupby(self.moduli):
            k = len(list(grp))
            parts.append(f"Z{n}" + (f"^{k}" if k > 1 else ""))
        return "x".join(parts)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @cached_property
    def exponent(self) -> int:
        return reduce(math.lcm, self.moduli, 1)

    @cached_property
    def _mods(self) -> np.ndarray:
        return np.array(self.moduli, dtype=np.int64)

    @cached_property
    def strides(self) -> np.ndarray:
        s = [1] * self.rank
        for j in range(self.rank - 2, -1, -1):
            s[j] = s[j + 1] * self.moduli[j + 1]
        return np.array(s, dtype=np.int64)

    @cached_property
    def coords(self) -> np.ndarray:
        """All elements as an ``(order, rank)`` array, in index order."""
        if self.order > 1 << 22:
            raise CapacityError(f"group of order {self.order} too large to tabulate")
        out = np.zeros((self.order, self.rank), dtype=np.int64)
        idx = np.arange(self.order, dtype=np.int64)
        for j in range(self.rank):
            out[:, j] = (idx // self.strides[j]) % self.moduli[j]
        return out

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def elements(self) -> list:
        return [tuple(int(v) for v in row) for row in self.coords]

    def check(self, a) -> Element:
        """Validate and normalise an element; raise DimensionError if foreign."""
        try:
            t = tuple(int(v) for v in a)
        except TypeError:
            t = (int(a),)
        if len(t) != self.rank:
            raise DimensionError(f"{a!r} is not an element of {self}")
        if any(not 0 <= v < n for v, n in zip(t, self.moduli)):
            raise DimensionError(f"{a!r} has unreduced coordinates for {self}")
        return t

    def reduce(self, a) -> Element:
        return tuple(int(v) % n for v, n in zip(a, self.moduli))

    def index(self, a) -> int:
        return int(sum(int(v) * int(s) for v, s in zip(a, self.strides)))

    def element(self, i: int) -> Element:
        return tuple(int(v) for v in self.coords[i])

    def add(self, a, b) -> Element:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def sub(self, a, b) -> Element:
        return tuple((x - y) % n for x, y, n in zip(a, b, self.moduli))

    def neg(self, a) -> Element:
        return tuple(-x % n for x, n in zip(a, self.moduli))

    def scale(self, k: int, a) -> Element:
        return tuple(k * x % n for x, n in zip(a, self.moduli))

    def element_order(self, a) -> int:
        return reduce(math.lcm, (n // math.gcd(n, x) for x, n in zip(a, self.moduli)), 1)

    # vectorised index arithmetic
    def to_index(self, coords: np.ndarray) -> np.ndarray:
        return (np.asarray(coords) % self._mods) @ self.strides

    def add_idx(self, i, j) -> np.ndarray:
        c = self.coords
        return self.to_index(c[np.asarray(i)] + c[np.asarray(j)])

    def sub_idx(self, i, j) -> np.ndarray:
        c = self.coords
        return self.to_index(c[np.asarray(i)] - c[np.asarray(j)])

    def neg_idx(self, i) -> np.ndarray:
        return self.to_index(-self.coords[np.asarray(i)])

    def sumset_idx(self, X, Y) -> np.ndarray:
        """Sorted unique indices of X + Y."""
        c = self.coords
        s = c[np.asarray(X)][:, None, :] + c[np.asarray(Y)][None, :, :]
        return np.unique(self.to_index(s.reshape(-1, self.rank)))


def _closure_idx(group: Group, start: np.ndarray, gens: Iterable[int]) -> np.ndarray:
    cur = np.unique(np.asarray(start, dtype=np.int64))
    for g in gens:
        g = int(g)
        if np.isin(g, cur):
            continue
        mult = [0]
        while True:
            nxt = int(group.add_idx(mult[-1], g))
            if nxt == 0:
                break
            mult.append(nxt)
        cur = group.sumset_idx(cur, np.array(mult))
    return cur


@dataclass(frozen=True)
class Subgroup:
    group: Group
    indices: tuple = field(compare=True)
    generators: tuple = field(default=(), compare=False)

    @classmethod
    def generated_by(cls, group: Group, gens: Iterable) -> "Subgroup":
        gens = [group.check(g) for g in gens]
        idx = _closure_idx(group, np.array([0]), [group.index(g) for g in gens])
        return cls(group, tuple(int(i) for i in idx), tuple(gens))

    @classmethod
    def from_indices(cls, group: Group, indices, check: bool = True) -> "Subgroup":
        """Build from an explicit member list; a small generating set is derived."""
        idx = np.unique(np.asarray(list(indices), dtype=np.int64))
        gens = []
        cur = np.array([0], dtype=np.int64)
        for i in idx:
            if not np.isin(i, cur):
                gens.append(int(i))
                cur = _closure_idx(group, cur, [int(i)])
        if check and (len(cur) != len(idx) or not np.array_equal(cur, idx)):
            raise InvariantError("member list is not closed under the group law")
        return cls(group, tuple(int(i) for i in idx), tuple(group.element(g) for g in gens))

    @classmethod
    def trivial(cls, group: Group) -> "Subgroup":
        return cls(group, (0,), ())

    @classmethod
    def whole(cls, group: Group) -> "Subgroup":
        gens = tuple(tuple(int(j == k) for j in range(group.rank))
                     for k in range(group.rank) if group.moduli[k] > 1)
        return cls(group, tuple(range(group.order)), gens)

    @property
    def order(self) -> int:
        return len(self.indices)

    @cached_property
    def index_array(self) -> np.ndarray:
        return np.array(self.indices, dtype=np.int64)

    @cached_property
    def _member_set(self) -> frozenset:
        return frozenset(self.indices)

    def elements(self) -> list:
        return [self.group.element(i) for i in self.indices]

    def __contains__(self, a) -> bool:
        return self.group.index(self.group.check(a)) in self._member_set

    def contains_index(self, i: int) -> bool:
        return int(i) in self._member_set

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self._member_set <= other._member_set

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.group.order

    def __repr__(self):
        gens = ",".join("(" + ",".join(map(str, g)) + ")" for g in self.generators)
        return f"Subgroup(<{gens}> in {self.group}, order {self.order})"


def enumerate_subgroups(group: Group, bound: int = SUBGROUP_ORDER_BOUND) -> list:
    """All subgroups, trivial first, sorted by (order, member list).

    Breadth-first closure: every subgroup is a join of cyclic subgroups, so
    joining each found subgroup with each cyclic subgroup reaches all of them.
    """
    if group.order > bound:
        raise CapacityError(f"|G| = {group.order} exceeds subgroup bound {bound}")
    cyclic = {}
    for i in range(group.order):
        c = _closure_idx(group, np.array([0]), [i])
        cyclic.setdefault(tuple(int(x) for x in c), i)
    found = {(0,): Subgroup.trivial(group)}
    frontier = [(0,)]
    while frontier:
        nxt = []
        for key in frontier:
            H = found[key]
            for ckey, g in cyclic.items():
                if H._member_set.issuperset(ckey):
                    continue
                new = _closure_idx(group, H.index_array, [g])
                nk = tuple(int(x) for x in new)
                if nk not in found:
                    gens = H.generators + (group.element(g),)
                    found[nk] = Subgroup(group, nk, gens)
                    nxt.append(nk)
        frontier = nxt
    return sorted(found.values(), key=lambda H: (H.order, H.indices))


def smallest_containing_coset(group: Group, S: Sequence) -> tuple:
    """Return ``(H, s0)``: the subgroup generated by ``S - s0`` and ``s0 = S[0]``."""
    S = [group.check(s) for s in S]
    if not S:
        raise DomainError("empty set has no containing coset")
    s0 = min(S)
    H = Subgroup.generated_by(group, [group.sub(s, s0) for s in S if s != s0])
    return H, s0


def _lattice_basis(group: Group, gens) -> tuple:
    """Basis of the preimage lattice in Z^m of the subgroup generated by gens.

    Returns ``(B, Binv_num, d, U)`` where the basis matrix is
    ``B = U^{-1} diag(d)``.
    """
    m = group.rank
    cols = [list(g) for g in gens] + [[group.moduli[k] * int(j == k) for j in range(m)]
                                      for k in range(m)]
    A = [[c[i] for c in cols] for i in range(m)]
    d, U = smith_normal_form(A)
    Uinv = integer_inverse(U)
    B = [[Uinv[i][j] * d[j] for j in range(m)] for i in range(m)]
    return B, d, U


@dataclass(frozen=True)
class Quotient:
    """``H/K`` presented as an invariant-factor group with explicit maps."""

    source: Subgroup
    kernel: Subgroup
    group: Group
    _d: tuple
    _U: tuple
    _U2: tuple
    _keep: tuple
    _lifts: tuple

    def project(self, a) -> Element:
        a = self.source.group.check(a)
        if a not in self.source:
            raise DomainError(f"{a} is not in the subgroup being quotiented")
        y = [sum(u * x for u, x in zip(row, a)) for row in self._U]
        if any(v % dk for v, dk in zip(y, self._d)):
            raise InvariantError("lattice coordinates not integral")
        y = [v // dk for v, dk in zip(y, self._d)]
        z = [sum(u * x for u, x in zip(row, y)) for row in self._U2]
        return tuple(z[k] % n for k, n in zip(self._keep, self.group.moduli))

    def lift(self, q) -> Element:
        """Some preimage in the source subgroup of a quotient element."""
        q = self.group.check(q)
        G = self.source.group
        out = G.identity
        for coeff, v in zip(q, self._lifts):
            out = G.add(out, G.scale(coeff, v))
        return out

    @property
    def basis_lifts(self) -> tuple:
        return self._lifts


def quotient_group(H: Subgroup, K: Subgroup) -> Quotient:
    """Quotient ``H/K`` in invariant-factor form via Smith normal form."""
    if H.group != K.group:
        raise DomainError("subgroups live in different groups")
    if not K.is_subgroup_of(H):
        raise DomainError("K is not contained in H")
    G = H.group
    m = G.rank
    BH, d, U = _lattice_basis(G, H.generators)
    # K-lattice generators expressed in the H-basis: diag(1/d) U x
    kcols = [list(g) for g in K.generators] + [[G.moduli[k] * int(j == k) for j in range(m)]
                                               for k in range(m)]
    C = []
    for i in range(m):
        row = []
        for col in kcols:
            v = sum(U[i][j] * col[j] for j in range(m))
            if v % d[i]:
                raise InvariantError("K-lattice is not inside H-lattice")
            row.append(v // d[i])
        C.append(row)
    d2, U2 = smith_normal_form(C)
    keep = tuple(k for k in range(m) if d2[k] != 1)
    Q = Group(tuple(d2[k] for k in keep))
    if Q.order * K.order != H.order:
        raise InvariantError("quotient order mismatch")
    U2inv = integer_inverse(U2)
    lifts = []
    for k in keep:
        y = [U2inv[i][k] for i in range(m)]
        x = [sum(BH[i][j] * y[j] for j in range(m)) for i in range(m)]
        lifts.append(G.reduce(x))
    return Quotient(H, K, Q, tuple(d), tuple(map(tuple, U)), tuple(map(tuple, U2)),
                    keep, tuple(lifts))
