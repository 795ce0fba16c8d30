"""Pruned depth-first search for formally (self) dual sets in small groups.

Sets are grown in increasing index order. With translation canonicalisation
every candidate contains the identity (index 0), which loses nothing since
formal duality is translation invariant.

Pruning for a partial set A of a target set S with |S| = k and r elements
still missing, at every g (self dual case, |chi_g(S)|^2 = k nu_S(g)):

* nu_S(g) >= nu_A(g) and |chi_g(S)| <= |chi_g(A)| + r, so
  k nu_A(g) <= (|chi_g(A)| + r)^2;
* nu_S(g) <= nu_A(g) + 2r and |chi_g(S)| >= |chi_g(A)| - r, so
  k (nu_A(g) + 2r) >= max(0, |chi_g(A)| - r)^2.

Both are necessary conditions, so pruning never drops a hit. For exponent 2
the character values are +-1 and the test runs on integers; otherwise on
floats with a small slack. Every hit is re-verified exactly.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .duality import (SetInGroup, char_sum_norms, is_formally_dual_pair, is_formally_self_dual,
                      is_primitive)
from .errors import CapacityError, DomainError
from .groups import Group
from .pairing import Pairing, enumerate_pairings, pairing_is_nondegenerate

log = logging.getLogger(__name__)

DEFAULT_GROUP_BOUND = 64
EXHAUSTIVE_BOUND = 36
PAIRING_EXHAUSTION_BOUND = 16
_SLACK = 1e-7

CANON_MODES = ("translation", "classes", "none")


@dataclass
class SearchSpec:
    group: Group
    k: int
    pairing: Optional[Pairing] = None   # None together with all_pairings=True
    all_pairings: bool = False
    canonical: str = "translation"
    prune: bool = True
    budget_nodes: Optional[int] = None
    seed_prefix: tuple = ()
    threads: int = 1
    group_bound: int = DEFAULT_GROUP_BOUND

    def __post_init__(self):
        G = self.group
        if G.order > self.group_bound:
            raise CapacityError(f"|G| = {G.order} exceeds the search bound {self.group_bound}")
        if self.k < 1 or self.k > G.order:
            raise DomainError("set size out of range")
        if self.canonical not in CANON_MODES:
            raise DomainError(f"canonical must be one of {CANON_MODES}")
        if self.budget_nodes is not None and self.budget_nodes <= 0:
            raise DomainError("budget must be positive")
        if self.threads < 1:
            raise DomainError("threads must be >= 1")
        if self.pairing is None and not self.all_pairings:
            raise DomainError("give a pairing or ask for all pairings")
        if self.all_pairings and G.order > PAIRING_EXHAUSTION_BOUND:
            raise CapacityError(f"pairing exhaustion is limited to |G| <= {PAIRING_EXHAUSTION_BOUND}")
        if self.pairing is not None and self.pairing.group != G:
            raise DomainError("pairing lives on a different group")
        self.seed_prefix = tuple(G.check(a) for a in self.seed_prefix)

    def pairings(self) -> list:
        if self.all_pairings:
            return list(enumerate_pairings(self.group))
        if not pairing_is_nondegenerate(self.pairing):
            raise DomainError("pairing is degenerate")
        return [self.pairing]


@dataclass
class SearchHit:
    pairing: Pairing
    set: SetInGroup
    primitive: bool
    reason: str
    dual_set: Optional[SetInGroup] = None

    def to_json(self):
        d = {"pairing": self.pairing.to_json(), "set": self.set.to_json()}
        if self.dual_set is not None:
            d["dual_set"] = self.dual_set.to_json()
        d["primitive"] = self.primitive
        d["non_primitive_reason"] = self.reason
        return d


@dataclass
class SearchResult:
    hits: list = field(default_factory=list)
    partial: bool = False
    nodes: int = 0

    def to_json(self):
        return {"partial": self.partial, "nodes": self.nodes,
                "hits": [h.to_json() for h in self.hits]}


# --- core DFS --------------------------------------------------------------

class _Tables:
    def __init__(self, P: Pairing):
        G = P.group
        self.G = G
        self.order = G.order
        E = P.exponent_matrix(np.arange(G.order), np.arange(G.order))
        self.integer = P.N <= 2
        if self.integer:
            self.chi = (1 - 2 * E).astype(np.int64)
        else:
            ang = 2 * np.pi * E / P.N
            self.chi = np.cos(ang) + 1j * np.sin(ang)
        if G.rank == 0:
            self.sub = np.zeros((1, 1), dtype=np.int64)
        else:
            c = G.coords
            diff = (c[:, None, :] - c[None, :, :]) % np.array(G.moduli, dtype=np.int64)
            self.sub = G.to_index(diff.reshape(-1, G.rank)).reshape(G.order, G.order)


def _add_element(tab: _Tables, members: list, x: int, s, nu):
    s = s + tab.chi[:, x]
    nu = nu.copy()
    if members:
        m = np.array(members, dtype=np.int64)
        np.add.at(nu, tab.sub[x, m], 1)
        np.add.at(nu, tab.sub[m, x], 1)
    nu[0] += 1
    return s, nu


def _feasible(tab: _Tables, r: int, s, nu, k: int) -> bool:
    """The two necessary conditions from the module docstring."""
    if tab.integer:
        a = np.abs(s)
        up = (a + r) ** 2
        lo = np.maximum(0, a - r) ** 2
        return bool(np.all(k * nu <= up) and np.all(k * (nu + 2 * r) >= lo))
    a = np.abs(s)
    up = (a + r) ** 2
    lo = np.maximum(0.0, a - r) ** 2
    return bool(np.all(k * nu <= up + _SLACK) and np.all(k * (nu + 2 * r) >= lo - _SLACK))


def _dfs(tab: _Tables, k: int, prefix: list, start: int, prune: bool,
         budget: Optional[int]) -> tuple:
    """All k-sets extending ``prefix`` with further indices >= start, in lexicographic order.

    Returns (candidate index tuples, nodes used, exhausted budget?).
    """
    s = np.zeros(tab.order, dtype=tab.chi.dtype)
    nu = np.zeros(tab.order, dtype=np.int64)
    members = []
    for x in prefix:
        s, nu = _add_element(tab, members, x, s, nu)
        members.append(x)
    out = []
    nodes = 0
    stop = False

    def rec(members, s, nu, start):
        nonlocal nodes, stop
        if stop:
            return
        if len(members) == k:
            out.append(tuple(members))
            return
        r_after = k - len(members) - 1
        for x in range(start, tab.order - r_after):
            if budget is not None and nodes >= budget:
                stop = True
                return
            nodes += 1
            s2, nu2 = _add_element(tab, members, x, s, nu)
            if prune and not _feasible(tab, r_after, s2, nu2, k):
                continue
            rec(members + [x], s2, nu2, x + 1)

    if len(prefix) > k:
        return [], 0, False
    if prune and prefix and not _feasible(tab, k - len(prefix), s, nu, k):
        return [], 0, False
    rec(members, s, nu, start)
    return out, nodes, stop


def _worker(args):
    P, k, prefix, start, prune, budget = args
    tab = _Tables(P)
    return _dfs(tab, k, list(prefix), start, prune, budget)


def _candidates(P: Pairing, spec: SearchSpec) -> tuple:
    G = spec.group
    seeds = sorted({G.index(a) for a in spec.seed_prefix})
    if spec.canonical in ("translation", "classes") and (not seeds or seeds[0] != 0):
        seeds = sorted(set(seeds) | {0})
    start = seeds[-1] + 1 if seeds else 0
    if spec.threads == 1 or len(seeds) >= spec.k:
        return _dfs(_Tables(P), spec.k, seeds, start, spec.prune, spec.budget_nodes)
    # partition by the next element after the prefix
    jobs = [(P, spec.k, seeds + [x], x + 1, spec.prune, spec.budget_nodes)
            for x in range(start, G.order)]
    out, nodes, partial = [], 0, False
    with ProcessPoolExecutor(max_workers=spec.threads) as ex:
        for res, n, stop in ex.map(_worker, jobs):
            out.extend(res)
            nodes += n + 1
            partial |= stop
    return out, nodes, partial


def _translation_class_rep(G: Group, idx: tuple) -> tuple:
    arr = np.array(idx, dtype=np.int64)
    best = None
    for s in arr:
        t = tuple(sorted(int(v) for v in G.sub_idx(arr, np.full(len(arr), s))))
        if best is None or t < best:
            best = t
    return best


def search_fsd(spec: SearchSpec) -> SearchResult:
    """Formally self dual k-sets, each exactly verified and tagged for primitivity."""
    G = spec.group
    if spec.k * spec.k != G.order:
        raise DomainError("self dual sets need k^2 = |G|")
    result = SearchResult()
    for P in spec.pairings():
        cands, nodes, partial = _candidates(P, spec)
        result.nodes += nodes
        result.partial |= partial
        seen = set()
        for idx in cands:
            if spec.canonical == "classes":
                rep = _translation_class_rep(G, idx)
                if rep in seen or rep != idx:
                    continue
                seen.add(rep)
            S = SetInGroup.from_indices(G, idx)
            if not is_formally_self_dual(P, S).verdict:
                continue
            prim, reason = is_primitive(S)
            result.hits.append(SearchHit(P, S, prim, reason))
    if result.partial:
        log.info("search stopped at the node budget; hits are partial")
    return result


def _target_nu(P: Pairing, S_idx: tuple, size_T: int) -> Optional[np.ndarray]:
    """nu_T forced by S: nu_T(g) = |T| |chi_g(S)|^2 / |S|^2, or None if not integral."""
    S = SetInGroup.from_indices(P.group, S_idx)
    norms = char_sum_norms(P, S)
    out = np.zeros(P.group.order, dtype=np.int64)
    k2 = len(S_idx) ** 2
    for g, v in enumerate(norms):
        if v is None:
            return None
        t = v * size_T / k2
        if t.denominator != 1:
            return None
        out[g] = int(t)
    return out


def _dfs_exact_nu(tab: _Tables, target: np.ndarray, k: int, budget: Optional[int]) -> tuple:
    """Sets containing 0 whose nu equals ``target`` (grow while nu <= target)."""
    out = []
    nodes = 0
    stop = False

    def rec(members, nu, start):
        nonlocal nodes, stop
        if stop:
            return
        if len(members) == k:
            if np.array_equal(nu, target):
                out.append(tuple(members))
            return
        r_after = k - len(members) - 1
        for x in range(start, tab.order - r_after):
            if budget is not None and nodes >= budget:
                stop = True
                return
            nodes += 1
            nu2 = nu.copy()
            m = np.array(members, dtype=np.int64)
            np.add.at(nu2, tab.sub[x, m], 1)
            np.add.at(nu2, tab.sub[m, x], 1)
            nu2[0] += 1
            if np.any(nu2 > target):
                continue
            rec(members + [x], nu2, x + 1)

    nu0 = np.zeros(tab.order, dtype=np.int64)
    nu0[0] = 1
    rec([0], nu0, 1)
    return out, nodes, stop


def search_fd_pairs(spec: SearchSpec) -> SearchResult:
    """Formally dual pairs (S, T) with |S| = k and |T| = |G|/k, both containing 0.

    |S| |T| = |G| follows from the duality condition at the identity summed
    over G, so k must divide |G|. S ranges over all k-sets containing 0, T is
    then pinned down by its weight enumerator.
    """
    G = spec.group
    if G.order % spec.k:
        raise DomainError("formally dual pairs need |S| |T| = |G|")
    size_T = G.order // spec.k
    result = SearchResult()
    budget = spec.budget_nodes
    for P in spec.pairings():
        tab = _Tables(P)
        seeds = sorted({G.index(a) for a in spec.seed_prefix} | {0})
        S_cands, nodes, partial = _dfs(tab, spec.k, seeds, seeds[-1] + 1, False, budget)
        result.nodes += nodes
        result.partial |= partial
        for s_idx in S_cands:
            target = _target_nu(P, s_idx, size_T)
            if target is None or target[0] != size_T:
                continue
            T_cands, n2, p2 = _dfs_exact_nu(tab, target, size_T, budget)
            result.nodes += n2
            result.partial |= p2
            S = SetInGroup.from_indices(G, s_idx)
            for t_idx in T_cands:
                T = SetInGroup.from_indices(G, t_idx)
                if is_formally_dual_pair(P, S, T).verdict:
                    prim, reason = is_primitive(S)
                    result.hits.append(SearchHit(P, S, prim, reason, dual_set=T))
    return result


def brute_force_fsd(P: Pairing, k: int, containing_identity: bool = True) -> list:
    """Oracle: every k-subset checked exactly (optionally only those containing 0)."""
    G = P.group
    out = []
    if containing_identity:
        pool = itertools.combinations(range(1, G.order), k - 1)
        combos = ((0,) + c for c in pool)
    else:
        combos = itertools.combinations(range(G.order), k)
    for idx in combos:
        S = SetInGroup.from_indices(G, idx)
        if is_formally_self_dual(P, S).verdict:
            out.append(S)
    return out
