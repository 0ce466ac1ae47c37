"""Modularity-flavored structure: left-modular and modular elements,
coatom criteria, semimodular and geometric tests, M-chains, sub-M-chains,
and the modernistic/comodernistic interval sweeps.

An element m is left-modular when no pair a < c has both a ^ m = c ^ m and
a v m = c v m (equivalently, m is never the short-side element of a pentagon
sublattice).  A lattice is modernistic when every interval has a left-modular
atom, comodernistic when every interval has a left-modular coatom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import NotACoatom
from .poset import Lattice


@dataclass(frozen=True)
class ModularityReport:
    """Verdict for one element, with a pentagon witness on failure.

    For a left-modularity failure the witness is the pair (a, c), a < c,
    whose meets and joins with the element coincide.  For an element that is
    left-modular but not modular it is the pair (c, b) exhibiting the
    element on the long side of a pentagon.
    """

    element: int
    is_left_modular: bool
    is_modular: bool
    witness: Optional[tuple[int, int]]


@dataclass(frozen=True)
class SubMChain:
    """Maximal chain m_0 -| ... -| m_k with each m_i left-modular in the
    interval from the chain bottom up to m_{i+1}."""

    elements: tuple[int, ...]


def left_modular_mask(L: Lattice) -> np.ndarray:
    """Boolean flag per element: left-modular in L."""
    return kernels.lm_mask(L.strict, L.meet, L.join)


def is_left_modular_direct(L: Lattice, m: int) -> bool:
    """Definition-level check: (x v m) ^ y == x v (m ^ y) for all x < y."""
    n = L.n
    for x in range(n):
        for y in np.flatnonzero(L.strict[x]):
            if L.meet[L.join[x, m], y] != L.join[x, L.meet[m, y]]:
                return False
    return True


def _a_role_witness(L: Lattice, m: int) -> Optional[tuple[int, int]]:
    """Pentagon with m on the long side: c > m and b folding meet and join."""
    for c in np.flatnonzero(L.strict[m]):
        eq = (L.meet[m] == L.meet[c]) & (L.join[m] == L.join[c])
        bs = np.flatnonzero(eq)
        if bs.size:
            return int(c), int(bs[0])
    return None


def is_left_modular(L: Lattice, m: int) -> ModularityReport:
    a, c = kernels.lm_witness(L.strict, L.meet, L.join, m)
    if a >= 0:
        return ModularityReport(m, False, False, (a, c))
    w = _a_role_witness(L, m)
    if w is not None:
        return ModularityReport(m, True, False, w)
    return ModularityReport(m, True, True, None)


def is_modular_element(L: Lattice, m: int) -> bool:
    """Two-sided modularity: neither pentagon role."""
    r = is_left_modular(L, m)
    return r.is_modular


def is_left_modular_coatom(L: Lattice, m: int) -> bool:
    """Coatom criterion: m ^ y is covered by y for every y not below m."""
    if m not in L.coatoms:
        raise NotACoatom(f"{m} is not a coatom")
    covb = L.cover_matrix
    for y in np.flatnonzero(~L.leq[:, m]):
        if not covb[L.meet[m, y], y]:
            return False
    return True


def is_left_modular_in_interval(L: Lattice, x: int, y: int, m: int) -> bool:
    """Pentagon scan restricted to the interval [x, y] of L."""
    ids = np.flatnonzero(L.leq[x] & L.leq[:, y])
    em = L.meet[m, ids]
    jm = L.join[m, ids]
    sub = L.strict[np.ix_(ids, ids)]
    bad = sub & (em[:, None] == em[None, :]) & (jm[:, None] == jm[None, :])
    return not bad.any()


def is_semimodular(L: Lattice) -> bool:
    """Every atom of every interval is left-modular in that interval.

    Reduces to: for each cover x -| a and each z >= x with a not below z,
    z is covered by z v a (choosing the interval top z v a is the worst
    case, and the atom criterion per z does not depend on the top).
    """
    covb = L.cover_matrix
    for x, a in L.covers:
        for z in np.flatnonzero(L.leq[x] & ~L.leq[a]):
            if not covb[z, L.join[a, z]]:
                return False
    return True


def is_semimodular_classic(L: Lattice) -> bool:
    """Cover-relation form: a ^ b -| a implies b -| a v b."""
    covb = L.cover_matrix
    n = L.n
    for a in range(n):
        for b in range(n):
            if covb[L.meet[a, b], a] and not covb[b, L.join[a, b]]:
                return False
    return True


def is_geometric(L: Lattice) -> bool:
    """Semimodular and atomic (every element is a join of atoms)."""
    if not is_semimodular(L):
        return False
    for v in range(L.n):
        acc = L.bottom
        for a in L.atoms:
            if L.leq[a, v]:
                acc = int(L.join[acc, a])
        if acc != v:
            return False
    return True


def find_m_chain(L: Lattice) -> Optional[SubMChain]:
    """A maximal chain of elements left-modular in L, if one exists.

    Depth-first with ascending ids, so the result is deterministic.  The
    lattice is left-modular iff this finds a chain, and supersolvable iff
    additionally graded.
    """
    lm = left_modular_mask(L)
    if not (lm[L.bottom] and lm[L.top]):
        return None
    covb = L.cover_matrix
    target = L.top
    path = [L.bottom]

    def climb() -> bool:
        c = path[-1]
        if c == target:
            return True
        for w in np.flatnonzero(covb[c]):
            if lm[w]:
                path.append(int(w))
                if climb():
                    return True
                path.pop()
        return False

    return SubMChain(tuple(path)) if climb() else None


def find_sub_m_chain(L: Lattice, x: Optional[int] = None,
                     y: Optional[int] = None) -> Optional[SubMChain]:
    """Greedy top-down sub-M-chain of [x, y] (defaults to all of L).

    At each stage the smallest-id left-modular coatom of the current
    interval is chosen; returns None when some stage has none.  On a
    comodernistic lattice this always succeeds.
    """
    x = L.bottom if x is None else x
    y = L.top if y is None else y
    arr, fail = kernels.greedy_sub_m_chain(L.leq, L.cover_matrix, L.meet, x, y)
    if fail >= 0:
        return None
    return SubMChain(tuple(int(v) for v in arr))


def comodernistic_violation(L: Lattice) -> Optional[tuple[int, int]]:
    """An interval with no left-modular coatom, or None."""
    x, y = kernels.comod_violation(L.leq, L.cover_matrix, L.meet)
    return None if x < 0 else (x, y)


def modernistic_violation(L: Lattice) -> Optional[tuple[int, int]]:
    """An interval with no left-modular atom, or None."""
    x, y = kernels.modern_violation(L.leq, L.cover_matrix, L.join)
    return None if x < 0 else (x, y)


def is_comodernistic(L: Lattice) -> bool:
    return comodernistic_violation(L) is None


def is_modernistic(L: Lattice) -> bool:
    return modernistic_violation(L) is None


def left_modular_maximal_is_modular_check(L: Lattice) -> bool:
    """Every left-modular maximal proper element (coatom) is two-sided
    modular.

    For a coatom the long-side pentagon role would force the upper pentagon
    element to be the top, which is impossible, so left-modularity upgrades
    to modularity.  Note the weaker reading "maximal among proper
    left-modular elements" is false in general.  Test-suite predicate.
    """
    lm = left_modular_mask(L)
    for m in L.coatoms:
        if lm[m] and not is_modular_element(L, int(m)):
            return False
    return True


def schmidt_condition3(L: Lattice) -> bool:
    """Is there a maximal chain whose every element is modular in the
    interval below its successor?

    Memoized bottom-up search over cover steps; each candidate pair
    (u, c) requires u two-sided modular in [bottom, c].
    """
    covb = L.cover_matrix
    ok: dict[int, bool] = {L.bottom: True}

    def pair_ok(u: int, c: int) -> bool:
        iv = L.interval(L.bottom, c)
        pos = {e: k for k, e in enumerate(iv.parent_ids)}
        return is_modular_element(iv, pos[u])

    def reach(c: int) -> bool:
        if c in ok:
            return ok[c]
        res = False
        for u in np.flatnonzero(covb[:, c]):
            if reach(int(u)) and pair_ok(int(u), c):
                res = True
                break
        ok[c] = res
        return res

    return reach(L.top)
