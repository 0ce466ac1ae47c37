"""Finite posets and lattices over dense integer element ids.

A :class:`Poset` stores the full order relation as a boolean matrix
(``leq[i, j]`` means ``i <= j``) together with its transitive reduction.
A :class:`Lattice` adds total meet and join tables.  Both are immutable
after construction; every query is pure, so instances can be shared freely
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .errors import (
    BadId,
    CycleDetected,
    NotALattice,
    NotBounded,
    NotComparable,
    TooLarge,
)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Poset:
    """A finite partial order on elements 0..n-1."""

    def __init__(self, leq: np.ndarray, labels: Optional[Sequence[str]] = None,
                 _checked: bool = False):
        leq = np.ascontiguousarray(leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n) or n < 1:
            raise BadId("leq must be a square matrix over at least one element")
        if not _checked:
            if not np.diag(leq).all():
                raise CycleDetected("relation is not reflexive")
            if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
                raise CycleDetected("relation is not antisymmetric")
            closed, cyclic = kernels.closure(leq)
            if cyclic or (closed != leq).any():
                raise CycleDetected("relation is not transitive")
        self.n = n
        self.leq = _freeze(leq)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise BadId("labels length must equal element count")

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Sequence[int]],
                    labels: Optional[Sequence[str]] = None) -> "Poset":
        """Build from cover relations; the stored covers are re-reduced."""
        adj = np.zeros((n, n), dtype=bool)
        for pair in covers:
            x, y = int(pair[0]), int(pair[1])
            if not (0 <= x < n and 0 <= y < n) or x == y:
                raise BadId(f"cover ({x}, {y}) out of range for n={n}")
            adj[x, y] = True
        leq, cyclic = kernels.closure(adj)
        if cyclic:
            raise CycleDetected("cover relations contain a directed cycle")
        return cls(leq, labels, _checked=True)

    # -- basic structure ---------------------------------------------------

    @cached_property
    def strict(self) -> np.ndarray:
        return _freeze(self.leq & ~np.eye(self.n, dtype=bool))

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        return _freeze(kernels.reduction(self.leq))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return tuple((int(x), int(y)) for x, y in np.argwhere(self.cover_matrix))

    @cached_property
    def up_covers(self) -> tuple[tuple[int, ...], ...]:
        cm = self.cover_matrix
        return tuple(tuple(int(j) for j in np.flatnonzero(cm[i])) for i in range(self.n))

    @cached_property
    def down_covers(self) -> tuple[tuple[int, ...], ...]:
        cm = self.cover_matrix
        return tuple(tuple(int(j) for j in np.flatnonzero(cm[:, i])) for i in range(self.n))

    @cached_property
    def linear_order(self) -> tuple[int, ...]:
        """A deterministic linear extension (by downset size, then id)."""
        nbelow = self.leq.sum(axis=0)
        return tuple(int(i) for i in np.lexsort((np.arange(self.n), nbelow)))

    @cached_property
    def minimals(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.leq.sum(axis=0) == 1))

    @cached_property
    def maximals(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.leq.sum(axis=1) == 1))

    @cached_property
    def bottom(self) -> Optional[int]:
        hits = np.flatnonzero(self.leq.sum(axis=1) == self.n)
        return int(hits[0]) if hits.size else None

    @cached_property
    def top(self) -> Optional[int]:
        hits = np.flatnonzero(self.leq.sum(axis=0) == self.n)
        return int(hits[0]) if hits.size else None

    @property
    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    @cached_property
    def element_heights(self) -> tuple[int, ...]:
        """Longest chain length from a minimal element up to each element."""
        h = [0] * self.n
        for v in self.linear_order:
            for u in self.down_covers[v]:
                h[v] = max(h[v], h[u] + 1)
        return tuple(h)

    def height(self) -> int:
        if not self.is_bounded:
            raise NotBounded("height requires a bounded poset")
        return self.element_heights[self.top]

    def is_graded(self) -> bool:
        """All maximal chains from bottom to top share one length."""
        if not self.is_bounded:
            raise NotBounded("gradedness requires a bounded poset")
        # An element is on some maximal chain iff reachable by covers from
        # bottom and co-reachable from top; gradedness holds iff longest and
        # shortest cover-paths agree at every element.
        lo = [0] * self.n
        hi = [0] * self.n
        for v in self.linear_order:
            dn = self.down_covers[v]
            if dn:
                lo[v] = min(lo[u] + 1 for u in dn)
                hi[v] = max(hi[u] + 1 for u in dn)
        return lo[self.top] == hi[self.top] and all(
            lo[v] == hi[v] for v in range(self.n)
        )

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        if self.bottom is None:
            raise NotBounded("atoms require a bottom element")
        return tuple(sorted(self.up_covers[self.bottom]))

    @cached_property
    def coatoms(self) -> tuple[int, ...]:
        if self.top is None:
            raise NotBounded("coatoms require a top element")
        return tuple(sorted(self.down_covers[self.top]))

    @cached_property
    def is_hasse_connected(self) -> bool:
        seen = {0}
        stack = [0]
        cm = self.cover_matrix
        nbrs = cm | cm.T
        while stack:
            v = stack.pop()
            for w in np.flatnonzero(nbrs[v]):
                if int(w) not in seen:
                    seen.add(int(w))
                    stack.append(int(w))
        return len(seen) == self.n

    # -- derived posets ----------------------------------------------------

    def dual(self) -> "Poset":
        return Poset(self.leq.T.copy(), self.labels, _checked=True)

    def subposet(self, ids: Sequence[int]) -> "Poset":
        ids = list(ids)
        sub = self.leq[np.ix_(ids, ids)].copy()
        labels = None if self.labels is None else [self.labels[i] for i in ids]
        return Poset(sub, labels, _checked=True)

    # -- chains ------------------------------------------------------------

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def maximal_chains(self, x: int, y: int) -> Iterator[tuple[int, ...]]:
        """All maximal chains of [x, y], ascending-id DFS order."""
        if not self.leq[x, y]:
            raise NotComparable(f"{x} is not below {y}")
        cm = self.cover_matrix
        dn_y = self.leq[:, y]

        def walk(prefix: list[int]) -> Iterator[tuple[int, ...]]:
            c = prefix[-1]
            if c == y:
                yield tuple(prefix)
                return
            for w in np.flatnonzero(cm[c] & dn_y):
                prefix.append(int(w))
                yield from walk(prefix)
                prefix.pop()

        yield from walk([x])

    def count_maximal_chains(self, x: int, y: int) -> int:
        if not self.leq[x, y]:
            raise NotComparable(f"{x} is not below {y}")
        cm = self.cover_matrix
        counts = {x: 1}
        for v in self.linear_order:
            if v == x or not (self.leq[x, v] and self.leq[v, y]):
                continue
            counts[v] = sum(counts.get(int(u), 0) for u in np.flatnonzero(cm[:, v]))
        return counts.get(y, 0)

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={len(self.covers)})"


@dataclass(frozen=True)
class StructureSummary:
    """Answers to the standard shape queries on a poset."""

    is_graded: Optional[bool]
    height: Optional[int]
    heights: tuple[int, ...]
    atoms: Optional[tuple[int, ...]]
    coatoms: Optional[tuple[int, ...]]
    is_hasse_connected: bool


def structure_queries(p: Poset) -> StructureSummary:
    """Gradedness, heights, atoms/coatoms, Hasse connectivity.

    Boundedness-only fields are None on unbounded input; the dedicated
    methods (``height``, ``is_graded``) raise NotBounded instead.
    """
    bounded = p.is_bounded
    return StructureSummary(
        is_graded=p.is_graded() if bounded else None,
        height=p.height() if bounded else None,
        heights=p.element_heights,
        atoms=p.atoms if bounded else None,
        coatoms=p.coatoms if bounded else None,
        is_hasse_connected=p.is_hasse_connected,
    )


class Lattice:
    """A bounded poset with total meet and join tables."""

    def __init__(self, poset: Poset, meet: np.ndarray, join: np.ndarray,
                 bottom: int, top: int, decode: Optional[tuple] = None,
                 parent_ids: Optional[tuple[int, ...]] = None):
        self.poset = poset
        self.meet = _freeze(np.ascontiguousarray(meet, dtype=np.int64))
        self.join = _freeze(np.ascontiguousarray(join, dtype=np.int64))
        self.bottom = bottom
        self.top = top
        self.decode = decode
        self.parent_ids = parent_ids

    @classmethod
    def from_poset(cls, p: Poset, decode: Optional[tuple] = None) -> "Lattice":
        rev = np.asarray(p.linear_order[::-1], dtype=np.int64)
        meet, join, ok, wx, wy, wk = kernels.meet_join(p.leq, rev)
        if not ok:
            raise NotALattice(wx, wy, "meet" if wk == 0 else "join")
        return cls(p, meet, join, p.bottom, p.top, decode=decode)

    # delegation ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    @property
    def strict(self) -> np.ndarray:
        return self.poset.strict

    @property
    def cover_matrix(self) -> np.ndarray:
        return self.poset.cover_matrix

    @property
    def covers(self):
        return self.poset.covers

    @property
    def labels(self):
        return self.poset.labels

    @property
    def atoms(self):
        return self.poset.atoms

    @property
    def coatoms(self):
        return self.poset.coatoms

    def height(self) -> int:
        return self.poset.height()

    def is_graded(self) -> bool:
        return self.poset.is_graded()

    def maximal_chains(self, x: Optional[int] = None, y: Optional[int] = None):
        if x is None:
            x = self.bottom
        if y is None:
            y = self.top
        return self.poset.maximal_chains(x, y)

    def meet_of(self, x: int, y: int) -> int:
        return int(self.meet[x, y])

    def join_of(self, x: int, y: int) -> int:
        return int(self.join[x, y])

    def dual(self) -> "Lattice":
        return Lattice(self.poset.dual(), self.join.copy(), self.meet.copy(),
                       self.top, self.bottom, decode=self.decode)

    def interval(self, x: int, y: int) -> "Lattice":
        """Induced lattice on [x, y]; ``parent_ids`` maps back to self."""
        if not self.leq[x, y]:
            raise NotComparable(f"{x} is not below {y}")
        ids = [int(i) for i in np.flatnonzero(self.leq[x] & self.leq[:, y])]
        pos = {e: k for k, e in enumerate(ids)}
        sub = self.poset.subposet(ids)
        m = np.array([[pos[int(self.meet[a, b])] for b in ids] for a in ids], np.int64)
        j = np.array([[pos[int(self.join[a, b])] for b in ids] for a in ids], np.int64)
        dec = None if self.decode is None else tuple(self.decode[i] for i in ids)
        return Lattice(sub, m, j, pos[x], pos[y], decode=dec, parent_ids=tuple(ids))

    def __repr__(self) -> str:
        return f"Lattice(n={self.n})"


def as_lattice(p: Poset) -> Lattice:
    """Fill meet/join tables or raise NotALattice with a witness pair."""
    return Lattice.from_poset(p)


def dual(p):
    return p.dual()


def interval(L: Lattice, x: int, y: int) -> Lattice:
    return L.interval(x, y)


def maximal_chains(p, x: int, y: int):
    if isinstance(p, Lattice):
        p = p.poset
    return p.maximal_chains(x, y)


def count_linear_extensions(p: Poset, max_downsets: int = 5_000_000) -> int:
    """Exact linear extension count by dynamic programming over downsets."""
    if isinstance(p, Lattice):
        p = p.poset
    if p.n > 62:
        raise TooLarge("downset bitmask budget is 62 elements")
    n = p.n
    below = [int(mask) for mask in (
        sum(1 << int(z) for z in np.flatnonzero(p.strict[:, v])) for v in range(n))]
    full = (1 << n) - 1
    counts = {0: 1}
    visited = 1
    for _ in range(n):  # layer k holds all downsets of size k
        nxt: dict[int, int] = {}
        for d, c in counts.items():
            rest = full & ~d
            while rest:
                bit = rest & -rest
                rest ^= bit
                v = bit.bit_length() - 1
                if below[v] & ~d:
                    continue  # some predecessor missing
                d2 = d | bit
                if d2 in nxt:
                    nxt[d2] += c
                else:
                    nxt[d2] = c
                    visited += 1
                    if visited > max_downsets:
                        raise TooLarge("downset count exceeds budget")
        counts = nxt
    return counts[full]


def _refined_colors(p: Poset) -> list[int]:
    col = [(int(p.leq[:, v].sum()), int(p.leq[v].sum()),
            len(p.down_covers[v]), len(p.up_covers[v])) for v in range(p.n)]
    canon = {c: i for i, c in enumerate(sorted(set(col)))}
    col = [canon[c] for c in col]
    for _ in range(p.n):
        nxt = [
            (col[v],
             tuple(sorted(col[u] for u in p.up_covers[v])),
             tuple(sorted(col[u] for u in p.down_covers[v])))
            for v in range(p.n)
        ]
        canon = {c: i for i, c in enumerate(sorted(set(nxt)))}
        new = [canon[c] for c in nxt]
        if new == col:
            break
        col = new
    return col


def is_isomorphic(p: Poset, q: Poset, max_size: int = 64) -> bool:
    """Order-isomorphism test by color refinement plus backtracking.

    A utility with an explicit size budget, not a general iso solver.
    """
    if isinstance(p, Lattice):
        p = p.poset
    if isinstance(q, Lattice):
        q = q.poset
    if p.n != q.n:
        return False
    if p.n > max_size:
        raise TooLarge(f"isomorphism budget is {max_size} elements")
    cp, cq = _refined_colors(p), _refined_colors(q)
    if sorted(cp) != sorted(cq):
        return False
    by_color: dict[int, list[int]] = {}
    for w, c in enumerate(cq):
        by_color.setdefault(c, []).append(w)
    # match rarest colors first to cut branching
    order = sorted(range(p.n), key=lambda v: (len(by_color[cp[v]]), v))
    mapping: dict[int, int] = {}
    used = [False] * q.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in by_color[cp[v]]:
            if used[w]:
                continue
            ok = True
            for v2, w2 in mapping.items():
                if p.leq[v, v2] != q.leq[w, w2] or p.leq[v2, v] != q.leq[w2, w]:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    return extend(0)


def linear_extensions_brute(p: Poset) -> int:
    """Permutation-filter oracle for small posets (tests only)."""
    if p.n > 8:
        raise TooLarge("brute-force extension count limited to 8 elements")
    count = 0
    for perm in permutations(range(p.n)):
        pos = [0] * p.n
        for i, v in enumerate(perm):
            pos[v] = i
        if all(pos[x] < pos[y] for x, y in p.covers):
            count += 1
    return count
