"""Constructors for the partition-flavored lattice families, quotient and
compatibility machinery, and the small stock posets and lattices.

Family lattices carry a ``decode`` table mapping element ids back to the
domain objects (set partitions, signed partitions) and human-readable
labels on the underlying poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import BadParams, NotCompatible, TooLarge
from .poset import Lattice, Poset, as_lattice


# ---------------------------------------------------------------------------
# set partitions

@dataclass(frozen=True)
class SetPartition:
    """Partition of {0..ground-1}; blocks are kept sorted by minimum."""

    ground: int
    block_of: tuple[int, ...]

    @classmethod
    def from_blocks(cls, ground: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        bo = [-1] * ground
        for b in blocks:
            for x in b:
                bo[x] = min(b)
        if -1 in bo:
            raise BadParams("blocks do not partition the ground set")
        return cls(ground, cls._canon(bo))

    @staticmethod
    def _canon(bo: Sequence[int]) -> tuple[int, ...]:
        remap: dict[int, int] = {}
        out = []
        for v in bo:
            if v not in remap:
                remap[v] = len(remap)
            out.append(remap[v])
        return tuple(out)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: dict[int, list[int]] = {}
        for x, b in enumerate(self.block_of):
            out.setdefault(b, []).append(x)
        return tuple(tuple(v) for _, v in sorted(out.items()))

    def refines(self, other: "SetPartition") -> bool:
        seen: dict[int, int] = {}
        for x in range(self.ground):
            b = self.block_of[x]
            ob = other.block_of[x]
            if seen.setdefault(b, ob) != ob:
                return False
        return True

    def meet(self, other: "SetPartition") -> "SetPartition":
        pairs = list(zip(self.block_of, other.block_of))
        remap: dict[tuple[int, int], int] = {}
        bo = []
        for pr in pairs:
            if pr not in remap:
                remap[pr] = len(remap)
            bo.append(remap[pr])
        return SetPartition(self.ground, self._canon(bo))

    def join(self, other: "SetPartition") -> "SetPartition":
        parent = list(range(self.ground))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for bo in (self.block_of, other.block_of):
            firsts: dict[int, int] = {}
            for x, b in enumerate(bo):
                if b in firsts:
                    ra, rb = find(firsts[b]), find(x)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
                else:
                    firsts[b] = x
        return SetPartition(self.ground, self._canon([find(x) for x in range(self.ground)]))

    def label(self) -> str:
        sep = "" if self.ground <= 9 else ","
        return "|".join(sep.join(str(x + 1) for x in b) for b in self.blocks)


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of {0..n-1} in restricted-growth-string order."""
    if n == 0:
        return
    rgs = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield SetPartition(n, tuple(rgs))
            return
        for v in range(mx + 2):
            rgs[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(1, 0)


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


def partition_lattice(n: int, max_elements: int = 50_000) -> Lattice:
    """All partitions of an n-set ordered by refinement."""
    if n < 1:
        raise BadParams("n must be at least 1")
    if bell_number(n) > max_elements:
        raise TooLarge(f"partition lattice on {n} elements exceeds budget")
    parts = list(set_partitions(n))
    lat = _build_partition_sublattice(parts)
    _check_meets_are_common_refinements(lat, parts)
    return lat


def _build_partition_sublattice(parts: Sequence[SetPartition]) -> Lattice:
    n = len(parts)
    leq = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            leq[i, j] = a.refines(b)
    p = Poset(leq, labels=[a.label() for a in parts], _checked=True)
    return Lattice.from_poset(p, decode=tuple(parts))


def _check_meets_are_common_refinements(lat: Lattice, parts: Sequence[SetPartition]):
    """Construction-time check that meets agree with the ambient partition
    lattice (common refinement stays inside the element set)."""
    index = {q.block_of: i for i, q in enumerate(parts)}
    for i, a in enumerate(parts):
        for j in range(i, len(parts)):
            mt = a.meet(parts[j])
            k = index.get(mt.block_of)
            assert k is not None and lat.meet[i, j] == k, (
                "meet table disagrees with common refinement")


def is_order_partition(p: Poset, part: SetPartition) -> bool:
    """Is ``part`` the level-set partition of some order-preserving map?

    Holds iff the block digraph (an edge when some strict relation crosses
    two blocks) is acyclic; a topological order of blocks then realizes a
    map to the integers.
    """
    if part.ground != p.n:
        raise BadParams("partition ground size must match the poset")
    blocks = part.blocks
    k = len(blocks)
    adj = np.zeros((k, k), dtype=bool)
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            if i != j and p.strict[np.ix_(bi, bj)].any():
                adj[i, j] = True
    indeg = adj.sum(axis=0)
    queue = [i for i in range(k) if indeg[i] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in np.flatnonzero(adj[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(int(w))
    return seen == k


def order_congruence_lattice(p: Poset, max_elements: int = 50_000) -> Lattice:
    """Level-set partitions of order-preserving maps, by refinement.

    A meet subsemilattice of the full partition lattice; the construction
    re-checks that meets are common refinements.
    """
    if bell_number(p.n) > max_elements:
        raise TooLarge("order congruence enumeration exceeds budget")
    parts = [q for q in set_partitions(p.n) if is_order_partition(p, q)]
    lat = _build_partition_sublattice(parts)
    _check_meets_are_common_refinements(lat, parts)
    return lat


def _is_order_convex(p: Poset, block: Sequence[int]) -> bool:
    mask = np.zeros(p.n, dtype=bool)
    mask[list(block)] = True
    above = p.leq[list(block), :].any(axis=0)
    below = p.leq[:, list(block)].any(axis=1)
    return not (above & below & ~mask).any()


def order_convexity_lattice(p: Poset, max_elements: int = 50_000) -> Lattice:
    """Partitions of the poset with every block order convex."""
    if bell_number(p.n) > max_elements:
        raise TooLarge("order convexity enumeration exceeds budget")
    parts = [q for q in set_partitions(p.n)
             if all(_is_order_convex(p, b) for b in q.blocks)]
    return _build_partition_sublattice(parts)


def compatible_pairs(p: Poset) -> list[tuple[int, int]]:
    """Pairs {x, y} that may be identified: one covers the other, or they
    are incomparable."""
    out = []
    cm = p.cover_matrix
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if cm[x, y] or cm[y, x] or (not p.leq[x, y] and not p.leq[y, x]):
                out.append((x, y))
    return out


def quotient(p: Poset, x: int, y: int) -> Poset:
    """Identify the compatible pair x, y into one element.

    The merged element inherits all strict relations of both; the relation
    is closed transitively and re-checked for antisymmetry.
    """
    cm = p.cover_matrix
    compatible = cm[x, y] or cm[y, x] or (not p.leq[x, y] and not p.leq[y, x])
    if not compatible:
        raise NotCompatible(f"elements {x} and {y} cannot be identified")
    keep = [i for i in range(p.n) if i != y]
    pos = {old: new for new, old in enumerate(keep)}
    m = len(keep)
    rel = np.zeros((m, m), dtype=bool)
    for u in keep:
        for v in keep:
            if u == v:
                continue
            su = {x, y} if u == x else {u}
            sv = {x, y} if v == x else {v}
            rel[pos[u], pos[v]] = any(p.strict[a, b] for a in su for b in sv)
    from . import kernels

    closed, cyclic = kernels.closure(rel)
    if cyclic:
        raise NotCompatible(f"identifying {x} and {y} breaks antisymmetry")
    labels = None
    if p.labels is not None:
        labels = [p.labels[i] if i != x else f"{p.labels[x]}~{p.labels[y]}"
                  for i in keep]
    return Poset(closed, labels, _checked=True)


def k_equal_lattice(n: int, k: int, max_elements: int = 50_000) -> Lattice:
    """Partitions whose non-singleton blocks have at least k elements."""
    if not (1 <= k <= n):
        raise BadParams("need 1 <= k <= n")
    if bell_number(n) > max_elements:
        raise TooLarge("enumeration exceeds budget")
    parts = [q for q in set_partitions(n)
             if all(len(b) == 1 or len(b) >= k for b in q.blocks)]
    return _build_partition_sublattice(parts)


def affinity_lattice(aff: Sequence[int], mode: str = "exists",
                     max_elements: int = 50_000) -> Lattice:
    """Partitions with per-element block-size thresholds.

    ``exists``: every non-singleton block B has some member x with
    |B| >= aff(x).  ``forall``: the bound holds for every member.
    """
    n = len(aff)
    if mode not in ("exists", "forall"):
        raise BadParams("mode must be 'exists' or 'forall'")
    if any(not (1 <= a <= n) for a in aff):
        raise BadParams("affinities must lie in 1..n")
    if bell_number(n) > max_elements:
        raise TooLarge("enumeration exceeds budget")

    def ok(block: tuple[int, ...]) -> bool:
        if len(block) == 1:
            return True
        if mode == "exists":
            return any(len(block) >= aff[x] for x in block)
        return all(len(block) >= aff[x] for x in block)

    parts = [q for q in set_partitions(n) if all(ok(b) for b in q.blocks)]
    return _build_partition_sublattice(parts)


# ---------------------------------------------------------------------------
# signed partitions (type B)

@dataclass(frozen=True)
class SignedPartition:
    """Signed partition of {0..n}: a zero block through 0 plus signed
    blocks whose patterns are canonicalized so each minimum carries +."""

    n: int
    zero: tuple[int, ...]
    signed: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @classmethod
    def make(cls, n: int, zero: Iterable[int],
             signed: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "SignedPartition":
        z = tuple(sorted(zero))
        if 0 not in z:
            raise BadParams("zero block must contain 0")
        canon = []
        for elems, signs in signed:
            order = sorted(range(len(elems)), key=lambda i: elems[i])
            es = tuple(elems[i] for i in order)
            ss = tuple(signs[i] for i in order)
            if ss[0] < 0:
                ss = tuple(-s for s in ss)
            canon.append((es, ss))
        canon.sort()
        return cls(n, z, tuple(canon))

    def key(self):
        return (self.zero, self.signed)

    def label(self) -> str:
        zs = "".join(str(x) for x in self.zero)
        rest = "|".join(
            "".join(("+" if s > 0 else "-") + str(x) for x, s in zip(es, ss))
            for es, ss in self.signed)
        return zs + ("|" + rest if rest else "")


def signed_partitions(n: int) -> list[SignedPartition]:
    """All signed partitions of {0..n}, canonically ordered."""
    out = []
    for part in set_partitions(n + 1):
        blocks = part.blocks
        zero = next(b for b in blocks if 0 in b)
        others = [b for b in blocks if 0 not in b]
        choices: list[list[tuple[tuple[int, ...], tuple[int, ...]]]] = []
        for b in others:
            opts = []
            for bits in range(1 << (len(b) - 1)):
                signs = [1] + [1 if not (bits >> i) & 1 else -1
                               for i in range(len(b) - 1)]
                opts.append((tuple(b), tuple(signs)))
            choices.append(opts)

        def rec(i: int, acc: list):
            if i == len(choices):
                out.append(SignedPartition.make(n, zero, acc))
                return
            for opt in choices[i]:
                rec(i + 1, acc + [opt])

        rec(0, [])
    out.sort(key=lambda sp: sp.key())
    return out


def _signed_cover_targets(sp: SignedPartition) -> list[SignedPartition]:
    """Merge two signed blocks (both relative patterns) or absorb a signed
    block into the zero block."""
    out = []
    k = len(sp.signed)
    for i in range(k):
        for j in range(i + 1, k):
            (ea, sa), (eb, sb) = sp.signed[i], sp.signed[j]
            rest = [sp.signed[t] for t in range(k) if t not in (i, j)]
            for flip in (1, -1):
                merged = (tuple(ea) + tuple(eb),
                          tuple(sa) + tuple(flip * s for s in sb))
                out.append(SignedPartition.make(sp.n, sp.zero, rest + [merged]))
    for i in range(k):
        rest = [sp.signed[t] for t in range(k) if t != i]
        out.append(SignedPartition.make(
            sp.n, sp.zero + sp.signed[i][0], rest))
    return out


def signed_leq(a: SignedPartition, b: SignedPartition) -> bool:
    """Containment comparator: the zero block grows, and every signed block
    lands in the zero block or sign-embeds (up to global flip) in one
    signed block.  Cross-check oracle for the cover-closure order."""
    if not set(a.zero) <= set(b.zero):
        return False
    bz = set(b.zero)
    signmap = {}
    owner = {}
    for bi, (es, ss) in enumerate(b.signed):
        for x, s in zip(es, ss):
            signmap[x] = s
            owner[x] = bi
    for es, ss in a.signed:
        if set(es) <= bz:
            continue
        if any(x in bz for x in es):
            return False
        own = {owner.get(x) for x in es}
        if len(own) != 1 or None in own:
            return False
        rel = [signmap[x] * s for x, s in zip(es, ss)]
        if len(set(rel)) != 1:
            return False
    return True


def signed_partition_lattice(n: int, max_elements: int = 50_000) -> Lattice:
    """Signed partitions of {0..n}; order is the closure of the two merge
    moves."""
    if n < 1:
        raise BadParams("n must be at least 1")
    elems = signed_partitions(n)
    if len(elems) > max_elements:
        raise TooLarge("signed partition lattice exceeds budget")
    index = {sp.key(): i for i, sp in enumerate(elems)}
    m = len(elems)
    adj = np.zeros((m, m), dtype=bool)
    for i, sp in enumerate(elems):
        for tgt in _signed_cover_targets(sp):
            adj[i, index[tgt.key()]] = True
    from . import kernels

    leq, cyclic = kernels.closure(adj)
    assert not cyclic, "merge moves must be acyclic"
    p = Poset(leq, labels=[sp.label() for sp in elems], _checked=True)
    return Lattice.from_poset(p, decode=tuple(elems))


def signed_kh_lattice(n: int, k: int, h: int, max_elements: int = 50_000) -> Lattice:
    """Signed partitions whose non-singleton signed blocks have size at
    least k and whose zero block is a singleton or has size at least h+1."""
    if not (1 <= h < k <= n):
        raise BadParams("need 1 <= h < k <= n")
    full = signed_partition_lattice(n, max_elements)
    keep = [i for i, sp in enumerate(full.decode)
            if all(len(es) == 1 or len(es) >= k for es, _ in sp.signed)
            and (len(sp.zero) == 1 or len(sp.zero) >= h + 1)]
    sub = full.poset.subposet(keep)
    return Lattice.from_poset(sub, decode=tuple(full.decode[i] for i in keep))


# ---------------------------------------------------------------------------
# stock posets and lattices

def chain_poset(n: int) -> Poset:
    if n < 1:
        raise BadParams("n must be at least 1")
    return Poset.from_covers(n, [(i, i + 1) for i in range(n - 1)],
                             labels=[str(i) for i in range(n)])


def chain_lattice(n: int) -> Lattice:
    return as_lattice(chain_poset(n))


def antichain_poset(n: int) -> Poset:
    if n < 1:
        raise BadParams("n must be at least 1")
    return Poset.from_covers(n, [], labels=[str(i) for i in range(n)])


def boolean_lattice(n: int, max_elements: int = 50_000) -> Lattice:
    """Subsets of an n-set by containment; element ids are bitmasks."""
    if n < 0 or 2 ** max(n, 0) > max_elements:
        raise TooLarge("boolean lattice exceeds budget")
    size = 1 << n
    leq = np.zeros((size, size), dtype=bool)
    for a in range(size):
        for b in range(size):
            leq[a, b] = (a & ~b) == 0
    labels = ["{" + ",".join(str(i + 1) for i in range(n) if (a >> i) & 1) + "}"
              for a in range(size)]
    return as_lattice(Poset(leq, labels=labels, _checked=True))


def pentagon() -> Lattice:
    """The five-element lattice with a single incomparable short side:
    bottom < a < c < top and bottom < b < top."""
    covers = [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]
    p = Poset.from_covers(5, covers, labels=["0", "a", "b", "c", "1"])
    return as_lattice(p)


def bowtie_poset() -> Poset:
    """Four elements a1, a2 < b1, b2; not a lattice (no bounds)."""
    covers = [(0, 2), (0, 3), (1, 2), (1, 3)]
    return Poset.from_covers(4, covers, labels=["a1", "a2", "b1", "b2"])


def ngon_face_lattice(n: int) -> Lattice:
    """Face lattice of an n-gon: empty face, n vertices, n edges, full face."""
    if n < 3:
        raise BadParams("need n >= 3")
    total = 2 * n + 2
    covers = []
    labels = ["{}"]
    for v in range(n):
        covers.append((0, 1 + v))
        labels.append(f"v{v}")
    for e in range(n):
        a, b = e, (e + 1) % n
        covers.append((1 + a, 1 + n + e))
        covers.append((1 + b, 1 + n + e))
        covers.append((1 + n + e, total - 1))
        labels.append(f"e{e}")
    labels.append("F")
    return as_lattice(Poset.from_covers(total, covers, labels=labels))


def fig1_lattice() -> Lattice:
    """The height-3 cube with one cover removed: a small lattice with a
    sub-M-chain that is not an M-chain."""
    n = 3
    size = 1 << n
    covers = []
    for a in range(size):
        for b in range(size):
            if a != b and (a & ~b) == 0 and bin(a ^ b).count("1") == 1:
                covers.append((a, b))
    covers.remove((4, 5))  # drop {3} -| {1,3}
    labels = ["{" + ",".join(str(i + 1) for i in range(n) if (a >> i) & 1) + "}"
              for a in range(size)]
    return as_lattice(Poset.from_covers(size, covers, labels=labels))
