"""Small finite groups as Cayley tables: subgroup enumeration, subgroup
lattices, solvability machinery, and the solvable-iff-comodernistic suite.

Subgroups are frozensets of element ids.  The stock catalogue ships as
permutation generators or explicit tables, so no external group database
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadPermutation,
    NotAGroup,
    NotASubgroup,
    NotSolvable,
    TooLarge,
)
from .modularity import is_comodernistic
from .poset import Lattice, Poset


class Group:
    """A finite group given by its multiplication table."""

    def __init__(self, table: np.ndarray, name: str = "G", _checked: bool = False):
        table = np.ascontiguousarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n) or n < 1:
            raise NotAGroup("shape", table.shape)
        self.order = n
        self.table = table
        self.name = name
        if not _checked:
            self._verify()
        self.identity = self._find_identity()
        self.inverse = self._build_inverses()
        table.setflags(write=False)

    def _verify(self):
        t = self.table
        n = self.order
        if t.min() < 0 or t.max() >= n:
            raise NotAGroup("closure", (int(t.min()), int(t.max())))
        # associativity: (ab)c == a(bc) for all triples
        left = t[t, :]   # left[a, b, c] = t[t[a, b], c]
        right = t[:, t]  # right[a, b, c] = t[a, t[b, c]]
        if not (left == right).all():
            bad = np.argwhere(left != right)[0]
            raise NotAGroup("associativity", tuple(int(v) for v in bad))
        self._find_identity()
        inv_ok = (np.sort(t, axis=1) == np.arange(n)).all() and \
                 (np.sort(t, axis=0) == np.arange(n)[:, None]).all()
        if not inv_ok:
            raise NotAGroup("inverses", None)

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if (self.table[e] == np.arange(n)).all() and \
               (self.table[:, e] == np.arange(n)).all():
                return e
        raise NotAGroup("identity", None)

    def _build_inverses(self) -> np.ndarray:
        n = self.order
        inv = np.full(n, -1, np.int64)
        for a in range(n):
            hits = np.flatnonzero(self.table[a] == self.identity)
            if hits.size != 1:
                raise NotAGroup("inverses", a)
            inv[a] = hits[0]
        inv.setflags(write=False)
        return inv

    def mult(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @classmethod
    def from_table(cls, table, name: str = "G") -> "Group":
        return cls(np.asarray(table), name)

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], name: str = "G",
                          max_order: int = 360) -> "Group":
        """Close a set of permutations (image tuples on 0..m-1) under
        composition; elements are ordered lexicographically."""
        if not gens:
            raise BadPermutation("need at least one generator")
        m = len(gens[0])
        norm = []
        for g in gens:
            tg = tuple(int(v) for v in g)
            if len(tg) != m or sorted(tg) != list(range(m)):
                raise BadPermutation(f"{g} is not a permutation of 0..{m - 1}")
            norm.append(tg)
        ident = tuple(range(m))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in norm:
                    q = tuple(p[g[i]] for i in range(m))  # p after g
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
                        if len(seen) > max_order:
                            raise TooLarge("group closure exceeds budget")
            frontier = nxt
        elems = sorted(seen)
        pos = {p: i for i, p in enumerate(elems)}
        n = len(elems)
        table = np.empty((n, n), np.int64)
        for i, p in enumerate(elems):
            for j, q in enumerate(elems):
                table[i, j] = pos[tuple(p[q[t]] for t in range(m))]
        # composition of bijections is associative; skip the cubic check
        return cls(table, name, _checked=True)

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"

    @cached_property
    def conj_table(self) -> np.ndarray:
        """conj[g, h] = g h g^-1."""
        n = self.order
        out = np.empty((n, n), np.int64)
        for g in range(n):
            out[g] = self.table[self.table[g], self.inverse[g]]
        out.setflags(write=False)
        return out


def perm_from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> tuple[int, ...]:
    """Permutation (image tuple on 0..degree-1) from disjoint cycles of
    0-based points."""
    img = list(range(degree))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            if not (0 <= x < degree):
                raise BadPermutation(f"point {x} out of range")
            img[x] = cyc[(i + 1) % len(cyc)]
    if sorted(img) != list(range(degree)):
        raise BadPermutation("cycles are not disjoint")
    return tuple(img)


# -- subgroup machinery -----------------------------------------------------


def subgroup_closure(g: Group, seed: Iterable[int]) -> frozenset:
    """Smallest subgroup containing the seed elements."""
    cur = set(seed) | {g.identity}
    while True:
        arr = np.fromiter(cur, np.int64)
        prods = set(int(v) for v in np.unique(g.table[np.ix_(arr, arr)]))
        if prods <= cur:
            return frozenset(cur)
        cur |= prods


def is_subgroup(g: Group, members: Iterable[int]) -> bool:
    s = frozenset(members)
    if g.identity not in s:
        return False
    arr = np.fromiter(s, np.int64)
    return set(int(v) for v in np.unique(g.table[np.ix_(arr, arr)])) <= s


def all_subgroups(g: Group, max_order: int = 60) -> list[frozenset]:
    """Every subgroup, by breadth-first join-with-one-generator closure.

    Results are sorted by (size, members) so downstream ids are stable.
    """
    if g.order > max_order:
        raise TooLarge(f"subgroup enumeration budget is order {max_order}")
    triv = frozenset({g.identity})
    seen = {triv}
    frontier = [triv]
    while frontier:
        nxt = []
        for h in frontier:
            for x in range(g.order):
                if x in h:
                    continue
                k = subgroup_closure(g, h | {x})
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def subgroup_lattice(g: Group, max_order: int = 60) -> Lattice:
    """All subgroups ordered by inclusion; meet is intersection, join the
    generated subgroup.  ``decode`` holds the member sets."""
    subs = all_subgroups(g, max_order)
    n = len(subs)
    leq = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(subs):
        for j, b in enumerate(subs):
            leq[i, j] = a <= b
    labels = ["{" + ",".join(str(x) for x in sorted(s)) + "}" for s in subs]
    p = Poset(leq, labels=labels, _checked=True)
    return Lattice.from_poset(p, decode=tuple(subs))


def is_normal(g: Group, h: Iterable[int]) -> bool:
    s = frozenset(h)
    if not is_subgroup(g, s):
        raise NotASubgroup(f"{sorted(s)} is not a subgroup")
    arr = np.fromiter(s, np.int64)
    member = np.zeros(g.order, dtype=bool)
    member[arr] = True
    return bool(member[g.conj_table[:, arr]].all())


def commutator_subgroup(g: Group, h: Optional[frozenset] = None) -> frozenset:
    """Derived subgroup of h (default: of the whole group)."""
    mem = sorted(h) if h is not None else range(g.order)
    t, inv = g.table, g.inverse
    gens = {int(t[t[inv[a], inv[b]], t[a, b]]) for a in mem for b in mem}
    return subgroup_closure(g, gens)


def derived_series(g: Group) -> list[frozenset]:
    series = [frozenset(range(g.order))]
    while True:
        nxt = commutator_subgroup(g, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: Group) -> bool:
    return derived_series(g)[-1] == frozenset({g.identity})


def normal_subgroups(g: Group, max_order: int = 60) -> list[frozenset]:
    return [h for h in all_subgroups(g, max_order) if is_normal(g, h)]


def chief_series(g: Group, max_order: int = 60) -> list[frozenset]:
    """Maximal chain of subgroups normal in g, grown from the bottom by
    minimal jumps; ties broken by least member tuple."""
    normals = normal_subgroups(g, max_order)
    series = [frozenset({g.identity})]
    full = frozenset(range(g.order))
    while series[-1] != full:
        cur = series[-1]
        above = [h for h in normals if cur < h]
        minimal = [h for h in above if not any(cur < k < h for k in above)]
        minimal.sort(key=lambda s: sorted(s))
        series.append(minimal[0])
    return series


def is_supersolvable_group(g: Group, max_order: int = 60) -> bool:
    """Is there a maximal chain of the subgroup lattice consisting of
    subgroups normal in g?"""
    subs = all_subgroups(g, max_order)
    normals = {h for h in subs if is_normal(g, h)}
    by_set = sorted(subs, key=len)

    def covers_in_lattice(a: frozenset, b: frozenset) -> bool:
        return a < b and not any(a < c < b for c in subs)

    reach = {frozenset({g.identity}): True}

    def ok(h: frozenset) -> bool:
        if h in reach:
            return reach[h]
        res = any(ok(k) and covers_in_lattice(k, h)
                  for k in by_set if k < h and k in normals)
        reach[h] = res
        return res

    return frozenset(range(g.order)) in normals and ok(frozenset(range(g.order)))


def product_set(g: Group, h: Iterable[int], k: Iterable[int]) -> frozenset:
    ha = np.fromiter(sorted(h), np.int64)
    ka = np.fromiter(sorted(k), np.int64)
    return frozenset(int(v) for v in np.unique(g.table[np.ix_(ha, ka)]))


def permutes(g: Group, h: Iterable[int], k: Iterable[int]) -> bool:
    return product_set(g, h, k) == product_set(g, k, h)


def dedekind_identity_check(g: Group, max_order: int = 60) -> bool:
    """H(K n L) = K n HL and (K n L)H = K n LH over all subgroup triples
    with H <= K; also: permuting subgroups have HK = KH = their join."""
    subs = all_subgroups(g, max_order)
    for h in subs:
        for k in subs:
            if not h <= k:
                continue
            for l in subs:
                kl = k & l
                if product_set(g, h, kl) != k & product_set(g, h, l):
                    return False
                if product_set(g, kl, h) != k & product_set(g, l, h):
                    return False
    for h in subs:
        for k in subs:
            hk = product_set(g, h, k)
            if hk == product_set(g, k, h):
                if hk != subgroup_closure(g, h | k):
                    return False
    return True


def solvable_iff_comodernistic_check(g: Group, max_order: int = 60) -> bool:
    """Do is_solvable and comodernism of the subgroup lattice agree?"""
    return is_solvable(g) == is_comodernistic(subgroup_lattice(g, max_order))


def complement_chains_to_chief_series(g: Group, lat: Optional[Lattice] = None,
                                      series: Optional[list[frozenset]] = None,
                                      max_order: int = 60) -> list[tuple[int, ...]]:
    """Maximal chains of the subgroup lattice containing a complement to
    every chief-series member.  Requires a solvable group."""
    if not is_solvable(g):
        raise NotSolvable(f"{g.name} is not solvable")
    if lat is None:
        lat = subgroup_lattice(g, max_order)
    if series is None:
        series = chief_series(g, max_order)
    pos = {s: i for i, s in enumerate(lat.decode)}
    series_ids = [pos[s] for s in series]
    out = []
    for ch in lat.maximal_chains():
        if all(any(lat.meet[c, ni] == lat.bottom and lat.join[c, ni] == lat.top
                   for c in ch) for ni in series_ids):
            out.append(ch)
    return out


def chief_seeded_selector(g: Group, lat: Lattice, series: Optional[list[frozenset]] = None,
                          max_order: int = 60):
    """Per-interval chain selector threading the chief series.

    On [x, y] the series lifts to the chain of distinct (x v N_i) ^ y,
    all left-modular in [x, y]; gaps are filled top-down by smallest-id
    covers that keep the sub-M property.  Falls back to the plain greedy
    choice if a gap cannot be filled through the lifted chain.
    """
    from . import kernels
    from .modularity import is_left_modular_in_interval

    if series is None:
        series = chief_series(g, max_order)
    pos = {s: i for i, s in enumerate(lat.decode)}
    series_ids = [pos[s] for s in series]
    leq, covb, meet = lat.leq, lat.cover_matrix, lat.meet

    def greedy(x: int, y: int) -> Optional[tuple[int, ...]]:
        arr, fail = kernels.greedy_sub_m_chain(leq, covb, meet, x, y)
        return None if fail >= 0 else tuple(int(v) for v in arr)

    def lm_coatom_in(x: int, c: int, u: int) -> bool:
        elems = np.flatnonzero(leq[x] & leq[:, c] & ~leq[:, u])
        return bool(covb[meet[u, elems], elems].all())

    def select(x: int, y: int) -> tuple[int, ...]:
        zs = [x]
        for ni in series_ids:
            z = int(meet[lat.join[x, ni], y])
            if z != zs[-1]:
                zs.append(z)
        if zs[-1] != y:
            zs.append(y)
        chain = [y]
        c = y
        zpos = len(zs) - 1
        good = True
        while c != x and good:
            while zs[zpos] == c:
                zpos -= 1
            floor = zs[zpos]
            good = False
            for u in np.flatnonzero(covb[:, c] & leq[floor, :]):
                if lm_coatom_in(x, c, int(u)):
                    chain.append(int(u))
                    c = int(u)
                    good = True
                    break
        if good:
            res = tuple(reversed(chain))
        else:
            alt = greedy(x, y)
            if alt is None:
                from .errors import NotComodernistic

                raise NotComodernistic(x, y)
            res = alt
        for u, v in zip(res, res[1:]):
            if not is_left_modular_in_interval(lat, x, v, u):
                alt = greedy(x, y)
                assert alt is not None
                return alt
        return res

    return select


# -- stock catalogue --------------------------------------------------------


def cyclic(n: int) -> Group:
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return Group(table, f"Z{n}", _checked=True)


def direct_product(a: Group, b: Group, name: Optional[str] = None) -> Group:
    na, nb = a.order, b.order
    n = na * nb
    table = np.empty((n, n), np.int64)
    for i in range(n):
        ai, bi = divmod(i, nb)
        for j in range(n):
            aj, bj = divmod(j, nb)
            table[i, j] = a.table[ai, aj] * nb + b.table[bi, bj]
    return Group(table, name or f"{a.name}x{b.name}", _checked=True)


def symmetric(n: int) -> Group:
    gens = [perm_from_cycles([[0, 1]], n)] if n >= 2 else [tuple(range(n))]
    if n >= 3:
        gens.append(perm_from_cycles([list(range(n))], n))
    return Group.from_permutations(gens, f"S{n}")


def alternating(n: int) -> Group:
    if n < 3:
        return cyclic(1)
    gens = [perm_from_cycles([[0, 1, 2]], n)]
    if n >= 4:
        if n % 2 == 1:
            gens.append(perm_from_cycles([list(range(n))], n))
        else:
            gens.append(perm_from_cycles([list(range(1, n))], n))
    return Group.from_permutations(gens, f"A{n}")


def dihedral(n: int) -> Group:
    """Symmetries of the regular n-gon, order 2n."""
    rot = perm_from_cycles([list(range(n))], n)
    ref = tuple((n - i) % n for i in range(n))
    return Group.from_permutations([rot, ref], f"D{n}")


def quaternion8() -> Group:
    """Unit quaternions {1, -1, i, -i, j, -j, k, -k}."""
    mul3 = {
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (1, 1), (3, 2): (-1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }

    def unit(idx: int) -> tuple[int, int]:
        return (1 if idx % 2 == 0 else -1), idx // 2

    def encode(sign: int, ax: int) -> int:
        return ax * 2 + (0 if sign > 0 else 1)

    table = np.empty((8, 8), np.int64)
    for a in range(8):
        sa, xa = unit(a)
        for b in range(8):
            sb, xb = unit(b)
            if xa == 0:
                s, x = 1, xb
            elif xb == 0:
                s, x = 1, xa
            elif xa == xb:
                s, x = -1, 0
            else:
                s, x = mul3[(xa, xb)]
            table[a, b] = encode(sa * sb * s, x)
    return Group(table, "Q8")


def elementary_abelian(p: int, k: int = 2) -> Group:
    g = cyclic(p)
    out = g
    for _ in range(k - 1):
        out = direct_product(out, g)
    out.name = f"Z{p}^{k}"
    return out


def stock_groups(include_a5: bool = True) -> dict[str, Group]:
    """The shipped catalogue: solvable groups of order <= 24 plus the
    non-solvable control."""
    cat: dict[str, Group] = {}
    for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 24):
        g = cyclic(n)
        cat[g.name] = g
    for g in (elementary_abelian(2), elementary_abelian(3),
              dihedral(4), dihedral(5), dihedral(6),
              quaternion8(), symmetric(3), alternating(4), symmetric(4),
              direct_product(symmetric(3), cyclic(2), "S3xZ2")):
        cat[g.name] = g
    if include_a5:
        cat["A5"] = alternating(5)
    return cat
