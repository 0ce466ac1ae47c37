"""Independent topological oracles: order complexes, brute-force Mobius
numbers, reduced Euler characteristics, and direct shelling verification.

Nothing here consults the labeling machinery; these functions are the
ground truth that labeling outputs are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .errors import BadPermutation, NotBounded, NotComparable, TooLarge
from .poset import Lattice, Poset


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet description of a finite simplicial complex.

    ``facets`` are sorted vertex tuples, pairwise incomparable under
    inclusion, listed in lexicographic order.  The complex whose only face
    is the empty face is represented by the single facet ``()``.
    """

    vertices: int
    facets: tuple[tuple[int, ...], ...]
    vertex_ids: Optional[tuple[int, ...]] = None  # complex vertex -> source element

    @classmethod
    def from_facets(cls, vertices: int, facets, vertex_ids=None) -> "SimplicialComplex":
        fs = sorted({tuple(sorted(int(v) for v in f)) for f in facets})
        fs = [f for f in fs
              if not any(set(f) < set(g) for g in fs if len(g) > len(f))]
        return cls(vertices, tuple(sorted(fs)), vertex_ids)


def order_complex(p) -> SimplicialComplex:
    """Order complex of a bounded poset: faces are the chains of the
    proper part, facets the maximal chains minus endpoints.

    A cover bottom -| top yields the empty complex (single empty facet).
    """
    if isinstance(p, Lattice):
        p = p.poset
    if not p.is_bounded:
        raise NotBounded("order complex requires a bounded poset")
    if p.n < 2:
        raise NotBounded("order complex requires distinct bottom and top")
    proper = [v for v in range(p.n) if v not in (p.bottom, p.top)]
    pos = {e: k for k, e in enumerate(proper)}
    facets = []
    for ch in p.maximal_chains(p.bottom, p.top):
        facets.append(tuple(pos[v] for v in ch[1:-1]))
    return SimplicialComplex.from_facets(len(proper), facets,
                                         vertex_ids=tuple(proper))


def euler_characteristic(K: SimplicialComplex, max_faces: int = 2_000_000) -> int:
    """Reduced Euler characteristic, with the empty face counted once."""
    faces: set[int] = set()
    for f in K.facets:
        mask = 0
        for v in f:
            mask |= 1 << v
        for r in range(len(f) + 1):
            for sub in combinations(f, r):
                m = 0
                for v in sub:
                    m |= 1 << v
                faces.add(m)
                if len(faces) > max_faces:
                    raise TooLarge("face expansion exceeds budget")
    chi = 0
    for m in faces:
        chi += -1 if m.bit_count() % 2 == 0 else 1  # (-1)^(|f|-1)
    return chi


def euler_by_inclusion_exclusion(K: SimplicialComplex) -> int:
    """Nerve-style cross-check: sum of (-1)^|T| over nonempty facet
    subsets T with empty common intersection. Exponential; small inputs.
    """
    if len(K.facets) > 22:
        raise TooLarge("inclusion-exclusion limited to 22 facets")
    masks = []
    for f in K.facets:
        m = 0
        for v in f:
            m |= 1 << v
        masks.append(m)
    chi = 0
    full = (1 << len(masks)) - 1
    for t in range(1, full + 1):
        inter = ~0
        tt = t
        while tt:
            bit = tt & -tt
            tt ^= bit
            inter &= masks[bit.bit_length() - 1]
        if inter == 0:
            chi += -1 if t.bit_count() % 2 else 1
    return chi


def mobius_brute(p, x: Optional[int] = None, y: Optional[int] = None) -> int:
    """Classical Mobius recursion mu(x,x)=1, mu(x,y)=-sum_{x<=z<y} mu(x,z)."""
    if isinstance(p, Lattice):
        p = p.poset
    if x is None or y is None:
        if not p.is_bounded:
            raise NotBounded("default endpoints require a bounded poset")
        x = p.bottom if x is None else x
        y = p.top if y is None else y
    if not p.leq[x, y]:
        raise NotComparable(f"{x} is not below {y}")
    ids = [int(i) for i in np.flatnonzero(p.leq[x] & p.leq[:, y])]
    pos = {e: k for k, e in enumerate(ids)}
    sub = p.leq[np.ix_(ids, ids)]
    order = sorted(range(len(ids)), key=lambda k: (int(sub[:, k].sum()), k))
    mu = np.zeros(len(ids), dtype=np.int64)
    for k in order:
        if ids[k] == x:
            mu[k] = 1
        else:
            mu[k] = -int(mu[sub[:, k] & (np.arange(len(ids)) != k)].sum())
    return int(mu[pos[y]])


def is_shelling(K: SimplicialComplex, order: Sequence[int]):
    """Nonpure shelling check for an explicit facet order.

    Facet F_j must meet the union of its predecessors in a pure complex of
    dimension dim(F_j) - 1; equivalently every intersection with an earlier
    facet extends to a codimension-one one.  Returns (ok, certificate).
    """
    N = len(K.facets)
    if sorted(order) != list(range(N)):
        raise BadPermutation("order must permute the facet indices")
    masks = []
    for f in K.facets:
        m = 0
        for v in f:
            m |= 1 << v
        masks.append(m)
    seq = [masks[i] for i in order]
    sizes = [len(K.facets[i]) for i in order]
    for j in range(1, N):
        fj = seq[j]
        want = sizes[j] - 1
        codim1 = [fj & seq[k] for k in range(j)
                  if (fj & seq[k]).bit_count() == want]
        for i in range(j):
            g = fj & seq[i]
            if g.bit_count() == want:
                continue
            if not any(g & ~h == 0 for h in codim1):
                return False, {
                    "facet_position": j,
                    "facet": K.facets[order[j]],
                    "earlier": K.facets[order[i]],
                    "reason": "intersection not inside a codimension-1 face",
                }
    return True, None


def shelling_order_by_words(L: Lattice, labeling) -> tuple[SimplicialComplex, list[int]]:
    """Facets of the order complex sorted by their label words (ties by
    chain), plus the permutation realizing that order."""
    from .labeling import word_of

    chains = list(L.maximal_chains())
    K = order_complex(L.poset)
    pos = {e: k for k, e in enumerate(K.vertex_ids)}
    facet_index = {f: i for i, f in enumerate(K.facets)}
    keyed = []
    for ch in chains:
        w = word_of(labeling, ch)
        f = tuple(sorted(pos[v] for v in ch[1:-1]))
        keyed.append((w, ch, facet_index[f]))
    keyed.sort(key=lambda t: (t[0], t[1]))
    return K, [t[2] for t in keyed]


def verify_lex_shelling(L: Lattice, labeling, jobs: int = 1):
    """Check that the word-lexicographic facet order shells the order
    complex. Returns (ok, certificate)."""
    del jobs  # single sweep; facet scan is already the cheap part
    if L.n < 2:
        return True, None
    K, order = shelling_order_by_words(L, labeling)
    return is_shelling(K, order)


def homotopy_summary(L: Lattice, labeling) -> dict[int, int]:
    """Sphere count by dimension: a decreasing chain of length d gives a
    (d-2)-sphere."""
    from .labeling import decreasing_chains

    out: dict[int, int] = {}
    for lc in decreasing_chains(L, labeling):
        d = len(lc.word) - 2
        out[d] = out.get(d, 0) + 1
    return out
