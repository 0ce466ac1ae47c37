"""Chain-edge labelings driven by per-interval sub-M-chain selections.

The comodernistic labeling is a walker: its state on reaching an element x
is an indexed sub-M-chain of [x, top].  The label of a rooted cover x -| a
is one plus the largest index whose chain element meets a at x; the state
then keeps the chain portion above that element and completes below with
the selected sub-M-chain of [a, m], re-indexed from the spent lower
indices, largest first.  Labels depend only on the walker state, so roots
sharing a state share all future labels; verification dedupes roots by
state.

The supersolvable labeling from a fixed M-chain is the stateless special
case: label(x -| y) is the unique i with x v (m_{i-1} ^ y) = x and
x v (m_i ^ y) = y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from . import kernels
from .errors import NotAnMChain, NotComodernistic
from .modularity import SubMChain, left_modular_mask
from .poset import Lattice


class WalkerState(NamedTuple):
    """Indexed sub-M-chain on [chain[0], top]; indices strictly increase
    along the chain and the top always carries the lattice height."""

    chain: tuple[int, ...]
    indices: tuple[int, ...]


@dataclass(frozen=True)
class LabeledChain:
    """A maximal chain together with its label word."""

    chain: tuple[int, ...]
    word: tuple[int, ...]


Selector = Callable[[int, int], tuple[int, ...]]


class ComodernisticLabeling:
    """Recursive chain-edge labeling of a comodernistic lattice.

    ``selector(x, y)`` must return a sub-M-chain of [x, y] as an ascending
    element tuple; the default is the greedy smallest-id choice.  Raises
    NotComodernistic (with the offending interval) as soon as some required
    interval has no left-modular coatom.
    """

    def __init__(self, lattice: Lattice, selector: Optional[Selector] = None):
        self.lattice = lattice
        self._chain_cache: dict[tuple[int, int], tuple[int, ...]] = {}
        self._select = selector if selector is not None else self._greedy
        root = self.chain_on(lattice.bottom, lattice.top)
        self._initial = WalkerState(root, tuple(range(len(root))))
        self.height = len(root) - 1

    def _greedy(self, x: int, y: int) -> tuple[int, ...]:
        L = self.lattice
        arr, fail = kernels.greedy_sub_m_chain(L.leq, L.cover_matrix, L.meet, x, y)
        if fail >= 0:
            raise NotComodernistic(x, fail)
        return tuple(int(v) for v in arr)

    def chain_on(self, x: int, y: int) -> tuple[int, ...]:
        key = (x, y)
        got = self._chain_cache.get(key)
        if got is None:
            got = self._select(x, y)
            self._chain_cache[key] = got
        return got

    def initial_state(self) -> WalkerState:
        return self._initial

    @property
    def root_chain(self) -> tuple[int, ...]:
        return self._initial.chain

    def step(self, state: WalkerState, a: int) -> tuple[int, WalkerState]:
        """Label the cover (state bottom) -| a and advance the walker."""
        leq = self.lattice.leq
        chain, idx = state
        # last chain element not above a; "above" is upward closed along
        # the chain, so scan for the first element above a
        p = len(chain) - 1
        for t in range(1, len(chain)):
            if leq[a, chain[t]]:
                p = t - 1
                break
        label = idx[p] + 1
        mnext = chain[p + 1]
        if mnext == a:
            return label, WalkerState(chain[p + 1:], idx[p + 1:])
        comp = self.chain_on(a, mnext)
        t = len(comp) - 1  # new elements below the retained portion
        assert t <= p, "index pool exhausted; selector output is not sub-M"
        new_idx = idx[p - t:p] + idx[p + 1:]
        return label, WalkerState(comp[:-1] + chain[p + 1:], new_idx)


class SupersolvableLabeling:
    """Root-independent labeling from a fixed M-chain (an EL-labeling).

    Both closed forms (largest index keeping x v (m_{i-1} ^ y) = x and
    smallest index reaching y) are evaluated and must agree.
    """

    def __init__(self, lattice: Lattice, mchain: Sequence[int] | SubMChain):
        if isinstance(mchain, SubMChain):
            mchain = mchain.elements
        self.lattice = lattice
        self.mchain = tuple(int(v) for v in mchain)
        covb = lattice.cover_matrix
        if self.mchain[0] != lattice.bottom or self.mchain[-1] != lattice.top:
            raise NotAnMChain("chain must run from bottom to top")
        for u, v in zip(self.mchain, self.mchain[1:]):
            if not covb[u, v]:
                raise NotAnMChain(f"({u}, {v}) is not a cover")
        lm = left_modular_mask(lattice)
        for v in self.mchain:
            if not lm[v]:
                raise NotAnMChain(f"element {v} is not left-modular")

    def label(self, x: int, y: int) -> int:
        L = self.lattice
        m = self.mchain
        lo = max(i for i in range(1, len(m))
                 if L.join[x, L.meet[m[i - 1], y]] == x)
        hi = min(i for i in range(1, len(m))
                 if L.join[x, L.meet[m[i], y]] == y)
        assert lo == hi, "the two closed forms disagree; chain is not an M-chain"
        return lo

    def initial_state(self) -> int:
        return self.lattice.bottom

    @property
    def root_chain(self) -> tuple[int, ...]:
        return self.mchain

    def step(self, state: int, a: int) -> tuple[int, int]:
        return self.label(state, a), a


def comodernistic_labeling(L: Lattice, selector: Optional[Selector] = None) -> ComodernisticLabeling:
    return ComodernisticLabeling(L, selector)


def ss_el_labeling(L: Lattice, mchain) -> SupersolvableLabeling:
    return SupersolvableLabeling(L, mchain)


def projection_selector(L: Lattice, mchain: Sequence[int] | SubMChain) -> Selector:
    """Selector inheriting a global M-chain on every interval: the chain of
    distinct values x v (m_i ^ y)."""
    if isinstance(mchain, SubMChain):
        mchain = mchain.elements
    ms = tuple(int(v) for v in mchain)

    def select(x: int, y: int) -> tuple[int, ...]:
        out = [x]
        for m in ms:
            z = int(L.meet[L.join[x, m], y])
            if z != out[-1]:
                out.append(z)
        assert out[-1] == y
        return tuple(out)

    return select


def word_of(labeling, chain: Sequence[int], state=None) -> tuple[int, ...]:
    """Label word assigned along a chain of covers, from the given walker
    state (default: the root state at the lattice bottom)."""
    st = labeling.initial_state() if state is None else state
    w = []
    for a in chain[1:]:
        lab, st = labeling.step(st, a)
        w.append(lab)
    return tuple(w)


def _strictly_increasing(w: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(w, w[1:]))


def _weakly_decreasing(w: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def reachable_states(L: Lattice, labeling) -> dict[int, set]:
    """Walker states arriving at each element, over all maximal chains
    from the bottom. Distinct roots sharing a state are merged."""
    states: dict[int, set] = {v: set() for v in range(L.n)}
    states[L.bottom].add(labeling.initial_state())
    up = L.poset.up_covers
    for x in L.poset.linear_order:
        for st in states[x]:
            for a in up[x]:
                _, st2 = labeling.step(st, a)
                states[a].add(st2)
    return states


def verify_cl(L: Lattice, labeling, jobs: int = 1):
    """Check the CL conditions on every rooted interval.

    For each element x, each reachable walker state at x, and each y > x:
    the maximal chains of [x, y] must contain exactly one strictly
    increasing word, and that word must be the strict lexicographic
    minimum.  Returns (ok, certificate).
    """
    states = reachable_states(L, labeling)
    strict = L.strict
    chains_cache: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    def chains(x: int, y: int):
        key = (x, y)
        got = chains_cache.get(key)
        if got is None:
            got = list(L.poset.maximal_chains(x, y))
            chains_cache[key] = got
        return got

    def check_interval(x: int, st, y: int):
        words = [word_of(labeling, ch, st) for ch in chains(x, y)]
        inc = [w for w in words if _strictly_increasing(w)]
        if len(inc) != 1:
            return {"x": x, "y": y, "state": st, "reason":
                    f"{len(inc)} increasing chains", "words": sorted(words)}
        mn = min(words)
        if mn != inc[0] or words.count(mn) > 1:
            return {"x": x, "y": y, "state": st, "reason":
                    "increasing chain is not the strict lex minimum",
                    "words": sorted(words)}
        return None

    tasks = []
    for x in range(L.n):
        ys = [int(y) for y in np.flatnonzero(strict[x])]
        if not ys:
            continue
        for st in sorted(states[x]):
            tasks.append((x, st, ys))

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        def run(task):
            x, st, ys = task
            for y in ys:
                cert = check_interval(x, st, y)
                if cert is not None:
                    return cert
            return None

        with ThreadPoolExecutor(max_workers=jobs) as ex:
            for cert in ex.map(run, tasks):
                if cert is not None:
                    return False, cert
        return True, None

    for x, st, ys in tasks:
        for y in ys:
            cert = check_interval(x, st, y)
            if cert is not None:
                return False, cert
    return True, None


def all_labeled_chains(L: Lattice, labeling) -> list[LabeledChain]:
    """Every maximal chain of L with its word, in chain-lexicographic
    order."""
    return [LabeledChain(ch, word_of(labeling, ch))
            for ch in L.maximal_chains()]


def decreasing_chains(L: Lattice, labeling) -> list[LabeledChain]:
    """Maximal chains whose words are weakly decreasing."""
    return [lc for lc in all_labeled_chains(L, labeling)
            if _weakly_decreasing(lc.word)]


def mobius_from_labeling(L: Lattice, labeling) -> int:
    """Even-length decreasing chains minus odd-length ones."""
    total = 0
    for lc in decreasing_chains(L, labeling):
        total += 1 if len(lc.word) % 2 == 0 else -1
    return total


def first_decreasing_step_complement_check(L: Lattice, labeling) -> bool:
    """The first step of every decreasing chain complements the root
    chain's coatom."""
    root = labeling.root_chain
    if len(root) < 2:
        return True
    m = root[-2]
    for lc in decreasing_chains(L, labeling):
        if len(lc.chain) < 2:
            continue
        c1 = lc.chain[1]
        if L.join[c1, m] != L.top or L.meet[c1, m] != L.bottom:
            return False
    return True


def no_repeat_words_check(L: Lattice, labeling) -> bool:
    """Every maximal chain word has pairwise distinct letters; on a graded
    lattice of height n each word uses n distinct labels from 1..n."""
    graded = L.is_graded()
    h = L.height()
    for lc in all_labeled_chains(L, labeling):
        letters = set(lc.word)
        if len(letters) != len(lc.word):
            return False
        if graded:
            if len(lc.word) != h or not letters <= set(range(1, h + 1)):
                return False
    return True
