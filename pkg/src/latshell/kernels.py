"""Hot relation-matrix kernels, with numba and pure-numpy backends.

Everything downstream (closure, cover reduction, meet/join tables, pentagon
scans, interval sweeps) funnels through the dispatchers in this module.  The
backend is chosen once at import time:

* ``LATSHELL_BACKEND=numba``  force the jit kernels (error if numba missing)
* ``LATSHELL_BACKEND=numpy``  force the vectorized fallbacks
* unset                       numba when importable, numpy otherwise

Conventions: ``leq[i, j]`` means ``i <= j``; element ids are dense 0..n-1.
``rev_topo`` is any reverse linear extension (used so the first common bound
found while scanning is a maximal one).
"""

from __future__ import annotations

import os

import numpy as np

_env = os.environ.get("LATSHELL_BACKEND", "").strip().lower()
if _env not in ("", "numba", "numpy"):
    raise ValueError(f"LATSHELL_BACKEND must be 'numba' or 'numpy', got {_env!r}")

_HAVE_NUMBA = False
if _env != "numpy":
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - exercised only without numba
        if _env == "numba":
            raise


def active_backend() -> str:
    return "numba" if _HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy implementations

def closure_np(adj: np.ndarray):
    """Reachability closure of a digraph. Returns (leq, cyclic)."""
    n = adj.shape[0]
    r = adj.astype(bool).copy()
    while True:
        step = (r.astype(np.int32) @ r.astype(np.int32)) > 0
        new = r | step
        if (new == r).all():
            break
        r = new
    cyclic = bool(np.diag(r).any())
    np.fill_diagonal(r, True)
    return r, cyclic


def reduction_np(leq: np.ndarray) -> np.ndarray:
    """Transitive reduction (cover matrix) of a partial order."""
    strict = leq & ~np.eye(leq.shape[0], dtype=bool)
    two = (strict.astype(np.int32) @ strict.astype(np.int32)) > 0
    return strict & ~two


def meet_join_np(leq: np.ndarray, rev_topo: np.ndarray):
    """Meet and join tables, or a witness pair without one.

    Returns (meet, join, ok, wx, wy, wkind) with wkind 0 for a missing meet
    and 1 for a missing join.  Tables are only valid when ok is true.
    """
    n = leq.shape[0]
    meet = np.zeros((n, n), np.int64)
    join = np.zeros((n, n), np.int64)
    ar = np.arange(n)
    for kind, rel, topo in ((0, leq, rev_topo), (1, leq.T, rev_topo[::-1])):
        table = meet if kind == 0 else join
        perm = rel[topo, :]
        for x in range(n):
            lb = perm[:, x, np.newaxis] & perm  # row k, col y: topo[k] bounds x and y
            first = lb.argmax(axis=0)
            exists = lb[first, ar]
            best = topo[first]
            dom = rel[:, best]  # dom[z, y]: z rel best[y]
            bad_cols = ((rel[:, x, np.newaxis] & rel) & ~dom).any(axis=0) | ~exists
            if bad_cols.any():
                y = int(np.flatnonzero(bad_cols)[0])
                return meet, join, False, x, y, kind
            table[x, :] = best
    return meet, join, True, -1, -1, -1


def lm_mask_np(strict: np.ndarray, meet: np.ndarray, join: np.ndarray) -> np.ndarray:
    """Left-modular flag per element (no pair a<c folds meets and joins)."""
    n = strict.shape[0]
    out = np.ones(n, dtype=bool)
    for m in range(n):
        em = meet[m]
        jm = join[m]
        bad = strict & (em[:, None] == em[None, :]) & (jm[:, None] == jm[None, :])
        out[m] = not bad.any()
    return out


def lm_witness_np(strict, meet, join, m):
    """First pair (a, c), a < c, witnessing that m is not left-modular."""
    em = meet[m]
    jm = join[m]
    bad = strict & (em[:, None] == em[None, :]) & (jm[:, None] == jm[None, :])
    hits = np.argwhere(bad)
    if hits.size == 0:
        return -1, -1
    return int(hits[0, 0]), int(hits[0, 1])


def comod_violation_np(leq, covb, meet):
    """First interval [x, y] with no left-modular coatom, else (-1, -1).

    Coatom test is the criterion: m below-covering y is left-modular in
    [x, y] iff m ^ z is covered by z for every z in [x, y] not below m.
    """
    n = leq.shape[0]
    for y in range(n):
        dn = leq[:, y]
        for x in range(n):
            if x == y or not leq[x, y]:
                continue
            elems = leq[x] & dn
            found = False
            for m in np.flatnonzero(covb[:, y] & leq[x]):
                zs = np.flatnonzero(elems & ~leq[:, m])
                if covb[meet[m, zs], zs].all():
                    found = True
                    break
            if not found:
                return x, y
    return -1, -1


def modern_violation_np(leq, covb, join):
    """First interval [x, y] with no left-modular atom, else (-1, -1)."""
    n = leq.shape[0]
    for y in range(n):
        dn = leq[:, y]
        for x in range(n):
            if x == y or not leq[x, y]:
                continue
            elems = leq[x] & dn
            found = False
            for a in np.flatnonzero(covb[x] & dn):
                zs = np.flatnonzero(elems & ~leq[a, :])
                if covb[zs, join[a, zs]].all():
                    found = True
                    break
            if not found:
                return x, y
    return -1, -1


def greedy_sub_m_chain_np(leq, covb, meet, x, y):
    """Greedy top-down sub-M-chain of [x, y], smallest-id tie-break.

    Returns (chain ascending as int64 array, fail_top); fail_top >= 0 names
    the interval top [x, fail_top] that had no left-modular coatom.
    """
    out = [y]
    c = y
    while c != x:
        elems = leq[x] & leq[:, c]
        pick = -1
        for m in np.flatnonzero(covb[:, c] & leq[x]):
            zs = np.flatnonzero(elems & ~leq[:, m])
            if covb[meet[m, zs], zs].all():
                pick = int(m)
                break
        if pick < 0:
            return np.empty(0, np.int64), c
        out.append(pick)
        c = pick
    return np.asarray(out[::-1], np.int64), -1


# ---------------------------------------------------------------------------
# numba implementations

if _HAVE_NUMBA:

    @njit(cache=True)
    def _closure_nb(adj):
        n = adj.shape[0]
        r = adj.copy()
        for k in range(n):
            for i in range(n):
                if r[i, k]:
                    for j in range(n):
                        if r[k, j]:
                            r[i, j] = True
        cyclic = False
        for i in range(n):
            if r[i, i]:
                cyclic = True
            r[i, i] = True
        return r, cyclic

    @njit(cache=True)
    def _reduction_nb(leq):
        n = leq.shape[0]
        cov = np.zeros((n, n), np.bool_)
        for i in range(n):
            for j in range(n):
                if i != j and leq[i, j]:
                    ok = True
                    for k in range(n):
                        if k != i and k != j and leq[i, k] and leq[k, j]:
                            ok = False
                            break
                    cov[i, j] = ok
        return cov

    @njit(cache=True)
    def _meet_join_nb(leq, rev_topo):
        n = leq.shape[0]
        meet = np.zeros((n, n), np.int64)
        join = np.zeros((n, n), np.int64)
        for x in range(n):
            for y in range(n):
                best = -1
                for t in range(n):
                    z = rev_topo[t]
                    if leq[z, x] and leq[z, y]:
                        best = z
                        break
                if best < 0:
                    return meet, join, False, x, y, 0
                for z in range(n):
                    if leq[z, x] and leq[z, y] and not leq[z, best]:
                        return meet, join, False, x, y, 0
                meet[x, y] = best
        for x in range(n):
            for y in range(n):
                best = -1
                for t in range(n - 1, -1, -1):
                    z = rev_topo[t]
                    if leq[x, z] and leq[y, z]:
                        best = z
                        break
                if best < 0:
                    return meet, join, False, x, y, 1
                for z in range(n):
                    if leq[x, z] and leq[y, z] and not leq[best, z]:
                        return meet, join, False, x, y, 1
                join[x, y] = best
        return meet, join, True, -1, -1, -1

    @njit(cache=True)
    def _lm_mask_nb(strict, meet, join):
        n = strict.shape[0]
        out = np.ones(n, np.bool_)
        for m in range(n):
            done = False
            for a in range(n):
                if done:
                    break
                for c in range(n):
                    if strict[a, c] and meet[m, a] == meet[m, c] and join[m, a] == join[m, c]:
                        out[m] = False
                        done = True
                        break
        return out

    @njit(cache=True)
    def _lm_witness_nb(strict, meet, join, m):
        n = strict.shape[0]
        for a in range(n):
            for c in range(n):
                if strict[a, c] and meet[m, a] == meet[m, c] and join[m, a] == join[m, c]:
                    return a, c
        return -1, -1

    @njit(cache=True)
    def _comod_violation_nb(leq, covb, meet):
        n = leq.shape[0]
        for y in range(n):
            for x in range(n):
                if x == y or not leq[x, y]:
                    continue
                found = False
                for m in range(n):
                    if covb[m, y] and leq[x, m]:
                        ok = True
                        for z in range(n):
                            if leq[x, z] and leq[z, y] and not leq[z, m]:
                                if not covb[meet[m, z], z]:
                                    ok = False
                                    break
                        if ok:
                            found = True
                            break
                if not found:
                    return x, y
        return -1, -1

    @njit(cache=True)
    def _modern_violation_nb(leq, covb, join):
        n = leq.shape[0]
        for y in range(n):
            for x in range(n):
                if x == y or not leq[x, y]:
                    continue
                found = False
                for a in range(n):
                    if covb[x, a] and leq[a, y]:
                        ok = True
                        for z in range(n):
                            if leq[x, z] and leq[z, y] and not leq[a, z]:
                                if not covb[z, join[a, z]]:
                                    ok = False
                                    break
                        if ok:
                            found = True
                            break
                if not found:
                    return x, y
        return -1, -1

    @njit(cache=True)
    def _greedy_sub_m_chain_nb(leq, covb, meet, x, y):
        n = leq.shape[0]
        buf = np.empty(n + 1, np.int64)
        buf[0] = y
        k = 1
        c = y
        while c != x:
            pick = -1
            for m in range(n):
                if covb[m, c] and leq[x, m]:
                    ok = True
                    for z in range(n):
                        if leq[x, z] and leq[z, c] and not leq[z, m]:
                            if not covb[meet[m, z], z]:
                                ok = False
                                break
                    if ok:
                        pick = m
                        break
            if pick < 0:
                return np.empty(0, np.int64), c
            buf[k] = pick
            k += 1
            c = pick
        out = np.empty(k, np.int64)
        for i in range(k):
            out[i] = buf[k - 1 - i]
        return out, -1


# ---------------------------------------------------------------------------
# dispatch

def _c(a, dtype=None):
    a = np.ascontiguousarray(a, dtype=dtype)
    return a


def closure(adj):
    adj = _c(adj, bool)
    if _HAVE_NUMBA:
        leq, cyc = _closure_nb(adj)
        return leq, bool(cyc)
    return closure_np(adj)


def reduction(leq):
    leq = _c(leq, bool)
    if _HAVE_NUMBA:
        return _reduction_nb(leq)
    return reduction_np(leq)


def meet_join(leq, rev_topo):
    leq = _c(leq, bool)
    rev_topo = _c(rev_topo, np.int64)
    if _HAVE_NUMBA:
        m, j, ok, wx, wy, wk = _meet_join_nb(leq, rev_topo)
    else:
        m, j, ok, wx, wy, wk = meet_join_np(leq, rev_topo)
    return m, j, bool(ok), int(wx), int(wy), int(wk)


def lm_mask(strict, meet, join):
    strict = _c(strict, bool)
    if _HAVE_NUMBA:
        return _lm_mask_nb(strict, _c(meet, np.int64), _c(join, np.int64))
    return lm_mask_np(strict, meet, join)


def lm_witness(strict, meet, join, m):
    strict = _c(strict, bool)
    if _HAVE_NUMBA:
        a, c = _lm_witness_nb(strict, _c(meet, np.int64), _c(join, np.int64), m)
    else:
        a, c = lm_witness_np(strict, meet, join, m)
    return int(a), int(c)


def comod_violation(leq, covb, meet):
    if _HAVE_NUMBA:
        x, y = _comod_violation_nb(_c(leq, bool), _c(covb, bool), _c(meet, np.int64))
    else:
        x, y = comod_violation_np(leq, covb, meet)
    return int(x), int(y)


def modern_violation(leq, covb, join):
    if _HAVE_NUMBA:
        x, y = _modern_violation_nb(_c(leq, bool), _c(covb, bool), _c(join, np.int64))
    else:
        x, y = modern_violation_np(leq, covb, join)
    return int(x), int(y)


def greedy_sub_m_chain(leq, covb, meet, x, y):
    if _HAVE_NUMBA:
        arr, fail = _greedy_sub_m_chain_nb(
            _c(leq, bool), _c(covb, bool), _c(meet, np.int64), x, y
        )
    else:
        arr, fail = greedy_sub_m_chain_np(leq, covb, meet, x, y)
    return arr, int(fail)


# name -> (numpy impl, numba impl or None); used by the benchmark script
IMPLEMENTATIONS = {
    "closure": (closure_np, _closure_nb if _HAVE_NUMBA else None),
    "reduction": (reduction_np, _reduction_nb if _HAVE_NUMBA else None),
    "meet_join": (meet_join_np, _meet_join_nb if _HAVE_NUMBA else None),
    "lm_mask": (lm_mask_np, _lm_mask_nb if _HAVE_NUMBA else None),
    "comod_violation": (comod_violation_np, _comod_violation_nb if _HAVE_NUMBA else None),
    "modern_violation": (modern_violation_np, _modern_violation_nb if _HAVE_NUMBA else None),
    "greedy_sub_m_chain": (greedy_sub_m_chain_np, _greedy_sub_m_chain_nb if _HAVE_NUMBA else None),
}
