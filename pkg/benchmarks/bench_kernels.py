"""Benchmark the jit kernels against the pure-numpy fallbacks.

Run:  python3 benchmarks/bench_kernels.py [--sizes 4 5 6]

Builds partition lattices as realistic workloads and times each kernel on
both backends.  The numba timings exclude compilation (one warm-up call).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from latshell import kernels
from latshell.families import partition_lattice


def bench(fn, args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()

    if not kernels.active_backend() == "numba":
        print("numba backend unavailable; timing numpy only")

    header = f"{'kernel':<20}{'n':>5}{'lattice':>9}{'numpy':>12}{'numba':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in opts.sizes:
        L = partition_lattice(n)
        leq = np.ascontiguousarray(L.leq, dtype=bool)
        covb = np.ascontiguousarray(L.cover_matrix, dtype=bool)
        meet = np.ascontiguousarray(L.meet, dtype=np.int64)
        join = np.ascontiguousarray(L.join, dtype=np.int64)
        strict = np.ascontiguousarray(L.strict, dtype=bool)
        rev = np.asarray(L.poset.linear_order[::-1], dtype=np.int64)
        adj = covb
        cases = {
            "closure": (adj,),
            "reduction": (leq,),
            "meet_join": (leq, rev),
            "lm_mask": (strict, meet, join),
            "comod_violation": (leq, covb, meet),
            "modern_violation": (leq, covb, join),
            "greedy_sub_m_chain": (leq, covb, meet, L.bottom, L.top),
        }
        for name, args in cases.items():
            np_fn, nb_fn = kernels.IMPLEMENTATIONS[name]
            t_np = bench(np_fn, args, opts.repeat)
            if nb_fn is not None:
                nb_fn(*args)  # compile
                t_nb = bench(nb_fn, args, opts.repeat)
                ratio = f"{t_np / t_nb:8.1f}x"
                t_nb_s = f"{t_nb * 1e3:10.2f}ms"
            else:
                ratio, t_nb_s = "       -", "         -"
            print(f"{name:<20}{n:>5}{L.n:>9}{t_np * 1e3:10.2f}ms{t_nb_s}{ratio}")


if __name__ == "__main__":
    main()
