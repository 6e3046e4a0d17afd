"""Compare the compiled and pure-Python 3-edge-colouring kernels.

    python3 benchmarks/bench_kernel.py [--repeat 5]

Two workloads per instance: a single decision call on the whole graph, and a
full s(G) computation (many decision calls on deletion remainders).
"""

from __future__ import annotations

import argparse
import statistics
import time
from contextlib import contextmanager

from deltamin import kernel
from deltamin.colouring import search_order, smallest_last_order
from deltamin.constructions import PETERSEN_SPOKE_PAIR, dot_product, p_prime, petersen, petersen_chain
from deltamin.graph6 import parse_graph6
from deltamin.cli import corpus_text
from deltamin.smin import s_exact


def instances():
    e1, f1 = PETERSEN_SPOKE_PAIR
    pp = dot_product(petersen(), e1, f1, petersen(), (0, 1))
    chain, _ = petersen_chain(petersen())
    return [("petersen", petersen()), ("p_prime", p_prime()), ("petersen.petersen", pp), ("petersen_chain(50)", chain)]


@contextmanager
def backend(name: str):
    saved = kernel._impl
    kernel._impl = kernel.BACKENDS[name]
    try:
        yield
    finally:
        kernel._impl = saved


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    names = [n for n in ("cython", "python") if n in kernel.BACKENDS]
    if "cython" not in names:
        print("compiled kernel not built; only the Python backend is timed")
    corpus = [parse_graph6(line) for line in corpus_text().split()]

    rows = []
    for label, g in instances():
        perm = search_order(g.n, g.edges, smallest_last_order(g))
        us = [g.edges[i][0] for i in perm]
        vs = [g.edges[i][1] for i in perm]
        decide = {n: best_of(lambda n=n: kernel.BACKENDS[n](g.n, us, vs, 0), args.repeat) for n in names}
        rows.append((f"decide {label}", decide))
        smin = {}
        for n in names:
            with backend(n):
                smin[n] = best_of(lambda: s_exact(g), args.repeat)
        rows.append((f"s_exact {label}", smin))
    sweep = {}
    for n in names:
        with backend(n):
            sweep[n] = best_of(lambda: [s_exact(g) for g in corpus], args.repeat)
    rows.append(("s_exact corpus (27 graphs)", sweep))

    print(f"{'workload':34s} " + " ".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, t in rows:
        cells = " ".join(f"{t[n] * 1e3:10.3f}ms" for n in names)
        extra = f" {t['python'] / t['cython']:10.1f}x" if len(names) == 2 and t["cython"] > 0 else ""
        print(f"{label:34s} {cells}{extra}")
    if len(names) == 2:
        ratios = [t["python"] / t["cython"] for _, t in rows if t["cython"] > 0]
        print(f"geometric-mean speedup: {statistics.geometric_mean(ratios):.1f}x")


if __name__ == "__main__":
    main()
