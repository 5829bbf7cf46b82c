"""Compare the numba and numpy kernel backends on the per-order hot loops.

    python benchmarks/bench_kernels.py [--q 1009,1369,1997] [--repeat 5]

Each backend is warmed once (JIT compile or cache load) before timing, and
the outputs of the two backends are asserted equal on every run.
"""

import argparse
import time

import numpy as np

from paley.ff import field_of_order
from paley.graph import canonical_triples
from paley.kernels import numpy_impl

try:
    from paley.kernels import numba_impl
except ImportError:
    numba_impl = None


def workloads(F):
    ct = canonical_triples(F)
    exp, log = F.exp_log
    groups = [(int(b), ct.w[ct.b == b]) for b in np.unique(ct.b)]

    def count111(impl):
        return [impl.count111(F.char_table, F.sub_table, 0, b, ws) for b, ws in groups]

    def curve_stats(impl):
        return [impl.curve_stats(F.char_table, F.square_counts, F.sub_table, exp, log, 0, b, ws)
                for b, ws in groups]

    def find_c(impl):
        return impl.find_c_table(F.char_table, F.sub_table, F.neg_table, F.square_array)

    return {"count111": count111, "curve_stats": curve_stats, "find_c_table": find_c}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def same(a, b):
    if isinstance(a, (list, tuple)):
        return len(a) == len(b) and all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", default="1009,1369,1997")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if numba_impl is None:
        print("numba not installed; only the numpy backend is available")
        return
    print(f"{'q':>6}  {'kernel':<12}  {'numpy ms':>10}  {'numba ms':>10}  {'speedup':>8}")
    for q in (int(x) for x in args.q.split(",")):
        F = field_of_order(q)
        for name, work in workloads(F).items():
            work(numba_impl)  # warm-up
            t_np, out_np = best_of(lambda: work(numpy_impl), args.repeat)
            t_nb, out_nb = best_of(lambda: work(numba_impl), args.repeat)
            assert same(out_np, out_nb), (q, name)
            print(f"{q:>6}  {name:<12}  {t_np * 1e3:>10.2f}  {t_nb * 1e3:>10.2f}  {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
