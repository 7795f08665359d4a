#!/usr/bin/env python3
"""Benchmark: compiled vs pure-Python integer matmul kernel.

Times raw flat products and the end-to-end group closure that dominates
the verification run. Invoke from a built checkout:

    python benchmarks/bench_kernel.py
"""

import time

from weylppav._kernel import USING_COMPILED, mat_mul_flat_py
from weylppav.rootsys import RootSystemId, simple_reflections
from weylppav.weyl import generate_group

try:
    from weylppav._intmul import mat_mul_flat as compiled_mul
except ImportError:
    compiled_mul = None


def time_raw(mul, flats, n, repeats):
    start = time.perf_counter()
    acc = flats[0]
    for _ in range(repeats):
        for f in flats:
            acc = mul(acc, f, n)
    return time.perf_counter() - start


def time_closure(tag, cap):
    system = RootSystemId.parse(tag)
    gens = simple_reflections(system)
    start = time.perf_counter()
    group = generate_group(gens, cap)
    elapsed = time.perf_counter() - start
    return elapsed, group.order


def main():
    print(f"compiled kernel available: {compiled_mul is not None}")
    print(f"kernel selected at import: {'compiled' if USING_COMPILED else 'pure'}")
    print()

    system = RootSystemId.parse("E6")
    flats = [g.flat for g in simple_reflections(system)]
    repeats = 20000
    total = repeats * len(flats)

    pure = time_raw(mat_mul_flat_py, flats, 6, repeats)
    print(f"raw 6x6 products, pure python : {total / pure:10.0f} products/s")
    if compiled_mul is not None:
        comp = time_raw(compiled_mul, flats, 6, repeats)
        print(f"raw 6x6 products, compiled    : {total / comp:10.0f} products/s"
              f"   ({pure / comp:.1f}x faster)")
    print()

    for tag, cap in (("F4", 2000), ("D5", 4000), ("E6", 100001)):
        elapsed, order = time_closure(tag, cap)
        backend = "compiled" if USING_COMPILED else "pure"
        print(f"closure {tag:3} (order {order:6}) via {backend:8}: {elapsed:7.2f}s")
    print()
    print("rerun with WEYLPPAV_NO_EXT=1 to time the closures on the pure kernel")


if __name__ == "__main__":
    main()
