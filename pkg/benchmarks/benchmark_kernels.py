#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot paths on a corpus-sized instance: single-word state
evolution, batch membership over all words of a fixed length, and batch
brute solving over the same words.  The numba backend is warmed up first so
JIT compilation is not counted.

Usage:
    python benchmarks/benchmark_kernels.py [--group s3|z6|z4] [--arity N]
                                           [--length L] [--repeat R]
"""

import argparse
import time

import numpy as np

from groupeq.groups import cyclic_group, symmetric_group_3
from groupeq.kernels import backends
from groupeq.spaces import all_words, get_space

GROUPS = {
    "s3": lambda: symmetric_group_3("pair"),
    "z4": lambda: cyclic_group(4),
    "z6": lambda: cyclic_group(6),
}


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--group", choices=sorted(GROUPS), default="s3")
    parser.add_argument("--arity", type=int, default=2)
    parser.add_argument("--length", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    group = GROUPS[args.group]()
    space = get_space(group, args.arity)
    words = all_words(len(space.alphabet), args.length)
    long_word = np.ascontiguousarray(words[-1])
    print(
        f"instance: {group.name} arity={args.arity} "
        f"tuples={space.total} words={words.shape[0]} length={args.length}"
    )

    impls = backends()
    if "numba" not in impls:
        print("numba backend not importable; benchmarking numpy only")

    cases = {
        "evolve_state (one word)": lambda b: b.evolve_state(
            group.table, space.rhs, long_word, space.init_values()
        ),
        "batch_membership": lambda b: b.batch_membership(
            group.table, space.rhs, group.identity, space.init_values(), words
        ),
        "batch_first_witness": lambda b: b.batch_first_witness(
            group.table,
            group.inverses,
            space.generator_elements,
            group.order,
            args.arity,
            space.strides,
            group.identity,
            words,
        ),
    }

    # warm up (includes JIT compilation for numba)
    for backend in impls.values():
        for case in cases.values():
            case(backend)

    width = max(len(name) for name in cases)
    header = f"{'kernel':<{width}}  " + "  ".join(f"{n:>12}" for n in impls)
    if len(impls) > 1:
        header += f"  {'speedup':>8}"
    print(header)
    for name, case in cases.items():
        times = {n: time_call(lambda b=b: case(b), args.repeat) for n, b in impls.items()}
        row = f"{name:<{width}}  " + "  ".join(
            f"{times[n] * 1e3:>10.2f}ms" for n in impls
        )
        if "numba" in times:
            row += f"  {times['numpy'] / times['numba']:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
