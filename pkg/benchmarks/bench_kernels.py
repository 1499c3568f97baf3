"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--sizes 8 16 32] [--repeat 5]

Prints the best-of-``repeat`` wall time per call for each kernel and size,
and the speedup of the compiled module.  Run after ``pip install -e .`` so
the extension is built.
"""
import argparse
import timeit

import numpy as np

from eframes._backend import available_backends


def cases(n, rng):
    def c(*shape):
        return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)

    H = c(n, n)
    H = np.ascontiguousarray(0.5 * (H + H.conj().T))
    A = np.ascontiguousarray(c(n, n) + n * np.eye(n))
    E, T = c(n, n), c(n, n)
    m, f = c(n), c(n)
    return {
        "jacobi_eigh": lambda k: k.jacobi_eigh(H, 1e-12 * np.linalg.norm(H), 100),
        "gauss_jordan_inverse": lambda k: k.gauss_jordan_inverse(A, 1e-14),
        "etransform_direct": lambda k: k.etransform_direct(E, T),
        "multiplier_direct": lambda k: k.multiplier_direct(m, E, T, E, T, f),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not available; timing the Python kernels only")
    names = sorted(backends)
    header = f"{'kernel':<22}{'n':>5}" + "".join(f"{b + ' [ms]':>16}" for b in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        for kernel, call in cases(n, np.random.default_rng([args.seed, n])).items():
            times = {}
            for b in names:
                k = backends[b]
                call(k)
                number = 3
                times[b] = min(timeit.repeat(lambda: call(k), number=number, repeat=args.repeat)) / number
            line = f"{kernel:<22}{n:>5}" + "".join(f"{times[b] * 1e3:>16.3f}" for b in names)
            if len(names) == 2:
                line += f"{times['python'] / times['cython']:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
