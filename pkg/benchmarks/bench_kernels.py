"""Compare the compiled and pure-Python sparse kernels.

Times the exact CSC matmul and linear-combination kernels on operators
drawn from the actual workload (algebra generator images and random
Gaussian-integer matrices), then a small end-to-end verification.

Run:  python benchmarks/bench_kernels.py
"""

import random
import subprocess
import sys
import time

from fockduality import _kernel_py
from fockduality.amplitude import Amp
from fockduality.params import ModelParams, ORTHOGONAL
from fockduality import liealg
from fockduality.sparse import SparseOperator

try:
    from fockduality import _kernel_cy
except ImportError:
    _kernel_cy = None


def random_operator(rng, dim, nnz):
    entries = {}
    for _ in range(nnz):
        entries[(rng.randrange(dim), rng.randrange(dim))] = \
            Amp(rng.randint(-5, 5), rng.randint(-5, 5))
    return SparseOperator.from_entries(
        dim, [(r, c, v) for (r, c), v in entries.items()])


def time_kernel(impl, fn_name, args, repeat):
    fn = getattr(impl, fn_name)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_csc(dim, nnz, repeat=5):
    rng = random.Random(42)
    a = random_operator(rng, dim, nnz)
    b = random_operator(rng, dim, nnz)
    rows = [("csc_matmul", (dim, *a.csc, *b.csc)),
            ("csc_lincomb", (dim, 2, -1, *a.csc, 0, 3, *b.csc))]
    print(f"\nrandom operators, dim {dim}, nnz ~{nnz}")
    for name, args in rows:
        t_py = time_kernel(_kernel_py, name, args, repeat)
        line = f"  {name:12s}  python {t_py * 1e3:8.2f} ms"
        if _kernel_cy is not None:
            t_cy = time_kernel(_kernel_cy, name, args, repeat)
            line += f"  cython {t_cy * 1e3:8.2f} ms  speedup {t_py / t_cy:5.1f}x"
        print(line)


def bench_generator_products(d, k, repeat=3):
    params = ModelParams(d, k, ORTHOGONAL)
    images = liealg.kside_basis_images(params)
    print(f"\ngenerator commutators, d={d}, k={k}, dim {params.dim}")
    for impl, label in ((_kernel_py, "python"), (_kernel_cy, "cython")):
        if impl is None:
            continue
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            for i, x in enumerate(images):
                for y in images[i + 1:]:
                    a, b = x.csc, y.csc
                    ab = impl.csc_matmul(params.dim, *a, *b)
                    ba = impl.csc_matmul(params.dim, *b, *a)
                    impl.csc_lincomb(params.dim, 1, 0, *ab, -1, 0, *ba)
            best = min(best, time.perf_counter() - t0)
        print(f"  {label}: {best * 1e3:8.1f} ms")


def bench_end_to_end():
    print("\nend-to-end: fockduality suite (subprocess)")
    for env_extra, label in (({}, "default"),
                             ({"FOCKDUALITY_PURE": "1"}, "pure python")):
        env = {"PATH": "/usr/bin:/bin", **env_extra}
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-m", "fockduality.cli", "suite"],
                       capture_output=True, env=env, check=True)
        print(f"  {label:12s} {time.perf_counter() - t0:6.2f} s")


def main():
    if _kernel_cy is None:
        print("compiled kernel not available; timing pure Python only")
    bench_csc(256, 2000)
    bench_csc(4096, 30000)
    # even d keeps the Cartan images Gaussian-integer, so the CSC
    # encoding exists for every generator
    bench_generator_products(4, 2)
    bench_generator_products(2, 5)
    bench_end_to_end()


if __name__ == "__main__":
    main()
