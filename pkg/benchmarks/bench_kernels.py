"""Compare the compiled kernels against the pure-Python fallback.

Two measurements: a matrix-product microbenchmark run in-process against
both kernel modules, and (with --closure) the full group enumeration run
in a subprocess per backend so each one imports cleanly.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--closure]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from czorbits.matrices import C2_GENERATORS, I4


def random_products(count, seed=5):
    rng = random.Random(seed)
    gens = list(C2_GENERATORS.values())
    mats = []
    for _ in range(count):
        m = I4
        for _ in range(rng.randint(3, 12)):
            m = m * rng.choice(gens)
        mats.append(m.data)
    return mats


def bench_module(mod, mats, repeat):
    pairs = list(zip(mats, mats[1:] + mats[:1]))
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for x, y in pairs:
            mod.mat_mul(x, y, 4)
        best = min(best, time.perf_counter() - start)
    return best / len(pairs)


def bench_closure(backend):
    code = (
        "import time, czorbits.kernels as k;"
        "from czorbits.groups import build_c2;"
        "t = time.perf_counter(); c2 = build_c2();"
        "print(k.BACKEND, len(c2), time.perf_counter() - t)"
    )
    env = dict(os.environ, CZORBITS_KERNEL=backend)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    name, size, secs = out.stdout.split()
    assert int(size) == 92160
    return name, float(secs)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repeats")
    parser.add_argument(
        "--count", type=int, default=2000, help="matrices in the product bench"
    )
    parser.add_argument(
        "--closure",
        action="store_true",
        help="also time the full 92160-element enumeration per backend",
    )
    args = parser.parse_args()

    from czorbits import _kernels_py

    backends = [("pure-python", _kernels_py)]
    try:
        from czorbits import _kernels_cy

        backends.append(("cython", _kernels_cy))
    except ImportError:
        print("compiled kernels unavailable; timing the fallback only")

    mats = random_products(args.count)
    results = {}
    for name, mod in backends:
        per_call = bench_module(mod, mats, args.repeat)
        results[name] = per_call
        print(f"mat_mul 4x4  {name:<12} {per_call * 1e6:8.2f} us/product")
    if len(results) == 2:
        ratio = results["pure-python"] / results["cython"]
        print(f"speedup      cython is {ratio:.1f}x faster")

    if args.closure:
        for backend in ("py", "cy") if len(backends) == 2 else ("py",):
            name, secs = bench_closure(backend)
            print(f"c2 closure   {name:<12} {secs:8.2f} s")


if __name__ == "__main__":
    main()
