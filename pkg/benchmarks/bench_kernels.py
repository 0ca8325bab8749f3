"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs cold (caches cleared) under both backends and the results are
checked for equality before timings are reported.
"""
import argparse
import random
import time

from vlplus import kernels
from vlplus.fock import partitions


def field_cases(seed=0, count=400):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        two_k = 2 * rng.randint(1, 4)
        factors = rng.choice(list(partitions(rng.randint(1, 4))))
        mono = rng.choice(list(partitions(rng.randint(0, 8))))
        m = rng.choice((-1, 0, 1))
        out.append((factors, m, rng.randint(-10, 4), mono, two_k, 1, rng.choice((-two_k, 0, two_k))))
    return out


def det_cases(seed=1):
    rng = random.Random(seed)
    return [[[rng.randint(-99, 99) for _ in range(n)] for _ in range(n)]
            for n in (10, 20, 40)]


def workloads(cases, dets):
    return {
        "apply_field x400": lambda impl: [impl.apply_field(*c) for c in cases],
        "bareiss_det 10/20/40": lambda impl: [impl.bareiss_det(m) for m in dets],
        "creation_series 30, 36": lambda impl: [impl.creation_series(t, 2, 1, 1) for t in (30, 36)],
    }


def run_residue():
    from vlplus.lattice import E_m
    from vlplus.zhu import ov_residue

    return ov_residue(E_m(2, 2), E_m(2, 2), 15)


def timed(fn):
    t0 = time.perf_counter()
    res = fn()
    return time.perf_counter() - t0, res


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        kernels.raw("cython")
    except ImportError:
        print("compiled extension not built; nothing to compare")
        return
    cases, dets = field_cases(), det_cases()
    jobs = [(name, fn) for name, fn in workloads(cases, dets).items()]
    jobs.append(("ov_residue(E^2, E^2, 15), k=2", None))
    rows = []
    for name, fn in jobs:
        best, results = {}, {}
        for backend in ("python", "cython"):
            times = []
            for _ in range(args.repeat):
                kernels.use_backend(backend)
                kernels.clear_caches()
                impl = kernels.raw(backend)
                t, res = timed(run_residue if fn is None else (lambda: fn(impl)))
                times.append(t)
            best[backend], results[backend] = min(times), res
        assert results["python"] == results["cython"], f"{name}: backends disagree"
        rows.append((name, best["python"], best["cython"]))
    kernels.use_backend("cython")
    print(f"{'workload':<32} {'python':>9} {'cython':>9} {'speedup':>8}")
    for name, py, cy in rows:
        print(f"{name:<32} {py:>8.3f}s {cy:>8.3f}s {py / cy:>7.2f}x")


if __name__ == "__main__":
    main()
