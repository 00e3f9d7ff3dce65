"""Compare the compiled and pure-Python kernels on the two hot loops.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends must return identical results; the script exits nonzero if
they do not.
"""
import argparse
import sys
import time

import numpy as np

from lyalg import GF, adjoint, from_lie, kernels
from lyalg.deformation import rota_baxter0_pair


def heisenberg(F):
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 1, 2], c[1, 0, 2] = 1, -1
    return from_lie(F, c)


def scan_case(p):
    F = GF(p)
    mp = rota_baxter0_pair(adjoint(heisenberg(F)))
    total = p ** (mp.g.dim * mp.h.dim)
    args = (p, mp.g.dim, mp.h.dim, mp.g.c, mp.g.t, mp.h.c, mp.h.t, mp.R, mp.Mu, mp.Psi, mp.Nu, mp.Drm, mp.Dpn, 0, total)
    return f"scan {total} maps over GF({p})", lambda: kernels.scan_defmaps_modp(*args)


def rref_case(p, n, seed=0):
    M = np.random.default_rng(seed).integers(0, p, (n, n + 7))
    return f"rref {n}x{n + 7} over GF({p})", lambda: kernels.rref_modp(M.copy(), p)


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = kernels.available()
    print("backends:", ", ".join(backends))
    cases = [scan_case(3), scan_case(2), rref_case(7, 200), rref_case(8191, 120)]
    print(f"{'case':34s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    ok = True
    prev = kernels.backend()
    try:
        for name, fn in cases:
            times, outs = [], []
            for b in backends:
                kernels.use_backend(b)
                t, out = timed(fn, args.repeat)
                times.append(t)
                outs.append(out)
            agree = all(same(outs[0], o) for o in outs[1:])
            ok &= agree
            row = f"{name:34s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
            if len(times) > 1:
                row += f"{times[1] / times[0]:11.1f}x"
            print(row + ("" if agree else "   MISMATCH"))
    finally:
        kernels.use_backend(prev)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
