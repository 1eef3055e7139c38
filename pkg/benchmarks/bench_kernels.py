"""Compare the compiled and pure-Python kernels.

Micro benchmarks call both kernel modules directly.  End-to-end timings run
each backend in a fresh interpreter, since the backend is fixed at import.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--n 8]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from qgoncarov import _pykernels

try:
    from qgoncarov import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = """
import time
from qgoncarov import BACKEND, DeltaOperator, hahn_sequence, ONE
from qgoncarov.combinat import q_fubini
from qgoncarov.goncarov import GoncarovBasis, seeded_grids, verify_biorthogonality
op = DeltaOperator(hahn_sequence(ONE))
grid = seeded_grids(42, {n} + 2)[1]
t0 = time.perf_counter()
GoncarovBasis(op, grid).t({n})
verify_biorthogonality(op, grid, {n})
t1 = time.perf_counter()
q_fubini(14)
t2 = time.perf_counter()
print(BACKEND, t1 - t0, t2 - t1)
"""


def _poly(rng, deg, bits):
    return tuple(rng.randint(-(1 << bits), 1 << bits) for _ in range(deg)) + (rng.randint(1, 1 << bits),)


def micro(repeat):
    rng = random.Random(1)
    small = [(_poly(rng, 12, 20), _poly(rng, 12, 20)) for _ in range(50)]
    big = [(_poly(rng, 12, 90), _poly(rng, 12, 90)) for _ in range(50)]
    gcd_in = []
    for _ in range(20):
        g, a, b = _poly(rng, 3, 6), _poly(rng, 4, 6), _poly(rng, 4, 6)
        gcd_in.append((_pykernels.mul(g, a), _pykernels.mul(g, b)))
    cases = [
        ("mul word-size", "mul", small),
        ("mul bignum", "mul", big),
        ("divexact", "divexact", [(_pykernels.mul(a, b), b) for a, b in small]),
        ("pgcd", "pgcd", gcd_in),
    ]
    mods = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<16}" + "".join(f"{name:>12}" for name, _ in mods) + "   speedup")
    for label, fname, args in cases:
        row = []
        for _, mod in mods:
            fn = getattr(mod, fname)
            t = min(timeit.repeat(lambda: [fn(a, b) for a, b in args], number=20, repeat=repeat))
            row.append(t)
        speed = f"{row[0] / row[1]:8.2f}x" if len(row) > 1 else "       -"
        print(f"{label:<16}" + "".join(f"{t * 1e3:10.2f}ms" for t in row) + "  " + speed)


def end_to_end(n, repeat):
    print(f"\nend to end: hahn basis t_{n} + biorthogonality, then q_fubini(14)")
    for pure in ("1", "0"):
        env = dict(os.environ, QGONCAROV_PURE_PYTHON=pure)
        best = None
        for _ in range(repeat):
            out = subprocess.run([sys.executable, "-c", END_TO_END.format(n=n)], env=env,
                                 capture_output=True, text=True, check=True).stdout.split()
            cur = (float(out[1]), float(out[2]))
            best = cur if best is None else (min(best[0], cur[0]), min(best[1], cur[1]))
        print(f"  {out[0]:<8} basis {best[0]:.3f}s   fubini {best[1]:.3f}s")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=8)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; showing the fallback only")
    micro(args.repeat)
    end_to_end(args.n, args.repeat)


if __name__ == "__main__":
    main()
