"""Compare the pure-Python and compiled bitmask kernels.

Run:  python benchmarks/bench_kernels.py [--bits N] [--repeat K]

Times the hot table builds (semiopen family, ssint/sscl tables) and the
per-set operators on random topologies of the requested size, against
whichever backends are importable. The compiled backend only accepts
lattices that fit a 64-bit word; larger inputs fall back to pure Python
inside the dispatcher, so only in-range sizes are compared here.
"""
from __future__ import annotations

import argparse
import statistics
import time

from softtopo import _kernels_py as py_backend
from softtopo.explorer import auto_signature, random_topology

try:
    from softtopo import _kernels_cy as cy_backend
except ImportError:
    cy_backend = None


def _shapes(bits: int):
    for n in range(1, bits + 1):
        if bits % n == 0:
            return n, bits // n
    return bits, 1


def bench(bits: int, repeat: int, seeds: range) -> None:
    n, m = _shapes(bits)
    sig = auto_signature(n, m)
    spaces = [random_topology(sig, s, 0.3) for s in seeds]
    full = sig.full_mask
    backends = [("pure", py_backend)] + ([("compiled", cy_backend)] if cy_backend else [])

    jobs = [
        ("semiopen_masks", lambda b, opens: b.semiopen_masks(opens, full)),
        ("semiclosed_masks", lambda b, opens: b.semiclosed_masks(opens, full)),
        ("ssint_table", lambda b, opens: b.ssint_table(opens, full)),
        ("sscl_table", lambda b, opens: b.sscl_table(opens, full)),
        ("interior x lattice", lambda b, opens: [b.interior_mask(g, opens) for g in range(full + 1)]),
        ("closure x lattice", lambda b, opens: [b.closure_mask(g, opens, full) for g in range(full + 1)]),
    ]

    print(f"bits={bits}  spaces={len(spaces)}  repeat={repeat}")
    header = f"{'operation':22s}" + "".join(f"{name:>14s}" for name, _ in backends)
    if cy_backend:
        header += f"{'speedup':>10s}"
    print(header)
    for jobname, fn in jobs:
        cols = []
        for _, backend in backends:
            times = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                for t in spaces:
                    fn(backend, t.open_masks())
                times.append(time.perf_counter() - t0)
            cols.append(statistics.median(times))
        row = f"{jobname:22s}" + "".join(f"{c * 1000:>12.2f}ms" for c in cols)
        if len(cols) == 2 and cols[1] > 0:
            row += f"{cols[0] / cols[1]:>9.1f}x"
        print(row)

    # cross-check while we are here: identical outputs on every space
    for t in spaces:
        opens = t.open_masks()
        for _, backend in backends[1:]:
            assert backend.semiopen_masks(opens, full) == py_backend.semiopen_masks(opens, full)
            assert backend.sscl_table(opens, full) == py_backend.sscl_table(opens, full)
    print("backend agreement: ok" if cy_backend else "compiled backend not built; timed pure only")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bits", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--spaces", type=int, default=5)
    args = ap.parse_args()
    bench(args.bits, args.repeat, range(args.spaces))


if __name__ == "__main__":
    main()
