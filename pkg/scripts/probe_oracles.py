"""Pre-build oracle probe: pins the expected values the test suite freezes.

Run from the repository root:  python scripts/probe_oracles.py
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracles import (
    fu_avoiding_coloring_exists,
    greedy_basis_nat_slow,
    schur_avoiding_coloring_exists,
)


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"{label}: {out}   [{time.perf_counter() - t0:.2f}s]")
    return out


def main():
    for n in (4, 5):
        timed(f"schur avoiding exists n={n} t=2", lambda n=n: schur_avoiding_coloring_exists(n, 2))
    for n in (13, 14):
        timed(f"schur avoiding exists n={n} t=3", lambda n=n: schur_avoiding_coloring_exists(n, 3))
    for f in (1, 2):
        timed(f"fu avoiding exists F={f} t=1", lambda f=f: fu_avoiding_coloring_exists(f, 1))
    for f in (2, 3, 4, 5, 6):
        got = timed(f"fu avoiding exists F={f} t=2", lambda f=f: fu_avoiding_coloring_exists(f, 2))
        if not got:
            print(f"fu forcing number for t=2 is {f}")
            break
    timed("greedy basis on naturals, 6 steps", lambda: greedy_basis_nat_slow(6))


if __name__ == "__main__":
    main()
