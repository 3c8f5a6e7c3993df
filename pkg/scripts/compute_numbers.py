"""Tabulate the small sum-forcing and union-forcing numbers with certificates.

Usage:  python scripts/compute_numbers.py [output-dir] [--node-budget N]
"""

import argparse
import time
from pathlib import Path

from sumcert.certificate import write_certificate
from sumcert.search import Budget, fs_number, fu_number


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("out_dir", nargs="?", type=Path, default=Path("certificates"))
    ap.add_argument("--node-budget", type=int, default=20_000_000)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    budget = Budget(nodes=args.node_budget)

    jobs = [
        ("fs", fs_number, 2, 1), ("fs", fs_number, 2, 2), ("fs", fs_number, 2, 3),
        ("fs", fs_number, 3, 1), ("fs", fs_number, 3, 2),
        ("fu", fu_number, 2, 1), ("fu", fu_number, 2, 2),
    ]
    for kind, fn, k, t in jobs:
        t0 = time.perf_counter()
        cert = fn(k, t, budget=budget)
        elapsed = time.perf_counter() - t0
        value = cert.payload_value("value") if cert.verdict == "exhausted" else "?"
        print(f"{kind}({k},{t}) = {value:>3}   [{cert.verdict}, {elapsed:.2f}s]")
        write_certificate(cert, str(args.out_dir / f"{kind}-number-k{k}-t{t}.cert"))
    return 0


if __name__ == "__main__":
    main()
