"""Run every claim suite at desk scale and write one certificate per claim.

Usage:  python scripts/run_audits.py [output-dir]
"""

import sys
import time
from pathlib import Path

from sumcert.audit import ALL_CLAIMS, audit_coloring_claim, recheck_certificate
from sumcert.certificate import write_certificate

GRIDS = {
    "thm2.8-samesign": dict(max_den=6, max_val=8),
    "thm2.8-allpairs": dict(max_den=5, max_val=4),
    "thm2.8-signed": dict(max_den=6, max_val=8),
    "thm2.9-samesign": dict(max_den=6, max_val=8),
    "thm2.10-arithmetic": dict(max_support=64),
    "thm2.11": dict(dim=2, coef_bound=2),
    "thm3.6": dict(dim=2, coef_bound=2),
}


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("certificates")
    out_dir.mkdir(parents=True, exist_ok=True)
    width = max(len(c) for c in ALL_CLAIMS)
    worst = 0
    for claim in ALL_CLAIMS:
        t0 = time.perf_counter()
        cert = audit_coloring_claim(claim, **GRIDS[claim])
        elapsed = time.perf_counter() - t0
        ok = recheck_certificate(cert)
        write_certificate(cert, str(out_dir / f"{claim}.cert"))
        detail = "" if cert.verdict == "exhausted" else f"  {dict(cert.payload)}"
        print(f"{claim:<{width}}  {cert.verdict:<15} recheck={ok}  {elapsed:6.2f}s{detail}")
        worst = max(worst, elapsed)
    print(f"certificates written to {out_dir}/ (slowest suite {worst:.2f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
