"""Residuals of the conjectured overlay identities: the product of a
two-diagonal strip with the next strip-with-foot, minus the tableau obtained
by filling the staircase hole, appears to be a rational multiple of the
repeated (1,3)-block value.  This scan reports the measured ratios.

Run:  python demos/05_conjecture_scan.py [cutoff]
"""

import sys

from smzv import conjecture_residual

M = int(sys.argv[1]) if len(sys.argv) > 1 else 50_000

print(f"overlay-residual ratios at cutoff {M} (heuristic bounds)")
print(f"{'case':5s} {'measured ratio':>26s} {'conjectured':>26s} {'bound':>10s} status")
for case in ("W8", "W16", "W24", "W32"):
    r = conjecture_residual(case, M=M, dps=50)
    print(f"{case:5s} {r.ratio.str_digits(20):>26s} {str(r.conjectured):>26s} "
          f"{r.error_bound.str_digits(3):>10s} {r.status}")
