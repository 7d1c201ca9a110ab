"""Compares `cyclomat table` output with the numeric oracle."""
import json
import os
import subprocess
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
try:
    import gauss_det_oracle as oracle
except ImportError as e:  # mpmath missing
    print(f"skipped: {e}")
    sys.exit(77)

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13]


def prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            n = 0
            while q % p == 0:
                q //= p
                n += 1
            return (p, n) if q == 1 else None


def main():
    out = subprocess.run(
        [sys.argv[1], "table", "--q", ",".join(map(str, QS)), "--format", "json", "--no-header"],
        check=True, capture_output=True, text=True).stdout
    rows = json.loads(out)["rows"]
    bad = 0
    for r in rows:
        q, k = int(r["q"]), int(r["k"])
        p, n = prime_power(q)
        a, _ = oracle.det_A(p, n, k)
        b, _ = oracle.det_B(p, n, k)
        ok = Fraction(r["det_A"]) == a and Fraction(r["det_B"]) == b
        bad += not ok
        print(f"{'ok ' if ok else 'BAD'} q={q} k={k} det_A={r['det_A']} (oracle {a}) "
              f"det_B={r['det_B']} (oracle {b})")
    expected_rows = sum(1 for q in QS for k in range(1, q) if (q - 1) % k == 0)
    if len(rows) != expected_rows:
        print(f"row count {len(rows)}, expected {expected_rows}")
        bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
