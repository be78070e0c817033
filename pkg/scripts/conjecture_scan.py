"""Search orientations of theta graphs with all paths of length >= min-len
for weak-distance pcn 5, and list any hits.

    python scripts/conjecture_scan.py --min-len 4 --max-len 6 --max-p 3
"""

import argparse
import time
from collections import Counter
from pathlib import Path

from thetapack.oriented import conjecture_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-len", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--max-p", type=int, default=3)
    ap.add_argument("--out", help="write the full report here")
    args = ap.parse_args()

    t = time.time()
    report = conjecture_scan(args.min_len, args.max_len, args.max_p)
    if args.out:
        Path(args.out).write_text(report.to_text())
    by_spec = Counter()
    for r in report.records:
        by_spec[r.lengths, r.pcn] += 1
    for (lengths, k), n in sorted(by_spec.items()):
        print(f"{str(list(lengths)):>12}  pcn={k}: {n}")
    print(report.summary(), f"{time.time() - t:.1f}s")
    for r in report.hits:
        print("HIT", list(r.lengths), r.arcs)


if __name__ == "__main__":
    main()
