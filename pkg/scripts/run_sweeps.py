"""Run both cross-check sweeps and write JSON-lines reports.

    python scripts/run_sweeps.py --out results/
"""

import argparse
import json
import time
from pathlib import Path

from thetapack.sweep import run_sweep_oriented, run_sweep_undirected, tally


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results")
    ap.add_argument("--max-p", type=int, default=5)
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--max-vertices", type=int, default=24)
    ap.add_argument("--max-edges", type=int, default=12)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    t = time.time()
    und = run_sweep_undirected(args.max_p, args.max_len, args.max_vertices)
    (out / "undirected.jsonl").write_text(und.to_text())
    print(json.dumps(und.summary()), f"{time.time() - t:.1f}s")
    for (trace, k), n in sorted(tally(und).items()):
        print(f"  {trace:>13} pcn={k}: {n}")

    t = time.time()
    ori = run_sweep_oriented(args.max_edges)
    (out / "oriented.jsonl").write_text(ori.to_text())
    print(json.dumps(ori.summary()), f"{time.time() - t:.1f}s")
    values = {}
    for row in ori.rows:
        values[row.oracle] = values.get(row.oracle, 0) + 1
    print("  oriented pcn distribution:", dict(sorted(values.items())))
    return max(und.exit_code(), ori.exit_code())


if __name__ == "__main__":
    raise SystemExit(main())
