"""Compare the printed and corrected forms of condition H against the exact solver
on every theta where they differ, over a range wider than the acceptance sweep.

    python scripts/probe_condition_h.py --max-p 6 --max-len 12 --max-vertices 30
"""

import argparse

from thetapack.formula import pcn_theta
from thetapack.graph import build_theta, distance_matrix
from thetapack.solver import pcn_exact
from thetapack.sweep import theta_specs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=6)
    ap.add_argument("--max-len", type=int, default=12)
    ap.add_argument("--max-vertices", type=int, default=30)
    args = ap.parse_args()

    differ = printed_right = corrected_right = 0
    for spec in theta_specs(args.max_p, args.max_len, args.max_vertices, min_p=3):
        k, _ = pcn_theta(spec)
        kp, _ = pcn_theta(spec, published=True)
        if k == kp:
            continue
        differ += 1
        exact = pcn_exact(distance_matrix(build_theta(spec)))[0]
        printed_right += exact == kp
        corrected_right += exact == k
        if exact != k:
            print("corrected form wrong on", spec, exact)
    print(f"{differ} thetas where the forms differ; printed right on {printed_right}, "
          f"corrected right on {corrected_right}")


if __name__ == "__main__":
    main()
