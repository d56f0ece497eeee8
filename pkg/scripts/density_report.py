"""Trajectory experiment: density decay of the solvable moduli of x^3 + k
and the drift rate of sum mu(n) log n / n over those moduli.

Both quantities are reported, not asserted: the first should decay like
a small negative power of x, the second should settle near a constant
slope kappa against log x.

python3 scripts/density_report.py
python3 scripts/density_report.py --k 4 --max-exp 7
"""

import argparse

from cubicprimes import Polynomial, dset_density, kappa_trajectory


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--min-exp", type=int, default=3)
    ap.add_argument("--max-exp", type=int, default=6)
    args = ap.parse_args()

    f = Polynomial.cubic(args.k)
    checkpoints = [10**e for e in range(args.min_exp, args.max_exp + 1)]

    stats = dset_density(f, checkpoints[-1], checkpoints)
    print(f"solvable moduli of {f}")
    print(f"{'x':>10} {'members':>10} {'ratio':>8}")
    for x, members, ratio in stats.checkpoints:
        print(f"{x:>10} {members:>10} {ratio:>8.4f}")
    print(f"fitted decay exponent: {stats.decay_exponent:.4f}")

    trajectory = kappa_trajectory(f, checkpoints[-1])
    print()
    print("mu(n) log n / n over the same moduli, drift against log x")
    print(f"{'x':>10} {'partial sum':>14}")
    for r in trajectory.records:
        print(f"{r.x:>10} {r.value:>14.6f}")
    print(f"fitted kappa: {trajectory.fitted_kappa:.4f} "
          f"(max fit deviation {trajectory.fit_residual:.4f})")


if __name__ == "__main__":
    main()
