#!/usr/bin/env python3
"""Print the largest mixing factors of decreasing monomial codes for m = 1..10,
unrestricted and with the code rate capped at 1/2."""

import argparse

from polarwd import max_mixing_factor, max_mixing_factor_rate_half


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=10)
    args = parser.parse_args()

    print(f"{'m':>3} {'n':>6} {'gamma_max':>10} {'rate<=1/2':>10}")
    for m in range(1, args.max_m + 1):
        best, _ = max_mixing_factor(m)
        capped = max_mixing_factor_rate_half(m)
        print(f"{m:>3} {1 << m:>6} {best:>10} {capped:>10}")


if __name__ == "__main__":
    main()
