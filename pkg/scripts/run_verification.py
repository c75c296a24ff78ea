#!/usr/bin/env python3
"""Run the full verification suite over a battery of fixtures.

Covers the named small fixtures, a batch of seeded random sandwich
matrices, and optionally a 512-element fixture.  Exits nonzero if any
check fails.
"""

from __future__ import annotations

import argparse
import random
import time

from crossconn import ReesSemigroup, SandwichMatrix, builtin
from crossconn.checks import failures
from crossconn.verify import full_suite


def random_matrix(group, n_lambda, n_i, rng):
    return SandwichMatrix(
        group,
        [[rng.randrange(group.order) for _ in range(n_i)] for _ in range(n_lambda)],
    )


def fixture_battery(seed: int, include_large: bool):
    z2 = builtin("cyclic", 2)
    z3 = builtin("cyclic", 3)
    s3 = builtin("symmetric", 3)
    klein = builtin("klein")
    rng = random.Random(seed)

    fixtures = [
        ("S1 = M[Z2;2,2]", SandwichMatrix(z2, [[0, 0], [0, 1]])),
        ("Z3 2x2", SandwichMatrix(z3, [[0, 1], [2, 0]])),
        ("S3 2x2", SandwichMatrix(s3, [[0, 3], [1, 0]])),
        ("klein identity 2x2", SandwichMatrix(klein, [[0, 0], [0, 0]])),
        ("Z2 1x3", SandwichMatrix(z2, [[0, 1, 1]])),
        ("Z3 3x1", SandwichMatrix(z3, [[1], [2], [0]])),
    ]
    for k in range(6):
        group = (z2, z3, s3)[k % 3]
        rows, cols = rng.randint(1, 3), rng.randint(1, 3)
        fixtures.append((f"random #{k}", random_matrix(group, rows, cols, rng)))
    if include_large:
        entries = [[(lam * i) % 2 for i in range(16)] for lam in range(16)]
        fixtures.append(("Z2 16x16 (|S|=512)", SandwichMatrix(z2, entries)))
    return fixtures


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20260810)
    parser.add_argument("--include-large", action="store_true")
    args = parser.parse_args()

    exit_code = 0
    for name, matrix in fixture_battery(args.seed, args.include_large):
        S = ReesSemigroup(matrix)
        start = time.perf_counter()
        checks = full_suite(S)
        elapsed = time.perf_counter() - start
        bad = failures(checks)
        skipped = sum(1 for c in checks if c.passed is None)
        status = "PASS" if not bad else "FAIL"
        print(
            f"{status}  {name:24s}  |S|={S.size:<4d} "
            f"{len(checks) - skipped - len(bad)} ok, {skipped} skipped  ({elapsed:.2f}s)"
        )
        for c in bad:
            print(f"      FAIL {c.name}: {c.witness}")
            exit_code = 2
    return exit_code


if __name__ == "__main__":
    raise SystemExit(main())
