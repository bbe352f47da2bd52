"""Compare the compiled and pure-Python split scanners.

Runs ``modularize_case`` on random case forms where the bipartition search
dominates: ``modular`` forms admit no split, so every bipartition is
scanned; ``planted`` forms hide a factorization into a few blocks.

    python benchmarks/bench_scan.py --disjunctions 12 14 16 --rows 64 256
"""

import argparse
import random
import time
from itertools import product

from depdisj import kernels
from depdisj.core import AltVar, canonicalize
from depdisj.modularize import SearchStats, free_combine, is_prime, modularize_case


def random_rows(rng, scope, nrows, card):
    rows = set()
    while len(rows) < nrows:
        rows.add(tuple(AltVar(i, rng.randrange(1, card + 1)) for i in scope))
    return canonicalize(rows)


def modular_case(rng, m, nrows, card=4):
    """Random rows over ``m`` disjunctions, retried until the row count is composite and nothing splits cheaply."""
    while True:
        case = random_rows(rng, range(1, m + 1), nrows, card)
        if not is_prime(len(case)) and all(len(set(case.column(i))) > 1 for i in case.scope):
            return case


def planted_case(rng, m, nrows, blocks=3, card=4):
    scope = list(range(1, m + 1))
    rng.shuffle(scope)
    size = max(1, round(nrows ** (1 / blocks)))
    case = None
    for b in range(blocks):
        part_scope = sorted(scope[b::blocks])
        part = random_rows(rng, part_scope, min(size, card ** len(part_scope)), card)
        case = part if case is None else free_combine(case, part)
    return case


def timed(case, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        stats = SearchStats()
        t0 = time.perf_counter()
        parts = modularize_case(case, stats=stats, backend=backend, max_group_size=None)
        best = min(best, time.perf_counter() - t0)
    return best, parts, stats


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--disjunctions", type=int, nargs="+", default=[10, 12, 14])
    ap.add_argument("--rows", type=int, nargs="+", default=[64, 256])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if kernels.CScanner is None:
        raise SystemExit("compiled scanner not built; run `pip install -e . --no-build-isolation` first")

    rng = random.Random(args.seed)
    header = f"{'kind':8} {'m':>3} {'rows':>5} {'confinements':>12} {'python s':>10} {'cython s':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for kind, make in (("modular", modular_case), ("planted", planted_case)):
        for m in args.disjunctions:
            for nrows in args.rows:
                case = make(rng, m, nrows)
                t_py, parts_py, stats_py = timed(case, "python", args.repeat)
                t_cy, parts_cy, stats_cy = timed(case, "cython", args.repeat)
                assert parts_py == parts_cy and stats_py == stats_cy
                print(
                    f"{kind:8} {m:>3} {len(case):>5} {stats_cy.confinements:>12}"
                    f" {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>7.1f}x"
                )


if __name__ == "__main__":
    main()
