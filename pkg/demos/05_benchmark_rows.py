"""
Benchmark rows
==============

Each benchmark entry generates a seeded batch of instances at fixed
(m, n), measures the LP value, the heuristic objective, and (optionally)
an exact optimum, and emits one CSV row of averages. The LP column
averages per-instance ceilings; the max distance error compares the
heuristic objective against the fractional LP optimum, so values below
one signal certified-or-nearly-certified runs.

The command line gives the same table:

    closest-string bench --m-list 4,6 --n-list 20 --alphabet ACGT \
        --batch 3 --seed 1 --algs c,bnb
"""

from closest_string import Alphabet
from closest_string.bench import run_bench, rows_to_csv

rows = run_bench(
    m_list=[4, 6],
    n_list=[14, 20],
    alphabet=Alphabet.from_string("ACGT"),
    batch=3,
    seed=1,
    alg="c",
    exact="bnb",
    time_limit=5.0,
)
print(rows_to_csv(rows))

for row in rows:
    gap = row.alg_avg - row.lp_avg
    print(
        f"m={row.m} n={row.n}: heuristic sits {gap:.2f} above the LP "
        f"ceiling average; worst per-instance error {row.max_dist_error:.2f}"
    )
