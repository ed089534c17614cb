"""Cross-check the recognizers against brute force, then time them.

Run with ``python demos/03_census_and_timing.py``. Takes about 10 seconds.
"""

from catprime.cli import bench_rows
from catprime.oracle import run_census

# %% Every labeled graph on up to five vertices goes through the fast
# recognizers and the brute-force oracles; the two must agree.
for n in range(1, 6):
    print(run_census(n).summary())

# %% A random sample of seven-vertex graphs, where exhaustive search would
# take too long.
print(run_census(7, sample=500, seed=1).summary())

# %% Recognition plus network construction on sparse random cographs and on
# cographs with five random edge flips. Time should grow roughly tenfold.
print("\nkind                n       m   total_s")
for kind, n, m, _, t_rec, t_exp in bench_rows([1_000, 10_000, 50_000], seed=0, repeat=1):
    print(f"{kind:18s} {n:6d} {m:7d}  {t_rec + t_exp:.3f}")
