"""Closed level-count formulas next to the census, including the Linial correction."""
from fractions import Fraction

from braidlevel.arrangement import make_preset
from braidlevel.charpoly import interval_spec
from braidlevel.digraph import enumerate_census
from braidlevel.levels import level_rows, level_table, rl_closed_ab, rl_family

# %% Eulerian/Stirling triple sum for A = [-a, b]
for n, a, b in [(3, 0, 1), (4, 1, 2), (4, 0, 3)]:
    formula = [rl_closed_ab(n, l, a, b) for l in range(n + 1)]
    print(f"[{-a},{b}] n={n}: formula {formula} census {list(enumerate_census(interval_spec(n, -a, b)).counts)}")

# %% the three families
for family in ("shi", "catalan", "linial"):
    for b in (1, 2):
        vals = [rl_family(family, 4, l, b) for l in range(5)]
        print(f"{family:>7} b={b} n=4: {vals} census {list(enumerate_census(make_preset(family, 4, b=b)).counts)}")

# %% the Linial sum without the C(n-1, j) factor is not even an integer
strict = [rl_family("linial", 3, l, 1, strict=True) for l in range(4)]
print("without the factor:", [str(Fraction(v)) for v in strict], "with it:", [rl_family("linial", 3, l, 1) for l in range(4)])

# %% CSV level table
print(level_table(level_rows(4, lambda n, l: rl_family("catalan", n, l, 1), "catalan_formula")), end="")
