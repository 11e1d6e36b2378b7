"""Level counts are built from level-1 counts: convolutions and exponential series."""
from braidlevel.arrangement import make_spec
from braidlevel.levels import R1Table, census_family, egf_truncated, esa_check, rl_from_r1

spec = make_spec(1, [1, 2])
N = 5
cens = census_family(spec, N)
table = R1Table(tuple(c[1] for c in cens[1:]))
print("r_1(B_n) for n = 1..5:", table.values)

# %% r_l from compositions of n into l parts
for n in range(1, N + 1):
    print(f"n={n}", [rl_from_r1(n, l, table) for l in range(n + 1)], "census", list(cens[n].counts))

# %% R_l = R_1^l as truncated exponential series
for l in range(1, 4):
    print(f"R_{l}:", egf_truncated(l, N, table))

# %% the whole family is an exponential sequence
print("chi series = (signed region series)^(-t) up to x^4:", esa_check(spec, 4))
