"""Regions of B_3^{1,2} as weighted digraphs, with one witness point each."""
from braidlevel.arrangement import parse_spec
from braidlevel.digraph import decompose, enumerate_census, iter_regions, level, sample_point, strong_components
from braidlevel.geomoracle import geometric_census, recession_cone_dim, system_of

# %% the arrangement x_i - x_j in {1, 2}
spec = parse_spec("n=3;A={1,2}")
census = enumerate_census(spec)
print(spec, "levels r_0..r_3 =", census.counts, "total", census.total)

# %% every region, its strong components and a rational point inside it
for d in iter_regions(spec):
    x = sample_point(d)
    comps = strong_components(d)
    print(d.choices, "level", level(d), "components", comps, "x =", tuple(str(v) for v in x))

# %% the level is also the dimension of the recession cone
dims = sorted(recession_cone_dim(system_of(d)) for d in iter_regions(spec))
print("recession cone dims:", dims)
print("geometric census:", geometric_census(spec).counts)

# %% a level-2 region splits into its strongly connected pieces
d = next(d for d in iter_regions(spec) if level(d) == 2)
parts, pieces = decompose(d)
print("ordered partition", parts, "piece choices", [p.choices for p in pieces])
