"""Four independent routes to the characteristic polynomial, checked against region counts."""
import time

from braidlevel.arrangement import make_preset, parse_spec
from braidlevel.charpoly import METHODS, charpoly, zaslavsky_counts
from braidlevel.digraph import enumerate_census
from braidlevel.polyalg import format_poly, to_basis

spec = parse_spec("n=3;A={1,2}")
for method in METHODS:
    t0 = time.perf_counter()
    res = charpoly(spec, method)
    print(f"{method:>12}: {format_poly(res.poly)}  ({time.perf_counter() - t0:.4f}s)")

# %% binomial coefficients are the signed level counts
print("binomial basis:", [str(c) for c in to_basis(charpoly(spec).poly, "binomial").coeffs])

# %% Zaslavsky: chi(-1) counts regions, chi(1) counts level-1 regions
for name, b in [("shi", 1), ("catalan", 1), ("linial", 2), ("semiorder", 1)]:
    s = make_preset(name, 4, b=b)
    r, r1 = zaslavsky_counts(charpoly(s, "whitney"))
    c = enumerate_census(s)
    print(f"{name:>9} b={b}: {format_poly(charpoly(s).poly):<34} regions {r} = {c.total}, level 1 {r1} = {c[1]}")
