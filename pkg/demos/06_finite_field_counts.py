"""Point counts over Z_q interpolate to chi; numpy does the counting."""
from fractions import Fraction

import numpy as np

from braidlevel.arrangement import make_preset, make_spec
from braidlevel.charpoly import charpoly_finite_field, count_points, prime_bound, primes_above
from braidlevel.polyalg import format_poly

spec = make_preset("shi", 4, b=1)
primes = primes_above(prime_bound(spec), 6)
counts = np.array([count_points(spec, q) for q in primes], dtype=object)
chi = charpoly_finite_field(spec).poly
print("primes:", primes)
print("counts:", counts.tolist())
print("chi(q):", [int(chi(q)) for q in primes])
print("chi =", format_poly(chi))

# %% fraction of Z_q^n off the arrangement tends to 1 as q grows
qs = np.array(primes, dtype=float)
print("density:", np.round(np.array(counts, dtype=float) / qs**spec.n, 4).tolist())

# %% rational offsets are scaled to integers first
half = make_spec(3, [Fraction(1, 2), 1])
print("A={1/2,1}:", format_poly(charpoly_finite_field(half).poly), "(same as A={1,2})")
