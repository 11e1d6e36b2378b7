"""Exact real roots of chi for interval deformations via Sturm sequences."""
from braidlevel.charpoly import charpoly, interval_spec
from braidlevel.polyalg import format_poly
from braidlevel.roots import sturm_count, symmetry_identity_check, verify_root_structure

# %% inside the hypothesis b - a >= n - 1 only 0 and n(a+b+1)/2 survive
for n, a, b in [(2, 0, 1), (3, 0, 2), (4, 1, 4), (5, 0, 4)]:
    rep = verify_root_structure(n, a, b)
    roots = [(str(r), k) for r, k in rep.certified_roots]
    print(f"n={n} [{-a},{b}]: {rep.real_root_count} real roots {roots} verdict {rep.verdict}")

# %% outside it the prediction may fail, and the report says so
for n, b in [(4, 1), (5, 2)]:
    p = charpoly(interval_spec(n, 0, b), "closed_ab").poly
    rep = verify_root_structure(n, 0, b)
    print(f"n={n} [0,{b}]: {format_poly(p)}; Sturm count {sturm_count(p)}; {rep.note}")

# %% single offsets [1, b]
for n, b in [(2, 1), (4, 2), (5, 4)]:
    rep = verify_root_structure(n, 0, b, "single_offset")
    print(f"n={n} [1,{b}]: roots {[str(r) for r, _ in rep.certified_roots]} verdict {rep.verdict}")

# %% mirror symmetry of the reduced polynomial
print("symmetry holds for 2 <= n <= 6, b <= 4:",
      all(symmetry_identity_check(n, b) for n in range(2, 7) for b in range(5)))
