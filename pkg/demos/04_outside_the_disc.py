"""Leaving the unit disc: inversion vs the classical integral.

At integer order the inversion identity extends evaluation to |z| > 1
using only the series inside the disc plus a Bernoulli polynomial of the
logarithm. The classical exponential-form integral is valid off the ray
(1, inf) on its own and provides the independent cross-check.
"""

import cmath

from lirep import li_integral_classical, li_inversion_integer, li_series

print("Li_n(z) outside the unit disc:")
for n in (2, 3):
    for z in (-3.0, 2 + 3j, -1.5j):
        inv = li_inversion_integer(n, z, tol=1e-10)
        ref = li_integral_classical(n, z, tol=1e-10)
        print(f"  n={n}, z={z}: inversion {inv.value:.12f}"
              f"  classical {ref.value:.12f}  |dev|={abs(inv.value - ref.value):.1e}")

print("\nOrder 1 has a closed form to compare against:")
z = 2j
inv = li_inversion_integer(1, z, tol=1e-12)
print(f"  Li_1(2i) inversion: {inv.value:.12f}")
print(f"  -log(1 - 2i)      : {-cmath.log(1.0 - z):.12f}")

print("\nContinuity across the circle on the negative axis:")
outside = li_inversion_integer(3, -1.0000001, tol=1e-10)
inside = li_series(3, -0.9999999, tol=1e-10)
print(f"  Li_3(-1 - 1e-7) = {outside.value.real:.10f}   (inversion)")
print(f"  Li_3(-1 + 1e-7) = {inside.value.real:.10f}   (series)")
print(f"  gap = {abs(outside.value - inside.value):.2e}")
