"""
Orbits of PGL_2(F_q) on the projective line over F_{q^d}
========================================================

For even d there is one short orbit of length q+1 (the points of P^1(F_q)),
one of length q^2-q (the rest of F_{q^2}) and the other orbits are free.
"""

from btquotient import moebius_orbit_census
from btquotient.algebra import FieldCtx

for q, d in [(2, 2), (2, 4), (3, 4), (2, 6)]:
    census = moebius_orbit_census(FieldCtx.gf(q), d)
    total = sum(k * v for k, v in census.items())
    print(f"q={q} d={d}  {dict(sorted(census.items()))}  points={total} = {q}^{d}+1")

# odd d: no quadratic points, so only the rational orbit is short
print(moebius_orbit_census(FieldCtx.gf(2), 5))
