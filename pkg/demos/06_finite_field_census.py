"""
Counting over finite fields
===========================

Over F_q everything is finite, so claims become counts.  This script
enumerates commuting tuples, weights orbits by their stabilizers, and
checks the two answers against each other.
"""
from fractions import Fraction

from commvar import (
    GF,
    CensusRequest,
    burnside_count,
    enumerate_census,
    gl_order,
    orbit_census,
    parse_multipoly,
    partition_notation,
)

# single 2x2 matrices over F2: 16 of them, |GL_2(F2)| = 6
res = enumerate_census(CensusRequest(n=2, d=1, q=2))
print("matrices:", res.raw_count, " gl order:", res.gl_order,
      " groupoid count:", res.groupoid_count)
assert res.groupoid_count == Fraction(8, 3)

# commuting pairs: the count drops from 256 to 88
res = enumerate_census(CensusRequest(n=2, d=2, q=2, per_stratum=True))
print("commuting pairs:", res.raw_count)
for alpha, count in sorted(res.per_stratum.items()):
    print("  stratum", partition_notation(alpha), ":", count)
print("  unsplit over F2:", res.unsplit_count)
assert res.raw_count == 88

# extra cutting equations: pairs annihilated by x1 (first matrix zero)
rel = parse_multipoly("x1", GF(2), 2)
res = enumerate_census(CensusRequest(n=2, d=2, q=2, relations=(rel,)))
print("pairs with A1 = 0:", res.raw_count)
assert res.raw_count == 16

# nilpotent pairs form the punctual locus at the origin
res = enumerate_census(CensusRequest(n=2, d=2, q=2, nilpotent=True))
print("nilpotent commuting pairs:", res.raw_count)

# the orbit census lists one representative per conjugation orbit; the
# orbit-stabilizer identity and the Burnside sum tie everything together
orbits = orbit_census(2, 2, 2)
print("orbits:", len(orbits))
for o in orbits[:4]:
    print("  size", o.orbit_size, "aut order", o.aut_order)
assert all(o.orbit_size * o.aut_order == gl_order(2, 2) for o in orbits)
total = enumerate_census(CensusRequest(n=2, d=2, q=2))
assert burnside_count(orbits) == total.groupoid_count
print("Burnside sum matches the groupoid count:", burnside_count(orbits))
