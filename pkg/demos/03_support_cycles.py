"""
Support cycles: where a module lives, with multiplicity
=======================================================

Every commuting tuple whose joint eigenvalues are rational decomposes
along finitely many support points.  The cycle records those points with
their multiplicities; the stratum only remembers the partition shape.
"""
import random
from fractions import Fraction

from commvar import (
    GF,
    QQ,
    NotSplitError,
    UniPoly,
    companion,
    cycle,
    det_pushforward,
    localize,
    parse_multipoly,
    partition_notation,
    random_split_tuple,
    stratum,
    translate,
)

# the companion module of (t-1)(t-2) is supported at 1 and 2
f = UniPoly.make(QQ, [Fraction(2), Fraction(-3), Fraction(1)])
t = companion(f)
c = cycle(t)
for point, mult in c.entries:
    print("point", [QQ.format(x) for x in point], "mult", mult)
alpha = stratum(c)
print("stratum:", list(alpha), "=", partition_notation(alpha))

# a random sample built from punctual pieces glued at known points:
# the cycle recovers the construction exactly
rng = random.Random(42)
sample, truth = random_split_tuple(QQ, 2, rng)
assert sorted(cycle(sample).entries) == sorted(truth)
print("ground truth recovered on a conjugated sample of size", sample.n)

# localization actually splits the module into blocks, one per point
for s in localize(sample):
    print("local block at", [QQ.format(x) for x in s.point], "size", s.local_module.n)

# pushing a polynomial forward through the cycle multiplies its values
g = parse_multipoly("x1*x2 + 1", QQ, 2)
val = det_pushforward(g, sample)
hand = Fraction(1)
for point, mult in truth:
    hand *= (point[0] * point[1] + 1) ** mult
assert val == hand
print("det pushforward of x1*x2 + 1:", QQ.format(val))

# not every module splits over its base field: t^2 + 1 has no rational
# eigenvalues and the tool says so rather than approximating
gauss = companion(UniPoly.make(QQ, [Fraction(1), Fraction(0), Fraction(1)]))
try:
    cycle(gauss)
except NotSplitError as e:
    print("t^2 + 1 over Q:", e.code, e.detail["degrees"])

# over F2 the same story: shifting changes nothing about splitness
f2 = GF(2)
irr = companion(UniPoly.make(f2, [1, 1, 1]))  # t^2 + t + 1, irreducible
try:
    cycle(translate(irr, [1]))
except NotSplitError:
    print("t^2 + t + 1 over F2 stays unsplit after translation")
