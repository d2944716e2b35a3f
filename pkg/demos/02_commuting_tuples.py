"""
Commuting tuples are modules
============================

A d-tuple of pairwise commuting n x n matrices is exactly a module of
length n over the polynomial ring in d variables: matrix i is the action
of the i-th variable.  This script builds tuples three ways, moves them
around with the group action, and measures tangent spaces.
"""
from fractions import Fraction

from commvar import (
    GF,
    QQ,
    Matrix,
    UniPoly,
    companion,
    conjugate,
    direct_sum,
    field_name,
    from_staircase,
    group_element,
    staircase,
    tangent_space_dim,
    translate,
    validate,
)

# --- from raw matrices: validate checks every pair commutes
a = Matrix.from_rows(QQ, [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]])
z = Matrix.zero(QQ, 2, 2)
t = validate([a, z])
print("validated a", t.d, "tuple of size", t.n)

# --- from a monomial staircase: multiplication by x and y on the
# monomial basis of k[x,y] modulo a monomial ideal
L = staircase([(0, 0), (1, 0), (0, 1)])
pair = from_staircase(L, QQ)
print("staircase module size:", pair.n)

# --- from a monic polynomial: the companion module k[t]/(f)
f = UniPoly.make(QQ, [Fraction(2), Fraction(-3), Fraction(1)])  # (t-1)(t-2)
cyc = companion(f)
print("companion matrix:", [[QQ.format(x) for x in row] for row in
                            [[cyc.mats[0].entry(i, j) for j in range(2)] for i in range(2)]])

# conjugation never changes the module, only the basis
g = group_element(Matrix.from_rows(QQ, [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]))
moved = conjugate(cyc, g)
assert moved.n == cyc.n

# translation shifts the support; direct sum concatenates
shifted = translate(cyc, [Fraction(10)])
both = direct_sum(cyc, shifted)
print("direct sum size:", both.n)

# tangent spaces: d = 1 is always smooth with tangent dimension n^2,
# d = 2 jumps at special points
smooth = tangent_space_dim(validate([Matrix.zero(QQ, 2, 2), Matrix.zero(QQ, 2, 2)]))
d01 = Matrix.from_rows(QQ, [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]])
jumped = tangent_space_dim(validate([d01, Matrix.zero(QQ, 2, 2)]))
print("tangent at the origin:", smooth, " at (diag(0,1), 0):", jumped)
assert (smooth, jumped) == (8, 6)

# the same constructions run unchanged over a prime field
F3 = GF(3)
trip = from_staircase(L, F3)
print("over", field_name(trip.field), ": size", trip.n)
