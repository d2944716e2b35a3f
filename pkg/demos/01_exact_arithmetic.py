"""
Exact scalars and exact linear algebra
======================================

Everything in commvar runs on exact arithmetic: Fraction over the
rationals, int residues over a prime field.  No floats, ever, so every
rank, determinant and eigenvalue below is a theorem about the input,
not an approximation.
"""
from fractions import Fraction

from commvar import GF, QQ, Matrix, char_poly, det, inverse, rank, rref

# scalars travel as strings in canonical form
half = QQ.parse("2/4")
print("2/4 parses to", QQ.format(half))
assert half == Fraction(1, 2)

F5 = GF(5)
print("7 over F5 is", F5.format(F5.parse("7")))
assert F5.parse("7") == 2

# a rational matrix with an awkward determinant
m = Matrix.from_rows(QQ, [
    [Fraction(1, 2), Fraction(1, 3), Fraction(1)],
    [Fraction(0), Fraction(2), Fraction(-1)],
    [Fraction(3), Fraction(0), Fraction(1, 7)],
])
print("det =", QQ.format(det(m)))
print("rank =", rank(m))

mi = inverse(m)
assert mi is not None and (m * mi).entries == Matrix.identity(QQ, 3).entries
print("inverse verified: m * m^-1 == I")

# reduced row echelon form comes with its pivot columns
reduced, rnk, pivots = rref(m)
print("pivots:", pivots)

# the characteristic polynomial is computed division-free, so the same
# code path works over tiny prime fields where char p <= n
j3 = Matrix.from_rows(F5, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
cp = char_poly(j3)
print("char_poly(J3 over F5) coefficients, ascending:", list(cp.coeffs))
assert list(cp.coeffs) == [0, 0, 0, 1]  # t^3
