"""
Deciding isomorphism with certificates
======================================

Two tuples are isomorphic exactly when some invertible matrix
intertwines every coordinate simultaneously.  The decision procedure is
deterministic: compute the intertwiner space, then scan a fixed grid of
coefficient vectors for an invertible combination.  A certificate is
returned and can be re-verified independently; "absent" is only ever
reported after the full grid came up empty.
"""
from fractions import Fraction

from commvar import (
    QQ,
    GridBudgetExceededError,
    Matrix,
    RunConfig,
    aut_dim,
    hom_basis,
    is_isomorphic,
    min_generators,
    validate,
)

J2 = Matrix.from_rows(QQ, [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]])
Z = Matrix.zero(QQ, 2, 2)

# the two modules of length 2 supported at the origin: k[x,y]/(x^2, y)
# acting through (J2, 0), and k[x,y]/(x, y)^... the square of the maximal
# ideal, acting through (0, 0)
t_jordan = validate([J2, Z])
t_square = validate([Z, Z])

print("hom dim between them:", hom_basis(t_jordan, t_square).dim)
print("aut dims:", aut_dim(t_jordan), "vs", aut_dim(t_square))
print("minimal generators:", min_generators(t_jordan), "vs", min_generators(t_square))

g = is_isomorphic(t_jordan, t_square)
print("isomorphic?", g is not None)
assert g is None  # different module structures, same dimension vector

# a positive case with a verified certificate: the same module in two bases
p = Matrix.from_rows(QQ, [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
pinv = Matrix.from_rows(QQ, [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]])
t_other = validate([p * J2 * pinv, Z])
g = is_isomorphic(t_jordan, t_other)
assert g is not None
for a, b in zip(t_jordan.mats, t_other.mats):
    assert (g.matrix * a).entries == (b * g.matrix).entries
print("certificate intertwines all coordinates")

# soundness over speed: when the intertwiner space is too big for the
# configured grid, the tool refuses instead of guessing
J3 = Matrix.from_rows(QQ, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
J3 = Matrix(QQ, 3, 3, tuple(Fraction(x) for x in J3.entries))
Z3 = Matrix.zero(QQ, 3, 3)
s = validate([J3, Z3])
t = validate([J3, J3 * J3])
try:
    is_isomorphic(s, t, RunConfig(grid_budget=1))
except GridBudgetExceededError as e:
    print("tight budget:", e.code, e.detail)
print("default budget answers:", is_isomorphic(s, t))
