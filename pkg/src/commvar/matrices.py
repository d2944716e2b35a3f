"""Dense exact matrices and the elimination kernel.

Everything is row-major over a single Field; 0x0 matrices are legal
everywhere (det = 1, char poly = 1).  Elimination pivots on the first
nonzero entry in column order, so all outputs are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import (
    ArityMismatchError,
    MixedFieldsError,
    NotSquareError,
    SizeMismatchError,
)
from .fields import Field, Scalar
from .polynomials import MultiPoly, UniPoly


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple[Scalar, ...]  # row-major

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise SizeMismatchError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise SizeMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (field.zero(),) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        entries = []
        for r in rows:
            if len(r) != nc:
                raise SizeMismatchError("ragged rows")
            for x in r:
                entries.append(field.of(x) if isinstance(x, int) else x)
        return cls(field, nr, nc, tuple(entries))

    @classmethod
    def diagonal(cls, field: Field, diag: Sequence) -> "Matrix":
        n = len(diag)
        m = [[field.zero()] * n for _ in range(n)]
        for i, x in enumerate(diag):
            m[i][i] = field.of(x) if isinstance(x, int) else x
        return cls.from_rows(field, m)

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def _same_shape(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise MixedFieldsError("matrices over different fields")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatchError(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        F = self.field
        return Matrix(
            F, self.rows, self.cols,
            tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        F = self.field
        return Matrix(
            F, self.rows, self.cols,
            tuple(F.sub(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "Matrix":
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(F.neg(a) for a in self.entries))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise MixedFieldsError("matrices over different fields")
        if self.cols != other.rows:
            raise SizeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        F = self.field
        zero = F.zero()
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = zero
                for t in range(k):
                    acc = F.add(acc, F.mul(arow[t], b[t * m + j]))
                out.append(acc)
        return Matrix(F, n, m, tuple(out))

    def scale(self, s: Scalar) -> "Matrix":
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(F.mul(s, a) for a in self.entries))

    def mat_vec(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(v) != self.cols:
            raise SizeMismatchError(f"vector length {len(v)} vs {self.cols} columns")
        F = self.field
        out = []
        for i in range(self.rows):
            acc = F.zero()
            row = self.row(i)
            for a, x in zip(row, v):
                acc = F.add(acc, F.mul(a, x))
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.cols, self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise NotSquareError(f"trace of {self.rows}x{self.cols}")
        F = self.field
        acc = F.zero()
        for i in range(self.rows):
            acc = F.add(acc, self.entry(i, i))
        return acc

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(a == z for a in self.entries)

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise NotSquareError("power of a nonsquare matrix")
        if k < 0:
            raise ValueError("negative power")
        out = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __str__(self) -> str:
        F = self.field
        return "[" + ", ".join(
            "[" + ", ".join(F.format(x) for x in self.row(i)) + "]"
            for i in range(self.rows)
        ) + "]"


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


def hstack(ms: Sequence[Matrix]) -> Matrix:
    if not ms:
        raise SizeMismatchError("hstack of nothing")
    F = ms[0].field
    nr = ms[0].rows
    for m in ms:
        if m.field != F:
            raise MixedFieldsError("hstack over different fields")
        if m.rows != nr:
            raise SizeMismatchError("hstack with differing row counts")
    out = []
    for i in range(nr):
        for m in ms:
            out.extend(m.row(i))
    return Matrix(F, nr, sum(m.cols for m in ms), tuple(out))


def block_diag(ms: Sequence[Matrix], field: Optional[Field] = None) -> Matrix:
    if not ms and field is None:
        raise SizeMismatchError("block_diag of nothing needs an explicit field")
    F = field if field is not None else ms[0].field
    for m in ms:
        if m.field != F:
            raise MixedFieldsError("blocks over different fields")
    nr = sum(m.rows for m in ms)
    nc = sum(m.cols for m in ms)
    z = F.zero()
    grid = [[z] * nc for _ in range(nr)]
    r0 = c0 = 0
    for m in ms:
        for i in range(m.rows):
            for j in range(m.cols):
                grid[r0 + i][c0 + j] = m.entry(i, j)
        r0 += m.rows
        c0 += m.cols
    return Matrix.from_rows(F, grid) if nr else Matrix(F, 0, nc, ())


def columns_matrix(field: Field, n: int, cols: Sequence[Sequence[Scalar]]) -> Matrix:
    """Assemble column vectors of length n into an n x len(cols) matrix."""
    for v in cols:
        if len(v) != n:
            raise SizeMismatchError("column of wrong length")
    return Matrix(
        field, n, len(cols), tuple(cols[j][i] for i in range(n) for j in range(len(cols)))
    )


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form; returns (R, rank, pivot columns).

    Deterministic: the pivot is the first nonzero entry down each column.
    """
    F = m.field
    rows = m.to_rows()
    zero, one = F.zero(), F.one()
    pivots = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if rows[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != one:
            inv = F.inv(pv)
            rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    out = Matrix.from_rows(F, rows) if m.rows else m
    return out, r, tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> list[tuple[Scalar, ...]]:
    """Basis of the right kernel {v : m v = 0}, one vector per free column.

    Vectors are ordered by ascending free-column index; each satisfies
    m v = 0 exactly.
    """
    F = m.field
    R, rk, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    zero, one = F.zero(), F.one()
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [zero] * m.cols
        v[free] = one
        for prow, pcol in enumerate(pivots):
            v[pcol] = F.neg(R.entry(prow, free))
        basis.append(tuple(v))
    return basis


def _det_prime_field(m: Matrix) -> Scalar:
    F = m.field
    p = F.characteristic
    rows = [list(r) for r in m.to_rows()]
    n = m.rows
    detval = 1
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] % p:
                pivot_row = i
                break
        if pivot_row is None:
            return 0
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            detval = -detval
        pv = rows[c][c]
        detval = (detval * pv) % p
        inv = pow(pv, -1, p)
        for i in range(c + 1, n):
            f = (rows[i][c] * inv) % p
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[c])]
    return detval % p


def _bareiss_int(rows: list[list[int]], n: int) -> int:
    """Fraction-free Bareiss determinant of an integer matrix (destructive)."""
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for j in range(k + 1, n):
                if rows[j][k] != 0:
                    rows[k], rows[j] = rows[j], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = rows[k][k]
        for i in range(k + 1, n):
            aik = rows[i][k]
            ri, rk_ = rows[i], rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pkk - aik * rk_[j]) // prev
            ri[k] = 0
        prev = pkk
    return sign * rows[n - 1][n - 1]


def det(m: Matrix) -> Scalar:
    """Determinant: division-free Bareiss over Q, elimination over F_p."""
    if m.rows != m.cols:
        raise NotSquareError(f"determinant of {m.rows}x{m.cols}")
    F = m.field
    n = m.rows
    if n == 0:
        return F.one()
    if F.characteristic:
        return _det_prime_field(m)
    # Clear denominators row by row, then run integer Bareiss.
    scale = 1
    int_rows: list[list[int]] = []
    for i in range(n):
        row = m.row(i)
        mult = lcm(*(x.denominator for x in row))
        scale *= mult
        int_rows.append([int(x * mult) for x in row])
    d = _bareiss_int(int_rows, n)
    return Fraction(d, scale)


def inverse(m: Matrix) -> Optional[Matrix]:
    """Exact inverse, or None if singular (or nonsquare: raises)."""
    if m.rows != m.cols:
        raise NotSquareError("inverse of a nonsquare matrix")
    n = m.rows
    if n == 0:
        return m
    aug = hstack([m, Matrix.identity(m.field, n)])
    R, _, pivots = rref(aug)
    # the identity block forces full row rank, so the rank of aug is
    # always n; m is invertible iff no pivot escapes into that block
    if pivots[:n] != tuple(range(n)):
        return None
    rows = [list(R.row(i))[n:] for i in range(n)]
    return Matrix.from_rows(m.field, rows)


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """One exact solution X of a X = b, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if a.field != b.field:
        raise MixedFieldsError("solve over different fields")
    if a.rows != b.rows:
        raise SizeMismatchError("solve with mismatched row counts")
    if b.cols == 0 or a.cols == 0:
        zero_x = Matrix.zero(a.field, a.cols, b.cols)
        return zero_x if (a * zero_x - b).is_zero() else None
    R, rk, pivots = rref(hstack([a, b]))
    # Any pivot in the b-block marks an inconsistent system.
    if any(p >= a.cols for p in pivots):
        return None
    F = a.field
    x = [[F.zero()] * b.cols for _ in range(a.cols)]
    for prow, pcol in enumerate(pivots):
        for j in range(b.cols):
            x[pcol][j] = R.entry(prow, a.cols + j)
    return Matrix.from_rows(F, x)


def char_poly(m: Matrix) -> UniPoly:
    """Characteristic polynomial det(tI - m), by the division-free
    Berkowitz recurrence (valid over F_p for every p, including p <= n).
    """
    if m.rows != m.cols:
        raise NotSquareError(f"char poly of {m.rows}x{m.cols}")
    F = m.field
    n = m.rows
    zero = F.zero()
    # coeffs descending for the trailing principal submatrix, starting empty
    p = [F.one()]
    for k in range(n - 1, -1, -1):
        s = n - k
        a_kk = m.entry(k, k)
        R = [m.entry(k, j) for j in range(k + 1, n)]
        C = [m.entry(i, k) for i in range(k + 1, n)]
        sub = [[m.entry(i, j) for j in range(k + 1, n)] for i in range(k + 1, n)]
        c = [F.one(), F.neg(a_kk)]
        w = C
        for i in range(2, s + 1):
            acc = zero
            for rj, wj in zip(R, w):
                acc = F.add(acc, F.mul(rj, wj))
            c.append(F.neg(acc))
            if i < s:
                w = [
                    _dot(F, row, w)
                    for row in sub
                ]
        newp = []
        for i in range(s + 1):
            acc = zero
            for j, pj in enumerate(p):
                if 0 <= i - j < len(c):
                    acc = F.add(acc, F.mul(c[i - j], pj))
            newp.append(acc)
        p = newp
    return UniPoly.make(F, reversed(p))


def _dot(F: Field, xs: Iterable[Scalar], ys: Iterable[Scalar]) -> Scalar:
    acc = F.zero()
    for x, y in zip(xs, ys):
        acc = F.add(acc, F.mul(x, y))
    return acc


def eval_multipoly(f: MultiPoly, mats: Sequence[Matrix]) -> Matrix:
    """Evaluate f on square matrices, monomials expanded in the given order
    (A1^e1 A2^e2 ... ; the callers only feed commuting matrices, where order
    is immaterial).
    """
    if len(mats) != f.nvars:
        raise ArityMismatchError(
            f"{f.nvars}-variable polynomial applied to {len(mats)} matrices"
        )
    if not mats:
        raise ArityMismatchError("need at least one matrix")
    F = mats[0].field
    if f.field != F:
        raise MixedFieldsError("polynomial and matrices over different fields")
    n = mats[0].rows
    for m in mats:
        if m.field != F:
            raise MixedFieldsError("matrices over different fields")
        if m.rows != m.cols or m.rows != n:
            raise SizeMismatchError("matrices must be square of equal size")
    powers: dict[tuple[int, int], Matrix] = {}

    def power_of(i: int, e: int) -> Matrix:
        key = (i, e)
        if key not in powers:
            powers[key] = mats[i].power(e)
        return powers[key]

    total = Matrix.zero(F, n, n)
    for exps, coeff in f.terms:
        term = Matrix.identity(F, n).scale(coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * power_of(i, e)
        total = total + term
    return total
