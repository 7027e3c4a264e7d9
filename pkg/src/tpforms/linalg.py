"""Exact rational linear algebra.

Everything here runs over `fractions.Fraction`; decisions (zero tests, signs,
ranks) are exact, never floating point.  Determinants and ranks go through
fraction-free (Bareiss) elimination on denominator-cleared integer matrices so
that intermediate entries stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


Vector = tuple[Fraction, ...]


class ResourceLimitError(RuntimeError):
    """An exhaustive enumeration was asked to exceed its hard cap."""


def subsets_colex(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of range(n) in colexicographic order.

    Colex compares the largest differing element, so minors indexed this way
    enumerate in a reproducible order independent of matrix content.
    """
    from itertools import combinations

    return sorted(combinations(range(n), k), key=lambda t: tuple(reversed(t)))


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatMatrix:
    """Immutable matrix of exact rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_as_fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    def at(self, r: int, c: int) -> Fraction:
        return self.entries[r * self.cols + c]

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.at(r, c)

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            [self.at(r, c) for c in range(self.cols) for r in range(self.rows)],
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix(
            len(row_idx),
            len(col_idx),
            [self.at(r, c) for r in row_idx for c in col_idx],
        )

    def matmul(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        for r in range(self.rows):
            for c in range(other.cols):
                out.append(
                    sum(
                        (self.at(r, k) * other.at(k, c) for k in range(self.cols)),
                        Fraction(0),
                    )
                )
        return RatMatrix(self.rows, other.cols, out)

    def matvec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        vf = [_as_fraction(x) for x in v]
        return tuple(
            sum((self.at(r, c) * vf[c] for c in range(self.cols)), Fraction(0))
            for r in range(self.rows)
        )

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.at(r, c) == self.at(c, r)
            for r in range(self.rows)
            for c in range(r + 1, self.cols)
        )

    def is_toeplitz(self) -> bool:
        return all(
            self.at(r, c) == self.at(r + 1, c + 1)
            for r in range(self.rows - 1)
            for c in range(self.cols - 1)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(self.at(r, c)) for c in range(self.cols))
            for r in range(self.rows)
        )
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def _cleared_int_rows(M: RatMatrix) -> tuple[list[list[int]], Fraction]:
    """Scale every entry by one positive integer so all become ints.

    Returns (integer rows, scale).  A k x k minor of M equals the integer
    minor divided by scale**k.
    """
    denoms = [e.denominator for e in M.entries]
    scale = lcm(*denoms) if denoms else 1
    rows = [
        [int(e * scale) for e in M.row(r)]
        for r in range(M.rows)
    ]
    return rows, Fraction(scale)


def det_exact(M: RatMatrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination."""
    if M.rows != M.cols:
        raise ValueError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    a, scale = _cleared_int_rows(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            arow = a[i]
            krow = a[k]
            for j in range(k + 1, n):
                arow[j] = (arow[j] * pivot - aik * krow[j]) // prev
            arow[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1]) / scale**n


def minor(M: RatMatrix, I: Sequence[int], J: Sequence[int]) -> Fraction:
    """Determinant of the submatrix with rows I and columns J (0-indexed).

    I and J must be strictly increasing index sequences of equal length.
    """
    I = tuple(I)
    J = tuple(J)
    if len(I) != len(J):
        raise ValueError(f"row set size {len(I)} != column set size {len(J)}")
    for name, idx, bound in (("row", I, M.rows), ("column", J, M.cols)):
        if any(i < 0 or i >= bound for i in idx):
            raise IndexError(f"{name} index out of range: {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"{name} indices not strictly increasing: {idx}")
    return det_exact(M.submatrix(I, J))


def rank_exact(M: RatMatrix) -> int:
    """Rank over the rationals via fraction-free elimination."""
    if M.rows == 0 or M.cols == 0:
        return 0
    a, _ = _cleared_int_rows(M)
    m, n = M.rows, M.cols
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        pivot = a[row][col]
        for i in range(row + 1, m):
            aik = a[i][col]
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * pivot - aik * a[row][j]) // prev
            a[i][col] = 0
        prev = pivot
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def rref(M: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Fraction; returns (rows, pivot columns)."""
    a = M.row_lists()
    m, n = M.rows, M.cols
    pivots: list[int] = []
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(m):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return a, pivots


def kernel_basis(M: RatMatrix) -> list[Vector]:
    """Basis of the right null space in reduced-echelon parametrization.

    One basis vector per free column, taken in ascending column order; the
    free variable is set to 1 and all other free variables to 0, so the
    output is deterministic.
    """
    if M.cols == 0:
        return []
    if M.rows == 0:
        return [
            tuple(Fraction(int(i == j)) for i in range(M.cols))
            for j in range(M.cols)
        ]
    a, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -a[r][f]
        basis.append(tuple(v))
    return basis


def pivot_columns(M: RatMatrix) -> list[int]:
    """Columns holding pivots in the reduced echelon form of M."""
    if M.rows == 0 or M.cols == 0:
        return []
    _, pivots = rref(M)
    return pivots


def is_positive_definite(S: RatMatrix) -> bool:
    """Sylvester's criterion: all leading principal minors positive.

    The empty 0x0 matrix counts as positive definite.  Raises on asymmetric
    input.
    """
    if not S.is_symmetric():
        raise ValueError("positive definiteness requires a symmetric matrix")
    n = S.rows
    if n == 0:
        return True
    # One no-swap Bareiss pass: the k-th pivot is the k-th leading principal
    # minor of the integer-scaled matrix, and the scaling is positive.
    a, _ = _cleared_int_rows(S)
    prev = 1
    for k in range(n):
        if a[k][k] <= 0:
            return False
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return True


def restrict_bilinear(G: RatMatrix, vectors: Sequence[Sequence]) -> RatMatrix:
    """Gram matrix of a bilinear form G restricted to the span of `vectors`."""
    k = len(vectors)
    out = []
    images = [G.matvec(v) for v in vectors]
    for i in range(k):
        vi = [_as_fraction(x) for x in vectors[i]]
        for j in range(k):
            out.append(sum((a * b for a, b in zip(vi, images[j])), Fraction(0)))
    return RatMatrix(k, k, out)
