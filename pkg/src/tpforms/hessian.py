"""Higher Hessians, quadrant positivity, and the Plucker/tableau expansion.

The i-th Hessian matrix collects the order-2i partial derivatives of a form;
its signed determinant is the object whose strict positivity on the closed or
open positive quadrant is decided here, by Sturm counting on the square-free
dehomogenization plus explicit boundary evaluations.  The same polynomial has
a closed expansion over maximal minors of the coefficient Toeplitz matrix
weighted by semistandard-tableau counts, which this module also implements,
together with the bi-infinite path-matrix identity behind it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm, perm

from .apolarity import sperner_number, toeplitz
from .forms import (
    BivariateForm,
    OperatorPoly,
    ZeroFormError,
    apply_operator,
    from_monomial_coeffs,
)
from .linalg import ResourceLimitError, minor, subsets_colex
from .polyroots import UniPoly, count_roots_positive_axis

BRUTE_FORCE_CELL_CAP = 16


@dataclass(frozen=True)
class FormMatrix:
    """Square symmetric matrix of homogeneous forms of one common degree."""

    size: int
    entry_degree: int
    entries: tuple[tuple[BivariateForm, ...], ...]

    def at(self, p: int, q: int) -> BivariateForm:
        return self.entries[p][q]

    def evaluate(self, x, y) -> list[list[Fraction]]:
        return [
            [self.entries[p][q].evaluate(x, y) for q in range(self.size)]
            for p in range(self.size)
        ]


def hessian_matrix(F: BivariateForm, i: int) -> FormMatrix:
    """Order-2i derivative matrix: entry (p, q) is x^(p+q) y^(2i-p-q) applied to F."""
    d = F.degree
    if not 0 <= i <= d // 2:
        raise IndexError(f"index {i} out of range for degree {d}")
    derivs = [
        apply_operator(OperatorPoly.monomial(a, 2 * i - a), F)
        for a in range(2 * i + 1)
    ]
    rows = tuple(
        tuple(derivs[p + q] for q in range(i + 1)) for p in range(i + 1)
    )
    return FormMatrix(size=i + 1, entry_degree=d - 2 * i, entries=rows)


def _int_poly_det(rows: list[list[list[int]]]) -> list[int]:
    """Determinant of a matrix of integer coefficient lists (dense, ascending).

    Minor expansion over column subsets; no division, so exact over Z[t].
    """
    n = len(rows)
    if n == 0:
        return [1]

    def mul(a: list[int], b: list[int]) -> list[int]:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    def add_into(acc: list[int], term: list[int], negate: bool) -> list[int]:
        if len(term) > len(acc):
            acc = acc + [0] * (len(term) - len(acc))
        for i, t in enumerate(term):
            acc[i] = acc[i] - t if negate else acc[i] + t
        return acc

    dets: dict[int, list[int]] = {0: [1]}
    for size in range(1, n + 1):
        row = rows[size - 1]
        new: dict[int, list[int]] = {}
        for cols in subsets_colex(n, size):
            mask = 0
            for j in cols:
                mask |= 1 << j
            acc: list[int] = []
            for pos, j in enumerate(cols):
                entry = row[j]
                if not entry:
                    continue
                sub = dets[mask ^ (1 << j)]
                if not sub:
                    continue
                negate = (size - 1 + pos) % 2 == 1
                acc = add_into(acc, mul(entry, sub), negate)
            new[mask] = acc
        dets = new
    return dets[(1 << n) - 1]


def form_matrix_det(M: FormMatrix) -> BivariateForm:
    """Determinant of a matrix of equal-degree forms, as a form of degree
    size * entry_degree.

    The computation dehomogenizes at Y = 1, clears denominators to plain
    integers, expands without division, and rehomogenizes.
    """
    n = M.size
    target = n * M.entry_degree
    if n == 0:
        return BivariateForm(0, (Fraction(1),))
    mono = [
        [M.at(p, q).monomial_coeffs() for q in range(n)] for p in range(n)
    ]
    denoms = [c.denominator for row in mono for entry in row for c in entry]
    scale = lcm(*denoms)
    int_rows = [
        [
            [int(c * scale) for c in entry]
            if any(entry)
            else []
            for entry in row
        ]
        for row in mono
    ]
    det = _int_poly_det(int_rows)
    out = [Fraction(0)] * (target + 1)
    for k, c in enumerate(det):
        out[k] = Fraction(c, scale**n)
    return from_monomial_coeffs(out)


@dataclass(frozen=True)
class HessianPoly:
    """Signed Hessian determinant; identically zero once the index reaches
    the Sperner number."""

    index: int
    poly: BivariateForm


@lru_cache(maxsize=None)
def hessian_polynomial(F: BivariateForm, i: int) -> HessianPoly:
    """(-1)^floor((i+1)/2) times det of the i-th Hessian matrix."""
    det = form_matrix_det(hessian_matrix(F, i))
    if ((i + 1) // 2) % 2:
        det = det.scale(-1)
    return HessianPoly(index=i, poly=det)


def positive_on_quadrant(H: BivariateForm, closed: bool) -> bool:
    """Decide H > 0 on the positive quadrant, exactly.

    closed=True targets the closed quadrant minus the origin: both boundary
    rays must be strictly positive and the dehomogenization must have no root
    on the open positive axis.  closed=False targets the open quadrant only.
    The zero form fails both.
    """
    if H.is_zero:
        return False
    mono = H.monomial_coeffs()
    h = UniPoly(mono)
    if count_roots_positive_axis(h) != 0:
        return False
    if closed:
        return mono[-1] > 0 and mono[0] > 0
    return h(1) > 0


def decide_ordinary_hrr_cone(F: BivariateForm, i: int, closed: bool) -> bool:
    """Quadrant positivity of every signed Hessian up to min(i, s-1).

    This is the exact reformulation of the ordinary Hodge-Riemann relations
    over the (closed or open) positive cone of linear forms.
    """
    if F.is_zero:
        raise ZeroFormError("the zero form is excluded")
    s = sperner_number(F)
    return all(
        positive_on_quadrant(hessian_polynomial(F, j).poly, closed)
        for j in range(min(i, s - 1) + 1)
    )


@dataclass(frozen=True)
class PartitionData:
    """Subset of column indices with its partition and tableau count."""

    subset: tuple[int, ...]
    shape: tuple[int, ...]
    conjugate: tuple[int, ...]
    size: int
    ssyt: int


def subset_to_partition(J, m: int, n: int) -> PartitionData:
    """Partition lambda(J) of an m-subset J of {1, ..., n}, its conjugate,
    and the tableau count weighting the determinant expansion.

    lambda_k = i_(m-k+1) - (m-k+1), so the partition fits in an
    m x (n-m) box and the conjugate in the transposed box.
    """
    J = tuple(J)
    if len(J) != m:
        raise ValueError(f"subset size {len(J)} != {m}")
    if any(a >= b for a, b in zip(J, J[1:])):
        raise ValueError(f"subset not strictly increasing: {J}")
    if J and (J[0] < 1 or J[-1] > n):
        raise ValueError(f"subset {J} not inside [1, {n}]")
    lam = [J[m - k] - (m - k + 1) for k in range(1, m + 1)]
    while lam and lam[-1] == 0:
        lam.pop()
    conj = [sum(1 for part in lam if part >= k) for k in range(1, (lam[0] + 1) if lam else 1)]
    return PartitionData(
        subset=J,
        shape=tuple(lam),
        conjugate=tuple(conj),
        size=sum(lam),
        ssyt=ssyt_count(tuple(conj), n - m),
    )


def ssyt_count(shape, entry_bound: int) -> int:
    """Number of semistandard tableaux of the given shape with entries in
    [entry_bound], by the ratio-of-products formula.

    Every division is exact; a fractional intermediate would mean the formula
    was transcribed wrong, so it raises rather than rounding.
    """
    shape = tuple(shape)
    if any(p < 0 for p in shape) or any(
        a < b for a, b in zip(shape, shape[1:])
    ):
        raise ValueError(f"not a partition: {shape}")
    parts = [p for p in shape if p > 0]
    if len(parts) > entry_bound:
        raise ValueError(
            f"shape {shape} has more than {entry_bound} rows; no strict filling"
        )
    padded = parts + [0] * (entry_bound - len(parts))
    value = Fraction(1)
    for i in range(entry_bound):
        for j in range(i + 1, entry_bound):
            value *= Fraction(padded[i] - padded[j] - i + j, j - i)
    if value.denominator != 1:
        raise ArithmeticError(f"tableau product formula left a fraction: {value}")
    return int(value)


def ssyt_count_bruteforce(shape, entry_bound: int) -> int:
    """Exhaustive tableau enumeration: rows weakly increase left to right,
    columns strictly increase top to bottom, entries in [entry_bound]."""
    shape = tuple(p for p in shape if p > 0)
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"not a partition: {shape}")
    cells = sum(shape)
    if cells > BRUTE_FORCE_CELL_CAP:
        raise ResourceLimitError(
            f"{cells} cells exceeds the enumeration cap {BRUTE_FORCE_CELL_CAP}"
        )
    if not shape:
        return 1
    if entry_bound <= 0:
        return 0

    def fill_rows(row_idx: int, prev_row: tuple[int, ...]) -> int:
        if row_idx == len(shape):
            return 1
        length = shape[row_idx]
        total = 0
        row = [0] * length

        def place(col: int) -> None:
            nonlocal total
            if col == length:
                total += fill_rows(row_idx + 1, tuple(row))
                return
            lo = row[col - 1] if col else 1
            lo = max(lo, (prev_row[col] + 1) if col < len(prev_row) else 1)
            for v in range(lo, entry_bound + 1):
                row[col] = v
                place(col + 1)

        place(0)
        return total

    return fill_rows(0, ())


def plucker_terms(F: BivariateForm, i: int) -> list[dict]:
    """One record per column subset J of the degree-i Toeplitz matrix, in
    colexicographic order: the partition data, the maximal minor, and the
    monomial the term lands on."""
    d = F.degree
    if not 0 <= i <= d // 2:
        raise IndexError(f"index {i} out of range for degree {d}")
    m, n = i + 1, d - i + 1
    T = toeplitz(F, i)
    big_d = (i + 1) * (d - 2 * i)
    rows = tuple(range(m))
    terms = []
    for cols in subsets_colex(n, m):
        J = tuple(c + 1 for c in cols)
        part = subset_to_partition(J, m, n)
        delta = minor(T, rows, cols)
        terms.append(
            {
                "subset": J,
                "partition": part,
                "minor": delta,
                "x_exponent": part.size,
                "y_exponent": big_d - part.size,
            }
        )
    return terms


def plucker_expansion(F: BivariateForm, i: int) -> BivariateForm:
    """The signed Hessian determinant rebuilt from maximal Toeplitz minors:

        (d!/(d-2i)!)^(i+1) * sum_J N'_J * Delta_J * X^|lambda(J)| * Y^(rest)

    summed over all (i+1)-subsets J of the columns."""
    d = F.degree
    factor = Fraction(perm(d, 2 * i)) ** (i + 1)
    big_d = (i + 1) * (d - 2 * i)
    out = [Fraction(0)] * (big_d + 1)
    for term in plucker_terms(F, i):
        out[term["x_exponent"]] += (
            factor * term["partition"].ssyt * term["minor"]
        )
    return from_monomial_coeffs(out)


def path_matrix_identity_check(
    F: BivariateForm, i: int, truncation: int | None = None
) -> bool:
    """Check that the reversed Hessian matrix equals d!/(d-2i)! times the
    (rows 0..i) x (columns i..2i) block of the product of the bi-infinite
    coefficient Toeplitz matrix with the lattice-path weight matrix.

    Entry (p, q) of the weight matrix is binom(d-2i, p-q) X^(p-q)
    Y^(d-2i-p+q).  Truncating the inner index at d is lossless; anything
    smaller is refused.
    """
    d = F.degree
    if not 0 <= i <= d // 2:
        raise IndexError(f"index {i} out of range for degree {d}")
    needed = d + 1
    if truncation is None:
        truncation = max(needed, 2 * i + 1)
    if truncation < needed:
        raise ResourceLimitError(
            f"truncation {truncation} below the lossless bound {needed}"
        )
    w = d - 2 * i
    c = F.coeffs

    def product_entry(p: int, j: int) -> BivariateForm:
        # sum over inner k of c_(k-p) * binom(w, k-j) X^(k-j) Y^(w-k+j)
        mono = [Fraction(0)] * (w + 1)
        for a in range(w + 1):
            k = j + a
            if k >= truncation:
                continue
            idx = k - p
            if 0 <= idx <= d:
                mono[a] += c[idx] * comb(w, a)
        return from_monomial_coeffs(mono)

    hess = hessian_matrix(F, i)
    fall = Fraction(perm(d, 2 * i))
    for p in range(i + 1):
        for q in range(i + 1):
            lhs = hess.at(i - p, q)
            rhs = product_entry(p, i + q).scale(fall)
            if lhs.coeffs != rhs.coeffs:
                return False
    return True
