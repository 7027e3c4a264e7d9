"""The graded algebra attached to a form, through exact linear algebra.

The quotient of the operator ring by the annihilator of a degree-d form F is
finite dimensional; its graded pieces, pairings and multiplication maps are
all reachable from the diagonal-constant coefficient matrices of F.  Nothing
here needs a Groebner engine: in two variables the catalecticant ranks give
the full Hilbert function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .forms import (
    BivariateForm,
    LinearForm,
    OperatorPoly,
    ZeroFormError,
    apply_operator,
    operator_value,
)
from .linalg import (
    RatMatrix,
    Vector,
    det_exact,
    is_positive_definite,
    kernel_basis,
    pivot_columns,
    rank_exact,
    restrict_bilinear,
)


def toeplitz(F: BivariateForm, i: int) -> RatMatrix:
    """The (i+1) x (d-i+1) diagonal-constant matrix of normalized coefficients.

    Row r (from the top, 0-indexed) is (c_{i-r}, ..., c_{d-r}); the top row
    starts at c_i and the bottom row at c_0.
    """
    d = F.degree
    if not 0 <= i <= d:
        raise IndexError(f"index {i} out of range for degree {d}")
    c = F.coeffs
    return RatMatrix(
        i + 1,
        d - i + 1,
        [c[i - r + q] for r in range(i + 1) for q in range(d - i + 1)],
    )


def catalecticant(F: BivariateForm, e: int) -> RatMatrix:
    """Matrix of the degree-e differentiation map on F.

    Columns are indexed by the operator monomials x^e, x^(e-1) y, ..., y^e;
    column j holds the normalized coefficients of x^(e-j) y^j applied to F,
    up to one overall positive factor that is irrelevant for pivots and
    kernels.  For e > d the map is zero and the matrix has no rows.
    """
    d = F.degree
    if e < 0:
        raise IndexError("negative operator degree")
    if e > d:
        return RatMatrix(0, e + 1, [])
    c = F.coeffs
    return RatMatrix(
        d - e + 1,
        e + 1,
        [c[(e - j) + k] for k in range(d - e + 1) for j in range(e + 1)],
    )


@dataclass(frozen=True)
class HilbertData:
    """Dimensions of the graded pieces, plus their maximum."""

    h: tuple[int, ...]
    sperner: int


@lru_cache(maxsize=None)
def hilbert_function(F: BivariateForm) -> HilbertData:
    """Hilbert function (h_0, ..., h_d) and Sperner number of the algebra.

    h_i is the rank of the degree-min(i, d-i) coefficient matrix; the result
    is checked against the closed form (1, 2, ..., s, s, ..., 2, 1).
    """
    if F.is_zero:
        raise ZeroFormError("Hilbert function of the zero form is undefined")
    d = F.degree
    half = [rank_exact(toeplitz(F, i)) for i in range(d // 2 + 1)]
    h = tuple(half[min(i, d - i)] for i in range(d + 1))
    s = max(h)
    expected = tuple(min(i + 1, d - i + 1, s) for i in range(d + 1))
    if h != expected:
        raise RuntimeError(
            f"Hilbert function {h} deviates from the closed form {expected}"
        )
    return HilbertData(h=h, sperner=s)


def sperner_number(F: BivariateForm) -> int:
    return hilbert_function(F).sperner


def monomial_basis(F: BivariateForm, i: int) -> list[tuple[int, int]]:
    """First monomials x^p y^(i-p) that stay independent in degree i.

    Monomials are scanned with the power of x decreasing (x^i first); the
    pivot columns of the exact echelon form of the catalecticant pick the
    basis, so the choice is deterministic.
    """
    if i < 0:
        raise IndexError("negative degree")
    if i > F.degree:
        return []
    pivots = pivot_columns(catalecticant(F, i))
    return [(i - j, j) for j in pivots]


def min_annihilator_degree(F: BivariateForm) -> tuple[int, OperatorPoly]:
    """Smallest degree of an operator annihilating F, with one generator.

    The degree always equals the Sperner number; that identity is enforced
    here rather than assumed.
    """
    if F.is_zero:
        raise ZeroFormError("annihilator degree of the zero form is undefined")
    d = F.degree
    for e in range(1, d + 2):
        kern = kernel_basis(catalecticant(F, e))
        if kern:
            v = kern[0]
            coeffs = [Fraction(0)] * (e + 1)
            for j, val in enumerate(v):
                coeffs[e - j] = val
            gen = OperatorPoly(e, tuple(coeffs))
            s = sperner_number(F)
            if e != s:
                raise RuntimeError(
                    f"first annihilator degree {e} disagrees with Sperner {s}"
                )
            return e, gen
    raise RuntimeError("no annihilator found below degree d+2")


@dataclass(frozen=True)
class GramMatrix:
    """A (mixed) Lefschetz pairing written on a monomial basis of A_i."""

    degree_index: int
    basis: tuple[tuple[int, int], ...]
    matrix: RatMatrix


def _gram_from_operator(
    F: BivariateForm, middle: OperatorPoly, i: int
) -> GramMatrix:
    basis = monomial_basis(F, i)
    sign = -1 if i % 2 else 1
    entries = []
    mons = [OperatorPoly.monomial(p, y) for p, y in basis]
    for mp in mons:
        for mq in mons:
            entries.append(sign * operator_value(middle * mp * mq, F))
    return GramMatrix(
        degree_index=i,
        basis=tuple(basis),
        matrix=RatMatrix(len(basis), len(basis), entries),
    )


def lefschetz_gram(F: BivariateForm, ell: LinearForm, i: int) -> GramMatrix:
    """Pairing (a, b) -> (-1)^i (ell^(d-2i) a b) o F on the degree-i basis."""
    d = F.degree
    if not 0 <= i <= d // 2:
        raise IndexError(f"index {i} out of range for degree {d}")
    middle = OperatorPoly.from_linear(ell) ** (d - 2 * i)
    return _gram_from_operator(F, middle, i)


def _check_tuple(F: BivariateForm, ells) -> list[LinearForm]:
    ells = list(ells)
    if len(ells) != F.degree + 1:
        raise ValueError(
            f"need a tuple of {F.degree + 1} linear forms, got {len(ells)}"
        )
    return ells


def mixed_lefschetz_gram(F: BivariateForm, ells, i: int) -> GramMatrix:
    """Mixed pairing using the product ell_1 ... ell_(d-2i).

    The tuple has d+1 entries; entry 0 is reserved for the primitive
    subspace and does not enter the pairing.
    """
    ells = _check_tuple(F, ells)
    d = F.degree
    if not 0 <= i <= d // 2:
        raise IndexError(f"index {i} out of range for degree {d}")
    middle = OperatorPoly(0, (Fraction(1),))
    for ell in ells[1 : d - 2 * i + 1]:
        middle = middle * OperatorPoly.from_linear(ell)
    return _gram_from_operator(F, middle, i)


def _primitive_from_operator(
    F: BivariateForm, op: OperatorPoly, i: int
) -> list[Vector]:
    """Kernel of multiplication by `op` out of degree i, in the monomial basis.

    The class of (op * m) is faithfully recorded by its action on F, so the
    kernel of the coefficient matrix of m -> (op * m) o F is exactly the
    kernel of the multiplication map.
    """
    basis = monomial_basis(F, i)
    if not basis:
        return []
    G = apply_operator(op, F)
    columns = []
    for p, y in basis:
        w = apply_operator(OperatorPoly.monomial(p, y), G)
        columns.append(w.coeffs)
    rows = len(columns[0])
    M = RatMatrix(
        rows, len(basis), [col[r] for r in range(rows) for col in columns]
    )
    return kernel_basis(M)


def primitive_basis(F: BivariateForm, ell: LinearForm, i: int) -> list[Vector]:
    """Basis of the kernel of ell^(d-2i+1): A_i -> A_(d-i+1).

    Vectors are coordinates with respect to monomial_basis(F, i).  Above
    half the degree the subspace is zero by convention.
    """
    d = F.degree
    if i < 0:
        raise IndexError("negative degree")
    if i > d // 2:
        return []
    op = OperatorPoly.from_linear(ell) ** (d - 2 * i + 1)
    return _primitive_from_operator(F, op, i)


def mixed_primitive_basis(F: BivariateForm, ells, i: int) -> list[Vector]:
    """Kernel of multiplication by ell_0 ell_1 ... ell_(d-2i) out of A_i."""
    ells = _check_tuple(F, ells)
    d = F.degree
    if i < 0:
        raise IndexError("negative degree")
    if i > d // 2:
        return []
    op = OperatorPoly(0, (Fraction(1),))
    for ell in ells[: d - 2 * i + 1]:
        op = op * OperatorPoly.from_linear(ell)
    return _primitive_from_operator(F, op, i)


def check_ordinary_hrr(F: BivariateForm, ell: LinearForm, i: int) -> bool:
    """Positive definiteness of every Lefschetz pairing restricted to its
    primitive subspace, in all degrees up to i."""
    if ell.is_zero:
        raise ValueError("the zero linear form is not allowed")
    if F.is_zero:
        raise ZeroFormError("the zero form has no Hodge-Riemann behaviour")
    d = F.degree
    for j in range(min(i, d // 2) + 1):
        gram = lefschetz_gram(F, ell, j)
        prim = primitive_basis(F, ell, j)
        if not prim:
            continue
        if not is_positive_definite(restrict_bilinear(gram.matrix, prim)):
            return False
    return True


def check_mixed_hrr(F: BivariateForm, ells, i: int) -> bool:
    """Mixed variant: the pairing must additionally be non-degenerate on the
    whole graded piece, exactly as the definition demands."""
    ells = _check_tuple(F, ells)
    if any(ell.is_zero for ell in ells):
        raise ValueError("zero linear forms are not allowed in the tuple")
    if F.is_zero:
        raise ZeroFormError("the zero form has no Hodge-Riemann behaviour")
    d = F.degree
    for j in range(min(i, d // 2) + 1):
        gram = mixed_lefschetz_gram(F, ells, j)
        if det_exact(gram.matrix) == 0:
            return False
        prim = mixed_primitive_basis(F, ells, j)
        if not prim:
            continue
        if not is_positive_definite(restrict_bilinear(gram.matrix, prim)):
            return False
    return True
