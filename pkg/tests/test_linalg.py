import random
from fractions import Fraction as Q

import pytest

from tpforms.linalg import (
    RatMatrix,
    det_exact,
    is_positive_definite,
    kernel_basis,
    minor,
    rank_exact,
    restrict_bilinear,
    subsets_colex,
)


def M(rows):
    return RatMatrix.from_rows(rows)


def rand_matrix(rng, m, n, lo=-5, hi=5, max_den=3):
    return M(
        [
            [Q(rng.randint(lo, hi), rng.randint(1, max_den)) for _ in range(n)]
            for _ in range(m)
        ]
    )


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return Q(1)
    if n == 1:
        return rows[0][0]
    total = Q(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * cofactor_det(sub)
    return total


def test_det_hand_examples():
    assert det_exact(M([[2, 3], [3, 2]])) == -5
    assert det_exact(RatMatrix.identity(3)) == 1
    assert det_exact(M([[0, 1], [1, 0]])) == -1


def test_det_empty_and_errors():
    assert det_exact(RatMatrix(0, 0, [])) == 1
    with pytest.raises(ValueError):
        det_exact(M([[1, 2, 3], [4, 5, 6]]))


def test_det_matches_cofactor_expansion():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 4)
        A = rand_matrix(rng, n, n)
        assert det_exact(A) == cofactor_det(A.row_lists())


def test_minor_examples():
    flat = M([[1, 1, 1], [1, 1, 1]])
    assert minor(flat, (0, 1), (0, 2)) == 0
    sym = M([[Q(3, 2), 1], [1, Q(3, 2)]])
    assert minor(sym, (0, 1), (0, 1)) == Q(5, 4)
    assert minor(sym, (0,), (1,)) == sym.at(0, 1)


def test_minor_errors():
    A = M([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        minor(A, (0, 1), (0,))
    with pytest.raises(IndexError):
        minor(A, (0,), (5,))
    with pytest.raises(ValueError):
        minor(A, (1, 0), (0, 1))


def test_rank_examples():
    assert rank_exact(M([[1, 1, 1, 1], [1, 1, 1, 1]])) == 1
    assert rank_exact(M([[0, Q(1, 3), 0], [0, 0, Q(1, 3)]])) == 2
    assert rank_exact(RatMatrix.zero(3, 2)) == 0


def test_rank_transpose_invariance():
    rng = random.Random(11)
    for _ in range(40):
        A = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert rank_exact(A) == rank_exact(A.transpose())


def test_kernel_examples():
    assert kernel_basis(M([[5, 5]])) == [(Q(-1), Q(1))]
    assert kernel_basis(RatMatrix.identity(3)) == []
    assert kernel_basis(RatMatrix.zero(2, 2)) == [
        (Q(1), Q(0)),
        (Q(0), Q(1)),
    ]


def test_kernel_vectors_annihilate_and_count():
    rng = random.Random(3)
    for _ in range(40):
        A = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        basis = kernel_basis(A)
        assert len(basis) == A.cols - rank_exact(A)
        for v in basis:
            assert all(x == 0 for x in A.matvec(v))


def test_positive_definite_examples():
    assert is_positive_definite(M([[2, 0], [0, 2]]))
    assert not is_positive_definite(M([[-2, -3], [-3, -2]]))
    assert is_positive_definite(RatMatrix(0, 0, []))
    with pytest.raises(ValueError):
        is_positive_definite(M([[1, 2], [3, 4]]))


def char_poly(A):
    """det(t*I - A) by Faddeev-LeVerrier; coefficients ascending."""
    n = A.rows
    coeffs = [Q(0)] * (n + 1)
    coeffs[n] = Q(1)
    Mk = RatMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = A.matmul(Mk)
        trace = sum((Mk.at(j, j) for j in range(n)), Q(0))
        c = -trace / k
        coeffs[n - k] = c
        Mk = RatMatrix(
            n,
            n,
            [
                Mk.at(r, col) + (c if r == col else 0)
                for r in range(n)
                for col in range(n)
            ],
        )
    return coeffs


def test_positive_definite_matches_descartes_oracle():
    # Symmetric matrices have real spectrum, so all eigenvalues positive is
    # the same as strictly alternating characteristic coefficients.
    rng = random.Random(19)
    for _ in range(60):
        n = rng.randint(1, 4)
        B = rand_matrix(rng, n, n, lo=-3, hi=3)
        S = RatMatrix(
            n,
            n,
            [
                B.at(r, c) + B.at(c, r)
                for r in range(n)
                for c in range(n)
            ],
        )
        cs = char_poly(S)
        alternating = all(
            cs[k] != 0 and (cs[k] > 0) == ((n - k) % 2 == 0)
            for k in range(n + 1)
        )
        assert is_positive_definite(S) == alternating


def test_char_poly_oracle_sanity():
    # spectrum {1, 3} -> (t-1)(t-3) = t^2 - 4t + 3
    assert char_poly(M([[2, 1], [1, 2]])) == [Q(3), Q(-4), Q(1)]


def test_restrict_bilinear():
    G = M([[2, 0], [0, -2]])
    restricted = restrict_bilinear(G, [(1, 1)])
    assert restricted.row_lists() == [[Q(0)]]


def test_subsets_colex_order():
    assert subsets_colex(4, 2) == [
        (0, 1),
        (0, 2),
        (1, 2),
        (0, 3),
        (1, 3),
        (2, 3),
    ]
