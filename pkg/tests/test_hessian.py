import random
from fractions import Fraction as Q
from math import perm

import pytest
from hypothesis import given, settings, strategies as st

from tpforms.apolarity import sperner_number
from tpforms.forms import (
    ZeroFormError,
    from_monomial_coeffs,
    from_normalized_coeffs,
)
from tpforms.hessian import (
    decide_ordinary_hrr_cone,
    hessian_matrix,
    hessian_polynomial,
    path_matrix_identity_check,
    plucker_expansion,
    plucker_terms,
    positive_on_quadrant,
    ssyt_count,
    ssyt_count_bruteforce,
    subset_to_partition,
)
from tpforms.linalg import ResourceLimitError

SYM = from_monomial_coeffs([1, 3, 1])
BOUNDARY = from_monomial_coeffs([0, 0, 1, 0])  # X^2 Y
DIAG = from_monomial_coeffs([1, 0, 1])


def rand_form(rng, d):
    while True:
        F = from_normalized_coeffs(
            [Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(d + 1)]
        )
        if not F.is_zero:
            return F


def test_hessian_matrix_examples():
    H = hessian_matrix(SYM, 1)
    values = [[f.scalar() for f in row] for row in H.entries]
    assert values == [[2, 3], [3, 2]]

    H = hessian_matrix(BOUNDARY, 1)
    mono = [[f.monomial_coeffs() for f in row] for row in H.entries]
    # [[0, 2X], [2X, 2Y]]
    assert mono == [
        [(0, 0), (0, 2)],
        [(0, 2), (2, 0)],
    ]

    H0 = hessian_matrix(SYM, 0)
    assert H0.size == 1 and H0.at(0, 0) == SYM
    with pytest.raises(IndexError):
        hessian_matrix(SYM, 2)


def test_hessian_polynomial_examples():
    assert hessian_polynomial(SYM, 1).poly.monomial_coeffs() == (Q(5),)
    assert hessian_polynomial(BOUNDARY, 1).poly.monomial_coeffs() == (0, 0, 4)
    assert hessian_polynomial(DIAG, 1).poly.monomial_coeffs() == (Q(-4),)
    assert hessian_polynomial(SYM, 0).poly == SYM


def test_hessian_vanishes_at_and_above_sperner():
    rng = random.Random(67)
    for _ in range(20):
        d = rng.randint(2, 8)
        F = rand_form(rng, d)
        s = sperner_number(F)
        for i in range(s, d // 2 + 1):
            assert hessian_polynomial(F, i).poly.is_zero


def test_positive_on_quadrant_examples():
    H = from_monomial_coeffs([0, 0, 4])  # 4X^2
    assert positive_on_quadrant(H, closed=False)
    assert not positive_on_quadrant(H, closed=True)
    cube = from_normalized_coeffs([1, 1, 1, 1])
    assert positive_on_quadrant(cube, True)
    assert positive_on_quadrant(cube, False)
    neg = from_monomial_coeffs([-4])
    assert not positive_on_quadrant(neg, True)
    assert not positive_on_quadrant(neg, False)
    zero = from_normalized_coeffs([0, 0, 0])
    assert not positive_on_quadrant(zero, True)
    assert not positive_on_quadrant(zero, False)


def test_positive_on_quadrant_interior_root():
    # (X - Y)^2 is non-negative but vanishes on the diagonal ray
    H = from_monomial_coeffs([1, -2, 1])
    assert not positive_on_quadrant(H, False)
    # X^2 + XY has no root strictly inside and is positive there
    H = from_monomial_coeffs([0, 1, 1])
    assert positive_on_quadrant(H, False)
    assert not positive_on_quadrant(H, True)


def test_decide_cone_examples():
    assert decide_ordinary_hrr_cone(SYM, 1, True)
    assert decide_ordinary_hrr_cone(BOUNDARY, 1, False)
    assert not decide_ordinary_hrr_cone(BOUNDARY, 1, True)
    assert not decide_ordinary_hrr_cone(DIAG, 1, True)
    assert not decide_ordinary_hrr_cone(DIAG, 1, False)
    with pytest.raises(ZeroFormError):
        decide_ordinary_hrr_cone(from_normalized_coeffs([0, 0]), 1, True)


def test_subset_to_partition_examples():
    p = subset_to_partition((1, 2), 2, 4)
    assert p.shape == () and p.size == 0
    p = subset_to_partition((2, 4), 2, 4)
    assert p.shape == (2, 1) and p.conjugate == (2, 1) and p.size == 3
    p = subset_to_partition((3, 4), 2, 4)
    assert p.shape == (2, 2) and p.size == 4
    with pytest.raises(ValueError):
        subset_to_partition((2, 2), 2, 4)
    with pytest.raises(ValueError):
        subset_to_partition((0, 1), 2, 4)


def test_partition_conjugate_sizes_agree():
    from itertools import combinations

    for n in range(1, 9):
        for m in range(1, n + 1):
            for J in combinations(range(1, n + 1), m):
                p = subset_to_partition(J, m, n)
                assert sum(p.shape) == sum(p.conjugate) == p.size
                assert all(part <= n - m for part in p.shape)
                assert len(p.conjugate) <= n - m


def test_ssyt_count_examples():
    assert ssyt_count((), 3) == 1
    assert ssyt_count((2, 1), 2) == 2
    for k in range(1, 6):
        assert ssyt_count((1,), k) == k


def test_ssyt_count_matches_bruteforce():
    def shapes_within(rows, cols):
        out = {()}

        def rec(prefix, cap):
            if len(prefix) == rows:
                return
            for part in range(1, cap + 1):
                shape = prefix + (part,)
                out.add(shape)
                rec(shape, part)

        rec((), cols)
        return sorted(out)

    for shape in shapes_within(4, 4):
        for bound in range(len(shape), 6):
            assert ssyt_count(shape, bound) == ssyt_count_bruteforce(
                shape, bound
            )


def test_ssyt_bruteforce_cap():
    with pytest.raises(ResourceLimitError):
        ssyt_count_bruteforce((5, 5, 5, 5), 6)


def test_plucker_expansion_fixture():
    assert plucker_expansion(SYM, 1).monomial_coeffs() == (Q(5),)
    terms = plucker_terms(SYM, 1)
    assert len(terms) == 1
    assert terms[0]["subset"] == (1, 2)
    assert terms[0]["minor"] == Q(5, 4)
    # index 0 must reproduce the form itself
    sq = from_normalized_coeffs([1, 1, 1])
    assert plucker_expansion(sq, 0) == hessian_polynomial(sq, 0).poly


def test_plucker_equals_hessian_randomly():
    rng = random.Random(71)
    for _ in range(40):
        d = rng.randint(2, 8)
        F = rand_form(rng, d)
        s = sperner_number(F)
        for i in range(min(s, d // 2 + 1)):
            assert plucker_expansion(F, i) == hessian_polynomial(F, i).poly


def test_plucker_leading_term():
    # Only the final subset reaches the full x-exponent.
    rng = random.Random(73)
    for _ in range(15):
        d = rng.randint(2, 7)
        F = rand_form(rng, d)
        i = rng.randint(0, d // 2)
        big_d = (i + 1) * (d - 2 * i)
        terms = plucker_terms(F, i)
        top = [t for t in terms if t["x_exponent"] == big_d]
        assert len(top) == 1
        n = d - i + 1
        assert top[0]["subset"] == tuple(range(d - 2 * i + 1, n + 1))
        for t in terms:
            assert 0 <= t["x_exponent"] <= big_d


def test_path_matrix_identity():
    assert path_matrix_identity_check(SYM, 1)
    rng = random.Random(79)
    for _ in range(15):
        d = rng.randint(2, 8)
        F = rand_form(rng, d)
        for i in range(d // 2 + 1):
            assert path_matrix_identity_check(F, i)
    with pytest.raises(ResourceLimitError):
        path_matrix_identity_check(SYM, 1, truncation=2)


def test_hessian_evaluation_matches_multiplication_map():
    # Specialization of the path identity at a rational point: the reversed
    # Hessian evaluated at (a, b) is the falling-factorial multiple of the
    # Toeplitz-path product block there.
    rng = random.Random(83)
    for _ in range(10):
        d = rng.randint(2, 7)
        F = rand_form(rng, d)
        i = rng.randint(0, d // 2)
        a = Q(rng.randint(-3, 3), rng.randint(1, 3))
        b = Q(rng.randint(-3, 3), rng.randint(1, 3))
        w = d - 2 * i
        hess = hessian_matrix(F, i)
        fall = perm(d, 2 * i)
        from math import comb

        c = F.coeffs
        for p in range(i + 1):
            for q in range(i + 1):
                lhs = hess.at(i - p, q).evaluate(a, b)
                rhs = Q(0)
                for exp in range(w + 1):
                    idx = (i + q) + exp - p
                    if 0 <= idx <= d:
                        rhs += (
                            c[idx]
                            * comb(w, exp)
                            * a**exp
                            * b ** (w - exp)
                        )
                assert lhs == fall * rhs


@settings(max_examples=40)
@given(
    coeffs=st.lists(
        st.integers(min_value=-3, max_value=3), min_size=3, max_size=9
    ).filter(lambda cs: any(cs)),
    data=st.data(),
)
def test_plucker_hessian_property(coeffs, data):
    F = from_normalized_coeffs([Q(c) for c in coeffs])
    i = data.draw(st.integers(min_value=0, max_value=F.degree // 2))
    assert plucker_expansion(F, i) == hessian_polynomial(F, i).poly
