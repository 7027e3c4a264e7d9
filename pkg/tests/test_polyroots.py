import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from tpforms.polyroots import (
    UniPoly,
    count_roots_positive_axis,
    poly_gcd,
    squarefree_part,
    sturm_chain,
)


def test_hand_examples():
    # t^2 - 3t + 2 has roots 1, 2
    assert count_roots_positive_axis(UniPoly([2, -3, 1])) == 2
    # (t+1)^2 has both roots negative
    assert count_roots_positive_axis(UniPoly([1, 2, 1])) == 0
    # t^3: nothing on the open axis, but 0 is a root
    assert count_roots_positive_axis(UniPoly([0, 0, 0, 1]), True) == (0, True)


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        count_roots_positive_axis(UniPoly([]))


def test_constant_has_no_roots():
    assert count_roots_positive_axis(UniPoly([5]), True) == (0, False)


def poly_from_roots(roots, extra_irreducible=0):
    p = UniPoly([1])
    for r in roots:
        p = p * UniPoly([-r, 1])
    for _ in range(extra_irreducible):
        p = p * UniPoly([1, 0, 1])  # t^2 + 1 adds no real roots
    return p


def test_counts_match_construction():
    rng = random.Random(23)
    for _ in range(80):
        n_roots = rng.randint(0, 6)
        roots = [
            Q(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n_roots)
        ]
        # repeat some roots to exercise the square-free reduction
        if roots and rng.random() < 0.5:
            roots.append(rng.choice(roots))
        p = poly_from_roots(roots, extra_irreducible=rng.randint(0, 1))
        expected = len({r for r in roots if r > 0})
        zero_expected = any(r == 0 for r in roots)
        count, has_zero = count_roots_positive_axis(p, True)
        assert count == expected
        assert has_zero == zero_expected


def test_counts_match_bisection_oracle():
    # Independent check: count sign changes of the square-free part over a
    # fine rational grid stretching past the Cauchy root bound.
    rng = random.Random(5)
    for _ in range(30):
        roots = [
            Q(rng.randint(-5, 5), rng.randint(1, 3))
            for _ in range(rng.randint(1, 5))
        ]
        p = squarefree_part(poly_from_roots(roots))
        bound = 1 + max(abs(c) for c in p.coeffs) / abs(p.leading)
        steps = 2000
        changes = 0
        prev_sign = 0
        for k in range(1, steps + 1):
            t = Q(k, steps) * bound * 2
            v = p(t)
            s = (v > 0) - (v < 0)
            if s == 0:
                changes += 1  # grid hit a root exactly
                prev_sign = 0
                continue
            if prev_sign and s != prev_sign:
                changes += 1
            prev_sign = s
        assert count_roots_positive_axis(p) == changes


def test_multiplicity_is_irrelevant():
    p = poly_from_roots([Q(2), Q(2), Q(2), Q(-1)])
    assert count_roots_positive_axis(p) == 1


def test_sturm_chain_endpoints():
    chain = sturm_chain(UniPoly([-2, 0, 1]))  # t^2 - 2
    assert chain[0].degree == 2
    assert all(not f.is_zero for f in chain)


def test_poly_gcd():
    p = UniPoly([-1, 0, 1])  # (t-1)(t+1)
    q = UniPoly([-1, 1])  # t - 1
    assert poly_gcd(p, q) == UniPoly([-1, 1])


small_polys = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=8
).filter(lambda cs: any(cs))


@given(cs=small_polys)
def test_count_bounded_by_degree(cs):
    p = UniPoly(cs)
    count = count_roots_positive_axis(p)
    assert 0 <= count <= max(p.degree, 0)


@given(cs=small_polys)
def test_irreducible_factor_changes_nothing(cs):
    p = UniPoly(cs)
    q = p * UniPoly([1, 0, 1])
    assert count_roots_positive_axis(p) == count_roots_positive_axis(q)


@given(cs=small_polys)
def test_zero_root_flag(cs):
    p = UniPoly(cs)
    shifted = p * UniPoly([0, 1])
    count, has_zero = count_roots_positive_axis(shifted, True)
    assert has_zero
    assert count == count_roots_positive_axis(p)
