"""Univariate polynomials over the rationals and Sturm root counting.

Coefficients are stored in ascending degree order.  Root counting on the
positive axis is by Sturm sequences on the square-free part, so multiplicity
never affects the answer and no floating point is involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        x = x if isinstance(x, Fraction) else Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, k) -> "UniPoly":
        k = k if isinstance(k, Fraction) else Fraction(k)
        return UniPoly([c * k for c in self.coeffs])

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly([]), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lead
            quot[k] = q
            if q != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        q, _ = divmod(self, other)
        return q

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        _, r = divmod(self, other)
        return r

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def primitive(self) -> "UniPoly":
        """Scale by a positive rational to coprime integer coefficients.

        Positive scaling keeps every sign, which is all Sturm chains need.
        """
        if self.is_zero:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = gcd(*ints)
        return UniPoly([Fraction(c // g) for c in ints])

    def shift_down(self) -> tuple["UniPoly", int]:
        """Split off the largest power of t dividing the polynomial."""
        if self.is_zero:
            return self, 0
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return UniPoly(self.coeffs[k:]), k

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "UniPoly(0)"
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "UniPoly(" + " + ".join(terms) + ")"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, (a % b).primitive()
    if a.is_zero:
        return a
    return a.scale(1 / a.leading)


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.is_zero:
        raise ValueError("square-free part of the zero polynomial")
    if p.degree == 0:
        return UniPoly([1])
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p
    return p // g


def sign_variations(signs: Sequence[int]) -> int:
    """Sign changes in a sequence, zeros skipped."""
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """Sturm chain of a square-free polynomial, primitive-normalized."""
    chain = [p.primitive()]
    d = p.derivative()
    if not d.is_zero:
        chain.append(d.primitive())
        while True:
            r = chain[-2] % chain[-1]
            if r.is_zero:
                break
            chain.append((-r).primitive())
    return chain


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def count_roots_positive_axis(p: UniPoly, include_endpoint_zero: bool = False):
    """Number of distinct real roots of p in the open interval (0, oo).

    With `include_endpoint_zero` the return value is a pair
    (count, zero_is_root).  Raises on the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("root counting requires a nonzero polynomial")
    stripped, k = p.shift_down()
    zero_is_root = k > 0
    q = squarefree_part(stripped)
    if q.degree <= 0:
        count = 0
    else:
        chain = sturm_chain(q)
        at_zero = [_sgn(f.coeffs[0]) if not f.is_zero else 0 for f in chain]
        at_inf = [_sgn(f.leading) for f in chain]
        count = sign_variations(at_zero) - sign_variations(at_inf)
    if include_endpoint_zero:
        return count, zero_is_root
    return count
