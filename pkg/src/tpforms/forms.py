"""Bivariate homogeneous forms and the differential-operator pairing.

A degree-d form F is stored by its normalized coefficients (c_0, ..., c_d),
meaning F = sum_k binom(d, k) * c_k * X^k Y^(d-k).  Operators are polynomials
in the dual variables x, y acting by partial differentiation: x takes d/dX
and y takes d/dY.  On normalized coefficients that action is a plain index
shift times a falling factorial, which is what makes the whole Toeplitz
machinery downstream a literal re-indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, perm
from typing import Sequence


class ZeroFormError(ValueError):
    """Raised by analysis entry points that need a nonzero form."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' with arbitrary-precision integers."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Inverse of parse_rational; integers print without a denominator."""
    return str(x)


@dataclass(frozen=True)
class BivariateForm:
    """Homogeneous form of fixed degree, held by normalized coefficients."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        cs = tuple(_frac(c) for c in self.coeffs)
        if len(cs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients,"
                f" got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def monomial_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients of X^k Y^(d-k), i.e. binom(d,k) * c_k."""
        d = self.degree
        return tuple(comb(d, k) * c for k, c in enumerate(self.coeffs))

    def scalar(self) -> Fraction:
        if self.degree != 0:
            raise ValueError(f"degree-{self.degree} form is not a scalar")
        return self.coeffs[0]

    def evaluate(self, x, y) -> Fraction:
        x, y = _frac(x), _frac(y)
        d = self.degree
        return sum(
            (a * x**k * y ** (d - k) for k, a in enumerate(self.monomial_coeffs())),
            Fraction(0),
        )

    def __add__(self, other: "BivariateForm") -> "BivariateForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        return BivariateForm(
            self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "BivariateForm") -> "BivariateForm":
        if self.degree != other.degree:
            raise ValueError("cannot subtract forms of different degrees")
        return BivariateForm(
            self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def scale(self, k) -> "BivariateForm":
        k = _frac(k)
        return BivariateForm(self.degree, tuple(c * k for c in self.coeffs))

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "normalized_coeffs": [format_rational(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict, reject_zero: bool = True) -> "BivariateForm":
        try:
            degree = data["degree"]
            raw = data["normalized_coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed form encoding: {exc}") from exc
        if not isinstance(degree, int):
            raise ValueError("form degree must be an integer")
        coeffs = tuple(parse_rational(str(c)) for c in raw)
        form = cls(degree, coeffs)
        if reject_zero and form.is_zero:
            raise ZeroFormError("the zero form is rejected at parse time")
        return form


def from_monomial_coeffs(monomial: Sequence) -> BivariateForm:
    """Build a form from the coefficients of X^k Y^(d-k), k = 0..d."""
    d = len(monomial) - 1
    if d < 0:
        raise ValueError("need at least one coefficient")
    return BivariateForm(
        d, tuple(_frac(a) / comb(d, k) for k, a in enumerate(monomial))
    )


def from_normalized_coeffs(coeffs: Sequence) -> BivariateForm:
    return BivariateForm(len(coeffs) - 1, tuple(_frac(c) for c in coeffs))


@dataclass(frozen=True)
class LinearForm:
    """Operator-side linear form a*x + b*y."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


@dataclass(frozen=True)
class OperatorPoly:
    """Homogeneous polynomial in the dual variables x, y.

    coeffs[a] is the coefficient of x^a y^(e-a) for a = 0..e.
    """

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(_frac(c) for c in self.coeffs)
        if len(cs) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def monomial(cls, x_exp: int, y_exp: int) -> "OperatorPoly":
        e = x_exp + y_exp
        cs = [Fraction(0)] * (e + 1)
        cs[x_exp] = Fraction(1)
        return cls(e, tuple(cs))

    @classmethod
    def from_linear(cls, ell: LinearForm) -> "OperatorPoly":
        return cls(1, (ell.b, ell.a))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __mul__(self, other: "OperatorPoly") -> "OperatorPoly":
        e = self.degree + other.degree
        out = [Fraction(0)] * (e + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return OperatorPoly(e, tuple(out))

    def __pow__(self, n: int) -> "OperatorPoly":
        if n < 0:
            raise ValueError("negative operator power")
        result = OperatorPoly(0, (Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_linear(self, p, q, r, s) -> "OperatorPoly":
        """Apply the ring map x -> p*x + q*y, y -> r*x + s*y."""
        px = OperatorPoly(1, (_frac(q), _frac(p)))
        py = OperatorPoly(1, (_frac(s), _frac(r)))
        e = self.degree
        out = OperatorPoly(e, tuple([Fraction(0)] * (e + 1)))
        for a, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = (px**a) * (py ** (e - a))
            out = OperatorPoly(
                e, tuple(o + c * t for o, t in zip(out.coeffs, term.coeffs))
            )
        return out


def apply_operator(f: OperatorPoly, F: BivariateForm) -> BivariateForm:
    """Differentiate: f acts on F with x = d/dX, y = d/dY.

    Returns the degree (d - e) form; an operator of excessive degree
    annihilates and yields the zero scalar.
    """
    d, e = F.degree, f.degree
    if e > d:
        return BivariateForm(0, (Fraction(0),))
    fall = perm(d, e)
    out = []
    for k in range(d - e + 1):
        acc = Fraction(0)
        for a, g in enumerate(f.coeffs):
            if g != 0:
                acc += g * F.coeffs[k + a]
        out.append(fall * acc)
    return BivariateForm(d - e, tuple(out))


def operator_value(f: OperatorPoly, F: BivariateForm) -> Fraction:
    """Scalar f o F for deg f = deg F: equals d! * sum_a f_a c_a."""
    if f.degree != F.degree:
        raise ValueError("operator_value needs matching degrees")
    return apply_operator(f, F).scalar()


def linear_substitute(F: BivariateForm, p, q, r, s) -> BivariateForm:
    """The form G(X, Y) = F(p*X + r*Y, q*X + s*Y), renormalized."""
    p, q, r, s = _frac(p), _frac(q), _frac(r), _frac(s)
    d = F.degree
    # Work in monomial coefficients: G = sum_k a_k (pX+rY)^k (qX+sY)^(d-k).
    out = [Fraction(0)] * (d + 1)
    for k, a in enumerate(F.monomial_coeffs()):
        if a == 0:
            continue
        first = [comb(k, i) * p**i * r ** (k - i) for i in range(k + 1)]
        second = [
            comb(d - k, j) * q**j * s ** (d - k - j) for j in range(d - k + 1)
        ]
        for i, fi in enumerate(first):
            if fi == 0:
                continue
            for j, sj in enumerate(second):
                out[i + j] += a * fi * sj
    return from_monomial_coeffs(out)


def shift(F: BivariateForm, t) -> BivariateForm:
    """One-parameter shear F(X + t*Y, Y)."""
    return linear_substitute(F, 1, 0, t, 1)


def double_shift(F: BivariateForm, t) -> BivariateForm:
    """Symmetric shear F(X + t*Y, t*X + Y); invertible for 0 < t < 1."""
    return linear_substitute(F, 1, t, t, 1)


def adjoint_pairing_check(
    f: OperatorPoly, F: BivariateForm, p, q, r, s
) -> bool:
    """Check that the coordinate change on operators is adjoint to the one
    on forms: phi(f) o F == f o phi*(F) as scalars."""
    if f.degree != F.degree:
        raise ValueError("adjoint check needs deg f == deg F")
    left = operator_value(f.substitute_linear(p, q, r, s), F)
    right = operator_value(f, linear_substitute(F, p, q, r, s))
    return left == right
