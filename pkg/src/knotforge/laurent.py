"""Exact Laurent polynomials with half-integer exponents.

All coefficients are arbitrary-precision rationals (`fractions.Fraction`);
no floating point is used anywhere in this module.  Exponents are stored
internally as *doubled* integers, so ``t**Fraction(1,2)`` has stored key 1
and an ordinary ``t**3`` has stored key 6.  A polynomial is *integral*
when every stored key is even.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]


def _as_fraction(x: Rat) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _as_doubled_exponent(e) -> int:
    """Convert an exponent (int, or Fraction with denominator 1 or 2) to its doubled key."""
    if isinstance(e, int):
        return 2 * e
    if isinstance(e, Fraction):
        if e.denominator == 1:
            return 2 * e.numerator
        if e.denominator == 2:
            return e.numerator
    raise ValueError(f"exponent must be a half-integer, got {e!r}")


class LaurentPoly:
    """A Laurent polynomial in one formal variable, with half-integer exponents.

    Instances are immutable and hashable; all arithmetic returns new values,
    so they can be shared freely between threads.
    """

    __slots__ = ("_terms",)

    def __init__(self, doubled_terms: Mapping[int, Rat] | None = None):
        terms = {}
        if doubled_terms:
            for k, c in doubled_terms.items():
                if not isinstance(k, int):
                    raise TypeError("doubled exponent keys must be int")
                c = _as_fraction(c)
                if c:
                    terms[k] = c
        self._terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial(1, 0)

    @classmethod
    def monomial(cls, coeff: Rat, exponent) -> "LaurentPoly":
        """``coeff * t**exponent`` where exponent is an int or half-integer Fraction."""
        return cls({_as_doubled_exponent(exponent): coeff})

    @classmethod
    def from_exponents(cls, terms: Mapping[Rat, Rat]) -> "LaurentPoly":
        """Build from a map exponent -> coefficient (exponents half-integers)."""
        return cls({_as_doubled_exponent(e): c for e, c in terms.items()})

    # -- inspection --------------------------------------------------------

    def doubled_terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, exponent) -> Fraction:
        """Coefficient of ``t**exponent`` (zero when absent)."""
        return self._terms.get(_as_doubled_exponent(exponent), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_integral(self) -> bool:
        """True when every exponent is an integer (all doubled keys even)."""
        return all(k % 2 == 0 for k in self._terms)

    def exponents(self) -> list[Fraction]:
        return sorted(Fraction(k, 2) for k in self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out._terms = {k: v * c for k, v in self._terms.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = ka + kb
                s = terms.get(k, Fraction(0)) + ca * cb
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reciprocal_variable(self) -> "LaurentPoly":
        """Substitute t -> 1/t (negate every exponent)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {-k: c for k, c in self._terms.items()}
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- analytic extraction ----------------------------------------------

    def moment(self, i: int) -> Fraction:
        """The i-th moment sum(a_e * e**i) over terms a_e * t**e.

        Equals the i-th derivative of p(e**h) at h = 0.
        """
        if i < 0:
            raise ValueError("moment order must be non-negative")
        total = Fraction(0)
        for k, c in self._terms.items():
            total += c * Fraction(k, 2) ** i
        return total

    def substitute_exp(self, order: int) -> "TruncatedSeries":
        """Truncated Taylor expansion of p(e**h) about h = 0, through h**order."""
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = [Fraction(0)] * (order + 1)
        for k, c in self._terms.items():
            e = Fraction(k, 2)
            power = Fraction(1)
            for i in range(order + 1):
                coeffs[i] += c * power / factorial(i)
                power *= e
        return TruncatedSeries(order, coeffs)

    # -- rendering ---------------------------------------------------------

    def render(self, variable: str = "t") -> str:
        """Deterministic text form, terms sorted by descending exponent.

        Examples: ``1 + 2*z^2 - 3*z^4`` rendered as
        ``-3*z^4 + 2*z^2 + 1`` style output with exponents in lowest terms.
        """
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                e = Fraction(k, 2)
                exp = str(e.numerator) if e.denominator == 1 else f"({e})"
                var = f"{variable}^{exp}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"


class TruncatedSeries:
    """A Taylor polynomial in h, truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Rat]):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.order = order
        self.coeffs = coeffs

    def derivative_at_zero(self, i: int) -> Fraction:
        """i! times the h**i coefficient."""
        if not 0 <= i <= self.order:
            raise ValueError(f"derivative order {i} outside truncation order {self.order}")
        return self.coeffs[i] * factorial(i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*h^{i}" for i, c in enumerate(self.coeffs))
        return f"TruncatedSeries({body})"


# Functional aliases mirroring the operation names used by callers that
# prefer free functions over methods.

def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_coeff(p: LaurentPoly, exponent) -> Fraction:
    return p.coeff(exponent)


def lp_moment(p: LaurentPoly, i: int) -> Fraction:
    return p.moment(i)


def lp_substitute_exp(p: LaurentPoly, order: int) -> "TruncatedSeries":
    return p.substitute_exp(order)


# Convenience monomials for building polynomials in the two variables used
# throughout: z (Conway) and t / t^(1/2) (Jones).
ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def var(exponent=1) -> LaurentPoly:
    """The monomial t**exponent with coefficient 1."""
    return LaurentPoly.monomial(1, exponent if isinstance(exponent, Fraction) else int(exponent))


T = var(1)
T_HALF = LaurentPoly.monomial(1, Fraction(1, 2))
T_INV = var(-1)
Z = var(1)
