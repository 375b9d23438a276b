"""Polynomials with coefficients in a prime field or a tower field.

A polynomial is a tuple of coefficient elements, lowest degree first, with
no trailing zeros (the zero polynomial has an empty tuple).  The coefficient
field is any object following the field protocol of :mod:`nbtower.fields`
(``zero``, ``one``, ``embed``).  Coefficients do all the arithmetic through
their operators, so the same code serves GF(p) and every extension level.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ZeroInverse


class Poly:
    """Dense univariate polynomial over a coefficient field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable):
        items = [field.embed(c) for c in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        self.field = field
        self.coeffs = tuple(items)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field) -> "Poly":
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (field.zero(), field.one()))

    @classmethod
    def constant(cls, field, c) -> "Poly":
        return cls(field, (field.embed(c),))

    @classmethod
    def monomial(cls, field, degree: int, c=1) -> "Poly":
        return cls(field, [field.zero()] * degree + [field.embed(c)])

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c) -> "Poly":
        c = self.field.embed(c)
        return Poly(self.field, [a * c for a in self.coeffs])

    def shift_up(self, n: int) -> "Poly":
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return Poly(self.field, (self.field.zero(),) * n + self.coeffs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.field), self
        lead_inv = other.leading().inv()
        rem = list(self.coeffs)
        q = [self.field.zero()] * (len(rem) - len(other.coeffs) + 1)
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            f = c * lead_inv
            q[k - d] = f
            for j, m in enumerate(other.coeffs):
                rem[k - d + j] = rem[k - d + j] - f * m
        return Poly(self.field, q), Poly(self.field, rem[:d])

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == self.field.one():
            return self
        return self.scale(lead.inv())

    def powmod(self, exponent: int, modulus: "Poly") -> "Poly":
        """self^exponent mod modulus, by square and multiply."""
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.field)
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    # -- gcd family ------------------------------------------------------

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def egcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        a, b = self, other
        s0, s1 = Poly.one(self.field), Poly.zero(self.field)
        t0, t1 = Poly.zero(self.field), Poly.one(self.field)
        while not b.is_zero():
            q, r = divmod(a, b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if a.is_zero():
            return a, s0, t0
        norm = a.leading().inv()
        return a.scale(norm), s0.scale(norm), t0.scale(norm)

    def invert_mod(self, modulus: "Poly") -> "Poly":
        """Inverse of self modulo *modulus*; ZeroInverse when not a unit."""
        g, s, _ = (self % modulus).egcd(modulus)
        if g.degree != 0:
            raise ZeroInverse(f"{self} is not invertible mod {modulus}")
        return s % modulus

    # -- transforms ------------------------------------------------------

    def evaluate(self, x):
        """Evaluate at *x*, an element of the coefficient field or of an
        extension of it (coefficients are embedded)."""
        target = x.field
        acc = target.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + target.embed(c)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x))."""
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(self.field, c)
        return acc

    def reversed_poly(self, degree: int | None = None) -> "Poly":
        """x^n * self(1/x) for n = *degree* (defaults to self.degree)."""
        n = self.degree if degree is None else degree
        out = [self.field.zero()] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return Poly(self.field, out)

    def shifted(self, b) -> "Poly":
        """self(x + b)."""
        return self.compose(Poly(self.field, (self.field.embed(b), self.field.one())))

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            if i == 0:
                parts.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                parts.append(x if c == self.field.one() else f"({c})*{x}")
        return " + ".join(parts)


def iter_monic(field, degree: int):
    """All monic polynomials of the given degree, in canonical coordinate
    order of the lower coefficients."""
    import itertools

    elements = list(field.iter_elements())
    for lower in itertools.product(elements, repeat=degree):
        yield Poly(field, list(lower) + [field.one()])
