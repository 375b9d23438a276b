"""Exact arithmetic in GF(p) and in towers of extension fields.

Representation
--------------
A tower is a chain of contexts.  The bottom is a :class:`PrimeModulus`
(the prime field).  Each :class:`FieldCtx` sits on top of its ``base``
(a PrimeModulus or another FieldCtx) with a monic ``modulus`` polynomial,
and its elements store coordinate vectors over the immediate base.  A
flattening routine turns any element into its absolute GF(p) coordinate
vector, which is what all rank computations work on.

The p-power (Frobenius) map is GF(p)-linear on flattened coordinates, so
each context lazily builds the matrix of that map once and answers every
Frobenius, trace and conjugate-sum query with matrix arithmetic.  The
matrices live in numpy int64 arrays; with p < 2^16 every product fits
64 bits, so all of it is exact.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .errors import BadStep, CtxMismatch, NotInPrimeField, ZeroInverse
from .polys import Poly

MAX_PRIME = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (fine below 2^16)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeModulus:
    """The prime field GF(p), the bottom of every tower.

    Acts both as the modulus (a checked prime below 2^16) and as the field
    object creating :class:`FpScalar` values.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int):
            raise TypeError("p must be an integer")
        if not 2 <= p < MAX_PRIME:
            raise ValueError(f"p must satisfy 2 <= p < 2^16, got {p}")
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p

    # -- field protocol ---------------------------------------------------

    @property
    def base(self):
        return None

    @property
    def abs_degree(self) -> int:
        return 1

    @property
    def rel_degree(self) -> int:
        return 1

    def order(self) -> int:
        return self.p

    def zero(self) -> "FpScalar":
        return FpScalar(0, self)

    def one(self) -> "FpScalar":
        return FpScalar(1, self)

    def element(self, value: int) -> "FpScalar":
        return FpScalar(value, self)

    def embed(self, x) -> "FpScalar":
        if isinstance(x, FpScalar):
            if x.field != self:
                raise CtxMismatch(f"cannot embed {x!r} into {self!r}")
            return x
        if isinstance(x, int):
            return FpScalar(x, self)
        raise CtxMismatch(f"cannot embed {x!r} into {self!r}")

    def flatten(self, a: "FpScalar") -> list[int]:
        if not isinstance(a, FpScalar) or a.field != self:
            raise CtxMismatch(f"{a!r} does not belong to {self!r}")
        return [a.value]

    def flatten_np(self, a: "FpScalar") -> np.ndarray:
        return np.array(self.flatten(a), dtype=np.int64)

    def unflatten(self, vec: Sequence[int]) -> "FpScalar":
        if len(vec) != 1:
            raise ValueError("prime-field vector must have length 1")
        return FpScalar(int(vec[0]), self)

    def frobenius(self, a: "FpScalar", k: int = 1) -> "FpScalar":
        return self.embed(a)

    def trace_to_prime(self, a: "FpScalar") -> "FpScalar":
        return self.embed(a)

    def iter_elements(self) -> Iterator["FpScalar"]:
        for v in range(self.p):
            yield FpScalar(v, self)

    def random_element(self, rng) -> "FpScalar":
        return FpScalar(rng.randrange(self.p), self)

    def describe(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        if isinstance(other, PrimeModulus):
            return self.p == other.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PrimeModulus", self.p))

    def __repr__(self) -> str:
        return f"PrimeModulus({self.p})"


class FpScalar:
    """Residue class modulo a prime, the scalar type of the whole library."""

    __slots__ = ("field", "value")

    def __init__(self, value: int, field: PrimeModulus):
        self.field = field
        self.value = value % field.p

    @property
    def p(self) -> int:
        return self.field.p

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def _coerce(self, other) -> "FpScalar | None":
        if isinstance(other, FpScalar):
            if other.field != self.field:
                raise CtxMismatch("scalars from different prime fields")
            return other
        if isinstance(other, int):
            return FpScalar(other, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(o.value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.field)

    def inv(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroInverse("0 has no inverse")
        return FpScalar(pow(self.value, -1, self.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        return FpScalar(pow(self.value, exponent, self.p), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, FpScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, FieldElement):
            return other.__eq__(self)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FpScalar({self.value} mod {self.p})"

    def __str__(self) -> str:
        return str(self.value)


class FieldCtx:
    """One level of an extension tower.

    Immutable after construction; the lazy caches (Frobenius matrices and
    friends) are filled once and only read afterwards, so sharing a context
    between threads is safe.
    """

    __slots__ = (
        "base",
        "modulus",
        "rel_degree",
        "abs_degree",
        "p",
        "kind",
        "alpha",
        "xi",
        "s",
        "_prime",
        "_mod_tail",
        "_hash",
        "_frob_pows",
        "_trace_mat",
    )

    KIND_AS = "artin_schreier"
    KIND_KUMMER = "kummer"
    KIND_GENERIC = "generic"

    def __init__(self, base, modulus: Poly, kind: str = KIND_GENERIC,
                 alpha=None, xi=None, s: int | None = None):
        if modulus.field != base:
            raise CtxMismatch("modulus must have coefficients in the base field")
        if modulus.degree < 2:
            raise ValueError("extension degree must be at least 2")
        if not modulus.is_monic():
            raise ValueError("modulus must be monic")
        self.base = base
        self.modulus = modulus
        self.rel_degree = modulus.degree
        self.abs_degree = modulus.degree * base.abs_degree
        self.p = base.p
        self.kind = kind
        self.alpha = alpha
        self.xi = xi
        self.s = s
        prime = base if isinstance(base, PrimeModulus) else base._prime
        self._prime = prime
        # x^d = sum of tail[j] * x^j: the negated low coefficients, kept as
        # a sparse list because tower moduli have very few nonzero terms.
        self._mod_tail = tuple(
            (j, -modulus.coeffs[j])
            for j in range(self.rel_degree)
            if not modulus.coeff(j).is_zero()
        )
        self._hash = hash(("FieldCtx", hash(base), modulus.coeffs))
        self._frob_pows: dict[int, np.ndarray] = {}
        self._trace_mat = None

        if kind == self.KIND_AS:
            self._check_as_shape()
        elif kind == self.KIND_KUMMER:
            self._check_kummer_shape()

    def _check_as_shape(self):
        p = self.p
        if self.rel_degree != p:
            raise ValueError("degree of an x^p - x - a modulus must equal p")
        if self.alpha is None or self.base.embed(self.alpha).is_zero():
            raise ValueError("the constant a of x^p - x - a must be nonzero")
        expected = artin_schreier_modulus(self.base, self.alpha)
        if self.modulus != expected:
            raise ValueError("modulus is not of the form x^p - x - a")

    def _check_kummer_shape(self):
        if self.xi is None or self.base.embed(self.xi).is_zero():
            raise ValueError("the root-of-unity constant must be nonzero")
        expected = kummer_modulus(self.base, self.xi, self.rel_degree)
        if self.modulus != expected:
            raise ValueError("modulus is not of the form x^d - c")

    # -- constructors ------------------------------------------------------

    @classmethod
    def artin_schreier(cls, base, alpha) -> "FieldCtx":
        alpha = base.embed(alpha)
        return cls(base, artin_schreier_modulus(base, alpha),
                   kind=cls.KIND_AS, alpha=alpha)

    @classmethod
    def kummer(cls, base, xi, degree: int, s: int) -> "FieldCtx":
        xi = base.embed(xi)
        return cls(base, kummer_modulus(base, xi, degree),
                   kind=cls.KIND_KUMMER, xi=xi, s=s)

    @classmethod
    def generic(cls, base, modulus: Poly) -> "FieldCtx":
        return cls(base, modulus)

    # -- field protocol ----------------------------------------------------

    def order(self) -> int:
        return self.p ** self.abs_degree

    def zero(self) -> "FieldElement":
        return FieldElement(self, (self.base.zero(),) * self.rel_degree)

    def one(self) -> "FieldElement":
        coords = [self.base.one()] + [self.base.zero()] * (self.rel_degree - 1)
        return FieldElement(self, tuple(coords))

    def generator(self) -> "FieldElement":
        """The residue class of x, the root of the modulus."""
        coords = [self.base.zero()] * self.rel_degree
        coords[1] = self.base.one()
        return FieldElement(self, tuple(coords))

    def element(self, coords: Sequence) -> "FieldElement":
        if len(coords) != self.rel_degree:
            raise ValueError(
                f"expected {self.rel_degree} coordinates, got {len(coords)}")
        return FieldElement(self, tuple(self.base.embed(c) for c in coords))

    def base_chain(self) -> list:
        """[self, base, ..., PrimeModulus]."""
        chain = [self]
        cur = self.base
        while isinstance(cur, FieldCtx):
            chain.append(cur)
            cur = cur.base
        chain.append(cur)
        return chain

    def embed(self, x) -> "FieldElement":
        """Lift an int, scalar, or lower-level element into this field."""
        if isinstance(x, FieldElement) and x.ctx == self:
            return x
        if isinstance(x, int):
            x = FpScalar(x, self._prime)
        chain = self.base_chain()
        for idx, field in enumerate(chain):
            if x.field == field:
                for level in reversed(chain[:idx]):
                    pad = (level.base.zero(),) * (level.rel_degree - 1)
                    x = FieldElement(level, (x,) + pad)
                return x
        raise CtxMismatch(f"cannot embed element of {x.field!r} into {self!r}")

    def is_subfield_element(self, x) -> bool:
        """True when x lives in a proper lower level of this tower."""
        if isinstance(x, (FpScalar, FieldElement)):
            f = x.field
            cur = self.base
            while cur is not None:
                if f == cur:
                    return True
                cur = cur.base if isinstance(cur, FieldCtx) else None
        return False

    def flatten(self, a: "FieldElement") -> list[int]:
        if not isinstance(a, FieldElement) or a.ctx != self:
            raise CtxMismatch(f"{a!r} does not belong to {self!r}")
        out: list[int] = []
        for c in a.coords:
            out.extend(self.base.flatten(c))
        return out

    def flatten_np(self, a: "FieldElement") -> np.ndarray:
        return np.array(self.flatten(a), dtype=np.int64)

    def unflatten(self, vec: Sequence[int]) -> "FieldElement":
        if len(vec) != self.abs_degree:
            raise ValueError(
                f"expected {self.abs_degree} coordinates, got {len(vec)}")
        step = self.base.abs_degree
        coords = tuple(
            self.base.unflatten(vec[i * step:(i + 1) * step])
            for i in range(self.rel_degree)
        )
        return FieldElement(self, coords)

    def iter_elements(self) -> Iterator["FieldElement"]:
        """All elements in lexicographic order of flattened coordinates."""
        for vec in itertools.product(range(self.p), repeat=self.abs_degree):
            yield self.unflatten(vec)

    def random_element(self, rng) -> "FieldElement":
        vec = [rng.randrange(self.p) for _ in range(self.abs_degree)]
        return self.unflatten(vec)

    # -- multiplication machinery -------------------------------------------

    def _reduce(self, coeffs: list) -> tuple:
        """Reduce a coefficient list (length < 2*rel_degree) by the modulus."""
        d = self.rel_degree
        tail = self._mod_tail
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c.is_zero():
                continue
            for j, t in tail:
                coeffs[k - d + j] = coeffs[k - d + j] + c * t
        out = coeffs[:d]
        out.extend([self.base.zero()] * (d - len(out)))
        return tuple(out)

    def mul_coords(self, ca: tuple, cb: tuple) -> tuple:
        zero = self.base.zero()
        out = [zero] * (2 * self.rel_degree - 1)
        for i, a in enumerate(ca):
            if a.is_zero():
                continue
            for j, b in enumerate(cb):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return self._reduce(out)

    def inv(self, a: "FieldElement") -> "FieldElement":
        if a.is_zero():
            raise ZeroInverse("0 has no inverse")
        p = Poly(self.base, a.coords)
        inv_poly = p.invert_mod(self.modulus)
        coords = [inv_poly.coeff(i) for i in range(self.rel_degree)]
        return FieldElement(self, tuple(coords))

    # -- Frobenius machinery --------------------------------------------------

    def _build_frob_matrix(self) -> np.ndarray:
        """Matrix of the p-power map on flattened coordinates.

        Column i*Db + j holds the image of the absolute basis element
        x^i * b_j, where b_j runs over the base's absolute basis.  The image
        is (x^p)^i * (b_j^p), taken from the base's own Frobenius matrix.
        """
        d, db = self.rel_degree, self.base.abs_degree
        n = self.abs_degree
        xp_poly = Poly.x(self.base).powmod(self.p, self.modulus)
        xp = FieldElement(
            self, tuple(xp_poly.coeff(i) for i in range(d)))
        powers = [self.one()]
        for _ in range(d - 1):
            powers.append(powers[-1] * xp)
        if isinstance(self.base, PrimeModulus):
            base_images = [self.base.one()]
        else:
            base_mat = self.base.frob_matrix()
            base_images = [
                self.base.unflatten(base_mat[:, j]) for j in range(db)
            ]
        mat = np.zeros((n, n), dtype=np.int64)
        for i in range(d):
            for j in range(db):
                img = powers[i] * base_images[j]
                mat[:, i * db + j] = self.flatten(img)
        return mat

    def frob_matrix(self) -> np.ndarray:
        if 1 not in self._frob_pows:
            self._frob_pows[1] = self._build_frob_matrix()
        return self._frob_pows[1]

    def _frob_power(self, k: int) -> np.ndarray:
        k %= self.abs_degree
        if k == 0:
            return linalg.identity(self.abs_degree)
        cached = self._frob_pows.get(k)
        if cached is None:
            cached = linalg.matpow_mod(self.frob_matrix(), k, self.p)
            self._frob_pows[k] = cached
        return cached

    def frobenius(self, a: "FieldElement", k: int = 1) -> "FieldElement":
        if k < 0:
            raise ValueError("k must be nonnegative")
        k %= self.abs_degree
        if k == 0:
            return self.embed(a)
        vec = linalg.matvec_mod(self._frob_power(k), self.flatten_np(a), self.p)
        return self.unflatten(vec)

    def trace_matrix(self) -> np.ndarray:
        if self._trace_mat is None:
            m = self.frob_matrix()
            acc = linalg.identity(self.abs_degree)
            power = linalg.identity(self.abs_degree)
            for _ in range(self.abs_degree - 1):
                power = linalg.matmul_mod(power, m, self.p)
                acc = (acc + power) % self.p
            self._trace_mat = acc
        return self._trace_mat

    def trace_to_prime(self, a: "FieldElement") -> FpScalar:
        vec = linalg.matvec_mod(self.trace_matrix(), self.flatten_np(a), self.p)
        if np.any(vec[1:]):
            raise NotInPrimeField(
                f"trace of {a!r} did not land in the prime field")
        return FpScalar(int(vec[0]), self._prime)

    def conjugate_sum(self, a: "FieldElement", step: int) -> "FieldElement":
        """Sum of a^(p^(i*step)) over the abs_degree/step conjugates."""
        if step <= 0 or self.abs_degree % step != 0:
            raise BadStep(f"step {step} does not divide degree {self.abs_degree}")
        m = self.abs_degree // step
        mat = self._frob_power(step)
        vec = self.flatten_np(a)
        acc = vec.copy()
        cur = vec
        for _ in range(m - 1):
            cur = linalg.matvec_mod(mat, cur, self.p)
            acc = (acc + cur) % self.p
        return self.unflatten(acc)

    def min_poly(self, a: "FieldElement") -> Poly:
        """Minimal polynomial over GF(p), by the first linear dependence
        among the flattened powers 1, a, a^2, ..."""
        n = self.abs_degree
        tracker = linalg.DependenceTracker(self.p, n, n + 1)
        power = self.one()
        for k in range(n + 1):
            coeffs = tracker.add(self.flatten_np(power))
            if coeffs is not None:
                # a^k = sum(c_j a^j), so the minimal polynomial is
                # x^k - sum(c_j x^j)
                ints = [(-int(c)) % self.p for c in coeffs] + [1]
                return Poly(self._prime, ints)
            power = power * a
        raise AssertionError("no dependence among n+1 vectors of length n")

    # -- comparison / display ---------------------------------------------

    def describe(self) -> str:
        return f"GF({self.p}^{self.abs_degree})"

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldCtx):
            if self is other:
                return True
            return (self._hash == other._hash
                    and self.modulus.coeffs == other.modulus.coeffs
                    and self.base == other.base)
        if isinstance(other, PrimeModulus):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FieldCtx({self.describe()}, modulus={self.modulus})"


class FieldElement:
    """Element of a FieldCtx: a coordinate vector over the immediate base."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: FieldCtx, coords: tuple):
        self.ctx = ctx
        self.coords = coords

    @property
    def field(self) -> FieldCtx:
        return self.ctx

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement) and other.ctx == self.ctx:
            return other
        if isinstance(other, int) or self.ctx.is_subfield_element(other):
            return self.ctx.embed(other)
        return None

    def __add__(self, other):
        if isinstance(other, FieldElement) and other.ctx == self.ctx:
            return FieldElement(
                self.ctx,
                tuple(a + b for a, b in zip(self.coords, other.coords)))
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElement):
                raise CtxMismatch("elements belong to different fields")
            return NotImplemented
        return self + o

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElement):
                raise CtxMismatch("elements belong to different fields")
            return NotImplemented
        return FieldElement(
            self.ctx, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(self.ctx, tuple(-c for c in self.coords))

    def __mul__(self, other):
        if isinstance(other, FieldElement) and other.ctx == self.ctx:
            return FieldElement(
                self.ctx, self.ctx.mul_coords(self.coords, other.coords))
        # Scalars from lower levels act coordinate-wise; no reduction needed.
        if isinstance(other, int) or self.ctx.is_subfield_element(other):
            if isinstance(other, int):
                other = FpScalar(other, self.ctx._prime)
            return FieldElement(
                self.ctx, tuple(c * other for c in self.coords))
        if isinstance(other, FieldElement):
            raise CtxMismatch("elements belong to different fields")
        return NotImplemented

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        return self.ctx.inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = self.ctx.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def as_prime(self) -> FpScalar | None:
        """The FpScalar this element embeds, or None if it is not one."""
        flat = self.ctx.flatten(self)
        if any(flat[1:]):
            return None
        return FpScalar(flat[0], self.ctx._prime)

    def canonical_key(self) -> tuple:
        return tuple(self.ctx.flatten(self))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.coords == other.coords
        if isinstance(other, int):
            return self == self.ctx.embed(other)
        if isinstance(other, FpScalar):
            prime = self.as_prime()
            return prime is not None and prime == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx._hash, self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"FieldElement({self} in {self.ctx.describe()})"


# -- modulus builders ----------------------------------------------------


def artin_schreier_modulus(base, alpha) -> Poly:
    """x^p - x - alpha over the base field."""
    alpha = base.embed(alpha)
    p = base.p
    coeffs = [-alpha, -base.one()] + [base.zero()] * (p - 2) + [base.one()]
    return Poly(base, coeffs)


def kummer_modulus(base, xi, degree: int) -> Poly:
    """x^degree - xi over the base field."""
    xi = base.embed(xi)
    coeffs = [-xi] + [base.zero()] * (degree - 1) + [base.one()]
    return Poly(base, coeffs)


# -- module-level operations (the functional surface) ---------------------


def fp_inv(a: FpScalar) -> FpScalar:
    """Multiplicative inverse in GF(p)."""
    return a.inv()


def ext_mul(ctx: FieldCtx, a: FieldElement, b: FieldElement) -> FieldElement:
    """Field product of two elements of *ctx*."""
    if a.ctx != ctx or b.ctx != ctx:
        raise CtxMismatch("operands do not belong to the given context")
    return a * b


def ext_inv(ctx: FieldCtx, a: FieldElement) -> FieldElement:
    """Multiplicative inverse in *ctx*, by extended Euclid on polynomials."""
    if a.ctx != ctx:
        raise CtxMismatch("operand does not belong to the given context")
    return ctx.inv(a)


def frobenius(ctx, a, k: int = 1):
    """a^(p^k)."""
    return ctx.frobenius(a, k)


def trace_to_prime(ctx, a) -> FpScalar:
    """Sum of all absolute-degree many p-power conjugates of *a*."""
    return ctx.trace_to_prime(a)


def relative_conjugate_sum(ctx: FieldCtx, a: FieldElement, step: int) -> FieldElement:
    """Sum of a^(p^(i*step)) for i in [0, abs_degree/step)."""
    return ctx.conjugate_sum(a, step)


def min_poly(ctx, a) -> Poly:
    """Minimal polynomial of *a* over the prime field."""
    if isinstance(ctx, PrimeModulus):
        return Poly(ctx, [-ctx.embed(a), ctx.one()])
    return ctx.min_poly(a)


def rank_over_prime(elements: Sequence) -> int:
    """Rank of the flattened prime-field coordinate vectors."""
    elements = list(elements)
    if not elements:
        return 0
    field = elements[0].field
    rows = []
    for e in elements:
        if e.field != field:
            raise CtxMismatch("elements do not share a context")
        rows.append(field.flatten(e))
    mat = np.array(rows, dtype=np.int64)
    return linalg.rank_mod(mat, field.p)
