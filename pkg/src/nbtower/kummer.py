"""Normal bases for extensions of degree coprime to the characteristic.

Given distinct primes p and q with q | p^l - 1, a primitive q^r-th root of
unity xi in K = GF(p^l) makes x^(q^s) - xi irreducible for every s <= r.
In the extension E = K[a]/(x^(q^s) - xi) the p^l-power map multiplies the
root a by a root of unity zeta = xi^(m*q^(r-s)) of order exactly q^s, so
the conjugates of gamma = (a - b)^-1 satisfy two-term product rows, just
like the degree-p towers.  When q | p - 1 the row coefficients even land
in GF(p).

Construction verifies every defining identity on the spot; a failure
raises since it indicates a bug rather than bad input.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import linalg, oracle, tables
from .config import DEFAULT_ORACLE_DEGREE
from .errors import BadB, ConstructionFailure, NoSuchRoot, NotDividing
from .fields import FieldCtx, FieldElement, PrimeModulus, is_prime
from .polys import iter_monic


@dataclass(frozen=True)
class KummerParams:
    """Numeric data of one extension: p^l - 1 = m * q^r with gcd(m, q) = 1,
    and the chosen exponent 1 <= s <= r."""

    p: int
    q: int
    l: int
    r: int
    m: int
    s: int

    @property
    def degree(self) -> int:
        return self.q ** self.s


@dataclass(frozen=True)
class KummerLevel:
    """A constructed extension E = K[a]/(x^(q^s) - xi) with its normal
    generator gamma = (a - b)^-1."""

    params: KummerParams
    ctx: FieldCtx
    xi: object
    zeta: object
    b: object
    gamma: FieldElement
    table: tables.MultTable | None = None

    @property
    def base(self):
        return self.ctx.base

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def n(self) -> int:
        """Conjugation step, the absolute degree of the base field."""
        return self.ctx.base.abs_degree

    def with_table(self) -> "KummerLevel":
        return replace(self, table=kummer_table(self))


def kummer_params(p: int, q: int, l: int, s: int = 1) -> KummerParams:
    """Factor p^l - 1 = m * q^r and record the exponent choice s."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q == p:
        raise ValueError("q must differ from the characteristic p")
    if l < 1:
        raise ValueError("l must be positive")
    total = p ** l - 1
    if total % q != 0:
        raise NotDividing(f"{q} does not divide {p}^{l} - 1 = {total}")
    r = 0
    m = total
    while m % q == 0:
        m //= q
        r += 1
    if not 1 <= s <= r:
        raise ValueError(f"s must satisfy 1 <= s <= r = {r}, got {s}")
    return KummerParams(p=p, q=q, l=l, r=r, m=m, s=s)


def find_xi(K, q: int, r: int) -> object:
    """The canonically smallest element of multiplicative order exactly
    q^r, by exhaustive search in coordinate order."""
    order = K.order()
    target = q ** r
    if (order - 1) % target != 0:
        raise NoSuchRoot(
            f"{q}^{r} does not divide |K*| = {order - 1}")
    below = target // q
    for x in K.iter_elements():
        if x.is_zero():
            continue
        if (x ** target == K.one()) and (x ** below != K.one()):
            return x
    raise NoSuchRoot(f"no element of order {q}^{r} in {K.describe()}")


def base_field(p: int, l: int):
    """GF(p^l): the prime field for l = 1, else a generic extension by the
    canonically first irreducible monic polynomial of degree l."""
    prime = PrimeModulus(p)
    if l == 1:
        return prime
    for candidate in iter_monic(prime, l):
        if oracle.is_irreducible_bruteforce(prime, candidate,
                                            max_degree=max(l, 64)):
            return FieldCtx.generic(prime, candidate)
    raise AssertionError(f"no irreducible polynomial of degree {l} found")


def kummer_extend(K, params: KummerParams, xi, b) -> KummerLevel:
    """Build E = K[a]/(x^(q^s) - xi) and its normal generator.

    Verifies the root-of-unity bookkeeping (zeta = xi^(m*q^(r-s)) has order
    exactly q^s), the conjugation identities for the root and for
    beta = a - b, the conjugate-sum closed form, and normality of gamma.
    """
    q, s = params.q, params.s
    degree = params.degree
    if K.p != params.p or K.abs_degree != params.l:
        raise ValueError(
            f"base field {K.describe()} does not match p={params.p}, l={params.l}")
    xi = K.embed(xi)
    if xi ** (q ** params.r) != K.one() or xi ** (q ** (params.r - 1)) == K.one():
        raise ValueError(f"xi={xi} is not of multiplicative order {q}^{params.r}")
    b = K.embed(b)
    if b.is_zero() or b ** degree == xi:
        raise BadB("b must be nonzero with b^(q^s) != xi")

    ctx = FieldCtx.kummer(K, xi, degree, s)
    if degree * K.abs_degree <= DEFAULT_ORACLE_DEGREE:
        if not oracle.is_irreducible_bruteforce(K, ctx.modulus):
            raise ConstructionFailure(
                f"x^{degree} - ({xi}) is reducible over {K.describe()}")

    zeta = xi ** (params.m * q ** (params.r - s))
    # order is exactly q^s: the q^s power is 1 and the q^(s-1) power is not
    if zeta ** degree != K.one() or zeta ** (degree // q) == K.one():
        raise ConstructionFailure("zeta does not have order exactly q^s")
    if ((params.p - 1) % q == 0 and not isinstance(K, PrimeModulus)
            and zeta.as_prime() is None):
        raise ConstructionFailure(
            "zeta should lie in GF(p) when q divides p - 1")

    l = K.abs_degree
    alpha = ctx.generator()
    beta = alpha - ctx.embed(b)
    zeta_e = ctx.embed(zeta)
    zeta_pow = ctx.one()
    for i in range(1, degree):
        zeta_pow = zeta_pow * zeta_e
        if ctx.frobenius(alpha, i * l) != zeta_pow * alpha:
            raise ConstructionFailure(
                f"root conjugation identity failed at i={i}")
        lhs = ctx.frobenius(beta, i * l) - zeta_pow * beta
        if lhs != (zeta_pow - ctx.one()) * ctx.embed(b):
            raise ConstructionFailure(
                f"shifted-root conjugation identity failed at i={i}")

    gamma = beta.inv()
    level = KummerLevel(params=params, ctx=ctx, xi=xi, zeta=zeta, b=b,
                        gamma=gamma)
    if not kummer_normality(level):
        raise ConstructionFailure("gamma failed the normality rank check")
    conj_sum(level)  # raises on closed-form mismatch
    return level


def kummer_table(level: KummerLevel) -> tables.MultTable:
    """Two-term product rows for gamma and its conjugates.

    Row i carries the coefficients (zeta^i - 1)^-1 b^-1 on gamma and minus
    that times zeta^i on the i-th conjugate; the square row spends the
    conjugate-sum closed form on the gamma coefficient.
    """
    K = level.base
    degree = level.params.degree
    l = level.n
    zeta, b = K.embed(level.zeta), K.embed(level.b)
    b_inv = b.inv()
    rows = []
    coeff_sum = K.zero()
    zeta_pow = K.one()
    for i in range(1, degree):
        zeta_pow = zeta_pow * zeta
        c = (zeta_pow - K.one()).inv() * b_inv
        coeff_sum = coeff_sum + c
        rows.append(tables.make_row(K.zero(), [(0, c), (i, -(c * zeta_pow))]))
    s = conj_sum(level)
    terms = [(0, s - coeff_sum)]
    zeta_pow = K.one()
    for i in range(1, degree):
        zeta_pow = zeta_pow * zeta
        terms.append((i, (zeta_pow - K.one()).inv() * b_inv * zeta_pow))
    square = tables.make_row(K.zero(), terms)
    table = tables.MultTable(
        generator=level.gamma, step=l, rows=tuple(rows), square_row=square,
        coefficient_field=tables.classify_coefficients(rows))
    report = tables.verify_table(level, table)
    if not report.ok:
        raise ConstructionFailure(
            "product rows failed verification:\n" + report.summary())
    return table


def conj_sum(level: KummerLevel):
    """Closed form of the conjugate sum of gamma,
    -q^s * b^(q^s - 1) / (b^(q^s) - xi), cross-checked against the sum
    computed by repeated Frobenius."""
    K = level.base
    degree = level.params.degree
    b = K.embed(level.b)
    xi = K.embed(level.xi)
    closed = -(b ** (degree - 1)) * (b ** degree - xi).inv() * (degree % level.p)
    direct = level.ctx.conjugate_sum(level.gamma, level.n)
    if direct != level.ctx.embed(closed):
        raise ConstructionFailure(
            f"conjugate-sum closed form {closed} disagrees with direct sum {direct}")
    return closed


def kummer_normality(level: KummerLevel) -> bool:
    """Rank check that the conjugates of gamma span E over K, cross-checked
    against the span of the inverse powers of the root."""
    ctx = level.ctx
    degree = level.params.degree
    if not oracle.is_normal_bruteforce(ctx, level.gamma, level.n):
        return False
    alpha_inv = ctx.generator().inv()
    powers = [ctx.one()]
    for _ in range(degree - 1):
        powers.append(powers[-1] * alpha_inv)
    sub = oracle.subfield_basis(ctx, level.n)
    rows = [ctx.flatten(e * v) for v in powers for e in sub]
    return linalg.rank_mod(np.array(rows, dtype=np.int64),
                           ctx.p) == ctx.abs_degree
