"""Brute-force verifiers, independent of the closed-form construction paths.

Every claim the construction relies on gets re-checked here from first
principles: normality by explicit rank over the prime field, irreducibility
by a distinct-degree gcd sieve, minimal polynomials by multiplying out the
conjugates.  The algorithms are deliberately different from the fast paths
so that agreement between the two is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .config import DEFAULT_ORACLE_DEGREE
from .errors import BadStep, NotInPrimeField, ScaleExceeded
from .fields import FieldCtx, FieldElement, FpScalar, PrimeModulus
from .polys import Poly


@dataclass
class VerificationReport:
    """Tally of checks run, with details for every failure."""

    checks_run: int = 0
    failures: list[tuple[str, str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, name: str, description: str, expected, actual) -> bool:
        self.checks_run += 1
        if expected == actual:
            return True
        self.failures.append((name, description, str(expected), str(actual)))
        return False

    def require(self, name: str, description: str, condition: bool,
                detail: str = "") -> bool:
        self.checks_run += 1
        if condition:
            return True
        self.failures.append((name, description, "true", detail or "false"))
        return False

    def merge(self, other: "VerificationReport") -> None:
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)

    def to_dict(self) -> dict:
        return {
            "checks_run": self.checks_run,
            "failures": [
                {"check": n, "input": d, "expected": e, "actual": a}
                for n, d, e, a in self.failures
            ],
        }

    def summary(self) -> str:
        if self.ok:
            return f"all {self.checks_run} checks passed"
        lines = [f"{len(self.failures)} of {self.checks_run} checks FAILED"]
        for n, d, e, a in self.failures:
            lines.append(f"  {n}: {d}: expected {e}, got {a}")
        return "\n".join(lines)


def subfield_basis(ctx, step: int) -> list:
    """A GF(p) basis of the subfield with p^step elements inside *ctx*.

    Computed as the fixed space of the step-fold Frobenius, so it works for
    any step dividing the absolute degree, whether or not the subfield is
    one of the tower levels.
    """
    if isinstance(ctx, PrimeModulus):
        if step != 1:
            raise BadStep("the prime field only contains itself")
        return [ctx.one()]
    if step <= 0 or ctx.abs_degree % step != 0:
        raise BadStep(f"step {step} does not divide degree {ctx.abs_degree}")
    mat = (ctx._frob_power(step) - linalg.identity(ctx.abs_degree)) % ctx.p
    basis = linalg.nullspace_mod(mat, ctx.p)
    if basis.shape[0] != step:
        raise AssertionError(
            f"fixed space of Frobenius^{step} has dimension {basis.shape[0]}")
    return [ctx.unflatten(row) for row in basis]


def is_normal_bruteforce(ctx, a, step: int = 1) -> bool:
    """True iff the conjugates a^(p^(i*step)) form a basis over the
    subfield of p^step elements.

    The test expands everything to prime-field coordinates: the conjugates
    are a subfield basis exactly when their products with a GF(p) basis of
    the subfield span the whole field over GF(p).
    """
    if isinstance(ctx, PrimeModulus):
        if step != 1:
            raise BadStep("the prime field only contains itself")
        return not ctx.embed(a).is_zero()
    if step <= 0 or ctx.abs_degree % step != 0:
        raise BadStep(f"step {step} does not divide degree {ctx.abs_degree}")
    if a.is_zero():
        return False
    m = ctx.abs_degree // step
    conjugates = [a]
    for _ in range(m - 1):
        conjugates.append(ctx.frobenius(conjugates[-1], step))
    sub = subfield_basis(ctx, step)
    rows = [ctx.flatten(e * c) for c in conjugates for e in sub]
    return linalg.rank_mod(np.array(rows, dtype=np.int64), ctx.p) == ctx.abs_degree


def is_irreducible_bruteforce(base, f: Poly,
                              max_degree: int = DEFAULT_ORACLE_DEGREE) -> bool:
    """Distinct-degree sieve: f is irreducible iff gcd(x^(q^k) - x, f) = 1
    for every k up to deg(f)/2, where q is the size of the base field."""
    if f.degree < 1:
        return False
    total = f.degree * base.abs_degree
    if total > max_degree:
        raise ScaleExceeded(
            f"total degree {total} exceeds the oracle bound {max_degree}")
    f = f.monic()
    q = base.order()
    x = Poly.x(base)
    power = x % f
    for _ in range(f.degree // 2):
        power = power.powmod(q, f)
        g = (power - x).gcd(f)
        if g.degree != 0:
            return False
    return True


def min_poly_via_conjugates(ctx, a,
                            max_degree: int = DEFAULT_ORACLE_DEGREE) -> Poly:
    """Product of (x - c) over the distinct p-power conjugates c of *a*.

    Independent of the linear-algebra method: the coefficients are computed
    in the extension field and then checked to lie in GF(p).
    """
    if isinstance(ctx, PrimeModulus):
        s = ctx.embed(a)
        return Poly(ctx, [-s, ctx.one()])
    if ctx.abs_degree > max_degree:
        raise ScaleExceeded(
            f"degree {ctx.abs_degree} exceeds the oracle bound {max_degree}")
    conjugates = [a]
    cur = ctx.frobenius(a, 1)
    while cur != a:
        conjugates.append(cur)
        cur = ctx.frobenius(cur, 1)
    poly = Poly.one(ctx)
    for c in conjugates:
        poly = poly * Poly(ctx, [-c, ctx.one()])
    prime_coeffs = []
    for coeff in poly.coeffs:
        scalar = coeff.as_prime()
        if scalar is None:
            raise NotInPrimeField(
                "conjugate product has a coefficient outside GF(p)")
        prime_coeffs.append(scalar)
    return Poly(ctx._prime, prime_coeffs)


def _reciprocal_checks(p: int, n: int, b: FpScalar, m_alpha: Poly,
                       m_beta: Poly, m_beta_inv: Poly, m_delta_inv: Poly,
                       m_delta: Poly) -> VerificationReport:
    """Relations among the minimal polynomials of alpha, beta, beta^-1,
    delta^-1 and delta for one tower level.  Split out so tests can feed a
    perturbed polynomial and watch a relation fail."""
    report = VerificationReport()
    prime = m_alpha.field

    composed = m_alpha.compose(
        Poly(prime, [prime.zero(), -prime.one()] + [prime.zero()] * (p - 2)
             + [prime.one()]))
    report.check("minpoly_composition",
                 "m_beta(x) = m_alpha(x^p - x)", composed, m_beta)

    reciprocal = m_beta.reversed_poly().monic()
    report.check("reciprocal_transform",
                 "m_beta_inv is the monic reversal of m_beta",
                 reciprocal, m_beta_inv)

    shifted = m_beta_inv.shifted(b)
    report.check("shift_transform",
                 "m_delta_inv(x) = m_beta_inv(x + b)", shifted, m_delta_inv)

    reciprocal_delta = m_delta_inv.reversed_poly().monic()
    report.check("reciprocal_delta",
                 "m_delta is the monic reversal of m_delta_inv",
                 reciprocal_delta, m_delta)

    lin = m_delta_inv.coeff(1)
    report.require("linear_coeff_nonzero",
                   "coefficient of x in m_delta_inv is nonzero",
                   not lin.is_zero(), str(lin))

    if n % p == 0 and n >= 2:
        a0 = m_alpha.coeff(0)
        a1 = m_alpha.coeff(1)
        report.require("a1_nonzero", "coefficient of x in m_alpha is nonzero",
                       not a1.is_zero(), str(a1))
        if not a0.is_zero() and not a1.is_zero():
            closed = a1 * b ** ((n - 1) * p - 1) * a0.inv()
            report.check("linear_coeff_closed_form",
                         "coeff of x in m_delta_inv is a1*b^((n-1)p-1)/a0",
                         closed, lin)
    return report


def verify_reciprocal_relations(level,
                                max_degree: int = DEFAULT_ORACLE_DEGREE
                                ) -> VerificationReport:
    """Check the minimal-polynomial relations on a constructed tower level."""
    ctx = level.ctx
    if ctx.abs_degree > max_degree:
        raise ScaleExceeded(
            f"degree {ctx.abs_degree} exceeds the oracle bound {max_degree}")
    base = ctx.base
    if isinstance(base, PrimeModulus):
        m_alpha = Poly(base, [-base.embed(level.alpha), base.one()])
    else:
        m_alpha = base.min_poly(level.alpha)
    return _reciprocal_checks(
        ctx.p, base.abs_degree, level.b, m_alpha,
        ctx.min_poly(level.beta),
        ctx.min_poly(level.beta.inv()),
        ctx.min_poly(level.delta_inv),
        ctx.min_poly(level.delta),
    )
