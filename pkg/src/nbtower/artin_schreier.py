"""Inductive construction of degree-p extension towers with normal bases.

Each step adjoins a root beta of x^p - x - alpha, irreducible exactly when
the absolute trace of alpha is nonzero.  The shifted inverse root
delta_inv = beta^-1 - b (b a nonzero prime-field scalar, 1 by default) is a
normal generator both over the base field and over GF(p), its product rows
are sparse with prime-field coefficients, and delta = delta_inv^-1 has
nonzero trace, so it seeds the next level.  Starting from alpha = 1 over
GF(p) this yields towers of absolute degree p, p^2, p^3, ...

Every conclusion the construction relies on is re-verified against the
brute-force oracles while building; a failure aborts with a diagnostic
since it signals a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import oracle, tables
from .config import max_tower_degree
from .errors import (BadStep, EpsilonNotNormal, NormalityFailure, Reducible,
                     ScaleExceeded, ZeroB, ZeroTrace)
from .fields import FieldCtx, FieldElement, FpScalar, PrimeModulus


@dataclass(frozen=True)
class ASLevel:
    """One constructed level of a tower.

    alpha is the defining constant (an element of the base), h its absolute
    trace, beta the adjoined root, gamma = beta^-1, delta_inv = gamma - b
    the normal generator, and delta the defining constant of the next level.
    """

    ctx: FieldCtx
    alpha: object
    h: FpScalar
    b: FpScalar
    beta: FieldElement
    gamma: FieldElement
    delta_inv: FieldElement
    delta: FieldElement
    gamma_table: tables.MultTable | None = None
    delta_table: tables.MultTable | None = None

    @property
    def base(self):
        return self.ctx.base

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def n(self) -> int:
        """Absolute degree of the base field (the conjugation step)."""
        return self.ctx.base.abs_degree

    @property
    def degree(self) -> int:
        return self.ctx.abs_degree


@dataclass(frozen=True)
class TowerSpec:
    """A fully built tower: GF(p) up through abs degree p^len(levels)."""

    p: PrimeModulus
    b: FpScalar
    levels: tuple[ASLevel, ...]

    @property
    def degrees(self) -> list[int]:
        return [lv.degree for lv in self.levels]

    @property
    def top(self) -> ASLevel:
        return self.levels[-1]


def as_irreducible(base, alpha) -> bool:
    """Trace criterion: x^p - x - alpha is irreducible over the base field
    iff the absolute trace of alpha is nonzero."""
    alpha = base.embed(alpha)
    return not base.trace_to_prime(alpha).is_zero()


def compute_h(base, alpha) -> FpScalar:
    """The conjugate sum of alpha down to GF(p), which the irreducibility
    criterion requires to be a nonzero prime-field scalar."""
    alpha = base.embed(alpha)
    h = base.trace_to_prime(alpha)
    if h.is_zero():
        raise ZeroTrace(f"trace of {alpha} vanishes; x^p - x - a is reducible")
    return h


def as_extend(base, alpha) -> FieldCtx:
    """Adjoin a root of x^p - x - alpha (irreducible by the trace test)."""
    alpha = base.embed(alpha)
    if not as_irreducible(base, alpha):
        raise Reducible(
            f"x^{base.p} - x - ({alpha}) is reducible over {base.describe()}")
    return FieldCtx.artin_schreier(base, alpha)


def shift_keeps_basis(ctx: FieldCtx, delta: FieldElement, d, step: int) -> bool:
    """Predicate: adding the subfield constant d to delta keeps its
    conjugates a basis.

    Given that the conjugates of delta (with the given step) are a basis
    over the subfield of p^step elements, the shifted conjugates of
    delta + d still are one whenever m*d plus the conjugate sum of delta is
    nonzero, m being the number of conjugates.
    """
    if step <= 0 or ctx.abs_degree % step != 0:
        raise BadStep(f"step {step} does not divide degree {ctx.abs_degree}")
    d = ctx.embed(d)
    if ctx.frobenius(d, step) != d:
        raise ValueError("d must lie in the subfield of p^step elements")
    m = ctx.abs_degree // step
    value = d * (m % ctx.p) + ctx.conjugate_sum(delta, step)
    return not value.is_zero()


def normal_element(ctx: FieldCtx, c, epsilon=None) -> FieldElement:
    """beta^(p-1) - c, a normal generator of ctx over its base for any base
    element c; scaled by epsilon it becomes normal over GF(p), provided c
    is a prime-field scalar and epsilon generates a normal basis of the
    base over GF(p)."""
    if ctx.kind != FieldCtx.KIND_AS:
        raise ValueError("normal_element requires an x^p - x - a extension")
    base = ctx.base
    c = base.embed(c)
    beta = ctx.generator()
    elt = beta ** (ctx.p - 1) - ctx.embed(c)
    if epsilon is None:
        return elt
    epsilon = base.embed(epsilon)
    if isinstance(c, FieldElement) and c.as_prime() is None:
        raise ValueError(
            "c must be a prime-field scalar when scaling by epsilon")
    if not oracle.is_normal_bruteforce(base, epsilon, 1):
        raise EpsilonNotNormal(
            f"{epsilon} does not generate a normal basis of {base.describe()}")
    return ctx.embed(epsilon) * elt


def next_delta(level_ctx: FieldCtx, b) -> tuple[FieldElement, FieldElement]:
    """The shifted normal generator delta_inv = beta^-1 - b and the next
    level's defining constant delta = delta_inv^-1.

    Verifies all the conclusions the induction needs: delta_inv is normal
    over the base and over GF(p), delta has nonzero trace, and the
    conjugate sum of delta equals b^-2 * alpha^-1.
    """
    if level_ctx.kind != FieldCtx.KIND_AS:
        raise ValueError("next_delta requires an x^p - x - a extension")
    b = level_ctx._prime.embed(b)
    if b.is_zero():
        raise ZeroB("b must be a nonzero prime-field scalar")
    beta = level_ctx.generator()
    delta_inv = beta.inv() - level_ctx.embed(b)
    n = level_ctx.base.abs_degree
    if not oracle.is_normal_bruteforce(level_ctx, delta_inv, n):
        raise NormalityFailure(
            f"delta_inv not normal over {level_ctx.base.describe()}")
    if not oracle.is_normal_bruteforce(level_ctx, delta_inv, 1):
        raise NormalityFailure("delta_inv not normal over the prime field")
    delta = delta_inv.inv()
    if level_ctx.trace_to_prime(delta).is_zero():
        raise NormalityFailure("trace of delta vanished; induction breaks")
    expected = level_ctx.embed(
        level_ctx.base.embed(level_ctx.alpha).inv() * (b * b).inv())
    if level_ctx.conjugate_sum(delta, n) != expected:
        raise NormalityFailure(
            "conjugate sum of delta does not match b^-2 * alpha^-1")
    return delta_inv, delta


def build_level(base, alpha, b, with_tables: bool = True) -> ASLevel:
    """Construct and fully verify one tower level."""
    ctx = as_extend(base, alpha)
    h = compute_h(base, alpha)
    beta = ctx.generator()
    gamma = beta.inv()
    delta_inv, delta = next_delta(ctx, b)
    level = ASLevel(ctx=ctx, alpha=base.embed(alpha), h=h, b=b, beta=beta,
                    gamma=gamma, delta_inv=delta_inv, delta=delta)
    if with_tables:
        gt = tables.gamma_table(level)
        dt = tables.delta_table(level)
        for name, table in (("gamma", gt), ("delta", dt)):
            report = tables.verify_table(level, table)
            if not report.ok:
                raise NormalityFailure(
                    f"{name} table of {ctx.describe()} failed verification:\n"
                    + report.summary())
        level = replace(level, gamma_table=gt, delta_table=dt)
    return level


def build_tower(p, num_levels: int, b=1,
                max_degree: int | None = None) -> TowerSpec:
    """Run the induction from GF(p): alpha starts at 1, and each level's
    delta becomes the next level's alpha."""
    prime = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    if num_levels < 1:
        raise ValueError("num_levels must be at least 1")
    bound = max_tower_degree() if max_degree is None else max_degree
    if prime.p ** num_levels > bound:
        raise ScaleExceeded(
            f"degree {prime.p}^{num_levels} exceeds the bound {bound} "
            f"(raise it via max_degree or NBTOWER_MAX_DEGREE)")
    b = prime.embed(b)
    if b.is_zero():
        raise ZeroB("b must be a nonzero prime-field scalar")
    levels = []
    base = prime
    alpha = prime.one()
    for _ in range(num_levels):
        level = build_level(base, alpha, b)
        levels.append(level)
        base = level.ctx
        alpha = level.delta
    return TowerSpec(p=prime, b=b, levels=tuple(levels))
