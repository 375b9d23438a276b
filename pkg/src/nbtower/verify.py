"""Re-verification of loaded towers and Kummer levels.

Construction already checks everything it builds; this module repeats the
whole battery on deserialized objects so that a saved file can be audited
independently (the CLI's verify command).  Failures are collected into a
report rather than raised, so one corrupted row does not hide another.
"""

from __future__ import annotations

from . import oracle, tables
from .artin_schreier import TowerSpec, as_irreducible
from .config import DEFAULT_ORACLE_DEGREE
from .fields import PrimeModulus
from .kummer import KummerLevel, conj_sum
from .errors import ConstructionFailure


def verify_tower(spec: TowerSpec, deep: bool = False,
                 oracle_degree: int = DEFAULT_ORACLE_DEGREE
                 ) -> oracle.VerificationReport:
    report = oracle.VerificationReport()
    prime = spec.p
    base = prime
    for k, level in enumerate(spec.levels, start=1):
        ctx = level.ctx
        where = f"level {k} ({ctx.describe()})"
        report.check(f"{where}: chained base",
                     "level builds on the previous level", base, ctx.base)
        report.check(f"{where}: degree",
                     "absolute degree is p^k", prime.p ** k, ctx.abs_degree)
        report.require(f"{where}: trace criterion",
                       "trace of alpha is nonzero",
                       as_irreducible(base, level.alpha))
        if ctx.abs_degree <= oracle_degree:
            report.require(
                f"{where}: oracle irreducibility",
                "modulus passes the gcd sieve",
                oracle.is_irreducible_bruteforce(base, ctx.modulus,
                                                 max_degree=oracle_degree))
        report.check(f"{where}: generator",
                     "stored generator equals beta^-1 - b",
                     level.beta.inv() - ctx.embed(level.b), level.delta_inv)
        report.require(f"{where}: normal over base",
                       "conjugates of the generator span over the base",
                       oracle.is_normal_bruteforce(ctx, level.delta_inv,
                                                   level.n))
        report.require(f"{where}: normal over prime",
                       "conjugates of the generator span over GF(p)",
                       oracle.is_normal_bruteforce(ctx, level.delta_inv, 1))
        expected = ctx.embed(
            base.embed(level.alpha).inv() * (level.b * level.b).inv())
        report.check(f"{where}: conjugate-sum closed form",
                     "sum of delta conjugates equals b^-2 alpha^-1",
                     expected, ctx.conjugate_sum(level.delta, level.n))
        for name, table in (("gamma_table", level.gamma_table),
                            ("delta_table", level.delta_table)):
            sub = tables.verify_table(level, table)
            for fname, desc, exp, act in sub.failures:
                report.failures.append(
                    (f"{where}: {name} {fname}", desc, exp, act))
            report.checks_run += sub.checks_run
            if deep and table is not None:
                full = tables.full_table(table)
                fsub = tables.verify_full_table(level, full)
                for fname, desc, exp, act in fsub.failures:
                    report.failures.append(
                        (f"{where}: {name} {fname}", desc, exp, act))
                report.checks_run += fsub.checks_run
        base = ctx
    return report


def verify_kummer(level: KummerLevel, deep: bool = False,
                  oracle_degree: int = DEFAULT_ORACLE_DEGREE
                  ) -> oracle.VerificationReport:
    report = oracle.VerificationReport()
    ctx = level.ctx
    K = level.base
    params = level.params
    where = f"kummer level ({ctx.describe()})"
    degree = params.degree

    report.check(f"{where}: degree", "extension degree is q^s",
                 degree, ctx.rel_degree)
    report.require(f"{where}: xi order",
                   "xi has multiplicative order q^r",
                   K.embed(level.xi) ** (params.q ** params.r) == K.one()
                   and K.embed(level.xi) ** (params.q ** (params.r - 1)) != K.one())
    zeta = K.embed(level.zeta)
    report.check(f"{where}: zeta value",
                 "zeta equals xi^(m q^(r-s))",
                 K.embed(level.xi) ** (params.m * params.q ** (params.r - params.s)),
                 zeta)
    report.require(f"{where}: zeta order",
                   "zeta has multiplicative order q^s",
                   zeta ** degree == K.one()
                   and zeta ** (degree // params.q) != K.one())
    if (params.p - 1) % params.q == 0 and not isinstance(K, PrimeModulus):
        report.require(f"{where}: zeta in prime field",
                       "q | p - 1 forces zeta into GF(p)",
                       zeta.as_prime() is not None)
    if ctx.abs_degree <= oracle_degree:
        report.require(f"{where}: oracle irreducibility",
                       "modulus passes the gcd sieve",
                       oracle.is_irreducible_bruteforce(
                           K, ctx.modulus, max_degree=oracle_degree))
    alpha = ctx.generator()
    zeta_pow = ctx.one()
    ok = True
    for i in range(1, degree):
        zeta_pow = zeta_pow * ctx.embed(zeta)
        if ctx.frobenius(alpha, i * level.n) != zeta_pow * alpha:
            ok = False
            break
    report.require(f"{where}: root conjugation",
                   "alpha^(p^(i l)) = zeta^i alpha for all i", ok)
    report.check(f"{where}: generator",
                 "stored generator equals (alpha - b)^-1",
                 (alpha - ctx.embed(level.b)).inv(), level.gamma)
    report.require(f"{where}: gamma normal",
                   "conjugates of gamma span over the base",
                   oracle.is_normal_bruteforce(ctx, level.gamma, level.n))
    try:
        conj_sum(level)
        report.require(f"{where}: conjugate-sum closed form", "", True)
    except ConstructionFailure as exc:
        report.require(f"{where}: conjugate-sum closed form", str(exc), False)
    sub = tables.verify_table(level, level.table)
    for fname, desc, exp, act in sub.failures:
        report.failures.append((f"{where}: table {fname}", desc, exp, act))
    report.checks_run += sub.checks_run
    if deep and level.table is not None:
        full = tables.full_table(level.table)
        fsub = tables.verify_full_table(level, full)
        for fname, desc, exp, act in fsub.failures:
            report.failures.append((f"{where}: table {fname}", desc, exp, act))
        report.checks_run += fsub.checks_run
    return report


def verify_loaded(obj, deep: bool = False) -> oracle.VerificationReport:
    if isinstance(obj, TowerSpec):
        return verify_tower(obj, deep=deep)
    if isinstance(obj, KummerLevel):
        return verify_kummer(obj, deep=deep)
    raise TypeError(f"cannot verify {type(obj).__name__}")
