"""The brute-force verifiers themselves, plus cross-agreement sampling."""

import random

import pytest

from nbtower import oracle
from nbtower.artin_schreier import as_irreducible
from nbtower.errors import BadStep, ScaleExceeded
from nbtower.fields import (FieldCtx, PrimeModulus, artin_schreier_modulus,
                            min_poly)
from nbtower.oracle import (VerificationReport, _reciprocal_checks,
                            is_irreducible_bruteforce, is_normal_bruteforce,
                            min_poly_via_conjugates, subfield_basis,
                            verify_reciprocal_relations)
from nbtower.polys import Poly


class TestIsNormal:
    def test_f4_cases(self, f4):
        beta = f4.generator()
        assert is_normal_bruteforce(f4, beta, 1) is True
        assert is_normal_bruteforce(f4, f4.one(), 1) is False
        assert is_normal_bruteforce(f4, f4.zero(), 1) is False

    def test_bad_step(self, f4):
        with pytest.raises(BadStep):
            is_normal_bruteforce(f4, f4.one(), 3)

    def test_prime_field(self, f7):
        assert is_normal_bruteforce(f7, f7.element(3), 1) is True
        assert is_normal_bruteforce(f7, f7.element(0), 1) is False

    def test_intermediate_step(self, tower2):
        # degree 8 over GF(2): delta_inv is normal for steps 1, 2 and 4
        level = tower2.levels[2]
        for step in (1, 2, 4):
            assert is_normal_bruteforce(level.ctx, level.delta_inv, step)


class TestSubfieldBasis:
    def test_dimensions(self, tower2):
        ctx = tower2.levels[2].ctx
        for step in (1, 2, 4, 8):
            basis = subfield_basis(ctx, step)
            assert len(basis) == step
            for e in basis:
                assert ctx.frobenius(e, step) == e

    def test_prime_step(self, f4):
        basis = subfield_basis(f4, 1)
        assert basis == [f4.one()]


class TestIrreducible:
    def test_examples(self, f2, f4, f7):
        assert is_irreducible_bruteforce(f2, Poly(f2, [1, 1, 1])) is True
        assert is_irreducible_bruteforce(f4, Poly(f4, [1, 1, 1])) is False
        assert is_irreducible_bruteforce(f7, Poly(f7, [-2, 0, 0, 1])) is True

    def test_linear_and_powers(self, f2):
        assert is_irreducible_bruteforce(f2, Poly(f2, [1, 1])) is True
        assert is_irreducible_bruteforce(f2, Poly(f2, [0, 0, 1])) is False
        assert is_irreducible_bruteforce(f2, Poly(f2, [1])) is False

    def test_scale_bound(self, f2):
        big = Poly(f2, [1] * 66)
        with pytest.raises(ScaleExceeded):
            is_irreducible_bruteforce(f2, big)


class TestMinPolyViaConjugates:
    def test_f4(self, f2, f4):
        beta = f4.generator()
        assert min_poly_via_conjugates(f4, beta) == Poly(f2, [1, 1, 1])
        assert min_poly_via_conjugates(f4, f4.one()) == Poly(f2, [1, 1])

    def test_kummer_generator(self):
        from nbtower.kummer import find_xi, kummer_extend, kummer_params
        F7 = PrimeModulus(7)
        level = kummer_extend(F7, kummer_params(7, 3, 1),
                              find_xi(F7, 3, 1), 1)
        mp = min_poly_via_conjugates(level.ctx, level.gamma)
        assert mp.degree == 3
        assert mp == min_poly(level.ctx, level.gamma)

    def test_matches_linear_algebra_randomized(self, tower2, tower3):
        rng = random.Random(17)
        for tower in (tower2, tower3):
            for level in tower.levels:
                ctx = level.ctx
                if ctx.order() > 2 ** 20:
                    continue
                for _ in range(10):
                    a = ctx.random_element(rng)
                    assert min_poly_via_conjugates(ctx, a) == min_poly(ctx, a)


class TestTraceCriterionAgreement:
    def test_randomized(self, f4, tower3):
        rng = random.Random(23)
        bases = [PrimeModulus(2), PrimeModulus(3), PrimeModulus(5),
                 PrimeModulus(7), f4, tower3.levels[0].ctx]
        for base in bases:
            for _ in range(30):
                alpha = base.random_element(rng)
                modulus = artin_schreier_modulus(base, alpha) \
                    if not alpha.is_zero() else None
                criterion = as_irreducible(base, alpha)
                if modulus is None:
                    assert criterion is False
                    continue
                assert is_irreducible_bruteforce(base, modulus) == criterion


class TestReciprocalRelations:
    @pytest.mark.parametrize("fixture", ["tower2", "tower3", "tower5"])
    def test_all_levels_pass(self, fixture, request):
        tower = request.getfixturevalue(fixture)
        for level in tower.levels:
            report = verify_reciprocal_relations(level)
            assert report.ok, report.summary()

    def test_perturbed_m_alpha_is_flagged(self, tower2):
        level = tower2.levels[1]
        ctx = level.ctx
        base = ctx.base
        m_alpha = base.min_poly(level.alpha)
        bumped = Poly(m_alpha.field,
                      [m_alpha.coeff(0) + 1]
                      + [m_alpha.coeff(i) for i in range(1, m_alpha.degree + 1)])
        report = _reciprocal_checks(
            ctx.p, base.abs_degree, level.b, bumped,
            ctx.min_poly(level.beta), ctx.min_poly(level.beta.inv()),
            ctx.min_poly(level.delta_inv), ctx.min_poly(level.delta))
        assert not report.ok

    def test_scale_bound(self, tower2):
        with pytest.raises(ScaleExceeded):
            verify_reciprocal_relations(tower2.levels[2], max_degree=4)


class TestVerificationReport:
    def test_counts(self):
        report = VerificationReport()
        assert report.ok
        report.check("a", "desc", 1, 1)
        report.check("b", "desc", 1, 2)
        assert report.checks_run == 2
        assert not report.ok
        assert report.failures[0][0] == "b"

    def test_merge_and_dict(self):
        a = VerificationReport()
        a.check("x", "", 1, 1)
        b = VerificationReport()
        b.require("y", "", False, "nope")
        a.merge(b)
        assert a.checks_run == 2
        d = a.to_dict()
        assert d["failures"][0]["check"] == "y"
