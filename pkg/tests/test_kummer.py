"""Root-of-unity extensions x^(q^s) - xi and their normal generators."""

import pytest

from nbtower import oracle
from nbtower.errors import BadB, ConstructionFailure, NoSuchRoot, NotDividing
from nbtower.fields import FpScalar, PrimeModulus, frobenius
from nbtower.kummer import (base_field, conj_sum, find_xi, kummer_extend,
                            kummer_normality, kummer_params, kummer_table)
from nbtower.tables import evaluate_row, sparsity, verify_table


@pytest.fixture(scope="module")
def level731():
    F7 = PrimeModulus(7)
    params = kummer_params(7, 3, 1)
    return kummer_extend(F7, params, find_xi(F7, 3, 1), 1).with_table()


class TestParams:
    def test_values(self):
        kp = kummer_params(7, 3, 1)
        assert (kp.r, kp.m) == (1, 2)
        kp = kummer_params(5, 2, 1)
        assert (kp.r, kp.m) == (2, 1)

    def test_not_dividing(self):
        with pytest.raises(NotDividing):
            kummer_params(7, 5, 1)

    def test_s_range(self):
        with pytest.raises(ValueError):
            kummer_params(5, 2, 1, s=3)
        with pytest.raises(ValueError):
            kummer_params(7, 3, 1, s=0)

    def test_q_equals_p_rejected(self):
        with pytest.raises(ValueError):
            kummer_params(7, 7, 1)


class TestFindXi:
    def test_smallest_roots(self):
        assert find_xi(PrimeModulus(7), 3, 1) == 2
        assert find_xi(PrimeModulus(5), 2, 2) == 2

    def test_no_such_root(self):
        with pytest.raises(NoSuchRoot):
            find_xi(PrimeModulus(7), 5, 1)

    def test_order_is_exact(self):
        xi = find_xi(PrimeModulus(13), 3, 1)
        assert xi == 3
        assert xi ** 3 == 1 and xi ** 1 != 1


class TestExtend:
    def test_f343(self, level731):
        assert level731.ctx.abs_degree == 3
        assert level731.xi == 2
        assert level731.zeta == 4
        alpha = level731.ctx.generator()
        assert frobenius(level731.ctx, alpha, 1) == alpha * 4

    def test_f625(self):
        F5 = PrimeModulus(5)
        params = kummer_params(5, 2, 1, s=2)
        level = kummer_extend(F5, params, 2, 1)
        assert level.ctx.abs_degree == 4
        assert level.zeta == 2
        assert oracle.is_irreducible_bruteforce(F5, level.ctx.modulus)

    def test_bad_b_zero(self):
        F7 = PrimeModulus(7)
        params = kummer_params(7, 3, 1)
        with pytest.raises(BadB):
            kummer_extend(F7, params, 2, 0)

    def test_invalid_xi(self):
        F7 = PrimeModulus(7)
        params = kummer_params(7, 3, 1)
        with pytest.raises(ValueError):
            kummer_extend(F7, params, 3, 1)  # 3 has order 6, not 3

    def test_extension_base_l2(self):
        # q = 3 divides 5^2 - 1 = 24 but not 5 - 1
        params = kummer_params(5, 3, 2)
        K = base_field(5, 2)
        xi = find_xi(K, 3, params.r)
        level = kummer_extend(K, params, xi, 1).with_table()
        assert level.ctx.abs_degree == 6
        assert kummer_normality(level)
        assert verify_table(level, level.table).ok


class TestTable:
    def test_row_values_7_3_1(self, level731):
        t = level731.table
        F7 = PrimeModulus(7)
        assert [(i, c) for i, c in t.rows[0].terms] == \
            [(0, FpScalar(5, F7)), (1, FpScalar(1, F7))]
        assert [(i, c) for i, c in t.rows[1].terms] == \
            [(0, FpScalar(1, F7)), (2, FpScalar(5, F7))]  # -2 = 5 mod 7
        assert [(i, c) for i, c in t.square_row.terms] == \
            [(0, FpScalar(4, F7)), (1, FpScalar(6, F7)), (2, FpScalar(2, F7))]

    def test_rows_evaluate_to_products(self, level731):
        ctx = level731.ctx
        t = level731.table
        g = t.generator
        for i in range(1, t.m):
            assert evaluate_row(t, t.rows[i - 1]) == \
                g * frobenius(ctx, g, i * t.step)
        assert evaluate_row(t, t.square_row) == g * g

    def test_pinned_identities_7_3_1(self, level731):
        ctx = level731.ctx
        g = level731.gamma
        assert g ** 8 == g * 5 + frobenius(ctx, g, 1)
        assert g + frobenius(ctx, g, 1) + frobenius(ctx, g, 2) == ctx.embed(3)

    def test_off_square_always_two_terms(self, level731):
        for row in level731.table.rows:
            assert len(row.terms) == 2
            assert row.constant.is_zero()

    def test_square_row_bound_and_prime_coeffs(self, level731):
        t = level731.table
        assert t.square_row.weight <= 3 ** 1
        rep = sparsity(t)
        assert rep.coefficients_in_prime_field is True  # 3 | 7 - 1


class TestConjSum:
    def test_closed_form_7_3_1(self, level731):
        assert conj_sum(level731) == 3

    def test_closed_form_5_2_2(self):
        F5 = PrimeModulus(5)
        level = kummer_extend(F5, kummer_params(5, 2, 1, s=2), 2, 1)
        assert conj_sum(level) == 4

    def test_frobenius_invariance(self, level731):
        ctx = level731.ctx
        direct = ctx.conjugate_sum(level731.gamma, level731.n)
        shifted = ctx.conjugate_sum(
            frobenius(ctx, level731.gamma, level731.n), level731.n)
        assert direct == shifted


class TestNormality:
    def test_gamma_is_normal(self, level731):
        assert kummer_normality(level731) is True

    def test_one_is_not_normal(self, level731):
        assert not oracle.is_normal_bruteforce(
            level731.ctx, level731.ctx.one(), level731.n)

    def test_5_2_s2_rank(self):
        F5 = PrimeModulus(5)
        level = kummer_extend(F5, kummer_params(5, 2, 1, s=2), 2, 1)
        assert kummer_normality(level) is True


@pytest.mark.parametrize("p,q,l,s", [
    (7, 3, 1, 1), (5, 2, 1, 1), (5, 2, 1, 2), (13, 3, 1, 1), (11, 5, 1, 1),
])
def test_construction_battery(p, q, l, s):
    params = kummer_params(p, q, l, s)
    K = base_field(p, l)
    xi = find_xi(K, q, params.r)
    level = kummer_extend(K, params, xi, 1).with_table()
    zeta = K.embed(level.zeta)
    degree = params.degree
    assert zeta ** degree == K.one()
    assert zeta ** (degree // q) != K.one()
    if (p - 1) % q == 0 and not isinstance(K, PrimeModulus):
        assert zeta.as_prime() is not None
    assert verify_table(level, level.table).ok
    assert kummer_normality(level)
