"""Benchmark representations: both multiplication paths, conversions, and
the Frobenius-as-rotation claim, checked against tower arithmetic."""

import numpy as np
import pytest

from nbtower.bench import (NormalBasisRep, PolyBasisRep, correctness_gate,
                           run_bench)


@pytest.fixture(scope="module")
def reps(tower2):
    return NormalBasisRep(tower2), PolyBasisRep(tower2)


def test_poly_rep_matches_tower(tower2, reps):
    _, poly = reps
    ctx = tower2.top.ctx
    rng = np.random.default_rng(1)
    for _ in range(25):
        a = ctx.unflatten(rng.integers(0, 2, ctx.abs_degree))
        b = ctx.unflatten(rng.integers(0, 2, ctx.abs_degree))
        pa = poly.from_flat(ctx.flatten_np(a))
        pb = poly.from_flat(ctx.flatten_np(b))
        prod = poly.mul(pa, pb)
        assert list(poly.to_flat(prod)) == ctx.flatten(a * b)


def test_normal_rep_matches_tower(tower2, reps):
    normal, _ = reps
    ctx = tower2.top.ctx
    rng = np.random.default_rng(2)
    for _ in range(25):
        a = ctx.unflatten(rng.integers(0, 2, ctx.abs_degree))
        b = ctx.unflatten(rng.integers(0, 2, ctx.abs_degree))
        na = normal.from_flat(ctx.flatten_np(a))
        nb = normal.from_flat(ctx.flatten_np(b))
        prod = normal.mul(na, nb)
        assert list(normal.to_flat(prod)) == ctx.flatten(a * b)


def test_rotation_is_frobenius(tower2, reps):
    normal, _ = reps
    ctx = tower2.top.ctx
    rng = np.random.default_rng(3)
    for k in (1, 2, 5):
        a = ctx.unflatten(rng.integers(0, 2, ctx.abs_degree))
        na = normal.from_flat(ctx.flatten_np(a))
        rotated = normal.frobenius(na, k)
        assert list(normal.to_flat(rotated)) == ctx.flatten(ctx.frobenius(a, k))


def test_poly_frobenius_matrix(tower2, reps):
    _, poly = reps
    ctx = tower2.top.ctx
    rng = np.random.default_rng(4)
    a = ctx.unflatten(rng.integers(0, 2, ctx.abs_degree))
    pa = poly.from_flat(ctx.flatten_np(a))
    assert list(poly.to_flat(poly.frobenius(pa))) == \
        ctx.flatten(ctx.frobenius(a, 1))


def test_batch_matches_scalar_paths(reps):
    normal, poly = reps
    rng = np.random.default_rng(5)
    d = poly.degree
    a = rng.integers(0, 2, (40, d), dtype=np.int64)
    b = rng.integers(0, 2, (40, d), dtype=np.int64)
    batch_p = poly.mul_batch(a, b)
    batch_n = normal.mul_batch(a, b)
    for i in range(40):
        assert list(batch_p[i]) == list(poly.mul(a[i], b[i]))
        assert list(batch_n[i]) == list(normal.mul(a[i], b[i]))


def test_gate_counts_and_passes(reps):
    normal, poly = reps
    checked, mismatches = correctness_gate(normal, poly, 500, seed=0)
    assert checked == 500
    assert mismatches == 0


def test_run_bench_report(tower2):
    report = run_bench(tower2, ops=200, seed=1)
    assert report.ok
    assert report.pairs_checked == 200
    assert {r.name for r in report.results} == {
        "multiply (normal, table)", "multiply (poly, reduce)",
        "frobenius (normal, rotation)", "frobenius (poly, matrix)"}
    assert report.frobenius_ratio() is not None
    assert "correctness gate" in report.render()


def test_run_bench_zero_ops(tower2):
    report = run_bench(tower2, ops=0)
    assert report.ok
    assert report.pairs_checked == 0
    assert report.results == []


def test_odd_characteristic_reps(tower3):
    normal = NormalBasisRep(tower3)
    poly = PolyBasisRep(tower3)
    checked, mismatches = correctness_gate(normal, poly, 300, seed=7)
    assert (checked, mismatches) == (300, 0)
    ctx = tower3.top.ctx
    rng = np.random.default_rng(8)
    a = ctx.unflatten(rng.integers(0, 3, ctx.abs_degree))
    na = normal.from_flat(ctx.flatten_np(a))
    assert list(normal.to_flat(normal.frobenius(na, 1))) == \
        ctx.flatten(ctx.frobenius(a, 1))
