"""Throughput comparison: normal-basis tables against polynomial arithmetic.

Two flat GF(p) coordinate representations of the top tower field are built
once per run:

* polynomial basis: powers of the adjoined root; multiplication is a
  convolution followed by one reduction matrix, the p-power map is a dense
  matrix application;
* normal basis: the p-power conjugates of the tower's normal generator;
  multiplication contracts the structure tensor spanned by the generator's
  product rows, and the p-power map is a plain coordinate rotation (the
  reason normal bases exist).

Every sampled input pair is pushed through both multiplication paths and
the results are compared exactly before any timing is reported; timings
are informative only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .artin_schreier import TowerSpec
from .fields import min_poly
from .polys import Poly


@dataclass
class BenchResult:
    name: str
    ops: int
    seconds: float

    @property
    def ops_per_sec(self) -> float:
        if self.seconds <= 0:
            return float("inf")
        return self.ops / self.seconds


@dataclass
class BenchReport:
    p: int
    degree: int
    pairs_checked: int
    mismatches: int
    results: list[BenchResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def result(self, name: str) -> BenchResult | None:
        for r in self.results:
            if r.name == name:
                return r
        return None

    def frobenius_ratio(self) -> float | None:
        rot = self.result("frobenius (normal, rotation)")
        mat = self.result("frobenius (poly, matrix)")
        if rot is None or mat is None or mat.ops_per_sec == 0:
            return None
        return rot.ops_per_sec / mat.ops_per_sec

    def render(self) -> str:
        lines = [
            f"benchmark: GF({self.p}^{self.degree})",
            f"correctness gate: {self.pairs_checked} pairs, "
            f"{self.mismatches} mismatches",
        ]
        if self.results:
            width = max(len(r.name) for r in self.results)
            for r in self.results:
                lines.append(
                    f"  {r.name.ljust(width)}  {r.ops:>8} ops  "
                    f"{r.seconds:8.4f} s  {r.ops_per_sec:12.0f} ops/s")
            ratio = self.frobenius_ratio()
            if ratio is not None:
                lines.append(
                    f"  rotation vs matrix Frobenius speedup: {ratio:.1f}x")
        return "\n".join(lines)


class NormalBasisRep:
    """Flat coordinates over the absolute normal basis of the top level."""

    def __init__(self, tower: TowerSpec):
        level = tower.top
        ctx = level.ctx
        p = ctx.p
        d = ctx.abs_degree
        g = level.delta_inv
        basis = np.zeros((d, d), dtype=np.int64)
        frob = ctx.frob_matrix()
        vec = ctx.flatten_np(g)
        for k in range(d):
            basis[:, k] = vec
            vec = linalg.matvec_mod(frob, vec, p)
        self.ctx = ctx
        self.p = p
        self.degree = d
        self.basis = basis
        self.basis_inv = linalg.inv_mod(basis, p)
        rows = np.zeros((d, d), dtype=np.int64)
        for k in range(d):
            product = g * ctx.frobenius(g, k)
            rows[k] = linalg.matvec_mod(
                self.basis_inv, ctx.flatten_np(product), p)
        # tensor[i, j] is the row for conjugate_i * conjugate_j: the row for
        # (0, j - i) rotated by i, coefficients fixed (they live in GF(p)).
        idx = np.arange(d)
        tensor = np.zeros((d, d, d), dtype=np.int64)
        for i in range(d):
            tensor[i] = np.roll(rows[(idx - i) % d, :], i, axis=1)
        self.tensor = tensor
        self.tensor_flat = tensor.reshape(d * d, d)
        self._rotations = {1: (idx - 1) % d}

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        v = (np.outer(a, b) % self.p).reshape(-1)
        return (v @ self.tensor_flat) % self.p

    def mul_batch(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        prod = (a[:, :, None] * b[:, None, :]) % self.p
        return (prod.reshape(a.shape[0], -1) @ self.tensor_flat) % self.p

    def frobenius(self, a: np.ndarray, k: int = 1) -> np.ndarray:
        """Coordinate rotation: entry k of the image is entry k - 1."""
        rot = self._rotations.get(k)
        if rot is None:
            rot = (np.arange(self.degree) - k) % self.degree
            self._rotations[k] = rot
        return a[rot]

    def from_flat(self, vec: np.ndarray) -> np.ndarray:
        return linalg.matvec_mod(self.basis_inv, vec, self.p)

    def to_flat(self, coords: np.ndarray) -> np.ndarray:
        return linalg.matvec_mod(self.basis, coords, self.p)


class PolyBasisRep:
    """Flat coordinates over the powers of the top level's adjoined root."""

    def __init__(self, tower: TowerSpec):
        level = tower.top
        ctx = level.ctx
        p = ctx.p
        d = ctx.abs_degree
        t = level.beta
        modulus = min_poly(ctx, t)
        if modulus.degree != d:
            raise ValueError("the adjoined root does not generate the field")
        basis = np.zeros((d, d), dtype=np.int64)
        power = ctx.one()
        for k in range(d):
            basis[:, k] = ctx.flatten_np(power)
            power = power * t
        self.ctx = ctx
        self.p = p
        self.degree = d
        self.modulus = modulus
        self.basis = basis
        self.basis_inv = linalg.inv_mod(basis, p)
        # reduction[:, k] holds x^k mod modulus, for k < 2d - 1
        reduction = np.zeros((d, 2 * d - 1), dtype=np.int64)
        reduction[:d, :d] = np.eye(d, dtype=np.int64)
        tail = np.array(
            [(-modulus.coeff(j)).value for j in range(d)], dtype=np.int64) % p
        for k in range(d, 2 * d - 1):
            prev = reduction[:, k - 1]
            col = np.zeros(d, dtype=np.int64)
            col[1:] = prev[:-1]
            col = (col + prev[d - 1] * tail) % p
            reduction[:, k] = col
        self.reduction = reduction
        # matrix of the p-power map in this basis
        xp = Poly.x(modulus.field).powmod(p, modulus)
        xp_vec = np.array([xp.coeff(i).value for i in range(d)], dtype=np.int64)
        frob = np.zeros((d, d), dtype=np.int64)
        col = np.zeros(d, dtype=np.int64)
        col[0] = 1
        for k in range(d):
            frob[:, k] = col
            col = self.mul(col, xp_vec)
        self.frob_matrix = frob

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        full = np.convolve(a, b) % self.p
        if full.shape[0] < 2 * self.degree - 1:
            full = np.pad(full, (0, 2 * self.degree - 1 - full.shape[0]))
        return (self.reduction @ full) % self.p

    def mul_batch(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n, d = a.shape
        full = np.zeros((n, 2 * d - 1), dtype=np.int64)
        for j in range(d):
            full[:, j:j + d] += a * b[:, j:j + 1]
        full %= self.p
        return (full @ self.reduction.T) % self.p

    def frobenius(self, a: np.ndarray, k: int = 1) -> np.ndarray:
        out = a
        for _ in range(k):
            out = linalg.matvec_mod(self.frob_matrix, out, self.p)
        return out

    def from_flat(self, vec: np.ndarray) -> np.ndarray:
        return linalg.matvec_mod(self.basis_inv, vec, self.p)

    def to_flat(self, coords: np.ndarray) -> np.ndarray:
        return linalg.matvec_mod(self.basis, coords, self.p)


def correctness_gate(normal: NormalBasisRep, poly: PolyBasisRep,
                     pairs: int, seed: int, chunk: int = 4096
                     ) -> tuple[int, int]:
    """Multiply *pairs* random input pairs through both paths and count
    mismatches (which should never happen)."""
    p, d = poly.p, poly.degree
    rng = np.random.default_rng(seed)
    to_normal = (normal.basis_inv @ poly.basis) % p
    to_poly = (poly.basis_inv @ normal.basis) % p
    checked = 0
    mismatches = 0
    remaining = pairs
    while remaining > 0:
        n = min(chunk, remaining)
        a = rng.integers(0, p, size=(n, d), dtype=np.int64)
        b = rng.integers(0, p, size=(n, d), dtype=np.int64)
        poly_result = poly.mul_batch(a, b)
        an = (a @ to_normal.T) % p
        bn = (b @ to_normal.T) % p
        normal_result = normal.mul_batch(an, bn)
        back = (normal_result @ to_poly.T) % p
        mismatches += int(np.count_nonzero(np.any(back != poly_result, axis=1)))
        checked += n
        remaining -= n
    return checked, mismatches


def run_bench(tower: TowerSpec, ops: int, seed: int = 0) -> BenchReport:
    """Correctness gate plus per-operation timings for both bases."""
    level = tower.top
    report = BenchReport(p=level.p, degree=level.degree,
                         pairs_checked=0, mismatches=0)
    if ops <= 0:
        return report
    normal = NormalBasisRep(tower)
    poly = PolyBasisRep(tower)
    checked, mismatches = correctness_gate(normal, poly, ops, seed)
    report.pairs_checked = checked
    report.mismatches = mismatches

    p, d = poly.p, poly.degree
    rng = np.random.default_rng(seed + 1)
    sample = min(ops, 20000)
    a = rng.integers(0, p, size=(sample, d), dtype=np.int64)
    b = rng.integers(0, p, size=(sample, d), dtype=np.int64)

    def timed(name, fn):
        start = time.perf_counter()
        for i in range(sample):
            fn(i)
        elapsed = time.perf_counter() - start
        report.results.append(BenchResult(name, sample, elapsed))

    timed("multiply (normal, table)", lambda i: normal.mul(a[i], b[i]))
    timed("multiply (poly, reduce)", lambda i: poly.mul(a[i], b[i]))
    timed("frobenius (normal, rotation)", lambda i: normal.frobenius(a[i]))
    timed("frobenius (poly, matrix)", lambda i: poly.frobenius(a[i]))
    return report
