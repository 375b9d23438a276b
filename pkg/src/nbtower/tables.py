"""Sparse multiplication tables for normal bases in closed form.

A table describes the products of one normal generator g with its relative
conjugates g^(p^(i*step)).  Each product row is a linear combination of at
most two conjugates plus an optional constant term (the redundant use of 1
as an extra expansion element, which keeps rows short instead of expanding
the constant into the basis).  The square g^2 gets its own denser row.

Rows are generated from closed-form coefficient formulas and then checked
against direct field products, exactly; any mismatch is reported rather
than tolerated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CtxMismatch
from .fields import FieldCtx, FieldElement, FpScalar
from .oracle import VerificationReport


@dataclass(frozen=True)
class SparseRow:
    """One product expressed in the normal basis.

    ``terms`` maps conjugate indices (in [0, m)) to nonzero coefficients in
    the base field; ``constant`` is the coefficient of the redundant 1.
    """

    constant: object
    terms: tuple[tuple[int, object], ...]

    def __post_init__(self):
        seen = set()
        for idx, coeff in self.terms:
            if idx in seen:
                raise ValueError(f"duplicate conjugate index {idx}")
            seen.add(idx)
            if coeff.is_zero():
                raise ValueError("rows must not store zero coefficients")

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients including the constant."""
        return len(self.terms) + (0 if self.constant.is_zero() else 1)

    def coefficient(self, idx: int):
        for i, c in self.terms:
            if i == idx:
                return c
        return None


def make_row(constant, terms) -> SparseRow:
    """Build a row, dropping zero coefficients."""
    kept = tuple((i, c) for i, c in terms if not c.is_zero())
    return SparseRow(constant=constant, terms=kept)


@dataclass(frozen=True)
class MultTable:
    """Product rows for one normal generator.

    ``rows[i-1]`` expands generator * generator^(p^(i*step)) for i >= 1;
    ``square_row`` expands generator^2.  Coefficients and constants live in
    the base field of the generator's context (stored as prime scalars when
    the closed form guarantees that).
    """

    generator: FieldElement
    step: int
    rows: tuple[SparseRow, ...]
    square_row: SparseRow
    coefficient_field: str

    @property
    def m(self) -> int:
        """Number of relative conjugates."""
        return len(self.rows) + 1

    @property
    def ctx(self) -> FieldCtx:
        return self.generator.ctx

    def row(self, i: int) -> SparseRow:
        if i == 0:
            return self.square_row
        return self.rows[i - 1]

    def conjugate(self, i: int) -> FieldElement:
        return self.ctx.frobenius(self.generator, (i % self.m) * self.step)


@dataclass(frozen=True)
class SparsityReport:
    """Raw nonzero counts, the standard complexity measure for a table."""

    nonzero_structure_constants: int
    rows_with_two_terms: int
    max_row_weight: int
    constant_terms_used: int
    coefficients_in_prime_field: bool
    prime_coefficients: int


@dataclass
class FullTable:
    """All m^2 conjugate products, expanded from the generator rows."""

    m: int
    step: int
    generator: FieldElement
    entries: dict[tuple[int, int], SparseRow]

    def entry(self, i: int, j: int) -> SparseRow:
        return self.entries[(i % self.m, j % self.m)]


def _coeff_in_prime(coeff) -> bool:
    if isinstance(coeff, FpScalar):
        return True
    return coeff.as_prime() is not None


def evaluate_row(table: MultTable, row: SparseRow) -> FieldElement:
    """Value of a row: constant * 1 + sum of coeff * conjugate."""
    ctx = table.ctx
    acc = ctx.embed(row.constant)
    for idx, coeff in row.terms:
        acc = acc + table.conjugate(idx) * coeff
    return acc


def _inverse_sum(level) -> FpScalar:
    """Sum over i in [1, p) of (i*h)^-1, a prime-field scalar."""
    total = level.h.field.zero()
    for i in range(1, level.p):
        total = total + (level.h * i).inv()
    return total


def gamma_table(level) -> MultTable:
    """Rows for the inverse generator gamma = beta^-1.

    Off-square rows have exactly the two coefficients +/-(i*h)^-1; the
    square row uses the conjugate-sum identity (the sum of the conjugates
    of gamma is -alpha^-1) and so picks up one base-field coefficient.
    """
    ctx = level.ctx
    base = ctx.base
    p = level.p
    n = level.n
    rows = []
    for i in range(1, p):
        c = (level.h * i).inv()
        rows.append(make_row(base.zero(), [(0, c), (i, -c)]))
    inv_sum = _inverse_sum(level)
    alpha_inv = base.embed(level.alpha).inv()
    lead = -alpha_inv - base.embed(inv_sum)
    terms = [(0, lead)]
    for i in range(1, p):
        terms.append((i, (level.h * i).inv()))
    square = make_row(base.zero(), terms)
    return MultTable(
        generator=level.gamma, step=n, rows=tuple(rows), square_row=square,
        coefficient_field=classify_coefficients(rows))


def delta_table(level) -> MultTable:
    """Rows for the shifted generator delta_inv = gamma - b.

    Off-square rows keep two conjugate coefficients plus the constant -b^2
    carried by the redundant 1; the square row's constant is -b(b+alpha^-1).
    """
    ctx = level.ctx
    base = ctx.base
    p = level.p
    n = level.n
    b = level.b
    rows = []
    for i in range(1, p):
        ih_inv = (level.h * i).inv()
        rows.append(make_row(
            -(b * b), [(0, ih_inv - b), (i, -(ih_inv + b))]))
    inv_sum = _inverse_sum(level)
    alpha_inv = base.embed(level.alpha).inv()
    constant = -(alpha_inv + base.embed(b)) * b
    lead = -(alpha_inv + base.embed(b + b + inv_sum))
    terms = [(0, lead)]
    for i in range(1, p):
        terms.append((i, (level.h * i).inv()))
    square = make_row(constant, terms)
    return MultTable(
        generator=level.delta_inv, step=n, rows=tuple(rows),
        square_row=square, coefficient_field=classify_coefficients(rows))


def classify_coefficients(rows) -> str:
    all_prime = all(
        _coeff_in_prime(c) for row in rows for _, c in row.terms)
    return "prime" if all_prime else "base"


def full_table(table: MultTable) -> FullTable:
    """Expand generator rows to all m^2 conjugate products.

    The row for (i, j) is the row for (0, j-i) pushed through the i*step
    fold Frobenius: coefficients map to their Frobenius images (the
    identity here, as they lie in the fixed field) and indices rotate.
    """
    ctx = table.ctx
    base = ctx.base
    m = table.m
    step = table.step
    entries: dict[tuple[int, int], SparseRow] = {}
    for i in range(m):
        for j in range(m):
            d = (j - i) % m
            src = table.row(d)
            constant = _frob_coeff(base, src.constant, i * step)
            terms = [((idx + i) % m, _frob_coeff(base, c, i * step))
                     for idx, c in src.terms]
            terms.sort(key=lambda t: t[0])
            entries[(i, j)] = SparseRow(constant=constant, terms=tuple(terms))
    return FullTable(m=m, step=step, generator=table.generator, entries=entries)


def _frob_coeff(base, coeff, k: int):
    if isinstance(coeff, FpScalar):
        return coeff
    return base.frobenius(coeff, k)


def sparsity(table: MultTable | None) -> SparsityReport:
    """Count the nonzero structure constants of a table (None counts as
    the empty table)."""
    if table is None:
        return SparsityReport(0, 0, 0, 0, True, 0)
    nonzero = 0
    two_term = 0
    max_weight = 0
    constants = 0
    prime_count = 0
    off_square_prime = True
    for row in table.rows:
        nonzero += row.weight
        max_weight = max(max_weight, row.weight)
        if len(row.terms) == 2:
            two_term += 1
        if not row.constant.is_zero():
            constants += 1
            if _coeff_in_prime(row.constant):
                prime_count += 1
        for _, c in row.terms:
            if _coeff_in_prime(c):
                prime_count += 1
            else:
                off_square_prime = False
    row = table.square_row
    nonzero += row.weight
    max_weight = max(max_weight, row.weight)
    if not row.constant.is_zero():
        constants += 1
        if _coeff_in_prime(row.constant):
            prime_count += 1
    for _, c in row.terms:
        if _coeff_in_prime(c):
            prime_count += 1
    return SparsityReport(
        nonzero_structure_constants=nonzero,
        rows_with_two_terms=two_term,
        max_row_weight=max_weight,
        constant_terms_used=constants,
        coefficients_in_prime_field=off_square_prime,
        prime_coefficients=prime_count,
    )


def verify_table(level, table: MultTable | None) -> VerificationReport:
    """Re-evaluate every row against the direct field product (an empty
    table passes vacuously)."""
    report = VerificationReport()
    if table is None:
        return report
    ctx = table.ctx
    if level is not None and level.ctx != ctx:
        raise CtxMismatch("table generator does not live in the level's field")
    g = table.generator
    for i in range(1, table.m):
        product = g * table.conjugate(i)
        value = evaluate_row(table, table.row(i))
        report.check(f"row[{i}]",
                     f"generator * conjugate {i} of {ctx.describe()}",
                     product, value)
    report.check("square_row", f"generator^2 of {ctx.describe()}",
                 g * g, evaluate_row(table, table.square_row))
    return report


def verify_full_table(level, full: FullTable) -> VerificationReport:
    """Check all m^2 expanded products against direct multiplication."""
    report = VerificationReport()
    ctx = full.generator.ctx
    conj = [ctx.frobenius(full.generator, k * full.step) for k in range(full.m)]
    for (i, j), row in full.entries.items():
        acc = ctx.embed(row.constant)
        for idx, coeff in row.terms:
            acc = acc + conj[idx] * coeff
        report.check(f"full[{i},{j}]",
                     f"conjugate product ({i},{j}) of {ctx.describe()}",
                     conj[i] * conj[j], acc)
    return report
