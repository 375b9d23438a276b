"""JSON persistence for towers and Kummer levels (format version 1).

Every field element is written as its flattened prime-field coordinate
vector (plain decimal integers, lowest coordinate first), so files are
human-inspectable and diff-friendly.  Dumping is deterministic (sorted
keys, fixed indentation), which makes save/load round-trips byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import replace

from .artin_schreier import ASLevel, TowerSpec
from .fields import FieldCtx, FpScalar, PrimeModulus
from .kummer import KummerLevel, KummerParams, kummer_params
from .polys import Poly
from .tables import MultTable, SparseRow

FORMAT_VERSION = 1


class FormatError(ValueError):
    """The file is not a well-formed tower file."""


def _encode_coeff(base, coeff) -> list[int]:
    return base.flatten(base.embed(coeff))


def _encode_row(base, row: SparseRow) -> dict:
    return {
        "constant": _encode_coeff(base, row.constant),
        "terms": [[i, _encode_coeff(base, c)] for i, c in row.terms],
    }


def _encode_table(table: MultTable) -> dict:
    ctx = table.ctx
    base = ctx.base
    return {
        "generator": ctx.flatten(table.generator),
        "step": table.step,
        "rows": [_encode_row(base, r) for r in table.rows],
        "square": _encode_row(base, table.square_row),
    }


def _encode_modulus(ctx: FieldCtx) -> list[list[int]]:
    base = ctx.base
    return [base.flatten(ctx.modulus.coeff(i))
            for i in range(ctx.rel_degree + 1)]


def _encode_as_level(level: ASLevel) -> dict:
    ctx = level.ctx
    entry = {
        "kind": "artin_schreier",
        "modulus": _encode_modulus(ctx),
        "generator": ctx.flatten(level.delta_inv),
        "b": level.b.value,
        "tables": {},
    }
    if level.gamma_table is not None:
        entry["tables"]["gamma"] = _encode_table(level.gamma_table)
    if level.delta_table is not None:
        entry["tables"]["delta"] = _encode_table(level.delta_table)
    return entry


def _encode_kummer_level(level: KummerLevel) -> dict:
    ctx = level.ctx
    base = ctx.base
    entry = {
        "kind": "kummer",
        "modulus": _encode_modulus(ctx),
        "generator": ctx.flatten(level.gamma),
        "b": base.flatten(base.embed(level.b)),
        "q": level.params.q,
        "l": level.params.l,
        "r": level.params.r,
        "s": level.params.s,
        "xi": base.flatten(base.embed(level.xi)),
        "zeta": base.flatten(base.embed(level.zeta)),
        "tables": {},
    }
    if level.params.l > 1:
        prime = base._prime
        entry["base_modulus"] = [
            prime.flatten(base.modulus.coeff(i))
            for i in range(base.rel_degree + 1)
        ]
    if level.table is not None:
        entry["tables"]["gamma"] = _encode_table(level.table)
    return entry


def to_dict(obj: TowerSpec | KummerLevel) -> dict:
    if isinstance(obj, TowerSpec):
        return {
            "format_version": FORMAT_VERSION,
            "p": obj.p.p,
            "levels": [_encode_as_level(lv) for lv in obj.levels],
        }
    if isinstance(obj, KummerLevel):
        return {
            "format_version": FORMAT_VERSION,
            "p": obj.params.p,
            "levels": [_encode_kummer_level(obj)],
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: TowerSpec | KummerLevel) -> str:
    return json.dumps(to_dict(obj), indent=2, sort_keys=True) + "\n"


def save(obj: TowerSpec | KummerLevel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


# -- decoding ----------------------------------------------------------------


def _decode_row(base, d: dict) -> SparseRow:
    # normalize through make_row: a coefficient corrupted to zero then shows
    # up as a row that no longer evaluates to the right product, which the
    # verify pass reports by row instead of failing the whole load
    from .tables import make_row
    constant = base.unflatten(d["constant"])
    terms = [(int(i), base.unflatten(vec)) for i, vec in d["terms"]]
    return make_row(constant, terms)


def _decode_table(ctx: FieldCtx, d: dict, expected_generator=None) -> MultTable:
    from .tables import classify_coefficients
    base = ctx.base
    rows = tuple(_decode_row(base, r) for r in d["rows"])
    table = MultTable(
        generator=ctx.unflatten(d["generator"]),
        step=int(d["step"]),
        rows=rows,
        square_row=_decode_row(base, d["square"]),
        coefficient_field=classify_coefficients(rows),
    )
    return table


def _decode_modulus(base, coeff_vectors) -> Poly:
    return Poly(base, [base.unflatten(vec) for vec in coeff_vectors])


def _decode_as_level(base, entry: dict, prime: PrimeModulus) -> ASLevel:
    from .artin_schreier import compute_h
    modulus = _decode_modulus(base, entry["modulus"])
    alpha = -modulus.coeff(0)
    ctx = FieldCtx(base, modulus, kind=FieldCtx.KIND_AS, alpha=alpha)
    b = FpScalar(int(entry["b"]), prime)
    beta = ctx.generator()
    gamma = beta.inv()
    delta_inv = ctx.unflatten(entry["generator"])
    level = ASLevel(
        ctx=ctx, alpha=alpha, h=compute_h(base, alpha), b=b, beta=beta,
        gamma=gamma, delta_inv=delta_inv, delta=delta_inv.inv(),
    )
    gamma_table = delta_table = None
    t = entry.get("tables", {})
    if "gamma" in t:
        gamma_table = _decode_table(ctx, t["gamma"])
    if "delta" in t:
        delta_table = _decode_table(ctx, t["delta"])
    return replace(level, gamma_table=gamma_table, delta_table=delta_table)


def _decode_kummer_level(entry: dict, prime: PrimeModulus) -> KummerLevel:
    q, l, s = int(entry["q"]), int(entry["l"]), int(entry["s"])
    params = kummer_params(prime.p, q, l, s)
    if params.r != int(entry["r"]):
        raise FormatError(
            f"stored r={entry['r']} but p^l - 1 gives r={params.r}")
    if l == 1:
        base = prime
    else:
        base_mod = Poly(prime, [prime.unflatten(v) for v in entry["base_modulus"]])
        base = FieldCtx.generic(prime, base_mod)
    xi = base.unflatten(entry["xi"])
    zeta = base.unflatten(entry["zeta"])
    b = base.unflatten(entry["b"])
    modulus = _decode_modulus(base, entry["modulus"])
    ctx = FieldCtx(base, modulus, kind=FieldCtx.KIND_KUMMER, xi=xi, s=s)
    gamma = ctx.unflatten(entry["generator"])
    level = KummerLevel(params=params, ctx=ctx, xi=xi, zeta=zeta, b=b,
                        gamma=gamma)
    t = entry.get("tables", {})
    if "gamma" in t:
        level = replace(level, table=_decode_table(ctx, t["gamma"]))
    return level


def from_dict(data: dict) -> TowerSpec | KummerLevel:
    try:
        version = data["format_version"]
        if version != FORMAT_VERSION:
            raise FormatError(f"unsupported format version {version}")
        prime = PrimeModulus(int(data["p"]))
        levels = data["levels"]
        if not levels:
            raise FormatError("file contains no levels")
        kinds = {entry["kind"] for entry in levels}
        if kinds == {"kummer"}:
            if len(levels) != 1:
                raise FormatError("kummer files hold a single level")
            return _decode_kummer_level(levels[0], prime)
        if kinds != {"artin_schreier"}:
            raise FormatError(f"unsupported level kinds {sorted(kinds)}")
        base = prime
        decoded = []
        b_values = set()
        for entry in levels:
            level = _decode_as_level(base, entry, prime)
            decoded.append(level)
            b_values.add(level.b.value)
            base = level.ctx
        if len(b_values) != 1:
            raise FormatError("all levels of a tower must share the same b")
        return TowerSpec(p=prime, b=decoded[0].b, levels=tuple(decoded))
    except (KeyError, IndexError, TypeError) as exc:
        raise FormatError(f"malformed tower file: {exc}") from exc


def loads(text: str) -> TowerSpec | KummerLevel:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("top-level JSON value must be an object")
    return from_dict(data)


def load(path) -> TowerSpec | KummerLevel:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
