"""JSON round-trips and format validation."""

import json

import pytest

from nbtower import serialize
from nbtower.artin_schreier import TowerSpec, build_tower
from nbtower.fields import PrimeModulus
from nbtower.kummer import find_xi, kummer_extend, kummer_params
from nbtower.serialize import FormatError


@pytest.fixture(scope="module")
def kummer_level():
    F7 = PrimeModulus(7)
    return kummer_extend(F7, kummer_params(7, 3, 1),
                         find_xi(F7, 3, 1), 1).with_table()


def test_tower_roundtrip_is_byte_identical(tower2):
    text = serialize.dumps(tower2)
    again = serialize.dumps(serialize.loads(text))
    assert text == again


def test_tower_roundtrip_reconstructs_values(tower2):
    loaded = serialize.loads(serialize.dumps(tower2))
    assert isinstance(loaded, TowerSpec)
    assert loaded.degrees == tower2.degrees
    assert loaded.b == tower2.b
    for a, b in zip(loaded.levels, tower2.levels):
        assert a.ctx == b.ctx
        assert a.delta_inv == b.delta_inv
        assert a.gamma_table.rows == b.gamma_table.rows
        assert a.delta_table.square_row == b.delta_table.square_row


def test_kummer_roundtrip(kummer_level):
    text = serialize.dumps(kummer_level)
    loaded = serialize.loads(text)
    assert serialize.dumps(loaded) == text
    assert loaded.gamma == kummer_level.gamma
    assert loaded.zeta == kummer_level.zeta
    assert loaded.params == kummer_level.params
    assert loaded.table.rows == kummer_level.table.rows


def test_kummer_roundtrip_extension_base():
    from nbtower.kummer import base_field
    params = kummer_params(5, 3, 2)
    K = base_field(5, 2)
    level = kummer_extend(K, params, find_xi(K, 3, params.r), 1).with_table()
    text = serialize.dumps(level)
    loaded = serialize.loads(text)
    assert serialize.dumps(loaded) == text
    assert loaded.ctx == level.ctx


def test_save_load_file(tmp_path, tower2):
    path = tmp_path / "tower.json"
    serialize.save(tower2, path)
    loaded = serialize.load(path)
    assert serialize.dumps(loaded) == serialize.dumps(tower2)


def test_nondefault_b_roundtrip():
    tower = build_tower(3, 1, b=2)
    loaded = serialize.loads(serialize.dumps(tower))
    assert loaded.b == 2


def test_malformed_json():
    with pytest.raises(FormatError):
        serialize.loads("{oops")


def test_wrong_version(tower2):
    data = serialize.to_dict(tower2)
    data["format_version"] = 99
    with pytest.raises(FormatError):
        serialize.from_dict(data)


def test_missing_key(tower2):
    data = serialize.to_dict(tower2)
    del data["levels"][0]["modulus"]
    with pytest.raises(FormatError):
        serialize.from_dict(data)


def test_empty_levels(tower2):
    data = serialize.to_dict(tower2)
    data["levels"] = []
    with pytest.raises(FormatError):
        serialize.from_dict(data)


def test_scalars_are_plain_ints(tower2):
    data = json.loads(serialize.dumps(tower2))
    level = data["levels"][0]
    assert all(isinstance(v, int) for v in level["generator"])
    assert isinstance(level["b"], int)
