import json
import math
from pathlib import Path

import numpy as np
import pytest

from eframes import jsonio
from eframes.fixtures import example1_matrix, example1_sequence, example1_symbol, example2_matrix, example2_phi, example2_psi
from eframes.model import materialize_matrix, materialize_sequence

from conftest import assert_close

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def doc(**kw):
    base = {"truncation": {"ambient_dim": 3}}
    base.update(kw)
    return base


def test_complex_encoding_roundtrip():
    z = np.array([1 + 2j, -0.0 - 0.0j, 3.5])
    enc = jsonio.encode_vector(z)
    assert enc == [[1.0, 2.0], [0.0, 0.0], [3.5, 0.0]]
    assert math.copysign(1, enc[1][0]) == 1
    assert_close(jsonio.decode_vector(enc), z, 0)
    assert jsonio.decode_complex(2) == 2 and jsonio.decode_complex([0, 1]) == 1j


def test_dumps_is_deterministic_and_valid():
    obj = {"b": np.float64(1.5), "a": [np.int64(2), np.bool_(True)], "c": float("inf")}
    s = jsonio.dumps(obj)
    assert s == jsonio.dumps(dict(reversed(list(obj.items()))))
    assert json.loads(s) == {"a": [2, True], "b": 1.5, "c": "inf"}


@pytest.mark.parametrize("bad, path", [
    ({}, "/truncation"),
    (doc(truncation={}), "/truncation/ambient_dim"),
    (doc(truncation={"ambient_dim": 0}), "/truncation/ambient_dim"),
    (doc(E={"kind": "diagonal"}), "/E/rule"),
    (doc(E={"kind": "diagonal", "rule": {"type": "power"}}), "/E/rule/p"),
    (doc(Psi={"kind": "explicit", "vectors": [[1, [1, 2, 3]]]}), "/Psi/vectors/0/1"),
    (doc(bogus=1), "/"),
    (doc(E={"kind": "toeplitz"}), "/E/kind"),
    (doc(m={"rule": {"type": "constant", "value": 1, "extra": 0}}), "/m/rule"),
])
def test_schema_errors_name_path(bad, path):
    with pytest.raises(jsonio.SpecFileError) as exc:
        jsonio.decode_specfile(bad)
    assert exc.value.path == path


@pytest.mark.parametrize("bad, path", [
    (doc(E={"kind": "dense", "entries": [[1, 2], [3, 4], [5, 6]]}), "/E"),
    (doc(E={"kind": "dense", "entries": [[1, 2], [3, 4]]}), "/E"),
    (doc(E={"kind": "dense", "entries": [[1, 2, 3], [4, 5]]}), "/E"),
    (doc(Psi={"kind": "explicit", "vectors": [[1, 0, 0]]}), "/Psi"),
    (doc(U=[[1, 0], [0, 1]]), "/U"),
    (doc(m={"rule": {"type": "explicit", "values": [1]}}), "/m"),
])
def test_materialisation_errors_name_path(bad, path):
    with pytest.raises(jsonio.SpecFileError) as exc:
        jsonio.decode_specfile(bad)
    assert exc.value.path == path


def test_every_kind_decodes():
    d = doc(
        truncation={"ambient_dim": 3, "seq_len": 4, "residual_tol": 1e-8, "rng_seed": 7},
        E={"kind": "banded", "bands": {"0": {"type": "constant", "value": [1, 1]}, "-1": {"type": "power", "p": 1}}},
        E1={"kind": "dense", "entries": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]},
        Psi={"kind": "transformed", "U": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
             "base": {"kind": "scaled_basis", "rule": {"type": "explicit", "values": [1, 2, 3, 4]}}},
        Phi={"kind": "prefix_then_scaled_basis", "prefix": [[1, 1]], "rule": {"type": "inverse_power", "p": 1}},
        m={"rule": {"type": "prefix_then_rule", "prefix": [5], "tail": {"type": "constant", "value": 1},
                    "tail_offset": 1}, "declared_tail": "semi_normalized"},
    )
    s = jsonio.decode_specfile(d)
    assert s.truncation.seq_len == 4 and s.truncation.rng_seed == 7
    assert_close(materialize_matrix(s.E, 3), [[1 + 1j, 0, 0], [2, 1 + 1j, 0], [0, 3, 1 + 1j]], 0)
    assert_close(materialize_sequence(s.Psi, 4, 3), [[0, 2, 0, 0], [1, 0, 0, 0], [0, 0, 3, 0]], 0)
    assert_close(materialize_sequence(s.Phi, 4, 3), [[1, 0, 0, 0], [1, 1 / 2, 0, 0], [0, 0, 1 / 3, 0]], 0)
    assert_close(s.m.values(4), [5, 1, 1, 1], 0)


def test_load_specfile_errors(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(jsonio.SpecFileError, match="invalid JSON"):
        jsonio.load_specfile(p)
    with pytest.raises(jsonio.SpecFileError, match="cannot read"):
        jsonio.load_specfile(tmp_path / "missing.json")


def test_shipped_fixtures_match_python_definitions():
    s1 = jsonio.load_specfile(FIXTURES / "paper_example_1.json")
    assert (s1.truncation.d, s1.truncation.N) == (8, 8)
    assert_close(materialize_matrix(s1.E, 8), materialize_matrix(example1_matrix(), 8), 0)
    assert_close(materialize_sequence(s1.Psi, 8, 8), materialize_sequence(example1_sequence(), 8, 8), 0)
    assert_close(s1.m.values(8), example1_symbol(2.0).values(8), 0)
    s2 = jsonio.load_specfile(FIXTURES / "paper_example_2.json")
    assert s2.truncation.d == 4
    assert_close(materialize_matrix(s2.E, 4), materialize_matrix(example2_matrix(), 4), 0)
    assert_close(materialize_sequence(s2.Psi, 4, 4), materialize_sequence(example2_psi(), 4, 4), 0)
    assert_close(materialize_sequence(s2.Phi, 4, 4), materialize_sequence(example2_phi(), 4, 4), 0)
    for name in ("onb.json", "hs_diag.json"):
        jsonio.load_specfile(FIXTURES / name)
