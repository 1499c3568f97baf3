"""JSON encoding of truncation configs, rules, matrices, sequences and spec files.

Complex numbers are ``[re, im]`` pairs on output; on input a bare real
number is accepted as well.  Field names are listed in ``SPECFILE_SCHEMA``
and documented in the README.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import jsonschema
import numpy as np

from .errors import InputError
from .model import (
    BandedSpec,
    Constant,
    DensePrefixPlusDiagonalRule,
    DenseSpec,
    DiagonalSpec,
    Explicit,
    ExplicitVectors,
    InversePower,
    Power,
    PrefixThenRule,
    PrefixThenScaledBasis,
    ScaledBasis,
    ScalarSequence,
    Transformed,
    TruncationConfig,
    materialize_matrix,
    materialize_sequence,
)

_complex = {
    "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    ]
}
_cvec = {"type": "array", "items": {"$ref": "#/$defs/complex"}, "minItems": 1}
_cmat = {"type": "array", "items": {"$ref": "#/$defs/cvec"}, "minItems": 1}


def _tagged(tag: str, variants: dict) -> dict:
    """Object schema discriminated by ``tag``; each variant is ``(properties, required)``."""
    return {
        "type": "object",
        "required": [tag],
        "properties": {tag: {"enum": list(variants)}},
        "allOf": [
            {
                "if": {"properties": {tag: {"const": name}}, "required": [tag]},
                "then": {
                    "properties": {tag: {"const": name}, **props},
                    "required": required,
                    "additionalProperties": False,
                },
            }
            for name, (props, required) in variants.items()
        ],
    }


SPECFILE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["truncation"],
    "additionalProperties": False,
    "properties": {
        "truncation": {"$ref": "#/$defs/truncation"},
        "E": {"$ref": "#/$defs/matrix"},
        "E1": {"$ref": "#/$defs/matrix"},
        "E2": {"$ref": "#/$defs/matrix"},
        "U": {"$ref": "#/$defs/cmat"},
        "Psi": {"$ref": "#/$defs/sequence"},
        "Phi": {"$ref": "#/$defs/sequence"},
        "m": {"$ref": "#/$defs/symbol"},
        "extras": {"type": "object"},
    },
    "$defs": {
        "complex": _complex,
        "cvec": _cvec,
        "cmat": _cmat,
        "truncation": {
            "type": "object",
            "required": ["ambient_dim"],
            "additionalProperties": False,
            "properties": {
                "ambient_dim": {"type": "integer", "minimum": 1},
                "seq_len": {"type": "integer", "minimum": 1},
                "residual_tol": {"type": "number", "exclusiveMinimum": 0},
                "rng_seed": {"type": "integer", "minimum": 0, "maximum": 18446744073709551615},
            },
        },
        "rule": _tagged("type", {
            "constant": ({"value": {"$ref": "#/$defs/complex"}}, ["value"]),
            "power": ({"p": {"type": "number"}}, ["p"]),
            "inverse_power": ({"p": {"type": "number"}}, ["p"]),
            "explicit": ({"values": {"$ref": "#/$defs/cvec"}}, ["values"]),
            "prefix_then_rule": ({
                "prefix": {"type": "array", "items": {"$ref": "#/$defs/complex"}},
                "tail": {"$ref": "#/$defs/rule"},
                "tail_offset": {"type": "integer"},
            }, ["prefix", "tail"]),
        }),
        "symbol": {
            "type": "object",
            "required": ["rule"],
            "additionalProperties": False,
            "properties": {
                "rule": {"$ref": "#/$defs/rule"},
                "declared_tail": {"enum": ["decaying", "semi_normalized", "growing", "finite_support"]},
            },
        },
        "matrix": _tagged("kind", {
            "dense": ({"entries": {"$ref": "#/$defs/cmat"}}, ["entries"]),
            "diagonal": ({"rule": {"$ref": "#/$defs/rule"}}, ["rule"]),
            "banded": ({"bands": {
                "type": "object", "minProperties": 1,
                "propertyNames": {"pattern": "^-?[0-9]+$"},
                "additionalProperties": {"$ref": "#/$defs/rule"},
            }}, ["bands"]),
            "dense_prefix_plus_diagonal_rule": ({
                "prefix": {"$ref": "#/$defs/cmat"},
                "rule": {"$ref": "#/$defs/rule"},
            }, ["prefix", "rule"]),
        }),
        "sequence": _tagged("kind", {
            "scaled_basis": ({"rule": {"$ref": "#/$defs/rule"}}, ["rule"]),
            "explicit": ({"vectors": {"$ref": "#/$defs/cmat"}}, ["vectors"]),
            "prefix_then_scaled_basis": ({
                "prefix": {"type": "array", "items": {"$ref": "#/$defs/cvec"}},
                "rule": {"$ref": "#/$defs/rule"},
                "offset": {"type": "integer"},
            }, ["prefix", "rule"]),
            "transformed": ({
                "U": {"$ref": "#/$defs/cmat"},
                "base": {"$ref": "#/$defs/sequence"},
            }, ["U", "base"]),
        }),
    },
}

_validator = jsonschema.Draft202012Validator(SPECFILE_SCHEMA)


class SpecFileError(InputError):
    """Schema or materialisation failure, with a JSON-pointer ``path``."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path or '/'}: {message}")
        self.path = path or "/"
        self.detail = message


# -- decoding ---------------------------------------------------------------


def decode_complex(x) -> complex:
    if isinstance(x, (list, tuple)):
        return complex(float(x[0]), float(x[1]))
    return complex(float(x))


def decode_vector(xs) -> np.ndarray:
    return np.array([decode_complex(x) for x in xs], dtype=np.complex128)


def decode_matrix(rows) -> np.ndarray:
    lens = {len(r) for r in rows}
    if len(lens) != 1:
        raise InputError("ragged matrix: rows have different lengths")
    return np.array([[decode_complex(x) for x in r] for r in rows], dtype=np.complex128)


def decode_rule(obj):
    t = obj["type"]
    if t == "constant":
        return Constant(decode_complex(obj["value"]))
    if t == "power":
        return Power(float(obj["p"]))
    if t == "inverse_power":
        return InversePower(float(obj["p"]))
    if t == "explicit":
        return Explicit(tuple(decode_vector(obj["values"])))
    if t == "prefix_then_rule":
        return PrefixThenRule(tuple(decode_complex(v) for v in obj["prefix"]), decode_rule(obj["tail"]),
                              int(obj.get("tail_offset", 0)))
    raise InputError(f"unknown rule type {t!r}")


def decode_symbol(obj) -> ScalarSequence:
    return ScalarSequence(decode_rule(obj["rule"]), obj.get("declared_tail", ""))


def decode_matrix_spec(obj):
    kind = obj["kind"]
    if kind == "dense":
        return DenseSpec(decode_matrix(obj["entries"]))
    if kind == "diagonal":
        return DiagonalSpec(decode_rule(obj["rule"]))
    if kind == "banded":
        return BandedSpec({int(o): decode_rule(r) for o, r in obj["bands"].items()})
    if kind == "dense_prefix_plus_diagonal_rule":
        return DensePrefixPlusDiagonalRule(decode_matrix(obj["prefix"]), decode_rule(obj["rule"]))
    raise InputError(f"unknown matrix kind {kind!r}")


def decode_sequence(obj):
    kind = obj["kind"]
    if kind == "scaled_basis":
        return ScaledBasis(decode_rule(obj["rule"]))
    if kind == "explicit":
        return ExplicitVectors(tuple(decode_vector(v) for v in obj["vectors"]))
    if kind == "prefix_then_scaled_basis":
        return PrefixThenScaledBasis(tuple(decode_vector(v) for v in obj["prefix"]), decode_rule(obj["rule"]),
                                     int(obj.get("offset", 0)))
    if kind == "transformed":
        return Transformed(decode_matrix(obj["U"]), decode_sequence(obj["base"]))
    raise InputError(f"unknown sequence kind {kind!r}")


@dataclass(frozen=True, eq=False)
class SpecFile:
    truncation: TruncationConfig
    E: object = None
    E1: object = None
    E2: object = None
    U: np.ndarray | None = None
    Psi: object = None
    Phi: object = None
    m: ScalarSequence | None = None
    extras: dict | None = None


def _pointer(parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def validate_document(doc) -> None:
    """Raise :class:`SpecFileError` naming the offending path for the first schema error."""
    errors = sorted(_validator.iter_errors(doc), key=lambda e: (len(e.path), list(map(str, e.path))))
    if not errors:
        return
    err = errors[0]
    # Descend into oneOf branches to report the most specific cause.
    while err.context:
        err = min(err.context, key=lambda e: (-len(e.absolute_path), str(e.message)))
    parts = list(err.absolute_path)
    if err.validator == "required":
        missing = [r for r in err.validator_value if isinstance(err.instance, dict) and r not in err.instance]
        if missing:
            parts.append(missing[0])
    raise SpecFileError(err.message, _pointer(parts))


def decode_specfile(doc) -> SpecFile:
    validate_document(doc)
    t = doc["truncation"]
    cfg = TruncationConfig(
        ambient_dim=t["ambient_dim"],
        seq_len=t.get("seq_len"),
        residual_tol=t.get("residual_tol", 1e-9),
        rng_seed=t.get("rng_seed", 0),
    )
    kw = {}
    decoders = {
        "E": decode_matrix_spec,
        "E1": decode_matrix_spec,
        "E2": decode_matrix_spec,
        "U": decode_matrix,
        "Psi": decode_sequence,
        "Phi": decode_sequence,
        "m": decode_symbol,
    }
    for key, dec in decoders.items():
        if key in doc:
            try:
                kw[key] = dec(doc[key])
            except InputError as exc:
                raise SpecFileError(str(exc), "/" + key) from exc
    spec = SpecFile(cfg, extras=doc.get("extras"), **kw)
    check_materializable(spec)
    return spec


def check_materializable(spec: SpecFile) -> None:
    """Materialise every component at the file's truncation."""
    N, d = spec.truncation.seq_len, spec.truncation.ambient_dim
    for key in ("E", "E1", "E2"):
        obj = getattr(spec, key)
        if obj is not None:
            try:
                materialize_matrix(obj, N)
            except InputError as exc:
                raise SpecFileError(str(exc), "/" + key) from exc
    for key in ("Psi", "Phi"):
        obj = getattr(spec, key)
        if obj is not None:
            try:
                materialize_sequence(obj, N, d)
            except InputError as exc:
                raise SpecFileError(str(exc), "/" + key) from exc
    if spec.U is not None and spec.U.shape != (d, d):
        raise SpecFileError(f"U has shape {spec.U.shape}, expected ({d}, {d})", "/U")
    if spec.m is not None:
        try:
            spec.m.values(N)
        except InputError as exc:
            raise SpecFileError(str(exc), "/m") from exc


def load_specfile(path) -> SpecFile:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON: {exc.msg} (line {exc.lineno})", "") from exc
    except OSError as exc:
        raise SpecFileError(f"cannot read file: {exc.strerror}", "") from exc
    return decode_specfile(doc)


# -- encoding ---------------------------------------------------------------


def _num(x: float) -> float:
    x = float(x)
    return 0.0 if x == 0 else x  # normalise -0.0


def encode_complex(z) -> list[float]:
    z = complex(z)
    return [_num(z.real), _num(z.imag)]


def encode_vector(v) -> list:
    return [encode_complex(z) for z in np.asarray(v).ravel()]


def encode_matrix(A) -> list:
    return [encode_vector(row) for row in np.asarray(A)]


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, non-finite floats as strings."""

    def clean(o):
        if isinstance(o, dict):
            return {str(k): clean(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [clean(v) for v in o]
        if isinstance(o, (np.floating, float)):
            f = float(o)
            return f if math.isfinite(f) else repr(f)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.bool_):
            return bool(o)
        return o

    return json.dumps(clean(obj), sort_keys=True, indent=2)
