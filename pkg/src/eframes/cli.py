"""``eframe`` command-line front end.

Every successful command prints one JSON document to stdout.  Failures print
``{"error": {...}}`` to stderr and exit with 2 for bad input or 1 for a
failed computation.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import etransform as et
from . import multipliers as mu
from . import verify as vf
from .errors import EFrameError, InputError
from .frames import frame_bounds
from .jsonio import (
    SpecFileError,
    decode_vector,
    dumps,
    encode_matrix,
    encode_vector,
    load_specfile,
)
from .model import TruncationConfig, as_sequence_at, hs_partial_sum

EXIT_OK, EXIT_COMPUTE, EXIT_INPUT = 0, 1, 2


def _emit(obj) -> None:
    click.echo(dumps(obj))


def _require(spec, key: str):
    obj = getattr(spec, key)
    if obj is None:
        raise SpecFileError("required by this command but absent", "/" + key)
    return obj


def _dims(spec) -> tuple[int, int]:
    return spec.truncation.seq_len, spec.truncation.ambient_dim


def _multiplier_spec(spec) -> mu.MultiplierSpec:
    Psi = _require(spec, "Psi")
    Phi = spec.Phi if spec.Phi is not None else Psi
    m = _require(spec, "m")
    E1 = spec.E1 if spec.E1 is not None else spec.E
    E2 = spec.E2 if spec.E2 is not None else spec.E
    return mu.MultiplierSpec(m, Psi, Phi, E1, E2, spec.truncation)


file_arg = click.argument("file", type=click.Path(dir_okay=False, path_type=Path))


@click.group()
def cli():
    """Frames, E-transforms and (E1, E2)-multipliers at finite truncation."""


@cli.group("spec")
def spec_group():
    """Spec-file utilities."""


@spec_group.command("validate")
@file_arg
def spec_validate(file):
    """Check that FILE is schema-valid and every component materialises."""
    spec = load_specfile(file)
    present = [k for k in ("E", "E1", "E2", "U", "Psi", "Phi", "m") if getattr(spec, k) is not None]
    N, d = _dims(spec)
    _emit({"valid": True, "components": present, "truncation": {"ambient_dim": d, "seq_len": N}})


@cli.group("frame")
def frame_group():
    """Classical frame computations."""


@frame_group.command("bounds")
@file_arg
@click.option("--sequence", "which", type=click.Choice(["Psi", "Phi"]), default="Psi", show_default=True)
@click.option("--etransform/--plain", "use_e", default=False,
              help="Bounds of the E-transform instead of the sequence itself.")
def frame_bounds_cmd(file, which, use_e):
    """Optimal frame bounds {"A", "B"} at the file's truncation."""
    spec = load_specfile(file)
    N, d = _dims(spec)
    seq = _require(spec, which)
    if use_e:
        b = et.e_frame_bounds(_require(spec, "E"), seq, N, d)
    else:
        b = frame_bounds(as_sequence_at(seq, N, d))
    _emit({"A": b.lower, "B": b.upper})


@cli.group("etransform")
def etransform_group():
    """E-transforms of sequences."""


@etransform_group.command("apply")
@file_arg
def etransform_apply(file):
    """Terms (E Psi)_n, n = 1..N, each a vector in C^d."""
    spec = load_specfile(file)
    N, d = _dims(spec)
    out = et.e_transform(_require(spec, "E"), _require(spec, "Psi"), N, d)
    _emit({
        "terms": encode_matrix(out.terms.T),
        "N": out.N,
        "d": out.d,
        "last_vector_norm": out.last_vector_norm,
        "last_column_max": out.last_column_max,
    })


@etransform_group.command("hs-check")
@file_arg
@click.option("--terms", "K", type=click.IntRange(min=1), required=True, help="Truncation order K.")
def etransform_hs_check(file, K):
    """Partial Hilbert-Schmidt sum of E over the leading K x K block."""
    spec = load_specfile(file)
    r = hs_partial_sum(_require(spec, "E"), K)
    _emit({"terms": K, "partial": r.partial, "tail_bound": r.tail_bound})


@cli.group("multiplier")
def multiplier_group():
    """(E1, E2)-multipliers.  E1 and E2 fall back to E, then to the identity."""


@multiplier_group.command("matrix")
@file_arg
def multiplier_matrix_cmd(file):
    """The d x d matrix of M^{(E1,E2)}_{m,Psi,Phi}."""
    spec = load_specfile(file)
    M = mu.multiplier_matrix(_multiplier_spec(spec))
    _emit({"shape": list(M.shape), "matrix": encode_matrix(M)})


@multiplier_group.command("apply")
@file_arg
@click.option("--vector", required=True, help='JSON array of numbers or [re, im] pairs.')
def multiplier_apply_cmd(file, vector):
    """M f by direct summation."""
    spec = load_specfile(file)
    try:
        f = decode_vector(json.loads(vector))
    except (json.JSONDecodeError, TypeError) as exc:
        raise SpecFileError(f"cannot parse vector: {exc}", "--vector") from exc
    except InputError as exc:
        raise SpecFileError(str(exc), "--vector") from exc
    _emit({"result": encode_vector(mu.multiplier_apply(_multiplier_spec(spec), f))})


@cli.command("suites")
def suites_cmd():
    """List the verification suites."""
    _emit({"suites": vf.list_suites()})


@cli.command("verify")
@click.argument("suite")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), envvar="EFRAME_SEED", default=0, show_default=True,
              help="Overrides EFRAME_SEED when both are given.")
@click.option("--dim", type=click.IntRange(min=1), default=None, help="d = N for every suite.")
@click.option("--cases", type=click.IntRange(min=0), default=None, help="Cases per randomised suite.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the report here; a .csv suffix selects the CSV summary.")
def verify_cmd(suite, seed, dim, cases, out):
    """Run SUITE (or "all") and report.  Exits 1 if any case fails."""
    names = vf.suite_names() if suite == "all" else [suite]
    reports = []
    for name in names:
        cfg = vf.default_config(name, seed)
        if dim is not None:
            cfg = TruncationConfig(dim, rng_seed=seed)
        reports.append(vf.run_suite(name, cfg, cases))
    all_pass = all(r.all_pass for r in reports)
    if suite == "all":
        doc = {"seed": seed, "all_pass": all_pass, "reports": [r.to_dict() for r in reports]}
    else:
        doc = reports[0].to_dict()
    if out is None:
        _emit(doc)
    else:
        text = vf.reports_to_csv(reports) if out.suffix.lower() == ".csv" else dumps(doc) + "\n"
        out.write_text(text)
        _emit({"out": str(out), "all_pass": all_pass, "suites": [r.suite for r in reports]})
    if not all_pass:
        sys.exit(EXIT_COMPUTE)


def _error(kind: str, message: str, code: int, path: str | None = None) -> int:
    err = {"type": kind, "message": message, "exit_code": code}
    if path is not None:
        err["path"] = path
    click.echo(dumps({"error": err}), err=True)
    return code


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="eframe", standalone_mode=False)
    except SpecFileError as exc:
        return _error(type(exc).__name__, str(exc), EXIT_INPUT, exc.path)
    except InputError as exc:
        return _error(type(exc).__name__, str(exc), EXIT_INPUT)
    except EFrameError as exc:
        return _error(type(exc).__name__, str(exc), EXIT_COMPUTE)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        return _error("UsageError", exc.format_message(), EXIT_INPUT)
    except click.Abort:
        return _error("Aborted", "aborted", EXIT_COMPUTE)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
