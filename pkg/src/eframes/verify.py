"""Seeded verification suites.

Each suite turns one family of identities or bounds into a list of numbered
cases with a residual, the bound it is compared against, and a pass flag.
Random inputs are drawn from ``numpy.random.default_rng([seed, case_id])`` so
every case is reproducible on its own.
"""
from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import etransform as et
from . import multipliers as mu
from .errors import InputError
from .fixtures import (
    EXAMPLE1_E_INV_4,
    example1_matrix,
    example1_sequence,
    example1_symbol,
    example2_matrix,
    example2_phi,
    example2_psi,
    example2_symbol,
)
from .frames import bessel_ladder, canonical_dual
from .jsonio import dumps
from .model import (
    Power,
    ScalarSequence,
    TruncationConfig,
    materialize_matrix,
    materialize_sequence,
)
from .numerics import invert, max_norm

EXACT_TOL = 1e-9


@dataclass
class CaseResult:
    case_id: int
    label: str
    residual: float
    bound: float
    passed: bool
    inputs: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    suite: str
    seed: int
    truncation: dict
    cases: list[CaseResult]
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        self.cases.sort(key=lambda c: c.case_id)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.cases), default=0.0)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "truncation": self.truncation,
            "max_residual": self.max_residual,
            "all_pass": self.all_pass,
            "cases": [asdict(c) for c in self.cases],
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def csv_rows(self) -> list[list]:
        return [[self.suite, c.case_id, repr(float(c.residual)), repr(float(c.bound)), c.passed] for c in self.cases]

    def to_csv(self) -> str:
        return reports_to_csv([self])


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "case_id", "residual", "bound", "pass"])
    for r in reports:
        w.writerows(r.csv_rows())
    return buf.getvalue()


# -- random inputs ----------------------------------------------------------


def case_rng(seed: int, case_id: int) -> np.random.Generator:
    return np.random.default_rng([seed, case_id])


def crandn(rng, *shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_matrix(rng, N: int) -> np.ndarray:
    """Independent zero-mean entries, scaled by ``1/N``."""
    return crandn(rng, N, N) / N


def random_unitary(rng, n: int) -> np.ndarray:
    Q, R = np.linalg.qr(crandn(rng, n, n))
    return Q * (np.diag(R) / np.abs(np.diag(R)))[None, :]


def well_conditioned(rng, n: int, cond: float = 10.0) -> np.ndarray:
    """``Q1 diag(s) Q2`` with singular values in ``[1, cond]``."""
    s = rng.uniform(1.0, cond, size=n)
    return (random_unitary(rng, n) * s[None, :]) @ random_unitary(rng, n)


def random_diagonal(rng, N: int, lo: float = 0.5, hi: float = 2.0) -> np.ndarray:
    """Nonzero complex diagonal entries with moduli in ``[lo, hi]``."""
    return rng.uniform(lo, hi, size=N) * np.exp(2j * np.pi * rng.uniform(size=N))


def semi_normalized(rng, N: int, lo: float = 0.5, hi: float = 2.0) -> np.ndarray:
    return rng.uniform(lo, hi, size=N)


def _case(cid, label, residual, bound, passed=None, **extra) -> CaseResult:
    residual = float(residual)
    ok = residual <= bound if passed is None else bool(passed)
    inputs = extra.pop("inputs", {})
    return CaseResult(cid, label, residual, float(bound), ok, inputs, extra)


# -- suites -----------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    anchor: str
    func: Callable
    exercises: tuple[str, ...]
    default_dim: int = 12
    default_cases: int = 0


def _suite_example1(cfg: TruncationConfig, cases: int, c: float = 2.0) -> tuple[list, dict]:
    N, d = cfg.seq_len, cfg.ambient_dim
    if N < 4 or d < N:
        raise InputError("paper-example-1 needs N >= 4 and d >= N")
    E, Psi, m = example1_matrix(), example1_sequence(), example1_symbol(c)
    Em, T = materialize_matrix(E, N), materialize_sequence(Psi, N, d)
    mv = m.values(N)
    out = []
    terms = et.e_transform(Em, T).terms
    out.append(_case(0, "E Psi is the standard basis", max_norm(terms - np.eye(d, N)), 1e-12))
    out.append(_case(1, "4x4 inverse matches the printed E^-1",
                     max_norm(invert(materialize_matrix(E, 4)) - EXAMPLE1_E_INV_4), 1e-12))
    out.append(_case(2, "E E^-1 = I (4x4)",
                     max_norm(materialize_matrix(E, 4) @ EXAMPLE1_E_INV_4 - np.eye(4)), 1e-12))
    viol = mu.check_symbol_matrix_commutation(m, Em)
    out.append(_case(3, "symbol commutes with E", len(viol), 0.0, violations=len(viol)))
    lhs = et.e_transform(Em, T * mv[None, :]).terms
    out.append(_case(4, "m(E Psi) = E(m Psi)", max_norm(lhs - terms * mv[None, :]), 1e-12))
    spec = mu.MultiplierSpec(m, Psi, Psi, E, E, cfg)
    M = mu.multiplier_matrix(spec)
    expect = np.zeros((d, d), dtype=np.complex128)
    expect[:N, :N] = np.diag(mv)
    out.append(_case(5, "M = diag(c, c, c, 1, 1/2, ...)", max_norm(M - expect), 1e-10))
    chk = mu.multiplier_as_frame_operator(m, T, Em)
    out.append(_case(6, "M = S_{E{sqrt(m_k) psi_k}}", chk.residual, 1e-10, sign=chk.sign))
    out.append(_case(7, "direct sum agrees with composed matrix",
                     max_norm(mu.multiplier_matrix_direct(spec) - M), 1e-10))
    lower = et.e_frame_bounds(Em, T * np.sqrt(mv.real)[None, :]).lower
    expect_lower = min(c, 1.0 / (N - 3)) if d == N else 0.0
    out.append(_case(8, "lower E-frame bound of sqrt(m) Psi decays like 1/(N-3)",
                     abs(lower - expect_lower), 1e-12, lower_bound=lower))
    notes = {"c": c, "lower_bound_at_N": lower,
             "comment": "inf |m_k| = 0 over all k; the lower bound shrinks as N grows"}
    return out, notes


def _suite_example2(cfg: TruncationConfig, cases: int) -> tuple[list, dict]:
    N, d = cfg.seq_len, cfg.ambient_dim
    if d != N:
        raise InputError("paper-example-2 needs d == N")
    E, Psi, Phi, m = example2_matrix(), example2_psi(), example2_phi(), example2_symbol()
    spec = mu.MultiplierSpec(m, Psi, Phi, E, E, cfg)
    M = mu.multiplier_matrix(spec)
    n = np.arange(1, N + 1)
    T, D = materialize_sequence(Psi, N, d), materialize_sequence(Phi, N, d)
    out = [
        _case(0, "M = diag(1, 1/2, 1/3, ...)", max_norm(M - np.diag(1.0 / n)), 1e-12,
              diagonal=[float(x) for x in np.diag(M).real]),
        _case(1, "M = M_{1/n^4, Psi, Phi}", max_norm(M - mu.plain_multiplier(1.0 / n**4, T, D)), 1e-12),
        _case(2, "M = M_{1/n, (e_n), (e_n)}",
              max_norm(M - mu.plain_multiplier(1.0 / n, np.eye(N), np.eye(N))), 1e-12),
        _case(3, "direct sum agrees with composed matrix", max_norm(mu.multiplier_matrix_direct(spec) - M), 1e-12),
    ]
    red = mu.diagonal_reduction(m, T, D, E, N, d)
    out.append(_case(4, "diagonal reduction to symbol |lambda_n|^2 m_n", red.residual, 1e-12))
    b_psi = et.e_frame_bounds(E, Psi, N, d)
    b_phi = et.e_frame_bounds(E, Phi, N, d)
    out.append(_case(5, "E-Bessel bounds: E Psi upper 1, E Phi upper 1",
                     max(abs(b_psi.upper - 1), abs(b_phi.upper - 1)), 1e-12,
                     B_psi=b_psi.upper, B_phi=b_phi.upper))
    nb = mu.multiplier_norm_bound(spec)
    out.append(_case(6, "|M| = 1 <= sqrt(B B') |m|_inf = 1", abs(nb.norm - 1) + abs(nb.bound - 1), 1e-12,
                     passed=nb.within and abs(nb.norm - 1) < 1e-12, norm=nb.norm, bound_value=nb.bound))
    lp, lf = bessel_ladder(Psi, N), bessel_ladder(Phi, N)
    out.append(_case(7, "Psi and Phi are not Bessel: bounds grow along N, 2N, 4N", 0.0, 0.0,
                     passed=lp.grows and lf.grows,
                     psi_ladder=list(lp.uppers), phi_ladder=list(lf.uppers), sizes=list(lp.sizes)))
    le = bessel_ladder(Psi, N, transform=lambda T_, k: et.e_transform(E, T_).terms)
    out.append(_case(8, "E Psi stays Bessel along N, 2N, 4N", 0.0, 0.0, passed=not le.grows,
                     ladder=list(le.uppers)))
    return out, {}


def _suite_thm_synthesis(cfg, cases):
    N, d = cfg.seq_len, cfg.ambient_dim
    out = []
    for i in range(cases):
        rng = case_rng(cfg.rng_seed, i)
        E, T, c = random_matrix(rng, N), crandn(rng, d, N), crandn(rng, N)
        out.append(_case(i, "T_E c = T(E^t c)", et.verify_synthesis_factorization(E, T, c), EXACT_TOL))
    return out, {}


def _suite_thm_analysis(cfg, cases):
    N, d = cfg.seq_len, cfg.ambient_dim
    out = []
    for i in range(cases):
        rng = case_rng(cfg.rng_seed, i)
        E, T, f = random_matrix(rng, N), crandn(rng, d, N), crandn(rng, d)
        out.append(_case(i, "T_E^* f = conj(E) T^* f", et.verify_analysis_factorization(E, T, f), EXACT_TOL))
    return out, {}


def _suite_multiplier_bound(cfg, cases):
    N, d = cfg.seq_len, cfg.ambient_dim
    out = []
    for i in range(cases):
        rng = case_rng(cfg.rng_seed, i)
        d2 = d if i % 2 == 0 else max(1, d - 2)
        E1, E2 = random_matrix(rng, N), random_matrix(rng, N)
        Phi, Psi = crandn(rng, d, N), crandn(rng, d2, N)
        m = crandn(rng, N)
        spec = mu.MultiplierSpec(m, Psi, Phi, E1, E2)
        nb = mu.multiplier_norm_bound(spec, tol=EXACT_TOL)
        agree = max_norm(mu.multiplier_apply(spec, Phi[:, 0]) - mu.multiplier_matrix(spec) @ Phi[:, 0])
        out.append(_case(i, "|M| <= sqrt(B B') |m|_inf", nb.norm - nb.bound, EXACT_TOL,
                         passed=nb.within and agree <= 1e-10, norm=nb.norm, bound_value=nb.bound,
                         definition_vs_factorization=agree, inputs={"d1": d, "d2": d2}))
    return out, {}


def _suite_multiplier_frame_op(cfg, cases):
    N, d = cfg.seq_len, cfg.ambient_dim
    out = []
    e1 = mu.multiplier_as_frame_operator(example1_symbol(2.0), example1_sequence(), example1_matrix(), N, max(d, N))
    out.append(_case(0, "worked example 1, c = 2", e1.residual, 1e-10, sign=e1.sign))
    r = mu.multiplier_as_frame_operator(np.ones(N), np.eye(d, N), np.eye(N))
    out.append(_case(1, "m = 1, E = I", r.residual, 1e-12, sign=r.sign))
    r = mu.multiplier_as_frame_operator(-np.ones(N), np.eye(d, N), np.diag(np.arange(1.0, N + 1)))
    M = mu.multiplier_matrix(mu.MultiplierSpec(-np.ones(N), np.eye(d, N), np.eye(d, N), np.eye(N), np.eye(N)))
    out.append(_case(2, "m = -1, diagonal E, orthonormal basis", r.residual + max_norm(M + np.eye(d, d)),
                     1e-12, passed=r.residual <= 1e-12 and r.sign == -1, sign=r.sign))
    for i in range(3, cases):
        rng = case_rng(cfg.rng_seed, i)
        T = crandn(rng, d, N)
        sign = 1 if i % 2 else -1
        if i % 3 == 0:
            # dense E with a constant symbol
            E = random_matrix(rng, N)
            m = np.full(N, sign * rng.uniform(0.5, 2.0))
            label = "dense E, constant symbol"
        else:
            E = np.diag(random_diagonal(rng, N))
            m = sign * semi_normalized(rng, N)
            label = "diagonal E, varying symbol"
        r = mu.multiplier_as_frame_operator(m, T, E)
        out.append(_case(i, label, r.residual, EXACT_TOL, passed=r.residual <= EXACT_TOL and r.sign == sign,
                         sign=r.sign))
    return out, {}


def _suite_multiplier_inverse(cfg, cases):
    d = cfg.ambient_dim
    N = d
    out = []
    worst_literal = 0.0
    for i in range(cases):
        rng = case_rng(cfg.rng_seed, i)
        U = well_conditioned(rng, d, 100.0)
        E = np.diag(random_diagonal(rng, N))
        sign = 1 if (i // 2) % 2 == 0 else -1
        m = sign * semi_normalized(rng, N) if i % 3 else np.full(N, sign * rng.uniform(0.5, 2.0))
        variant = "PsiPhi" if i % 2 == 0 else "PhiPsi"
        r = mu.multiplier_inverse(m, np.eye(d, N), U, E, variant=variant)
        extra = {"variant": variant, "sign": sign}
        if r.literal_residual is not None:
            extra["literal_psi_formula_residual"] = r.literal_residual
            worst_literal = max(worst_literal, r.literal_residual)
        out.append(_case(i, f"closed-form inverse, {variant}, sign {sign:+d}", r.residual, 1e-8, **extra))
    out.insert(0, _case(cases, "Phi = ONB, U = 2I, m = 1, E = I: inverse I/2",
                        max_norm(mu.multiplier_inverse(np.ones(N), np.eye(d, N), 2 * np.eye(d), np.eye(N)).formula_inverse
                                 - 0.5 * np.eye(d)), 1e-12))
    notes = {"max_literal_psi_formula_residual": worst_literal,
             "comment": "(U^-1)^* S^-1 must use the frame operator of E{sqrt|m| phi}; "
                        "the same expression with psi in its place is reported for comparison"}
    return out, notes


def _dual_pair(rng, d, N):
    T = crandn(rng, d, N)
    return T, canonical_dual(T)


def _suite_dual_identity(cfg, cases):
    N, d = cfg.seq_len, min(cfg.ambient_dim, cfg.seq_len)
    out = []
    r = mu.dual_identity_check(np.eye(N), np.eye(N), 2 * np.eye(N))
    out.append(_case(0, "orthonormal basis, E = 2I", max(r.values()), 1e-12, **r))
    for i in range(1, cases):
        rng = case_rng(cfg.rng_seed, i)
        T, D = _dual_pair(rng, d, N)
        E = np.diag(random_diagonal(rng, N))
        r = mu.dual_identity_check(T, D, E)
        out.append(_case(i, "four conj(E)/E^-1 multipliers equal I", max(r.values()), EXACT_TOL, **r))
    return out, {}


def _suite_dual_eframe(cfg, cases):
    N, d = cfg.seq_len, min(cfg.ambient_dim, cfg.seq_len)
    out = []
    n = np.arange(1.0, N + 1)
    r = mu.dual_eframe_identity(np.diag(n), np.diag(n), np.diag(1 / n))
    out.append(_case(0, "E = diag(1/n), Psi = Phi = {n e_n}", max(r.values()), 1e-12, **r))
    for i in range(1, cases):
        rng = case_rng(cfg.rng_seed, i)
        lam = random_diagonal(rng, N)
        T = crandn(rng, d, N)
        ET = T * lam[None, :]
        D = canonical_dual(ET) / lam[None, :]
        r = mu.dual_eframe_identity(T, D, np.diag(lam))
        out.append(_case(i, "M_{|E_nn|^2} = I for dual E-frames", max(r.values()), EXACT_TOL, **r))
    return out, {}


def _suite_diagonal_reduction(cfg, cases):
    N, d = cfg.seq_len, cfg.ambient_dim
    out = []
    ex = mu.diagonal_reduction(1.0, example2_psi(), example2_phi(), example2_matrix(), N, N)
    out.append(_case(0, "worked example 2: symbol 1/n^4", ex.residual, 1e-12))
    r = mu.diagonal_reduction(crandn(case_rng(cfg.rng_seed, 1), N), crandn(case_rng(cfg.rng_seed, 2), d, N),
                              crandn(case_rng(cfg.rng_seed, 3), d, N), np.eye(N))
    out.append(_case(1, "lambda = 1 leaves the symbol unchanged", r.residual, 1e-12))
    for i in range(2, cases):
        rng = case_rng(cfg.rng_seed, i)
        r = mu.diagonal_reduction(crandn(rng, N), crandn(rng, d, N), crandn(rng, d, N),
                                  np.diag(random_diagonal(rng, N)))
        out.append(_case(i, "random diagonal E", r.residual, 1e-10))
    return out, {}


def _suite_riesz(cfg, cases):
    N = cfg.seq_len
    out = [_case(0, "U = I, E = I", et.riesz_etransform_check(np.eye(N), np.eye(N)), 1e-12)]
    swap = np.eye(4)[[1, 0, 2, 3]]
    out.append(_case(1, "U swaps e1 and e2, E = worked example 1 (4x4)",
                     et.riesz_etransform_check(swap, example1_matrix(), 4), 1e-10))
    for i in range(2, cases):
        rng = case_rng(cfg.rng_seed, i)
        U = well_conditioned(rng, N, 10.0)
        E = np.eye(N) + 0.5 * random_matrix(rng, N)
        out.append(_case(i, "random U and E", et.riesz_etransform_check(U, E), EXACT_TOL))
    return out, {}


def _suite_commutation(cfg, cases):
    N, d = cfg.seq_len, cfg.ambient_dim
    out = []
    v = mu.check_symbol_matrix_commutation(example1_symbol(2.0), example1_matrix(), N)
    out.append(_case(0, "worked example 1 symbol commutes with E", len(v), 0.0))
    v = mu.check_symbol_matrix_commutation(ScalarSequence(Power(1.0)), example1_matrix(), N)
    first = v[0] if v else (0, 0, 0.0)
    out.append(_case(1, "m = {1, 2, 3, ...} violates at (1, 2) with gap 1",
                     abs(first[2] - 1.0), 0.0, passed=bool(v) and first[:2] == (1, 2) and first[2] == 1.0,
                     violations=[list(x) for x in v]))
    for i in range(2, cases):
        rng = case_rng(cfg.rng_seed, i)
        T = crandn(rng, d, N)
        if i % 2:
            E = np.diag(random_diagonal(rng, N))
            m = crandn(rng, N)
            label = "diagonal E, arbitrary symbol"
        else:
            # block-diagonal E with the symbol constant on each block
            cut = int(rng.integers(1, N))
            E = np.zeros((N, N), dtype=np.complex128)
            E[:cut, :cut] = random_matrix(rng, cut)
            E[cut:, cut:] = random_matrix(rng, N - cut)
            m = np.where(np.arange(N) < cut, rng.uniform(0.5, 2), rng.uniform(0.5, 2)).astype(complex)
            label = "block E, blockwise constant symbol"
        v = mu.check_symbol_matrix_commutation(m, E)
        gap = max_norm(et.e_transform(E, T * m[None, :]).terms - et.e_transform(E, T).terms * m[None, :])
        out.append(_case(i, label, gap, 1e-12, passed=not v and gap <= 1e-12, violations=len(v)))
    return out, {}


def _suite_scaling_lemma(cfg, cases):
    N, d = cfg.seq_len, min(cfg.ambient_dim, cfg.seq_len)
    out = []
    r = et.scaled_sequence_bounds(example1_matrix(), example1_sequence(), example1_symbol(2.0), N, N)
    out.append(_case(0, "worked example 1, c = 2", 0.0 if r.within else 1.0, 0.0, passed=r.within,
                     lower=r.bounds.lower, upper=r.bounds.upper,
                     predicted_lo=r.predicted_lo, predicted_hi=r.predicted_hi))
    for i in range(1, cases):
        rng = case_rng(cfg.rng_seed, i)
        T = crandn(rng, d, N)
        kind = i % 3
        if kind == 0:
            E = random_matrix(rng, N) + np.eye(N)
            m = np.full(N, rng.uniform(0.5, 2.0))
            label = "dense E, constant symbol"
        elif kind == 1:
            E = np.diag(random_diagonal(rng, N))
            m = semi_normalized(rng, N) * np.exp(2j * np.pi * rng.uniform(size=N))
            label = "diagonal E, complex semi-normalized symbol"
        else:
            E = np.diag(random_diagonal(rng, N))
            m = crandn(rng, N)
            label = "diagonal E: |E| bound for m Psi"
            mb = et.multiplied_bessel_bound(E, T, m)
            out.append(_case(i, label, mb.upper - mb.bound, EXACT_TOL, passed=mb.within,
                             upper=mb.upper, bound_value=mb.bound))
            continue
        r = et.scaled_sequence_bounds(E, T, m)
        out.append(_case(i, label, 0.0 if r.within else 1.0, 0.0, passed=r.within,
                         lower=r.bounds.lower, upper=r.bounds.upper,
                         predicted_lo=r.predicted_lo, predicted_hi=r.predicted_hi))
    # Exploratory: general E without the commutation condition.
    # Violations are easiest to hit at n = 2 with a dense real E.
    rng = case_rng(cfg.rng_seed, 10**6)
    E, T = rng.standard_normal((2, 2)), rng.standard_normal((2, 2))
    found = et.scaling_counterexample_search(E, T, rng, trials=50)
    fixed = et.scaled_sequence_bounds(np.array([[-1.0, -1.0], [1.0, 2.0]]), np.array([[-1.0, 1.0], [2.0, -1.0]]),
                                      np.array([1.0, 2.0]))
    notes = {"general_E_counterexample_search": {
        "dim": 2,
        "trials": 50,
        "violations": len(found),
        "fixed_counterexample": {"bounds": [fixed.bounds.lower, fixed.bounds.upper],
                                 "predicted": [fixed.predicted_lo, fixed.predicted_hi], "within": fixed.within},
        "comment": "non-commuting (m, E): the scaled-bounds containment is not guaranteed and can fail",
    }}
    return out, notes


def _suite_abs_convergence(cfg, cases):
    N, d = cfg.seq_len, cfg.ambient_dim
    out = []
    r = et.absolute_convergence_bound(np.eye(N), crandn(case_rng(cfg.rng_seed, 0), d, N), np.zeros(N))
    out.append(_case(0, "c = 0", r.partial, 0.0, passed=r.within))
    n = np.arange(1.0, N + 1)
    delta = np.zeros(N)
    delta[0] = 1.0
    r = et.absolute_convergence_bound(np.diag(1 / n**2), np.eye(N, N), delta)
    expect = np.sqrt(N) * np.sqrt(np.sum(n**-4.0))
    out.append(_case(1, "E = diag(1/n^2), orthonormal basis, c = delta_1",
                     abs(r.partial - 1) + abs(r.bound - expect), 1e-12, passed=r.within and abs(r.partial - 1) < 1e-12,
                     partial=r.partial, bound_value=r.bound))
    for i in range(2, cases):
        rng = case_rng(cfg.rng_seed, i)
        r = et.absolute_convergence_bound(random_matrix(rng, N), crandn(rng, d, N), crandn(rng, N))
        out.append(_case(i, "random Hilbert-Schmidt E", r.partial - r.bound, 0.0, passed=r.within,
                         partial=r.partial, bound_value=r.bound))
    return out, {}


_REGISTRY: dict[str, Suite] = {}


def _register(name, description, anchor, func, exercises, default_dim=12, default_cases=0):
    _REGISTRY[name] = Suite(name, description, anchor, func, tuple(exercises), default_dim, default_cases)


_register("paper-example-1", "Worked example 1: E Psi = standard basis and M = S",
          "example: E_1 Psi_1 = (e_n) and M^E_{m,Psi,Psi} = S", _suite_example1,
          ["e_transform", "check_symbol_matrix_commutation", "multiplier_matrix", "multiplier_apply",
           "multiplier_as_frame_operator", "e_frame_bounds"], default_dim=8)
_register("paper-example-2", "Worked example 2: multiplier diag(1/n) from non-Bessel Psi, Phi",
          "example: non-Bessel Psi, Phi with E-multiplier diag(1/n)", _suite_example2,
          ["multiplier_matrix", "multiplier_apply", "diagonal_reduction", "multiplier_norm_bound",
           "e_frame_bounds"], default_dim=4)
_register("thm-synthesis", "Synthesis factorization T_E c = T(E^t c)",
          "theorem: E-synthesis factors through E^t", _suite_thm_synthesis,
          ["verify_synthesis_factorization", "e_synthesis"], default_cases=100)
_register("thm-analysis", "Analysis factorization T_E^* f = conj(E) T^* f",
          "theorem: E-analysis factors through conj(E)", _suite_thm_analysis,
          ["verify_analysis_factorization", "e_analysis"], default_cases=100)
_register("multiplier-bound", "Operator norm bound |M| <= sqrt(B B') |m|_inf",
          "theorem: (E1, E2)-multiplier norm bound", _suite_multiplier_bound,
          ["multiplier_norm_bound", "multiplier_apply", "multiplier_matrix"], default_cases=100)
_register("multiplier-frame-op", "M^E_{m,Psi,Psi} equals +/- S_{E{sqrt|m_k| psi_k}}",
          "theorem: one-signed multiplier is +/- an E-frame operator", _suite_multiplier_frame_op,
          ["multiplier_as_frame_operator", "e_frame_operator"], default_cases=50)
_register("multiplier-inverse", "Closed-form inverses of M^E_{m,Psi,Phi} and M^E_{m,Phi,Psi}, Psi = U Phi",
          "theorem: inverse of E-multiplier for Psi = U Phi", _suite_multiplier_inverse,
          ["multiplier_inverse"], default_cases=50)
_register("dual-identity", "Four conj(E)/E^-1 multipliers of dual frames equal the identity",
          "theorem: dual frames under diagonal E", _suite_dual_identity,
          ["dual_identity_check"], default_cases=50)
_register("dual-eframe", "Dual E-frames give M_{|E_nn|^2} = identity",
          "theorem: dual E-frames", _suite_dual_eframe,
          ["dual_eframe_identity"], default_cases=50)
_register("diagonal-reduction", "Diagonal E reduces M^E_m to the plain multiplier with |lambda_n|^2 m_n",
          "theorem: diagonal E reduces to a plain multiplier", _suite_diagonal_reduction,
          ["diagonal_reduction"], default_cases=50)
_register("riesz-etransform", "E-transform of U E^-1 {e_j} is {U e_n}",
          "remark: E-Riesz bases", _suite_riesz,
          ["riesz_etransform_check"], default_cases=50)
_register("commutation", "Symbol/matrix commutation scan and termwise equality",
          "remark: symbol/matrix commutation", _suite_commutation,
          ["check_symbol_matrix_commutation", "e_transform"], default_cases=50)
_register("scaling-lemma", "E-frame bounds of {|m_k| psi_k} and |E|^2 B for {m_k psi_k}",
          "lemma: scaled E-frame bounds", _suite_scaling_lemma,
          ["scaled_sequence_bounds", "multiplied_bessel_bound", "scaling_counterexample_search"],
          default_cases=50)
_register("abs-convergence", "Absolute convergence bound of the double series",
          "proposition: absolute convergence of the E-transform series", _suite_abs_convergence,
          ["absolute_convergence_bound"], default_cases=50)

THEOREM_OPERATIONS = frozenset({
    "e_transform", "e_analysis", "e_synthesis", "e_frame_operator", "e_frame_bounds",
    "verify_synthesis_factorization", "verify_analysis_factorization", "scaled_sequence_bounds",
    "multiplied_bessel_bound", "absolute_convergence_bound", "riesz_etransform_check",
    "multiplier_apply", "multiplier_matrix", "multiplier_norm_bound", "check_symbol_matrix_commutation",
    "multiplier_as_frame_operator", "multiplier_inverse", "diagonal_reduction", "dual_identity_check",
    "dual_eframe_identity",
})


def _assert_coverage():
    covered = set().union(*(s.exercises for s in _REGISTRY.values()))
    missing = THEOREM_OPERATIONS - covered
    assert not missing, f"operations without a verification suite: {sorted(missing)}"
    for name in THEOREM_OPERATIONS:
        assert hasattr(et, name) or hasattr(mu, name), name


_assert_coverage()


def list_suites() -> list[dict]:
    """Registered suites in a stable order with descriptions and anchors."""
    return [{"name": s.name, "description": s.description, "anchor": s.anchor} for s in _REGISTRY.values()]


def suite_names() -> list[str]:
    return list(_REGISTRY)


def default_config(name: str, seed: int = 0) -> TruncationConfig:
    return TruncationConfig(_get(name).default_dim, rng_seed=seed)


def _get(name: str) -> Suite:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise InputError(f"unknown suite {name!r}; known: {', '.join(_REGISTRY)}") from None


def run_suite(name: str, cfg: TruncationConfig | None = None, cases: int | None = None, **params) -> VerificationReport:
    """Run one suite.  ``cfg`` defaults to the suite's own truncation with seed 0."""
    suite = _get(name)
    cfg = cfg or default_config(name)
    n_cases = suite.default_cases if cases is None else cases
    results, notes = suite.func(cfg, n_cases, **params)
    trunc = {"ambient_dim": cfg.ambient_dim, "seq_len": cfg.seq_len, "residual_tol": cfg.residual_tol}
    return VerificationReport(name, cfg.rng_seed, trunc, results, notes)


def run_all(seed: int = 0, dim: int | None = None) -> list[VerificationReport]:
    reports = []
    for name, suite in _REGISTRY.items():
        d = suite.default_dim if dim is None else dim
        reports.append(run_suite(name, TruncationConfig(d, rng_seed=seed)))
    return reports
