import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eframes import etransform as et
from eframes.errors import PreconditionError, SingularMatrixError
from eframes.fixtures import example1_matrix, example1_sequence, example1_symbol, example2_matrix, example2_phi, example2_psi
from eframes.model import Constant, DiagonalSpec, InversePower, ScaledBasis
from eframes.verify import crandn, random_diagonal, random_matrix

from conftest import assert_close

seeds = st.integers(0, 2**32 - 1)


def test_e_transform_examples():
    out = et.e_transform(example1_matrix(), example1_sequence(), 8, 8)
    assert_close(out.terms, np.eye(8), 1e-12)
    assert out.N == 8 and out.d == 8
    assert out.last_vector_norm == pytest.approx(1 / 8) and out.last_column_max == 8
    T = crandn(np.random.default_rng(1), 3, 5)
    assert_close(et.e_transform(np.eye(5), T).terms, T, 0)
    assert_close(et.e_transform(example2_matrix(), example2_phi(), 6, 6).terms, np.eye(6), 1e-15)


def test_e_frame_operator_and_bounds_examples():
    assert_close(et.e_frame_operator(example1_matrix(), example1_sequence(), 8, 8), np.eye(8), 1e-12)
    b = et.e_frame_bounds(example1_matrix(), example1_sequence(), 8, 8)
    assert (b.lower, b.upper) == pytest.approx((1, 1))
    assert_close(et.e_frame_operator(np.eye(4), np.eye(4)), np.eye(4), 0)
    n = np.arange(1.0, 5)
    assert_close(et.e_frame_operator(example2_matrix(), example2_psi(), 4, 4), np.diag(1 / n**2), 1e-15)
    b = et.e_frame_bounds(example2_matrix(), example2_psi(), 4, 4)
    assert (b.lower, b.upper) == pytest.approx((1 / 16, 1))


def test_factorization_examples():
    rng = np.random.default_rng(5)
    T, c, f = crandn(rng, 6, 6), crandn(rng, 6), crandn(rng, 6)
    E = np.diag(random_diagonal(rng, 6).real)
    assert et.verify_synthesis_factorization(E, T, c) <= 1e-12
    assert et.verify_analysis_factorization(E, T, f) <= 1e-12
    delta = np.zeros(8)
    delta[0] = 1
    T1 = et.e_transform(example1_matrix(), example1_sequence(), 8, 8)
    assert_close(et.e_synthesis(None, T1, delta), np.eye(8)[:, 0], 1e-15)
    assert et.verify_synthesis_factorization(example1_matrix(), example1_sequence(), delta, 8, 8) <= 1e-15
    Ei = np.diag([1j, 1, 1])
    assert_close(et.e_analysis(Ei, np.eye(3), [1, 0, 0]), [-1j, 0, 0], 0)
    assert et.verify_analysis_factorization(Ei, np.eye(3), [1, 0, 0]) == 0


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 10), st.integers(1, 10))
def test_factorizations_hold_for_random_data(seed, d, N):
    rng = np.random.default_rng(seed)
    E, T = random_matrix(rng, N), crandn(rng, d, N)
    assert et.verify_synthesis_factorization(E, T, crandn(rng, N)) <= 1e-9
    assert et.verify_analysis_factorization(E, T, crandn(rng, d)) <= 1e-9


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 8), st.integers(1, 8))
def test_linearity(seed, d, N):
    rng = np.random.default_rng(seed)
    a, b = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
    r = et.linearity_residual(crandn(rng, N, N), crandn(rng, d, N), crandn(rng, d, N), a, b)
    assert r <= 1e-12 * max(1.0, abs(a) + abs(b)) * 10


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 6), st.integers(1, 8))
def test_e_frame_operator_is_psd_hermitian(seed, d, N):
    rng = np.random.default_rng(seed)
    S = et.e_frame_operator(crandn(rng, N, N), crandn(rng, d, N))
    assert_close(S, S.conj().T, 0)
    w = np.linalg.eigvalsh(S)
    assert w[0] >= -1e-12 * max(1, w[-1])


def test_scaled_sequence_bounds():
    rng = np.random.default_rng(2)
    T = crandn(rng, 4, 6)
    E = np.diag(random_diagonal(rng, 6))
    base = et.e_frame_bounds(E, T)
    r = et.scaled_sequence_bounds(E, T, 2.0)
    assert r.within and (r.bounds.lower, r.bounds.upper) == pytest.approx((4 * base.lower, 4 * base.upper))
    r1 = et.scaled_sequence_bounds(E, T, 1.0)
    assert (r1.bounds.lower, r1.bounds.upper) == pytest.approx((base.lower, base.upper))
    ex = et.scaled_sequence_bounds(example1_matrix(), example1_sequence(), example1_symbol(2.0), 8, 8)
    assert ex.within
    with pytest.raises(PreconditionError):
        et.scaled_sequence_bounds(E, T, np.array([1, 1, 0, 1, 1, 1.0]))


def test_counterexample_search_returns_violations_only():
    rng = np.random.default_rng(11)
    E = np.eye(5) + random_matrix(rng, 5) * 5
    found = et.scaling_counterexample_search(E, crandn(rng, 5, 5), rng, trials=40)
    assert all(not r.within for _, r in found)
    diag = et.scaling_counterexample_search(np.diag(random_diagonal(rng, 5)), crandn(rng, 5, 5), rng, trials=40)
    assert diag == []


def test_general_E_breaks_scaled_bounds():
    # Base E-transform is an ONB (bounds 1, 1) but m = (1, 2) pushes the
    # upper bound past sup|m|^2 = 4 and the lower below inf|m|^2 = 1.
    E = np.array([[-1.0, -1.0], [1.0, 2.0]])
    T = np.array([[-1.0, 1.0], [2.0, -1.0]])
    r = et.scaled_sequence_bounds(E, T, np.array([1.0, 2.0]))
    assert np.isclose(r.base.lower, 1.0) and np.isclose(r.base.upper, 1.0)
    # Scaled frame operator has eigenvalues 7 -+ 3 sqrt(5).
    assert np.isclose(r.bounds.lower, 7 - 3 * np.sqrt(5)) and np.isclose(r.bounds.upper, 7 + 3 * np.sqrt(5))
    assert not r.within


def test_counterexample_search_finds_violations_for_dense_E():
    rng = np.random.default_rng(3)
    found = et.scaling_counterexample_search(rng.standard_normal((2, 2)), rng.standard_normal((2, 2)), rng, trials=200)
    assert found


def test_multiplied_bessel_bound():
    rng = np.random.default_rng(4)
    r = et.multiplied_bessel_bound(random_matrix(rng, 7), crandn(rng, 3, 7), crandn(rng, 7))
    assert r.within and r.upper <= r.bound + 1e-12


def test_absolute_convergence_examples():
    rng = np.random.default_rng(8)
    r = et.absolute_convergence_bound(np.eye(5), crandn(rng, 3, 5), np.zeros(5))
    assert r.partial == 0 and r.within
    N = 100
    delta = np.zeros(N)
    delta[0] = 1
    r = et.absolute_convergence_bound(DiagonalSpec(InversePower(2)), ScaledBasis(Constant(1)), delta, N, N)
    assert r.partial == pytest.approx(1)
    n = np.arange(1.0, N + 1)
    # ||psi||-sum over the N retained ONB vectors contributes sqrt(N).
    assert r.bound == pytest.approx(np.sqrt(N) * np.sqrt(np.sum(n**-4.0)))
    assert r.within
    for i in range(50):
        g = np.random.default_rng([0, i])
        assert et.absolute_convergence_bound(random_matrix(g, 9), crandn(g, 4, 9), crandn(g, 9)).within


def test_riesz_etransform():
    assert et.riesz_etransform_check(np.eye(5), np.eye(5)) == 0
    swap = np.eye(4)[[1, 0, 2, 3]]
    assert et.riesz_etransform_check(swap, example1_matrix(), 4) <= 1e-10
    with pytest.raises(SingularMatrixError):
        et.riesz_etransform_check(np.eye(3), np.ones((3, 3)))
    with pytest.raises(SingularMatrixError):
        et.riesz_etransform_check(np.ones((3, 3)), np.eye(3))
