# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels.  Same signatures and semantics as ``_kernels_py``."""
import numpy as np

from libc.math cimport sqrt, hypot

ctypedef double complex cplx

BACKEND = "cython"


cdef inline double _abs2(cplx z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline cplx _conj(cplx z) noexcept nogil:
    return z.real - 1j * z.imag


def jacobi_eigh(a, double tol, int max_sweeps):
    cdef cplx[:, ::1] A = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = A.shape[0]
    vecs = np.eye(n, dtype=np.complex128)
    cdef cplx[:, ::1] V = vecs
    cdef Py_ssize_t p, q, i, sweep
    cdef double off, mag, theta, t, c, s
    cdef cplx apq, w, sw, cw, swc, cwc, x, y
    cdef int converged = -1

    with nogil:
        for sweep in range(max_sweeps + 1):
            off = 0.0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    off += _abs2(A[p, q])
            if sqrt(off) <= tol:
                converged = sweep
                break
            if sweep == max_sweeps:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = A[p, q]
                    mag = hypot(apq.real, apq.imag)
                    if mag == 0.0:
                        continue
                    w = _conj(apq) / mag
                    theta = (A[q, q].real - A[p, p].real) / (2.0 * mag)
                    if theta >= 0.0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    sw = s * w
                    cw = c * w
                    swc = _conj(sw)
                    cwc = _conj(cw)
                    for i in range(n):
                        x = A[i, p]
                        y = A[i, q]
                        A[i, p] = c * x - sw * y
                        A[i, q] = s * x + cw * y
                        x = V[i, p]
                        y = V[i, q]
                        V[i, p] = c * x - sw * y
                        V[i, q] = s * x + cw * y
                    for i in range(n):
                        x = A[p, i]
                        y = A[q, i]
                        A[p, i] = c * x - swc * y
                        A[q, i] = s * x + cwc * y
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    A[p, p] = A[p, p].real
                    A[q, q] = A[q, q].real

    diag = np.empty(n, dtype=np.float64)
    for i in range(n):
        diag[i] = A[i, i].real
    return diag, vecs, converged


def gauss_jordan_inverse(a, double pivot_tol):
    cdef cplx[:, ::1] A = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = A.shape[0]
    inv = np.eye(n, dtype=np.complex128)
    cdef cplx[:, ::1] X = inv
    cdef Py_ssize_t col, r, j, piv
    cdef double best, cur
    cdef cplx tmp, inv_p, f
    cdef Py_ssize_t bad = -1

    with nogil:
        for col in range(n):
            piv = col
            best = _abs2(A[col, col])
            for r in range(col + 1, n):
                cur = _abs2(A[r, col])
                if cur > best:
                    best = cur
                    piv = r
            if sqrt(best) < pivot_tol:
                bad = col
                break
            if piv != col:
                for j in range(n):
                    tmp = A[col, j]
                    A[col, j] = A[piv, j]
                    A[piv, j] = tmp
                    tmp = X[col, j]
                    X[col, j] = X[piv, j]
                    X[piv, j] = tmp
            inv_p = 1.0 / A[col, col]
            for j in range(n):
                A[col, j] = A[col, j] * inv_p
                X[col, j] = X[col, j] * inv_p
            for r in range(n):
                if r == col:
                    continue
                f = A[r, col]
                if f.real == 0.0 and f.imag == 0.0:
                    continue
                for j in range(n):
                    A[r, j] = A[r, j] - f * A[col, j]
                    X[r, j] = X[r, j] - f * X[col, j]
    return inv, bad


def etransform_direct(E, Psi):
    cdef cplx[:, ::1] Em = np.ascontiguousarray(E, dtype=np.complex128)
    cdef cplx[:, ::1] P = np.ascontiguousarray(Psi, dtype=np.complex128)
    cdef Py_ssize_t N = Em.shape[0], K = Em.shape[1], d = P.shape[0]
    out = np.zeros((d, N), dtype=np.complex128)
    cdef cplx[:, ::1] O = out
    cdef Py_ssize_t n, k, i
    cdef cplx e
    with nogil:
        for n in range(N):
            for k in range(K):
                e = Em[n, k]
                if e.real == 0.0 and e.imag == 0.0:
                    continue
                for i in range(d):
                    O[i, n] = O[i, n] + e * P[i, k]
    return out


def multiplier_direct(m, E1, Phi, E2, Psi, f):
    cdef cplx[::1] mv = np.ascontiguousarray(m, dtype=np.complex128)
    cdef cplx[:, ::1] A1 = np.ascontiguousarray(E1, dtype=np.complex128)
    cdef cplx[:, ::1] A2 = np.ascontiguousarray(E2, dtype=np.complex128)
    cdef cplx[:, ::1] F = np.ascontiguousarray(Phi, dtype=np.complex128)
    cdef cplx[:, ::1] P = np.ascontiguousarray(Psi, dtype=np.complex128)
    cdef cplx[::1] fv = np.ascontiguousarray(f, dtype=np.complex128)
    cdef Py_ssize_t N = mv.shape[0], d1 = F.shape[0], d2 = P.shape[0]
    out = np.zeros(d2, dtype=np.complex128)
    cdef cplx[::1] O = out
    u_arr = np.zeros(d1, dtype=np.complex128)
    v_arr = np.zeros(d2, dtype=np.complex128)
    cdef cplx[::1] u = u_arr
    cdef cplx[::1] v = v_arr
    cdef Py_ssize_t n, k, i
    cdef cplx e, ip, coef
    with nogil:
        for n in range(N):
            for i in range(d1):
                u[i] = 0.0
            for i in range(d2):
                v[i] = 0.0
            for k in range(N):
                e = A1[n, k]
                if e.real != 0.0 or e.imag != 0.0:
                    for i in range(d1):
                        u[i] = u[i] + e * F[i, k]
                e = A2[n, k]
                if e.real != 0.0 or e.imag != 0.0:
                    for i in range(d2):
                        v[i] = v[i] + e * P[i, k]
            ip = 0.0
            for i in range(d1):
                ip = ip + fv[i] * _conj(u[i])
            coef = mv[n] * ip
            for i in range(d2):
                O[i] = O[i] + coef * v[i]
    return out
