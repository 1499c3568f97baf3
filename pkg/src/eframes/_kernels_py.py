"""Pure-Python reference kernels.

These mirror ``_kernels.pyx`` operation for operation.  Row and column
updates are vectorised with numpy, but every loop that the compiled module
runs in C runs here in the interpreter.
"""
import math

import numpy as np

BACKEND = "python"


def jacobi_eigh(a, tol, max_sweeps):
    """Cyclic complex Jacobi diagonalisation of a Hermitian matrix.

    Returns ``(diag, vectors, sweeps)``; ``sweeps == -1`` signals that the
    off-diagonal mass did not fall below ``tol`` within ``max_sweeps``.
    """
    A = np.array(a, dtype=np.complex128, copy=True)
    n = A.shape[0]
    V = np.eye(n, dtype=np.complex128)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            row = A[p, p + 1:]
            off += float(np.dot(row.real, row.real) + np.dot(row.imag, row.imag))
        if math.sqrt(off) <= tol:
            return A.diagonal().real.copy(), V, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q].item()
                mag = abs(apq)
                if mag == 0.0:
                    continue
                w = apq.conjugate() / mag
                theta = (A[q, q].real - A[p, p].real) / (2.0 * mag)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                sw = s * w
                cw = c * w
                # Columns p, q of A and V get [[c, s], [-sw, cw]]; rows p, q of A its adjoint.
                R = np.array([[c, s], [-sw, cw]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ R
                V[:, idx] = V[:, idx] @ R
                A[idx, :] = R.conj().T @ A[idx, :]
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
    return A.diagonal().real.copy(), V, -1


def gauss_jordan_inverse(a, pivot_tol):
    """Invert by Gauss-Jordan elimination with partial pivoting.

    Returns ``(inverse, bad_column)``; ``bad_column`` is -1 on success and
    otherwise the column whose best pivot fell below ``pivot_tol``.
    """
    A = np.array(a, dtype=np.complex128, copy=True)
    n = A.shape[0]
    X = np.eye(n, dtype=np.complex128)
    for col in range(n):
        piv = col + int(np.argmax(np.abs(A[col:, col])))
        if abs(A[piv, col]) < pivot_tol:
            return X, col
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
            X[[col, piv]] = X[[piv, col]]
        inv_p = 1.0 / A[col, col]
        A[col] *= inv_p
        X[col] *= inv_p
        for r in range(n):
            if r != col:
                f = A[r, col]
                if f != 0:
                    A[r] -= f * A[col]
                    X[r] -= f * X[col]
    return X, -1


def etransform_direct(E, Psi):
    """Termwise E-transform: column n of the result is sum_k E[n, k] Psi[:, k]."""
    N = E.shape[0]
    out = np.zeros((Psi.shape[0], N), dtype=np.complex128)
    for n in range(N):
        acc = out[:, n]
        for k in range(E.shape[1]):
            e = E[n, k]
            if e != 0:
                acc += e * Psi[:, k]
    return out


def multiplier_direct(m, E1, Phi, E2, Psi, f):
    """Direct triple sum  sum_n m_n <f, (E1 Phi)_n> (E2 Psi)_n."""
    N = m.shape[0]
    out = np.zeros(Psi.shape[0], dtype=np.complex128)
    for n in range(N):
        u = np.zeros(Phi.shape[0], dtype=np.complex128)
        v = np.zeros(Psi.shape[0], dtype=np.complex128)
        for k in range(N):
            if E1[n, k] != 0:
                u += E1[n, k] * Phi[:, k]
            if E2[n, k] != 0:
                v += E2[n, k] * Psi[:, k]
        ip = np.dot(f, u.conjugate())
        out += m[n] * ip * v
    return out
