"""Dense complex linear algebra helpers.

Every operator in the package is an ``(N, N)`` complex ``numpy`` array
expressed in the eigenbasis of the clock operator.
"""
from __future__ import annotations

import numpy as np
import numpy.typing as npt

ComplexMatrix = npt.NDArray[np.complex128]

#: Absolute tolerance used when a matrix must be Hermitian before an
#: eigen-decomposition.
HERMITIAN_TOL = 1e-10


def as_matrix(a: npt.ArrayLike) -> ComplexMatrix:
    """Return ``a`` as a square, finite ``complex128`` array.

    Raises
    ------
    ValueError
        If ``a`` is not a non-empty square matrix or holds NaN/Inf.
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def _check_same_dim(a: ComplexMatrix, b: ComplexMatrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def matmul(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """Matrix product of two square matrices of equal dimension."""
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a @ b


def dagger(a: npt.ArrayLike) -> ComplexMatrix:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def trace(a: npt.ArrayLike) -> complex:
    """Sum of the diagonal entries."""
    return complex(np.trace(as_matrix(a)))


def commutator(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """``AB - BA``."""
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a @ b - b @ a


def anticommutator(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """``AB + BA``."""
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a @ b + b @ a


def hermiticity_deviation(a: npt.ArrayLike) -> float:
    """Largest entry of ``|A - A^dagger|``."""
    m = as_matrix(a)
    return float(np.max(np.abs(m - m.conj().T)))


def hermitian_eigenvalues(a: npt.ArrayLike, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix in ascending order.

    Parameters
    ----------
    a : array_like
        Square matrix, Hermitian up to ``tol`` in max-entry norm.
    tol : float
        Allowed Hermiticity deviation.

    Returns
    -------
    numpy.ndarray
        Real eigenvalues, ascending.

    Raises
    ------
    ValueError
        If ``a`` is not Hermitian within ``tol``.
    """
    m = as_matrix(a)
    dev = hermiticity_deviation(m)
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
    # LAPACK zheevd is deterministic for a fixed input; symmetrize first so
    # that the tiny anti-Hermitian residue cannot leak in.
    return np.linalg.eigvalsh(0.5 * (m + m.conj().T))


def charpoly_coeffs(rho: npt.ArrayLike) -> np.ndarray:
    """Characteristic-polynomial coefficients ``S_0 .. S_N`` from power traces.

    Uses the recurrence ``S_r = (1/r) sum_{s=1}^r (-1)^(s-1) Tr[rho^s] S_{r-s}``
    with ``S_0 = 1``, i.e. ``S_r`` is the r-th elementary symmetric function
    of the eigenvalues and ``det(rho - x I) = sum_r (-1)^(N-r) S_r x^(N-r)``.

    Returns
    -------
    numpy.ndarray
        Length ``N + 1``. Real when the coefficients are real to rounding
        (always the case for Hermitian input), complex otherwise.
    """
    m = as_matrix(rho)
    n = m.shape[0]
    power_traces = np.empty(n + 1, dtype=np.complex128)
    p = np.eye(n, dtype=np.complex128)
    for s in range(1, n + 1):
        p = p @ m
        power_traces[s] = np.trace(p)
    s_coef = np.zeros(n + 1, dtype=np.complex128)
    s_coef[0] = 1.0
    for r in range(1, n + 1):
        acc = 0j
        for s in range(1, r + 1):
            acc += (-1) ** (s - 1) * power_traces[s] * s_coef[r - s]
        s_coef[r] = acc / r
    return np.real_if_close(s_coef, tol=1e6)


def max_abs(a: npt.ArrayLike) -> float:
    """Largest absolute entry, ``0.0`` for an empty array."""
    arr = np.asarray(a)
    return float(np.max(np.abs(arr))) if arr.size else 0.0
