"""Clock and shift (Schwinger) operators, discrete Fourier and parity operators."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import ComplexMatrix


def _check_dim(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n!r}")
    return int(n)


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class SchwingerPair:
    """Clock ``U`` and shift ``V`` for an ``N``-level system.

    Attributes
    ----------
    dim : int
        Dimension ``N``.
    u : numpy.ndarray
        ``diag(omega**0, ..., omega**(N-1))``.
    v : numpy.ndarray
        Shift with ``V |u_a> = |u_(a-1)>``.
    omega : complex
        ``exp(2 pi i / N)``.
    half_omega : complex
        Principal square root ``exp(i pi / N)``.
    """

    dim: int
    u: ComplexMatrix
    v: ComplexMatrix
    omega: complex
    half_omega: complex

    def u_pow(self, eta: int) -> ComplexMatrix:
        """``U**eta`` for any integer ``eta`` (negative powers are inverses)."""
        return _u_power(self.dim, int(eta) % self.dim)

    def v_pow(self, xi: int) -> ComplexMatrix:
        """``V**xi`` for any integer ``xi``."""
        return _v_power(self.dim, int(xi) % self.dim)

    def omega_pow(self, k: float) -> complex:
        """``omega**k`` evaluated as ``exp(2 pi i k / N)``; ``k`` may be half-integer."""
        return complex(np.exp(2j * np.pi * k / self.dim))

    def v_eigenvectors(self) -> ComplexMatrix:
        """Columns ``|v_b>`` with ``<u_a|v_b> = omega**(a b) / sqrt(N)``."""
        a = np.arange(self.dim)
        return np.exp(2j * np.pi * np.outer(a, a) / self.dim) / np.sqrt(self.dim)


@lru_cache(maxsize=None)
def _u_power(n: int, k: int) -> ComplexMatrix:
    return _frozen(np.diag(np.exp(2j * np.pi * k * np.arange(n) / n)))


@lru_cache(maxsize=None)
def _v_power(n: int, k: int) -> ComplexMatrix:
    m = np.zeros((n, n), dtype=np.complex128)
    c = np.arange(n)
    m[(c - k) % n, c] = 1.0
    return _frozen(m)


@lru_cache(maxsize=None)
def make_schwinger(n: int) -> SchwingerPair:
    """Build the Schwinger pair for dimension ``n >= 2``.

    Examples
    --------
    >>> p = make_schwinger(2)
    >>> p.u.real.tolist(), p.v.real.tolist()
    ([[1.0, 0.0], [0.0, -1.0]], [[0.0, 1.0], [1.0, 0.0]])
    """
    n = _check_dim(n)
    return SchwingerPair(
        dim=n,
        u=_u_power(n, 1 % n),
        v=_v_power(n, 1 % n),
        omega=complex(np.exp(2j * np.pi / n)),
        half_omega=complex(np.exp(1j * np.pi / n)),
    )


@dataclass(frozen=True)
class FourierParity:
    """Discrete Fourier operator and the parity operator ``P = F**2``."""

    fourier: ComplexMatrix
    parity: ComplexMatrix


@lru_cache(maxsize=None)
def make_fourier_parity(n: int) -> FourierParity:
    """Fourier operator ``F[r, c] = omega**(r c) / sqrt(N)`` and its square.

    ``F**2`` is the permutation ``|u_b> -> |u_(-b mod N)>``.
    """
    n = _check_dim(n)
    f = make_schwinger(n).v_eigenvectors()
    # Build the parity permutation exactly instead of squaring F numerically.
    p = np.zeros((n, n), dtype=np.complex128)
    b = np.arange(n)
    p[(-b) % n, b] = 1.0
    return FourierParity(fourier=_frozen(f), parity=_frozen(p))
