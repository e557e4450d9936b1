"""Phase-space operator bases and coefficient maps.

Four families of ``N x N`` operators are built here:

* ``S(eta, xi) = N**-0.5 * omega**(eta xi / 2) U**eta V**xi``, the symmetrized
  Schwinger basis, orthonormal under ``Tr[A^dagger B]``;
* ``G(mu, nu)``, the discrete Fourier transform of ``S``;
* ``D(eta, xi)``, displacement operators with the ``2**-1 mod N`` phase
  (odd ``N``);
* ``Delta(mu, nu) = D P D^dagger``, displaced parity (odd ``N``).

Label conventions
-----------------
``S`` accepts any integer labels and evaluates them as written, with
``omega**(1/2) = exp(i pi / N)``.  Because of the half-integer phase, ``S`` is
only periodic in its labels up to a sign,
``S(eta + a N, xi + b N) = (-1)**(N a b + eta b + xi a) S(eta, xi)``, and
:func:`phi` is the integer that tracks this sign.

The Fourier sum defining ``G`` therefore depends on which representative of
each label class enters it.  Two choices are provided:

``"balanced"`` (default)
    Representatives closed under negation: ``[-l, l]`` for odd ``N``
    (``l = (N - 1) / 2``) and ``(-N/2, N/2]`` for even ``N`` with the label
    ``N/2`` flipped to ``-N/2`` when its partner is negative.  The resulting
    ``G`` is Hermitian, unit-trace and orthogonal, ``Tr[G G'] = N delta``,
    so Wigner functions are real and square-summable to the purity.
``"canonical"``
    Representatives in ``[0, N - 1]``.  For ``N >= 3`` this ``G`` is not
    Hermitian; it is kept for comparison.

Both are sums over the canonical grid with a fixed sign per label,
``G(mu, nu) = N**-0.5 sum sigma(eta, xi) omega**-(mu eta + nu xi) S(eta, xi)``,
with ``sigma = (-1)**phi(representative)``; see :func:`label_signs`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np
import numpy.typing as npt

from .errors import UnsupportedDimensionError
from .linalg import ComplexMatrix, as_matrix
from .schwinger import SchwingerPair, make_fourier_parity, make_schwinger

Reference = Literal["balanced", "canonical"]
REFERENCES: tuple[str, ...] = ("balanced", "canonical")


# ---------------------------------------------------------------------------
# labels


def canonical_label(x: int, n: int) -> int:
    """Representative of ``x`` in ``[0, N - 1]``."""
    return int(x) % n


def symmetric_label(x: int, n: int) -> int:
    """Representative of ``x`` in ``[-l, l]``, ``l = (N - 1) // 2`` (odd ``N``)."""
    if n % 2 == 0:
        raise UnsupportedDimensionError(f"symmetric window needs odd N, got {n}")
    ell = (n - 1) // 2
    return (int(x) + ell) % n - ell


def symmetric_labels(n: int) -> np.ndarray:
    """Labels ``-l .. l`` in increasing order (odd ``N``)."""
    if n % 2 == 0:
        raise UnsupportedDimensionError(f"symmetric window needs odd N, got {n}")
    ell = (n - 1) // 2
    return np.arange(-ell, ell + 1)


def phi(eta: int, xi: int, n: int) -> int:
    """Integer phase ``N I_eta I_xi - eta I_xi - xi I_eta`` with ``I_x = floor(x / N)``.

    Examples
    --------
    >>> phi(3, 1, 3), phi(3, 3, 3), phi(2, 1, 3)
    (-1, -3, 0)
    """
    i_eta, i_xi = int(eta) // n, int(xi) // n
    return n * i_eta * i_xi - int(eta) * i_xi - int(xi) * i_eta


def _balanced_rep(eta: int, xi: int, n: int) -> tuple[int, int]:
    if n % 2:
        return symmetric_label(eta, n), symmetric_label(xi, n)
    half = n // 2

    def cut(x: int) -> int:
        r = x % n
        return r - n if r > half else r

    a, b = cut(eta), cut(xi)
    if a == half and b < 0:
        a = -half
    if b == half and a < 0:
        b = -half
    return a, b


@lru_cache(maxsize=None)
def _reference_table(n: int, reference: str) -> np.ndarray:
    if reference not in REFERENCES:
        raise ValueError(f"unknown reference window {reference!r}")
    out = np.empty((n, n, 2), dtype=np.int64)
    for e in range(n):
        for x in range(n):
            out[e, x] = _balanced_rep(e, x, n) if reference == "balanced" else (e, x)
    out.setflags(write=False)
    return out


def reference_labels(n: int, reference: Reference = "balanced") -> np.ndarray:
    """Representative labels entering the ``G`` sum.

    Returns
    -------
    numpy.ndarray
        Integer array of shape ``(N, N, 2)``; entry ``[eta, xi]`` is the
        representative of the canonical class ``(eta, xi)``.
    """
    return _reference_table(n, reference)


@lru_cache(maxsize=None)
def _label_signs(n: int, reference: str) -> np.ndarray:
    reps = _reference_table(n, reference)
    s = np.empty((n, n))
    for e in range(n):
        for x in range(n):
            s[e, x] = -1.0 if phi(*reps[e, x], n) % 2 else 1.0
    s.setflags(write=False)
    return s


def label_signs(n: int, reference: Reference = "balanced") -> np.ndarray:
    """Signs ``sigma[eta, xi]`` with ``S(rep) = sigma * S(eta, xi)``.

    ``rep`` is the representative from :func:`reference_labels`; all signs
    are ``+1`` for the canonical window and for ``N = 2``.
    """
    return _label_signs(n, reference)


def reference_phi(eta: int, xi: int, n: int, reference: Reference = "balanced") -> int:
    """Integer phase of ``(eta, xi)`` relative to the reference window.

    With ``(r, s)`` the representative of the class and ``eta = r + a N``,
    ``xi = s + b N``, returns ``N a b - r b - s a``.  For the canonical
    window this equals :func:`phi` modulo 2.
    """
    r, s = (int(v) for v in reference_labels(n, reference)[int(eta) % n, int(xi) % n])
    a, b = (int(eta) - r) // n, (int(xi) - s) // n
    return n * a * b - r * b - s * a


# ---------------------------------------------------------------------------
# S basis


def _pair(pair_or_n: SchwingerPair | int) -> SchwingerPair:
    return pair_or_n if isinstance(pair_or_n, SchwingerPair) else make_schwinger(pair_or_n)


def s_basis(pair: SchwingerPair | int, eta: int, xi: int) -> ComplexMatrix:
    """``S(eta, xi) = N**-0.5 exp(i pi eta xi / N) U**eta V**xi`` for raw labels.

    Negative labels give inverse powers, so ``S(eta, xi)^dagger == S(-eta, -xi)``.
    """
    p = _pair(pair)
    eta, xi = int(eta), int(xi)
    phase = np.exp(1j * np.pi * eta * xi / p.dim)
    return phase * (p.u_pow(eta) @ p.v_pow(xi)) / np.sqrt(p.dim)


@lru_cache(maxsize=None)
def _s_all(n: int) -> np.ndarray:
    out = np.empty((n, n, n, n), dtype=np.complex128)
    for e in range(n):
        for x in range(n):
            out[e, x] = s_basis(n, e, x)
    out.setflags(write=False)
    return out


def s_basis_all(n: int) -> np.ndarray:
    """All canonical-label ``S`` operators, shape ``(N, N, N, N)`` indexed ``[eta, xi]``."""
    return _s_all(n)


def displacement(pair: SchwingerPair | int, alpha: int, beta: int) -> ComplexMatrix:
    """Unitary ``sqrt(N) S(alpha, -beta)``, built without the ``sqrt(N)`` round trip."""
    p = _pair(pair)
    alpha, beta = int(alpha), int(beta)
    phase = np.exp(-1j * np.pi * alpha * beta / p.dim)
    return phase * (p.u_pow(alpha) @ p.v_pow(-beta))


# ---------------------------------------------------------------------------
# G basis


def _fourier_kernel(n: int) -> np.ndarray:
    """``K[mu, nu, eta, xi] = omega**(mu eta + nu xi)``."""
    k = np.arange(n)
    e = np.exp(2j * np.pi * np.outer(k, k) / n)
    return e[:, None, :, None] * e[None, :, None, :]


@lru_cache(maxsize=None)
def _g_all(n: int, reference: str) -> np.ndarray:
    sig = _label_signs(n, reference)
    ker = _fourier_kernel(n).conj() * sig[None, None]
    out = np.einsum("mnex,exij->mnij", ker, _s_all(n)) / np.sqrt(n)
    out.setflags(write=False)
    return out


def g_basis_all(n: int, reference: Reference = "balanced") -> np.ndarray:
    """All ``G(mu, nu)``, shape ``(N, N, N, N)`` indexed ``[mu, nu]``."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    return _g_all(n, reference)


def g_basis(
    pair: SchwingerPair | int, mu: int, nu: int, reference: Reference = "balanced"
) -> ComplexMatrix:
    """Phase-point operator ``G(mu, nu)``; labels are taken mod ``N``."""
    p = _pair(pair)
    return np.array(g_basis_all(p.dim, reference)[int(mu) % p.dim, int(nu) % p.dim])


def g_basis_window(
    pair: SchwingerPair | int,
    mu: int,
    nu: int,
    eta_start: int,
    xi_start: int,
    reference: Reference = "balanced",
) -> ComplexMatrix:
    """``G(mu, nu)`` summed over the shifted label block ``[eta_start, eta_start + N)``
    x ``[xi_start, xi_start + N)``.

    Each term carries the compensating factor ``omega**(N Phi / 2) = (-1)**Phi``
    with ``Phi`` from :func:`reference_phi`, so the result is independent of the
    block and equals :func:`g_basis` for the same reference window.
    """
    p = _pair(pair)
    n = p.dim
    acc = np.zeros((n, n), dtype=np.complex128)
    for eta in range(eta_start, eta_start + n):
        for xi in range(xi_start, xi_start + n):
            comp = -1.0 if reference_phi(eta, xi, n, reference) % 2 else 1.0
            acc += comp * np.exp(-2j * np.pi * (mu * eta + nu * xi) / n) * s_basis(p, eta, xi)
    return acc / np.sqrt(n)


# ---------------------------------------------------------------------------
# coefficients


@dataclass(frozen=True)
class OperatorCoefficients:
    """Expansion coefficients of an operator in the ``S`` or ``G`` basis.

    ``values[a, b]`` is indexed by the basis labels ``(eta, xi)`` or
    ``(mu, nu)`` in the canonical window.
    """

    dim: int
    basis_tag: str
    values: np.ndarray
    reference: str = "balanced"

    def at(self, a: int, b: int) -> complex:
        """Coefficient at raw labels.

        For the ``S`` basis this is ``Tr[S(a, b)^dagger O]`` with the labels
        evaluated as written, i.e. ``(-1)**phi(a, b)`` times the stored value.
        ``G`` coefficients are periodic.
        """
        v = complex(self.values[int(a) % self.dim, int(b) % self.dim])
        if self.basis_tag == "S" and phi(a, b, self.dim) % 2:
            return -v
        return v


def _basis(tag: str, n: int, reference: str) -> np.ndarray:
    if tag == "S":
        return s_basis_all(n)
    if tag == "G":
        return g_basis_all(n, reference)
    raise ValueError(f"unknown basis tag {tag!r}")


def decompose(
    o: npt.ArrayLike, basis_tag: str = "G", reference: Reference = "balanced"
) -> OperatorCoefficients:
    """Coefficients ``Tr[B^dagger O]`` for every basis element ``B``."""
    m = as_matrix(o)
    n = m.shape[0]
    if n < 2:
        raise ValueError("dimension must be >= 2")
    b = _basis(basis_tag, n, reference)
    vals = np.einsum("abij,ij->ab", b.conj(), m)
    return OperatorCoefficients(n, basis_tag, vals, reference)


def reconstruct(c: OperatorCoefficients) -> ComplexMatrix:
    """Invert :func:`decompose`: ``sum c S`` or ``(1/N) sum c G``."""
    b = _basis(c.basis_tag, c.dim, c.reference)
    out = np.einsum("ab,abij->ij", np.asarray(c.values), b)
    return out / c.dim if c.basis_tag == "G" else out


def coeff_fourier_link(c_s: OperatorCoefficients, reference: Reference | None = None) -> OperatorCoefficients:
    """Map ``S`` coefficients to ``G`` coefficients by the discrete Fourier transform.

    ``O(mu, nu) = N**-0.5 sum_(eta, xi) sigma(eta, xi) omega**(mu eta + nu xi) O_S(eta, xi)``
    """
    if c_s.basis_tag != "S":
        raise ValueError("expected S-basis coefficients")
    ref = reference or c_s.reference
    n = c_s.dim
    ker = _fourier_kernel(n) * label_signs(n, ref)[None, None]
    vals = np.einsum("mnex,ex->mn", ker, np.asarray(c_s.values)) / np.sqrt(n)
    return OperatorCoefficients(n, "G", vals, ref)


def coeff_fourier_inverse(c_g: OperatorCoefficients) -> OperatorCoefficients:
    """Inverse of :func:`coeff_fourier_link`."""
    if c_g.basis_tag != "G":
        raise ValueError("expected G-basis coefficients")
    n = c_g.dim
    ker = _fourier_kernel(n).conj() * label_signs(n, c_g.reference)[None, None]
    vals = np.einsum("mnex,mn->ex", ker, np.asarray(c_g.values)) / n**1.5
    return OperatorCoefficients(n, "S", vals, c_g.reference)


# ---------------------------------------------------------------------------
# D and Delta bases (odd N)


def _require_odd(n: int) -> None:
    if n % 2 == 0:
        raise UnsupportedDimensionError(f"D/Delta bases need odd N, got {n}")


def d_basis(pair: SchwingerPair | int, eta: int, xi: int) -> ComplexMatrix:
    """``D(eta, xi) = omega**-{2^-1 eta xi} U**eta V**-xi`` for odd ``N``.

    ``2^-1 = (N + 1) / 2`` is the inverse of 2 mod ``N`` and the exponent is
    reduced mod ``N``.  Labels are meant to lie in ``[-l, l]``; the operator
    is periodic, so other representatives give the same matrix.
    """
    p = _pair(pair)
    n = p.dim
    _require_odd(n)
    inv2 = (n + 1) // 2
    k = (inv2 * int(eta) * int(xi)) % n
    return np.exp(-2j * np.pi * k / n) * (p.u_pow(eta) @ p.v_pow(-int(xi)))


def delta_basis(pair: SchwingerPair | int, mu: int, nu: int) -> ComplexMatrix:
    """Displaced parity ``Delta(mu, nu) = D(mu, nu) P D(mu, nu)^dagger`` (odd ``N``)."""
    p = _pair(pair)
    _require_odd(p.dim)
    d = d_basis(p, mu, nu)
    return d @ make_fourier_parity(p.dim).parity @ d.conj().T


@lru_cache(maxsize=None)
def _delta_all(n: int) -> np.ndarray:
    out = np.empty((n, n, n, n), dtype=np.complex128)
    for m in range(n):
        for v in range(n):
            out[m, v] = delta_basis(n, symmetric_label(m, n), symmetric_label(v, n))
    out.setflags(write=False)
    return out


def delta_basis_all(n: int) -> np.ndarray:
    """``Delta`` operators stored at canonical indices.

    Entry ``[m, v]`` holds ``Delta(mu, nu)`` for the symmetric-window labels
    ``mu = symmetric_label(m)``, ``nu = symmetric_label(v)``.
    """
    _require_odd(n)
    return _delta_all(n)


# ---------------------------------------------------------------------------
# similarity / displacement


def similarity_check(
    pair: SchwingerPair | int,
    anchor: tuple[int, int],
    target: tuple[int, int],
    reference: Reference = "balanced",
) -> float:
    """Largest deviation in two conjugation identities.

    With ``T = sqrt(N) S(alpha, -beta)`` for ``anchor = (alpha, beta)``:

    * ``T S(eta, xi) T^dagger = omega**-(beta eta + alpha xi) S(eta, xi)``
      at ``target = (eta, xi)``;
    * ``G(mu, nu) = T G(0, 0) T^dagger`` with ``(mu, nu) = (beta, alpha)``.
    """
    p = _pair(pair)
    n = p.dim
    alpha, beta = anchor
    eta, xi = target
    t = displacement(p, alpha, beta)
    td = t.conj().T
    s = s_basis(p, eta, xi)
    lhs = t @ s @ td
    rhs = np.exp(-2j * np.pi * (beta * eta + alpha * xi) / n) * s if (beta * eta + alpha * xi) % n else s
    dev1 = float(np.max(np.abs(lhs - rhs)))
    g = g_basis_all(n, reference)
    dev2 = float(np.max(np.abs(g[beta % n, alpha % n] - t @ g[0, 0] @ td)))
    return max(dev1, dev2)
