"""Discrete Wigner and characteristic functions.

Direct evaluation uses the trace against the phase-point operators of
:mod:`dwigner.bases`.  Bloch-vector evaluation expands the state in the
generators and sums their mapped symbols.  The SU(2), SU(3) and toy-model
closed forms are implemented as written so they can be compared with the
direct path; see the README for where they agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from .bases import (
    OperatorCoefficients,
    Reference,
    coeff_fourier_link,
    decompose,
    delta_basis_all,
    g_basis_all,
    s_basis_all,
)
from .errors import UnsupportedDimensionError
from .linalg import as_matrix, hermitian_eigenvalues
from .schwinger import SchwingerPair
from .sun import (
    DensityMatrix,
    GeneratorIndex,
    GeneratorSet,
    ToyModelParams,
    as_density,
    bloch_vector,
    make_generators,
    toy_matrix,
)

REALITY_TOL = 1e-12
MEAN_TOL = 1e-11
DENOMINATOR_TOL = 1e-9


class ConsistencyError(RuntimeError):
    """Two evaluation paths that must agree did not."""


@dataclass(frozen=True)
class WignerGrid:
    """Real values ``W[mu, nu]``.

    For ``basis_tag == "Delta"`` the row/column index ``k`` stands for the
    symmetric-window label ``symmetric_label(k, N)``.
    """

    dim: int
    basis_tag: str
    values: np.ndarray = field(repr=False)

    def normalization(self) -> float:
        """``(1/N) sum W``."""
        return float(np.sum(self.values) / self.dim)

    def square_sum(self) -> float:
        """``(1/N) sum W**2``."""
        return float(np.sum(self.values**2) / self.dim)


@dataclass(frozen=True)
class CharacteristicGrid:
    """Complex values ``chi[eta, xi] = Tr[S(eta, xi)^dagger rho]`` at canonical labels."""

    dim: int
    values: np.ndarray = field(repr=False)

    def at(self, eta: int, xi: int) -> complex:
        """Value at raw labels, including the ``(-1)**phi`` sign of ``S``."""
        return OperatorCoefficients(self.dim, "S", self.values).at(eta, xi)


def _real(values: np.ndarray, what: str) -> np.ndarray:
    resid = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if resid > REALITY_TOL:
        raise ValueError(f"{what} has imaginary residue {resid:.3e}")
    return np.ascontiguousarray(values.real)


# ---------------------------------------------------------------------------
# direct evaluation


def wigner_complex(
    rho: npt.ArrayLike | DensityMatrix, basis_tag: str = "G", reference: Reference = "balanced"
) -> np.ndarray:
    """``Tr[K(mu, nu)^dagger rho]`` without the reality check."""
    m = rho.m if isinstance(rho, DensityMatrix) else as_matrix(rho)
    n = m.shape[0]
    if basis_tag == "G":
        k = g_basis_all(n, reference)
    elif basis_tag == "Delta":
        k = delta_basis_all(n)
    else:
        raise ValueError(f"unknown basis tag {basis_tag!r}")
    return np.einsum("abij,ij->ab", k.conj(), m)


def wigner_direct(
    rho: npt.ArrayLike | DensityMatrix, basis_tag: str = "G", reference: Reference = "balanced"
) -> WignerGrid:
    """Wigner grid by direct trace in the ``G`` or ``Delta`` basis.

    Raises
    ------
    UnsupportedDimensionError
        ``Delta`` with even ``N``.
    ValueError
        If the traces have an imaginary part above ``1e-12``.
    """
    r = as_density(rho)
    vals = _real(wigner_complex(r, basis_tag, reference), "Wigner function")
    return WignerGrid(r.dim, basis_tag, vals)


def compare_bases(rho: npt.ArrayLike | DensityMatrix) -> float:
    """Largest ``|W_G - W_Delta|`` over the grid (odd ``N``).

    Points are matched by label class mod ``N``.  No relation between the
    two functions is implied; this only reports how far apart they are.
    """
    return float(np.max(np.abs(wigner_direct(rho, "G").values - wigner_direct(rho, "Delta").values)))


# ---------------------------------------------------------------------------
# mapped generators


@dataclass(frozen=True)
class MappedGenerators:
    """Generator symbols ``(g_i)(mu, nu)`` and dual symbols ``(g_i)(eta, xi)``.

    ``phase[i]`` is the real ``N x N`` map of generator ``i`` (0-based) and
    ``dual[i]`` its complex ``S``-basis coefficients.
    """

    dim: int
    reference: str
    phase: np.ndarray = field(repr=False)
    dual: np.ndarray = field(repr=False)


@lru_cache(maxsize=None)
def _mapped(n: int, order: str, reference: str) -> MappedGenerators:
    gens = make_generators(n, order)
    g = np.asarray(gens.matrices)
    phase = _real(np.einsum("abij,kij->kab", g_basis_all(n, reference).conj(), g), "generator map")
    dual = np.einsum("exij,kij->kex", s_basis_all(n).conj(), g)
    for a in (phase, dual):
        a.setflags(write=False)
    return MappedGenerators(n, reference, phase, dual)


def mapped_generators(
    gens: GeneratorSet, pair: SchwingerPair | None = None, reference: Reference = "balanced"
) -> MappedGenerators:
    """Direct-trace maps ``Tr[G(mu, nu)^dagger g_i]`` and ``Tr[S(eta, xi)^dagger g_i]``.

    Cached per ``(N, ordering, reference)``.
    """
    if pair is not None and pair.dim != gens.dim:
        raise ValueError("dimension mismatch")
    return _mapped(gens.dim, gens.order_tag, reference)


def mapped_generators_dual(gens: GeneratorSet, pair: SchwingerPair | None = None) -> np.ndarray:
    """Dual maps ``(g_i)(eta, xi) = Tr[S(eta, xi)^dagger g_i]``, shape ``(N^2-1, N, N)``."""
    return mapped_generators(gens, pair).dual


def dual_to_phase(dual: np.ndarray, reference: Reference = "balanced") -> np.ndarray:
    """Fourier transform of dual maps to phase-space maps (one per generator)."""
    dual = np.asarray(dual)
    n = dual.shape[-1]
    return np.array(
        [coeff_fourier_link(OperatorCoefficients(n, "S", d, reference)).values for d in dual]
    )


def _dirichlet(mu: int, shift: float, n: int) -> float:
    """``sin((mu - shift) pi) / sin((mu - shift) pi / N)``."""
    den = np.sin((mu - shift) * np.pi / n)
    if abs(den) <= DENOMINATOR_TOL:
        raise ZeroDivisionError(f"vanishing denominator at mu={mu}, shift={shift}")
    return float(np.sin((mu - shift) * np.pi) / den)


def closed_form_map(idx: GeneratorIndex, n: int) -> np.ndarray:
    """Closed-form generator map on the ``N x N`` grid.

    ``U_(a,b)`` and ``V_(a,b)``: ``2 delta(mu, (a+b)/2) cos|sin(2 pi nu (b-a)/N)``
    when ``a + b`` is even, otherwise
    ``(2/N) sin((mu-s) pi) / sin((mu-s) pi/N) cos|sin(2 pi nu (b-a)/N)`` with
    ``s = (a + b)/2``.  ``W_g``: ``c_g [sum_(s<=g) delta(mu, s) - (g+1) delta(mu, g+1)]``.
    """
    mu = np.arange(n)[:, None]
    nu = np.arange(n)[None, :]
    if idx.kind == "W":
        g = idx.gamma
        rows = np.zeros(n)
        rows[: g + 1] = 1.0
        rows[(g + 1) % n] -= g + 1
        return np.sqrt(2.0 / ((g + 1) * (g + 2))) * np.repeat(rows[:, None], n, axis=1)
    a, b = idx.alpha, idx.beta
    trig = np.cos if idx.kind == "U" else np.sin
    ang = trig(2 * np.pi * nu * (b - a) / n)
    if (a + b) % 2 == 0:
        eps = (a + b) // 2
        return 2.0 * (mu % n == eps % n) * ang
    ratio = np.array([_dirichlet(m, (a + b) / 2, n) for m in range(n)])[:, None]
    return (2.0 / n) * ratio * ang


def mapped_generators_closed(gens: GeneratorSet) -> np.ndarray:
    """Closed-form maps for every generator, shape ``(N^2-1, N, N)``."""
    return np.array([closed_form_map(i, gens.dim) for i in gens.indices])


def su3_dual_closed() -> np.ndarray:
    """Closed-form ``N = 3`` dual maps of the eight Gell-Mann matrices, ``[i, eta, xi]``."""
    w = np.exp(2j * np.pi / 3)
    c = np.sqrt(3) / 3
    out = np.zeros((8, 3, 3), dtype=np.complex128)
    for eta in range(3):
        for xi in range(3):
            d0, d1, d2 = (float(xi == k) for k in range(3))
            ph = np.exp(-1j * np.pi * eta * xi / 3)
            we, we2 = w ** (-eta), w ** (-2 * eta)
            out[:, eta, xi] = ph * np.array([
                c * (d1 + we * d2),
                -1j * c * (d1 - we * d2),
                c * (1 - we) * d0,
                c * (d2 + we2 * d1),
                -1j * c * (d2 - we2 * d1),
                c * (we * d1 + we2 * d2),
                -1j * c * (we * d1 - we2 * d2),
                (1 + we - 2 * we2) / 3 * d0,
            ])
    return out


def su3_mapped_closed() -> np.ndarray:
    """Closed-form ``N = 3`` phase-space maps of the eight Gell-Mann matrices, ``[i, mu, nu]``."""
    out = np.zeros((8, 3, 3))
    s3 = np.sqrt(3)
    for mu in range(3):
        d = [float(mu == k) for k in range(3)]
        r1 = _dirichlet(mu, 0.5, 3)
        r3 = _dirichlet(mu, 1.5, 3)
        for nu in range(3):
            c2, s2 = np.cos(2 * np.pi * nu / 3), np.sin(2 * np.pi * nu / 3)
            c4, s4 = np.cos(4 * np.pi * nu / 3), np.sin(4 * np.pi * nu / 3)
            out[:, mu, nu] = [
                2 / 3 * r1 * c2,
                2 / 3 * r1 * s2,
                d[0] - d[1],
                2 * d[1] * c4,
                2 * d[1] * s4,
                2 / 3 * r3 * c2,
                2 / 3 * r3 * s2,
                s3 / 3 * (d[0] + d[1] - 2 * d[2]),
            ]
    return out


# ---------------------------------------------------------------------------
# Bloch-vector evaluation


def wigner_bloch(
    rho: npt.ArrayLike | DensityMatrix,
    gens: GeneratorSet,
    mapped: MappedGenerators | np.ndarray | None = None,
) -> WignerGrid:
    """``W = 1/N + (1/2) sum <g_i> (g_i)(mu, nu)``.

    ``mapped`` may be a :class:`MappedGenerators` or a raw ``(N^2-1, N, N)``
    array of maps (e.g. a closed form); defaults to the direct maps.
    """
    r = as_density(rho)
    if r.dim != gens.dim:
        raise ValueError("dimension mismatch")
    maps = mapped_generators(gens) if mapped is None else mapped
    arr = maps.phase if isinstance(maps, MappedGenerators) else np.asarray(maps)
    if arr.shape != (len(gens), gens.dim, gens.dim):
        raise ValueError(f"maps have shape {arr.shape}")
    g = bloch_vector(r, gens)
    return WignerGrid(r.dim, "G", 1.0 / r.dim + 0.5 * np.einsum("k,kab->ab", g, arr))


def characteristic(rho: npt.ArrayLike | DensityMatrix, pair: SchwingerPair | None = None) -> CharacteristicGrid:
    """``chi(eta, xi) = Tr[S(eta, xi)^dagger rho]`` by direct trace."""
    r = as_density(rho)
    if pair is not None and pair.dim != r.dim:
        raise ValueError("dimension mismatch")
    return CharacteristicGrid(r.dim, decompose(r.m, "S").values)


def characteristic_bloch(rho: npt.ArrayLike | DensityMatrix, gens: GeneratorSet) -> CharacteristicGrid:
    """``chi = N**-0.5 delta(eta,0) delta(xi,0) + (1/2) sum <g_i> (g_i)(eta, xi)``."""
    r = as_density(rho)
    n = r.dim
    g = bloch_vector(r, gens)
    vals = 0.5 * np.einsum("k,kex->ex", g, mapped_generators(gens).dual)
    vals[0, 0] += 1.0 / np.sqrt(n)
    return CharacteristicGrid(n, vals)


def wigner_from_characteristic(chi: CharacteristicGrid, reference: Reference = "balanced") -> WignerGrid:
    """Fourier map from the characteristic grid to the Wigner grid."""
    vals = coeff_fourier_link(OperatorCoefficients(chi.dim, "S", chi.values, reference)).values
    return WignerGrid(chi.dim, "G", _real(vals, "Wigner function"))


def mean_from_grids(o: npt.ArrayLike, rho: npt.ArrayLike | DensityMatrix) -> complex:
    """``<O> = Tr[O rho]`` checked against both phase-space overlap formulas.

    ``(1/N) sum O(mu, nu) W(mu, nu)`` and ``sum O_S(eta, xi) chi(-eta, -xi)``
    must agree with the trace within ``1e-11``.

    Raises
    ------
    ConsistencyError
        If either overlap formula disagrees with the trace.
    """
    r = as_density(rho)
    m = as_matrix(o)
    n = r.dim
    if m.shape[0] != n:
        raise ValueError("dimension mismatch")
    direct = complex(np.trace(m @ r.m))
    w = wigner_direct(r).values
    via_w = complex(np.sum(decompose(m, "G").values * w) / n)
    chi = characteristic(r)
    o_s = decompose(m, "S")
    via_chi = sum(o_s.at(e, x) * chi.at(-e, -x) for e in range(n) for x in range(n))
    for name, val in (("Wigner", via_w), ("characteristic", via_chi)):
        if abs(val - direct) > MEAN_TOL:
            raise ConsistencyError(f"{name} overlap {val} differs from trace {direct}")
    return direct


def overlap_dual(a: OperatorCoefficients, b: OperatorCoefficients) -> complex:
    """``sum_(eta, xi) A(eta, xi) B(-eta, -xi)`` over the canonical label grid."""
    n = a.dim
    return complex(sum(a.at(e, x) * b.at(-e, -x) for e in range(n) for x in range(n)))


# ---------------------------------------------------------------------------
# closed forms


def _require(rho: DensityMatrix, n: int) -> None:
    if rho.dim != n:
        raise UnsupportedDimensionError(f"defined for N={n} only, got N={rho.dim}")


def su2_wigner_closed(rho: npt.ArrayLike | DensityMatrix) -> WignerGrid:
    """``W = (1/2)[1 + (-1)**nu P_x + (-1)**(mu+nu+1) P_y + (-1)**mu P_z]``."""
    r = as_density(rho)
    _require(r, 2)
    px, py, pz = bloch_vector(r, make_generators(2))
    vals = np.empty((2, 2))
    for mu in range(2):
        for nu in range(2):
            vals[mu, nu] = 0.5 * (1 + (-1) ** nu * px + (-1) ** (mu + nu + 1) * py + (-1) ** mu * pz)
    return WignerGrid(2, "G", vals)


def su3_wigner_closed(rho: npt.ArrayLike | DensityMatrix) -> WignerGrid:
    """Closed-form ``N = 3`` Wigner grid in terms of the matrix entries ``rho_ij``."""
    r = as_density(rho)
    _require(r, 3)
    m = r.m
    r11, r22, r33 = m[0, 0].real, m[1, 1].real, m[2, 2].real
    r12, r13, r23 = m[0, 1], m[0, 2], m[1, 2]
    vals = np.empty((3, 3))
    for mu in range(3):
        d0, d1, d2 = (float(mu == k) for k in range(3))
        a = _dirichlet(mu, 0.5, 3)
        b = _dirichlet(mu, 1.5, 3)
        for nu in range(3):
            c2, s2 = np.cos(2 * np.pi * nu / 3), np.sin(2 * np.pi * nu / 3)
            c4, s4 = np.cos(4 * np.pi * nu / 3), np.sin(4 * np.pi * nu / 3)
            vals[mu, nu] = (
                1 / 3
                + (2 * d0 - d1 - d2) * r11 / 3
                - (d0 - 2 * d1 + d2) * r22 / 3
                - (d0 + d1 - 2 * d2) * r33 / 3
                + 2 * d1 * (c4 * r13.real - s4 * r13.imag)
                + 2 / 3 * a * (c2 * r12.real - s2 * r12.imag)
                + 2 / 3 * b * (c2 * r23.real - s2 * r23.imag)
            )
    return WignerGrid(3, "G", vals)


def toy_grid(p1: float, p2: float, p3: float) -> np.ndarray:
    """Closed-form ``3 x 3`` Wigner grid of the equal-population qutrit."""
    vals = np.empty((3, 3))
    for mu in range(3):
        a = _dirichlet(mu, 0.5, 3)
        b = _dirichlet(mu, 1.5, 3)
        for nu in range(3):
            c2 = np.cos(2 * np.pi * nu / 3)
            vals[mu, nu] = (
                1 / 3
                + 2 / 3 * a * c2 * p1
                + 2 * float(mu == 1) * np.cos(4 * np.pi * nu / 3) * p2
                + 2 / 3 * b * c2 * p3
            )
    return vals


@dataclass(frozen=True)
class ToyModelResult:
    """Toy-model matrix, closed-form grid and summary numbers.

    ``positive`` reports whether the matrix passes the eigenvalue check; the
    parameter predicate alone does not guarantee it.
    """

    matrix: np.ndarray = field(repr=False)
    grid: WignerGrid = field(repr=False)
    purity: float = 0.0
    bloch_norm: float = 0.0
    min_eigenvalue: float = 0.0
    positive: bool = True


def toy_model(params: ToyModelParams | tuple[float, float, float]) -> ToyModelResult:
    """Build the equal-population qutrit and its closed-form Wigner grid."""
    p = params if isinstance(params, ToyModelParams) else ToyModelParams(*params)
    m = toy_matrix(p.p1, p.p2, p.p3)
    lam = hermitian_eigenvalues(m)
    gens = make_generators(3)
    g = np.real(np.einsum("kab,ba->k", np.asarray(gens.matrices), m))
    return ToyModelResult(
        matrix=m,
        grid=WignerGrid(3, "G", toy_grid(p.p1, p.p2, p.p3)),
        purity=float(np.real(np.trace(m @ m))),
        bloch_norm=float(np.linalg.norm(g)),
        min_eigenvalue=float(lam[0]),
        positive=bool(lam[0] >= -1e-10),
    )

