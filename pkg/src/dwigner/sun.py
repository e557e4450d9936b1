"""SU(N) generators, structure constants, Bloch vectors and density matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import Literal

import numpy as np
import numpy.typing as npt

from .errors import InvalidStateError, UnsupportedDimensionError
from .linalg import ComplexMatrix, as_matrix, hermitian_eigenvalues, hermiticity_deviation
from .schwinger import SchwingerPair, make_schwinger

TRACE_TOL = 1e-12
HERMITIAN_STATE_TOL = 1e-12
POSITIVITY_TOL = -1e-10
REALITY_TOL = 1e-12
TOY_TOL = 1e-12


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class GeneratorIndex:
    """Label of a generator: ``U``/``V`` use ``(alpha, beta)``, ``W`` uses ``gamma``."""

    kind: Literal["U", "V", "W"]
    alpha: int | None = None
    beta: int | None = None
    gamma: int | None = None

    def __post_init__(self) -> None:
        if self.kind in ("U", "V"):
            if self.alpha is None or self.beta is None or self.gamma is not None:
                raise ValueError("U/V generators need alpha and beta only")
            if not 0 <= self.alpha < self.beta:
                raise ValueError("need 0 <= alpha < beta")
        elif self.kind == "W":
            if self.gamma is None or self.alpha is not None or self.beta is not None:
                raise ValueError("W generators need gamma only")
            if self.gamma < 0:
                raise ValueError("need gamma >= 0")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "W":
            return f"W{self.gamma}"
        return f"{self.kind}{self.alpha}{self.beta}"


def generator_indices(n: int) -> list[GeneratorIndex]:
    """Interleaved order: for ``d = 1..N-1``, ``U_(a,d), V_(a,d)`` for ``a < d``, then ``W_(d-1)``."""
    out: list[GeneratorIndex] = []
    for d in range(1, n):
        for a in range(d):
            out.append(GeneratorIndex("U", alpha=a, beta=d))
            out.append(GeneratorIndex("V", alpha=a, beta=d))
        out.append(GeneratorIndex("W", gamma=d - 1))
    return out


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered generators ``g_1 .. g_(N^2-1)``.

    ``matrices[i]`` is the matrix of ``indices[i]``; list position ``i``
    corresponds to 1-based generator number ``i + 1``.
    """

    dim: int
    indices: tuple[GeneratorIndex, ...]
    matrices: np.ndarray = field(repr=False)
    order_tag: str = "gellmann"

    @property
    def items(self) -> list[tuple[GeneratorIndex, ComplexMatrix]]:
        return list(zip(self.indices, self.matrices))

    def __len__(self) -> int:
        return len(self.indices)


def transition_op(n: int, a: int, b: int) -> ComplexMatrix:
    """``|a><b|``."""
    if not (0 <= a < n and 0 <= b < n):
        raise IndexError(f"transition indices ({a}, {b}) out of range for N={n}")
    m = np.zeros((n, n), dtype=np.complex128)
    m[a, b] = 1.0
    return m


def _w_weight(gamma: int) -> float:
    return float(np.sqrt(2.0 / ((gamma + 1) * (gamma + 2))))


def _generator_matrix(n: int, idx: GeneratorIndex) -> ComplexMatrix:
    if idx.kind == "U":
        return transition_op(n, idx.alpha, idx.beta) + transition_op(n, idx.beta, idx.alpha)
    if idx.kind == "V":
        return -1j * (transition_op(n, idx.alpha, idx.beta) - transition_op(n, idx.beta, idx.alpha))
    g = idx.gamma
    m = sum((transition_op(n, s, s) for s in range(g + 1)), np.zeros((n, n), complex))
    return _w_weight(g) * (m - (g + 1) * transition_op(n, g + 1, g + 1))


def _freeze_set(n: int, mats: list[np.ndarray]) -> GeneratorSet:
    arr = np.array(mats, dtype=np.complex128)
    arr.setflags(write=False)
    return GeneratorSet(dim=n, indices=tuple(generator_indices(n)), matrices=arr)


@lru_cache(maxsize=None)
def make_generators(n: int, order: str = "gellmann") -> GeneratorSet:
    """Generalized Gell-Mann generators from transition operators.

    ``N = 2`` gives the Pauli matrices and ``N = 3`` the eight Gell-Mann
    matrices in their usual numbering.
    """
    if order != "gellmann":
        raise ValueError(f"unsupported generator ordering {order!r}")
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    return _freeze_set(n, [_generator_matrix(n, i) for i in generator_indices(n)])


def generators_via_schwinger(pair: SchwingerPair | int) -> GeneratorSet:
    """The same generators assembled from sums of ``U**eta V**xi``.

    ``U_(a,b) = (1/N) sum_eta U**eta (w**(-eta a) V**(b-a) + w**(-eta b) V**(N-(b-a)))``,
    ``V_(a,b)`` with ``-i`` and a relative minus sign, and
    ``W_g = c_g (1/N) sum_eta [sum_(s<=g) w**(-eta s) - (g+1) w**(-eta (g+1))] U**eta``.
    """
    p = pair if isinstance(pair, SchwingerPair) else make_schwinger(pair)
    n = p.dim
    w = p.omega_pow
    mats = []
    for idx in generator_indices(n):
        acc = np.zeros((n, n), dtype=np.complex128)
        if idx.kind in ("U", "V"):
            a, b = idx.alpha, idx.beta
            sgn = 1.0 if idx.kind == "U" else -1.0
            fwd, bwd = p.v_pow(b - a), p.v_pow(n - (b - a))
            for eta in range(n):
                acc += p.u_pow(eta) @ (w(-eta * a) * fwd + sgn * w(-eta * b) * bwd)
            acc /= n
            if idx.kind == "V":
                acc *= -1j
        else:
            g = idx.gamma
            for eta in range(n):
                coef = sum(w(-eta * s) for s in range(g + 1)) - (g + 1) * w(-eta * (g + 1))
                acc += coef * p.u_pow(eta)
            acc *= _w_weight(g) / n
        mats.append(acc)
    return _freeze_set(n, mats)


def _only_dim(expected: int, got: int) -> UnsupportedDimensionError:
    return UnsupportedDimensionError(f"defined for N={expected} only, got N={got}")


def gellmann_table_part1(pair: SchwingerPair | None = None) -> list[ComplexMatrix]:
    """The eight ``N = 3`` generators written as explicit ``U``/``V`` polynomials."""
    p = pair or make_schwinger(3)
    if p.dim != 3:
        raise _only_dim(3, p.dim)
    w, wc = p.omega, np.conj(p.omega)
    U, V = p.u, p.v
    U2, V2 = U @ U, V @ V
    UV, U2V, UV2, U2V2 = U @ V, U2 @ V, U @ V2, U2 @ V2
    return [
        (V + V2 + UV + U2V + wc * UV2 + w * U2V2) / 3,
        -1j / 3 * (V - V2 + UV + U2V - wc * UV2 - w * U2V2),
        ((1 - wc) * U + (1 - w) * U2) / 3,
        (V + V2 + w * UV + wc * U2V + UV2 + U2V2) / 3,
        1j / 3 * (V - V2 + w * UV + wc * U2V - UV2 - U2V2),
        (V + V2 + wc * UV + w * U2V + w * UV2 + wc * U2V2) / 3,
        -1j / 3 * (V - V2 + wc * UV + w * U2V - w * UV2 - wc * U2V2),
        -np.sqrt(3) / 3 * (w * U + wc * U2),
    ]


def schwinger_via_gellmann(n: int = 3) -> dict[str, float]:
    """Check the eight ``N = 3`` expansions of Schwinger monomials in Gell-Mann matrices.

    Returns
    -------
    dict
        Maps each monomial name (``"U"``, ``"V"``, ``"U2"``, ``"V2"``,
        ``"UV"``, ``"U2V"``, ``"UV2"``, ``"U2V2"``) to the max entry
        deviation between the product and its Gell-Mann expansion.
    """
    if n != 3:
        raise _only_dim(3, n)
    p = make_schwinger(3)
    w, wc = p.omega, np.conj(p.omega)
    l1, l2, l3, l4, l5, l6, l7, l8 = make_generators(3).matrices
    U, V = p.u, p.v
    U2, V2 = U @ U, V @ V
    s3 = np.sqrt(3)
    rhs = {
        "U": ((1 - w) * l3 - s3 * wc * l8) / 2,
        "V": (l1 + l4 + l6 + 1j * (l2 - l5 + l7)) / 2,
        "U2": ((1 - wc) * l3 - s3 * w * l8) / 2,
        "V2": (l1 + l4 + l6 - 1j * (l2 - l5 + l7)) / 2,
        "UV": (l1 + wc * l4 + w * l6 + 1j * (l2 - wc * l5 + w * l7)) / 2,
        "U2V": (l1 + w * l4 + wc * l6 + 1j * (l2 - w * l5 + wc * l7)) / 2,
        "UV2": (w * l1 + l4 + wc * l6 - 1j * (w * l2 - l5 + wc * l7)) / 2,
        "U2V2": (wc * l1 + l4 + w * l6 - 1j * (wc * l2 - l5 + w * l7)) / 2,
    }
    lhs = {
        "U": U, "V": V, "U2": U2, "V2": V2,
        "UV": U @ V, "U2V": U2 @ V, "UV2": U @ V2, "U2V2": U2 @ V2,
    }
    return {k: float(np.max(np.abs(lhs[k] - rhs[k]))) for k in lhs}


# ---------------------------------------------------------------------------
# structure constants


@dataclass(frozen=True)
class StructureConstants:
    """Antisymmetric ``f`` and symmetric ``d`` tensors of a generator set.

    ``f_sparse`` / ``d_sparse`` map canonical 1-based triples to values:
    ``i < j < k`` for ``f`` and ``i <= j <= k`` for ``d``.  Entries below
    ``1e-12`` in magnitude are omitted.  The dense arrays are 0-based.
    """

    dim: int
    f: np.ndarray = field(repr=False)
    d: np.ndarray = field(repr=False)
    f_sparse: dict[tuple[int, int, int], float]
    d_sparse: dict[tuple[int, int, int], float]

    def f_value(self, i: int, j: int, k: int) -> float:
        """``f_ijk`` for 1-based indices, reconstructed from the sparse table."""
        trip = (i, j, k)
        if len(set(trip)) < 3:
            return 0.0
        order = sorted(range(3), key=trip.__getitem__)
        sign = _perm_sign(order)
        return sign * self.f_sparse.get(tuple(sorted(trip)), 0.0)

    def d_value(self, i: int, j: int, k: int) -> float:
        """``d_ijk`` for 1-based indices, reconstructed from the sparse table."""
        return self.d_sparse.get(tuple(sorted((i, j, k))), 0.0)


def _perm_sign(order: list[int]) -> int:
    sign, o = 1, list(order)
    for a in range(len(o)):
        while o[a] != a:
            b = o[a]
            o[a], o[b] = o[b], o[a]
            sign = -sign
    return sign


def structure_constants(gens: GeneratorSet, cutoff: float = 1e-12) -> StructureConstants:
    """``f_ijk = -(i/4) Tr[[g_i, g_j] g_k]`` and ``d_ijk = (1/4) Tr[{g_i, g_j} g_k]``."""
    g = np.asarray(gens.matrices)
    prod = np.einsum("iab,jbc->ijac", g, g)
    comm = prod - prod.transpose(1, 0, 2, 3)
    anti = prod + prod.transpose(1, 0, 2, 3)
    f = np.real(-0.25j * np.einsum("ijab,kba->ijk", comm, g))
    d = np.real(0.25 * np.einsum("ijab,kba->ijk", anti, g))
    f[np.abs(f) < cutoff] = 0.0
    d[np.abs(d) < cutoff] = 0.0
    m = len(g)
    f_sp: dict[tuple[int, int, int], float] = {}
    d_sp: dict[tuple[int, int, int], float] = {}
    for i, j, k in combinations_with_replacement(range(m), 3):
        if i < j < k and f[i, j, k] != 0.0:
            f_sp[(i + 1, j + 1, k + 1)] = float(f[i, j, k])
        if d[i, j, k] != 0.0:
            d_sp[(i + 1, j + 1, k + 1)] = float(d[i, j, k])
    f.setflags(write=False)
    d.setflags(write=False)
    return StructureConstants(gens.dim, f, d, f_sp, d_sp)


def symmetry_deviation(sc: StructureConstants) -> tuple[float, float]:
    """Largest violation of total antisymmetry of ``f`` and total symmetry of ``d``."""
    df = dd = 0.0
    for perm in permutations(range(3)):
        sign = _perm_sign(list(perm))
        df = max(df, float(np.max(np.abs(np.transpose(sc.f, perm) - sign * sc.f))))
        dd = max(dd, float(np.max(np.abs(np.transpose(sc.d, perm) - sc.d))))
    return df, dd


# ---------------------------------------------------------------------------
# states


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix: unit trace, Hermitian, positive semidefinite.

    Raises
    ------
    InvalidStateError
        On the first violated condition (trace, Hermiticity, positivity).
    """

    m: ComplexMatrix = field(repr=False)

    def __post_init__(self) -> None:
        try:
            m = as_matrix(self.m)
        except ValueError as exc:
            raise InvalidStateError(str(exc)) from exc
        if m.shape[0] < 2:
            raise InvalidStateError("dimension must be >= 2")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace is {tr:.17g}, expected 1")
        dev = hermiticity_deviation(m)
        if dev > HERMITIAN_STATE_TOL:
            raise InvalidStateError(f"not Hermitian (deviation {dev:.3e})")
        lam = hermitian_eigenvalues(m)[0]
        if lam < POSITIVITY_TOL:
            raise InvalidStateError(f"negative eigenvalue {lam:.3e}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @property
    def dim(self) -> int:
        return self.m.shape[0]

    def purity(self) -> float:
        return float(np.real(np.trace(self.m @ self.m)))


def as_density(rho: DensityMatrix | npt.ArrayLike) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(np.asarray(rho, dtype=complex))


def random_density_matrix(n: int, rng: np.random.Generator) -> DensityMatrix:
    """``A A^dagger / Tr[A A^dagger]`` with standard complex normal ``A``."""
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = a @ a.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / np.trace(m).real)


def random_pure_state(n: int, rng: np.random.Generator) -> DensityMatrix:
    """``|psi><psi|`` for a normalized complex Gaussian vector."""
    psi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    psi /= np.linalg.norm(psi)
    m = np.outer(psi, psi.conj())
    return DensityMatrix(0.5 * (m + m.conj().T))


# ---------------------------------------------------------------------------
# Bloch vectors and mean values


def _check_dims(n: int, gens: GeneratorSet) -> None:
    if n != gens.dim:
        raise ValueError(f"dimension mismatch: state N={n}, generators N={gens.dim}")


def bloch_vector(rho: DensityMatrix | npt.ArrayLike, gens: GeneratorSet) -> np.ndarray:
    """Components ``<g_i> = Tr[g_i rho]``, checked to be real."""
    r = as_density(rho)
    _check_dims(r.dim, gens)
    vals = np.einsum("kab,ba->k", np.asarray(gens.matrices), r.m)
    resid = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    if resid > REALITY_TOL:
        raise ValueError(f"non-real generator expectation (imag {resid:.3e})")
    return vals.real.copy()


def rho_from_bloch(g: npt.ArrayLike, gens: GeneratorSet) -> DensityMatrix:
    """``rho = I/N + (1/2) sum <g_i> g_i``, validated for positivity."""
    g = np.asarray(g, dtype=float)
    if g.shape != (len(gens),):
        raise ValueError(f"expected {len(gens)} components, got shape {g.shape}")
    n = gens.dim
    m = np.eye(n, dtype=complex) / n + 0.5 * np.einsum("k,kab->ab", g, np.asarray(gens.matrices))
    return DensityMatrix(m)


def operator_components(o: npt.ArrayLike, gens: GeneratorSet) -> tuple[complex, np.ndarray]:
    """``(Tr O, [Tr[g_i O]])``, so that ``O = (Tr O)/N I + (1/2) sum O_i g_i``."""
    m = as_matrix(o)
    _check_dims(m.shape[0], gens)
    return complex(np.trace(m)), np.einsum("kab,ba->k", np.asarray(gens.matrices), m)


def mean_value(o: npt.ArrayLike, rho: DensityMatrix | npt.ArrayLike, gens: GeneratorSet) -> complex:
    """``<O> = (1/N) Tr O + (1/2) sum O_i <g_i>``."""
    r = as_density(rho)
    tr, comps = operator_components(o, gens)
    return complex(tr / gens.dim + 0.5 * np.dot(comps, bloch_vector(r, gens)))


def pair_mean(
    a: npt.ArrayLike, b: npt.ArrayLike, rho: DensityMatrix | npt.ArrayLike, gens: GeneratorSet
) -> complex:
    """``<A B>`` from the generator expansion.

    ``<AB> = <A><B> + (1/4) sum_ij A_i B_j (<g_i g_j> - <g_i><g_j>)``, where the
    generator products are reduced through the structure constants,
    ``g_i g_j = (2/N) delta_ij I + sum_k (d_ijk + i f_ijk) g_k``.
    """
    r = as_density(rho)
    n = gens.dim
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape != mb.shape:
        raise ValueError("dimension mismatch")
    _, ca = operator_components(ma, gens)
    _, cb = operator_components(mb, gens)
    g = bloch_vector(r, gens)
    sc = structure_constants(gens)
    gg = (2.0 / n) * np.eye(len(g)) + np.einsum("ijk,k->ij", sc.d + 1j * sc.f, g)
    cov = gg - np.outer(g, g)
    return complex(
        mean_value(ma, r, gens) * mean_value(mb, r, gens) + 0.25 * ca @ cov @ cb
    )


# ---------------------------------------------------------------------------
# toy three-level model


@dataclass(frozen=True)
class ToyModelParams:
    """Real non-negative couplings of the equal-population qutrit."""

    p1: float
    p2: float
    p3: float

    def __post_init__(self) -> None:
        if not toy_admissible(self.p1, self.p2, self.p3):
            raise InvalidStateError(
                f"toy parameters ({self.p1}, {self.p2}, {self.p3}) violate "
                "p1^2 + p2^2 + p3^2 <= 1/3 or non-negativity"
            )


def toy_admissible(p1: float, p2: float, p3: float) -> bool:
    """``p_i >= 0`` and ``p1^2 + p2^2 + p3^2 <= 1/3`` (within ``1e-12``)."""
    ps = (p1, p2, p3)
    if not all(np.isfinite(p) and p >= 0 for p in ps):
        return False
    return sum(p * p for p in ps) <= 1.0 / 3.0 + TOY_TOL


def toy_matrix(p1: float, p2: float, p3: float) -> ComplexMatrix:
    """Equal populations ``1/3`` with real off-diagonals ``p1 (01), p2 (02), p3 (12)``."""
    t = 1.0 / 3.0
    return np.array([[t, p1, p2], [p1, t, p3], [p2, p3, t]], dtype=np.complex128)
