"""Registry of numerical invariants run by ``dwigner check``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import bases, linalg, sun, wigner
from .schwinger import make_fourier_parity, make_schwinger


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.deviation) and self.deviation <= self.tol)


Check = Callable[[int, np.random.Generator], float]


def _dev(a, b) -> float:
    return linalg.max_abs(np.asarray(a) - np.asarray(b))


def _random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (a + a.conj().T)


def _label_pairs(n: int, rng: np.random.Generator, full_up_to: int = 5, samples: int = 60):
    if n <= full_up_to:
        return [(a, b, e, x) for a in range(n) for b in range(n) for e in range(n) for x in range(n)]
    return [tuple(int(v) for v in rng.integers(0, n, 4)) for _ in range(samples)]


def schwinger_algebra(n, rng):
    p = make_schwinger(n)
    eye = np.eye(n)
    dev = max(_dev(np.linalg.matrix_power(p.u, n), eye), _dev(np.linalg.matrix_power(p.v, n), eye))
    for eta in range(n):
        for xi in range(n):
            lhs = p.v_pow(xi) @ p.u_pow(eta)
            rhs = p.omega_pow(eta * xi) * p.u_pow(eta) @ p.v_pow(xi)
            dev = max(dev, _dev(lhs, rhs))
    return dev


def fourier_parity(n, rng):
    fp = make_fourier_parity(n)
    f, eye = fp.fourier, np.eye(n)
    return max(
        _dev(f @ f.conj().T, eye),
        _dev(np.linalg.matrix_power(f, 4), eye),
        _dev(f @ f, fp.parity),
        _dev(fp.parity @ fp.parity, eye),
    )


def parity_from_displacements(n, rng):
    total = sum(bases.d_basis(n, e, x) for e in bases.symmetric_labels(n) for x in bases.symmetric_labels(n))
    return _dev(total / n, make_fourier_parity(n).parity)


def s_orthonormality(n, rng):
    s = bases.s_basis_all(n).reshape(n * n, n, n)
    gram = np.einsum("aij,bij->ab", s.conj(), s)
    return _dev(gram, np.eye(n * n))


def g_properties(n, rng):
    g = bases.g_basis_all(n)
    flat = g.reshape(n * n, n, n)
    herm = _dev(flat, flat.conj().transpose(0, 2, 1))
    gram = _dev(np.einsum("aij,bij->ab", flat.conj(), flat), n * np.eye(n * n))
    tr = _dev(np.einsum("aii->a", flat), np.ones(n * n))
    comp = _dev(flat.sum(axis=0) / n, np.eye(n))
    return max(herm, gram, tr, comp)


def round_trip(n, rng):
    o = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return max(_dev(bases.reconstruct(bases.decompose(o, tag)), o) for tag in ("S", "G"))


def fourier_link(n, rng):
    o = _random_hermitian(n, rng)
    link = bases.coeff_fourier_link(bases.decompose(o, "S")).values
    rho = sun.random_density_matrix(n, rng)
    w6 = wigner.wigner_from_characteristic(wigner.characteristic(rho)).values
    return max(_dev(link, bases.decompose(o, "G").values), _dev(w6, wigner.wigner_direct(rho).values))


def similarity(n, rng):
    p = make_schwinger(n)
    return max(bases.similarity_check(p, (a, b), (e, x)) for a, b, e, x in _label_pairs(n, rng))


def window_invariance(n, rng):
    dev = 0.0
    g = bases.g_basis_all(n)
    for start in ((n, n), (-n, 2 * n + 1)):
        for mu in range(n):
            for nu in range(n):
                dev = max(dev, _dev(bases.g_basis_window(n, mu, nu, *start), g[mu, nu]))
    return dev


def generator_algebra(n, rng):
    gens = sun.make_generators(n)
    g = np.asarray(gens.matrices)
    m = len(g)
    gram = _dev(np.einsum("aij,bji->ab", g, g), 2 * np.eye(m))
    herm = _dev(g, g.conj().transpose(0, 2, 1))
    tr = linalg.max_abs(np.einsum("aii->a", g))
    via = _dev(sun.generators_via_schwinger(n).matrices, g)
    return max(gram, herm, tr, via)


def structure_closure(n, rng):
    gens = sun.make_generators(n)
    g = np.asarray(gens.matrices)
    sc = sun.structure_constants(gens)
    eye = np.eye(n)
    dev = max(sun.symmetry_deviation(sc))
    for i in range(len(g)):
        for j in range(len(g)):
            c = linalg.commutator(g[i], g[j]) - 2j * np.einsum("k,kab->ab", sc.f[i, j], g)
            a = linalg.anticommutator(g[i], g[j]) - (4.0 / n) * (i == j) * eye
            a = a - 2 * np.einsum("k,kab->ab", sc.d[i, j], g)
            dev = max(dev, linalg.max_abs(c), linalg.max_abs(a))
    return dev


def bloch_round_trip(n, rng):
    gens = sun.make_generators(n)
    rho = sun.random_density_matrix(n, rng)
    back = sun.rho_from_bloch(sun.bloch_vector(rho, gens), gens)
    return _dev(back.m, rho.m)


def mean_values(n, rng):
    gens = sun.make_generators(n)
    rho = sun.random_density_matrix(n, rng)
    a, b = _random_hermitian(n, rng), _random_hermitian(n, rng)
    d1 = abs(sun.mean_value(a, rho, gens) - np.trace(a @ rho.m))
    d2 = abs(sun.pair_mean(a, b, rho, gens) - np.trace(a @ b @ rho.m))
    d3 = abs(wigner.mean_from_grids(a, rho) - np.trace(a @ rho.m))
    return float(max(d1, d2, d3))


def overlaps(n, rng):
    a, b = _random_hermitian(n, rng), _random_hermitian(n, rng)
    tr = np.trace(a @ b)
    ga, gb = bases.decompose(a, "G").values, bases.decompose(b, "G").values
    via_g = np.sum(ga * gb) / n
    via_s = wigner.overlap_dual(bases.decompose(a, "S"), bases.decompose(b, "S"))
    r1, r2 = sun.random_density_matrix(n, rng), sun.random_density_matrix(n, rng)
    w1, w2 = wigner.wigner_direct(r1).values, wigner.wigner_direct(r2).values
    c1, c2 = wigner.characteristic(r1), wigner.characteristic(r2)
    tr_r = np.trace(r1.m @ r2.m)
    via_w = np.sum(w1 * w2) / n
    via_c = sum(c1.at(e, x) * c2.at(-e, -x) for e in range(n) for x in range(n))
    return float(max(abs(via_g - tr), abs(via_s - tr), abs(via_w - tr_r), abs(via_c - tr_r)))


def wigner_identities(n, rng):
    gens = sun.make_generators(n)
    rho = sun.random_density_matrix(n, rng)
    wc = wigner.wigner_complex(rho)
    w = wigner.wigner_direct(rho)
    g = sun.bloch_vector(rho, gens)
    pur = rho.purity()
    chi_direct = wigner.characteristic(rho).values
    chi_bloch = wigner.characteristic_bloch(rho, gens).values
    return float(max(
        linalg.max_abs(wc.imag),
        abs(w.normalization() - 1.0),
        abs(w.square_sum() - pur),
        abs(1.0 / n + 0.5 * g @ g - pur),
        _dev(wigner.wigner_bloch(rho, gens).values, w.values),
        _dev(chi_direct, chi_bloch),
        abs(chi_direct[0, 0] - 1 / np.sqrt(n)),
    ))


def pure_state_bloch(n, rng):
    gens = sun.make_generators(n)
    return float(max(
        abs(float(np.sum(sun.bloch_vector(sun.random_pure_state(n, rng), gens) ** 2)) - 2 * (1 - 1 / n))
        for _ in range(5)
    ))


def charpoly(n, rng):
    a = _random_hermitian(n, rng)
    lam = linalg.hermitian_eigenvalues(a)
    e = np.zeros(n + 1)
    e[0] = 1.0
    for x in lam:
        e[1:] = e[1:] + x * e[:-1]
    return _dev(linalg.charpoly_coeffs(a), e)


def delta_properties(n, rng):
    d = bases.delta_basis_all(n).reshape(n * n, n, n)
    herm = _dev(d, d.conj().transpose(0, 2, 1))
    invol = _dev(np.einsum("aij,ajk->aik", d, d), np.broadcast_to(np.eye(n), d.shape))
    rho = sun.random_density_matrix(n, rng)
    w = wigner.wigner_direct(rho, "Delta")
    return float(max(herm, invol, abs(w.normalization() - 1.0), abs(w.square_sum() - rho.purity())))


def qubit_closed_form(n, rng):
    rho = sun.random_density_matrix(2, rng)
    sx, sy, sz = sun.make_generators(2).matrices
    dev = _dev(wigner.su2_wigner_closed(rho).values, wigner.wigner_direct(rho).values)
    for mu in range(2):
        for nu in range(2):
            ext = 0.5 * (np.eye(2) + (-1) ** nu * sx + (-1) ** (mu + nu + 1) * sy + (-1) ** mu * sz)
            dev = max(dev, _dev(bases.g_basis(2, mu, nu), ext))
    return dev


def qutrit_dictionary(n, rng):
    part1 = _dev(sun.gellmann_table_part1(), sun.make_generators(3).matrices)
    return max(part1, max(sun.schwinger_via_gellmann(3).values()))


#: ``(name, check, tolerance, applies_to)``
REGISTRY: list[tuple[str, Check, float, Callable[[int], bool]]] = [
    ("schwinger_algebra", schwinger_algebra, 1e-12, lambda n: True),
    ("fourier_parity", fourier_parity, 1e-12, lambda n: True),
    ("parity_from_displacements", parity_from_displacements, 1e-12, lambda n: n % 2 == 1),
    ("s_orthonormality", s_orthonormality, 1e-12, lambda n: True),
    ("g_hermitian_orthogonal_complete", g_properties, 1e-12, lambda n: True),
    ("decompose_reconstruct", round_trip, 1e-12, lambda n: True),
    ("fourier_links", fourier_link, 1e-12, lambda n: True),
    ("similarity_displacement", similarity, 1e-12, lambda n: True),
    ("window_invariance", window_invariance, 1e-12, lambda n: True),
    ("generator_algebra", generator_algebra, 1e-12, lambda n: True),
    ("structure_closure", structure_closure, 1e-11, lambda n: True),
    ("bloch_round_trip", bloch_round_trip, 1e-12, lambda n: True),
    ("mean_values", mean_values, 1e-11, lambda n: True),
    ("trace_overlaps", overlaps, 1e-11, lambda n: True),
    ("wigner_identities", wigner_identities, 1e-12, lambda n: True),
    ("pure_state_bloch_norm", pure_state_bloch, 1e-10, lambda n: True),
    ("charpoly_recurrence", charpoly, 1e-9, lambda n: True),
    ("delta_basis", delta_properties, 1e-12, lambda n: n % 2 == 1),
    ("qubit_closed_form", qubit_closed_form, 1e-12, lambda n: n == 2),
    ("qutrit_dictionary", qutrit_dictionary, 1e-12, lambda n: n == 3),
]


def run_checks(n: int, seed: int) -> list[CheckResult]:
    """Run every applicable invariant with a generator seeded by ``seed``.

    Each check receives its own child generator so results do not depend on
    which other checks ran.
    """
    root = np.random.SeedSequence(seed)
    children = root.spawn(len(REGISTRY))
    out = []
    for (name, fn, tol, applies), child in zip(REGISTRY, children):
        if applies(n):
            out.append(CheckResult(name, float(fn(n, np.random.default_rng(child))), tol))
    return out
