import numpy as np
import pytest

from dwigner import bases
from dwigner.errors import UnsupportedDimensionError
from dwigner.schwinger import make_fourier_parity, make_schwinger

from conftest import random_hermitian, random_matrix

DIMS = range(2, 8)
ODD = (3, 5, 7)


def brute_g(n, mu, nu):
    """G(mu, nu) from explicit clock/shift powers over the balanced labels."""
    w = np.exp(2j * np.pi / n)
    u = np.diag(w ** np.arange(n))
    v = np.roll(np.eye(n), -1, axis=0)
    acc = np.zeros((n, n), complex)
    for e in range(n):
        for x in range(n):
            r, s = bases.reference_labels(n)[e, x]
            ur = np.linalg.matrix_power(u if r >= 0 else u.conj().T, abs(int(r)))
            vs = np.linalg.matrix_power(v if s >= 0 else v.T, abs(int(s)))
            acc += w ** (-(mu * r + nu * s)) * np.exp(1j * np.pi * r * s / n) * ur @ vs
    return acc / n


class TestLabels:
    def test_phi_examples(self):
        assert bases.phi(3, 1, 3) == -1
        assert bases.phi(3, 3, 3) == -3
        assert bases.phi(2, 1, 3) == 0

    def test_phi_vanishes_in_window(self):
        for n in DIMS:
            assert all(bases.phi(e, x, n) == 0 for e in range(n) for x in range(n))

    def test_symmetric_labels(self):
        np.testing.assert_array_equal(bases.symmetric_labels(5), [-2, -1, 0, 1, 2])
        assert bases.symmetric_label(4, 5) == -1
        assert bases.canonical_label(-1, 5) == 4
        with pytest.raises(UnsupportedDimensionError):
            bases.symmetric_labels(4)

    @pytest.mark.parametrize("n", ODD)
    def test_balanced_window_closed_under_negation(self, n):
        reps = {tuple(int(v) for v in r) for r in bases.reference_labels(n).reshape(-1, 2)}
        assert len(reps) == n * n
        assert {(-a, -b) for a, b in reps} == reps

    @pytest.mark.parametrize("n", (2, 4, 6))
    def test_even_window_bounds(self, n):
        reps = bases.reference_labels(n).reshape(-1, 2)
        assert np.all(np.abs(reps) <= n // 2)
        assert np.all((reps % n) == np.indices((n, n)).reshape(2, -1).T)

    def test_even_window_rule(self):
        reps = bases.reference_labels(4)
        assert tuple(reps[2, 3]) == (-2, -1)
        assert tuple(reps[2, 1]) == (2, 1)
        assert tuple(reps[2, 2]) == (2, 2)

    def test_unknown_reference(self):
        with pytest.raises(ValueError):
            bases.label_signs(3, "other")


class TestS:
    @pytest.mark.parametrize("n", DIMS)
    def test_orthonormal(self, n):
        s = bases.s_basis_all(n).reshape(n * n, n, n)
        np.testing.assert_allclose(np.einsum("aij,bij->ab", s.conj(), s), np.eye(n * n), atol=1e-12)

    def test_identity_element(self):
        np.testing.assert_allclose(bases.s_basis(3, 0, 0), np.eye(3) / np.sqrt(3), atol=1e-15)

    @pytest.mark.parametrize("n", DIMS)
    def test_adjoint_is_negated_label(self, n):
        for e in range(-n, n):
            for x in range(-n, n):
                np.testing.assert_allclose(
                    bases.s_basis(n, e, x).conj().T, bases.s_basis(n, -e, -x), atol=1e-12
                )

    @pytest.mark.parametrize("n", DIMS)
    def test_sign_periodicity(self, n):
        for e in range(n):
            for x in range(n):
                for a in (-1, 1, 2):
                    for b in (-1, 0, 1):
                        sign = (-1) ** ((n * a * b + e * b + x * a) % 2)
                        np.testing.assert_allclose(
                            bases.s_basis(n, e + a * n, x + b * n), sign * bases.s_basis(n, e, x), atol=1e-12
                        )
                        assert sign == (-1) ** (bases.phi(e + a * n, x + b * n, n) % 2)

    def test_displacement_unitary(self):
        for n in DIMS:
            t = bases.displacement(n, 1, 2)
            np.testing.assert_allclose(t @ t.conj().T, np.eye(n), atol=1e-12)
            np.testing.assert_allclose(t, np.sqrt(n) * bases.s_basis(n, 1, -2), atol=1e-12)


class TestG:
    @pytest.mark.parametrize("n", DIMS)
    def test_matches_brute_force(self, n):
        g = bases.g_basis_all(n)
        for mu in range(n):
            for nu in range(n):
                np.testing.assert_allclose(g[mu, nu], brute_g(n, mu, nu), atol=1e-12)

    @pytest.mark.parametrize("n", DIMS)
    def test_hermitian_orthogonal_unit_trace_complete(self, n):
        g = bases.g_basis_all(n).reshape(n * n, n, n)
        np.testing.assert_allclose(g, g.conj().transpose(0, 2, 1), atol=1e-12)
        np.testing.assert_allclose(np.einsum("aij,bij->ab", g.conj(), g), n * np.eye(n * n), atol=1e-12)
        np.testing.assert_allclose(np.einsum("aii->a", g), 1, atol=1e-12)
        np.testing.assert_allclose(g.sum(axis=0) / n, np.eye(n), atol=1e-12)

    def test_qubit_closed_form(self):
        sx = np.array([[0, 1], [1, 0]])
        sy = np.array([[0, -1j], [1j, 0]])
        sz = np.diag([1, -1])
        for mu in range(2):
            for nu in range(2):
                ext = 0.5 * (np.eye(2) + (-1) ** nu * sx + (-1) ** (mu + nu + 1) * sy + (-1) ** mu * sz)
                np.testing.assert_allclose(bases.g_basis(2, mu, nu), ext, atol=1e-12)

    @pytest.mark.parametrize("n", (3, 4, 5))
    def test_canonical_window_not_hermitian(self, n):
        g = bases.g_basis_all(n, "canonical")
        assert np.max(np.abs(g - g.conj().transpose(0, 1, 3, 2))) > 1e-3

    def test_canonical_equals_balanced_for_qubit(self):
        np.testing.assert_allclose(bases.g_basis_all(2, "canonical"), bases.g_basis_all(2), atol=1e-15)

    @pytest.mark.parametrize("n", DIMS)
    @pytest.mark.parametrize("reference", bases.REFERENCES)
    def test_window_invariance(self, n, reference):
        g = bases.g_basis_all(n, reference)
        for start in ((0, 0), (n, -n), (-2 * n + 1, 3), (5, 2 * n - 1)):
            for mu in range(n):
                for nu in range(n):
                    np.testing.assert_allclose(
                        bases.g_basis_window(n, mu, nu, *start, reference=reference), g[mu, nu], atol=1e-12
                    )

    @pytest.mark.parametrize("n", DIMS)
    def test_labels_periodic(self, n):
        np.testing.assert_array_equal(bases.g_basis(n, n + 1, -1), bases.g_basis(n, 1, n - 1))

    @pytest.mark.parametrize("n", DIMS)
    def test_similarity(self, n):
        p = make_schwinger(n)
        for a in range(n):
            for b in range(n):
                assert bases.similarity_check(p, (a, b), (1, n - 1)) < 1e-12

    def test_similarity_generated_from_origin(self):
        n = 5
        g = bases.g_basis_all(n)
        t = bases.displacement(n, 3, 2)
        np.testing.assert_allclose(t @ g[0, 0] @ t.conj().T, g[2, 3], atol=1e-12)


class TestCoefficients:
    @pytest.mark.parametrize("n", DIMS)
    @pytest.mark.parametrize("tag", ("S", "G"))
    def test_round_trip(self, rng, n, tag):
        o = random_matrix(n, rng)
        c = bases.decompose(o, tag)
        np.testing.assert_allclose(bases.reconstruct(c), o, atol=1e-12)

    @pytest.mark.parametrize("n", DIMS)
    def test_fourier_link_and_inverse(self, rng, n):
        o = random_hermitian(n, rng)
        cs, cg = bases.decompose(o, "S"), bases.decompose(o, "G")
        np.testing.assert_allclose(bases.coeff_fourier_link(cs).values, cg.values, atol=1e-12)
        np.testing.assert_allclose(bases.coeff_fourier_inverse(cg).values, cs.values, atol=1e-12)

    @pytest.mark.parametrize("n", DIMS)
    def test_g_coefficients_of_hermitian_are_real(self, rng, n):
        c = bases.decompose(random_hermitian(n, rng), "G")
        assert np.max(np.abs(c.values.imag)) < 1e-12

    def test_raw_label_access(self, rng):
        n = 3
        o = random_matrix(n, rng)
        c = bases.decompose(o, "S")
        for e in range(-4, 5):
            for x in range(-4, 5):
                direct = np.trace(bases.s_basis(n, e, x).conj().T @ o)
                assert abs(c.at(e, x) - direct) < 1e-12

    def test_bad_tags(self):
        with pytest.raises(ValueError):
            bases.decompose(np.eye(2), "X")
        with pytest.raises(ValueError):
            bases.coeff_fourier_link(bases.decompose(np.eye(2), "G"))
        with pytest.raises(ValueError):
            bases.coeff_fourier_inverse(bases.decompose(np.eye(2), "S"))


class TestDelta:
    def test_d_qutrit_example(self):
        p = make_schwinger(3)
        w = p.omega
        # 2^-1 = 2 mod 3, so D(1, 1) = omega^-2 U V^-1
        np.testing.assert_allclose(bases.d_basis(p, 1, 1), w**-2 * p.u @ np.linalg.inv(p.v), atol=1e-12)

    @pytest.mark.parametrize("n", ODD)
    def test_d_periodic_and_unitary(self, n):
        for e in range(-n, n):
            for x in range(-n, n):
                d = bases.d_basis(n, e, x)
                np.testing.assert_allclose(d @ d.conj().T, np.eye(n), atol=1e-12)
                np.testing.assert_allclose(d, bases.d_basis(n, e + n, x - n), atol=1e-12)

    @pytest.mark.parametrize("n", ODD)
    def test_parity_from_displacements(self, n):
        labels = bases.symmetric_labels(n)
        total = sum(bases.d_basis(n, e, x) for e in labels for x in labels) / n
        np.testing.assert_allclose(total, make_fourier_parity(n).parity, atol=1e-12)

    @pytest.mark.parametrize("n", ODD)
    def test_delta_properties(self, n):
        d = bases.delta_basis_all(n).reshape(n * n, n, n)
        np.testing.assert_allclose(d, d.conj().transpose(0, 2, 1), atol=1e-12)
        np.testing.assert_allclose(np.einsum("aij,ajk->aik", d, d), np.broadcast_to(np.eye(n), d.shape), atol=1e-12)
        np.testing.assert_allclose(np.einsum("aii->a", d), 1, atol=1e-12)
        np.testing.assert_allclose(np.einsum("aij,bji->ab", d, d), n * np.eye(n * n), atol=1e-12)
        np.testing.assert_allclose(d.sum(axis=0) / n, np.eye(n), atol=1e-12)

    def test_delta_origin_is_parity(self):
        np.testing.assert_allclose(bases.delta_basis(5, 0, 0), make_fourier_parity(5).parity, atol=1e-15)

    @pytest.mark.parametrize("n", (2, 4, 6))
    def test_even_rejected(self, n):
        with pytest.raises(UnsupportedDimensionError):
            bases.d_basis(n, 0, 0)
        with pytest.raises(UnsupportedDimensionError):
            bases.delta_basis_all(n)
