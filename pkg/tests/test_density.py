"""Tests for state construction, the Jacobi eigensolver, partial traces,
entropies and the entropic function."""

import numpy as np
import pytest

from discordkit import (
    BlochParams,
    ConvergenceError,
    DomainError,
    OutOfFamilyError,
    PhysicalityError,
    build_state,
    entropic_h,
    extract_bloch,
    hermitian_eigen,
    partial_trace,
    qubit_state,
    von_neumann_entropy,
)
from discordkit.density import PAULI
from discordkit.sampling import draw_general_batch

from _oracles import eigh_spectrum

SINGLET = BlochParams([0, 0, 0], [0, 0, 0], [-1, -1, -1])


def test_pauli_trace_orthonormality():
    for i in range(3):
        for j in range(3):
            tr = np.trace(PAULI[i] @ PAULI[j])
            assert tr == pytest.approx(2.0 if i == j else 0.0, abs=1e-15)


def test_build_state_maximally_mixed():
    rho = build_state(BlochParams([0, 0, 0], [0, 0, 0], [0, 0, 0]))
    np.testing.assert_allclose(rho, np.eye(4) / 4, atol=1e-15)


def test_build_state_singlet_projector():
    rho = build_state(SINGLET)
    psi = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
    np.testing.assert_allclose(rho, np.outer(psi, psi.conj()), atol=1e-15)
    lam = hermitian_eigen(rho).eigenvalues
    np.testing.assert_allclose(lam, [1, 0, 0, 0], atol=1e-12)


def test_build_state_reference_entries(ref_state_a):
    rho = build_state(ref_state_a)
    assert rho[0, 0] == pytest.approx(0.375, abs=1e-15)
    assert rho[0, 1] == pytest.approx(0.025 - 0.05j, abs=1e-15)
    assert rho[1, 2] == pytest.approx(0.15, abs=1e-15)
    assert rho[3, 3] == pytest.approx(0.275, abs=1e-15)


def test_build_state_rejects_unphysical():
    with pytest.raises(PhysicalityError):
        build_state(BlochParams([0, 0, 0], [0, 0, 0], [1, 1, 1]))


def test_extract_bloch_maximally_mixed():
    params = extract_bloch(np.eye(4, dtype=complex) / 4)
    np.testing.assert_allclose(params.r, 0, atol=1e-15)
    np.testing.assert_allclose(params.s, 0, atol=1e-15)
    np.testing.assert_allclose(params.c, 0, atol=1e-15)


def test_extract_bloch_round_trip():
    rng = np.random.default_rng(7)
    for params in draw_general_batch(rng, 50):
        back = extract_bloch(build_state(params))
        np.testing.assert_allclose(back.r, params.r, atol=1e-12)
        np.testing.assert_allclose(back.s, params.s, atol=1e-12)
        np.testing.assert_allclose(back.c, params.c, atol=1e-12)


def test_extract_bloch_rejects_off_diagonal_correlations():
    rho = np.eye(4, dtype=complex) / 4 + 0.1 * np.kron(PAULI[0], PAULI[1]) / 4
    with pytest.raises(OutOfFamilyError):
        extract_bloch(rho)


def test_hermitian_eigen_identity_quarter():
    decomp = hermitian_eigen(np.eye(4, dtype=complex) / 4)
    np.testing.assert_allclose(decomp.eigenvalues, 0.25, atol=1e-14)


def test_hermitian_eigen_reference_spectrum(ref_state_a):
    lam = hermitian_eigen(build_state(ref_state_a)).eigenvalues
    np.testing.assert_allclose(lam, [0.4, 0.3427, 0.25, 0.0073], atol=5e-4)


def test_hermitian_eigen_uniform_c_closed_forms():
    rng = np.random.default_rng(11)
    for _ in range(50):
        c = rng.uniform(-0.25, 0.25)
        r_norm = rng.uniform(0, 0.5)
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        params = BlochParams(r_norm * direction, [0, 0, 0], [c, c, c])
        try:
            rho = build_state(params)
        except PhysicalityError:
            continue
        big = np.sqrt(4 * c**2 + r_norm**2)
        expected = np.sort(
            [1 + c + r_norm, 1 + c - r_norm, 1 - c + big, 1 - c - big]
        )[::-1] / 4.0
        np.testing.assert_allclose(
            hermitian_eigen(rho).eigenvalues, expected, atol=1e-10
        )


def test_hermitian_eigen_reconstruction_many_random():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        raw = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        herm = 0.5 * (raw + raw.conj().T)
        herm = herm - np.eye(4) * (np.trace(herm).real - 1.0) / 4.0
        decomp = hermitian_eigen(herm)
        recon = decomp.eigenvectors @ np.diag(decomp.eigenvalues) @ decomp.eigenvectors.conj().T
        assert np.max(np.abs(herm - recon)) <= 1e-10
        np.testing.assert_allclose(
            decomp.eigenvalues, eigh_spectrum(herm), atol=1e-10
        )


def test_hermitian_eigen_descending_and_phase_fixed():
    rng = np.random.default_rng(5)
    raw = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    decomp = hermitian_eigen(0.5 * (raw + raw.conj().T))
    assert np.all(np.diff(decomp.eigenvalues) <= 1e-14)
    for k in range(4):
        col = decomp.eigenvectors[:, k]
        first = next(comp for comp in col if abs(comp) > 1e-12)
        assert first.imag == pytest.approx(0.0, abs=1e-13)
        assert first.real > 0


def test_hermitian_eigen_determinism():
    rng = np.random.default_rng(13)
    raw = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    herm = 0.5 * (raw + raw.conj().T)
    s1 = hermitian_eigen(herm)
    s2 = hermitian_eigen(herm)
    assert np.array_equal(s1.eigenvalues, s2.eigenvalues)
    assert np.array_equal(s1.eigenvectors, s2.eigenvectors)


def test_hermitian_eigen_budget_exhaustion():
    rho = build_state(BlochParams([0, 0, 0], [0.1, 0.2, 0.2], [0.3, 0.3, 0.3]))
    with pytest.raises(ConvergenceError):
        hermitian_eigen(rho, max_sweeps=0)


def test_hermitian_eigen_rejects_non_hermitian():
    bad = np.eye(4, dtype=complex)
    bad[0, 1] = 1e-6
    with pytest.raises(PhysicalityError):
        hermitian_eigen(bad)


def test_partial_trace_maximally_mixed():
    np.testing.assert_allclose(
        partial_trace(np.eye(4, dtype=complex) / 4, "a"), np.eye(2) / 2, atol=1e-15
    )


def test_partial_trace_reference_marginal(ref_state_a):
    marg = partial_trace(build_state(ref_state_a), "b")
    np.testing.assert_allclose(marg, qubit_state([0.1, 0.2, 0.2]), atol=1e-14)
    np.testing.assert_allclose(
        partial_trace(build_state(ref_state_a), "a"), np.eye(2) / 2, atol=1e-14
    )


def test_partial_trace_singlet_marginals():
    rho = build_state(SINGLET)
    for side in ("a", "b"):
        np.testing.assert_allclose(partial_trace(rho, side), np.eye(2) / 2, atol=1e-14)


def test_partial_trace_rejects_bad_side():
    with pytest.raises(ValueError):
        partial_trace(np.eye(4) / 4, "c")


def test_entropy_pure_and_mixed():
    assert von_neumann_entropy(build_state(SINGLET)) == pytest.approx(0.0, abs=1e-12)
    assert von_neumann_entropy(np.eye(4, dtype=complex) / 4) == pytest.approx(2.0)
    assert von_neumann_entropy(np.eye(2, dtype=complex) / 2) == pytest.approx(1.0)


def test_entropy_reference_state(ref_state_a):
    # expected value from the exact closed-form spectrum of this family
    s_norm, c = ref_state_a.s_norm, 0.3
    big = np.sqrt(4 * c**2 + s_norm**2)
    lam = np.array([1 + c + s_norm, 1 + c - s_norm, 1 - c + big, 1 - c - big]) / 4
    expected = float(-np.sum(lam * np.log2(lam)))
    assert von_neumann_entropy(build_state(ref_state_a)) == pytest.approx(
        expected, abs=1e-10
    )


def test_entropy_rejects_negative_eigenvalue():
    bad = np.diag([1.05, -0.05, 0.0, 0.0]).astype(complex)
    with pytest.raises(PhysicalityError):
        von_neumann_entropy(bad)


def test_entropy_bounds_and_rank_one():
    rng = np.random.default_rng(23)
    for params in draw_general_batch(rng, 100):
        s = von_neumann_entropy(build_state(params))
        assert 0.0 <= s <= 2.0


def test_qubit_entropy_matches_binary_form():
    rng = np.random.default_rng(29)
    for _ in range(100):
        v = rng.uniform(-1, 1, size=3)
        norm = np.linalg.norm(v)
        if norm >= 1:
            v /= norm * 1.01
            norm = np.linalg.norm(v)
        s = von_neumann_entropy(qubit_state(v))
        assert s + entropic_h(0.0, norm) == pytest.approx(1.0, abs=1e-12)


def test_qubit_eigenvalues_from_bloch_norm():
    rng = np.random.default_rng(31)
    for _ in range(50):
        v = rng.uniform(-0.57, 0.57, size=3)
        lam = hermitian_eigen(qubit_state(v)).eigenvalues
        norm = np.linalg.norm(v)
        np.testing.assert_allclose(lam, [(1 + norm) / 2, (1 - norm) / 2], atol=1e-12)


def test_entropic_h_fixed_points():
    assert entropic_h(0.0, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert entropic_h(0.0, 1.0) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("eps", [-0.4, -0.1, 0.0, 0.3, 0.9])
def test_entropic_h_minimum_at_zero(eps):
    assert entropic_h(eps, 0.0) == pytest.approx(
        (1 + eps) * np.log2(1 + eps), abs=1e-14
    )
    xs = np.linspace(0, 1 + eps, 50)
    values = entropic_h(np.full_like(xs, eps), xs)
    assert np.all(values >= entropic_h(eps, 0.0) - 1e-14)


def test_entropic_h_exactly_even():
    rng = np.random.default_rng(37)
    for _ in range(200):
        eps = rng.uniform(-0.5, 0.5)
        x = rng.uniform(0, 1 + eps)
        assert entropic_h(eps, x) == entropic_h(eps, -x)


def test_entropic_h_domain_error():
    with pytest.raises(DomainError):
        entropic_h(0.0, 1.5)
    with pytest.raises(DomainError):
        entropic_h(-0.5, 0.8)


def test_entropic_h_vectorized_matches_scalar():
    xs = np.array([0.0, 0.25, 0.5, 0.99])
    vec = entropic_h(0.1, xs)
    for x, v in zip(xs, vec):
        assert v == pytest.approx(entropic_h(0.1, float(x)), abs=0)
