"""Two-qubit density matrices of the diagonal-correlation Bloch family.

A state in this family is parametrized by two local Bloch vectors r, s and
the diagonal c = (c1, c2, c3) of the correlation tensor:

    rho = (1/4) [ I (x) I + r.sigma (x) I + I (x) s.sigma
                  + sum_i c_i sigma_i (x) sigma_i ]

in the product basis |00>, |01>, |10>, |11>.  This module provides the
state constructor and its inverse, a self-contained Jacobi eigensolver for
small Hermitian matrices, partial traces, the von Neumann entropy and the
two-parameter entropic function that underlies every closed form in the
package.  All logarithms are base 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    OutOfFamilyError,
    PhysicalityError,
)

IDENTITY2 = np.eye(2, dtype=complex)
PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# Numerical gates, shared across the package.
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-9
LOG_CLAMP = 1e-12
_OFFDIAG_TARGET = 1e-13
_MAX_SWEEPS = 100


def _as_vec3(v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float).reshape(-1)
    if arr.shape != (3,):
        raise ValueError(f"{name} must be a real 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class BlochParams:
    """Immutable triple (r, s, c) of real 3-vectors.

    ``r`` and ``s`` are the Bloch vectors of the two marginals, ``c`` holds
    the diagonal correlation coefficients.  Construction only checks shape
    and finiteness; positivity of the resulting matrix is enforced by
    :func:`build_state`.
    """

    r: np.ndarray
    s: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "r", _as_vec3(self.r, "r"))
        object.__setattr__(self, "s", _as_vec3(self.s, "s"))
        object.__setattr__(self, "c", _as_vec3(self.c, "c"))

    @property
    def r_norm(self) -> float:
        return float(np.linalg.norm(self.r))

    @property
    def s_norm(self) -> float:
        return float(np.linalg.norm(self.s))


@dataclass(frozen=True)
class Spectrum:
    """Spectral decomposition with a deterministic output convention.

    ``eigenvalues`` are sorted descending; exact ties are broken by the
    lexicographically larger eigenvector.  Each eigenvector column carries
    the phase convention that its first component above 1e-12 in magnitude
    is real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)
        self.eigenvectors.setflags(write=False)


def build_state(params: BlochParams) -> np.ndarray:
    """Assemble the 4x4 density matrix of the family.

    Parameters
    ----------
    params : BlochParams
        Bloch vectors and correlation diagonal.

    Returns
    -------
    numpy.ndarray
        Complex 4x4 matrix, Hermitian with unit trace by construction.

    Raises
    ------
    PhysicalityError
        If the smallest eigenvalue is below -1e-9, i.e. the parameters do
        not describe a physical state.
    """
    rho = np.kron(IDENTITY2, IDENTITY2).astype(complex)
    for i in range(3):
        rho += params.r[i] * np.kron(PAULI[i], IDENTITY2)
        rho += params.s[i] * np.kron(IDENTITY2, PAULI[i])
        rho += params.c[i] * np.kron(PAULI[i], PAULI[i])
    rho *= 0.25
    rho = 0.5 * (rho + rho.conj().T)
    smallest = float(_jacobi_eigenvalues(rho).min())
    if smallest < EIGENVALUE_FLOOR:
        raise PhysicalityError(
            f"parameters give smallest eigenvalue {smallest:.3e} < {EIGENVALUE_FLOOR}"
        )
    return rho


def extract_bloch(rho: np.ndarray) -> BlochParams:
    """Recover (r, s, c) from a physical family state via Pauli expectations.

    Raises
    ------
    OutOfFamilyError
        If any off-diagonal correlation component tr(rho sigma_i (x) sigma_j),
        i != j, exceeds 1e-9 in magnitude: the state is not in the
        diagonal-correlation family and is rejected rather than projected.
    PhysicalityError
        Propagated from the density-matrix gates.
    """
    check_density_matrix(rho)
    r = np.empty(3)
    s = np.empty(3)
    c = np.empty(3)
    for i in range(3):
        r[i] = np.trace(rho @ np.kron(PAULI[i], IDENTITY2)).real
        s[i] = np.trace(rho @ np.kron(IDENTITY2, PAULI[i])).real
        for j in range(3):
            t_ij = np.trace(rho @ np.kron(PAULI[i], PAULI[j])).real
            if i == j:
                c[i] = t_ij
            elif abs(t_ij) > 1e-9:
                raise OutOfFamilyError(
                    f"off-diagonal correlation tr(rho sigma_{i + 1} (x) sigma_{j + 1})"
                    f" = {t_ij:.3e} exceeds 1e-9"
                )
    return BlochParams(r, s, c)


def check_density_matrix(rho: np.ndarray) -> None:
    """Gate a matrix through the density-matrix invariants.

    Hermiticity within 1e-12, unit trace within 1e-12 and smallest
    eigenvalue above -1e-9.  Works for 2x2 and 4x4 inputs.
    """
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape[0] not in (2, 4):
        raise PhysicalityError(f"expected a 2x2 or 4x4 matrix, got shape {rho.shape}")
    dev = float(np.max(np.abs(rho - rho.conj().T)))
    if dev > HERMITICITY_TOL:
        raise PhysicalityError(f"Hermiticity deviation {dev:.3e} exceeds {HERMITICITY_TOL}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise PhysicalityError(f"trace {tr} deviates from 1 beyond {TRACE_TOL}")
    smallest = float(_jacobi_eigenvalues(rho).min())
    if smallest < EIGENVALUE_FLOOR:
        raise PhysicalityError(
            f"smallest eigenvalue {smallest:.3e} below {EIGENVALUE_FLOOR}"
        )


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _jacobi_sweep(a: np.ndarray, v: np.ndarray) -> None:
    """One cyclic sweep of complex Jacobi rotations, in place."""
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            m = abs(apq)
            if m == 0.0:
                continue
            phase = apq / m
            tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
            if tau == 0.0:
                t = 1.0
            else:
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau))
            cth = 1.0 / np.sqrt(1.0 + t * t)
            sth = t * cth
            rot = np.eye(n, dtype=complex)
            rot[p, p] = cth
            rot[p, q] = sth
            rot[q, p] = -sth * np.conj(phase)
            rot[q, q] = cth * np.conj(phase)
            a[:] = rot.conj().T @ a @ rot
            v[:] = v @ rot


def _jacobi_decompose(rho: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, np.ndarray]:
    a = 0.5 * (np.asarray(rho, dtype=complex) + np.asarray(rho, dtype=complex).conj().T)
    v = np.eye(a.shape[0], dtype=complex)
    for sweep in range(max_sweeps + 1):
        off = _offdiag_norm(a)
        if off < _OFFDIAG_TARGET:
            return np.diag(a).real.copy(), v
        if sweep == max_sweeps:
            raise ConvergenceError(
                f"off-diagonal norm {off:.3e} above {_OFFDIAG_TARGET}"
                f" after {max_sweeps} sweeps"
            )
        _jacobi_sweep(a, v)
    raise AssertionError("unreachable")


def _jacobi_eigenvalues(rho: np.ndarray, max_sweeps: int = _MAX_SWEEPS) -> np.ndarray:
    return _jacobi_decompose(rho, max_sweeps)[0]


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    for comp in vec:
        if abs(comp) > 1e-12:
            return vec * (np.conj(comp) / abs(comp))
    return vec


def hermitian_eigen(rho: np.ndarray, max_sweeps: int = _MAX_SWEEPS) -> Spectrum:
    """Full spectral decomposition by cyclic complex Jacobi rotations.

    The rotation order is fixed, the off-diagonal Frobenius target is
    1e-13 and the sweep budget defaults to 100, so the output is fully
    deterministic.  Eigenvalues come out sorted descending; exact ties are
    ordered by the lexicographically larger phase-fixed eigenvector.

    Raises
    ------
    PhysicalityError
        If the input deviates from Hermitian by more than 1e-12.
    ConvergenceError
        If the off-diagonal norm does not reach the target in budget.
    """
    rho = np.asarray(rho)
    dev = float(np.max(np.abs(rho - rho.conj().T)))
    if dev > HERMITICITY_TOL:
        raise PhysicalityError(f"input is not Hermitian (deviation {dev:.3e})")
    lam, vecs = _jacobi_decompose(rho, max_sweeps)
    cols = [_fix_phase(vecs[:, i].copy()) for i in range(len(lam))]

    def sort_key(i: int):
        flat = []
        for comp in cols[i]:
            flat.extend((-comp.real, -comp.imag))
        return (-lam[i], tuple(flat))

    order = sorted(range(len(lam)), key=sort_key)
    eigenvalues = np.array([lam[i] for i in order])
    eigenvectors = np.column_stack([cols[i] for i in order])
    return Spectrum(eigenvalues, eigenvectors)


def partial_trace(rho: np.ndarray, side: str) -> np.ndarray:
    """Marginal state of one party.

    ``side="a"`` traces out party b and returns rho^a; ``side="b"``
    returns rho^b.  For a family state these are (I + r.sigma)/2 and
    (I + s.sigma)/2.
    """
    rho = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if side == "a":
        return np.einsum("ikjk->ij", rho)
    if side == "b":
        return np.einsum("kikj->ij", rho)
    raise ValueError(f"side must be 'a' or 'b', got {side!r}")


def qubit_state(v) -> np.ndarray:
    """Single-qubit state (I + v.sigma)/2 for a Bloch vector v."""
    v = np.asarray(v, dtype=float)
    rho = IDENTITY2.copy()
    for i in range(3):
        rho += v[i] * PAULI[i]
    return 0.5 * rho


def bloch_vector(rho2: np.ndarray) -> np.ndarray:
    """Bloch vector of a 2x2 state via Pauli expectations."""
    rho2 = np.asarray(rho2, dtype=complex)
    return np.array([np.trace(rho2 @ sig).real for sig in PAULI])


def _xlog2(t: np.ndarray) -> np.ndarray:
    """t*log2(t) with arguments below 1e-12 clamped to zero."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    mask = t >= LOG_CLAMP
    out[mask] = t[mask] * np.log2(t[mask])
    return out


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -Tr rho log2 rho in bits, from the Jacobi spectrum.

    Eigenvalues in [-1e-9, 0) are treated as rounding noise and clamped
    to zero; anything lower raises ``PhysicalityError``.
    """
    lam = _jacobi_eigenvalues(np.asarray(rho, dtype=complex))
    smallest = float(lam.min())
    if smallest < EIGENVALUE_FLOOR:
        raise PhysicalityError(
            f"eigenvalue {smallest:.3e} below {EIGENVALUE_FLOOR}"
        )
    lam = np.clip(lam, 0.0, None)
    return float(-np.sum(_xlog2(lam)))


def entropic_h(eps, x):
    """Entropic building block of all closed forms in this package.

    H_eps(x) = (1+eps+x)/2 * log2(1+eps+x) + (1+eps-x)/2 * log2(1+eps-x)

    Even in ``x``.  Both arguments broadcast; the return is a float for
    scalar input and an array otherwise.  Log arguments inside
    [-1e-12, 1e-12) are clamped to zero (the x log x -> 0 limit).

    Raises
    ------
    DomainError
        If 1 + eps - |x| < -1e-12, i.e. a log argument is genuinely
        negative rather than rounding noise.
    """
    eps_arr, x_arr = np.broadcast_arrays(
        np.asarray(eps, dtype=float), np.asarray(x, dtype=float)
    )
    t_plus = 1.0 + eps_arr + x_arr
    t_minus = 1.0 + eps_arr - x_arr
    low = min(float(t_plus.min()) if t_plus.size else 0.0,
              float(t_minus.min()) if t_minus.size else 0.0)
    if low < -LOG_CLAMP:
        raise DomainError(f"log argument {low:.3e} below -{LOG_CLAMP}")
    out = 0.5 * (_xlog2(t_plus) + _xlog2(t_minus))
    if np.isscalar(eps) and np.isscalar(x):
        return float(out)
    return out
