"""Seeded random draws of physical Bloch parameters, one helper per
closed-form family plus a general rejection sampler.

Draws stay a small margin away from the positivity boundary so that every
closed form evaluates on strictly positive log arguments.
"""

from __future__ import annotations

import numpy as np

from .density import IDENTITY2, PAULI, BlochParams

_MARGIN = 1e-6
_BATCH = 4096


def _unit(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
        if n > 1e-6:
            return v / n


def draw_s0_isotropic(rng: np.random.Generator) -> BlochParams:
    """s = 0, c1 = c2 = c3 = c, random direction for r."""
    while True:
        c = rng.uniform(-1.0, 1.0)
        r_norm = rng.uniform(0.0, 1.0)
        big = np.sqrt(4 * c * c + r_norm * r_norm)
        lam = 0.25 * np.array([1 + c + r_norm, 1 + c - r_norm, 1 - c + big, 1 - c - big])
        if lam.min() >= _MARGIN:
            return BlochParams(r_norm * _unit(rng), [0, 0, 0], [c, c, c])


def draw_r0_isotropic(rng: np.random.Generator) -> BlochParams:
    """r = 0, c1 = c2 = c3 = c, random direction for s."""
    while True:
        c = rng.uniform(-1.0, 1.0)
        s_norm = rng.uniform(0.0, 1.0)
        big = np.sqrt(4 * c * c + s_norm * s_norm)
        lam = 0.25 * np.array([1 + c + s_norm, 1 + c - s_norm, 1 - c + big, 1 - c - big])
        if lam.min() >= _MARGIN:
            return BlochParams([0, 0, 0], s_norm * _unit(rng), [c, c, c])


def draw_axial_zero(rng: np.random.Generator) -> BlochParams:
    """s = 0, c1 = c2 = 0: the zero-discord (and damping-invariant) family."""
    e3 = np.array([0.0, 0.0, 1.0])
    while True:
        r = rng.uniform(-1.0, 1.0, size=3)
        c3 = rng.uniform(-1.0, 1.0)
        lo = min(
            1.0 - np.linalg.norm(r + c3 * e3),
            1.0 - np.linalg.norm(r - c3 * e3),
        )
        if lo / 4.0 >= _MARGIN:
            return BlochParams(r, [0, 0, 0], [0, 0, c3])


def draw_s0_planar(rng: np.random.Generator) -> BlochParams:
    """s = 0, c3 = 0, c1 = c2 = c, random r."""
    while True:
        r = rng.uniform(-1.0, 1.0, size=3)
        c = rng.uniform(-1.0, 1.0)
        rho12_sq = r[0] ** 2 + r[1] ** 2
        alpha_plus = np.sqrt(
            2 * c * c + float(r @ r) + 2 * np.sqrt(c**4 + c * c * rho12_sq)
        )
        if (1.0 - alpha_plus) / 4.0 >= _MARGIN:
            return BlochParams(r, [0, 0, 0], [c, c, 0])


def draw_general_batch(
    rng: np.random.Generator, count: int, margin: float = _MARGIN
) -> list[BlochParams]:
    """Unrestricted physical draws by vectorized rejection on the smallest
    eigenvalue (the acceptance rate of the full parameter box is ~0.1%, so
    candidates are screened in batches)."""
    accepted: list[BlochParams] = []
    while len(accepted) < count:
        r = rng.uniform(-1.0, 1.0, size=(_BATCH, 3))
        s = rng.uniform(-1.0, 1.0, size=(_BATCH, 3))
        c = rng.uniform(-1.0, 1.0, size=(_BATCH, 3))
        rho = np.tile(np.eye(4, dtype=complex)[None], (_BATCH, 1, 1))
        for i in range(3):
            rho += r[:, i, None, None] * np.kron(PAULI[i], IDENTITY2)[None]
            rho += s[:, i, None, None] * np.kron(IDENTITY2, PAULI[i])[None]
            rho += c[:, i, None, None] * np.kron(PAULI[i], PAULI[i])[None]
        rho *= 0.25
        smallest = np.linalg.eigvalsh(rho)[:, 0]
        for idx in np.nonzero(smallest >= margin)[0]:
            if len(accepted) == count:
                break
            accepted.append(BlochParams(r[idx], s[idx], c[idx]))
    return accepted


def draw_general(rng: np.random.Generator, margin: float = _MARGIN) -> BlochParams:
    """Single unrestricted physical draw."""
    return draw_general_batch(rng, 1, margin)[0]
