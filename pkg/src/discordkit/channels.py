"""Phase-damping channel and discord dynamics under it.

The channel acts symmetrically on both qubits with one decoherence rate
gamma.  Two equivalent damping routes are implemented and cross-checked:
the matrix route (Kraus operators applied to the density matrix) and the
parameter route (Bloch coefficients rescaled in place), the latter being
the fast default for dynamics.  Closed forms cover the damping gap of the
Werner state and of the in-plane correlation family, plus the family that
is exactly damping-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .density import (
    BlochParams,
    build_state,
    check_density_matrix,
    entropic_h,
    hermitian_eigen,
    _xlog2,
)
from .discord import (
    METHOD_NUMERIC,
    DiscordReport,
    _discord_cfg,
    discord_numeric,
    discord_s0_planar,
)
from .errors import DomainError, RangeError
from .measurement import damped_correlation_objective
from .sphereopt import SphereOptConfig, maximize_on_sphere


@dataclass(frozen=True)
class PhaseDamping:
    """Phase-damping channel with decoherence rate gamma in [0, 1]."""

    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise RangeError(f"gamma = {self.gamma!r} outside [0, 1]")


class KrausPair(NamedTuple):
    k1: np.ndarray
    k2: np.ndarray


def kraus_pair(channel: PhaseDamping) -> KrausPair:
    """Kraus operators of single-qubit phase damping:

        K1 = |0><0| + sqrt(1-gamma) |1><1|,   K2 = sqrt(gamma) |1><1|

    They satisfy K1+ K1 + K2+ K2 = I exactly.
    """
    g = channel.gamma
    k1 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - g)]], dtype=complex)
    k2 = np.array([[0.0, 0.0], [0.0, np.sqrt(g)]], dtype=complex)
    return KrausPair(k1, k2)


def apply_kraus(rho: np.ndarray, channel: PhaseDamping) -> np.ndarray:
    """Matrix-route damping: sum_{i,j} (K_i (x) K_j) rho (K_i (x) K_j)+.

    Trace-preserving and positivity-preserving; the input is gated through
    the density-matrix checks first.
    """
    check_density_matrix(np.asarray(rho))
    ops = kraus_pair(channel)
    out = np.zeros((4, 4), dtype=complex)
    for ki in ops:
        for kj in ops:
            big = np.kron(ki, kj)
            out += big @ rho @ big.conj().T
    return out


def damp_bloch(params: BlochParams, channel: PhaseDamping) -> BlochParams:
    """Parameter-route damping: transverse Bloch components scale by
    sqrt(1-gamma), transverse correlations by (1-gamma), third components
    are untouched."""
    f = np.sqrt(1.0 - channel.gamma)
    scale_v = np.array([f, f, 1.0])
    scale_c = np.array([f * f, f * f, 1.0])
    return BlochParams(params.r * scale_v, params.s * scale_v, params.c * scale_c)


def _damped_marginal_norms(params: BlochParams, gamma: float) -> tuple[float, float]:
    r, s = params.r, params.s
    rn = np.sqrt(max(float(r @ r) - gamma * (r[0] ** 2 + r[1] ** 2), 0.0))
    sn = np.sqrt(max(float(s @ s) - gamma * (s[0] ** 2 + s[1] ** 2), 0.0))
    return rn, sn


def damped_mutual_information(params: BlochParams, channel: PhaseDamping) -> float:
    """Mutual information of the damped state via the expanded form

        I = 2 - H_0(sqrt(|r|^2 - g r1^2 - g r2^2))
              - H_0(sqrt(|s|^2 - g s1^2 - g s2^2)) + sum_i L_i log2 L_i

    with L_i the damped eigenvalues.  Matches the definitional
    entropy-based value on the damped parameters within 1e-10.
    """
    rn, sn = _damped_marginal_norms(params, channel.gamma)
    lam = hermitian_eigen(build_state(damp_bloch(params, channel))).eigenvalues
    lam = np.clip(lam, 0.0, None)
    return float(2.0 - entropic_h(0.0, rn) - entropic_h(0.0, sn) + np.sum(_xlog2(lam)))


def damped_discord(
    params: BlochParams,
    channel: PhaseDamping,
    cfg: SphereOptConfig | None = None,
) -> DiscordReport:
    """Discord of the damped state, computed from the undamped parameters
    through the damped correlation objective.

    Equals ``discord_numeric(damp_bloch(params, channel))`` within 1e-10;
    the two paths share no damping code, so their agreement cross-checks
    both.
    """
    gamma = channel.gamma
    eff = _discord_cfg(cfg)
    res = maximize_on_sphere(
        lambda z: damped_correlation_objective(params, gamma, z), eff
    )
    rn, _ = _damped_marginal_norms(params, gamma)
    mutual = damped_mutual_information(params, channel)
    classical = -entropic_h(0.0, rn) + res.value
    spectrum = hermitian_eigen(build_state(damp_bloch(params, channel))).eigenvalues
    return DiscordReport(
        mutual_info=mutual,
        classical_corr=classical,
        discord=mutual - classical,
        argmax_axis=res.axis,
        spectrum=spectrum,
        method=METHOD_NUMERIC,
    )


def werner_damped_gap(c: float, gamma: float) -> float:
    """Damping gap T(c, gamma) = Q(rho) - Q(rho~) of the Werner state with
    correlation diagonal (c, c, c), c in [-1, 1/3]:

        T = [ (1+c) log2(1+c) + (1-3c) log2(1-3c)
              - (1-3c+2cg) log2(1-3c+2cg) - (1+c-2cg) log2(1+c-2cg) ] / 4

    Nonnegative, zero at gamma = 0 and nondecreasing in gamma.
    """
    if not -1.0 - 1e-12 <= c <= 1.0 / 3.0 + 1e-12:
        raise DomainError(f"Werner parameter c = {c!r} outside [-1, 1/3]")
    g = PhaseDamping(gamma).gamma
    terms = np.array(
        [1.0 + c, 1.0 - 3.0 * c, 1.0 - 3.0 * c + 2.0 * c * g, 1.0 + c - 2.0 * c * g]
    )
    vals = _xlog2(terms)
    return 0.25 * float(vals[0] + vals[1] - vals[2] - vals[3])


def werner_damped_gap_dgamma(c: float, gamma: float) -> float:
    """Rate of change of the Werner damping gap:

        dT/dgamma = (c/2) log2( (1+c-2cg) / (1-3c+2cg) )
    """
    if not -1.0 - 1e-12 <= c <= 1.0 / 3.0 + 1e-12:
        raise DomainError(f"Werner parameter c = {c!r} outside [-1, 1/3]")
    g = PhaseDamping(gamma).gamma
    num = 1.0 + c - 2.0 * c * g
    den = 1.0 - 3.0 * c + 2.0 * c * g
    if num <= 0.0 or den <= 0.0:
        raise DomainError("gap derivative undefined at the PSD boundary")
    return 0.5 * c * float(np.log2(num / den))


def planar_damped_gap(r, c: float, gamma: float) -> float:
    """Damping gap of the in-plane family ``s = 0``, ``c3 = 0``,
    ``c1 = c2 = c``.

    Damping keeps the family (c scales by 1-gamma, the transverse r
    components by sqrt(1-gamma)), so the gap is the difference of the two
    closed forms.  Expanded, the damped half uses

        m+- = sqrt(2c^2(1-g)^2 + (r1^2+r2^2)(1-g) + r3^2 +- 2 w),
        w   = sqrt(c^4 (1-g)^4 + c^2 (r1^2+r2^2) (1-g)^3)

    and the damped analog of the b terms with c -> (1-g)c and transverse
    r components scaled by sqrt(1-g).
    """
    g = PhaseDamping(gamma).gamma
    r = np.asarray(r, dtype=float)
    f = np.sqrt(1.0 - g)
    undamped = discord_s0_planar(r, c)
    damped = discord_s0_planar(
        np.array([f * r[0], f * r[1], r[2]]), (1.0 - g) * c
    )
    return undamped - damped


def gamma_sweep(
    params: BlochParams,
    gammas,
    cfg: SphereOptConfig | None = None,
) -> list[tuple[float, float, float]]:
    """Damped discord and damping gap on a grid of rates.

    ``gammas`` must be strictly increasing inside [0, 1].  Returns
    (gamma, Q_damped, Q_gap) rows where Q_gap = Q(rho) - Q(rho~).
    """
    grid = np.asarray(gammas, dtype=float).reshape(-1)
    if grid.size == 0:
        raise RangeError("gamma grid is empty")
    if grid.min() < 0.0 or grid.max() > 1.0:
        raise RangeError("gamma grid must lie inside [0, 1]")
    if grid.size > 1 and np.any(np.diff(grid) <= 0.0):
        raise RangeError("gamma grid must be strictly increasing")
    q0 = discord_numeric(params, cfg).discord
    rows = []
    for g in grid:
        qd = damped_discord(params, PhaseDamping(float(g)), cfg).discord
        rows.append((float(g), qd, q0 - qd))
    return rows
