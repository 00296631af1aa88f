"""Von Neumann measurements on party b and the correlation objectives.

A rank-1 projective measurement {B_0, B_1} on the second qubit is
parametrized by a unit axis z on the Bloch sphere (the image of an SU(2)
element).  Measuring a family state collapses party a onto a two-branch
ensemble whose weighted entropy is the conditional entropy; the classical
correlation is its minimum over z, reached through the scalar objective
evaluated here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density import BlochParams, entropic_h, qubit_state, von_neumann_entropy
from .errors import DegenerateBranchError, NormError, RangeError

_BRANCH_FLOOR = 1e-12
_QUAT_NORM_TOL = 1e-9
_AXIS_NORM_TOL = 1e-9


@dataclass(frozen=True)
class UnitQuaternion:
    """Real quadruple (t, y1, y2, y3) with t^2 + y1^2 + y2^2 + y3^2 = 1,
    representing V = t I + i (y1 s1 + y2 s2 + y3 s3) in SU(2)."""

    t: float
    y1: float
    y2: float
    y3: float

    @property
    def norm_squared(self) -> float:
        return self.t**2 + self.y1**2 + self.y2**2 + self.y3**2


def axis_from_su2(q: UnitQuaternion) -> np.ndarray:
    """Measurement axis induced by an SU(2) element.

    z1 = 2(-t y2 + y1 y3), z2 = 2(t y1 + y2 y3), z3 = t^2 + y3^2 - y1^2 - y2^2.
    The output is a unit vector whenever the input is unit norm.

    Raises
    ------
    NormError
        If the quaternion norm deviates from 1 by more than 1e-9.
    """
    if abs(q.norm_squared - 1.0) > _QUAT_NORM_TOL:
        raise NormError(f"quaternion norm^2 = {q.norm_squared!r} deviates from 1")
    z = np.array(
        [
            2.0 * (-q.t * q.y2 + q.y1 * q.y3),
            2.0 * (q.t * q.y1 + q.y2 * q.y3),
            q.t**2 + q.y3**2 - q.y1**2 - q.y2**2,
        ]
    )
    return z


@dataclass(frozen=True)
class Ensemble:
    """Post-measurement ensemble: branch probabilities and 2x2 states of
    party a, in branch order k = 0, 1."""

    probabilities: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        self.probabilities.setflags(write=False)
        self.states.setflags(write=False)


def _check_axis(z: np.ndarray) -> None:
    norms = np.linalg.norm(z, axis=-1)
    dev = float(np.max(np.abs(norms - 1.0)))
    if dev > _AXIS_NORM_TOL:
        raise NormError(f"measurement axis norm deviates from 1 by {dev:.3e}")


def _branch_data(params: BlochParams, axis: np.ndarray):
    """Probabilities and unnormalized Bloch vectors of the two branches."""
    axis = np.asarray(axis, dtype=float)
    _check_axis(axis)
    w = float(params.s @ axis)
    probs = np.array([(1.0 + w) / 2.0, (1.0 - w) / 2.0])
    vecs = np.stack([params.r + params.c * axis, params.r - params.c * axis])
    return probs, vecs


def post_measurement_ensemble(params: BlochParams, axis: np.ndarray) -> Ensemble:
    """Collapse party a by measuring party b along ``axis``.

    Branch k occurs with probability p_k = (1 + (-1)^k s.z)/2 and leaves
    party a in the state with Bloch vector (r + (-1)^k c*z) / (2 p_k),
    where c*z is the component-wise product.

    Raises
    ------
    DegenerateBranchError
        If a branch probability falls below 1e-12; its conditional state
        is undefined.  (Entropy sums simply drop such branches, see
        :func:`conditional_entropy`.)
    """
    probs, vecs = _branch_data(params, axis)
    if probs.min() < _BRANCH_FLOOR:
        raise DegenerateBranchError(
            f"branch probability {probs.min():.3e} below {_BRANCH_FLOOR}"
        )
    states = np.stack([qubit_state(vecs[k] / (2.0 * probs[k])) for k in range(2)])
    return Ensemble(probs, states)


def conditional_entropy(params: BlochParams, axis: np.ndarray) -> float:
    """Measurement-conditioned entropy sum_k p_k S(rho_k), in bits.

    Branches with probability below 1e-12 contribute zero (x log x -> 0),
    so the value is defined for every axis.
    """
    probs, vecs = _branch_data(params, axis)
    total = 0.0
    for k in range(2):
        if probs[k] < _BRANCH_FLOOR:
            continue
        total += probs[k] * von_neumann_entropy(qubit_state(vecs[k] / (2.0 * probs[k])))
    return total


def _axes_2d(axis) -> tuple[np.ndarray, bool]:
    z = np.asarray(axis, dtype=float)
    _check_axis(z)
    if z.ndim == 1:
        return z[None, :], True
    return z, False


def correlation_objective(params: BlochParams, axis):
    """Objective whose sphere maximum gives the classical correlation.

    For a single axis z (or a batch of shape (n, 3)):

        G(z) = -H_0(s.z) + H_{s.z}(|r + c*z|)/2 + H_{-s.z}(|r - c*z|)/2

    with c*z the component-wise product.  G(z) = 1 - conditional_entropy
    and G(-z) = G(z).
    """
    z, single = _axes_2d(axis)
    w = z @ params.s
    x_plus = np.linalg.norm(params.r[None, :] + params.c[None, :] * z, axis=1)
    x_minus = np.linalg.norm(params.r[None, :] - params.c[None, :] * z, axis=1)
    g = (
        -entropic_h(0.0, w)
        + 0.5 * entropic_h(w, x_plus)
        + 0.5 * entropic_h(-w, x_minus)
    )
    return float(g[0]) if single else g


def damped_correlation_objective(params: BlochParams, gamma: float, axis):
    """Correlation objective of the phase-damped state, evaluated from the
    undamped parameters.

    With f = sqrt(1-gamma):

        eps_+ = f (s1 z1 + s2 z2) + s3 z3,   eps_- = -eps_+
        d_+-  = sqrt( (1-gamma) [ (r1 +- f c1 z1)^2 + (r2 +- f c2 z2)^2 ]
                      + (r3 +- c3 z3)^2 )
        G~(z) = -H_0(eps_+) + H_{eps_+}(d_+)/2 + H_{eps_-}(d_-)/2

    At gamma = 0 this coincides with :func:`correlation_objective`.
    """
    if not 0.0 <= gamma <= 1.0:
        raise RangeError(f"gamma = {gamma!r} outside [0, 1]")
    z, single = _axes_2d(axis)
    f = np.sqrt(1.0 - gamma)
    r, s, c = params.r, params.s, params.c
    eps = f * (s[0] * z[:, 0] + s[1] * z[:, 1]) + s[2] * z[:, 2]
    d_plus = np.sqrt(
        (1.0 - gamma)
        * ((r[0] + f * c[0] * z[:, 0]) ** 2 + (r[1] + f * c[1] * z[:, 1]) ** 2)
        + (r[2] + c[2] * z[:, 2]) ** 2
    )
    d_minus = np.sqrt(
        (1.0 - gamma)
        * ((r[0] - f * c[0] * z[:, 0]) ** 2 + (r[1] - f * c[1] * z[:, 1]) ** 2)
        + (r[2] - c[2] * z[:, 2]) ** 2
    )
    g = (
        -entropic_h(0.0, eps)
        + 0.5 * entropic_h(eps, d_plus)
        + 0.5 * entropic_h(-eps, d_minus)
    )
    return float(g[0]) if single else g
