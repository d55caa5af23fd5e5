"""Low-level attitude loop: per-axis PID on the quaternion attitude error.

Torque law: tau = Kp*e + Ki*∫e dt - Kd*omega_b, where e is the rotation
vector of the error quaternion q_current^-1 ⊗ q_reference (expressed in the
body frame). Rate damping acts on the measured body rate, not on a
differentiated error, so reference steps do not kick the derivative term.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quat
from .errors import ParameterError


@dataclass(frozen=True)
class PidGains:
    """Per-axis (x, y, z) proportional/integral/derivative torque gains and
    the symmetric clamp applied to each integrator accumulator."""

    kp: np.ndarray
    ki: np.ndarray
    kd: np.ndarray
    integrator_clamp: float = 0.5

    def __post_init__(self):
        for name in ("kp", "ki", "kd"):
            g = np.array(getattr(self, name), dtype=np.float64)
            if g.shape != (3,):
                raise ParameterError(f"PidGains.{name} must be a 3-vector")
            if np.any(g < 0.0):
                raise ParameterError(f"PidGains.{name} must be >= 0")
            g.setflags(write=False)
            object.__setattr__(self, name, g)
        if not self.integrator_clamp > 0.0:
            raise ParameterError(f"integrator_clamp must be > 0, got {self.integrator_clamp}")


def attitude_error(attitude: np.ndarray, attitude_ref: np.ndarray) -> np.ndarray:
    """Body-frame rotation vector taking `attitude` to `attitude_ref`."""
    q_err = quat.multiply(quat.conjugate(attitude), attitude_ref)
    return quat.to_rotvec(q_err)


def pid_attitude(attitude: np.ndarray, omega_b: np.ndarray,
                 attitude_ref: np.ndarray, gains: PidGains,
                 state, dt: float) -> np.ndarray:
    """Body-frame torque command for one control tick.

    Mutates `state` (ControllerState): integrates the attitude error into
    the clamped accumulator and records the error. Deterministic given the
    state contents.
    """
    if not dt > 0.0:
        raise ParameterError(f"dt must be > 0, got {dt}")
    e = attitude_error(attitude, attitude_ref)
    clamp = gains.integrator_clamp
    state.integral = np.clip(state.integral + e * dt, -clamp, clamp)
    state.prev_attitude_error = e
    return gains.kp * e + gains.ki * state.integral - gains.kd * np.asarray(omega_b, dtype=np.float64)
