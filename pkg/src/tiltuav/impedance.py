"""Selective impedance law: target-frame force from tracking error.

Per-axis virtual damping C and stiffness K shape the closed-loop relation
between position error and contact force; axes meant to regulate force are
left soft (small or zero K) while position-tracking axes are stiff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError


@dataclass(frozen=True)
class ImpedanceGains:
    """Diagonal damping c = (Cx, Cy, Cz) [N·s/m] and stiffness
    k = (Kx, Ky, Kz) [N/m] along the target-frame axes."""

    c: np.ndarray
    k: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=np.float64)
        k = np.array(self.k, dtype=np.float64)
        if c.shape != (3,) or k.shape != (3,):
            raise ParameterError("impedance gains c and k must be 3-vectors")
        if np.any(c < 0.0) or np.any(k < 0.0):
            raise ParameterError("impedance gains must be >= 0")
        dead = (c == 0.0) & (k == 0.0)
        if np.any(dead):
            axes = "".join(ax for ax, d in zip("xyz", dead) if d)
            raise ParameterError(f"axis {axes}: damping and stiffness cannot both be zero")
        c.setflags(write=False)
        k.setflags(write=False)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "k", k)

    @property
    def damping_matrix(self) -> np.ndarray:
        return np.diag(self.c)

    @property
    def stiffness_matrix(self) -> np.ndarray:
        return np.diag(self.k)


@dataclass(frozen=True)
class TrajectoryPoint:
    """Desired target-frame position, velocity, and acceleration at time t."""

    position: np.ndarray
    velocity: np.ndarray
    acceleration: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        for name in ("position", "velocity", "acceleration"):
            a = np.array(getattr(self, name), dtype=np.float64)
            if a.shape != (3,) or not np.all(np.isfinite(a)):
                raise ParameterError(f"TrajectoryPoint.{name} must be a finite 3-vector")
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    @staticmethod
    def hold(position: np.ndarray, t: float = 0.0) -> "TrajectoryPoint":
        return TrajectoryPoint(position, np.zeros(3), np.zeros(3), t)


def impedance_force(lam: np.ndarray, lam_dot: np.ndarray, traj: TrajectoryPoint,
                    f_contact: np.ndarray, f_gravity: np.ndarray,
                    gains: ImpedanceGains, mass: float) -> np.ndarray:
    """Target-frame thrust-force command.

        F_p = -F_g - F_c + m * accel_d - C (lam_dot - vel_d) - K (lam - pos_d)

    All vectors are expressed in the target frame. Pure function.
    """
    if not mass > 0.0:
        raise ParameterError(f"mass must be > 0, got {mass}")
    e = np.asarray(lam, dtype=np.float64) - traj.position
    e_dot = np.asarray(lam_dot, dtype=np.float64) - traj.velocity
    return (
        -np.asarray(f_gravity, dtype=np.float64)
        - np.asarray(f_contact, dtype=np.float64)
        + mass * traj.acceleration
        - gains.c * e_dot
        - gains.k * e
    )
