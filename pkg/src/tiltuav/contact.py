"""Unilateral spring-damper contact between the end-effector tip and the
workpiece plane. No adhesion, no friction: the force is purely along the
outward normal and never negative."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import quat
from .errors import ParameterError
from .vehicle import VehicleState


@dataclass(frozen=True)
class WorkpieceModel:
    """Plane (point + outward unit normal), penalty stiffness/damping, and
    the end-effector tip position in the body frame."""

    plane_point: np.ndarray
    plane_normal: np.ndarray
    stiffness: float
    damping: float = 0.0
    tip_offset_b: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        p = np.array(self.plane_point, dtype=np.float64)
        n = np.array(self.plane_normal, dtype=np.float64)
        tip = np.array(self.tip_offset_b, dtype=np.float64)
        if p.shape != (3,) or n.shape != (3,) or tip.shape != (3,):
            raise ParameterError("workpiece plane point, normal and tip offset must be 3-vectors")
        n_len = np.linalg.norm(n)
        if abs(n_len - 1.0) > 1e-9:
            raise ParameterError(f"plane normal must be unit length, |n| = {n_len}")
        if not self.stiffness > 0.0:
            raise ParameterError(f"workpiece stiffness must be > 0, got {self.stiffness}")
        if self.damping < 0.0:
            raise ParameterError(f"workpiece damping must be >= 0, got {self.damping}")
        for name, a in (("plane_point", p), ("plane_normal", n), ("tip_offset_b", tip)):
            a.setflags(write=False)
            object.__setattr__(self, name, a)


def tip_position_w(state: VehicleState, wp: WorkpieceModel) -> np.ndarray:
    return state.position_w + quat.rotate(state.attitude, wp.tip_offset_b)


def contact_force(state: VehicleState, wp: WorkpieceModel) -> np.ndarray:
    """World-frame contact force on the vehicle, zero out of contact.

    Penetration p is the depth of the tip behind the plane. The damper
    resists penetration growth only, so the total force k_w*p + c_w*max(0, ṗ)
    stays non-negative and the surface never pulls.
    """
    return _contact_force_raw(state.position_w, state.velocity_w,
                              quat.to_matrix(state.attitude), state.omega_b, wp)


def _contact_force_raw(position_w: np.ndarray, velocity_w: np.ndarray,
                       rot_bw: np.ndarray, omega_b: np.ndarray,
                       wp: WorkpieceModel) -> np.ndarray:
    n = wp.plane_normal
    tip_w = position_w + rot_bw @ wp.tip_offset_b
    signed_dist = float(np.dot(tip_w - wp.plane_point, n))
    if signed_dist >= 0.0:
        return np.zeros(3)
    penetration = -signed_dist
    tip_vel_w = velocity_w + rot_bw @ np.cross(omega_b, wp.tip_offset_b)
    penetration_rate = -float(np.dot(tip_vel_w, n))
    magnitude = wp.stiffness * penetration + wp.damping * max(0.0, penetration_rate)
    return magnitude * n
