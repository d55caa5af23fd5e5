"""Dual-level cascade: impedance force -> body wrench + attitude reference
-> PID torques -> actuator allocation. One call per 300 Hz control tick.

The thrust vector lives in the body Y-Z plane, so a demanded world force
with a component along body X is realized by rolling the attitude
reference about the longitudinal (Y) axis until the demand falls into the
reference frame's Y-Z plane. Yaw and pitch references are held constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import quat
from .allocation import AllocationResult, allocate, mix_forward
from .attitude import PidGains, pid_attitude
from .errors import UnattainableAttitudeError, ZeroThrustError
from .frames import TargetFrame, rotate_target_to_world, rotate_world_to_target, world_to_target
from .impedance import ImpedanceGains, TrajectoryPoint, impedance_force
from .vehicle import GRAVITY, ActuatorCommand, BodyWrench5, VehicleParams, VehicleState

DEFAULT_ROLL_LIMIT = np.pi / 4


@dataclass
class ControllerState:
    """Mutable per-loop controller memory.

    Holds the PID integrators, the last attitude error, the zero-order-held
    target frame from perception, and the latest contact-force estimate
    (target frame). The estimate is logged and kept for diagnostics; the
    impedance command itself must not cancel it, otherwise the closed loop
    would lose exactly the compliance the per-axis gains are meant to set.
    """

    target_frame: TargetFrame
    integral: np.ndarray = field(default_factory=lambda: np.zeros(3))
    prev_attitude_error: np.ndarray = field(default_factory=lambda: np.zeros(3))
    contact_force_t: np.ndarray = field(default_factory=lambda: np.zeros(3))
    perception_id: int = -1


@dataclass(frozen=True)
class ControllerConfig:
    """Gains and references for the full cascade."""

    impedance: ImpedanceGains
    pid: PidGains
    yaw_ref: float = 0.0
    roll_limit: float = DEFAULT_ROLL_LIMIT


class ForceDemand(NamedTuple):
    f_py: float
    f_pz: float
    attitude_ref: np.ndarray


def wrench_demand(f_target: np.ndarray, frame: TargetFrame, attitude: np.ndarray,
                  yaw_ref: float, roll_limit: float = DEFAULT_ROLL_LIMIT) -> ForceDemand:
    """Map a target-frame force demand to (f_py, f_pz) plus an attitude reference.

    The reference is yaw_ref about Z composed with a roll about body Y chosen
    so the demand, expressed in the referenced body frame, has zero X
    component; (f_py, f_pz) are its remaining components in that frame.

    Raises:
        UnattainableAttitudeError: required roll exceeds `roll_limit`.
    """
    f_world = rotate_target_to_world(f_target, frame)
    q_yaw = quat.about_z(yaw_ref)
    f_base = quat.to_matrix(q_yaw).T @ f_world

    roll = float(np.arctan2(f_base[0], f_base[2]))
    if abs(roll) > roll_limit:
        raise UnattainableAttitudeError(
            f"demand needs roll {roll:.4f} rad, limit is ±{roll_limit:.4f}")

    attitude_ref = quat.multiply(q_yaw, quat.about_y(roll))
    f_py = float(f_base[1])
    f_pz = float(np.hypot(f_base[0], f_base[2]))
    return ForceDemand(f_py, f_pz, attitude_ref)


@dataclass(frozen=True)
class CascadeStep:
    """Allocation outcome plus the intermediate quantities of one tick."""

    result: AllocationResult
    lam_t: np.ndarray
    lam_dot_t: np.ndarray
    force_t: np.ndarray
    attitude_ref: np.ndarray
    torque_b: np.ndarray


def step_cascade_detail(state: VehicleState, ctrl: ControllerState,
                        traj: TrajectoryPoint, cfg: ControllerConfig,
                        params: VehicleParams, dt: float) -> CascadeStep:
    frame = ctrl.target_frame
    lam = world_to_target(state.position_w, frame)
    lam_dot = rotate_world_to_target(state.velocity_w, frame)
    f_gravity_t = rotate_world_to_target(np.array([0.0, 0.0, -params.weight]), frame)

    # Contact force deliberately enters as zero: cancelling the measured
    # force would stiffen the loop to pure position tracking.
    f_target = impedance_force(lam, lam_dot, traj, np.zeros(3), f_gravity_t,
                               cfg.impedance, params.mass)

    demand = wrench_demand(f_target, frame, state.attitude, cfg.yaw_ref, cfg.roll_limit)
    torque = pid_attitude(state.attitude, state.omega_b, demand.attitude_ref,
                          cfg.pid, ctrl, dt)

    wrench = BodyWrench5(demand.f_py, demand.f_pz,
                         float(torque[0]), float(torque[1]), float(torque[2]))
    try:
        result = allocate(wrench, params)
    except ZeroThrustError:
        # Hover-safe floor: idle every rotor, relax the tilt toward zero.
        cmd = ActuatorCommand(np.full(4, params.thrust_min),
                              float(np.clip(0.0, params.tilt_min, params.tilt_max)))
        achieved = mix_forward(cmd.thrusts, cmd.tilt, cmd.tilt, params)
        result = AllocationResult(cmd, True, achieved.as_array() - wrench.as_array())

    return CascadeStep(result, lam, lam_dot, f_target, demand.attitude_ref, torque)


def step_cascade(state: VehicleState, ctrl: ControllerState, traj: TrajectoryPoint,
                 cfg: ControllerConfig, params: VehicleParams, dt: float) -> AllocationResult:
    """Run one full control tick; see step_cascade_detail for the internals."""
    return step_cascade_detail(state, ctrl, traj, cfg, params, dt).result
