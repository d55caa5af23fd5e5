"""Thrust mixing and its inverse (control allocation).

Forward mixing maps four rotor thrusts and the two arm tilt angles to the
five achievable body-frame efforts. The inverse solves rotor thrusts and a
common tilt angle from a requested wrench:

    f_py = (F1+F4) sin(a) + (F2+F3) sin(b)
    f_pz = (F1+F4) cos(a) + (F2+F3) cos(b)
    tau_x = (F1+F4) l2 cos(a) - (F2+F3) l2 cos(b)
    tau_y = (F1-F4)(cos(a) l1 + sin(a) k) + (F2-F3)(cos(b) l1 - sin(b) k)
    tau_z = (F4-F1)(sin(a) l1 - cos(a) k) + (F3-F2)(sin(b) l1 + cos(b) k)

With a = b the sums and differences of the per-arm thrusts decouple: the
tilt angle and total thrust come from (f_py, f_pz), the arm split from
tau_x, and the two in-arm differences from the 2x2 tau_y/tau_z system,
whose determinant is the constant -2*l1*k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import TiltSingularityError, ZeroThrustError
from .vehicle import ActuatorCommand, BodyWrench5, VehicleParams

COS_TILT_SINGULAR = 1e-6


def mix_forward(thrusts: np.ndarray, alpha: float, beta: float,
                params: VehicleParams) -> BodyWrench5:
    """Body-frame wrench produced by rotor thrusts F1..F4 at tilts alpha (front
    arm) and beta (rear arm). Pure function; thrusts are magnitudes >= 0."""
    f1, f2, f3, f4 = (float(x) for x in thrusts)
    sa, ca = np.sin(alpha), np.cos(alpha)
    sb, cb = np.sin(beta), np.cos(beta)
    l1, l2, k = params.l1, params.l2, params.k

    f_py = (f1 + f4) * sa + (f2 + f3) * sb
    f_pz = (f1 + f4) * ca + (f2 + f3) * cb
    tau_x = (f1 + f4) * l2 * ca - (f2 + f3) * l2 * cb
    tau_y = (f1 - f4) * (ca * l1 + sa * k) + (f2 - f3) * (cb * l1 - sb * k)
    tau_z = (f4 - f1) * (sa * l1 - ca * k) + (f3 - f2) * (sb * l1 + cb * k)
    return BodyWrench5(f_py, f_pz, tau_x, tau_y, tau_z)


def diff_system_matrix(alpha: float, params: VehicleParams) -> np.ndarray:
    """2x2 matrix relating the in-arm thrust differences (F1-F4, F2-F3) to
    (tau_y, tau_z) at common tilt alpha. Its determinant is -2*l1*k."""
    sa, ca = np.sin(alpha), np.cos(alpha)
    l1, k = params.l1, params.k
    return np.array([
        [ca * l1 + sa * k, ca * l1 - sa * k],
        [-(sa * l1 - ca * k), -(sa * l1 + ca * k)],
    ])


@dataclass(frozen=True)
class AllocationResult:
    """Outcome of inverse allocation.

    `residual` is mix_forward(command) - requested wrench (5 components);
    exactly zero whenever nothing was clamped.
    """

    command: ActuatorCommand
    saturated: bool
    residual: np.ndarray = field(default_factory=lambda: np.zeros(5))

    def __post_init__(self):
        r = np.array(self.residual, dtype=np.float64)
        r.setflags(write=False)
        object.__setattr__(self, "residual", r)


def _finish(command: ActuatorCommand, w: BodyWrench5, saturated: bool,
            params: VehicleParams, alpha: float) -> AllocationResult:
    if not saturated:
        return AllocationResult(command, False, np.zeros(5))
    achieved = mix_forward(command.thrusts, command.tilt, command.tilt, params)
    return AllocationResult(command, True, achieved.as_array() - w.as_array())


def allocate(w: BodyWrench5, params: VehicleParams) -> AllocationResult:
    """Solve rotor thrusts and common tilt realizing wrench `w`.

    Raises:
        ZeroThrustError: (f_py, f_pz) == (0, 0), tilt undefined.
        TiltSingularityError: roll torque requested while the thrust vector
            is horizontal (|cos(tilt)| < 1e-6), where tau_x is unachievable.

    Out-of-range thrusts or tilt are clamped and flagged via `saturated`,
    never silently zeroed; the gap is reported in `residual`.
    """
    s_total = w.thrust_magnitude
    if s_total == 0.0:
        raise ZeroThrustError("requested wrench has zero total thrust")
    alpha = float(np.arctan2(w.f_py, w.f_pz))
    ca = np.cos(alpha)

    # Arm sums: a + b = S and (a - b) * l2 * cos(alpha) = tau_x.
    if abs(ca) < COS_TILT_SINGULAR:
        if w.tau_x != 0.0:
            raise TiltSingularityError(
                f"roll torque {w.tau_x} unachievable at horizontal thrust (tilt {alpha:.6f})")
        diff = 0.0  # indeterminate split; load the arms equally
    else:
        diff = w.tau_x / (params.l2 * ca)
    arm_front = 0.5 * (s_total + diff)   # F1 + F4
    arm_rear = 0.5 * (s_total - diff)    # F2 + F3

    # In-arm differences from the tau_y / tau_z rows; det = -2*l1*k != 0.
    m = diff_system_matrix(alpha, params)
    det = -2.0 * params.l1 * params.k
    d_front = (m[1, 1] * w.tau_y - m[0, 1] * w.tau_z) / det   # F1 - F4
    d_rear = (-m[1, 0] * w.tau_y + m[0, 0] * w.tau_z) / det   # F2 - F3

    thrusts = np.array([
        0.5 * (arm_front + d_front),
        0.5 * (arm_rear + d_rear),
        0.5 * (arm_rear - d_rear),
        0.5 * (arm_front - d_front),
    ])

    raw = ActuatorCommand(thrusts, alpha)
    saturated = not raw.within_limits(params, tol=0.0)
    command = raw.clamped(params) if saturated else raw
    return _finish(command, w, saturated, params, alpha)


def achievable(w: BodyWrench5, params: VehicleParams) -> bool:
    """True iff `w` allocates without error and without saturation."""
    try:
        return not allocate(w, params).saturated
    except (ZeroThrustError, TiltSingularityError):
        return False
