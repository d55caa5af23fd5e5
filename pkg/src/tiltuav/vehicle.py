"""Vehicle parameters, state, and the actuated-effort value types.

Body axes: X lateral, Y longitudinal, Z up. The two tilting arms lie
fore/aft of the center at y = ±l2 with their tilt axes parallel to X, so
thrust always lives in the body Y-Z plane: F_b = [0, f_py, f_pz].
Rotor seats on the front (+Y) arm are 1 (x = -l1) and 4 (x = +l1); on the
rear arm 2 (x = -l1) and 3 (x = +l1). Rotors 1,3 spin with one handedness
and 2,4 with the other, which is what the counter-torque signs encode.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from . import quat
from .errors import ParameterError

GRAVITY = 9.81  # m/s^2, world Z up

QUAT_NORM_TOL = 1e-9


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class VehicleParams:
    """Mass, inertia, arm geometry, and actuator limits.

    l1: half distance between the two rotors on one tilting arm [m].
    l2: half distance between the two tilting axes [m].
    k:  rotor counter-torque coefficient (drag torque per unit thrust) [m];
        must be nonzero or the thrust-difference system becomes singular.
    """

    mass: float
    inertia: np.ndarray
    l1: float
    l2: float
    k: float
    thrust_min: float = 0.0
    thrust_max: float = 15.0
    tilt_min: float = -np.pi / 2
    tilt_max: float = np.pi / 2
    tilt_rate_max: float = 3.0

    def __post_init__(self):
        if not self.mass > 0.0:
            raise ParameterError(f"mass must be > 0, got {self.mass}")
        J = np.array(self.inertia, dtype=np.float64)
        if J.shape != (3, 3):
            raise ParameterError(f"inertia must be 3x3, got shape {J.shape}")
        if not np.allclose(J, J.T, rtol=0.0, atol=1e-12):
            raise ParameterError("inertia tensor must be symmetric")
        try:
            eigvals = np.linalg.eigvalsh(J)
        except np.linalg.LinAlgError as exc:
            raise ParameterError(f"inertia tensor is not diagonalizable: {exc}") from exc
        if eigvals.min() <= 0.0:
            raise ParameterError(f"inertia tensor must be positive definite, eigenvalues {eigvals}")
        if not self.l1 > 0.0:
            raise ParameterError(f"l1 must be > 0, got {self.l1}")
        if not self.l2 > 0.0:
            raise ParameterError(f"l2 must be > 0, got {self.l2}")
        if not self.k > 0.0:
            raise ParameterError(f"counter-torque coefficient k must be > 0, got {self.k}")
        if not 0.0 <= self.thrust_min < self.thrust_max:
            raise ParameterError(
                f"thrust limits must satisfy 0 <= min < max, got [{self.thrust_min}, {self.thrust_max}]")
        if not self.tilt_min < 0.0 < self.tilt_max:
            raise ParameterError(
                f"tilt limits must straddle 0, got [{self.tilt_min}, {self.tilt_max}]")
        if not self.tilt_rate_max > 0.0:
            raise ParameterError(f"tilt_rate_max must be > 0, got {self.tilt_rate_max}")
        object.__setattr__(self, "inertia", _readonly(J))

    @property
    def inertia_inv(self) -> np.ndarray:
        return np.linalg.inv(self.inertia)

    @property
    def weight(self) -> float:
        return self.mass * GRAVITY


@dataclass(frozen=True)
class VehicleState:
    """World-frame pose/twist plus the actuator-side state.

    attitude is a unit quaternion (body -> world), omega_b the body rates.
    `rotor_thrusts` is the lagged actual thrust of each rotor; None means
    "already at the first commanded value" (no spin-up transient).
    """

    position_w: np.ndarray
    velocity_w: np.ndarray
    attitude: np.ndarray
    omega_b: np.ndarray
    tilt: float = 0.0
    rotor_thrusts: np.ndarray | None = None

    def __post_init__(self):
        p = np.array(self.position_w, dtype=np.float64)
        v = np.array(self.velocity_w, dtype=np.float64)
        q = np.array(self.attitude, dtype=np.float64)
        w = np.array(self.omega_b, dtype=np.float64)
        if p.shape != (3,) or v.shape != (3,) or w.shape != (3,):
            raise ParameterError("position_w, velocity_w, omega_b must be 3-vectors")
        if q.shape != (4,):
            raise ParameterError(f"attitude must be a quaternion [w,x,y,z], got shape {q.shape}")
        if abs(np.linalg.norm(q) - 1.0) > QUAT_NORM_TOL:
            raise ParameterError(f"attitude quaternion norm {np.linalg.norm(q)} is not 1 within {QUAT_NORM_TOL}")
        object.__setattr__(self, "position_w", _readonly(p))
        object.__setattr__(self, "velocity_w", _readonly(v))
        object.__setattr__(self, "attitude", _readonly(q))
        object.__setattr__(self, "omega_b", _readonly(w))
        if self.rotor_thrusts is not None:
            f = np.array(self.rotor_thrusts, dtype=np.float64)
            if f.shape != (4,):
                raise ParameterError(f"rotor_thrusts must have 4 entries, got shape {f.shape}")
            object.__setattr__(self, "rotor_thrusts", _readonly(f))

    @property
    def rotation_bw(self) -> np.ndarray:
        """Rotation matrix body -> world."""
        return quat.to_matrix(self.attitude)

    def evolve(self, **changes) -> "VehicleState":
        return replace(self, **changes)


@dataclass(frozen=True)
class BodyWrench5:
    """The five controllable body-frame efforts (no body-X force)."""

    f_py: float
    f_pz: float
    tau_x: float
    tau_y: float
    tau_z: float

    def __post_init__(self):
        vals = (self.f_py, self.f_pz, self.tau_x, self.tau_y, self.tau_z)
        if not all(np.isfinite(vals)):
            raise ParameterError(f"wrench components must be finite, got {vals}")

    def as_array(self) -> np.ndarray:
        return np.array([self.f_py, self.f_pz, self.tau_x, self.tau_y, self.tau_z])

    @staticmethod
    def from_array(a: np.ndarray) -> "BodyWrench5":
        return BodyWrench5(*(float(x) for x in a))

    @property
    def thrust_magnitude(self) -> float:
        return float(np.hypot(self.f_py, self.f_pz))


@dataclass(frozen=True)
class ActuatorCommand:
    """Four rotor thrusts plus the common arm tilt angle (front = rear)."""

    thrusts: np.ndarray
    tilt: float

    def __post_init__(self):
        f = np.array(self.thrusts, dtype=np.float64)
        if f.shape != (4,):
            raise ParameterError(f"thrusts must have 4 entries, got shape {f.shape}")
        if not (np.all(np.isfinite(f)) and np.isfinite(self.tilt)):
            raise ParameterError("actuator command must be finite")
        object.__setattr__(self, "thrusts", _readonly(f))

    def within_limits(self, params: VehicleParams, tol: float = 1e-9) -> bool:
        return bool(
            np.all(self.thrusts >= params.thrust_min - tol)
            and np.all(self.thrusts <= params.thrust_max + tol)
            and params.tilt_min - tol <= self.tilt <= params.tilt_max + tol
        )

    def clamped(self, params: VehicleParams) -> "ActuatorCommand":
        return ActuatorCommand(
            np.clip(self.thrusts, params.thrust_min, params.thrust_max),
            float(np.clip(self.tilt, params.tilt_min, params.tilt_max)),
        )
