"""Reference frames: rigid transforms and the workpiece target frame.

The target frame is anchored at the target point with its Z axis along the
outward surface normal; positions of the vehicle expressed in it are the
quantities the high-level controller regulates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateFrameError, ParameterError

ORTHONORMAL_TOL = 1e-12
PARALLEL_TOL = 1e-8


def _check_rotation(rotation: np.ndarray, what: str) -> np.ndarray:
    R = np.array(rotation, dtype=np.float64)
    if R.shape != (3, 3):
        raise ParameterError(f"{what}: rotation must be 3x3, got {R.shape}")
    if not np.allclose(R.T @ R, np.eye(3), rtol=0.0, atol=ORTHONORMAL_TOL):
        raise ParameterError(f"{what}: rotation is not orthonormal within {ORTHONORMAL_TOL}")
    if np.linalg.det(R) < 0.0:
        raise ParameterError(f"{what}: rotation is left-handed (det < 0)")
    R.setflags(write=False)
    return R


def _readonly_vec3(v, what: str) -> np.ndarray:
    a = np.array(v, dtype=np.float64)
    if a.shape != (3,):
        raise ParameterError(f"{what}: expected a 3-vector, got shape {a.shape}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FrameTransform:
    """Rigid transform: x_parent = rotation @ x_child + translation."""

    rotation: np.ndarray
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "rotation", _check_rotation(self.rotation, "FrameTransform"))
        object.__setattr__(self, "translation", _readonly_vec3(self.translation, "FrameTransform.translation"))

    def apply(self, p: np.ndarray) -> np.ndarray:
        return self.rotation @ np.asarray(p, dtype=np.float64) + self.translation

    def inverse(self) -> "FrameTransform":
        R = self.rotation.T
        return FrameTransform(R, -(R @ self.translation))


@dataclass(frozen=True)
class TargetFrame:
    """Orthonormal frame at the workpiece target point.

    Columns of `rotation` are the frame's X, Y, Z axes expressed in world
    coordinates (so `rotation` maps target-frame vectors to world).
    """

    origin_w: np.ndarray
    rotation: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "origin_w", _readonly_vec3(self.origin_w, "TargetFrame.origin_w"))
        object.__setattr__(self, "rotation", _check_rotation(self.rotation, "TargetFrame"))

    @property
    def x_axis_w(self) -> np.ndarray:
        return self.rotation[:, 0]

    @property
    def y_axis_w(self) -> np.ndarray:
        return self.rotation[:, 1]

    @property
    def z_axis_w(self) -> np.ndarray:
        return self.rotation[:, 2]


def make_target_frame(origin: np.ndarray, surface_normal: np.ndarray,
                      tangent_hint: np.ndarray = (1.0, 0.0, 0.0)) -> TargetFrame:
    """Build a right-handed frame with Z along the surface normal.

    The X axis is the Gram-Schmidt projection of `tangent_hint` onto the
    surface plane; Y completes the right-handed triad.

    Raises:
        DegenerateFrameError: zero normal, or hint parallel to the normal.
    """
    origin = np.asarray(origin, dtype=np.float64)
    n = np.asarray(surface_normal, dtype=np.float64)
    hint = np.asarray(tangent_hint, dtype=np.float64)

    n_norm = np.linalg.norm(n)
    if n_norm < PARALLEL_TOL:
        raise DegenerateFrameError("surface_normal has (near-)zero length")
    z = n / n_norm

    h_norm = np.linalg.norm(hint)
    if h_norm < PARALLEL_TOL:
        raise DegenerateFrameError("tangent_hint has (near-)zero length")
    x = hint - np.dot(hint, z) * z
    x_norm = np.linalg.norm(x)
    if x_norm < PARALLEL_TOL * h_norm:
        raise DegenerateFrameError("tangent_hint is parallel to the surface normal")
    x = x / x_norm
    y = np.cross(z, x)

    return TargetFrame(origin, np.column_stack((x, y, z)))


def world_to_target(p_w: np.ndarray, frame: TargetFrame) -> np.ndarray:
    """World point -> target-frame coordinates."""
    return frame.rotation.T @ (np.asarray(p_w, dtype=np.float64) - frame.origin_w)


def target_to_world(lam: np.ndarray, frame: TargetFrame) -> np.ndarray:
    """Target-frame coordinates -> world point. Inverse of world_to_target."""
    return frame.origin_w + frame.rotation @ np.asarray(lam, dtype=np.float64)


def rotate_world_to_target(v_w: np.ndarray, frame: TargetFrame) -> np.ndarray:
    """Rotate a free vector (velocity, force) from world into the target frame."""
    return frame.rotation.T @ np.asarray(v_w, dtype=np.float64)


def rotate_target_to_world(v_t: np.ndarray, frame: TargetFrame) -> np.ndarray:
    """Rotate a free vector from the target frame into world."""
    return frame.rotation @ np.asarray(v_t, dtype=np.float64)
