"""Unit-quaternion helpers, scalar-first convention [w, x, y, z].

Quaternions map body to world: v_world = rotate(q, v_body).
"""

from __future__ import annotations

import numpy as np

EPS = 1e-12

IDENTITY = np.array([1.0, 0.0, 0.0, 0.0])


def normalize(q: np.ndarray) -> np.ndarray:
    """Return q scaled to unit norm; identity if the input is near zero."""
    q = np.asarray(q, dtype=np.float64)
    n = np.linalg.norm(q)
    if n < EPS:
        return IDENTITY.copy()
    return q / n


def multiply(q1: np.ndarray, q2: np.ndarray) -> np.ndarray:
    """Hamilton product q1 ⊗ q2."""
    w1, x1, y1, z1 = q1
    w2, x2, y2, z2 = q2
    return np.array([
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    ])


def conjugate(q: np.ndarray) -> np.ndarray:
    w, x, y, z = q
    return np.array([w, -x, -y, -z])


def from_axis_angle(axis: np.ndarray, angle: float) -> np.ndarray:
    """Quaternion for a rotation of `angle` radians about `axis`."""
    axis = np.asarray(axis, dtype=np.float64)
    n = np.linalg.norm(axis)
    if n < EPS:
        return IDENTITY.copy()
    half = 0.5 * angle
    return np.concatenate(([np.cos(half)], np.sin(half) * axis / n))


def from_rotvec(rv: np.ndarray) -> np.ndarray:
    """Quaternion from a rotation vector (axis * angle)."""
    rv = np.asarray(rv, dtype=np.float64)
    angle = np.linalg.norm(rv)
    if angle < EPS:
        return IDENTITY.copy()
    return from_axis_angle(rv, angle)


def to_rotvec(q: np.ndarray) -> np.ndarray:
    """Rotation vector (axis * angle) of q, angle in [0, pi]."""
    q = normalize(q)
    if q[0] < 0.0:  # keep the short arc
        q = -q
    vec = q[1:]
    s = np.linalg.norm(vec)
    if s < EPS:
        return 2.0 * vec  # small-angle limit: rv ≈ 2 * vector part
    angle = 2.0 * np.arctan2(s, q[0])
    return angle * vec / s


def to_matrix(q: np.ndarray) -> np.ndarray:
    """3x3 rotation matrix of a unit quaternion (body -> world)."""
    w, x, y, z = q
    ww, xx, yy, zz = w * w, x * x, y * y, z * z
    wx, wy, wz = w * x, w * y, w * z
    xy, xz, yz = x * y, x * z, y * z
    return np.array([
        [ww + xx - yy - zz, 2.0 * (xy - wz), 2.0 * (xz + wy)],
        [2.0 * (xy + wz), ww - xx + yy - zz, 2.0 * (yz - wx)],
        [2.0 * (xz - wy), 2.0 * (yz + wx), ww - xx - yy + zz],
    ])


def rotate(q: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Rotate vector v by quaternion q (body -> world for attitude quaternions)."""
    return to_matrix(q) @ np.asarray(v, dtype=np.float64)


def derivative(q: np.ndarray, omega_body: np.ndarray) -> np.ndarray:
    """q̇ = 0.5 · q ⊗ [0, ω] for body-frame angular rate ω."""
    w, x, y, z = q
    ox, oy, oz = omega_body
    return 0.5 * np.array([
        -x * ox - y * oy - z * oz,
        w * ox + y * oz - z * oy,
        w * oy - x * oz + z * ox,
        w * oz + x * oy - y * ox,
    ])


def about_x(angle: float) -> np.ndarray:
    half = 0.5 * angle
    return np.array([np.cos(half), np.sin(half), 0.0, 0.0])


def about_y(angle: float) -> np.ndarray:
    half = 0.5 * angle
    return np.array([np.cos(half), 0.0, np.sin(half), 0.0])


def about_z(angle: float) -> np.ndarray:
    half = 0.5 * angle
    return np.array([np.cos(half), 0.0, 0.0, np.sin(half)])
