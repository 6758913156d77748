"""3D centerline fitting and crown-to-root projection.

An implant track is a set of per-slice positions (x_i, y_i) observed at slice
depths z_i.  The centerline is the pair of independent least-squares
regressions x(z) = s1*z + b1 and y(z) = s2*z + b2; the combined slope
tau = |s1| + |s2| summarises how strongly the implant is tilted and feeds the
slope-aware loss weighting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class DegenerateGeometryError(ValueError):
    """Raised when the input points do not determine a line in z."""


@dataclass(frozen=True)
class CenterPoint3D:
    """A continuous implant-center coordinate: (x, y) in pixels, z slice index."""

    x: float
    y: float
    z: float


@dataclass(frozen=True)
class CenterlineFit:
    """Fitted 3D line: x = s1*z + b1, y = s2*z + b2, combined slope tau."""

    s1: float
    s2: float
    b1: float
    b2: float
    tau: float


def _as_xyz_arrays(points: Iterable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pts = list(points)
    if any(isinstance(p, CenterPoint3D) for p in pts):
        arr = np.array([(p.x, p.y, p.z) for p in pts], dtype=float)
    else:
        arr = np.asarray(pts, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"expected points of shape (n, 3), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("points must be finite")
    return arr[:, 0], arr[:, 1], arr[:, 2]


def fit_centerline(points: Sequence) -> CenterlineFit:
    """Fit the implant centerline to >= 2 per-slice center points.

    Slopes come from the closed-form least-squares solution of the two
    independent regressions against z:

        s = (n * sum(v*z) - sum(v) * sum(z)) / (n * sum(z^2) - sum(z)^2)

    with v = x or y, intercept b = mean(v) - s * mean(z).  The combined slope
    is tau = |s1| + |s2|.

    Raises:
        ValueError: fewer than two points.
        DegenerateGeometryError: all z identical (no spread to regress over).
    """
    x, y, z = _as_xyz_arrays(points)
    n = len(z)
    if n < 2:
        raise ValueError(f"need at least 2 points to fit a centerline, got {n}")
    if np.all(z == z[0]):
        raise DegenerateGeometryError(
            "all points share one slice depth; centerline slope is undefined"
        )

    denom = n * np.sum(z * z) - np.sum(z) ** 2
    if denom <= 0.0:
        # guards rounding collapse for nearly identical z
        raise DegenerateGeometryError("z values have no usable spread")

    s1 = (n * np.sum(x * z) - np.sum(x) * np.sum(z)) / denom
    s2 = (n * np.sum(y * z) - np.sum(y) * np.sum(z)) / denom
    b1 = np.mean(x) - s1 * np.mean(z)
    b2 = np.mean(y) - s2 * np.mean(z)
    return CenterlineFit(s1=float(s1), s2=float(s2), b1=float(b1), b2=float(b2),
                         tau=float(abs(s1) + abs(s2)))


def project_to_root(fit: CenterlineFit, z_root: float) -> tuple[float, float]:
    """Evaluate the fitted centerline at root depth: (s1*z + b1, s2*z + b2)."""
    return (fit.s1 * z_root + fit.b1, fit.s2 * z_root + fit.b2)
