"""Keypoint regression of dental implant positions from slice triplets.

The package covers the full desk-scale pipeline: synthetic phantom volumes,
Gaussian heatmap targets, a triple-slice fusion network with text
conditioning, slope-aware training losses, centerline geometry, and the
AP75 evaluation protocol, plus a CLI tying them together.
"""

from implantloc.geometry import (
    CenterlineFit,
    CenterPoint3D,
    DegenerateGeometryError,
    fit_centerline,
    project_to_root,
)

__all__ = [
    "CenterlineFit",
    "CenterPoint3D",
    "DegenerateGeometryError",
    "fit_centerline",
    "project_to_root",
]

__version__ = "0.1.0"
