"""Multi-channel gradient with closed-form magnitude and direction.

For a three-channel field ``h`` the per-pixel structure quantities are

    A = sum_i (dh_i/dx1)^2,  B = sum_i (dh_i/dx2)^2,  C = sum_i dh_i/dx1 * dh_i/dx2

and the directional strength ``f(theta) = A cos^2 + B sin^2 + 2C sin cos``
is maximized in closed form:

    f_max = (A + B + sqrt((A - B)^2 + (2C)^2)) / 2
    theta_max = atan2(2C, A - B) / 2   (mapped to [0, pi))

``theta_max`` is undefined where ``(A - B)^2 + C^2 = 0`` and is reported
as NaN there.  A published variant of the closed form that swaps the roles
of ``B`` and ``C`` is available as ``formula="verbatim"`` for audit runs;
it is inconsistent with maximizing ``f(theta)`` and is not the default.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FORMULAS = ("derived", "verbatim")


@dataclass(frozen=True)
class GradientField:
    """Per-pixel structure quantities plus magnitude and direction.

    ``direction`` is in radians and NaN wherever the maximizing angle is
    undefined; ``defined`` is the complementary boolean mask.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    magnitude: np.ndarray
    direction: np.ndarray

    @property
    def defined(self) -> np.ndarray:
        return ~np.isnan(self.direction)


def partials(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Central differences along both axes with replicate border padding.

    ``dx1`` differentiates along columns (axis 1), ``dx2`` along rows
    (axis 0).  At border pixels the replicated sample turns the stencil
    into a halved one-sided difference.
    """
    h = np.asarray(h, dtype=float)
    if h.ndim == 2:
        h = h[..., None]
    if h.shape[0] < 2 or h.shape[1] < 2:
        raise ValueError(f"need at least 2 pixels along each axis, got {h.shape[:2]}")
    padded = np.pad(h, ((1, 1), (1, 1), (0, 0)), mode="edge")
    dx1 = (padded[1:-1, 2:] - padded[1:-1, :-2]) / 2.0
    dx2 = (padded[2:, 1:-1] - padded[:-2, 1:-1]) / 2.0
    return dx1, dx2


def structure(h: np.ndarray, formula: str = "derived") -> GradientField:
    """Structure quantities and extremal gradient of a channel field."""
    if formula not in FORMULAS:
        raise ValueError(f"unknown formula {formula!r}, expected one of {FORMULAS}")
    dx1, dx2 = partials(h)
    a = np.sum(dx1 * dx1, axis=-1)
    b = np.sum(dx2 * dx2, axis=-1)
    c = np.sum(dx1 * dx2, axis=-1)

    if formula == "derived":
        magnitude = 0.5 * (a + b + np.sqrt((a - b) ** 2 + 4.0 * c * c))
        degenerate = (a - b) ** 2 + c * c == 0.0
        direction = 0.5 * np.arctan2(2.0 * c, a - b)
        direction = np.where(direction < 0.0, direction + np.pi, direction)
    else:
        magnitude = 0.5 * (a + c + np.sqrt((a - c) ** 2 + 4.0 * b * b))
        degenerate = (a - c) ** 2 + b * b == 0.0
        denom = 2.0 * magnitude - a - c
        with np.errstate(invalid="ignore", divide="ignore"):
            ratio = np.clip((magnitude - a) / denom, -1.0, 1.0)
            direction = np.where(b >= 0.0, 1.0, -1.0) * np.arcsin(ratio)
    direction = np.where(degenerate, np.nan, direction)
    return GradientField(a, b, c, magnitude, direction)
