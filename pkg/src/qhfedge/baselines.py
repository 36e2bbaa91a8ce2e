"""Grayscale comparison detectors and the unfiltered-gradient ablation.

Sobel and Prewitt threshold the gradient magnitude without thinning, so
step edges come out two pixels wide.  Their threshold is expressed as a
fraction of the full-scale response: magnitudes are normalized so that an
ideal unit step along an axis scores exactly 1.0.  That makes "misses a
low-contrast edge" a statement about contrast rather than about whatever
else happens to be in the image.

Canny follows the usual chain: Gaussian smoothing, Sobel gradients,
directional non-maximum suppression, hysteresis with thresholds relative
to the largest thinned magnitude.
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from .gradient import structure
from .pipeline import _directional_maxima, nms, validate_color_image

GRAY_WEIGHTS = np.array([0.299, 0.587, 0.114])

_SOBEL_X = np.array([[-1.0, 0.0, 1.0],
                     [-2.0, 0.0, 2.0],
                     [-1.0, 0.0, 1.0]])
_PREWITT_X = np.array([[-1.0, 0.0, 1.0],
                       [-1.0, 0.0, 1.0],
                       [-1.0, 0.0, 1.0]])

#: Gradient magnitudes at or below this are smoothing round-off, not content.
#: Real edges in [0, 1] grayscale sit at 1e-4 and above; float noise from the
#: Gaussian stage stays near 1e-16.
_CANNY_FLOOR = 1e-12


def to_gray(img: np.ndarray) -> np.ndarray:
    """Rec. 601 luma in [0, 1]."""
    return validate_color_image(img) @ GRAY_WEIGHTS


def _kernel_magnitude(gray: np.ndarray, kernel_x: np.ndarray) -> np.ndarray:
    gray = np.asarray(gray, dtype=float)
    gx = ndimage.correlate(gray, kernel_x, mode="nearest")
    gy = ndimage.correlate(gray, kernel_x.T, mode="nearest")
    # normalize so a unit step along an axis responds with 1.0
    return np.hypot(gx, gy) / np.abs(kernel_x).sum() * 2.0


def sobel(gray: np.ndarray, threshold: float = 0.1) -> np.ndarray:
    """Thresholded Sobel magnitude; ``threshold`` in full-scale units."""
    _check_threshold(threshold)
    return _kernel_magnitude(gray, _SOBEL_X) >= threshold


def prewitt(gray: np.ndarray, threshold: float = 0.1) -> np.ndarray:
    """Thresholded Prewitt magnitude; ``threshold`` in full-scale units."""
    _check_threshold(threshold)
    return _kernel_magnitude(gray, _PREWITT_X) >= threshold


def canny(gray: np.ndarray, low: float = 0.08, high: float = 0.2,
          sigma: float = 1.4) -> np.ndarray:
    """Canny edges with thresholds relative to the peak thinned magnitude."""
    _check_threshold(low)
    _check_threshold(high)
    if low > high:
        raise ValueError(f"low threshold {low} exceeds high threshold {high}")
    if sigma < 0.0:
        raise ValueError(f"sigma must be nonnegative, got {sigma}")
    smoothed = ndimage.gaussian_filter(np.asarray(gray, dtype=float), sigma,
                                       mode="nearest")
    gx = ndimage.correlate(smoothed, _SOBEL_X, mode="nearest")
    gy = ndimage.correlate(smoothed, _SOBEL_X.T, mode="nearest")
    magnitude = np.hypot(gx, gy)
    direction = np.mod(np.arctan2(gy, gx), np.pi)
    thinned = magnitude * _directional_maxima(magnitude, direction,
                                              np.ones(magnitude.shape, dtype=bool))
    peak = thinned.max(initial=0.0)
    if peak <= _CANNY_FLOOR:
        return np.zeros(gray.shape, dtype=bool)
    strong = thinned >= high * peak
    weak = thinned >= low * peak
    labels, count = ndimage.label(weak, structure=np.ones((3, 3), dtype=int))
    if count == 0:
        return np.zeros(gray.shape, dtype=bool)
    keep = np.zeros(count + 1, dtype=bool)
    keep[np.unique(labels[strong])] = True
    keep[0] = False
    return keep[labels]


def idz_direct(img: np.ndarray, threshold: float = 0.1,
               formula: str = "derived") -> np.ndarray:
    """Multi-channel gradient plus suppression on the raw RGB channels.

    The ablation arm: identical to the filtered pipeline with the
    frequency-domain stage removed.
    """
    arr = validate_color_image(img, min_size=3)
    return nms(structure(arr, formula=formula), threshold)


def _check_threshold(value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {value}")
