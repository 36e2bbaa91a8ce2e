"""PSNR and SSIM between grayscale images on the [0, 255] scale.

``ssim`` uses whole-image statistics with the unbiased (N-1) variance and
stabilizers ``c1 = (0.01*255)^2``, ``c2 = (0.03*255)^2``.  ``ssim_windowed``
is the sliding-Gaussian-window variant common in imaging libraries, kept
separate because the two can differ noticeably on sparse edge maps.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.ndimage import gaussian_filter

PEAK = 255.0
_K1, _K2 = 0.01, 0.03
_C1 = (_K1 * PEAK) ** 2
_C2 = (_K2 * PEAK) ** 2


def _pair(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return x, y


def mse(x: np.ndarray, y: np.ndarray) -> float:
    """Mean squared difference."""
    x, y = _pair(x, y)
    return float(np.mean((x - y) ** 2))


def psnr(x: np.ndarray, y: np.ndarray) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical inputs."""
    m = mse(x, y)
    if m == 0.0:
        return math.inf
    return 20.0 * math.log10(PEAK / math.sqrt(m))


def ssim(x: np.ndarray, y: np.ndarray) -> float:
    """Whole-image structural similarity; 1 iff the images coincide."""
    x, y = _pair(x, y)
    n = x.size
    if n < 2:
        raise ValueError("ssim needs at least 2 samples for the variance")
    mu_x = float(x.mean())
    mu_y = float(y.mean())
    dx = x - mu_x
    dy = y - mu_y
    var_x = float((dx * dx).sum()) / (n - 1)
    var_y = float((dy * dy).sum()) / (n - 1)
    cov = float((dx * dy).sum()) / (n - 1)
    return (((2.0 * mu_x * mu_y + _C1) * (2.0 * cov + _C2)) /
            ((mu_x ** 2 + mu_y ** 2 + _C1) * (var_x + var_y + _C2)))


def ssim_windowed(x: np.ndarray, y: np.ndarray, sigma: float = 1.5) -> float:
    """Mean local SSIM over an 11x11 Gaussian window (sigma 1.5)."""
    x, y = _pair(x, y)
    # radius 5 at sigma 1.5 gives the conventional 11x11 support
    blur = lambda a: gaussian_filter(a, sigma, truncate=5.0 / sigma, mode="nearest")
    mu_x = blur(x)
    mu_y = blur(y)
    var_x = blur(x * x) - mu_x * mu_x
    var_y = blur(y * y) - mu_y * mu_y
    cov = blur(x * y) - mu_x * mu_y
    score = (((2.0 * mu_x * mu_y + _C1) * (2.0 * cov + _C2)) /
             ((mu_x ** 2 + mu_y ** 2 + _C1) * (var_x + var_y + _C2)))
    return float(score.mean())
