"""Deterministic test images.

``green_pink`` is the classic two-tone rectangle whose halves are nearly
identical in luma, so grayscale detectors miss the boundary while color
detectors see it plainly.  ``clouds`` and ``patches`` emulate natural-image
statistics (power-law spectra, soft-edged regions) and serve as seeded,
redistributable stand-ins for photographic benchmark material.
"""

from __future__ import annotations

import numpy as np

GREEN = (2, 170, 2)
PINK = (250, 2, 240)


def green_pink(height: int = 64, width: int = 128,
               left: tuple[int, int, int] = GREEN,
               right: tuple[int, int, int] = PINK) -> np.ndarray:
    """Two flat color halves split down the middle column."""
    img = np.empty((height, width, 3))
    img[:, :width // 2] = np.asarray(left, dtype=float) / 255.0
    img[:, width // 2:] = np.asarray(right, dtype=float) / 255.0
    return img


def clouds(seed: int, size: int = 96, exponent: float = 1.8) -> np.ndarray:
    """Smooth color field with a power-law spectrum per channel."""
    rng = np.random.Generator(np.random.Philox(seed))
    fy = np.fft.fftfreq(size)[:, None]
    fx = np.fft.fftfreq(size)[None, :]
    radius = np.hypot(fx, fy)
    radius[0, 0] = 1.0
    img = np.empty((size, size, 3))
    for c in range(3):
        spectrum = np.fft.fft2(rng.normal(size=(size, size))) / radius ** exponent
        field = np.fft.ifft2(spectrum).real
        field = (field - field.min()) / (field.max() - field.min())
        img[..., c] = field
    return 0.15 + 0.7 * img


def patches(seed: int, size: int = 96, count: int = 8) -> np.ndarray:
    """Soft-edged random color ellipses over a cloudy background."""
    rng = np.random.Generator(np.random.Philox(seed))
    rows, cols = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    img = clouds(seed + 1, size)
    margin = min(10, size / 4)
    for _ in range(count):
        cx, cy = rng.uniform(margin, size - margin, 2)
        rx, ry = rng.uniform(size / 16 + 2, size / 5 + 4, 2)
        angle = rng.uniform(0, np.pi)
        color = rng.uniform(0.15, 0.85, 3)
        xr = (cols - cx) * np.cos(angle) + (rows - cy) * np.sin(angle)
        yr = -(cols - cx) * np.sin(angle) + (rows - cy) * np.cos(angle)
        dist = (xr / rx) ** 2 + (yr / ry) ** 2
        weight = np.clip(1.5 * (1.0 - dist), 0.0, 1.0)[..., None]
        img = img * (1.0 - weight) + color * weight
    return np.clip(img, 0.0, 1.0)
