"""Hardy filter in the quaternion frequency domain.

The transfer grid is the separable real multiplier

    H(w1, w2, s1, s2) = (1 + sgn(w1)) * (1 + sgn(w2)) * exp(-|w1|*s1) * exp(-|w2|*s2)

sampled on the signed frequency grid of the transform.  ``sgn(0) = 0``, so
the DC bin keeps gain 1 and on-axis bins gain ``2*exp(...)``; bins with a
negative frequency on either axis are zeroed (for even lengths this
includes the Nyquist bin).  ``s1`` and ``s2`` multiply angular frequency
in radians/pixel, so values of a few pixels give visible smoothing on
typical image sizes.

With ``s1 = s2 = 0`` the filter reduces to the analytic-signal multiplier
``(1 + sgn(w1)) * (1 + sgn(w2))``; the filtered image then carries the
input together with its partial and total Hilbert transforms in its
quaternion components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .qft import QImage, QSpectrum, dqft, freq_grid, idqft


@dataclass(frozen=True)
class FilterParams:
    """Decay scales ``s1`` (column axis) and ``s2`` (row axis), both >= 0."""

    s1: float = 0.0
    s2: float = 0.0

    def __post_init__(self):
        if not (self.s1 >= 0.0 and self.s2 >= 0.0):
            raise ValueError(f"filter parameters must be nonnegative, "
                             f"got s1={self.s1}, s2={self.s2}")


def _axis_gain(length: int, s: float) -> np.ndarray:
    w = freq_grid(length)
    return (1.0 + np.sign(w)) * np.exp(-np.abs(w) * s)


@lru_cache(maxsize=64)
def _cached_grid(n_rows: int, m_cols: int, s1: float, s2: float) -> np.ndarray:
    grid = np.outer(_axis_gain(n_rows, s2), _axis_gain(m_cols, s1))
    grid.flags.writeable = False
    return grid


def transfer_grid(shape: tuple[int, int], params: FilterParams) -> np.ndarray:
    """Sampled filter gains for an ``(N, M)`` grid; values lie in [0, 4].

    Cached per (shape, parameters); the returned array is read-only.
    """
    n_rows, m_cols = shape
    if n_rows < 1 or m_cols < 1:
        raise ValueError(f"grid shape must be at least 1x1, got {shape}")
    return _cached_grid(int(n_rows), int(m_cols), float(params.s1), float(params.s2))


def apply_qhf(f: QImage, params: FilterParams) -> QImage:
    """Filter a spatial image: transform, scale each bin, transform back.

    The gain is a real scalar per bin, so its placement relative to the
    quaternion bins is immaterial.  The output is a full quaternion image;
    its scalar part is generally nonzero even for pure-vector input.
    """
    spectrum = dqft(f)
    gains = transfer_grid(spectrum.shape, params)
    return idqft(QSpectrum(spectrum.data * gains[..., None]))


def analytic_signal(f: QImage) -> QImage:
    """Quaternion analytic signal; the zero-decay case of :func:`apply_qhf`."""
    return apply_qhf(f, FilterParams(0.0, 0.0))
