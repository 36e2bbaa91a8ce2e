"""End-to-end color edge detection.

Stages: encode RGB into the three imaginary quaternion components, filter
with the Hardy transfer grid in the two-sided frequency domain, come back
to the spatial domain, take the vector part as a three-channel field, run
the multi-channel gradient, then thin with directional non-maximum
suppression and a threshold relative to the global gradient maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gradient import FORMULAS, GradientField, structure
from .hardy import FilterParams, apply_qhf
from .qft import QImage

#: Gradient magnitudes at or below this are treated as flat content.
#: Real edges in [0, 1] images sit many orders of magnitude above it;
#: round-off from the FFT round trip sits many orders below.
FLAT_FLOOR = 1e-18

_NEIGHBOR_STEPS = ((0, 1), (1, 1), (1, 0), (1, -1))  # 0, 45, 90, 135 degrees


@dataclass(frozen=True)
class PipelineConfig:
    """Detection parameters: filter decay, threshold fraction, formula switch."""

    s1: float = 2.0
    s2: float = 2.0
    threshold: float = 0.1
    idz_formula: str = "derived"

    def __post_init__(self):
        FilterParams(self.s1, self.s2)  # reuse nonnegativity validation
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must lie in [0, 1], got {self.threshold}")
        if self.idz_formula not in FORMULAS:
            raise ValueError(f"idz_formula must be one of {FORMULAS}, "
                             f"got {self.idz_formula!r}")

    @property
    def filter_params(self) -> FilterParams:
        return FilterParams(self.s1, self.s2)


def validate_color_image(img: np.ndarray, min_size: int = 1) -> np.ndarray:
    arr = np.asarray(img, dtype=float)
    if arr.ndim != 3 or arr.shape[-1] != 3:
        raise ValueError(f"expected an (N, M, 3) color image, got shape {arr.shape}")
    if arr.shape[0] < min_size or arr.shape[1] < min_size:
        raise ValueError(f"image must be at least {min_size}x{min_size} pixels, "
                         f"got {arr.shape[:2]}")
    return arr


def encode(img: np.ndarray) -> QImage:
    """Embed RGB channels as the i, j, k components of a pure-vector image."""
    arr = validate_color_image(img)
    data = np.zeros(arr.shape[:2] + (4,))
    data[..., 1:] = arr
    return QImage(data)


def _directional_maxima(magnitude: np.ndarray, direction: np.ndarray,
                        defined: np.ndarray) -> np.ndarray:
    n_rows, m_cols = magnitude.shape
    padded = np.pad(magnitude, 1, constant_values=-np.inf)

    def shifted(dr: int, dc: int) -> np.ndarray:
        return padded[1 + dr:1 + dr + n_rows, 1 + dc:1 + dc + m_cols]

    quarter = np.where(defined, direction, 0.0) / (np.pi / 4.0)
    bins = np.round(quarter).astype(int) % 4
    keep = np.zeros(magnitude.shape, dtype=bool)
    for b, (dr, dc) in enumerate(_NEIGHBOR_STEPS):
        ridge = (magnitude >= shifted(dr, dc)) & (magnitude >= shifted(-dr, -dc))
        keep |= defined & (bins == b) & ridge
    return keep


def nms(grad: GradientField, threshold: float) -> np.ndarray:
    """Directional non-maximum suppression with a relative threshold.

    A pixel survives when its magnitude is at least both neighbors along
    its quantized gradient direction and at least ``threshold`` times the
    global maximum.  Pixels with undefined direction are suppressed;
    border pixels compare only against in-bounds neighbors.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")
    global_max = float(grad.magnitude.max(initial=0.0))
    if global_max <= FLAT_FLOOR:
        return np.zeros(grad.magnitude.shape, dtype=bool)
    cutoff = max(threshold * global_max, FLAT_FLOOR)
    keep = _directional_maxima(grad.magnitude, grad.direction, grad.defined)
    return keep & (grad.magnitude >= cutoff)


def detect(img: np.ndarray, config: PipelineConfig = PipelineConfig()) -> np.ndarray:
    """Binary edge map of a color image; deterministic in (image, config)."""
    arr = validate_color_image(img, min_size=3)
    filtered = apply_qhf(encode(arr), config.filter_params)
    channels = filtered.data[..., 1:]
    grad = structure(channels, formula=config.idz_formula)
    return nms(grad, config.threshold)


def edge_map_to_gray(edges: np.ndarray) -> np.ndarray:
    """Render a boolean edge map as a {0, 255} grayscale array."""
    return np.asarray(edges, dtype=bool).astype(float) * 255.0
