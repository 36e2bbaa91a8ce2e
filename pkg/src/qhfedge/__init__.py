"""Color edge detection with a quaternion Hardy filter.

Core objects: exact quaternion algebra, a fast two-sided discrete
quaternion Fourier transform, the parameterized Hardy transfer grid, the
multi-channel gradient, the full detection pipeline, seeded noise models,
PSNR/SSIM metrics, classical baselines, and a benchmark harness.
"""

from .quaternion import Quaternion, conj, hamilton, modulus, mul, sc, vec
from .qft import QImage, QSpectrum, brute_dqft, dqft, energy, freq_grid, idqft
from .hardy import FilterParams, analytic_signal, apply_qhf, transfer_grid
from .gradient import GradientField, partials, structure
from .pipeline import (PipelineConfig, detect, edge_map_to_gray, encode, nms,
                       validate_color_image)
from .noise import NoiseSpec, corrupt, snr
from .metrics import mse, psnr, ssim, ssim_windowed
from .baselines import canny, idz_direct, prewitt, sobel, to_gray
from .synthetic import clouds, green_pink, patches

__version__ = "0.1.0"

__all__ = [
    "Quaternion", "conj", "hamilton", "modulus", "mul", "sc", "vec",
    "QImage", "QSpectrum", "brute_dqft", "dqft", "energy", "freq_grid", "idqft",
    "FilterParams", "analytic_signal", "apply_qhf", "transfer_grid",
    "GradientField", "partials", "structure",
    "PipelineConfig", "detect", "edge_map_to_gray", "encode", "nms",
    "validate_color_image",
    "NoiseSpec", "corrupt", "snr",
    "mse", "psnr", "ssim", "ssim_windowed",
    "canny", "idz_direct", "prewitt", "sobel", "to_gray",
    "clouds", "green_pink", "patches",
]
