"""Raster input and output.

Inputs: 8-bit RGB rasters as PNG or binary PPM (P6); RGBA alpha is
dropped, palette and grayscale files are expanded to RGB.  Channels come
back as floats in [0, 1].  Outputs are always PNG: 8-bit RGB for color
images, 8-bit grayscale {0, 255} for edge maps.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

_INPUT_FORMATS = {"PNG", "PPM"}


def load_color(path: str | Path) -> np.ndarray:
    """Read a PNG or binary PPM into an (N, M, 3) float array in [0, 1]."""
    path = Path(path)
    with Image.open(path) as handle:
        if handle.format not in _INPUT_FORMATS:
            raise ValueError(f"unsupported raster format {handle.format!r} for "
                             f"{path} (expected PNG or PPM)")
        rgb = handle.convert("RGB")
        arr = np.asarray(rgb, dtype=float) / 255.0
    return np.clip(arr, 0.0, 1.0)


def save_color(path: str | Path, img: np.ndarray) -> None:
    """Write an (N, M, 3) float image in [0, 1] as 8-bit RGB PNG."""
    arr = np.clip(np.asarray(img, dtype=float), 0.0, 1.0)
    data = np.rint(arr * 255.0).astype(np.uint8)
    Image.fromarray(data, mode="RGB").save(Path(path), format="PNG")


def save_edge_map(path: str | Path, edges: np.ndarray) -> None:
    """Write a boolean edge map as 8-bit grayscale PNG with values {0, 255}."""
    data = np.where(np.asarray(edges, dtype=bool), 255, 0).astype(np.uint8)
    Image.fromarray(data, mode="L").save(Path(path), format="PNG")
