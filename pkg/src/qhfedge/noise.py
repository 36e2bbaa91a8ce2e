"""Seeded noise generators and SNR reporting.

Four models, all deterministic under a fixed seed (Philox counter-based
generator) and all clamping to [0, 1]:

- ``gaussian``: add N(0, variance) per channel sample (default 0.01).
- ``poisson``: draw Poisson(x * 255) / 255 per channel sample.
- ``salt-pepper``: with probability ``density`` per channel sample
  (default 0.05), replace by 0 or 1 with equal probability.
- ``speckle``: multiplicative ``x + x*u`` with ``u`` uniform on
  ``[-sqrt(3*variance), sqrt(3*variance)]`` (default 0.05), so the
  multiplier has the requested variance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

KINDS = ("gaussian", "poisson", "salt-pepper", "speckle")

_DEFAULT_VARIANCE = {"gaussian": 0.01, "speckle": 0.05}
_DEFAULT_DENSITY = 0.05


@dataclass(frozen=True)
class NoiseSpec:
    """Noise kind, magnitude parameter, and 64-bit seed."""

    kind: str
    variance: float | None = None
    density: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown noise kind {self.kind!r}, expected one of {KINDS}")
        if self.kind in _DEFAULT_VARIANCE:
            v = _DEFAULT_VARIANCE[self.kind] if self.variance is None else self.variance
            if v < 0.0:
                raise ValueError(f"variance must be nonnegative, got {v}")
            object.__setattr__(self, "variance", float(v))
        if self.kind == "salt-pepper":
            d = _DEFAULT_DENSITY if self.density is None else self.density
            if not 0.0 <= d <= 1.0:
                raise ValueError(f"density must lie in [0, 1], got {d}")
            object.__setattr__(self, "density", float(d))

    def params(self) -> dict:
        out: dict = {"kind": self.kind, "seed": self.seed}
        if self.variance is not None:
            out["variance"] = self.variance
        if self.density is not None:
            out["density"] = self.density
        return out


def corrupt(img: np.ndarray, spec: NoiseSpec) -> np.ndarray:
    """Return a noisy copy of ``img``; channels are clamped to [0, 1]."""
    arr = np.asarray(img, dtype=float)
    rng = np.random.Generator(np.random.Philox(spec.seed))
    if spec.kind == "gaussian":
        out = arr + rng.normal(0.0, math.sqrt(spec.variance), arr.shape)
    elif spec.kind == "poisson":
        out = rng.poisson(arr * 255.0).astype(float) / 255.0
    elif spec.kind == "salt-pepper":
        out = arr.copy()
        hit = rng.random(arr.shape) < spec.density
        salt = rng.random(arr.shape) < 0.5
        out[hit] = salt[hit].astype(float)
    else:  # speckle
        half_width = math.sqrt(3.0 * spec.variance)
        out = arr + arr * rng.uniform(-half_width, half_width, arr.shape)
    return np.clip(out, 0.0, 1.0)


def snr(clean: np.ndarray, noisy: np.ndarray) -> float:
    """Signal-to-noise ratio in dB: 10*log10(sum clean^2 / sum (clean-noisy)^2).

    Returns ``math.inf`` when the images are identical.
    """
    clean = np.asarray(clean, dtype=float)
    noisy = np.asarray(noisy, dtype=float)
    if clean.shape != noisy.shape:
        raise ValueError(f"shape mismatch: {clean.shape} vs {noisy.shape}")
    noise_power = float(np.sum((clean - noisy) ** 2))
    if noise_power == 0.0:
        return math.inf
    return 10.0 * math.log10(float(np.sum(clean * clean)) / noise_power)
