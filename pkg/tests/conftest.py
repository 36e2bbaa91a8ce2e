"""Shared test oracles.

These deliberately avoid the package's FFT decomposition: the forward
oracle lives in the package (`brute_dqft`); here we add the matching
direct inverse and a from-scratch analytic-signal construction so the
filtered path can be checked against an independent O(N^2) computation.
"""

import numpy as np

from qhfedge.quaternion import hamilton


def brute_idqft(spectrum: np.ndarray) -> np.ndarray:
    """Direct double sum of the inverse transform (positive kernels)."""
    n_rows, m_cols = spectrum.shape[:2]
    m = np.arange(m_cols)
    n = np.arange(n_rows)
    out = np.empty((n_rows, m_cols, 4))
    zeros_m = np.zeros(m_cols)
    zeros_n = np.zeros(n_rows)
    for y in range(n_rows):
        phi = 2.0 * np.pi * y * n / n_rows
        right = np.stack([np.cos(phi), zeros_n, np.sin(phi), zeros_n], axis=-1)
        for x in range(m_cols):
            theta = 2.0 * np.pi * x * m / m_cols
            left = np.stack([np.cos(theta), np.sin(theta), zeros_m, zeros_m], axis=-1)
            term = hamilton(hamilton(left[None, :, :], spectrum), right[:, None, :])
            out[y, x] = term.sum(axis=(0, 1))
    return out / np.sqrt(m_cols * n_rows)


def brute_dqft_arr(image: np.ndarray) -> np.ndarray:
    """Direct double sum of the forward transform on a raw component array."""
    n_rows, m_cols = image.shape[:2]
    m = np.arange(m_cols)
    n = np.arange(n_rows)
    out = np.empty((n_rows, m_cols, 4))
    zeros_m = np.zeros(m_cols)
    zeros_n = np.zeros(n_rows)
    for v in range(n_rows):
        phi = 2.0 * np.pi * v * n / n_rows
        right = np.stack([np.cos(phi), zeros_n, -np.sin(phi), zeros_n], axis=-1)
        for u in range(m_cols):
            theta = 2.0 * np.pi * u * m / m_cols
            left = np.stack([np.cos(theta), -np.sin(theta), zeros_m, zeros_m], axis=-1)
            term = hamilton(hamilton(left[None, :, :], image), right[:, None, :])
            out[v, u] = term.sum(axis=(0, 1))
    return out / np.sqrt(m_cols * n_rows)


def signed_freqs(length: int) -> np.ndarray:
    """Signed angular frequencies, written out without the fft helper."""
    k = np.arange(length, dtype=float)
    half = (length + 1) // 2  # first negative-branch bin
    w = 2.0 * np.pi * k / length
    w[half:] -= 2.0 * np.pi
    return w


def analytic_oracle(image: np.ndarray) -> np.ndarray:
    """Quaternion analytic signal via direct sums and the (1+sgn) multiplier."""
    spectrum = brute_dqft_arr(image)
    g1 = 1.0 + np.sign(signed_freqs(image.shape[1]))  # columns
    g2 = 1.0 + np.sign(signed_freqs(image.shape[0]))  # rows
    gains = np.outer(g2, g1)
    return brute_idqft(spectrum * gains[..., None])
