"""Quaternion algebra: Hamilton product, conjugation, modulus, scalar/vector parts.

A quaternion is ``q0 + q1*i + q2*j + q3*k`` with double-precision real
components.  ``Quaternion`` is an immutable value type; the module also
provides ``hamilton`` for elementwise products of ``(..., 4)`` component
arrays, which the transform oracle and the tests build on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Immutable quaternion ``q0 + q1*i + q2*j + q3*k``."""

    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        return self.scaled(float(other))

    def __rmul__(self, other):
        # Real scalars are central, so left and right scaling agree.
        return self.scaled(float(other))

    def scaled(self, r: float) -> "Quaternion":
        return Quaternion(r * self.q0, r * self.q1, r * self.q2, r * self.q3)

    def conj(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def __abs__(self) -> float:
        return modulus(self)

    def as_array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3])


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b`` (non-commutative; i*j = k, j*i = -k)."""
    return Quaternion(
        a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
        a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
        a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
        a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
    )


def conj(q: Quaternion) -> Quaternion:
    """Quaternion conjugate ``q0 - q1*i - q2*j - q3*k``."""
    return q.conj()


def modulus(q: Quaternion) -> float:
    """``sqrt(q0^2 + q1^2 + q2^2 + q3^2)``."""
    return math.sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3)


def sc(q: Quaternion) -> float:
    """Scalar part ``(q + conj(q)) / 2`` as a real number."""
    return q.q0


def vec(q: Quaternion) -> Quaternion:
    """Vector part ``(q - conj(q)) / 2``; its scalar component is zero."""
    return Quaternion(0.0, q.q1, q.q2, q.q3)


def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise Hamilton product of ``(..., 4)`` component arrays.

    Broadcasts like ordinary numpy arithmetic over the leading axes.
    """
    a0, a1, a2, a3 = np.moveaxis(np.asarray(a, dtype=float), -1, 0)
    b0, b1, b2, b3 = np.moveaxis(np.asarray(b, dtype=float), -1, 0)
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
