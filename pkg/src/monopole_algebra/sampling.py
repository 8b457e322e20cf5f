"""Deterministic random sampling helpers.

A small splitmix64 generator gives platform-independent, seed-reproducible
streams without dragging in global RNG state.  The sphere sampler draws
area-uniform points and rejects a thin band around the poles, where the
string gauge fields are singular.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .monopole_harmonics import SphericalPoint

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64: 64-bit state advanced by a Weyl constant, then mixed."""

    def __init__(self, seed: int) -> None:
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise DomainError(f"seed must be an integer, got {seed!r}")
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_double(self) -> float:
        # 53 high bits -> [0, 1)
        return (self.next_uint64() >> 11) / float(1 << 53)


def sample_sphere_points(n: int, seed: int, pole_margin: float = 1e-3
                         ) -> list[SphericalPoint]:
    """n area-uniform points with theta kept at least pole_margin off each pole."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"sample count must be a non-negative integer, got {n!r}")
    if not (0.0 < pole_margin < math.pi / 2):
        raise DomainError(f"pole margin must lie in (0, pi/2), got {pole_margin}")
    rng = SplitMix64(seed)
    points: list[SphericalPoint] = []
    while len(points) < n:
        theta = math.acos(1.0 - 2.0 * rng.next_double())
        phi = 2.0 * math.pi * rng.next_double()
        if theta < pole_margin or theta > math.pi - pole_margin:
            continue
        points.append(SphericalPoint(theta, phi % (2.0 * math.pi)))
    return points
