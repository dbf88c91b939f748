"""Polar sampling grids on the unit disk."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# radii cap for evaluations on closed forms, where no truncation error exists
CLOSED_FORM_RCAP = 1.0 - 1e-6


@dataclass(frozen=True)
class GridSpec:
    n_angles: int = 256
    n_radii: int = 128
    r_cap: float = 0.95
    refinement_iters: int = 0

    def __post_init__(self):
        if self.n_angles < 1 or self.n_radii < 2:
            raise ValueError("need n_angles >= 1 and n_radii >= 2")
        if not 0.0 < self.r_cap < 1.0:
            raise ValueError(f"r_cap={self.r_cap!r} must lie in (0, 1)")
        if self.refinement_iters < 0:
            raise ValueError("refinement_iters must be nonnegative")

    def radii(self):
        """Chebyshev-Lobatto radii on ``[0, r_cap]``, clustered toward ``r_cap``.

        Doubling ``n_radii - 1`` nests the previous set.
        """
        k = np.arange(self.n_radii)
        r = self.r_cap * np.sin(0.5 * math.pi * k / (self.n_radii - 1))
        r[-1] = self.r_cap
        return r

    def angles(self):
        return 2.0 * math.pi * np.arange(self.n_angles) / self.n_angles

    def points(self):
        """Complex sample points, shape ``(n_radii, n_angles)``."""
        return self.radii()[:, None] * np.exp(1j * self.angles())[None, :]


# default for membership checks on order-512 series: tails stay far below 1e-8
MEMBERSHIP_GRID = GridSpec(n_angles=256, n_radii=128, r_cap=0.95)
