"""Deterministic quadrature over the unit sphere.

Gauss-Legendre nodes in x = cos(theta) crossed with a uniform trapezoid
rule in phi.  The phi rule is exact for trigonometric polynomials of degree
below n_phi, and the product rule integrates every polynomial integrand in
(x, e^{i phi}) that the harmonic checks produce to machine precision.
Summation order is fixed so results are bit-identical across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NumericalError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SphereGrid:
    """Product quadrature grid: Gauss-Legendre in cos(theta), uniform in phi."""

    x_nodes: np.ndarray      # cos(theta), ascending
    x_weights: np.ndarray
    phi_nodes: np.ndarray
    phi_weight: float        # uniform weight 2*pi/n_phi

    @property
    def n_theta(self) -> int:
        return self.x_nodes.size

    @property
    def n_phi(self) -> int:
        return self.phi_nodes.size

    @property
    def theta_nodes(self) -> np.ndarray:
        return np.arccos(np.clip(self.x_nodes, -1.0, 1.0))

    def total_weight(self) -> float:
        return float(np.sum(self.x_weights) * self.phi_weight * self.n_phi)


def build_grid(n_theta: int, n_phi: int) -> SphereGrid:
    """Build the product grid; both sizes must be at least 2.

    The Gauss-Legendre nodes are symmetrized so that x -> -x maps the node
    set onto itself exactly, which lets reflection act as an index
    permutation with no interpolation.
    """
    if not isinstance(n_theta, int) or not isinstance(n_phi, int):
        raise DomainError("grid sizes must be integers")
    if n_theta < 2 or n_phi < 2:
        raise DomainError(f"grid sizes must be >= 2, got n_theta={n_theta}, n_phi={n_phi}")
    x, w = np.polynomial.legendre.leggauss(n_theta)
    # enforce exact +/- symmetry of the node set
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    phi = np.arange(n_phi) * (TWO_PI / n_phi)
    grid = SphereGrid(x_nodes=x, x_weights=w, phi_nodes=phi, phi_weight=TWO_PI / n_phi)
    return grid


def grid_weights(grid: SphereGrid) -> np.ndarray:
    """Full weight matrix, shape (n_theta, n_phi)."""
    return np.outer(grid.x_weights, np.full(grid.n_phi, grid.phi_weight))


def integrate_values(values: np.ndarray, grid: SphereGrid) -> complex:
    """Integrate samples laid out as (n_theta, n_phi) over the sphere.

    Uses numpy's pairwise summation over a fixed layout, so the reduction
    order does not depend on threading.
    """
    if values.shape != (grid.n_theta, grid.n_phi):
        raise DomainError(f"values shape {values.shape} does not match grid "
                          f"({grid.n_theta}, {grid.n_phi})")
    if not np.all(np.isfinite(values)):
        it, ip = np.argwhere(~np.isfinite(values))[0]
        raise NumericalError(
            f"non-finite sample at theta node {it} (x={grid.x_nodes[it]:.6g}), "
            f"phi node {ip} (phi={grid.phi_nodes[ip]:.6g})"
        )
    return complex(np.sum(values * grid_weights(grid)))


def integrate(f: "Callable[[SphericalPoint], complex]", grid: SphereGrid) -> complex:
    """Integrate a pointwise function over the sphere with the product rule."""
    from .monopole_harmonics import SphericalPoint

    theta = grid.theta_nodes
    values = np.empty((grid.n_theta, grid.n_phi), dtype=complex)
    for i, th in enumerate(theta):
        for k, ph in enumerate(grid.phi_nodes):
            values[i, k] = f(SphericalPoint(float(th), float(ph)))
    return integrate_values(values, grid)


def reflection_indices(grid: SphereGrid) -> tuple[np.ndarray, np.ndarray]:
    """Index maps realizing theta -> pi - theta, phi -> phi + pi on the grid.

    Requires an even phi count; the symmetrized x nodes make the theta map
    exact by construction.
    """
    if grid.n_phi % 2 != 0:
        raise DomainError("reflection needs an even number of phi nodes")
    theta_map = np.arange(grid.n_theta)[::-1]
    phi_map = (np.arange(grid.n_phi) + grid.n_phi // 2) % grid.n_phi
    return theta_map, phi_map
