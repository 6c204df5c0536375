"""Spin observables: Pauli components, embeddings, and the named three-qubit operators."""

from __future__ import annotations

from enum import Enum
from functools import reduce

import numpy as np

from .hilbert import Observable

__all__ = [
    "Axis",
    "pauli",
    "embed",
    "spin",
    "hardy_projector",
    "mermin_A",
    "mermin_B",
    "spin_product",
]


class Axis(Enum):
    """Measurement axis of a spin-1/2 component."""

    X = "x"
    Y = "y"
    Z = "z"


# Phase convention: sigma_y|+> = i|->, sigma_y|-> = -i|+>.  All certainty and
# probability statements in this package are invariant under the conjugate
# convention (checked by a dedicated test).
_SIGMA = {
    Axis.X: np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    Axis.Y: np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    Axis.Z: np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


def pauli(axis: Axis) -> Observable:
    """Single-particle Pauli operator along ``axis`` (dimension 2)."""
    return Observable(_SIGMA[axis], label=f"sigma_{axis.value}")


def embed(op: Observable, particle: int, n_particles: int) -> Observable:
    """Lift a single-particle operator to the joint space of ``n_particles``.

    Identity on every other slot, respecting the most-significant-first
    particle ordering.
    """
    if op.dim != 2:
        raise ValueError("embed expects a single-particle (2x2) operator")
    if not 1 <= n_particles <= 4:
        raise ValueError(f"particle count must be in 1..4, got {n_particles}")
    if not 1 <= particle <= n_particles:
        raise ValueError(f"particle index {particle} out of range 1..{n_particles}")
    factors = [np.eye(2, dtype=complex)] * n_particles
    factors[particle - 1] = op.matrix
    label = f"{op.label or 'op'}({particle})"
    return Observable(reduce(np.kron, factors), label=label)


def spin(axis: Axis, particle: int, n_particles: int) -> Observable:
    """Pauli component of one particle embedded in the joint space."""
    return embed(pauli(axis), particle, n_particles)


def hardy_projector(n_particles: int = 2) -> Observable:
    """Projector onto the complement of ``|-->`` for particles 1 and 2.

    A non-local, non-factorizable observable on the first two particles; with
    ``n_particles=3`` the same observable acts inside the three-particle space
    (identity on particle 3).  Spectrum: eigenvalue 0 with multiplicity 1,
    eigenvalue 1 with multiplicity 3 (times 2 when embedded).
    """
    if n_particles not in (2, 3):
        raise ValueError(f"supported particle counts are 2 and 3, got {n_particles}")
    matrix = np.eye(4, dtype=complex)
    matrix[3, 3] = 0.0
    if n_particles == 3:
        matrix = np.kron(matrix, np.eye(2, dtype=complex))
    return Observable(matrix, label="pi(1+2)")


_A_FACTORS = {1: (None, Axis.X, Axis.Y), 2: (Axis.Y, None, Axis.X), 3: (Axis.X, Axis.Y, None)}
_B_FACTORS = {1: (None, Axis.Y, Axis.Y), 2: (Axis.Y, None, Axis.Y), 3: (Axis.Y, Axis.Y, None)}


def _three_particle_product(factors, label: str) -> Observable:
    mats = [np.eye(2, dtype=complex) if ax is None else _SIGMA[ax] for ax in factors]
    return Observable(reduce(np.kron, mats), label=label)


def mermin_A(j: int) -> Observable:
    """Two-particle spin product skipping particle j.

    A_1 = sigma_x(2) sigma_y(3), A_2 = sigma_y(1) sigma_x(3),
    A_3 = sigma_x(1) sigma_y(2); each has spectrum {-1, +1} with
    multiplicity 4 on the three-particle space.
    """
    if j not in (1, 2, 3):
        raise ValueError(f"index must be 1, 2 or 3, got {j}")
    return _three_particle_product(_A_FACTORS[j], f"A_{j}")


def mermin_B(j: int) -> Observable:
    """Two-particle sigma_y product skipping particle j.

    B_1 = sigma_y(2) sigma_y(3), B_2 = sigma_y(1) sigma_y(3),
    B_3 = sigma_y(1) sigma_y(2); the three pairwise commute and their
    product is the identity.
    """
    if j not in (1, 2, 3):
        raise ValueError(f"index must be 1, 2 or 3, got {j}")
    return _three_particle_product(_B_FACTORS[j], f"B_{j}")


def spin_product(axis: Axis, n_particles: int = 3) -> Observable:
    """Product of the same Pauli component on every particle."""
    if not 2 <= n_particles <= 4:
        raise ValueError(f"particle count must be in 2..4, got {n_particles}")
    mats = [_SIGMA[axis]] * n_particles
    label = "*".join(f"sigma_{axis.value}({k})" for k in range(1, n_particles + 1))
    return Observable(reduce(np.kron, mats), label=label)
