"""Dense complex linear algebra for small multi-qubit Hilbert spaces.

Everything works on explicit numpy arrays (dimension <= 16), which keeps the
semantics transparent: states are amplitude vectors over the sigma_z product
basis, observables are Hermitian matrices, and eigenprojectors are formed
explicitly so probability and eigenspace arguments can be checked directly.

Basis convention: particle 1 is the most significant bit of the basis index;
bit value 0 means spin up along z (written ``+``), bit value 1 means spin down
(``-``).  For three particles, ``|+-+>`` therefore sits at index 0b010 = 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
PROJECTOR_TOL = 1e-10
EIGENVALUE_CLUSTER_TOL = 1e-8

_MAX_DIM = 16
_UNIT_NORM_TOL = 1e-8
_NULLSPACE_TOL = 1e-8

__all__ = [
    "HERMITIAN_TOL",
    "PROJECTOR_TOL",
    "EIGENVALUE_CLUSTER_TOL",
    "StateVector",
    "Observable",
    "SpectralDecomposition",
    "tensor",
    "common_eigenstate_dim",
    "has_common_eigenstate",
    "acts_only_on",
    "basis_index",
    "basis_pattern",
    "basis_state",
]


def _check_dim(dim: int, what: str) -> None:
    if dim < 2 or dim & (dim - 1) or dim > _MAX_DIM:
        raise ValueError(f"{what} dimension must be a power of two in [2, {_MAX_DIM}], got {dim}")


def basis_index(pattern: str) -> int:
    """Index of the product-basis ket written as a +/- pattern, e.g. ``"+-+" -> 2``."""
    if not pattern or any(c not in "+-" for c in pattern):
        raise ValueError(f"pattern must be a nonempty string over '+'/'-', got {pattern!r}")
    return int("".join("0" if c == "+" else "1" for c in pattern), 2)


def basis_pattern(index: int, n_particles: int) -> str:
    """Inverse of :func:`basis_index`: the +/- label of a basis index."""
    if not 0 <= index < 2**n_particles:
        raise ValueError(f"index {index} out of range for {n_particles} particles")
    bits = format(index, f"0{n_particles}b")
    return "".join("+" if b == "0" else "-" for b in bits)


class StateVector:
    """Normalized complex amplitude vector over the sigma_z product basis."""

    __slots__ = ("_amps",)

    def __init__(self, amplitudes, *, normalize: bool = False):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        _check_dim(amps.size, "state")
        norm = float(np.linalg.norm(amps))
        if norm < 1e-12:
            raise ValueError("state vector must be nonzero")
        if normalize:
            amps = amps / norm
        elif abs(norm - 1.0) > _UNIT_NORM_TOL:
            raise ValueError(f"amplitudes have norm {norm}; pass normalize=True to rescale")
        amps.setflags(write=False)
        self._amps = amps

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    @property
    def dim(self) -> int:
        return self._amps.size

    @property
    def num_particles(self) -> int:
        return self.dim.bit_length() - 1

    def normalize(self) -> "StateVector":
        """Rescaled copy with sum of |amplitude|^2 equal to 1 (within 1e-12)."""
        return StateVector(self._amps, normalize=True)

    def amplitude(self, which: int | str) -> complex:
        """Amplitude at a basis index, or at a +/- pattern such as ``"+-+"``."""
        if isinstance(which, str):
            if 2 ** len(which) != self.dim:
                raise ValueError(f"pattern {which!r} does not address a dim-{self.dim} state")
            which = basis_index(which)
        return complex(self._amps[which])

    def overlap(self, other: "StateVector") -> complex:
        """Inner product <self|other>."""
        if other.dim != self.dim:
            raise ValueError("states live in different spaces")
        return complex(np.vdot(self._amps, other._amps))

    def parallel_to(self, other: "StateVector", tol: float = 1e-12) -> bool:
        """Equality up to a global phase: |<self|other>| = 1 within ``tol``."""
        return abs(abs(self.overlap(other)) - 1.0) <= tol

    def __repr__(self) -> str:
        return f"StateVector(dim={self.dim})"


def basis_state(pattern: str) -> StateVector:
    """The product-basis ket for a +/- pattern."""
    amps = np.zeros(2 ** len(pattern), dtype=complex)
    amps[basis_index(pattern)] = 1.0
    return StateVector(amps)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues (ascending) with their orthogonal eigenprojectors.

    Numerically split degenerate eigenvalues are merged with clustering
    tolerance ``EIGENVALUE_CLUSTER_TOL``; each projector is the sum of the
    outer products of the eigenvectors in its cluster.
    """

    eigenvalues: tuple[float, ...]
    projectors: tuple[np.ndarray, ...]

    def index_of(self, value: float, tol: float = EIGENVALUE_CLUSTER_TOL) -> int:
        evs = np.asarray(self.eigenvalues)
        k = int(np.argmin(np.abs(evs - value)))
        if abs(evs[k] - value) > tol:
            raise ValueError(f"value {value} is not in the spectrum {self.eigenvalues}")
        return k

    def projector_for(self, value: float, tol: float = EIGENVALUE_CLUSTER_TOL) -> np.ndarray:
        return self.projectors[self.index_of(value, tol)]

    def reconstruct(self) -> np.ndarray:
        """Sum of eigenvalue * projector; equals the original operator."""
        out = np.zeros_like(self.projectors[0])
        for value, proj in zip(self.eigenvalues, self.projectors):
            out = out + value * proj
        return out


def _spectral_decomposition(matrix: np.ndarray) -> SpectralDecomposition:
    evals, vecs = np.linalg.eigh(matrix)
    values: list[float] = []
    projectors: list[np.ndarray] = []
    start = 0
    for stop in range(1, len(evals) + 1):
        if stop == len(evals) or evals[stop] - evals[stop - 1] > EIGENVALUE_CLUSTER_TOL:
            block = vecs[:, start:stop]
            proj = block @ block.conj().T
            proj = (proj + proj.conj().T) / 2
            proj.setflags(write=False)
            values.append(float(np.mean(evals[start:stop])))
            projectors.append(proj)
            start = stop
    return SpectralDecomposition(tuple(values), tuple(projectors))


class Observable:
    """Hermitian operator with a lazily cached spectral decomposition."""

    __slots__ = ("_matrix", "label", "_spectral")

    def __init__(self, entries, label: str | None = None):
        mat = np.array(entries, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"operator entries must form a square matrix, got shape {mat.shape}")
        _check_dim(mat.shape[0], "operator")
        deviation = float(np.max(np.abs(mat - mat.conj().T)))
        if deviation > HERMITIAN_TOL:
            raise ValueError(f"matrix is not Hermitian (max deviation {deviation:.3e})")
        mat = (mat + mat.conj().T) / 2
        mat.setflags(write=False)
        self._matrix = mat
        self.label = label
        self._spectral = None

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def num_particles(self) -> int:
        return self.dim.bit_length() - 1

    def spectral(self) -> SpectralDecomposition:
        if self._spectral is None:
            self._spectral = _spectral_decomposition(self._matrix)
        return self._spectral

    def eigenvalues(self) -> tuple[float, ...]:
        """Distinct eigenvalues, ascending."""
        return self.spectral().eigenvalues

    def expectation(self, state: StateVector) -> float:
        if state.dim != self.dim:
            raise ValueError("state and observable live in different spaces")
        return float(np.real(np.vdot(state.amplitudes, self._matrix @ state.amplitudes)))

    def is_projector(self, tol: float = PROJECTOR_TOL) -> bool:
        return float(np.max(np.abs(self._matrix @ self._matrix - self._matrix))) <= tol

    def __repr__(self) -> str:
        name = self.label or "Observable"
        return f"{name}[{self.dim}x{self.dim}]"


def tensor(a, b):
    """Kronecker product of two states or two observables.

    The first factor is the most significant one: for states, particle order
    is preserved left to right; for operators, ``tensor(sigma_z, identity)``
    has diagonal (+1, +1, -1, -1).
    """
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        return StateVector(np.kron(a.amplitudes, b.amplitudes), normalize=True)
    if isinstance(a, Observable) and isinstance(b, Observable):
        label = f"{a.label}*{b.label}" if a.label and b.label else None
        return Observable(np.kron(a.matrix, b.matrix), label=label)
    raise TypeError("tensor expects two StateVectors or two Observables")


def common_eigenstate_dim(ops, values) -> int:
    """Dimension of the intersection of eigenspaces ``eigenspace(op_i, value_i)``.

    Each requested value is snapped to the nearest point of its operator's
    spectrum; a value farther than the clustering tolerance from every
    eigenvalue yields dimension 0.  The intersection dimension is computed as
    the nullspace dimension of ``sum_i (op_i - v_i)^dagger (op_i - v_i)``.
    """
    ops = list(ops)
    values = list(values)
    if not ops:
        raise ValueError("need at least one observable")
    if len(ops) != len(values):
        raise ValueError(f"got {len(ops)} observables but {len(values)} values")
    dim = ops[0].dim
    if any(op.dim != dim for op in ops):
        raise ValueError("all observables must act on the same space")

    snapped: list[float] = []
    for op, value in zip(ops, values):
        evs = np.asarray(op.eigenvalues())
        k = int(np.argmin(np.abs(evs - value)))
        if abs(evs[k] - value) > EIGENVALUE_CLUSTER_TOL:
            return 0
        snapped.append(float(evs[k]))

    gram = np.zeros((dim, dim), dtype=complex)
    identity = np.eye(dim)
    for op, value in zip(ops, snapped):
        shifted = op.matrix - value * identity
        gram += shifted.conj().T @ shifted
    eigs = np.linalg.eigvalsh(gram)
    return int(np.count_nonzero(eigs < _NULLSPACE_TOL))


def has_common_eigenstate(ops) -> bool:
    """Whether any tuple of eigenvalues (one per operator) has a common eigenstate.

    Exhaustive loop over the Cartesian product of the operators' spectra.
    """
    ops = list(ops)
    if not ops:
        raise ValueError("need at least one observable")
    spectra = [op.eigenvalues() for op in ops]
    return any(common_eigenstate_dim(ops, combo) >= 1 for combo in itertools.product(*spectra))


def acts_only_on(op: Observable, particles, n_particles: int, tol: float = PROJECTOR_TOL) -> bool:
    """Whether ``op`` equals (operator on ``particles``) tensor identity on the rest.

    The reduced operator on the region is recovered by a normalized partial
    trace over the complement and compared entrywise against ``op``.
    """
    region = sorted(set(particles))
    if op.dim != 2**n_particles:
        raise ValueError(f"operator dimension {op.dim} does not match {n_particles} particles")
    if any(p < 1 or p > n_particles for p in region):
        raise ValueError(f"particle indices {region} out of range 1..{n_particles}")
    rest = [p for p in range(1, n_particles + 1) if p not in region]
    if not rest:
        return True

    perm = [p - 1 for p in region] + [p - 1 for p in rest]
    tens = op.matrix.reshape([2] * (2 * n_particles))
    tens = np.transpose(tens, perm + [n_particles + ax for ax in perm])
    d_region, d_rest = 2 ** len(region), 2 ** len(rest)
    blocks = tens.reshape(d_region, d_rest, d_region, d_rest)
    reduced = np.einsum("ajbj->ab", blocks) / d_rest
    rebuilt = np.kron(reduced, np.eye(d_rest))
    return float(np.max(np.abs(rebuilt - blocks.reshape(op.dim, op.dim)))) <= tol
