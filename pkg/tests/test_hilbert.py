"""Tests for states, observables, tensor products, and eigenspace intersection."""

import numpy as np
import pytest

from serlab.hilbert import (
    Observable,
    StateVector,
    acts_only_on,
    basis_index,
    basis_pattern,
    basis_state,
    common_eigenstate_dim,
    has_common_eigenstate,
    tensor,
)
from serlab.spin import Axis, embed, hardy_projector, mermin_A, pauli

from oracles import random_hermitian, random_unitary


def identity(dim):
    return Observable(np.eye(dim), label=f"I{dim}")


# --- basis conventions -------------------------------------------------------


def test_basis_index_convention():
    assert basis_index("+++") == 0
    assert basis_index("+-+") == 2
    assert basis_index("-++") == 4
    assert basis_index("---") == 7
    assert basis_pattern(2, 3) == "+-+"


def test_basis_state_roundtrip():
    ket = basis_state("+-")
    assert ket.amplitude(1) == 1.0
    assert ket.amplitude("+-") == 1.0


def test_state_vector_rejects_bad_input():
    with pytest.raises(ValueError):
        StateVector([1.0, 0.0, 0.0])  # not a power of two
    with pytest.raises(ValueError):
        StateVector([0.0, 0.0])  # zero vector
    with pytest.raises(ValueError):
        StateVector([1.0, 1.0])  # unnormalized without normalize=True
    sv = StateVector([1.0, 1.0], normalize=True)
    assert abs(np.linalg.norm(sv.amplitudes) - 1.0) < 1e-12


def test_state_vector_immutable():
    sv = basis_state("+")
    with pytest.raises(ValueError):
        sv.amplitudes[0] = 0.0


# --- tensor -------------------------------------------------------------------


def test_tensor_identities():
    i2 = identity(2)
    assert np.allclose(tensor(i2, i2).matrix, np.eye(4))


def test_tensor_sigma_z_identity_ordering():
    got = tensor(pauli(Axis.Z), identity(2))
    assert np.allclose(np.diag(got.matrix), [1, 1, -1, -1])


def test_tensor_states_index_convention():
    # |+> (x) |-> is the dim-4 basis vector at index 1
    product = tensor(basis_state("+"), basis_state("-"))
    assert product.dim == 4
    assert product.amplitude(1) == 1.0


def test_tensor_rejects_mixed_kinds():
    with pytest.raises(TypeError):
        tensor(basis_state("+"), identity(2))


def test_tensor_associative():
    rng = np.random.default_rng(11)
    for _ in range(10):
        a, b, c = (Observable(random_hermitian(rng, 2)) for _ in range(3))
        left = tensor(tensor(a, b), c).matrix
        right = tensor(a, tensor(b, c)).matrix
        assert np.max(np.abs(left - right)) < 1e-14


# --- spectral decomposition -----------------------------------------------------


def test_spectral_sigma_z():
    spec = pauli(Axis.Z).spectral()
    assert spec.eigenvalues == (-1.0, 1.0)
    assert np.allclose(spec.projector_for(-1.0), [[0, 0], [0, 1]])
    assert np.allclose(spec.projector_for(+1.0), [[1, 0], [0, 0]])


def test_spectral_hardy_projector_ranks():
    spec = hardy_projector().spectral()
    assert np.allclose(spec.eigenvalues, (0.0, 1.0))
    ranks = [int(round(np.trace(p).real)) for p in spec.projectors]
    assert ranks == [1, 3]


def test_spectral_reconstruction_random():
    rng = np.random.default_rng(23)
    for dim in (2, 4, 8):
        for _ in range(20):
            mat = random_hermitian(rng, dim)
            spec = Observable(mat).spectral()
            assert np.max(np.abs(spec.reconstruct() - mat)) < 1e-10
            total = sum(spec.projectors)
            assert np.max(np.abs(total - np.eye(dim))) < 1e-10
            for i, p in enumerate(spec.projectors):
                assert np.max(np.abs(p @ p - p)) < 1e-10
                for q in spec.projectors[i + 1 :]:
                    assert np.max(np.abs(p @ q)) < 1e-10
            assert all(x < y for x, y in zip(spec.eigenvalues, spec.eigenvalues[1:]))


def test_spectral_rejects_non_hermitian():
    with pytest.raises(ValueError):
        Observable([[0.0, 1.0], [0.0, 0.0]])


def test_spectral_deterministic():
    mat = random_hermitian(np.random.default_rng(5), 8)
    a = Observable(mat).spectral()
    b = Observable(mat).spectral()
    assert a.eigenvalues == b.eigenvalues
    for p, q in zip(a.projectors, b.projectors):
        assert np.array_equal(p, q)


def test_degenerate_eigenvalues_are_clustered():
    # Conjugated diagonal with a doubly degenerate eigenvalue split only by roundoff
    rng = np.random.default_rng(31)
    u = random_unitary(rng, 4)
    diag = np.diag([1.0, 1.0, 2.0, 3.0]).astype(complex)
    spec = Observable(u @ diag @ u.conj().T).spectral()
    assert len(spec.eigenvalues) == 3
    assert abs(np.trace(spec.projector_for(1.0)).real - 2.0) < 1e-9


# --- common eigenstates -----------------------------------------------------------


def test_common_eigenstate_dim_product_basis():
    ops = [tensor(pauli(Axis.Z), identity(2)), tensor(identity(2), pauli(Axis.Z))]
    assert common_eigenstate_dim(ops, [+1.0, +1.0]) == 1


def test_common_eigenstate_dim_hardy_triple_is_zero():
    ops = [
        tensor(pauli(Axis.X), identity(2)),
        tensor(identity(2), pauli(Axis.X)),
        hardy_projector(),
    ]
    for vx1 in (-1.0, +1.0):
        for vx2 in (-1.0, +1.0):
            for vpi in (0.0, 1.0):
                assert common_eigenstate_dim(ops, [vx1, vx2, vpi]) == 0


def test_common_eigenstate_dim_mermin_pairs_zero():
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i < j:
                for vi in (-1.0, +1.0):
                    for vj in (-1.0, +1.0):
                        assert common_eigenstate_dim([mermin_A(i), mermin_A(j)], [vi, vj]) == 0


def test_common_eigenstate_value_not_in_spectrum():
    assert common_eigenstate_dim([pauli(Axis.Z)], [0.5]) == 0
    assert common_eigenstate_dim([pauli(Axis.Z)], [1.0 + 1e-7]) == 0
    # but a value within the clustering tolerance is snapped onto the spectrum
    assert common_eigenstate_dim([pauli(Axis.Z)], [1.0 + 1e-9]) == 1


def test_has_common_eigenstate_cases():
    assert has_common_eigenstate([tensor(pauli(Axis.Z), identity(2)), tensor(identity(2), pauli(Axis.Z))])
    assert not has_common_eigenstate(
        [tensor(pauli(Axis.X), identity(2)), tensor(identity(2), pauli(Axis.X)), hardy_projector()]
    )
    assert not has_common_eigenstate([pauli(Axis.X), pauli(Axis.Z)])
    with pytest.raises(ValueError):
        has_common_eigenstate([])


def test_commuting_set_joint_eigenbasis_completeness():
    # For commuting sets, the joint eigenspace dimensions over all value tuples
    # partition the space.
    rng = np.random.default_rng(419)
    for dim in (4, 8):
        for _ in range(5):
            u = random_unitary(rng, dim)
            ops = []
            for _ in range(2):
                diag = np.diag(rng.integers(0, 3, size=dim).astype(float)).astype(complex)
                ops.append(Observable(u @ diag @ u.conj().T))
            total = 0
            for va in ops[0].eigenvalues():
                for vb in ops[1].eigenvalues():
                    total += common_eigenstate_dim(ops, [va, vb])
            assert total == dim
            assert has_common_eigenstate(ops)


# --- locality of operators ---------------------------------------------------------


def test_acts_only_on_embedded_operator():
    op = embed(pauli(Axis.X), 2, 3)
    assert acts_only_on(op, {2}, 3)
    assert acts_only_on(op, {2, 3}, 3)  # superset of the support is fine
    assert not acts_only_on(op, {1}, 3)
    assert not acts_only_on(op, {3}, 3)


def test_acts_only_on_nonlocal_projector():
    pi = hardy_projector(3)
    assert acts_only_on(pi, {1, 2}, 3)
    assert not acts_only_on(pi, {1}, 3)
    assert not acts_only_on(pi, {2}, 3)


def test_acts_only_on_identity_anywhere():
    ident = identity(8)
    assert acts_only_on(ident, set(), 3)
    assert acts_only_on(ident, {2}, 3)
