"""Projective measurement: Born probabilities, Lüders collapse, seeded sampling.

Joint operations are defined only for pairwise commuting observables, so every
probability here is a genuine joint-measurement probability and never a
silently order-dependent sequential one.

Sampling is counter-based: a run over ``k`` observables keyed by ``seed`` uses
a Philox (philox4x64) stream in which trial ``t`` consumes exactly the
uniforms at offsets ``t*k .. t*k + k - 1``.  Any trial can therefore be
regenerated independently of the others, runs are reproducible for a fixed
(seed, trials, observable order), and extending ``trials`` preserves the
earlier trials unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import Observable, StateVector

COMMUTATION_TOL = 1e-10
SPECTRUM_MATCH_TOL = 1e-8
ZERO_PROBABILITY_TOL = 1e-12
RNG_ALGORITHM = "philox4x64"

__all__ = [
    "COMMUTATION_TOL",
    "SPECTRUM_MATCH_TOL",
    "ZERO_PROBABILITY_TOL",
    "RNG_ALGORITHM",
    "IncompatibleObservablesError",
    "ZeroProbabilityError",
    "OutcomeAssignment",
    "MeasurementRecord",
    "commutes",
    "outcome_probability",
    "conditional_probability",
    "collapse",
    "sample_joint",
    "sample_counts",
]


class IncompatibleObservablesError(ValueError):
    """An operation that requires commuting observables got a non-commuting pair."""


class ZeroProbabilityError(ValueError):
    """Conditioning or collapsing on an outcome whose probability is (numerically) zero."""


def commutes(a: Observable, b: Observable, tol: float = COMMUTATION_TOL) -> bool:
    """Whether the commutator ab - ba vanishes entrywise within ``tol``."""
    if a.dim != b.dim:
        raise ValueError("observables act on different spaces")
    comm = a.matrix @ b.matrix - b.matrix @ a.matrix
    return float(np.max(np.abs(comm))) < tol


def _label(obs: Observable) -> str:
    return obs.label or f"O[{obs.dim}x{obs.dim}]"


class OutcomeAssignment:
    """Joint outcome (observable, eigenvalue) pairs over mutually commuting observables."""

    __slots__ = ("_pairs", "_dim", "_projector")

    def __init__(self, pairs, *, dim: int | None = None):
        pairs = tuple((obs, float(value)) for obs, value in pairs)
        if pairs:
            first = pairs[0][0]
            if dim is not None and dim != first.dim:
                raise ValueError(f"explicit dim {dim} does not match observables of dim {first.dim}")
            dim = first.dim
            for obs, value in pairs:
                if obs.dim != dim:
                    raise ValueError("all observables in an assignment must share a dimension")
                evs = np.asarray(obs.eigenvalues())
                if float(np.min(np.abs(evs - value))) > SPECTRUM_MATCH_TOL:
                    raise ValueError(f"{value} is not in the spectrum of {_label(obs)}")
            for i in range(len(pairs)):
                for j in range(i + 1, len(pairs)):
                    if not commutes(pairs[i][0], pairs[j][0]):
                        raise IncompatibleObservablesError(
                            f"{_label(pairs[i][0])} and {_label(pairs[j][0])} do not commute"
                        )
        elif dim is None:
            raise ValueError("an empty assignment needs an explicit dim")
        self._pairs = pairs
        self._dim = dim
        self._projector = None

    @property
    def pairs(self) -> tuple:
        return self._pairs

    @property
    def dim(self) -> int:
        return self._dim

    def __len__(self) -> int:
        return len(self._pairs)

    def joint_projector(self) -> np.ndarray:
        """Product of the eigenprojectors (order irrelevant by commutation)."""
        if self._projector is None:
            proj = np.eye(self._dim, dtype=complex)
            for obs, value in self._pairs:
                proj = proj @ obs.spectral().projector_for(value, SPECTRUM_MATCH_TOL)
            self._projector = proj
        return self._projector

    def extended(self, obs: Observable, value: float) -> "OutcomeAssignment":
        return OutcomeAssignment(self._pairs + ((obs, float(value)),), dim=self._dim)

    def describe(self) -> str:
        if not self._pairs:
            return "(no conditioning)"
        return ", ".join(f"{_label(obs)}={value:+g}" for obs, value in self._pairs)

    def __repr__(self) -> str:
        return f"OutcomeAssignment({self.describe()})"


def outcome_probability(state: StateVector, assignment: OutcomeAssignment) -> float:
    """Born probability of a joint outcome: <state| P_1 P_2 ... |state>, clamped to [0, 1]."""
    if assignment.dim != state.dim:
        raise ValueError("state and assignment live in different spaces")
    projected = assignment.joint_projector() @ state.amplitudes
    p = float(np.real(np.vdot(state.amplitudes, projected)))
    return min(max(p, 0.0), 1.0)


def conditional_probability(state: StateVector, target, given: OutcomeAssignment) -> float:
    """P(target | given) = P(target and given) / P(given).

    Defined only when the target observable commutes with every conditioning
    observable; by commutation this equals the sequential (measure-given,
    then measure-target) probability.
    """
    obs, value = target
    for g_obs, _ in given.pairs:
        if not commutes(obs, g_obs):
            raise IncompatibleObservablesError(
                f"target {_label(obs)} does not commute with conditioning {_label(g_obs)}"
            )
    p_given = outcome_probability(state, given)
    if p_given <= ZERO_PROBABILITY_TOL:
        raise ZeroProbabilityError(
            f"conditional on {given.describe()} undefined: outcome probability {p_given}"
        )
    p_joint = outcome_probability(state, given.extended(obs, value))
    return min(p_joint / p_given, 1.0)


def collapse(state: StateVector, observable: Observable, value: float) -> StateVector:
    """Post-measurement state: eigenprojector applied and renormalized."""
    if observable.dim != state.dim:
        raise ValueError("state and observable live in different spaces")
    proj = observable.spectral().projector_for(value, SPECTRUM_MATCH_TOL)
    amps = proj @ state.amplitudes
    weight = float(np.real(np.vdot(amps, amps)))
    if weight <= ZERO_PROBABILITY_TOL:
        raise ZeroProbabilityError(
            f"cannot collapse onto {_label(observable)}={value:+g}: outcome probability {weight}"
        )
    return StateVector(amps / np.sqrt(weight))


@dataclass(frozen=True)
class MeasurementRecord:
    """One sampled trial: (label, eigenvalue) outcomes and the final collapsed state."""

    trial: int
    outcomes: tuple[tuple[str, float], ...]
    post_state: StateVector


def _require_commuting(observables) -> list[Observable]:
    obs = list(observables)
    if not obs:
        raise ValueError("need at least one observable")
    dim = obs[0].dim
    if any(o.dim != dim for o in obs):
        raise ValueError("all observables must act on the same space")
    for i in range(len(obs)):
        for j in range(i + 1, len(obs)):
            if not commutes(obs[i], obs[j]):
                raise IncompatibleObservablesError(f"{_label(obs[i])} and {_label(obs[j])} do not commute")
    return obs


def _trial_uniforms(seed: int, trials: int, draws_per_trial: int) -> np.ndarray:
    key = int(seed) & 0xFFFFFFFFFFFFFFFF
    gen = np.random.Generator(np.random.Philox(key=key))
    return gen.random((trials, draws_per_trial))


def _sample_indices(state, observables, seed, trials):
    """Outcome indices (into each observable's distinct eigenvalues) per trial.

    Sequential Born-rule draws with Lüders collapse in the given order; the
    conditional distributions form a small tree that is computed once, so the
    per-trial work is just mapping uniforms through cumulative probabilities.
    """
    obs = _require_commuting(observables)
    if obs[0].dim != state.dim:
        raise ValueError("state and observables live in different spaces")
    if trials < 1:
        raise ValueError("trials must be positive")
    k = len(obs)
    uniforms = _trial_uniforms(seed, trials, k)
    indices = np.empty((trials, k), dtype=np.intp)
    leaf_states: dict[tuple[int, ...], StateVector] = {}

    def descend(rows: np.ndarray, current: StateVector, prefix: tuple[int, ...]) -> None:
        depth = len(prefix)
        if depth == k:
            leaf_states[prefix] = current
            return
        spec = obs[depth].spectral()
        amps = current.amplitudes
        probs = np.array(
            [max(float(np.real(np.vdot(amps, proj @ amps))), 0.0) for proj in spec.projectors]
        )
        cum = np.cumsum(probs)
        choice = np.searchsorted(cum, uniforms[rows, depth], side="right")
        choice = np.minimum(choice, len(probs) - 1)
        stray = probs[choice] <= 1e-15
        if np.any(stray):
            # roundoff pushed a uniform past the last nonzero branch
            choice[stray] = int(np.argmax(probs))
        for i, p in enumerate(probs):
            sub = rows[choice == i]
            if sub.size == 0:
                continue
            indices[sub, depth] = i
            branch = StateVector((spec.projectors[i] @ amps) / np.sqrt(p))
            descend(sub, branch, prefix + (i,))

    descend(np.arange(trials), state, ())
    return obs, indices, leaf_states


def sample_joint(state: StateVector, observables, seed: int, trials: int) -> list[MeasurementRecord]:
    """Sample ``trials`` joint measurements of a commuting observable list.

    Fully reproducible for a fixed (seed, trials, order); the records for the
    first N trials do not depend on the total trial count.
    """
    obs, indices, leaf_states = _sample_indices(state, observables, seed, trials)
    labels = [_label(o) for o in obs]
    spectra = [o.eigenvalues() for o in obs]
    records = []
    for t in range(trials):
        key = tuple(int(i) for i in indices[t])
        outcomes = tuple((labels[d], spectra[d][key[d]]) for d in range(len(obs)))
        records.append(MeasurementRecord(trial=t, outcomes=outcomes, post_state=leaf_states[key]))
    return records


def sample_counts(state: StateVector, observables, seed: int, trials: int) -> dict[tuple[float, ...], int]:
    """Aggregated joint-outcome counts; same stream and draws as :func:`sample_joint`."""
    obs, indices, _ = _sample_indices(state, observables, seed, trials)
    spectra = [o.eigenvalues() for o in obs]
    strides = np.ones(len(obs), dtype=np.intp)
    for d in range(len(obs) - 2, -1, -1):
        strides[d] = strides[d + 1] * len(spectra[d + 1])
    codes = indices @ strides
    unique, counts = np.unique(codes, return_counts=True)
    out: dict[tuple[float, ...], int] = {}
    for code, count in zip(unique, counts):
        key = []
        remainder = int(code)
        for d in range(len(obs)):
            key.append(spectra[d][remainder // strides[d]])
            remainder %= strides[d]
        out[tuple(key)] = int(count)
    return out
