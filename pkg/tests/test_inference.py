"""Tests for SER certification and the four scenario runners."""

import numpy as np
import pytest

from serlab.inference import (
    SerClaim,
    certify_ser,
    hardy_null_outcome_scan,
    run_bell_ghz,
    run_bell_hardy,
    run_epr_ghz,
    run_epr_psi,
    run_scenario,
    sample_scenario,
)
from serlab.measurement import OutcomeAssignment
from serlab.spin import Axis, hardy_projector, spin
from serlab.states import PsiParams, ghz_mermin_state, hardy_state, psi_state, random_psi_params

DEFAULT = PsiParams(0.5, 0.5)


# --- certification ---------------------------------------------------------------


def test_certify_accepts_genuine_claim():
    state = psi_state(DEFAULT)
    claim = SerClaim(
        spin(Axis.X, 2, 3),
        -1.0,
        OutcomeAssignment([(spin(Axis.Z, 1, 3), +1.0)]),
        frozenset({1}),
        frozenset({2}),
    )
    cert = certify_ser(state, claim)
    assert cert
    assert cert.failed_clause is None


def test_certify_rejects_uncertain_claim():
    # Conditioning on the minus branch leaves probability 1/2, not 1
    state = psi_state(DEFAULT)
    claim = SerClaim(
        spin(Axis.X, 2, 3),
        -1.0,
        OutcomeAssignment([(spin(Axis.Z, 1, 3), -1.0)]),
        frozenset({1}),
        frozenset({2}),
    )
    cert = certify_ser(state, claim)
    assert not cert
    assert cert.failed_clause == "not-certain"


def test_certify_rejects_overlapping_regions():
    claim = SerClaim(
        hardy_projector(),
        1.0,
        OutcomeAssignment((), dim=4),
        inferring_region=frozenset({1, 2}),
        target_region=frozenset({1, 2}),
    )
    cert = certify_ser(hardy_state(), claim)
    assert not cert
    assert cert.failed_clause == "region-overlap"


def test_certify_rejects_nonlocal_conditioning():
    # Claimed inferring region {3}, but the conditioning observable acts on particle 1
    state = psi_state(DEFAULT)
    claim = SerClaim(
        spin(Axis.X, 2, 3),
        -1.0,
        OutcomeAssignment([(spin(Axis.Z, 1, 3), +1.0)]),
        frozenset({3}),
        frozenset({2}),
    )
    cert = certify_ser(state, claim)
    assert not cert
    assert cert.failed_clause == "conditioning-not-local"


def test_certify_rejects_incompatible_target():
    state = psi_state(DEFAULT)
    claim = SerClaim(
        spin(Axis.X, 1, 3),
        +1.0,
        OutcomeAssignment([(spin(Axis.Z, 1, 3), +1.0)]),
        frozenset({1}),
        frozenset({2}),
    )
    cert = certify_ser(state, claim)
    assert not cert
    assert cert.failed_clause == "incompatible-target"


def test_certify_rejects_unpreparable_condition():
    mu = ghz_mermin_state()
    given = OutcomeAssignment([(spin(Axis.Z, 1, 3), +1.0), (spin(Axis.Z, 2, 3), -1.0)])
    claim = SerClaim(spin(Axis.Z, 3, 3), +1.0, given, frozenset({1, 2}), frozenset({3}))
    cert = certify_ser(mu, claim)
    assert not cert
    assert cert.failed_clause == "condition-unpreparable"


# --- scenario runners --------------------------------------------------------------


def test_run_epr_psi_defaults():
    report = run_epr_psi(DEFAULT)
    assert report.passed()
    assert report.incompleteness_verdict is True
    assert report.post_selection_probability == pytest.approx(0.25, abs=1e-12)
    assert len(report.certified_claims) == 3
    assert all(bool(cert) for _, cert in report.certified_claims)
    anchors = [c.anchor for c in report.checks]
    assert "epr-psi:no-common-eigenstate" in anchors
    assert "epr-psi:pair-state-caveat" in anchors


def test_run_epr_ghz():
    report = run_epr_ghz()
    assert report.passed()
    assert report.incompleteness_verdict is True
    assert len(report.certified_claims) == 24  # 8 branches x 3 claims
    branch_checks = [c for c in report.checks if c.anchor.startswith("epr-ghz:branch")]
    assert len(branch_checks) == 8
    pair_checks = [c for c in report.checks if "no-common-eigenstate" in c.anchor]
    assert len(pair_checks) == 3


def test_run_bell_hardy_defaults():
    report = run_bell_hardy(DEFAULT)
    assert report.passed()
    assert report.contradiction_verdict is True
    assert report.post_selection_probability == pytest.approx(0.0625, abs=1e-12)
    zero_check = next(c for c in report.checks if c.anchor == "bell-hardy:zero-operator")
    assert zero_check.computed < 1e-12


def test_run_bell_ghz():
    report = run_bell_ghz()
    assert report.passed()
    assert report.contradiction_verdict is True
    identity_check = next(c for c in report.checks if c.anchor == "bell-ghz:b-product-identity")
    assert identity_check.computed < 1e-12
    certainty_check = next(c for c in report.checks if c.anchor == "bell-ghz:x-product-certainty")
    assert certainty_check.computed == pytest.approx(1.0, abs=1e-12)


def test_verdicts_invariant_over_random_parameters():
    rng = np.random.default_rng(77)
    for _ in range(100):
        params = random_psi_params(rng)
        assert run_epr_psi(params).incompleteness_verdict is True
        assert run_bell_hardy(params).contradiction_verdict is True


def test_run_scenario_dispatch():
    assert run_scenario("epr-ghz").scenario == "epr-ghz"
    with pytest.raises(ValueError):
        run_scenario("nope")


# --- mutation sensitivity ------------------------------------------------------------


@pytest.mark.parametrize("scenario,n_claims", [("epr-psi", 3), ("bell-hardy", 3)])
def test_flipping_any_psi_claim_fails(scenario, n_claims):
    for k in range(n_claims):
        report = run_scenario(scenario, DEFAULT, flip_claim=k)
        assert not report.passed()
        flipped_cert = report.certified_claims[k][1]
        assert not flipped_cert
        assert flipped_cert.failed_clause == "not-certain"


@pytest.mark.parametrize("scenario", ["epr-ghz", "bell-ghz"])
def test_flipping_ghz_claims_fails(scenario):
    for k in (0, 7, 23):
        report = run_scenario(scenario, flip_claim=k)
        assert not report.passed()
        assert not report.certified_claims[k][1]


def test_flip_claim_out_of_range():
    with pytest.raises(ValueError):
        run_epr_psi(DEFAULT, flip_claim=3)


def test_every_emitted_claim_recertifies():
    reports = [run_epr_psi(DEFAULT), run_epr_ghz(), run_bell_hardy(DEFAULT), run_bell_ghz()]
    states = [psi_state(DEFAULT), ghz_mermin_state(), psi_state(DEFAULT), ghz_mermin_state()]
    for report, state in zip(reports, states):
        for claim, cert in report.certified_claims:
            assert bool(cert)
            assert bool(certify_ser(state, claim))


# --- Monte Carlo companions ------------------------------------------------------------


def test_sample_scenario_bell_ghz_hard_constraint():
    report = sample_scenario("bell-ghz", seed=7, trials=20_000)
    assert report.passed()
    product_check = next(c for c in report.checks if "product-constraint" in c.anchor)
    assert product_check.computed == 0
    assert report.sampling.unobserved_admissible == []
    assert report.sampling.algorithm == "philox4x64"


def test_sample_scenario_epr_ghz_covers_all_branches():
    report = sample_scenario("epr-ghz", seed=11, trials=20_000)
    assert report.passed()
    assert report.sampling.unobserved_admissible == []
    # all 8 sigma_y branches carry probability 1/8
    for entry in report.sampling.entries:
        assert entry.expected == pytest.approx(0.125, abs=1e-12)


def test_sample_scenario_epr_psi_z_scores():
    report = sample_scenario("epr-psi", DEFAULT, seed=13, trials=20_000)
    assert report.passed()
    zs = [e.z for e in report.sampling.entries if e.z is not None]
    assert len(zs) == 4
    assert all(abs(z) < 4 for z in zs)


def test_hardy_null_outcome_scan_small():
    hits = hardy_null_outcome_scan(seed=5, n_states=5, trials=20_000)
    assert hits == [0, 0, 0, 0, 0]
