"""Conditional certainties on the three-particle entangled family.

The state a(|+++> - |+-+> - |-++>) + b|---> has a striking property: a
sigma_z measurement on one particle can make a spin component of a *different*
particle certain.  This script walks through the five certainty identities and
shows the collapse structure that produces them.

Run:  python3 demos/01_certainty_chain.py
"""

from serlab import (
    Axis,
    OutcomeAssignment,
    PsiParams,
    basis_state,
    collapse,
    conditional_probability,
    hardy_projector,
    hardy_state,
    outcome_probability,
    psi_state,
    spin,
    tensor,
)


def main():
    params = PsiParams(0.5, 0.5)
    state = psi_state(params)
    print("state: a(|+++> - |+-+> - |-++>) + b|--->  with a = b = 1/2")
    print()

    sz = {p: spin(Axis.Z, p, 3) for p in (1, 2, 3)}
    sx = {p: spin(Axis.X, p, 3) for p in (1, 2)}
    pi3 = hardy_projector(3)

    certainties = [
        ("sigma_x(2) = -1  given  sigma_z(1) = +1", (sx[2], -1.0), (sz[1], +1.0)),
        ("sigma_x(1) = -1  given  sigma_z(2) = +1", (sx[1], -1.0), (sz[2], +1.0)),
        ("pi(1+2)    = +1  given  sigma_z(3) = +1", (pi3, 1.0), (sz[3], +1.0)),
        ("sigma_z(2) = -1  given  sigma_x(1) = +1", (sz[2], -1.0), (sx[1], +1.0)),
        ("sigma_z(1) = -1  given  sigma_x(2) = +1", (sz[1], -1.0), (sx[2], +1.0)),
    ]
    print("conditional certainties:")
    for label, target, given in certainties:
        p = conditional_probability(state, target, OutcomeAssignment([given]))
        print(f"  P({label}) = {p:.15f}")
    print()

    # The collapse behind the third identity: measuring sigma_z(3) = +1 leaves
    # the first two particles exactly in the Hardy state (no |--> component).
    collapsed = collapse(state, sz[3], +1.0)
    expected = tensor(hardy_state(), basis_state("+"))
    overlap = abs(collapsed.overlap(expected))
    print("collapse on sigma_z(3) = +1:")
    print(f"  |<collapsed | hardy x |+>>| = {overlap:.15f}   (1 means equal up to phase)")
    print()

    # Contrast: conditioning on the minus branch certifies nothing.
    p_half = conditional_probability(state, (sx[2], -1.0), OutcomeAssignment([(sz[1], -1.0)]))
    print(f"on the other branch, P(sigma_x(2) = -1 | sigma_z(1) = -1) = {p_half:.3f} (not 1)")
    print()

    p_post = outcome_probability(state, OutcomeAssignment([(sz[p], +1.0) for p in (1, 2, 3)]))
    print("all three certainties apply at once after post-selecting (+1,+1,+1) on sigma_z:")
    print(f"  P = |a|^2 = {p_post:.4f}")


if __name__ == "__main__":
    main()
