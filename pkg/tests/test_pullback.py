from fractions import Fraction

import pytest

from ccalab.errors import InfiniteLengthError
from ccalab.monomial import MonomialIdeal, VarContext, make_context
from ccalab.polys import p_linear, p_mono
from ccalab.pullback import (
    BElement,
    GradedSubmodule,
    PullbackFamily,
    cokernel_profile,
    colon_in_B,
    conductor,
    conductor_is_irrelevant_primary,
    image_membership,
    regular_sequence_on_B,
    verify_generation,
)

CTX4 = VarContext(("X", "Y", "Z", "W"))


@pytest.fixture
def two_planes():
    return PullbackFamily.from_supports(CTX4, [["X", "Y"], ["Z", "W"]])


@pytest.fixture
def overlap6():
    ctx = make_context(6)
    return PullbackFamily.from_supports(
        ctx,
        [
            ["x1", "x2", "x3", "x4"],
            ["x3", "x4", "x5", "x6"],
            ["x5", "x6", "x1", "x2"],
        ],
    )


@pytest.fixture
def fiber_x1sq():
    ctx = make_context(2, "X")
    return PullbackFamily.congruence(MonomialIdeal.from_strings(ctx, ["X1^2", "X2"]))


# -- construction ---------------------------------------------------------------


def test_antichain_enforced():
    with pytest.raises(ValueError):
        PullbackFamily.from_supports(CTX4, [["X", "Y"], ["X"]])


def test_congruence_needs_proper_ideal():
    with pytest.raises(ValueError):
        PullbackFamily.congruence(MonomialIdeal.unit(CTX4))


def test_from_json_both_modes():
    fam = PullbackFamily.from_json(
        {"vars": ["X", "Y", "Z", "W"], "F": [["X", "Y"], ["Z", "W"]]}
    )
    assert fam.ell == 2 and fam.mode == "intersection"
    fam2 = PullbackFamily.from_json(
        {"mode": "congruence", "vars": ["X1", "X2"], "q": [[2, 0], [0, 1]]}
    )
    assert fam2.mode == "congruence" and fam2.ell == 2


# -- image membership -------------------------------------------------------------


def test_diagonal_membership_with_witness(two_planes):
    belt = BElement.from_T(two_planes, p_linear(4, [0]))
    inside, witness = image_membership(two_planes, belt)
    assert inside
    assert witness == {(1, 0, 0, 0): Fraction(1)}


def test_overlap_membership_single_component(overlap6):
    # x5 lies in the second and third primes, so (x5, 0, 0) is the image of x5
    belt = BElement(overlap6, (p_linear(6, [4]), {}, {}))
    inside, witness = image_membership(overlap6, belt)
    assert inside
    assert witness == {(0, 0, 0, 0, 1, 0): Fraction(1)}


def test_membership_fails_on_mismatched_coefficients(two_planes):
    # X survives only in the second component; placing it in the first
    # component alone is fine, but a mismatch across shared monomials fails
    shared = BElement.from_T(two_planes, p_mono((0, 0, 0, 0), 1))
    bad = BElement(
        two_planes, (shared.parts[0], {})
    )  # (1, 0): the unit survives everywhere
    assert not bad.in_A()[0]


def test_congruence_membership(fiber_x1sq):
    one = p_mono((0, 0), 1)
    assert not BElement(fiber_x1sq, (one, {})).in_A()[0]  # (1, 0): 1 not in q
    x2 = p_mono((0, 1), 1)
    assert BElement(fiber_x1sq, (x2, {})).in_A()[0]  # (X2, 0): X2 in q
    assert BElement.from_T(fiber_x1sq, p_linear(2, [0])).in_A()[0]  # diagonal


# -- conductor ---------------------------------------------------------------------


def test_conductor_two_planes_is_max_ideal(two_planes):
    assert conductor(two_planes) == MonomialIdeal.from_support(CTX4, CTX4.names)


def test_conductor_overlap_is_max_ideal(overlap6):
    ctx = overlap6.context
    assert conductor(overlap6) == MonomialIdeal.from_support(ctx, ctx.names)


def test_conductor_congruence_returns_q(fiber_x1sq):
    assert conductor(fiber_x1sq) == fiber_x1sq.q


def test_conductor_not_always_irrelevant_primary():
    ctx = VarContext(("X1", "X2", "Y1", "Y2", "Z1", "Z2"))
    fam = PullbackFamily.from_supports(
        ctx, [["X1", "X2"], ["Y1", "Y2"], ["Z1", "Z2"]]
    )
    assert not conductor_is_irrelevant_primary(fam)
    with pytest.raises(InfiniteLengthError):
        cokernel_profile(fam)


# -- cokernel profiles ---------------------------------------------------------------


def test_cokernel_two_planes(two_planes):
    prof = cokernel_profile(two_planes)
    assert prof.length == 1
    assert prof.hilbert == (1,)
    assert prof.socle_dim == 1
    assert prof.annihilator_ok


def test_cokernel_overlap_family(overlap6):
    prof = cokernel_profile(overlap6)
    assert prof.length == 2
    assert prof.socle_dim == 2
    assert prof.hilbert == (2,)
    assert prof.annihilator_ok


def test_cokernel_fiber(fiber_x1sq):
    prof = cokernel_profile(fiber_x1sq)
    assert prof.length == 2
    assert prof.hilbert == (1, 1)
    assert prof.socle_dim == 1
    assert prof.annihilator_ok


def test_cokernel_degenerate_single_component():
    ctx = VarContext(("x", "y", "u"))
    fam = PullbackFamily.from_supports(ctx, [["x", "y"]])
    prof = cokernel_profile(fam)
    assert prof.length == 0
    assert prof.socle_dim == 0


def test_cokernel_negative_control():
    ctx = make_context(2, "X")
    fam = PullbackFamily.congruence(
        MonomialIdeal.from_strings(ctx, ["X1^2", "X1*X2", "X2^2"])
    )
    prof = cokernel_profile(fam)
    assert prof.length == 3
    assert prof.socle_dim == 2


# -- colon modules --------------------------------------------------------------------


def test_colon_by_unit_recovers_A(two_planes):
    unit_ideal = MonomialIdeal.unit(CTX4)
    sub_a = GradedSubmodule.unit_A(two_planes)
    res = colon_in_B(two_planes, sub_a, unit_ideal, bound=4)
    for d in range(5):
        assert res.piece(d) == sub_a.piece(d)
    assert res.bound == 4


def test_colon_max_ideal_powers_fill_B(two_planes):
    m = MonomialIdeal.from_support(CTX4, CTX4.names)
    power = m
    for ell in (1, 2, 3):
        sub = GradedSubmodule.from_ideal(two_planes, power)
        res = colon_in_B(two_planes, sub, power, bound=4)
        assert res.equals_all_of_B(two_planes)
        power = power * m


def test_colon_of_A_by_max_ideal_fills_B(overlap6):
    ctx = overlap6.context
    m = MonomialIdeal.from_support(ctx, ctx.names)
    res = colon_in_B(overlap6, GradedSubmodule.unit_A(overlap6), m, bound=3)
    assert res.equals_all_of_B(overlap6)


def test_colon_default_bound(two_planes):
    m = MonomialIdeal.from_support(CTX4, CTX4.names)
    res = colon_in_B(two_planes, GradedSubmodule.unit_A(two_planes), m)
    assert res.bound == 1 + 4
    assert "degree 5" in res.note


# -- generation and regular sequences ---------------------------------------------------


def test_generation_overlap(overlap6):
    cond = conductor(overlap6)
    a = p_linear(6, [0, 2, 4])
    b = p_linear(6, [1, 3, 5])
    ok, _ = verify_generation(overlap6, cond, [a, b])
    assert ok
    ok_single, detail = verify_generation(overlap6, cond, [a])
    assert not ok_single
    assert detail["reverse"]


def test_generation_rejects_inhomogeneous(overlap6):
    cond = conductor(overlap6)
    bad = {(1, 0, 0, 0, 0, 0): Fraction(1), (2, 0, 0, 0, 0, 0): Fraction(1)}
    with pytest.raises(ValueError):
        verify_generation(overlap6, cond, [bad])


def test_generation_fiber_alphas(fiber_x1sq):
    cond = conductor(fiber_x1sq)
    ok, _ = verify_generation(fiber_x1sq, cond, [p_mono((2, 0)), p_mono((0, 1))])
    assert ok
    ok_single, _ = verify_generation(fiber_x1sq, cond, [p_mono((2, 0))])
    assert not ok_single


def test_regular_sequence(two_planes):
    a = p_linear(4, [0, 2])
    b = p_linear(4, [1, 3])
    assert regular_sequence_on_B(two_planes, [a, b], 3)
    # a, a is never regular: multiplication by a is zero on B/aB
    assert not regular_sequence_on_B(two_planes, [a, a], 2)


def test_conductor_annihilates_cokernel(overlap6):
    # a (B/A) = 0 for every conductor generator: checked inside the profile
    assert cokernel_profile(overlap6).annihilator_ok


def test_stabilization_runtime_check(two_planes, overlap6, fiber_x1sq):
    # hilbert functions end at their last nonzero entry by construction
    for fam in (two_planes, overlap6, fiber_x1sq):
        prof = cokernel_profile(fam)
        assert not prof.hilbert or prof.hilbert[-1] != 0
