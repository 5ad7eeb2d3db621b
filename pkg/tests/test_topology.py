"""Neighborhoods, symbolic sets, bound functions, and the boundedness deciders."""

from fractions import Fraction as F

import pytest

from latring import (
    EvSeq,
    FinVec,
    FiniteSet,
    ImageSet,
    Interval,
    Multiplication,
    NbhdSet,
    Neighborhood,
    NotBounded,
    SeqHom,
    Space,
    SolidHull,
    TopologyId,
    coordinate_bounds,
    fatou_check,
    group_bound_multiplier,
    hull_bounded_preservation,
    is_order_closed,
    is_solid,
    nbhd_member,
    sample_member,
    set_contains,
    set_group_bounded,
    set_ring_bounded,
    solid_hull,
)
from latring.extended import ext_le, is_inf
from latring.sampling import rand_element, rng_for
from latring.topology import non_solid_witness

PROD = Space.evseq(TopologyId.EVSEQ_PRODUCT)
SUP = Space.evseq(TopologyId.EVSEQ_SUPNORM)
Q2 = Space.qn(2)
ZD = Space.z_discrete()


def test_nbhd_membership_examples():
    x = EvSeq.of(1, -1, tail=5)
    assert nbhd_member(Neighborhood.product({0, 1}, 1), x)       # tail unconstrained
    assert not nbhd_member(Neighborhood.sup_ball(1), x)          # |5| > 1
    assert nbhd_member(Neighborhood.box((1, 2)), FinVec.of(1, -2))  # closed box boundary


def test_solid_hull_membership():
    hull = solid_hull(Q2, [FinVec.of(1, -2)])
    assert set_contains(hull, FinVec.of(1, 2))
    assert set_contains(hull, FinVec.of(-1, F(3, 2)))
    assert not set_contains(hull, FinVec.of(2, 0))

    two = solid_hull(Q2, [FinVec.of(1, 0), FinVec.of(0, 1)])
    assert not set_contains(two, FinVec.of(1, 1))  # neither generator dominates
    assert set_contains(two, FinVec.of(0, -1))


def test_solid_hull_idempotent_membership():
    rng = rng_for(5)
    hull = solid_hull(Q2, [FinVec.of(2, -1), FinVec.of(0, 3)])
    hull2 = solid_hull(Q2, list(hull.generators))
    for _ in range(200):
        x = rand_element(rng, Q2)
        assert set_contains(hull, x) == set_contains(hull2, x)
    assert coordinate_bounds(hull) == coordinate_bounds(hull2)


def test_coordinate_bounds_examples():
    b = coordinate_bounds(NbhdSet(PROD, Neighborhood.product({0}, 2)))
    assert b.at(0) == 2 and is_inf(b.at(1)) and is_inf(b.tail)

    b = coordinate_bounds(SolidHull(Q2, (FinVec.of(1, -2),)))
    assert (b.at(0), b.at(1)) == (1, 2)

    image = ImageSet(
        SUP,
        SeqHom.diagonal(EvSeq.of(3, tail=1)),
        NbhdSet(SUP, Neighborhood.sup_ball(1)),
    )
    b = coordinate_bounds(image)
    assert b.at(0) == 3 and b.tail == 1
    # Cross-check by sampling members of the image.
    rng = rng_for(1)
    for _ in range(100):
        x = sample_member(image, rng)
        for i in range(len(x.prefix) + 1):
            assert ext_le(abs(x.at(i)), b.at(i))


def test_image_membership_with_free_coordinates():
    # A zero coefficient forces the image coordinate to 0 but leaves the
    # preimage coordinate free, which must be filled from the base's range.
    base = Interval(PROD, EvSeq.of(1, 2, tail=0), EvSeq.of(3, 4, tail=1))
    img = ImageSet(PROD, SeqHom.zero(), base)
    assert set_contains(img, EvSeq.zero())
    assert not set_contains(img, EvSeq.constant(1))

    a = SeqHom.diagonal(EvSeq.of(2, 0, tail=3))
    base2 = Interval(PROD, EvSeq.of(-1, 5, tail=-2), EvSeq.of(1, 6, tail=2))
    img2 = ImageSet(PROD, a, base2)
    assert set_contains(img2, EvSeq.of(2, 0, tail=3))
    assert not set_contains(img2, EvSeq.of(2, 1, tail=3))   # coordinate 1 must be 0
    assert not set_contains(img2, EvSeq.of(4, 0, tail=3))   # preimage escapes the base


def test_ring_bounded_examples():
    zero_mult = Space.evseq(TopologyId.EVSEQ_PRODUCT, Multiplication.ZERO)
    v = set_ring_bounded(NbhdSet(zero_mult, Neighborhood.product({0}, 1)))
    assert v.bounded and v.vacuous

    v = set_ring_bounded(NbhdSet(PROD, Neighborhood.product({0}, 1)))
    assert not v.bounded
    assert v.witness == Neighborhood.product({1}, 1)

    x_bar = EvSeq.of(4, tail=2)
    v = set_ring_bounded(Interval(PROD, -x_bar, x_bar))
    assert v.bounded and not v.vacuous


def test_group_bounded_examples():
    S = FiniteSet(Q2, (FinVec.of(10, 0),))
    assert group_bound_multiplier(S, Neighborhood.box((1, 1))) == 10
    assert set_group_bounded(S).bounded

    v = set_group_bounded(NbhdSet(PROD, Neighborhood.product({0}, 1)))
    assert not v.bounded and v.witness == Neighborhood.product({1}, 1)

    # Discrete integers: n * {0} = {0}, so nonzero singletons are unbounded.
    five = FiniteSet(ZD, (5,))
    v = set_group_bounded(five)
    assert not v.bounded and v.witness == Neighborhood.discrete_zero()
    assert group_bound_multiplier(five, Neighborhood.discrete_zero()) is None
    assert set_group_bounded(FiniteSet(ZD, (0,))).bounded
    # ... while ring-boundedness on discrete Z is automatic (V = {0} works).
    assert set_ring_bounded(five).bounded


def test_group_decider_ignores_multiplication():
    zero_mult = Space.evseq(TopologyId.EVSEQ_PRODUCT, Multiplication.ZERO)
    U = Neighborhood.product({0}, 1)
    for space in (PROD, zero_mult):
        v = set_group_bounded(NbhdSet(space, U))
        assert not v.bounded and v.witness == Neighborhood.product({1}, 1)
    # ... while the ring decider trivializes exactly under the zero product.
    assert set_ring_bounded(NbhdSet(zero_mult, U)).vacuous
    assert not set_ring_bounded(NbhdSet(PROD, U)).bounded


def test_solidness_structural_verdicts():
    assert is_solid(NbhdSet(PROD, Neighborhood.product({0, 1}, 1)))
    assert is_solid(SolidHull(Q2, (FinVec.of(1, 2),)))
    assert is_solid(Interval(Q2, FinVec.of(-1, -1), FinVec.of(1, 1)))
    assert not is_solid(FiniteSet(Q2, (FinVec.of(1, 1),)))
    assert not is_solid(Interval(Q2, FinVec.zero(2), FinVec.of(1, 1)))
    assert is_solid(FiniteSet(Q2, (FinVec.zero(2),)))


def test_non_solid_witnesses_check_out():
    for S in (
        FiniteSet(Q2, (FinVec.of(1, 1),)),
        Interval(Q2, FinVec.zero(2), FinVec.of(1, 1)),
        Interval(Q2, FinVec.of(-2, -1), FinVec.of(1, 1)),
        FiniteSet(ZD, (5,)),
    ):
        x, y = non_solid_witness(S)
        assert set_contains(S, y)
        assert not set_contains(S, x)
        ax = abs(x) if not isinstance(x, int) else abs(x)
        ay = abs(y) if not isinstance(y, int) else abs(y)
        assert ax <= ay


def test_solid_sets_pass_spot_checks():
    rng = rng_for(23)
    solids = [
        NbhdSet(SUP, Neighborhood.sup_ball(F(3, 2))),
        SolidHull(PROD, (EvSeq.of(2, -1, tail=1),)),
        Interval(Q2, FinVec.of(-2, -3), FinVec.of(2, 3)),
    ]
    for S in solids:
        assert is_solid(S)
        for _ in range(100):
            y = sample_member(S, rng)
            x = y.scale(F(rng.randint(-4, 4), 4))
            if abs(x) <= abs(y):
                assert set_contains(S, x)


def test_order_closedness_via_monotone_sequences():
    # Closed boxes contain the limits of monotone sequences from inside.
    U = Neighborhood.box((1, 2))
    S = NbhdSet(Q2, U)
    assert is_order_closed(S)
    corner = FinVec.of(1, 2)
    for k in range(1, 20):
        assert set_contains(S, corner.scale(F(k - 1, k)))       # increasing to the corner
        assert set_contains(S, (-corner).scale(F(k - 1, k)))    # decreasing to the opposite one
    assert set_contains(S, corner) and set_contains(S, -corner)


def test_fatou_for_all_topologies():
    for top in TopologyId:
        assert fatou_check(top)


def test_hull_preservation_and_gate():
    rep = hull_bounded_preservation(FiniteSet(Q2, (FinVec.of(1, -2),)))
    assert rep.generators_verdict.bounded and rep.hull_verdict.bounded and rep.bounds_equal

    rep = hull_bounded_preservation(FiniteSet(SUP, (EvSeq.of(3, tail=1),)))
    assert rep.hull_verdict.bounded and rep.bounds_equal

    with pytest.raises(NotBounded):
        hull_bounded_preservation(NbhdSet(PROD, Neighborhood.product({0}, 1)))


def test_ring_and_group_agree_on_box_instances():
    from latring.audits import boundedness_agreement_suite

    result = boundedness_agreement_suite(seed=2, cases=500)
    assert result.passed, result.detail


def test_sampled_members_respect_bounds():
    from latring.audits import sampler_bound_suite

    result = sampler_bound_suite(seed=2, cases=300)
    assert result.passed, result.detail


def test_neighborhood_validation():
    from latring import InvalidElement

    with pytest.raises(InvalidElement):
        Neighborhood.box((0, 1))
    with pytest.raises(InvalidElement):
        Neighborhood.product({0}, 0)
    with pytest.raises(InvalidElement):
        NbhdSet(PROD, Neighborhood.sup_ball(1))  # wrong base for the space
