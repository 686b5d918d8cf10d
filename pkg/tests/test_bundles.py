"""Character calculus: conversions, tensor algebra, pushforwards, GRR."""

import random
from fractions import Fraction

import pytest

from cecalc.bundles import (
    BundleChar,
    FiberClass,
    ZetaClass,
    ZetaRing,
    adams,
    chern_from_parts,
    chern_of,
    det,
    dual,
    grr_push_pi,
    line_bundle,
    o_z,
    push_gamma,
    push_pi,
    sym2,
    sym3,
    tensor,
    todd_coefficients,
    twist_z,
    wedge2,
    zeta_twisted_ch,
)
from cecalc.gring import RingSpec
from cecalc.splitting import SplittingType, sym2_type, sym3_type, tensor_type, wedge2_type


def base_ring(truncation=6, extra=()):
    return RingSpec([("c2", 2)] + list(extra), truncation)


def split_char(ring, parts):
    """Direct-sum character of O(e_1 z) + ... + O(e_r z): the split oracle."""
    total = BundleChar.trivial(ring, 0)
    for e in parts:
        total = total + o_z(ring, e)
    return total


# -- z-ring basics -----------------------------------------------------------


def test_z_squared_is_minus_c2():
    ring = base_ring()
    z = FiberClass.z(ring)
    assert z * z == FiberClass(-ring.gen("c2"), ring.zero())


def test_push_pi_reads_z_coefficient():
    ring = base_ring(extra=[("a1", 1)])
    z = FiberClass.z(ring)
    a1 = ring.gen("a1")
    assert push_pi(z) == ring.one()
    assert push_pi(FiberClass.const(ring, 1)).is_zero()
    assert push_pi(FiberClass.of_poly(a1) * z + FiberClass.of_poly(ring.gen("c2"))) == a1


# -- character <-> Chern class conversions -----------------------------------


def test_line_bundle_character_is_exponential():
    ring = base_ring(truncation=5)
    d = 3
    ch = o_z(ring, d)
    z = FiberClass.z(ring)
    assert ch.ch(1) == z * d
    assert ch.ch(2) == (z * d) * (z * d) * Fraction(1, 2)
    assert ch.ch(3) == (z * d) ** 3 * Fraction(1, 6)


def test_rank2_ch2_is_newton_identity():
    ring = base_ring(truncation=5, extra=[("a1", 1), ("a2", 2), ("a1'", 0), ("a2'", 1)])
    parts = [
        (ring.gen("a1"), ring.gen("a1'")),
        (ring.gen("a2"), ring.gen("a2'")),
    ]
    b = chern_from_parts(ring, parts, 2)
    c1 = FiberClass(ring.gen("a1"), ring.gen("a1'"))
    c2cls = FiberClass(ring.gen("a2"), ring.gen("a2'"))
    assert b.ch(2) == (c1 * c1 - c2cls * 2) * Fraction(1, 2)


def test_zero_chern_data_gives_constant_character():
    ring = base_ring()
    b = chern_from_parts(ring, [], 4)
    assert b.rank == 4
    assert all(p.is_zero() for p in b.pieces)
    assert all(c.is_zero() for c in chern_of(b))


def test_chern_from_parts_validates_degrees():
    ring = base_ring(extra=[("a1", 1)])
    with pytest.raises(ValueError, match="homogeneous"):
        chern_from_parts(ring, [(ring.gen("c2"), ring.zero())], 2)  # degree 2 data as c_1
    with pytest.raises(ValueError, match="rank"):
        chern_from_parts(ring, [(ring.gen("a1"), ring.zero())], 0)


def test_chern_of_split_rank2():
    ring = base_ring()
    b = split_char(ring, [1, -1])  # O(z) + O(-z)
    c = chern_of(b)
    assert c[0].is_zero()
    assert c[1] == FiberClass(ring.gen("c2"), ring.zero())  # -z^2 = c2


def test_chern_character_round_trip_random_rank3():
    rng = random.Random(5)
    ring = base_ring(truncation=5, extra=[("u", 1), ("v", 2), ("w", 3)])
    for _ in range(10):
        def homog(d):
            names = {1: "u", 2: "v", 3: "w"}
            if d == 0:
                return ring.const(rng.randint(-3, 3))
            return ring.gen(names[d]) * rng.randint(-3, 3)

        parts = [(homog(i), homog(i - 1)) for i in (1, 2, 3)]
        b = chern_from_parts(ring, parts, 3)
        recovered = chern_of(b)
        for i, (a, ap) in enumerate(parts, start=1):
            assert recovered[i - 1] == FiberClass(a, ap)


# -- tensor algebra ----------------------------------------------------------


def test_dual_is_an_involution_and_negates_odd_pieces():
    ring = base_ring(extra=[("a1", 1), ("a2", 2)])
    b = chern_from_parts(
        ring, [(ring.gen("a1"), ring.const(4)), (ring.gen("a2"), ring.gen("a1"))], 3
    )
    assert dual(dual(b)) == b
    assert dual(b).ch(1) == -b.ch(1)
    assert dual(b).ch(2) == b.ch(2)


def test_tensor_with_trivial_line_is_identity():
    ring = base_ring(extra=[("a1", 1)])
    b = chern_from_parts(ring, [(ring.gen("a1"), ring.const(2))], 2)
    assert tensor(b, BundleChar.trivial(ring, 1)) == b


def test_det_of_rank2_keeps_first_chern_class():
    ring = base_ring(extra=[("b1", 1), ("b1'", 0)])
    c1 = FiberClass(ring.gen("b1"), ring.gen("b1'"))
    b = chern_from_parts(ring, [(ring.gen("b1"), ring.gen("b1'"))], 2)
    d = det(b)
    assert d.rank == 1
    assert d.ch(1) == c1


def test_adams_on_line_bundles_and_composition():
    ring = base_ring()
    assert adams(o_z(ring, 1), 2) == o_z(ring, 2)
    b = split_char(ring, [1, 2, -1])
    assert adams(adams(b, 2), 3) == adams(b, 6)


def test_sym_wedge_ranks_and_sum_rule():
    ring = base_ring(extra=[("a1", 1), ("a2", 2)])
    b3 = chern_from_parts(
        ring, [(ring.gen("a1"), ring.const(1)), (ring.gen("a2"), ring.gen("a1"))], 3
    )
    b5 = BundleChar.trivial(ring, 5)
    assert sym2(b3).rank == 6
    assert wedge2(b5).rank == 10
    assert sym2(b3) + wedge2(b3) == tensor(b3, b3)


def test_split_bundle_operations_match_summand_enumeration():
    ring = base_ring(truncation=6)
    e = SplittingType((2, 3, 4))
    b = split_char(ring, e.parts)
    assert sym2(b) == split_char(ring, sym2_type(e).parts)
    assert wedge2(b) == split_char(ring, wedge2_type(e).parts)
    assert sym3(b) == split_char(ring, sym3_type(e).parts)
    f = SplittingType((1, -2))
    bf = split_char(ring, f.parts)
    assert tensor(b, bf) == split_char(ring, tensor_type(e, f).parts)
    assert dual(b) == split_char(ring, [-x for x in e.parts])


# -- GRR along pi -------------------------------------------------------------


def test_todd_series_coefficients():
    assert todd_coefficients(4) == [
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 12),
        Fraction(0),
        Fraction(-1, 720),
    ]


def test_grr_rank_of_line_bundles():
    ring = base_ring()
    for d in range(0, 4):
        pushed = grr_push_pi(o_z(ring, d))
        assert pushed.rank_value() == d + 1  # h^0(O(d)) on the fiber


def test_grr_on_o_plus_o1_has_rank_three():
    ring = base_ring()
    b = split_char(ring, [0, 1])
    assert grr_push_pi(b).rank_value() == 3


def test_grr_is_additive():
    ring = base_ring()
    a = split_char(ring, [2, -1])
    b = o_z(ring, 1)
    assert grr_push_pi(a + b) == grr_push_pi(a) + grr_push_pi(b)


def test_grr_rank_of_twist_recovers_relative_degree():
    # rank pi_!(E(-z)) = a1' for ch_1(E) = a1 + a1' z
    ring = base_ring(extra=[("a1", 1), ("a1'", 0), ("a2", 2), ("a2'", 1)])
    parts = [
        (ring.gen("a1"), ring.gen("a1'")),
        (ring.gen("a2"), ring.gen("a2'")),
    ]
    e = chern_from_parts(ring, parts, 2)
    pushed = grr_push_pi(twist_z(e, -1))
    assert pushed.rank_poly == ring.gen("a1'")


# -- the projective sub-bundle ------------------------------------------------


def quartic_like_ring():
    return RingSpec(
        [("c2", 2), ("a1", 1), ("a2", 2), ("a3", 3), ("a2'", 1), ("a3'", 2)], 6
    )


def rank3_bundle(ring):
    parts = [
        (ring.gen("a1"), ring.const(7)),
        (ring.gen("a2"), ring.gen("a2'")),
        (ring.gen("a3"), ring.gen("a3'")),
    ]
    return chern_from_parts(ring, parts, 3)


def test_zeta_relation_annihilates():
    ring = quartic_like_ring()
    e = rank3_bundle(ring)
    zr = ZetaRing(e)
    # zeta^r + c1(E^v) zeta^{r-1} + ... + c_r(E^v) reduces to zero
    acc = zr.zeta_power(zr.rank)
    for i, ci in enumerate(zr.dual_chern, start=1):
        acc = acc + zr.zeta_power(zr.rank - i) * ci
    assert acc.is_zero()


def test_push_gamma_basis_values():
    ring = quartic_like_ring()
    zr = ZetaRing(rank3_bundle(ring))
    assert push_gamma(zr.zeta_power(zr.rank - 1)) == FiberClass.const(ring, 1)
    for i in range(zr.rank - 1):
        assert push_gamma(zr.zeta_power(i)).is_zero()


def test_push_gamma_of_zeta_rank_for_rank2_dual():
    ring = base_ring(truncation=5, extra=[("a1", 1), ("a2", 2)])
    parts = [(ring.gen("a1"), ring.const(3)), (ring.gen("a2"), ring.gen("a1"))]
    e = chern_from_parts(ring, parts, 2)
    zr = ZetaRing(e)
    # one reduction step: gamma_*(zeta^2) = -c1(E^v) = c1(E)
    assert push_gamma(zr.zeta_power(2)) == chern_of(e)[0]


def test_zeta_ring_requires_room_for_the_relation():
    ring = RingSpec([("c2", 2), ("a1", 1)], 3)
    e = chern_from_parts(ring, [(ring.gen("a1"), ring.const(1))], 3)
    with pytest.raises(ValueError, match="truncation"):
        ZetaRing(e)


def test_zeta_twisted_ch_of_line_bundle_is_binomial():
    ring = quartic_like_ring()
    e = rank3_bundle(ring)
    zr = ZetaRing(e)
    triv = BundleChar.trivial(ring, 1)
    got = zeta_twisted_ch(triv, 2, 2, zr)  # ch_2(O(2 zeta)) = 2 zeta^2
    assert got == zr.zeta_power(2) * 2


def test_twist_zeta_matches_piecewise_twisting():
    from cecalc.bundles import gamma_pullback, twist_zeta

    ring = quartic_like_ring()
    e = rank3_bundle(ring)
    zr = ZetaRing(e)
    pulled = gamma_pullback(e, zr)
    twisted = twist_zeta(pulled, -2)
    for d in range(ring.truncation):
        assert twisted.ch(d) == zeta_twisted_ch(e, -2, d, zr)
    # twisting by zero is the identity, and twists compose additively
    assert twist_zeta(pulled, 0) == pulled
    assert twist_zeta(twist_zeta(pulled, 1), 2) == twist_zeta(pulled, 3)
