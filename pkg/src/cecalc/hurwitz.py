"""Casnati-Ekedahl class machinery for degree 3, 4 and 5 covers of P^1.

A degree-k cover C -> P^1 of genus g determines a rank-(k-1) bundle E (of
degree g+k-1) on the universal P^1-bundle and, for k = 4, 5, a second
bundle F sitting in the resolution of the curve inside P(E^v).  Writing
c_i(E) = a_i + a_i' z and c_i(F) = b_i + b_i' z, the classes

    c2, a_i, a_i' (i >= 2), b_i, b_i' (i >= 2)

generate the ring where all the computations below take place.  The built
in identities are a_1' = g+k-1, together with b_1 = a_1, b_1' = a_1' for
k = 4 (det F = det E) and b_1 = 2 a_1, b_1' = 2 a_1' for k = 5
(det F = (det E)^2).  A symbolic genus is handled by a degree-0 generator
``g``, so kappa-class coefficients come out as polynomials in g.

The universal curve class [C] in P(E^v) is assembled from character pieces
of the resolution bundles, and the kappa classes are

    kappa_i = pi_* gamma_*([C] . (zeta - 2z)^{i+1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .bundles import (
    BundleChar,
    FiberClass,
    ZetaClass,
    ZetaRing,
    chern_from_parts,
    chern_of,
    det,
    dual,
    push_gamma,
    push_pi,
    tensor,
    zeta_twisted_ch,
)
from .gring import GradedPoly, RingSpec

SUPPORTED_DEGREES = (3, 4, 5)

# Generator lists (name, weight) for each covering degree, in serialization
# order.  a_1' and b_1' are not generators: they are numbers (or g-polynomials).
_GENERATORS = {
    3: (("c2", 2), ("a1", 1), ("a2", 2), ("a2'", 1)),
    4: (
        ("c2", 2),
        ("a1", 1),
        ("a2", 2),
        ("a3", 3),
        ("a2'", 1),
        ("a3'", 2),
        ("b2", 2),
        ("b2'", 1),
    ),
    5: (
        ("c2", 2),
        ("a1", 1),
        ("a2", 2),
        ("a3", 3),
        ("a4", 4),
        ("a2'", 1),
        ("a3'", 2),
        ("a4'", 3),
        ("b2", 2),
        ("b3", 3),
        ("b4", 4),
        ("b5", 5),
        ("b2'", 1),
        ("b3'", 2),
        ("b4'", 3),
        ("b5'", 4),
    ),
}


def ce_rank(i: int, k: int) -> int:
    """Rank of the i-th syzygy bundle in the length-(k-2) resolution.

    The general formula i(k-2-i)/(k-1) * C(k, i+1) evaluates to 0 at the
    final step i = k-2, where the bundle is the determinant line bundle;
    that case is pinned to 1.
    """
    if k < 3:
        raise ValueError(f"covering degree must be >= 3, got {k}")
    if not 1 <= i <= k - 2:
        raise ValueError(f"index {i} outside [1, {k - 2}]")
    if i == k - 2:
        return 1
    value = Fraction(i * (k - 2 - i), k - 1) * comb(k, i + 1)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral rank for (i={i}, k={k})")
    return int(value)


def presentation(k: int, genus: int) -> tuple[tuple[tuple[str, int], ...], int]:
    """Free generators of the class ring and the degree below which it is free.

    Returns (generators-with-weights, bound): every relation among the
    generators has degree >= bound, which is g+3, g+4, g+5 for k = 3, 4, 5.
    """
    if k not in SUPPORTED_DEGREES:
        raise ValueError(f"unsupported covering degree {k}")
    if genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    return _GENERATORS[k], genus + k


@dataclass(frozen=True)
class CESetup:
    """A covering degree, its class ring, and the two bundle characters."""

    degree: int
    genus: Optional[int]  # None means symbolic
    ring: RingSpec
    e_char: BundleChar
    f_char: BundleChar  # equals det(E) when degree == 3

    @property
    def symbolic(self) -> bool:
        return self.genus is None


def ce_setup(k: int, genus: Optional[int] = None, truncation: int = 8) -> CESetup:
    """Build the class ring and universal bundle characters for degree k.

    ``genus=None`` adds a weight-0 generator ``g`` and keeps the genus
    symbolic.  The truncation order bounds every computation downstream;
    kappa_i needs truncation > i + k - 1.
    """
    if k not in SUPPORTED_DEGREES:
        raise ValueError(f"unsupported covering degree {k}")
    if truncation < 2:
        raise ValueError(f"truncation must be >= 2, got {truncation}")
    gens = _GENERATORS[k]
    if genus is None:
        gens = gens + (("g", 0),)
    ring = RingSpec(gens, truncation)

    if genus is None:
        a1p = ring.gen("g") + ring.const(k - 1)
    else:
        a1p = ring.const(genus + k - 1)

    rank_e = k - 1
    e_parts = [(ring.gen("a1"), a1p)]
    for i in range(2, rank_e + 1):
        e_parts.append((ring.gen(f"a{i}"), ring.gen(f"a{i}'")))
    e_char = chern_from_parts(ring, e_parts, rank_e)

    if k == 3:
        f_char = det(e_char)
    elif k == 4:
        f_parts = [(ring.gen("a1"), a1p), (ring.gen("b2"), ring.gen("b2'"))]
        f_char = chern_from_parts(ring, f_parts, 2)
    else:
        f_parts = [(ring.gen("a1") * 2, a1p * 2)]
        for i in range(2, 6):
            f_parts.append((ring.gen(f"b{i}"), ring.gen(f"b{i}'")))
        f_char = chern_from_parts(ring, f_parts, 5)

    return CESetup(degree=k, genus=genus, ring=ring, e_char=e_char, f_char=f_char)


def zeta_ring(setup: CESetup) -> ZetaRing:
    """The ring of P(E^v) over the setup's P^1-bundle."""
    return ZetaRing(setup.e_char)


def curve_class(setup: CESetup, zring: Optional[ZetaRing] = None) -> ZetaClass:
    """The class of the universal curve in P(E^v), of degree k-2.

    Assembled as the alternating sum of degree-(k-2) character pieces of
    the twisted resolution bundles:

        k=3:  -ch_1(det E (-3))
        k=4:  -ch_2(F (-2)) + ch_2(det E (-4))
        k=5:  -ch_3(F (-2)) + ch_3((F^v . det E)(-3)) - ch_3(det E (-5))
    """
    k = setup.degree
    if zring is None:
        zring = zeta_ring(setup)
    det_e = det(setup.e_char)
    if k == 3:
        terms = [(-1, det_e, -3)]
    elif k == 4:
        terms = [(-1, setup.f_char, -2), (1, det_e, -4)]
    else:
        middle = tensor(dual(setup.f_char), det_e)
        terms = [(-1, setup.f_char, -2), (1, middle, -3), (-1, det_e, -5)]
    acc = zring.zero()
    for sign, char, n in terms:
        acc = acc + zeta_twisted_ch(char, n, k - 2, zring) * sign
    return acc


@dataclass(frozen=True)
class KappaResult:
    """A kappa class expanded in the setup's generators."""

    index: int
    degree: int
    polynomial: GradedPoly


def kappa(setup: CESetup, i: int) -> KappaResult:
    """kappa_i = pi_* gamma_*([C] . (zeta - 2z)^{i+1})."""
    if i < 0:
        raise ValueError(f"kappa index must be >= 0, got {i}")
    k = setup.degree
    needed = (k - 2) + (i + 1)
    if needed >= setup.ring.truncation:
        raise ValueError(
            f"truncation {setup.ring.truncation} too small for kappa_{i} "
            f"at degree {k} (needs > {needed})"
        )
    zring = zeta_ring(setup)
    c_class = curve_class(setup, zring)
    omega = zring.zeta_power(1) - zring.of_fiber(FiberClass.z(setup.ring) * 2)
    total = c_class * omega ** (i + 1)
    poly = push_pi(push_gamma(total))
    return KappaResult(index=i, degree=k, polynomial=poly)


def kappa_value(k: int, i: int, genus: Union[int, None], truncation: Optional[int] = None) -> GradedPoly:
    """Convenience wrapper: build a setup and return the kappa_i polynomial.

    Default truncation is i + k + 2: the smallest budget that provably
    suffices, plus slack so the truncation-independence property can bite.
    """
    if truncation is None:
        truncation = i + k + 2
    setup = ce_setup(k, genus, truncation)
    return kappa(setup, i).polynomial
