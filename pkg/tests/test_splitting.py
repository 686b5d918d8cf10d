"""Splitting-type combinatorics, codimension formulas, strata enumeration."""

import random

import pytest

from cecalc.splitting import (
    SplittingType,
    balanced_type,
    codim_hurwitz4,
    codim_hurwitz5,
    codim_simultaneous,
    constraints_4,
    constraints_5,
    dual_type,
    end_type,
    enumerate_strata4,
    factoring_codim,
    h0,
    h1,
    hom_type,
    negative_summand_count5,
    quintic_u_type,
    sym2_type,
    sym3_type,
    tensor_type,
    twist_type,
    wedge2_type,
)


def random_type(rng, rank, lo=-5, hi=9):
    return SplittingType(rng.randint(lo, hi) for _ in range(rank))


def random_type_of_degree(rng, rank, degree, lo=-3):
    cuts = [rng.randint(lo, degree) for _ in range(rank - 1)]
    parts = []
    prev = 0
    for c in sorted(cuts):
        parts.append(c - prev)
        prev = c
    parts.append(degree - prev)
    return SplittingType(parts)


# -- cohomology ----------------------------------------------------------------


def test_h0_h1_line_bundle_values():
    assert h0([3]) == 4 and h1([3]) == 0
    assert h1([-3]) == 2
    assert h0([-1]) == 0 and h1([-1]) == 0


def test_riemann_roch_on_random_types():
    rng = random.Random(31)
    for _ in range(200):
        t = random_type(rng, rng.randint(1, 6))
        assert h0(t) - h1(t) == t.degree + t.rank


# -- summand-wise constructions --------------------------------------------------


def test_constructors_sort_and_enumerate():
    assert SplittingType([4, 1, 3]).parts == (1, 3, 4)
    assert sym2_type([2, 3, 4]).parts == (4, 5, 6, 6, 7, 8)
    assert h1(end_type([2, 3, 4])) == 1
    assert wedge2_type([1, 2, 3, 4, 5]).rank == 10
    assert sym3_type([0, 1]).parts == (0, 1, 2, 3)
    assert tensor_type([1, 2], [0, 5]).parts == (1, 2, 6, 7)
    assert dual_type([1, 4]).parts == (-4, -1)
    assert twist_type([1, 4], -2).parts == (-1, 2)
    assert hom_type([2, 7], [1]).parts == (-6, -1)


def test_sym2_and_wedge2_partition_the_square():
    rng = random.Random(8)
    for _ in range(100):
        t = random_type(rng, rng.randint(1, 5))
        square = sorted(tensor_type(t, t).parts)
        split = sorted(sym2_type(t).parts + wedge2_type(t).parts)
        assert split == square


# -- codimension formulas ---------------------------------------------------------


def test_codim_simultaneous_examples():
    assert codim_simultaneous([3, 3, 3], [4, 5]) == 0
    assert codim_simultaneous([2, 3, 4], [4, 5]) == 1
    assert codim_simultaneous([1, 4, 4], [2, 7]) == 8


def test_codim_quartic_examples_from_genus_six():
    assert codim_hurwitz4([3, 3, 3], [4, 5]) == 0
    assert codim_hurwitz4([2, 3, 4], [4, 5]) == 1
    assert codim_hurwitz4([1, 4, 4], [2, 7]) == 2  # 4 + 4 - 6


def test_codim_quartic_validates_ranks():
    with pytest.raises(ValueError, match="ranks"):
        codim_hurwitz4([1, 2], [3, 4])


def _recount_quartic(e, f):
    """Independent oracle: raw double loops over summand degrees."""
    e, f = sorted(e), sorted(f)
    ends = 0
    for u in e:
        for v in e:
            ends += max(0, u - v - 1)
    for u in f:
        for v in f:
            ends += max(0, u - v - 1)
    mixed = 0
    for i in range(3):
        for j in range(i, 3):
            for fl in f:
                mixed += max(0, fl - e[i] - e[j] - 1)
    return ends - mixed


def _recount_quintic(e, f, g):
    e, f = sorted(e), sorted(f)
    ends = 0
    for seq in (e, f):
        for u in seq:
            for v in seq:
                ends += max(0, u - v - 1)
    mixed = 0
    for ei in e:
        for j in range(5):
            for k in range(j + 1, 5):
                mixed += max(0, (g + 4) - ei - f[j] - f[k] - 1)
    return ends - mixed


def test_codim_formulas_match_independent_recount():
    rng = random.Random(99)
    for _ in range(300):
        e = random_type(rng, 3)
        f = random_type(rng, 2)
        assert codim_hurwitz4(e, f) == _recount_quartic(e.parts, f.parts)
    for _ in range(300):
        g = rng.randint(2, 25)
        e = random_type_of_degree(rng, 4, g + 4)
        f = random_type_of_degree(rng, 5, 2 * g + 8)
        assert codim_hurwitz5(e, f, g) == _recount_quintic(e.parts, f.parts, g)


def test_codim_quintic_balanced_types_are_generic():
    for g in (16, 20, 36, 40):
        e = balanced_type(4, g + 4)
        f = balanced_type(5, 2 * g + 8)
        assert codim_hurwitz5(e, f, g) == 0


def test_codim_quintic_validates_degrees():
    with pytest.raises(ValueError, match="degrees"):
        codim_hurwitz5([1, 4, 4, 4], [5, 5, 6, 6, 6], 9)  # degree mismatch at g=9


def test_factoring_codim():
    assert factoring_codim(0) == 2
    assert factoring_codim(5) == 12
    assert min(factoring_codim(gp) for gp in range(0, 30)) == 2
    with pytest.raises(ValueError):
        factoring_codim(-1)


# -- constraint predicates ----------------------------------------------------------


def test_quartic_constraints_examples():
    flags = constraints_4([1, 3, 5], [4, 5])
    assert not flags.pencil_bound_f1  # 2 e1 = 2 < 4
    assert not flags.irreducible_ok

    flags = constraints_4([2, 3, 4], [3, 6])
    assert flags.pencil_bound_f1 and flags.pencil_bound_f2
    assert flags.non_factoring  # e1 + e3 - f2 = 0 passes
    assert flags.irreducible_ok and flags.non_factoring_ok


def test_quartic_constant_quadric_case_is_not_irreducible():
    # passes both pencil bounds but the lower quadric is a constant binary
    # form in the top coordinates, so no irreducible cover exists
    flags = constraints_4([1, 4, 4], [1, 8])
    assert flags.pencil_bound_f1 and flags.pencil_bound_f2
    assert not flags.second_quadric_varies
    assert not flags.irreducible_ok


def test_quintic_constraints_balanced_and_memberships():
    g = 16
    e = balanced_type(4, g + 4)
    f = balanced_type(5, 2 * g + 8)
    flags = constraints_5(e, f, g)
    assert flags.degrees_match
    assert flags.pfaffian_ok
    assert flags.in_h_prime and flags.in_h_circ


def test_quintic_membership_thresholds():
    g = 10
    e = SplittingType([1, 1, 6, 6])
    f = SplittingType([5, 5, 6, 6, 6])
    flags = constraints_5(e, f, g)
    assert flags.pfaffian_ok  # all three stated inequalities hold ...
    assert not flags.in_h_prime  # ... yet the type is deep in the bad locus
    assert negative_summand_count5(e, f, g) == 20


def test_quintic_u_bundle_has_forty_summands():
    g = 9
    e = random_type_of_degree(random.Random(1), 4, g + 4)
    f = random_type_of_degree(random.Random(2), 5, 2 * g + 8)
    assert quintic_u_type(e, f, g).rank == 40
    assert negative_summand_count5(balanced_type(4, 20), balanced_type(5, 40), 16) == 0


# -- strata enumeration ---------------------------------------------------------------


def test_genus_six_strata_match_the_published_table():
    rows = enumerate_strata4(6, "irreducible")
    got = [(r.e.parts, r.f.parts, r.codim) for r in rows]
    assert got == [
        ((3, 3, 3), (4, 5), 0),
        ((2, 3, 4), (4, 5), 1),
        ((1, 4, 4), (2, 7), 2),
        ((2, 3, 4), (3, 6), 2),
        ((3, 3, 3), (3, 6), 2),
    ]


def test_genus_six_good_open_memberships():
    rows = enumerate_strata4(6, "irreducible")
    prime = {(r.e.parts, r.f.parts) for r in rows if r.flags.in_h_prime}
    circ = {(r.e.parts, r.f.parts) for r in rows if r.flags.in_h_circ}
    assert prime == {((3, 3, 3), (4, 5)), ((2, 3, 4), (4, 5)), ((3, 3, 3), (3, 6))}
    assert circ == {((3, 3, 3), (4, 5))}


def test_non_factoring_filter_drops_the_hyperelliptic_stratum():
    rows = enumerate_strata4(6, "non_factoring")
    labels = {(r.e.parts, r.f.parts) for r in rows}
    assert ((1, 4, 4), (2, 7)) not in labels
    assert len(rows) == 4


def test_balanced_stratum_heads_every_table():
    for g in range(2, 15):
        rows = enumerate_strata4(g, "irreducible")
        assert rows, f"no strata at genus {g}"
        assert rows[0].codim == 0
        assert rows[0].e == balanced_type(3, g + 3)
        assert all(r.codim >= 0 for r in rows)


def test_enumerate_validates_arguments():
    with pytest.raises(ValueError, match="genus"):
        enumerate_strata4(1)
    with pytest.raises(ValueError, match="filter"):
        enumerate_strata4(6, "everything")
