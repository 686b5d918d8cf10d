"""Splitting types of vector bundles on P^1 and stratum codimensions.

Every bundle on P^1 is a sum of line bundles O(e_1) + ... + O(e_r); the
non-decreasing integer vector (e_1, ..., e_r) is its splitting type.  All
tensor-algebra constructions act summand-wise, so cohomology of any derived
bundle is a finite max-sum, and the codimension of the locus where a family
degenerates to given splitting types is an explicit alternating h^1 count:

  * simultaneous splitting locus of a pair:  h1(End e) + h1(End f)
  * degree-4 covers:   h1(End e) + h1(End f) - h1(Hom(f, Sym^2 e))
  * degree-5 covers:   h1(End e) + h1(End f) - h1(e . wedge^2 f . O(-g-4))

The constraint predicates record which splitting-type inequalities a smooth
irreducible (or non-factoring) cover forces, and the degree-4 enumeration
reproduces the full stratum table of a given genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

TypeLike = Union["SplittingType", Sequence[int]]


class SplittingType:
    """A non-decreasing integer vector; sorts its input on construction."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        self.parts = tuple(sorted(int(e) for e in parts))

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SplittingType):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "SplittingType") -> bool:
        return self.parts < other.parts

    def text(self) -> str:
        return ",".join(str(e) for e in self.parts)

    @classmethod
    def parse(cls, s: str) -> "SplittingType":
        return cls(int(piece) for piece in s.split(","))

    def __repr__(self) -> str:
        return f"SplittingType({self.text()})"


def _coerce(t: TypeLike) -> SplittingType:
    return t if isinstance(t, SplittingType) else SplittingType(t)


# -- cohomology and summand-wise constructions ------------------------------


def h0(t: TypeLike) -> int:
    """h^0 = sum of max(0, e_i + 1)."""
    return sum(max(0, e + 1) for e in _coerce(t))


def h1(t: TypeLike) -> int:
    """h^1 = sum of max(0, -e_i - 1)."""
    return sum(max(0, -e - 1) for e in _coerce(t))


def dual_type(t: TypeLike) -> SplittingType:
    return SplittingType(-e for e in _coerce(t))


def det_type(t: TypeLike) -> SplittingType:
    return SplittingType([_coerce(t).degree])


def twist_type(t: TypeLike, n: int) -> SplittingType:
    return SplittingType(e + n for e in _coerce(t))


def tensor_type(s: TypeLike, t: TypeLike) -> SplittingType:
    s, t = _coerce(s), _coerce(t)
    return SplittingType(a + b for a in s for b in t)


def hom_type(s: TypeLike, t: TypeLike) -> SplittingType:
    return tensor_type(dual_type(s), t)


def end_type(t: TypeLike) -> SplittingType:
    return hom_type(t, t)


def sym2_type(t: TypeLike) -> SplittingType:
    t = _coerce(t)
    return SplittingType(t[i] + t[j] for i in range(len(t)) for j in range(i, len(t)))


def sym3_type(t: TypeLike) -> SplittingType:
    t = _coerce(t)
    n = len(t)
    return SplittingType(
        t[i] + t[j] + t[k]
        for i in range(n)
        for j in range(i, n)
        for k in range(j, n)
    )


def wedge2_type(t: TypeLike) -> SplittingType:
    t = _coerce(t)
    return SplittingType(t[i] + t[j] for i, j in combinations(range(len(t)), 2))


# -- codimension formulas ----------------------------------------------------


def codim_simultaneous(e: TypeLike, f: TypeLike) -> int:
    """Codimension of the locus where a pair degenerates to (e, f)."""
    return h1(end_type(e)) + h1(end_type(f))


def codim_hurwitz4(e: TypeLike, f: TypeLike) -> int:
    """Codimension of the (e, f) stratum for degree-4 covers.

    Raw value of h1(End e) + h1(End f) - h1(Hom(f, Sym^2 e)); no clamping,
    filtering by the cover constraints is the caller's job.
    """
    e, f = _coerce(e), _coerce(f)
    if e.rank != 3 or f.rank != 2:
        raise ValueError(f"need ranks (3, 2), got ({e.rank}, {f.rank})")
    return codim_simultaneous(e, f) - h1(hom_type(f, sym2_type(e)))


def quintic_u_type(e: TypeLike, f: TypeLike, genus: int) -> SplittingType:
    """The 40-summand bundle e . wedge^2 f . O(-(g+4)) for degree-5 covers."""
    return twist_type(tensor_type(e, wedge2_type(f)), -(genus + 4))


def codim_hurwitz5(e: TypeLike, f: TypeLike, genus: int) -> int:
    """Codimension of the (e, f) stratum for degree-5 covers of genus g."""
    e, f = _coerce(e), _coerce(f)
    if e.rank != 4 or f.rank != 5:
        raise ValueError(f"need ranks (4, 5), got ({e.rank}, {f.rank})")
    if e.degree != genus + 4 or f.degree != 2 * genus + 8:
        raise ValueError(
            f"need degrees ({genus + 4}, {2 * genus + 8}), "
            f"got ({e.degree}, {f.degree})"
        )
    return codim_simultaneous(e, f) - h1(quintic_u_type(e, f, genus))


def factoring_codim(g_prime: int) -> int:
    """Codimension of degree-4 covers factoring through a genus-g' curve."""
    if g_prime < 0:
        raise ValueError(f"intermediate genus must be >= 0, got {g_prime}")
    return 2 * (g_prime + 1)


def negative_summand_count5(e: TypeLike, f: TypeLike, genus: int) -> int:
    """Number of the 40 summands e_i + f_j + f_k - (g+4) that are negative."""
    e, f = _coerce(e), _coerce(f)
    if e.rank != 4 or f.rank != 5:
        raise ValueError(f"need ranks (4, 5), got ({e.rank}, {f.rank})")
    return sum(1 for d in quintic_u_type(e, f, genus) if d < 0)


# -- constraint predicates ----------------------------------------------------


@dataclass(frozen=True)
class QuarticConstraints:
    """Splitting-type tests for degree-4 covers.

    ``irreducible_ok`` bundles the constraints forced by an irreducible
    cover: e_1 >= 1, the two pencil bounds 2e_1 >= f_1 and 2e_2 >= f_2, and
    ``second_quadric_varies``.  The last one rules out the corner case
    e_1 + e_3 < f_2 with 2e_3 <= f_2, where the lower quadric of the pencil
    is a binary form in the top two coordinates with constant coefficients,
    hence globally reducible: such a stratum contains no irreducible cover
    even though it satisfies the two pencil bounds.
    """

    degrees_match: bool          # sum(e) == sum(f)
    e1_positive: bool            # e_1 >= 1
    pencil_bound_f1: bool        # 2 e_1 >= f_1
    pencil_bound_f2: bool        # 2 e_2 >= f_2
    second_quadric_varies: bool  # not (e_1 + e_3 < f_2 and 2 e_3 <= f_2)
    non_factoring: bool          # e_1 + e_3 >= f_2
    in_h_prime: bool             # all summands of Hom(f, Sym^2 e) >= -1
    in_h_circ: bool              # all summands of Hom(f, Sym^2 e) >= 1

    @property
    def irreducible_ok(self) -> bool:
        return (
            self.degrees_match
            and self.e1_positive
            and self.pencil_bound_f1
            and self.pencil_bound_f2
            and self.second_quadric_varies
        )

    @property
    def non_factoring_ok(self) -> bool:
        return self.irreducible_ok and self.non_factoring


def constraints_4(e: TypeLike, f: TypeLike) -> QuarticConstraints:
    e, f = _coerce(e), _coerce(f)
    if e.rank != 3 or f.rank != 2:
        raise ValueError(f"need ranks (3, 2), got ({e.rank}, {f.rank})")
    u = hom_type(f, sym2_type(e))
    return QuarticConstraints(
        degrees_match=e.degree == f.degree,
        e1_positive=e[0] >= 1,
        pencil_bound_f1=2 * e[0] >= f[0],
        pencil_bound_f2=2 * e[1] >= f[1],
        second_quadric_varies=not (e[0] + e[2] < f[1] and 2 * e[2] <= f[1]),
        non_factoring=e[0] + e[2] >= f[1],
        in_h_prime=all(d >= -1 for d in u),
        in_h_circ=all(d >= 1 for d in u),
    )


@dataclass(frozen=True)
class QuinticConstraints:
    """Splitting-type tests for degree-5 covers at a given genus."""

    degrees_match: bool     # deg e == g+4 and deg f == 2g+8
    pfaffian_lower: bool    # f_1 + f_3 + e_4 >= g+4
    pfaffian_imp2: bool     # f_1 + f_4 + e_3 >= g+4
    pfaffian_imp3: bool     # f_2 + f_3 + e_3 >= g+4
    in_h_prime: bool        # all summands of the 40-term bundle >= -1
    in_h_circ: bool         # all summands >= 1 and f globally generated

    @property
    def pfaffian_ok(self) -> bool:
        return self.pfaffian_lower and self.pfaffian_imp2 and self.pfaffian_imp3


def constraints_5(e: TypeLike, f: TypeLike, genus: int) -> QuinticConstraints:
    e, f = _coerce(e), _coerce(f)
    if e.rank != 4 or f.rank != 5:
        raise ValueError(f"need ranks (4, 5), got ({e.rank}, {f.rank})")
    target = genus + 4
    u = quintic_u_type(e, f, genus)
    return QuinticConstraints(
        degrees_match=e.degree == target and f.degree == 2 * target,
        pfaffian_lower=f[0] + f[2] + e[3] >= target,
        pfaffian_imp2=f[0] + f[3] + e[2] >= target,
        pfaffian_imp3=f[1] + f[2] + e[2] >= target,
        in_h_prime=all(d >= -1 for d in u),
        in_h_circ=all(d >= 1 for d in u) and f[0] >= 0,
    )


# -- degree-4 strata enumeration ----------------------------------------------


@dataclass(frozen=True)
class StratumRecord:
    e: SplittingType
    f: SplittingType
    codim: int
    flags: QuarticConstraints


_FILTERS = ("all", "irreducible", "non_factoring")


def enumerate_strata4(genus: int, filter: str = "irreducible") -> list[StratumRecord]:
    """All degree-4 candidate strata (e, f) of total degree g+3.

    The search space is every sorted e = (e_1, e_2, e_3) with e_1 >= 1 and
    every sorted f = (f_1, f_2) with f_1 >= 1, both of degree g+3.  The
    ``irreducible`` filter keeps strata passing ``irreducible_ok``;
    ``non_factoring`` additionally requires e_1 + e_3 >= f_2; ``all`` keeps
    everything.  Rows are sorted by (codim, e, f).
    """
    if genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    if filter not in _FILTERS:
        raise ValueError(f"filter must be one of {_FILTERS}, got {filter!r}")
    d = genus + 3
    records = []
    for e1 in range(1, d // 3 + 1):
        for e2 in range(e1, (d - e1) // 2 + 1):
            e = SplittingType((e1, e2, d - e1 - e2))
            for f1 in range(1, d // 2 + 1):
                f = SplittingType((f1, d - f1))
                flags = constraints_4(e, f)
                if filter == "irreducible" and not flags.irreducible_ok:
                    continue
                if filter == "non_factoring" and not flags.non_factoring_ok:
                    continue
                records.append(
                    StratumRecord(e=e, f=f, codim=codim_hurwitz4(e, f), flags=flags)
                )
    records.sort(key=lambda r: (r.codim, r.e.parts, r.f.parts))
    return records


def balanced_type(rank: int, degree: int) -> SplittingType:
    """The most balanced splitting type of the given rank and degree."""
    q, r = divmod(degree, rank)
    return SplittingType([q] * (rank - r) + [q + 1] * r)
