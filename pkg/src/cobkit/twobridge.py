"""Two-bridge knot and link invariants from admissible expansions.

A 4-plat presentation P(a1, b1, ..., an) closes to the two-bridge knot
or link S(alpha, beta) where alpha/beta = [a1, 2b1, ..., an].  The plat
is a knot exactly when sum(a_i) is odd.  Orientation convention: S(3, 1)
is the trefoil with signature +2; tables built with the opposite
convention differ from these values by a global sign.
"""

from dataclasses import dataclass

from .contfrac import AdmissibleCF, validate_admissible
from .errors import DomainError


@dataclass(frozen=True)
class FourPlat:
    """A validated 4-plat presentation of S(alpha, beta)."""

    cf: AdmissibleCF

    def __post_init__(self):
        ok, why = validate_admissible(self.cf)
        if not ok:
            raise DomainError(f"FourPlat requires an admissible expansion: {why}")

    @property
    def is_knot(self) -> bool:
        return sum(self.cf.a) % 2 == 1


@dataclass(frozen=True)
class OddCounts:
    """Counts of odd a-terms by sign: o+ positive, o- negative."""

    pos: int
    neg: int


@dataclass(frozen=True)
class GenusBound:
    """Smooth slice genus upper bound with its crossing-change data.

    pos_changes and neg_changes count the positive-to-negative and
    negative-to-positive crossing changes that unknot the reduced
    alternating-band diagram; seifert_genus is the genus of the Seifert
    surface of that reduced diagram.
    """

    value: int
    pos_changes: int
    neg_changes: int
    seifert_genus: int


def signature(plat: FourPlat) -> int:
    """Signature sum(a_i) - sign(a_n); even for knots in this convention."""
    a = plat.cf.a
    return sum(a) - (1 if a[-1] > 0 else -1)


def odd_counts(plat: FourPlat) -> OddCounts:
    a = plat.cf.a
    return OddCounts(
        pos=sum(1 for x in a if x > 0 and x % 2 != 0),
        neg=sum(1 for x in a if x < 0 and x % 2 != 0),
    )


def determinant(plat: FourPlat) -> int:
    """Determinant |H_1| of the branched double cover, equal to alpha."""
    return plat.cf.alpha


def crossing_change_genus_bound(genus: int, pos: int, neg: int) -> int:
    """Slice genus bound genus + max(pos, neg) after that many changes.

    Changing pos + neg crossings turns the knot into one bounding a
    surface of the given genus; each change costs at most one in the
    larger of the two directions.
    """
    if genus < 0 or pos < 0 or neg < 0:
        raise DomainError("crossing_change_genus_bound requires nonnegative inputs")
    return genus + max(pos, neg)


def slice_genus_upper(plat: FourPlat) -> GenusBound:
    """Smooth slice genus bound for a two-bridge knot.

    g <= max(S- + 2o+ - 2, S+ + 2o- - 2) / 4 where S-+ = sum(|a_i| -+ a_i)
    and o+- count odd a-terms by sign.  Equivalently the Seifert genus of
    the reduced diagram, (o+ + o- - 1)/2, plus max(p, n) crossing changes
    with p = (S- - 2o-)/4 and n = (S+ - 2o+)/4.
    """
    if not plat.is_knot:
        raise DomainError("slice_genus_upper requires a knot (sum of a_i odd)")
    a = plat.cf.a
    oc = odd_counts(plat)
    s_minus = sum(abs(x) - x for x in a)
    s_plus = sum(abs(x) + x for x in a)
    pos_changes, rem_p = divmod(s_minus - 2 * oc.neg, 4)
    neg_changes, rem_n = divmod(s_plus - 2 * oc.pos, 4)
    assert rem_p == 0 and rem_n == 0
    seifert_genus, rem_g = divmod(oc.pos + oc.neg - 1, 2)
    assert rem_g == 0
    bound = max(s_minus + 2 * oc.pos - 2, s_plus + 2 * oc.neg - 2)
    value, rem = divmod(bound, 4)
    assert rem == 0 and value >= 0
    assert value == crossing_change_genus_bound(
        seifert_genus, pos_changes, neg_changes
    )
    return GenusBound(
        value=value,
        pos_changes=pos_changes,
        neg_changes=neg_changes,
        seifert_genus=seifert_genus,
    )
