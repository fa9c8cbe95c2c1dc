"""Lens space invariants through two-bridge branched covers.

L(alpha, beta) with alpha odd is the branched double cover of the
two-bridge knot S(alpha, beta), so any admissible expansion of
alpha/beta yields certified bounds on m and mbar and the exact Rokhlin
invariant sigma(S(alpha, beta)) mod 16.  For even beta the mirror
L(alpha, alpha - beta) is computed and the orientation reversed.
Orientation convention: L(alpha, beta) is -alpha/beta surgery on the
unknot.
"""

from dataclasses import dataclass
from math import gcd

from .cobordism import (
    MBounds,
    OrderCertificate,
    RokhlinClass,
    branched_cover_bounds,
    infinite_order_certificate,
    reverse_orientation,
)
from .contfrac import (
    AdmissibleCF,
    admissible_cf,
    find_admissible_cf,
    find_positive_cf,
    format_cf,
)
from .errors import DomainError
from .twobridge import FourPlat, signature, slice_genus_upper


@dataclass(frozen=True)
class LensSpace:
    """L(alpha, beta), alpha odd, 0 < beta < alpha coprime."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.alpha % 2 == 0:
            raise DomainError("LensSpace requires odd alpha >= 1")
        if not 0 < self.beta < self.alpha:
            raise DomainError("LensSpace requires 0 < beta < alpha")
        if gcd(self.alpha, self.beta) != 1:
            raise DomainError("LensSpace requires gcd(alpha, beta) = 1")


def mirror(space: LensSpace) -> LensSpace:
    """L(alpha, alpha - beta), the orientation reversal of L(alpha, beta)."""
    return LensSpace(space.alpha, space.alpha - space.beta)


def _plat(space: LensSpace, cf: AdmissibleCF | None) -> tuple[FourPlat, AdmissibleCF]:
    assert space.beta % 2 == 1
    if cf is None:
        cf = find_admissible_cf(space.alpha, space.beta)
    elif (cf.alpha, cf.beta) != (space.alpha, space.beta):
        raise DomainError(
            f"expansion targets {cf.alpha}/{cf.beta}, not {space.alpha}/{space.beta}"
        )
    return FourPlat(cf), cf


def m_bounds(space: LensSpace, cf: AdmissibleCF | None = None) -> MBounds:
    """Certified m and mbar bounds and the Rokhlin class of L(alpha, beta).

    An admissible expansion of alpha/beta (found automatically when not
    supplied) presents the two-bridge cover; the branched double cover
    bounds with its signature and slice genus bound give the interval.
    """
    if space.beta % 2 == 0:
        if cf is not None:
            raise DomainError(
                "supply the expansion for the odd-beta mirror L(alpha, alpha - beta)"
            )
        inner = m_bounds(mirror(space))
        out = reverse_orientation(inner)
        return MBounds(
            m_lower=out.m_lower,
            mbar_upper=out.mbar_upper,
            rokhlin=out.rokhlin,
            provenance=(f"L({space.alpha},{space.beta}) as reversed mirror",)
            + out.provenance,
        )
    plat, used = _plat(space, cf)
    sigma = signature(plat)
    genus = slice_genus_upper(plat).value
    base = branched_cover_bounds(sigma, genus)
    return MBounds(
        m_lower=base.m_lower,
        mbar_upper=base.mbar_upper,
        rokhlin=base.rokhlin,
        provenance=(
            f"L({space.alpha},{space.beta}) branched over S({space.alpha},{space.beta})",
            f"expansion {format_cf(used)}",
        )
        + base.provenance,
    )


def rokhlin(space: LensSpace, cf: AdmissibleCF | None = None) -> RokhlinClass:
    """Rokhlin invariant: sigma(S(alpha, beta)) mod 16, negated for the
    mirror when beta is even."""
    if space.beta % 2 == 0:
        if cf is not None:
            raise DomainError(
                "supply the expansion for the odd-beta mirror L(alpha, alpha - beta)"
            )
        return -rokhlin(mirror(space))
    plat, _ = _plat(space, cf)
    return RokhlinClass(signature(plat))


# Known order facts that the certificates here cannot derive.  Values
# are (order label, reason); they are reported verbatim, never computed.
ORDER_ANNOTATIONS: dict[tuple[int, int], tuple[str, str]] = {
    (5, 3): (
        "<=2",
        "admits an orientation-reversing self-diffeomorphism, so the class has order at most 2",
    ),
    (13, 5): (
        "<=2",
        "admits an orientation-reversing self-diffeomorphism, so the class has order at most 2",
    ),
    (9, 5): (
        "0",
        "bounds a Z/2-acyclic 4-manifold, so the class is 0",
    ),
}


@dataclass(frozen=True)
class OrderReport:
    """Order classification of [L] in the homology cobordism group.

    order is 'inf', an annotated label like '<=2' or '0', or '?'.
    """

    space: LensSpace
    order: str
    bounds: MBounds
    certificate: OrderCertificate
    positive_cf: AdmissibleCF | None
    annotation: str | None


def classify_order(space: LensSpace, cf: AdmissibleCF | None = None) -> OrderReport:
    """Classify the order of [L(alpha, beta)]: infinite if the bound
    certificate fires or a greedy all-positive expansion exists,
    otherwise an annotated known order, otherwise unknown."""
    bounds = m_bounds(space, cf)
    cert = infinite_order_certificate(bounds)
    pos_pair = (
        (space.alpha, space.beta)
        if space.beta % 2 == 1
        else (space.alpha, space.alpha - space.beta)
    )
    positive = find_positive_cf(*pos_pair)
    if cert.verdict == "infinite":
        return OrderReport(space, "inf", bounds, cert, positive, None)
    if positive is not None:
        side = (
            "" if space.beta % 2 == 1 else " of the reversed orientation"
        )
        cert = OrderCertificate(
            "infinite",
            f"all-positive expansion {format_cf(positive)}{side} certifies infinite order",
        )
        return OrderReport(space, "inf", bounds, cert, positive, None)
    note = ORDER_ANNOTATIONS.get((space.alpha, space.beta))
    if note is not None:
        label, reason = note
        return OrderReport(space, label, bounds, cert, None, reason)
    return OrderReport(space, "?", bounds, cert, None, None)


@dataclass(frozen=True)
class Table1Row:
    space: LensSpace
    cf: AdmissibleCF
    bounds: MBounds
    order: str


# Fixed presentations for every lens space with odd |H_1| <= 13 (beta
# odd, one per mirror pair).  Each expansion is validated on import.
_TABLE_CFS: tuple[tuple[int, int, tuple[int, ...], tuple[int, ...]], ...] = (
    (3, 1, (3,), ()),
    (5, 3, (1, -2), (1,)),
    (7, 1, (7,), ()),
    (7, 3, (2, -1), (2,)),
    (9, 1, (9,), ()),
    (9, 5, (1, -1, -1), (1, -1)),
    (11, 1, (11,), ()),
    (11, 3, (3, -2), (1,)),
    (11, 5, (2, -1), (3,)),
    (13, 1, (13,), ()),
    (13, 3, (4, 1), (1,)),
    (13, 5, (2, -3), (1,)),
    (13, 7, (1, -1, -1), (1, -2)),
)


def table1() -> tuple[Table1Row, ...]:
    """Bounds and orders for all lens spaces with odd |H_1| up to 13.

    Uses the fixed expansions above so the emitted intervals are stable;
    the order column comes from classify_order (certificates plus the
    annotation table)."""
    rows = []
    for alpha, beta, a, b in _TABLE_CFS:
        cf = admissible_cf(a, b)
        assert (cf.alpha, cf.beta) == (alpha, beta)
        space = LensSpace(alpha, beta)
        report = classify_order(space, cf)
        rows.append(Table1Row(space=space, cf=cf, bounds=report.bounds, order=report.order))
    return tuple(rows)


def family(name: str, parameter: int) -> tuple[LensSpace, AdmissibleCF]:
    """Named infinite families with closed-form expansions.

    '10n+1': L(10n+1, 8n+1) with expansion [1, 4, 2n], n >= 1; all
    positive, so every member has infinite order.
    '16k+7': L(16k+7, 7k+3) with expansion [2, 4, -1, -2, 1, k, -1]
    for even k >= 2; signature 2, so the Rokhlin invariant is 2.
    """
    if parameter < 1:
        raise DomainError("family requires a positive parameter")
    if name == "10n+1":
        n = parameter
        cf = admissible_cf((1, 2 * n), (2,))
        space = LensSpace(10 * n + 1, 8 * n + 1)
    elif name == "16k+7":
        k = parameter
        if k % 2 != 0:
            raise DomainError("family '16k+7' requires even k")
        cf = admissible_cf((2, -1, 1, -1), (2, -1, k // 2))
        space = LensSpace(16 * k + 7, 7 * k + 3)
    else:
        raise DomainError("family name must be '10n+1' or '16k+7'")
    assert (cf.alpha, cf.beta) == (space.alpha, space.beta)
    return space, cf
