"""Core records for the homology cobordism invariants m and mbar.

For a Z/2-homology 3-sphere, m is the maximum of (5/4) sigma(X) - b2(X)
and mbar the minimum of (5/4) sigma(X) + b2(X) over smooth spin fillings
X.  Both are invariants of the Z/2-homology cobordism class; m <= mbar
with equality only when both vanish together with the Rokhlin invariant;
m is superadditive and mbar subadditive under connected sum, and
orientation reversal swaps them with a sign.  Exact values are multiples
of 1/2, certified bounds multiples of 1/4, and both reduce mod 2 to a
quarter of the Rokhlin invariant.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class RokhlinClass:
    """Rokhlin invariant in Z/16, stored as the even representative 0..14."""

    value: int

    def __post_init__(self):
        v = self.value % 16
        if v % 2 != 0:
            raise DomainError("Rokhlin invariant of a Z/2-homology sphere is even")
        object.__setattr__(self, "value", v)

    def __neg__(self) -> "RokhlinClass":
        return RokhlinClass(-self.value)

    def __add__(self, other: "RokhlinClass") -> "RokhlinClass":
        return RokhlinClass(self.value + other.value)

    def residue_mod8(self) -> int:
        return self.value % 8


def _quarter(x, what: str) -> Fraction:
    x = Fraction(x)
    if 4 % x.denominator != 0:
        raise DomainError(f"{what} must be a multiple of 1/4")
    return x


def _half(x, what: str) -> Fraction:
    x = Fraction(x)
    if 2 % x.denominator != 0:
        raise DomainError(f"{what} must be a multiple of 1/2")
    return x


@dataclass(frozen=True)
class MBounds:
    """Certified interval m >= m_lower, mbar <= mbar_upper for one class.

    m_exact and mbar_exact are set only for the handful of cases with a
    proved exact value (S^3, the T(p,q,r) plumbing spheres, and their
    orientation reversals); when present they coincide with the
    corresponding bound.  rokhlin carries the Rokhlin class when known.
    provenance lists, in order, the certificates the numbers came from.
    """

    m_lower: Fraction
    mbar_upper: Fraction
    m_exact: Fraction | None = None
    mbar_exact: Fraction | None = None
    rokhlin: RokhlinClass | None = None
    provenance: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "m_lower", _quarter(self.m_lower, "m_lower"))
        object.__setattr__(self, "mbar_upper", _quarter(self.mbar_upper, "mbar_upper"))
        if self.m_exact is not None:
            object.__setattr__(self, "m_exact", _half(self.m_exact, "m_exact"))
        if self.mbar_exact is not None:
            object.__setattr__(
                self, "mbar_exact", _half(self.mbar_exact, "mbar_exact")
            )
        if isinstance(self.rokhlin, int):
            object.__setattr__(self, "rokhlin", RokhlinClass(self.rokhlin))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if self.m_lower > self.mbar_upper:
            raise DomainError("m_lower must not exceed mbar_upper")
        if self.m_exact is not None and self.m_exact != self.m_lower:
            raise DomainError("an exact m must coincide with m_lower")
        if self.mbar_exact is not None and self.mbar_exact != self.mbar_upper:
            raise DomainError("an exact mbar must coincide with mbar_upper")
        if self.m_exact is not None and self.mbar_exact is not None:
            diff = self.mbar_exact - self.m_exact
            if diff.denominator != 1 or diff.numerator % 2 != 0:
                raise DomainError("mbar - m must be an even integer when both exact")
            if diff == 0 and self.m_exact != 0:
                raise DomainError("m = mbar forces both to vanish")
            if diff == 0 and self.rokhlin is not None and self.rokhlin.value != 0:
                raise DomainError("m = mbar forces a vanishing Rokhlin invariant")
        if self.rokhlin is not None:
            for exact in (self.m_exact, self.mbar_exact):
                if exact is None:
                    continue
                parity = exact - Fraction(self.rokhlin.value, 4)
                if parity.denominator != 1 or parity.numerator % 2 != 0:
                    raise DomainError(
                        "exact values must equal rokhlin/4 modulo 2"
                    )

    def to_json_dict(self) -> dict:
        return {
            "m_lower": str(self.m_lower),
            "mbar_upper": str(self.mbar_upper),
            "m_exact": None if self.m_exact is None else str(self.m_exact),
            "mbar_exact": None if self.mbar_exact is None else str(self.mbar_exact),
            "rokhlin": None if self.rokhlin is None else self.rokhlin.value,
            "provenance": list(self.provenance),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "MBounds":
        return cls(
            m_lower=Fraction(d["m_lower"]),
            mbar_upper=Fraction(d["mbar_upper"]),
            m_exact=None if d.get("m_exact") is None else Fraction(d["m_exact"]),
            mbar_exact=None
            if d.get("mbar_exact") is None
            else Fraction(d["mbar_exact"]),
            rokhlin=None if d.get("rokhlin") is None else RokhlinClass(d["rokhlin"]),
            provenance=tuple(d.get("provenance", ())),
        )


@dataclass(frozen=True)
class SpinFillingData:
    """Signature and second Betti number of one smooth spin filling."""

    sigma: int
    b2: int

    def __post_init__(self):
        if self.b2 < 0:
            raise DomainError("a filling needs b2 >= 0")


# The standard 3-sphere bounds the 4-ball: everything vanishes.
S3 = MBounds(
    m_lower=Fraction(0),
    mbar_upper=Fraction(0),
    m_exact=Fraction(0),
    mbar_exact=Fraction(0),
    rokhlin=RokhlinClass(0),
    provenance=("S3 bounds the 4-ball",),
)


def bound_from_filling(filling: SpinFillingData) -> MBounds:
    """Both one-filling bounds: (5/4) sigma -+ b2, and sigma mod 16."""
    s = Fraction(5, 4) * filling.sigma
    return MBounds(
        m_lower=s - filling.b2,
        mbar_upper=s + filling.b2,
        rokhlin=RokhlinClass(filling.sigma),
        provenance=(f"spin filling (sigma={filling.sigma}, b2={filling.b2})",),
    )


def merge_bounds(x: MBounds, y: MBounds) -> MBounds:
    """Intersect two certified intervals for the same class.

    Takes the larger lower and smaller upper bound; exact markers are
    not propagated.  Conflicting Rokhlin classes or an empty
    intersection mean the records do not describe the same class.
    """
    if x.rokhlin is not None and y.rokhlin is not None and x.rokhlin != y.rokhlin:
        raise DomainError("merge_bounds requires matching Rokhlin classes")
    lower = max(x.m_lower, y.m_lower)
    upper = min(x.mbar_upper, y.mbar_upper)
    if lower > upper:
        raise DomainError("merge_bounds got incompatible intervals")
    return MBounds(
        m_lower=lower,
        mbar_upper=upper,
        rokhlin=x.rokhlin if x.rokhlin is not None else y.rokhlin,
        provenance=x.provenance + y.provenance,
    )


def reverse_orientation(x: MBounds) -> MBounds:
    """m(-Y) = -mbar(Y), mbar(-Y) = -m(Y), R(-Y) = -R(Y)."""
    return MBounds(
        m_lower=-x.mbar_upper,
        mbar_upper=-x.m_lower,
        m_exact=None if x.mbar_exact is None else -x.mbar_exact,
        mbar_exact=None if x.m_exact is None else -x.m_exact,
        rokhlin=None if x.rokhlin is None else -x.rokhlin,
        provenance=x.provenance + ("orientation reversed",),
    )


def connected_sum(x: MBounds, y: MBounds) -> MBounds:
    """Superadditivity of m and subadditivity of mbar under #.

    Lower bounds add and upper bounds add; exactness does not survive
    because the sum formulas are only inequalities.
    """
    return MBounds(
        m_lower=x.m_lower + y.m_lower,
        mbar_upper=x.mbar_upper + y.mbar_upper,
        rokhlin=None
        if (x.rokhlin is None or y.rokhlin is None)
        else x.rokhlin + y.rokhlin,
        provenance=x.provenance + y.provenance,
    )


def furuta_allows(sigma: int, b2: int) -> bool:
    """Whether a closed smooth spin 4-manifold may have this (sigma, b2).

    Requires sigma = 0 mod 16 and, when sigma is nonzero, the 10/8
    inequality b2 >= (5/4)|sigma| + 2.
    """
    if b2 < 0:
        raise DomainError("furuta_allows requires b2 >= 0")
    if sigma % 16 != 0:
        return False
    return sigma == 0 or Fraction(5, 4) * abs(sigma) + 2 <= b2


@dataclass(frozen=True)
class OrderCertificate:
    """Verdict 'infinite' or 'unknown' with the reason that decided it."""

    verdict: str
    reason: str


def infinite_order_certificate(x: MBounds) -> OrderCertificate:
    """Infinite order in the homology cobordism group when m > 0, or
    mbar < 0, or m = 0 with nonzero Rokhlin invariant."""
    if x.m_lower > 0:
        return OrderCertificate("infinite", f"m >= {x.m_lower} > 0")
    if x.mbar_upper < 0:
        return OrderCertificate("infinite", f"mbar <= {x.mbar_upper} < 0")
    if (
        x.m_exact == 0
        and x.rokhlin is not None
        and x.rokhlin.value != 0
    ):
        return OrderCertificate(
            "infinite", f"m = 0 with Rokhlin invariant {x.rokhlin.value} != 0"
        )
    return OrderCertificate("unknown", "no certificate applies")


def branched_cover_bounds(sigma_knot: int, genus_upper: int) -> MBounds:
    """Bounds for the branched double cover of a knot.

    (5/4) sigma(K) - 2g <= m <= mbar <= (5/4) sigma(K) + 2g for any g
    at least the smooth slice genus, and the Rokhlin invariant is
    sigma(K) mod 16.
    """
    if genus_upper < 0:
        raise DomainError("branched_cover_bounds requires genus_upper >= 0")
    if sigma_knot % 2 != 0:
        raise DomainError("knot signatures are even")
    s = Fraction(5, 4) * sigma_knot
    return MBounds(
        m_lower=s - 2 * genus_upper,
        mbar_upper=s + 2 * genus_upper,
        rokhlin=RokhlinClass(sigma_knot),
        provenance=(
            f"branched double cover (sigma(K)={sigma_knot}, slice genus <= {genus_upper})",
        ),
    )
