"""Exact elementary number theory: extended gcd, Jacobi symbols,
quadratic residues by enumeration, and Dedekind sums.

Everything here is integer or Fraction arithmetic, no floating point.
"""

from fractions import Fraction

from .errors import DomainError, ResourceLimitError

# is_square_mod enumerates all residues; refuse moduli beyond this cap.
SQUARE_ENUM_LIMIT = 10**6


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) > 0 and a*x + b*y = g.

    Both arguments zero is rejected, there is no positive gcd to return.
    """
    if a == 0 and b == 0:
        raise DomainError("gcd_ext requires a != 0 or b != 0")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n > 0.

    Computed by quadratic reciprocity with the standard rules for factors
    of two; returns 0 when gcd(a, n) > 1, and 1 for n = 1.
    """
    if n <= 0 or n % 2 == 0:
        raise DomainError("jacobi requires odd n > 0")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_square_mod(a: int, n: int) -> bool:
    """Whether a is congruent to a square modulo n >= 1.

    Decided by enumerating k*k mod n for 0 <= k <= n // 2, which is the
    honest definition and fast enough for the moduli this package meets.
    """
    if n < 1:
        raise DomainError("is_square_mod requires n >= 1")
    if n > SQUARE_ENUM_LIMIT:
        raise ResourceLimitError(
            f"is_square_mod enumeration capped at n <= {SQUARE_ENUM_LIMIT}"
        )
    a %= n
    return any((k * k) % n == a for k in range(n // 2 + 1))


def sawtooth(x: Fraction) -> Fraction:
    """((x)): 0 at integers, otherwise x - floor(x) - 1/2."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum(q: int, p: int) -> Fraction:
    """Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)) for p >= 1.

    Requires gcd(q, p) = 1.  The terms are computed in integer form,
    ((k/p)) = (2k - p)/(2p) for 0 < k < p, so the whole sum is a single
    exact division at the end.
    """
    if p < 1:
        raise DomainError("dedekind_sum requires p >= 1")
    from math import gcd

    if gcd(q, p) != 1:
        raise DomainError("dedekind_sum requires gcd(q, p) = 1")
    total = 0
    for k in range(1, p):
        r = (k * q) % p
        if r == 0:
            continue
        total += (2 * k - p) * (2 * r - p)
    return Fraction(total, 4 * p * p)
