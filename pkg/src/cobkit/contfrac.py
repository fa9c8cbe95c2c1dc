"""Admissible continued fractions for two-bridge presentations.

alpha/beta = [a1, 2b1, a2, 2b2, ..., an] with all entries nonzero and
a_i * b_i > 0 for i < n.  Every coprime pair with 0 < beta < alpha and
beta odd admits such an expansion; find_admissible_cf produces one by
deterministic bounded backtracking.  The all-positive variant, when it
exists, certifies infinite order of the associated lens space class.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, EvaluationError


@dataclass(frozen=True)
class AdmissibleCF:
    """A candidate expansion: a-terms, b-terms, and the target alpha/beta.

    The record itself does not enforce admissibility; build through
    admissible_cf or find_admissible_cf to get a validated instance,
    or run validate_admissible on raw data.  target beta = alpha = 1
    is allowed as the unknot presentation [1].
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    alpha: int
    beta: int

    @property
    def terms(self) -> tuple[int, ...]:
        """Interleaved form (a1, 2b1, a2, 2b2, ..., an)."""
        out = []
        for i, ai in enumerate(self.a):
            out.append(ai)
            if i < len(self.b):
                out.append(2 * self.b[i])
        return tuple(out)


def eval_terms(terms) -> Fraction:
    """Fold a continued fraction [t1, t2, ..., tm] exactly, innermost first."""
    if not terms:
        raise DomainError("eval requires at least one term")
    value = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        if value == 0:
            raise EvaluationError(
                "zero intermediate denominator while evaluating continued fraction"
            )
        value = Fraction(t) + 1 / value
    return value


def eval_cf(a, b) -> Fraction:
    """Exact value of [a1, 2b1, a2, ..., an] from the a and b sequences."""
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    if len(a) != len(b) + 1:
        raise DomainError("eval_cf requires len(a) = len(b) + 1")
    terms = []
    for i, ai in enumerate(a):
        terms.append(ai)
        if i < len(b):
            terms.append(2 * b[i])
    return eval_terms(terms)


def validate_admissible(cf: AdmissibleCF) -> tuple[bool, str | None]:
    """Check shape, sign pattern, and target; return (ok, first violation)."""
    a, b = cf.a, cf.b
    if len(a) == 0:
        return False, "a must be nonempty"
    if len(a) != len(b) + 1:
        return False, "len(a) must equal len(b) + 1"
    if any(x == 0 for x in a):
        return False, "all a_i must be nonzero"
    if any(x == 0 for x in b):
        return False, "all b_i must be nonzero"
    for i in range(len(b)):
        if a[i] * b[i] <= 0:
            return False, f"a_{i + 1} * b_{i + 1} > 0 violated"
    alpha, beta = cf.alpha, cf.beta
    if not (0 < beta <= alpha):
        return False, "target requires 0 < beta <= alpha"
    if beta == alpha and alpha != 1:
        return False, "target beta = alpha only for the unknot 1/1"
    if gcd(alpha, beta) != 1:
        return False, "target requires gcd(alpha, beta) = 1"
    if beta % 2 == 0:
        return False, "target requires odd beta"
    try:
        value = eval_cf(a, b)
    except EvaluationError:
        return False, "expansion hits a zero intermediate denominator"
    if value != Fraction(alpha, beta):
        return False, f"expansion evaluates to {value}, not {alpha}/{beta}"
    return True, None


def admissible_cf(a, b) -> AdmissibleCF:
    """Build a validated AdmissibleCF, deriving the target by evaluation."""
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    if len(a) != len(b) + 1:
        raise DomainError("admissible_cf requires len(a) = len(b) + 1")
    value = eval_cf(a, b)
    if value <= 0:
        raise DomainError("admissible_cf requires a positive value")
    cf = AdmissibleCF(a=a, b=b, alpha=value.numerator, beta=value.denominator)
    ok, why = validate_admissible(cf)
    if not ok:
        raise DomainError(f"not admissible: {why}")
    return cf


def euclid_steps(a: int, b: int) -> int:
    """Number of division steps in the ordinary Euclid gcd of (a, b)."""
    n = 0
    while b:
        a, b = b, a % b
        n += 1
    return n


def _check_pair(alpha: int, beta: int) -> None:
    if not 0 < beta < alpha:
        raise DomainError("requires 0 < beta < alpha")
    if gcd(alpha, beta) != 1:
        raise DomainError("requires gcd(alpha, beta) = 1")
    if beta % 2 == 0:
        raise DomainError("requires odd beta")


def find_admissible_cf(alpha: int, beta: int) -> AdmissibleCF:
    """Deterministic admissible expansion of alpha/beta (beta odd).

    Depth-first search over rounding choices.  At an a-position with
    value x the candidates are floor(x) and ceil(x), the one whose
    remainder sign matches the term sign first; a value that is already
    a nonzero integer terminates the expansion.  At a b-position the
    term must be even, nonzero, of the same sign as the preceding
    a-term, and must not consume the whole value; the two bracketing
    even integers are tried before the minimal fallback of the forced
    sign.  The first success in this fixed order is returned.  The term
    count is bounded by 2 * euclid_steps(alpha, beta) + 4; exhausting
    the bound would contradict the existence of an expansion and is an
    internal failure.
    """
    _check_pair(alpha, beta)
    max_terms = 2 * euclid_steps(alpha, beta) + 4

    def at_a(p: int, q: int, remaining: int):
        # value p/q in lowest terms, q > 0
        if remaining <= 0:
            return None
        if q == 1 and p != 0:
            return [p]
        lo = p // q
        cands = []
        for cand in (lo, lo + 1):
            if cand != 0 and cand * q != p and cand not in cands:
                cands.append(cand)
        cands.sort(key=lambda c: 0 if ((p - c * q > 0) == (c > 0)) else 1)
        for cand in cands:
            num, den = q, p - cand * q
            if den < 0:
                num, den = -num, -den
            tail = at_b(num, den, 1 if cand > 0 else -1, remaining - 1)
            if tail is not None:
                return [cand] + tail
        return None

    def at_b(p: int, q: int, sign: int, remaining: int):
        if remaining <= 0:
            return None
        even_floor = 2 * ((p // q) // 2)
        cands = []
        for cand in (even_floor, even_floor + 2, 2 * sign):
            if cand == 0 or (cand > 0) != (sign > 0):
                continue
            if cand * q == p or cand in cands:
                continue
            cands.append(cand)
        for cand in cands:
            num, den = q, p - cand * q
            if den < 0:
                num, den = -num, -den
            tail = at_a(num, den, remaining - 1)
            if tail is not None:
                return [cand] + tail
        return None

    terms = at_a(alpha, beta, max_terms)
    assert terms is not None, (
        f"admissible expansion search exhausted for {alpha}/{beta}"
    )
    cf = AdmissibleCF(
        a=tuple(terms[0::2]),
        b=tuple(t // 2 for t in terms[1::2]),
        alpha=alpha,
        beta=beta,
    )
    ok, why = validate_admissible(cf)
    assert ok, f"search produced invalid expansion for {alpha}/{beta}: {why}"
    return cf


def find_positive_cf(alpha: int, beta: int) -> AdmissibleCF | None:
    """Greedy all-positive expansion of alpha/beta, both odd, or None.

    Takes floors at every step: the a-term is floor(x) and must be
    positive, the b-term is floor(x) rounded down to an even integer
    and must be positive with a nonzero remainder.  Returns None as
    soon as a step fails; None means the greedy expansion fails, not
    that no all-positive expansion exists.
    """
    _check_pair(alpha, beta)
    if alpha % 2 == 0:
        raise DomainError("requires odd alpha")
    max_terms = 2 * euclid_steps(alpha, beta) + 4
    terms = []
    p, q = alpha, beta
    while True:
        assert len(terms) <= max_terms, (
            f"greedy positive expansion overran bound for {alpha}/{beta}"
        )
        # a-position
        a = p // q
        if a <= 0:
            return None
        if a * q == p:
            terms.append(a)
            break
        terms.append(a)
        p, q = q, p - a * q
        # b-position
        even_floor = 2 * ((p // q) // 2)
        if even_floor <= 0 or even_floor * q == p:
            return None
        terms.append(even_floor)
        p, q = q, p - even_floor * q
    cf = AdmissibleCF(
        a=tuple(terms[0::2]),
        b=tuple(t // 2 for t in terms[1::2]),
        alpha=alpha,
        beta=beta,
    )
    ok, why = validate_admissible(cf)
    assert ok, f"greedy positive expansion invalid for {alpha}/{beta}: {why}"
    assert all(t > 0 for t in cf.terms)
    return cf


def format_cf(cf: AdmissibleCF) -> str:
    """Bracketed text form of the interleaved terms, e.g. [2,4,-1]."""
    return "[" + ",".join(str(t) for t in cf.terms) + "]"


def parse_cf(text: str) -> AdmissibleCF:
    """Parse the bracketed interleaved form back into a validated record."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise DomainError("continued fraction text must look like [a1,2b1,...,an]")
    body = s[1:-1].strip()
    if not body:
        raise DomainError("continued fraction text must contain terms")
    try:
        terms = [int(part.strip()) for part in body.split(",")]
    except ValueError as exc:
        raise DomainError(f"bad continued fraction term: {exc}") from None
    if len(terms) % 2 == 0:
        raise DomainError("continued fraction must have an odd number of terms")
    evens = terms[1::2]
    if any(t % 2 for t in evens):
        raise DomainError("terms at even positions must be even integers")
    return admissible_cf(terms[0::2], [t // 2 for t in evens])
