"""Certified real-root machinery: Sturm counting, isolation, identification.

Everything here is exact.  A root is either pinned to a rational value (exact
evaluation confirms it) or bracketed by a RootInterval whose certificate is
recorded: "exact" when a Sturm count over the interval equals 1, "sign-change"
when the endpoint signs differ.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Optional

from ..errors import DomainError, ZeroPolynomial
from .unipoly import UniPoly, exact_divide, squarefree_part


@dataclass(frozen=True)
class RootInterval:
    """Open interval (lo, hi) certified to contain exactly one root.

    multiplicity_note records the certificate: "exact" (Sturm count = 1) or
    "sign-change" (opposite signs at the endpoints).  exact_value is filled
    when the root has been identified as a rational number; the bracket is
    still valid in that case.
    """

    lo: Fraction
    hi: Fraction
    multiplicity_note: str
    exact_value: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise DomainError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.multiplicity_note not in ("exact", "sign-change"):
            raise DomainError(f"unknown certificate {self.multiplicity_note!r}")
        if self.exact_value is not None:
            object.__setattr__(self, "exact_value", Fraction(self.exact_value))

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2


def _sturm_chain(p):
    chain = [p, p.derivative()]
    while chain[-1]:
        _, r = divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(-r)
    return [q for q in chain if q]


def _variations(chain, t):
    signs = []
    for q in chain:
        v = q(t)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _strip_endpoint_roots(p, lo, hi):
    """Divide out roots sitting exactly at lo or hi."""
    for end in (lo, hi):
        while p and p(end) == 0:
            p = exact_divide(p, UniPoly((-end, 1)))
    return p


def sturm_count_roots(p, lo, hi, open_interval=True):
    """Number of distinct real roots of p in (lo, hi) or [lo, hi]."""
    if not p:
        raise ZeroPolynomial("root counting needs a nonzero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise DomainError(f"need lo < hi, got {lo}, {hi}")
    at_lo = 1 if p(lo) == 0 else 0
    at_hi = 1 if p(hi) == 0 else 0
    work = _strip_endpoint_roots(squarefree_part(p), lo, hi)
    if work.degree < 1:
        inner = 0
    else:
        chain = _sturm_chain(work)
        # work(hi) != 0, so the classical (lo, hi] count is the open count.
        inner = _variations(chain, lo) - _variations(chain, hi)
    if open_interval:
        return inner
    return inner + at_lo + at_hi


def is_positive_on_open(p, lo, hi):
    """True iff p > 0 everywhere on the open interval (lo, hi)."""
    if not p:
        raise ZeroPolynomial("positivity needs a nonzero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if sturm_count_roots(p, lo, hi, open_interval=True) != 0:
        return False
    return p((lo + hi) / 2) > 0


def isolate_roots(p, lo, hi, width):
    """Disjoint RootIntervals of width <= width covering all roots in (lo, hi).

    The polynomial is reduced to its squarefree part first, so each interval
    holds exactly one (simple) root of that part; certification is by Sturm
    count, hence multiplicity_note = "exact".  Returned in increasing order.
    """
    if not p:
        raise ZeroPolynomial("isolation needs a nonzero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    width = Fraction(width)
    if width <= 0:
        raise DomainError("width must be positive")
    if not lo < hi:
        raise DomainError(f"need lo < hi, got {lo}, {hi}")
    sf = _strip_endpoint_roots(squarefree_part(p), lo, hi)
    if sf.degree < 1:
        return []
    chain = _sturm_chain(sf)
    out = []

    def split(a, b, va, vb):
        n = va - vb
        if n == 0:
            return
        if n == 1 and b - a <= width:
            out.append(RootInterval(a, b, "exact"))
            return
        m = (a + b) / 2
        k = 3
        while sf(m) == 0:
            # nudge the split point off a root; offsets k/(2k+1) are all distinct
            m = a + (b - a) * Fraction(k, 2 * k + 1)
            k += 1
        vm = _variations(chain, m)
        split(a, m, va, vm)
        split(m, b, vm, vb)

    split(lo, hi, _variations(chain, lo), _variations(chain, hi))
    return out


def refine_bracket(p, lo, hi, width):
    """Shrink a sign-change bracket of p to the given width by bisection.

    Returns (lo, hi); if a bisection point happens to hit the root exactly the
    degenerate pair (root, root) is returned.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    s_lo = p(lo)
    s_hi = p(hi)
    if s_lo == 0:
        return lo, lo
    if s_hi == 0:
        return hi, hi
    if (s_lo > 0) == (s_hi > 0):
        raise DomainError("refine_bracket needs a sign change")
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            return mid, mid
        if (v > 0) == (s_lo > 0):
            lo = mid
        else:
            hi = mid
    return lo, hi


def simplest_rational_in(lo, hi):
    """The rational with the smallest denominator in the closed interval [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_in(-hi, -lo)
    ceil_lo = math.ceil(lo)
    if ceil_lo <= math.floor(hi):
        return Fraction(ceil_lo)
    n = math.floor(lo)
    frac = simplest_rational_in(1 / (hi - n), 1 / (lo - n))
    return n + 1 / frac


def identify_rational_root(p, lo, hi, max_halvings=300):
    """Try to pin the unique simple root of p in (lo, hi) to an exact rational.

    Requires a sign change across the bracket.  Repeatedly proposes the
    simplest rational in the current bracket and shrinks on failure; gives up
    (returns None) after max_halvings bisections, which means the root, if
    rational at all, has astronomically large height.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    v_lo, v_hi = p(lo), p(hi)
    if v_lo == 0 or v_hi == 0:
        return lo if v_lo == 0 else hi
    if (v_lo > 0) == (v_hi > 0):
        return None
    positive_left = v_lo > 0
    for _ in range(max_halvings):
        cand = simplest_rational_in(lo, hi)
        if p(cand) == 0:
            return cand
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            return mid
        if (v > 0) == positive_left:
            lo = mid
        else:
            hi = mid
    return None
