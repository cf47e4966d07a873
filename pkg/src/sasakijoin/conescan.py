"""Classification of the c-parametrized subcone: extremal regions and moats.

Grid points are classified exactly; each extremal/non-extremal transition is
then bisected down to a bracket of width <= boundary_width.  Regions are
reported with bracket endpoints, since the exact boundary between certified
sample points is not decided (connectivity between samples is "sampled", not
proven).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .cscs import csc_roots
from .errors import DomainError
from .exactmath import UniPoly, exact_divide, is_positive_on_open
from .profile import compute_profile, cscS_check


@dataclass(frozen=True)
class RayClassification:
    c: Fraction
    extremal: bool
    cscS: bool
    F: UniPoly


@dataclass(frozen=True)
class ConeInterval:
    """A region between two boundary brackets.

    left and right are (lo, hi) brackets for the region's endpoints; at the
    edges of the cone they degenerate to (-1, -1) or (1, 1).  The region
    certainly contains (left.hi, right.lo) and is contained in
    (left.lo, right.hi).
    """

    left: Tuple[Fraction, Fraction]
    right: Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class CscRayEntry:
    """One root of the cscS condition, labeled by extremality at the root.

    genuine is None when the isolating interval straddles an extremality
    boundary (contested is then True and the verdict is left open).
    """

    root: object  # RootInterval
    genuine: Optional[bool]
    contested: bool


@dataclass(frozen=True)
class ConeScanReport:
    setup: object
    rays: tuple
    extremal_intervals: tuple
    moats: tuple
    csc_rays: tuple
    slope_map: tuple
    boundary_width: Fraction
    connectivity: str


_ONE_MINUS_Z2 = UniPoly((1, 0, -1))


def classify_ray(setup, c):
    """Profile plus the two verdicts for a single ray: extremal and cscS."""
    prof = compute_profile(setup, c)
    cofactor = exact_divide(prof.F, _ONE_MINUS_Z2)
    extremal = is_positive_on_open(cofactor, Fraction(-1), Fraction(1))
    return RayClassification(c=prof.c, extremal=extremal,
                             cscS=cscS_check(prof), F=prof.F)


def slope(c):
    """Slope (1-c)/(1+c) of the ray's direction in the first-quadrant picture."""
    c = Fraction(c)
    if c == -1:
        raise DomainError("slope undefined at c = -1")
    return (1 - c) / (1 + c)


def _bisect_transition(setup, lo, hi, lo_extremal, boundary_width, cache):
    while hi - lo > boundary_width:
        mid = (lo + hi) / 2
        verdict = classify_ray(setup, mid)
        cache[mid] = verdict
        if verdict.extremal == lo_extremal:
            lo = mid
        else:
            hi = mid
    return lo, hi


def scan(setup, grid_n=33, boundary_width=Fraction(1, 2048)):
    """Classify the grid c = -1 + 2i/(grid_n+1) and assemble the full report."""
    if not (isinstance(grid_n, int) and grid_n >= 8):
        raise DomainError(f"grid_n must be an integer >= 8, got {grid_n!r}")
    boundary_width = Fraction(boundary_width)
    if boundary_width <= 0:
        raise DomainError("boundary_width must be positive")

    grid = [Fraction(-1) + Fraction(2 * i, grid_n + 1) for i in range(1, grid_n + 1)]
    cache = {}
    rays = []
    for c in grid:
        verdict = classify_ray(setup, c)
        cache[c] = verdict
        rays.append(verdict)

    # boundary brackets between runs of constant extremality, plus the edges
    borders = [(Fraction(-1), Fraction(-1))]
    segment_flags = [rays[0].extremal]
    for prev, cur in zip(rays, rays[1:]):
        if cur.extremal != prev.extremal:
            borders.append(_bisect_transition(setup, prev.c, cur.c,
                                              prev.extremal, boundary_width, cache))
            segment_flags.append(cur.extremal)
    borders.append((Fraction(1), Fraction(1)))

    extremal_intervals = []
    moats = []
    for idx, flag in enumerate(segment_flags):
        region = ConeInterval(left=borders[idx], right=borders[idx + 1])
        (extremal_intervals if flag else moats).append(region)

    def extremal_at(c):
        if c not in cache:
            cache[c] = classify_ray(setup, c)
        return cache[c].extremal

    entries = []
    for root in csc_roots(setup, boundary_width):
        if root.exact_value is not None:
            genuine = extremal_at(root.exact_value)
            contested = False
        else:
            at_lo = extremal_at(root.lo)
            at_hi = extremal_at(root.hi)
            contested = at_lo != at_hi
            genuine = None if contested else at_lo
        entries.append(CscRayEntry(root=root, genuine=genuine, contested=contested))

    slope_map = tuple((c, slope(c)) for c in grid)
    return ConeScanReport(
        setup=setup,
        rays=tuple(rays),
        extremal_intervals=tuple(extremal_intervals),
        moats=tuple(moats),
        csc_rays=tuple(entries),
        slope_map=slope_map,
        boundary_width=boundary_width,
        connectivity="sampled",
    )
