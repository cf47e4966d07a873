"""Admissible momentum profiles for rays in the 2-dimensional sub-cone.

For a setup with fiber degree p and a ray parameter c in (-1, 1), the profile
F is the unique degree-p polynomial satisfying

    (cz+1)^2 F'' - 2(p-1) c (cz+1) F' + p(p-1) c^2 F
        = (cz+1)^2 (2a(1+xz) + 2sx) - (A1 z + A2)(1 + xz)

with F(+-1) = 0, F'(1) = -2(1+x), F'(-1) = 2(1-x), where (A1, A2) are fixed
first by two weighted moment conditions.  Everything is solved exactly and
cross-checked against an independent integral representation before being
returned.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    InconsistentSystem,
    InexactDivision,
    InternalInconsistency,
    SingularSystem,
)
from .exactmath import (
    UniPoly,
    exact_divide,
    integrate_weighted_monomial,
    solve_2x2,
    solve_exact,
)
from .joinsetup import ProductSetup


@dataclass(frozen=True)
class ExtremalProfile:
    """Solved profile data for one ray: parameter c, polynomial F, and the
    affine weighted-scalar coefficients A1, A2."""

    c: Fraction
    F: UniPoly
    A1: Fraction
    A2: Fraction
    p: int


def alpha(setup, c, r, q):
    """Moment integral of t^r (ct+1)^q against the measure (1+xt) dt on [-1, 1]."""
    return integrate_weighted_monomial(r, q, Fraction(c), setup.x)


def beta(setup, c, r, q):
    """Weighted boundary-and-curvature moment entering the normalization."""
    c = Fraction(c)
    x = setup.x
    bulk = setup.a * integrate_weighted_monomial(r, q, c, x)
    surface = setup.s * x * integrate_weighted_monomial(r, q, c, Fraction(0))
    boundary = (-1) ** r * (1 - c) ** q * (1 - x) + (1 + c) ** q * (1 + x)
    return bulk + surface + boundary


def solve_A(setup, c):
    """The affine coefficients (A1, A2) of the weighted scalar curvature.

    Raises SingularSystem (with the offending determinant attached) if the
    2x2 moment matrix degenerates.
    """
    c = Fraction(c)
    p = setup.p
    qa = -(p + 1)
    qb = -(p - 1)
    return solve_2x2(
        alpha(setup, c, 1, qa), alpha(setup, c, 0, qa),
        alpha(setup, c, 2, qa), alpha(setup, c, 1, qa),
        2 * beta(setup, c, 0, qb), 2 * beta(setup, c, 1, qb),
    )


def _ode_rhs(setup, c, A1, A2):
    z = UniPoly.variable()
    w = c * z + 1
    source = w * w * (2 * setup.a * (1 + setup.x * z) + 2 * setup.s * setup.x)
    return source - (A1 * z + A2) * (1 + setup.x * z)


def _apply_ode_operator(F, p, c):
    z = UniPoly.variable()
    w = c * z + 1
    return (w * w * F.derivative().derivative()
            - 2 * (p - 1) * c * w * F.derivative()
            + p * (p - 1) * c * c * F)


def _compose_affine(poly, scale, shift):
    """poly(scale*u + shift) as a polynomial in u."""
    arg = UniPoly((shift, scale))
    acc = UniPoly.constant(0)
    for coeff in reversed(poly.coeffs):
        acc = acc * arg + coeff
    return acc


def _antiderivative(poly):
    return UniPoly((Fraction(0),) + tuple(
        Fraction(coeff, i + 1) for i, coeff in enumerate(poly.coeffs)))


def integral_formula_value(setup, c, A1, A2, z0):
    """F(z0) by the integral representation, independent of the linear solve.

    Dividing F by (cz+1)^(p-1) reduces the ODE to a bare second derivative,
    so F(z0) = (cz0+1)^(p-1) [ 2(1-x)(z0+1)/(1-c)^(p-1)
                               + int_{-1}^{z0} Q(t) (z0 - t) dt ]
    with Q(t) = rhs(t)/(ct+1)^(p+1).
    """
    c, z0 = Fraction(c), Fraction(z0)
    p, x = setup.p, setup.x
    rhs = _ode_rhs(setup, c, A1, A2)
    head = 2 * (1 - x) * (z0 + 1) / (1 - c) ** (p - 1)
    if c == 0:
        anti = _antiderivative(rhs * (z0 - UniPoly.variable()))
        integral = anti(z0) - anti(-1)
    else:
        # substitute u = ct + 1; for p >= 5 the numerator degree stays below
        # p + 1, so the u-integrand is a Laurent polynomial with no 1/u term
        rhs_u = _compose_affine(rhs, Fraction(1, c), Fraction(-1, c))
        numerator = rhs_u * (c * z0 + 1 - UniPoly.variable())
        lo, hi = 1 - c, c * z0 + 1
        total = Fraction(0)
        for j, b in enumerate(numerator.coeffs):
            e = j - (p + 1)
            if b == 0:
                continue
            if e == -1:
                raise InternalInconsistency("logarithmic term in profile integral")
            total += b * (hi ** (e + 1) - lo ** (e + 1)) / (e + 1)
        integral = total / c ** 2
    return (c * z0 + 1) ** (p - 1) * (head + integral)


def compute_profile(setup, c):
    """Solve for the profile of the ray at parameter c, exactly and verified."""
    if not isinstance(setup, ProductSetup):
        raise DomainError("compute_profile needs a ProductSetup")
    c = Fraction(c)
    if abs(c) >= 1:
        raise DomainError(f"ray parameter must satisfy |c| < 1, got {c}")
    p, x = setup.p, setup.x
    A1, A2 = solve_A(setup, c)
    rhs = _ode_rhs(setup, c, A1, A2)

    basis_images = [
        _apply_ode_operator(UniPoly([0] * j + [1]), p, c) for j in range(p + 1)
    ]
    rows = [[img.coefficient(i) for img in basis_images] for i in range(p + 1)]
    vec = [rhs.coefficient(i) for i in range(p + 1)]
    rows.append([Fraction(1)] * (p + 1))
    vec.append(Fraction(0))
    rows.append([Fraction((-1) ** j) for j in range(p + 1)])
    vec.append(Fraction(0))
    rows.append([Fraction(j) for j in range(p + 1)])
    vec.append(-2 * (1 + x))
    rows.append([Fraction(j * (-1) ** (j - 1)) for j in range(p + 1)])
    vec.append(2 * (1 - x))
    try:
        coeffs = solve_exact(rows, vec)
    except (SingularSystem, InconsistentSystem) as exc:
        raise InternalInconsistency(
            f"profile system unsolvable at c={c}: {exc}") from exc
    F = UniPoly(coeffs)

    dF = F.derivative()
    if (F(1) != 0 or F(-1) != 0
            or dF(1) != -2 * (1 + x) or dF(-1) != 2 * (1 - x)):
        raise InternalInconsistency(f"endpoint conditions violated at c={c}")
    if _apply_ode_operator(F, p, c) != rhs:
        raise InternalInconsistency(f"ODE residual nonzero at c={c}")
    for z0 in (Fraction(0), Fraction(1, 3), Fraction(-2, 7)):
        if integral_formula_value(setup, c, A1, A2, z0) != F(z0):
            raise InternalInconsistency(
                f"integral representation mismatch at c={c}, z0={z0}")
    return ExtremalProfile(c=c, F=F, A1=A1, A2=A2, p=p)


def reconstruct_weighted_scal(profile, setup):
    """Rebuild the weighted scalar curvature from the profile pieces.

    Assembles (1+xz) * Scal_{f,p} from the three curvature components and
    divides by (1+xz) exactly; the result is affine and must equal A1 z + A2.
    """
    c, F, p, x = profile.c, profile.F, profile.p, setup.x
    z = UniPoly.variable()
    f = c * z + 1
    scal_piece = 2 * setup.a * (1 + x * z) + 2 * setup.s * x - F.derivative().derivative()
    lap_piece = -c * F.derivative()
    grad_piece = c * c * F
    weighted = f * f * scal_piece - 2 * (p - 1) * f * lap_piece - p * (p - 1) * grad_piece
    try:
        affine = exact_divide(weighted, 1 + x * z)
    except InexactDivision as exc:
        raise InternalInconsistency("weighted scalar curvature not divisible "
                                    "by the measure factor") from exc
    if affine != profile.A1 * z + UniPoly.constant(profile.A2):
        raise InternalInconsistency("reconstructed weighted scalar curvature "
                                    "disagrees with the solved coefficients")
    return affine


def cscS_check(profile):
    """True iff the ray at this profile has constant scalar curvature."""
    return profile.A1 - profile.c * profile.A2 == 0
