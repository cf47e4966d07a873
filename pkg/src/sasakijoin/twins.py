"""Twin detection: distinct rays sharing one momentum profile.

Three settings are covered.  Profile twins on the general family are found by
coefficient matching: demanding that the base profile F also solves the ODE
at a different parameter c' leaves a system of quadratics in c', whose
certified common roots are then confirmed by recomputing the profile.  The
p = 4 sphere-times-surface case has closed forms.  The toric product case is
checked by exact multivariate polynomial expansion of the weighted scalar
curvature over the standard simplex.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Tuple

from .errors import DomainError, InternalInconsistency
from .exactmath import (
    MultiPoly,
    UniPoly,
    identify_rational_root,
    isolate_roots,
    poly_gcd,
    squarefree_part,
    sturm_count_roots,
)
from .profile import compute_profile


@dataclass(frozen=True)
class TwinReport:
    """Partners of base_c sharing its profile polynomial exactly.

    partners is a tuple of rational parameters, or the string "continuum"
    when the matching system is identically satisfied (verified on samples).
    unresolved collects isolating intervals of candidates that pass every
    coefficient equation but could not be pinned to a rational value.
    """

    base_c: Fraction
    partners: object
    shared_F: UniPoly
    unresolved: tuple = ()


def _twin_equations(setup, F):
    """Quadratics in c' whose common vanishing makes F the profile at c'.

    Writing the ODE defect as T0 + T1 c' + T2 c'^2, a partner needs every
    z-coefficient of degree >= 3 to vanish and the degree-<=2 remainder to be
    divisible by (1 + x z).
    """
    p, x = setup.p, setup.x
    z = UniPoly.variable()
    source = 2 * setup.a * (1 + x * z) + 2 * setup.s * setup.x
    dF = F.derivative()
    ddF = dF.derivative()
    t0 = ddF - source
    t1 = 2 * z * ddF - 2 * (p - 1) * dF - 2 * z * source
    t2 = z * z * ddF - 2 * (p - 1) * z * dF + p * (p - 1) * F - z * z * source
    pieces = (t0, t1, t2)
    equations = []
    for m in range(p, 2, -1):
        equations.append(UniPoly([piece.coefficient(m) for piece in pieces]))
    equations.append(UniPoly([
        x * x * piece.coefficient(0) - x * piece.coefficient(1) + piece.coefficient(2)
        for piece in pieces
    ]))
    return equations


def find_profile_twins(setup, c, search_width=Fraction(1, 10 ** 6)):
    """All c' in (-1, 1) whose profile equals the one at c, certified."""
    search_width = Fraction(search_width)
    if search_width <= 0:
        raise DomainError("search_width must be positive")
    base = compute_profile(setup, c)
    equations = _twin_equations(setup, base.F)
    nontrivial = [eq for eq in equations if eq]

    if not nontrivial:
        # identically satisfied: spot-check a spread of parameters before
        # reporting a continuum
        samples = [Fraction(sign * j, 13) for j in range(1, 8) for sign in (1, -1)
                   if Fraction(sign * j, 13) != base.c][:12]
        for cand in samples:
            if compute_profile(setup, cand).F != base.F:
                raise InternalInconsistency(
                    "matching system vanished identically but profiles differ "
                    f"at c'={cand}")
        return TwinReport(base_c=base.c, partners="continuum", shared_F=base.F)

    if len(nontrivial) == 1:
        candidate_poly = nontrivial[0]
    else:
        candidate_poly = poly_gcd(nontrivial[0], nontrivial[1])
    if candidate_poly.degree < 1:
        return TwinReport(base_c=base.c, partners=(), shared_F=base.F)

    reduced = squarefree_part(candidate_poly)
    common_all = reduce(poly_gcd, nontrivial)
    partners = []
    unresolved = []
    for interval in isolate_roots(candidate_poly, Fraction(-1), Fraction(1),
                                  search_width):
        exact = identify_rational_root(reduced, interval.lo, interval.hi)
        if exact is not None:
            if exact == base.c:
                continue
            if compute_profile(setup, exact).F == base.F:
                partners.append(exact)
        else:
            if interval.lo < base.c < interval.hi:
                continue
            if (common_all.degree >= 1
                    and sturm_count_roots(common_all, interval.lo, interval.hi) == 1):
                unresolved.append(interval)
    return TwinReport(base_c=base.c, partners=tuple(sorted(partners)),
                      shared_F=base.F, unresolved=tuple(unresolved))


def cp1_profile(k_scal, c):
    """Closed-form profile data for the weight-4 sphere-bundle case.

    Returns {"H": UniPoly, "A": Rational, "B": Rational}; the closed forms
    are re-verified internally against the endpoint conditions and the p = 4
    ODE with right-hand side k(1+cz)^2 - Az - B.
    """
    k = Fraction(k_scal)
    c = Fraction(c)
    if abs(c) >= 1:
        raise DomainError(f"need |c| < 1, got {c}")
    if k >= 0:
        raise DomainError(f"k_scal must be negative, got {k}")
    if 12 - (2 - k) * c * c <= 0:
        raise DomainError(f"positivity fails: 12 - (2 - k)c^2 <= 0 at k={k}, c={c}")
    z = UniPoly.variable()
    one_minus_z2 = 1 - z * z
    H = one_minus_z2 * (4 * (3 - c * c) + (k + 2) * c * c * one_minus_z2) / (4 * (3 - c * c))
    A = 6 * c * (c * c * k - k + 4) / (c * c - 3)
    B = 3 * (c ** 4 * k - 2 * c ** 4 + 12 * c * c - k - 2) / (c * c - 3)
    dH = H.derivative()
    if H(1) != 0 or H(-1) != 0 or dH(1) != -2 or dH(-1) != 2:
        raise InternalInconsistency("closed-form H violates endpoint conditions")
    w = c * z + 1
    residual = (w * w * dH.derivative() - 6 * c * w * dH + 12 * c * c * H
                - (k * w * w - A * z - UniPoly.constant(B)))
    if residual:
        raise InternalInconsistency("closed-form H violates the weight-4 ODE")
    return {"H": H, "A": A, "B": B}


def cp1_twins(k_scal, c):
    """Partners of c in the weight-4 case: {-c}, a continuum, or none."""
    cp1_profile(k_scal, c)
    k = Fraction(k_scal)
    c = Fraction(c)
    if k == -2:
        return "continuum"
    if c == 0:
        return ()
    return (-c,)


@dataclass(frozen=True)
class ToricPotential:
    """Affine potential f(x) = <v, x> + lam over the standard simplex.

    Admissibility requires f > 0 on {x_i >= -1, sum x_i <= 1}, which for
    affine f is exactly positivity at the n+1 vertices.
    """

    v: Tuple[Fraction, ...]
    lam: Fraction
    n: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise DomainError(f"n must be an integer >= 1, got {self.n!r}")
        object.__setattr__(self, "v", tuple(Fraction(vi) for vi in self.v))
        object.__setattr__(self, "lam", Fraction(self.lam))
        if len(self.v) != self.n:
            raise DomainError(f"v must have length n = {self.n}, got {len(self.v)}")
        total = sum(self.v)
        values = [self.lam - total]
        values += [self.lam + vk * (self.n + 1) - total for vk in self.v]
        if min(values) <= 0:
            raise DomainError("potential not positive on the simplex "
                              f"(vertex values {values})")


def _inverse_hessian(n):
    """Inverse-Hessian entries H_ij = 2 delta_ij l_i - 2 l_i l_j/(n+1)."""
    ls = [MultiPoly.constant(n, 1) + MultiPoly.variable(n, i) for i in range(n)]
    H = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            entry = -2 * ls[i] * ls[j] * Fraction(1, n + 1)
            if i == j:
                entry = entry + 2 * ls[i]
            H[i][j] = entry
    return H


def toric_weighted_scal(d, n, p, scal1, pot):
    """Weighted scalar curvature of the product metric, fully expanded.

    scal1 is the constant scalar curvature of the dimension-d first factor;
    the projective-space factor contributes the constant 2n.  Two standard
    identities of the inverse Hessian are asserted along the way.
    """
    if not (isinstance(d, int) and d >= 0):
        raise DomainError(f"d must be an integer >= 0, got {d!r}")
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be an integer >= 1, got {n!r}")
    if not isinstance(p, int):
        raise DomainError(f"p must be an integer, got {p!r}")
    if not isinstance(pot, ToricPotential) or pot.n != n:
        raise DomainError("pot must be a ToricPotential with matching n")
    scal1 = Fraction(scal1)
    H = _inverse_hessian(n)

    fs_scal = MultiPoly.constant(n, 0)
    for i in range(n):
        for j in range(n):
            fs_scal = fs_scal - H[i][j].diff(i).diff(j)
    if fs_scal != MultiPoly.constant(n, 2 * n):
        raise InternalInconsistency("inverse Hessian fails the scalar identity")
    laplacians = []
    for k in range(n):
        lap = MultiPoly.constant(n, 0)
        for i in range(n):
            lap = lap - H[i][k].diff(i)
        if lap != 2 * MultiPoly.variable(n, k):
            raise InternalInconsistency("inverse Hessian fails the Laplacian identity")
        laplacians.append(lap)

    f = MultiPoly.constant(n, pot.lam)
    for i, vi in enumerate(pot.v):
        f = f + vi * MultiPoly.variable(n, i)
    lap_f = MultiPoly.constant(n, 0)
    for vi, lap in zip(pot.v, laplacians):
        lap_f = lap_f + vi * lap
    grad2 = MultiPoly.constant(n, 0)
    for i in range(n):
        for j in range(n):
            grad2 = grad2 + pot.v[i] * pot.v[j] * H[i][j]

    return (scal1 + 2 * n) * f * f - 2 * (p - 1) * f * lap_f - p * (p - 1) * grad2


def twin_weights(d, n):
    """The two weights sharing one first-factor curvature: (n-d+1, d+n+2).

    Returns (p_low, p_high, scal1) with scal1 = -2d(d+1)/(n+1); the general
    weight formula is asserted to give that same value at both weights.
    """
    if not (isinstance(d, int) and d >= 0):
        raise DomainError(f"d must be an integer >= 0, got {d!r}")
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be an integer >= 1, got {n!r}")
    scal1 = Fraction(-2 * d * (d + 1), n + 1)
    weights = (n - d + 1, d + n + 2)
    for p in weights:
        m = p - n
        if Fraction(2 * (2 - m) * (m - 1), n + 1) != scal1:
            raise InternalInconsistency("twin weights disagree with the "
                                        "general curvature formula")
    return (weights[0], weights[1], scal1)


def toric_csc_solutions(n, lam, l):
    """Candidate csc potentials in the equal-components normal form.

    For f = v(x_1 + ... + x_l) + lam the csc equation has nontrivial
    candidates v = lam/l and v = -lam/(n-l+1); each is tested for strict
    positivity at the simplex vertices.  The trivial v = 0 is included.
    """
    if not (isinstance(n, int) and n >= 2):
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    if not (isinstance(l, int) and 1 <= l < n):
        raise DomainError(f"l must be an integer with 1 <= l < n, got {l!r}")
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"lam must be positive, got {lam}")
    candidates = [Fraction(lam, l), Fraction(-lam, n - l + 1)]
    for v in candidates:
        residual = ((n + 1) * l - l * l) * v * v + lam * (2 * l - (n + 1)) * v - lam * lam
        if residual != 0:
            raise InternalInconsistency("candidate fails the csc quadratic")

    def admissible(v):
        # vertex values of f: lam - lv at the bottom and the peaks beyond l,
        # lam + v(n-l+1) at the first l peaks
        return lam - l * v > 0 and lam + v * (n - l + 1) > 0

    solutions = [{"v": Fraction(0), "admissible": True}]
    solutions += [{"v": v, "admissible": admissible(v)} for v in candidates]
    return {
        "solutions": solutions,
        "any_admissible": any(sol["admissible"] for sol in solutions[1:]),
    }
