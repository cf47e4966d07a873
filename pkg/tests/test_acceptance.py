"""Acceptance gate: the thirteen headline checks, one test and one line each.

Each test prints a single "criterion NN PASS/FAIL" line (visible with -s, and
in the captured output on failure) and fails with the list of subchecks that
did not hold.
"""

import math
import random
from fractions import Fraction

from sasakijoin import (
    JoinSpec,
    PolarizationInput,
    ToricPotential,
    UniPoly,
    classify_ray,
    compute_profile,
    cone_dim,
    csc_condition,
    csc_roots,
    condition_numerator,
    cp1_profile,
    exact_divide,
    find_profile_twins,
    h_poly_p5,
    is_positive_on_open,
    join_is_smooth,
    join_vectors,
    make_setup,
    primitive_polarization,
    scan,
    stabilizer_order,
    sturm_count_roots,
    toric_csc_solutions,
    toric_weighted_scal,
    twin_weights,
)
from sasakijoin import reproduce
from support import (
    ONE_MINUS_Z2,
    proportional,
    random_x,
    setup_moat,
    setup_no_csc,
    setup_positive_example,
    setup_resurrection,
    setup_three_roots,
    setup_twin_pair,
)

F = Fraction


def _conclude(num, label, failures):
    status = "FAIL" if failures else "PASS"
    detail = f"  [{'; '.join(failures)}]" if failures else ""
    print(f"criterion {num:02d} {status}: {label}{detail}")
    assert not failures, f"criterion {num:02d} ({label}): {failures}"


def _check(failures, ok, name):
    if not ok:
        failures.append(name)


def _positive(setup, c):
    prof = compute_profile(setup, c)
    return is_positive_on_open(exact_divide(prof.F, ONE_MINUS_Z2), -1, 1)


def test_criterion_01_profile_without_positive_csc():
    failures = []
    setup = setup_no_csc()
    prof = compute_profile(setup, F(2, 5))
    golden = ONE_MINUS_Z2 * UniPoly((5, 2)) * UniPoly((-292, 191, 1820)) / 8022
    _check(failures, prof.F == golden, "profile closed form")
    _check(failures, not _positive(setup, F(2, 5)), "profile must not be positive")
    _check(failures, csc_condition(setup, F(2, 5)) == 0, "condition vanishes")
    report = scan(setup, grid_n=16)
    _check(failures, report.extremal_intervals == (), "no extremal region")
    _check(failures, len(report.csc_rays) == 1, "single condition root")
    entry = report.csc_rays[0]
    _check(failures, entry.root.exact_value == F(2, 5), "root pinned to 2/5")
    _check(failures, entry.genuine is False and not entry.contested,
           "root labeled spurious")
    _conclude(1, "curvature-condition root without a positive profile", failures)


def test_criterion_02_positive_csc_ray():
    failures = []
    setup = setup_positive_example()
    prof = compute_profile(setup, F(1, 8))
    golden = ONE_MINUS_Z2 * UniPoly((8, 1)) * UniPoly((326, 142, 29)) / 2982
    _check(failures, prof.F == golden, "profile closed form")
    _check(failures, _positive(setup, F(1, 8)), "profile positive")
    roots = csc_roots(setup, F(1, 2048))
    _check(failures, [r.exact_value for r in roots] == [F(1, 8)],
           "single exact root 1/8")
    _check(failures, classify_ray(setup, F(1, 8)).extremal, "root is genuine")
    _conclude(2, "genuine constant-curvature ray at weight five", failures)


def test_criterion_03_weight_six_regains_positivity():
    failures = []
    setup = setup_resurrection()
    _check(failures, setup.s == -200 and setup.p == 6, "setup parameters")
    prof = compute_profile(setup, F(3, 5))
    golden = (ONE_MINUS_Z2 * UniPoly((5, 3))
              * UniPoly((413335, 59909, -297891, -76401)) / 527744)
    _check(failures, prof.F == golden, "profile closed form")
    _check(failures, _positive(setup, F(3, 5)), "profile positive at 3/5")
    samples = (F(-4, 5), F(-1, 2), F(0), F(1, 5), F(9, 10))
    bad = sum(1 for c in samples if not _positive(setup, c))
    _check(failures, bad >= 3, f"at least 3 of {len(samples)} sampled rays fail "
                               f"positivity (got {bad})")
    _conclude(3, "raising the weight restores a positive ray", failures)


def test_criterion_04_condition_closed_form():
    failures = []
    rng = random.Random(104)
    for i in range(20):
        setup = make_setup(d=1, a=F(rng.randint(-60, 60), rng.randint(1, 9)),
                           genus_g2=rng.randint(0, 8), degree_k=rng.randint(1, 8),
                           x=random_x(rng))
        h = h_poly_p5(setup)
        x = setup.x
        if h(-1) != -24 * (1 + x) ** 2 or h(1) != 24 * (1 - x) ** 2:
            _check(failures, False, f"endpoint values, sample {i}")
            continue
        for _ in range(10):
            den = rng.randint(2, 40)
            c = F(rng.randint(-(den - 1), den - 1), den)
            if csc_condition(setup, c) != 4 * h(c) / (9 * (1 - c * c) ** 7):
                _check(failures, False, f"closed form at c={c}, sample {i}")
                break
    _conclude(4, "weight-five condition polynomial closed form", failures)


def test_criterion_05_three_root_configuration():
    failures = []
    setup = setup_three_roots()
    _check(failures, setup.s == F(-20, 9), "s = -20/9")
    h = h_poly_p5(setup)
    factored = (F(3, 475) * UniPoly((-9, 10))
                * UniPoly((190, 543, -350, -885, 540)))
    _check(failures, h == factored, "factored closed form")
    roots = csc_roots(setup, F(1, 10 ** 4))
    _check(failures, len(roots) == 3, "three roots")
    if len(roots) == 3:
        _check(failures, all(r.width <= F(1, 10 ** 4) for r in roots),
               "root width certified")
        _check(failures, abs(roots[0].midpoint + F(601, 1000)) < F(5, 10 ** 4),
               "first root near -0.601")
        _check(failures, abs(roots[1].midpoint + F(359, 1000)) < F(5, 10 ** 4),
               "second root near -0.359")
        _check(failures, roots[2].exact_value == F(9, 10), "third root exactly 9/10")
    report = scan(setup, grid_n=8, boundary_width=F(1, 10 ** 4))
    _check(failures, [e.genuine for e in report.csc_rays] == [True, True, True],
           "all three rays genuine")
    _check(failures, not classify_ray(setup, F(0)).extremal,
           "central ray not extremal")
    _conclude(5, "three constant-curvature rays, one rational", failures)


MOAT_COFACTORS = {
    F(8, 10): UniPoly((-29205, -107380, 30532, 197072, -134003, 12260, 5236)),
    F(9, 10): UniPoly((-325945, -2503170, 2190983, 3348648, -3487407, 352890,
                       290849)),
}


def _moat_profile_expected(x):
    return (ONE_MINUS_Z2 * UniPoly((1, x)) ** 2
            * UniPoly((3 + x * x, -x * (3 - x * x), -2 * x * x))
            / ((1 - x * x) * (3 - x * x)))


def test_criterion_06_weight_six_family():
    failures = []
    rng = random.Random(106)
    for _ in range(10):
        x = random_x(rng)
        setup = setup_moat(x)
        if csc_condition(setup, x) != 0:
            _check(failures, False, f"designed root at x={x}")
        if compute_profile(setup, x).F != _moat_profile_expected(x):
            _check(failures, False, f"designed profile at x={x}")

    touching = setup_moat(F(8, 10))
    _check(failures, touching.a == F(4631, 177), "a value at x=8/10")
    rep8 = scan(touching, grid_n=33)
    _check(failures, len(rep8.extremal_intervals) == 1 and not rep8.moats,
           "x=8/10 cone entirely extremal")
    _check(failures, [e.genuine for e in rep8.csc_rays] == [True] * 3,
           "x=8/10 has three genuine rays")

    separated = setup_moat(F(9, 10))
    _check(failures, separated.a == F(76561, 1387), "a value at x=9/10")
    rep9 = scan(separated, grid_n=33)
    _check(failures, len(rep9.extremal_intervals) == 2 and len(rep9.moats) == 1,
           "x=9/10 moat separates two extremal regions")
    rays = rep9.csc_rays
    _check(failures, [e.genuine for e in rays] == [True, False, True],
           "x=9/10 genuine/spurious pattern")
    if len(rays) == 3 and rep9.moats:
        moat = rep9.moats[0]
        _check(failures, rays[0].root.hi < moat.left[0], "first root left of moat")
        _check(failures, moat.left[1] < rays[1].root.lo
               and rays[1].root.hi < moat.right[0], "middle root inside moat")
        _check(failures, moat.right[1] < rays[2].root.lo, "third root right of moat")
        _check(failures, moat.left[1] < 0 < moat.right[0], "moat straddles center")
        _check(failures, rays[2].root.exact_value == F(9, 10), "third root is 9/10")

    for x, display in MOAT_COFACTORS.items():
        numerator = condition_numerator(setup_moat(x))
        cofactor = exact_divide(numerator, UniPoly((x, -1)))
        if not proportional(display, cofactor):
            _check(failures, False, f"numerator cofactor at x={x}")
    _conclude(6, "weight-six family: designed root, moat, separation", failures)


def test_criterion_07_twin_rays():
    failures = []
    setup = setup_twin_pair()
    golden = (ONE_MINUS_Z2 * UniPoly((1, -F(1, 2))) * UniPoly((1, F(1, 2))) ** 2
              / F(3, 4))
    rep = find_profile_twins(setup, F(1, 2))
    _check(failures, rep.partners == (F(-5, 6),), "partner of 1/2 is -5/6")
    _check(failures, rep.shared_F == golden, "shared profile closed form")
    _check(failures, rep.unresolved == (), "no unresolved candidates")
    back = find_profile_twins(setup, F(-5, 6))
    _check(failures, back.partners == (F(1, 2),), "partner of -5/6 is 1/2")
    _check(failures, compute_profile(setup, F(1, 2)).F
           == compute_profile(setup, F(-5, 6)).F, "profiles agree exactly")
    _conclude(7, "distinct rays sharing one profile", failures)


def test_criterion_08_weight_four_closed_forms():
    failures = []
    rng = random.Random(108)
    seen = 0
    while seen < 30:
        k = -F(rng.randint(1, 40), rng.randint(1, 6))
        c = F(rng.randint(-9, 9), rng.randint(10, 14))
        if 12 - (2 - k) * c * c <= 0:
            continue
        seen += 1
        out = cp1_profile(k, c)
        H, A, B = out["H"], out["A"], out["B"]
        dH = H.derivative()
        if H(1) != 0 or H(-1) != 0 or dH(1) != -2 or dH(-1) != 2:
            _check(failures, False, f"endpoints at (k={k}, c={c})")
        w = UniPoly((1, c))
        residual = (w * w * dH.derivative() - 6 * c * w * dH + 12 * c * c * H
                    - (k * w * w - A * UniPoly.variable()
                       - UniPoly.constant(B)))
        if residual:
            _check(failures, False, f"ODE residual at (k={k}, c={c})")
        if cp1_profile(k, -c)["H"] != H:
            _check(failures, False, f"mirror symmetry at (k={k}, c={c})")
        if k == -2 and H != ONE_MINUS_Z2:
            _check(failures, False, f"flat case at c={c}")
    for c in (F(0), F(2, 5), F(-1, 2)):
        if cp1_profile(-2, c)["H"] != ONE_MINUS_Z2:
            _check(failures, False, f"flat case at c={c}")
    _conclude(8, "weight-four closed forms satisfy their boundary problem",
              failures)


def test_criterion_09_toric_affinity():
    failures = []
    rng = random.Random(109)
    for d, n, p in ((1, 1, 4), (1, 2, 5), (2, 2, 6), (0, 3, 5), (1, 3, 4)):
        m = p - n
        scal1 = F(2 * (2 - m) * (m - 1), n + 1)
        broke_off_value = False
        for _ in range(10):
            v = tuple(F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(n))
            lam = sum(abs(vi) for vi in v) * (n + 1) + F(rng.randint(1, 5))
            pot = ToricPotential(v=v, lam=lam, n=n)
            if not toric_weighted_scal(d, n, p, scal1, pot).is_affine():
                _check(failures, False, f"affine at (d,n,p)=({d},{n},{p})")
                break
            if any(v) and not toric_weighted_scal(
                    d, n, p, scal1 + F(1, 7), pot).is_affine():
                broke_off_value = True
        _check(failures, broke_off_value,
               f"perturbed curvature breaks affinity at (d,n,p)=({d},{n},{p})")
    _conclude(9, "toric product curvature affine exactly at the twin value",
              failures)


def test_criterion_10_toric_candidates_inadmissible():
    failures = []
    for n in (2, 3, 4):
        for lam in (F(1), F(3, 2)):
            for l in range(1, n):
                out = toric_csc_solutions(n, lam, l)
                nontrivial = [sol["v"] for sol in out["solutions"][1:]]
                if set(nontrivial) != {lam / l, -lam / (n - l + 1)}:
                    _check(failures, False, f"candidates at (n={n}, l={l})")
                if any(sol["admissible"] for sol in out["solutions"][1:]):
                    _check(failures, False, f"admissibility at (n={n}, l={l})")
                if out["any_admissible"]:
                    _check(failures, False, f"summary flag at (n={n}, l={l})")
    _conclude(10, "no admissible nontrivial toric csc potential", failures)


def test_criterion_11_existence_regimes():
    failures = []
    rng = random.Random(111)

    def genuine_found(setup):
        report = scan(setup, grid_n=8, boundary_width=F(1, 64))
        return any(e.genuine is True for e in report.csc_rays)

    for i in range(30):
        setup = make_setup(d=1, a=F(rng.randint(1, 60), rng.randint(1, 12)),
                           genus_g2=0, degree_k=rng.randint(1, 6),
                           x=random_x(rng, max_den=12))
        if not genuine_found(setup):
            _check(failures, False, f"positive-a regime, sample {i}")
    for i in range(30):
        setup = make_setup(d=1, a=F(0), genus_g2=1, degree_k=rng.randint(1, 6),
                           x=random_x(rng, max_den=12))
        if not genuine_found(setup):
            _check(failures, False, f"flat regime, sample {i}")
    for i in range(30):
        setup = make_setup(d=1, a=F(rng.randint(1, 60), rng.randint(1, 12)),
                           genus_g2=rng.randint(1, 5), degree_k=rng.randint(1, 6),
                           x=random_x(rng, max_den=12))
        if not genuine_found(setup):
            _check(failures, False, f"higher-genus regime, sample {i}")
    for i in range(5):
        setup = make_setup(d=1, a=10 ** 6, genus_g2=rng.randint(0, 5),
                           degree_k=rng.randint(1, 6), x=random_x(rng))
        if sturm_count_roots(h_poly_p5(setup), -1, 1) < 3:
            _check(failures, False, f"large-a root count, sample {i}")
    _conclude(11, "constant-curvature rays exist in all three regimes", failures)


def _brute_stabilizer(spec, m1, m2):
    t1 = {F(k, m1 * spec.l2) for k in range(m1 * spec.l2)}
    t2 = {F(k, m2 * spec.l1) for k in range(m2 * spec.l1)}
    return len(t1 & t2)


def test_criterion_12_join_arithmetic():
    failures = []
    rng = random.Random(112)
    cases = 0
    while cases < 50:
        l1, l2 = rng.randint(1, 9), rng.randint(1, 9)
        if math.gcd(l1, l2) != 1:
            continue
        spec = JoinSpec(l1=l1, l2=l2, order1=rng.randint(1, 8),
                        order2=rng.randint(1, 8))
        cases += 1
        worst = 0
        for m1 in (m for m in range(1, spec.order1 + 1) if spec.order1 % m == 0):
            for m2 in (m for m in range(1, spec.order2 + 1) if spec.order2 % m == 0):
                got = stabilizer_order(spec, m1, m2)
                if got != _brute_stabilizer(spec, m1, m2):
                    _check(failures, False, f"stabilizer at {spec} ({m1},{m2})")
                worst = max(worst, got)
        if join_is_smooth(spec) != (worst == 1):
            _check(failures, False, f"smoothness of {spec}")

    _check(failures, cone_dim(1, 2) == 2 and cone_dim(2, 3) == 4, "cone dims")
    vec = join_vectors(2, 3)
    _check(failures, vec["reeb"] == (F(1, 4), F(1, 6))
           and vec["contact"] == (2, 3), "join vectors")

    for g in range(2, 7):
        out = primitive_polarization(
            PolarizationInput(class_coeffs=(2 * (g - 1),), ke_index=-2 * (g - 1),
                              d=1))
        if (out["l1"], out["l2"]) != (g - 1, 1):
            _check(failures, False, f"surface family at genus {g}")
    for k1, k2 in ((1, 1), (1, 2), (2, 2), (2, 4), (3, 5)):
        g = math.gcd(k1, k2)
        out = primitive_polarization(
            PolarizationInput(class_coeffs=(6 * g,), ke_index=-6 * g, d=2))
        if (out["l1"], out["l2"]) != (2 * g, 1):
            _check(failures, False, f"threefold family at ({k1},{k2})")
    _conclude(12, "smoothness predicate and canonical join weights", failures)


def test_criterion_13_reproduction_is_deterministic(tmp_path):
    failures = []
    first = tmp_path / "first"
    second = tmp_path / "second"
    ok1, results1 = reproduce.run(str(first))
    ok2, results2 = reproduce.run(str(second))
    _check(failures, ok1 and ok2, "all reproduction checks pass")
    _check(failures, len(results1) >= 10, "suite covers the headline results")
    _check(failures, results1 == results2, "check results repeat")
    _check(failures, (first / "reproduce.json").read_bytes()
           == (second / "reproduce.json").read_bytes(), "byte-identical output")
    _conclude(13, "reproduction suite passes twice, byte-identical", failures)
