# okounkov/checks/surface_checks.py

"""
Surface acceptance checks: the two-point pipeline, the closed form at
N >= 9 points and the Zariski invariant suite.
"""

import random
from fractions import Fraction
from typing import List, Optional

from okounkov.config import settings
from okounkov.core.geometry import convex_hull, volume
from okounkov.services.check_registry import CheckResult, register_check
from okounkov.services.picard import PicardClass, SurfaceSpec
from okounkov.services.surface_bodies import p2_body_formula, surface_bodies, volume_difference_check
from okounkov.services.zariski import check_zariski, ray_breakpoints, volume_of, zariski, zariski_chamber_count
from okounkov.errors import InvariantError

ZARISKI_SAMPLES = 200


# ---------------------------------------------------------
# TWO POINTS, L = H
# ---------------------------------------------------------
@register_check("surface_pipeline_n2")
def check_surface_n2(**_) -> List[CheckResult]:
    spec = SurfaceSpec.delpezzo(2)
    L = PicardClass.hyperplane(2)
    ray = ray_breakpoints(spec, L)
    results = [
        CheckResult.holds("n2_breakpoints", list(ray.breakpoints) == [Fraction(1, 2)],
                          detail=f"breakpoints {[str(t) for t in ray.breakpoints]}"),
        CheckResult.compare("n2_mu", ray.mu.rational, Fraction(1)),
    ]
    triangle = convex_hull([(0, 0), (Fraction(1, 2), Fraction(1, 2)), (1, 0)])
    bodies = surface_bodies(spec, L)
    for body in bodies:
        results.append(CheckResult.holds(f"n2_body[{body.j}]", body.body_blowup_coords.vertices == triangle.vertices))
        results.append(CheckResult.compare(f"n2_area[{body.j}]", body.area, Fraction(1, 4)))
    total = 2 * sum((b.area for b in bodies), Fraction(0))
    results.append(CheckResult.compare("n2_volume_identity", total, volume_of(spec, L)))
    results.append(CheckResult.compare("n2_chambers", zariski_chamber_count(spec, L), 2, "<="))
    for t in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        lhs, rhs, _ok = volume_difference_check(spec, L, t)
        results.append(CheckResult.compare(f"n2_volume_difference[t={t}]", lhs, rhs))
    return results


# ---------------------------------------------------------
# CLOSED FORM AT N >= 9
# ---------------------------------------------------------
@register_check("p2_closed_form")
def check_p2_closed_form(**_) -> List[CheckResult]:
    results = []
    for N, eps in ((9, Fraction(1, 3)), (16, Fraction(1, 4))):
        formula = p2_body_formula(N, eps)
        simplex = convex_hull([(0, 0), (eps, 0), (0, eps)])
        results.append(CheckResult.holds(f"p2_body[N={N}]", formula.body.vertices == simplex.vertices))
        profile = formula.profile
        linear = len(profile.pieces) == 1 and profile.pieces[0].slope == 1 and profile.pieces[0].intercept == 0
        results.append(CheckResult.holds(f"p2_profile[N={N}]", linear and profile.end == eps))
        area = volume(formula.body)
        results.append(CheckResult.compare(f"p2_area[N={N}]", area, eps * eps / 2))
        results.append(CheckResult.compare(f"p2_volume_identity[N={N}]", N * 2 * area, Fraction(1)))
    return results


# ---------------------------------------------------------
# ZARISKI INVARIANTS
# ---------------------------------------------------------
def random_effective_class(spec: SurfaceSpec, rng: random.Random) -> PicardClass:
    """A random nonnegative combination of H and a few listed curves."""
    D = PicardClass.hyperplane(spec.N) * rng.randint(0, 3)
    for C in rng.sample(spec.curves, rng.randint(1, min(4, len(spec.curves)))):
        D = D + C * Fraction(rng.randint(1, 6), rng.randint(1, 3))
    return D


@register_check("zariski_invariants")
def check_zariski_suite(seed: Optional[int] = None, samples: int = ZARISKI_SAMPLES, **_) -> List[CheckResult]:
    rng = random.Random(settings.CORPUS_SEED if seed is None else seed)
    specs = {N: SurfaceSpec.delpezzo(N) for N in range(2, 9)}
    failures = []
    for idx in range(samples):
        spec = specs[rng.randint(2, 8)]
        D = random_effective_class(spec, rng)
        dec = zariski(spec, D)
        try:
            check_zariski(spec, dec)
            again = zariski(spec, dec.P)
            if again.P != dec.P or not again.Nneg.is_zero():
                raise InvariantError("decomposition of P is not (P, 0)")
        except InvariantError as exc:
            failures.append(f"sample {idx} N={spec.N} D=({D}): {exc.message}")
    return [CheckResult.compare("zariski_invariants", samples - len(failures), samples, detail="; ".join(failures) or None)]
