# okounkov/checks/toric_checks.py

"""
Toric acceptance checks: volume identity, barycentric subdivisions,
half-integer Seshadri constants and the lattice oracle.
"""

from fractions import Fraction
from typing import List, Optional

from okounkov.config import settings
from okounkov.core.geometry import dilate, intersection, is_subset, volume
from okounkov.logging_config import get_logger
from okounkov.services.check_registry import CheckResult, register_check
from okounkov.services.semigroup_engine import body_approx, check_dimension_partition
from okounkov.services.toric_bodies import (
    barycentric_meeting_point,
    toric_bodies,
    toric_oracle_export,
    toric_seshadri,
    toric_subdivision,
    toric_volume_check,
)
from okounkov.services.toric_corpus import named_input, toric_corpus

logger = get_logger(__name__)

ORACLE_INPUTS = ("square/4", "square/2-opposite", "simplex/3")


# ---------------------------------------------------------
# VOLUME IDENTITY
# ---------------------------------------------------------
@register_check("toric_volume")
def check_toric_volume(seed: Optional[int] = None, size: Optional[int] = None, **_) -> List[CheckResult]:
    results = []
    for name, inp in toric_corpus(seed, size):
        lhs, rhs, _ok = toric_volume_check(inp)
        results.append(CheckResult.compare(f"toric_volume[{name}]", lhs, rhs))
    return results


# ---------------------------------------------------------
# BARYCENTRIC SUBDIVISIONS
# ---------------------------------------------------------
@register_check("barycentric")
def check_barycentric(**_) -> List[CheckResult]:
    expected = {
        "square/4": (Fraction(1, 4), (Fraction(1, 2), Fraction(1, 2))),
        "simplex/3": (Fraction(1, 6), (Fraction(1, 3), Fraction(1, 3))),
    }
    results = []
    for name, (area, point) in expected.items():
        inp = named_input(name)
        cells = toric_subdivision(inp)
        for j, cell in enumerate(cells):
            results.append(CheckResult.compare(f"barycentric_area[{name}][{j}]", volume(cell), area))
        meeting = barycentric_meeting_point(inp)
        results.append(
            CheckResult.holds(f"barycentric_point[{name}]", meeting == point, f"cells meet at {meeting}")
        )
        results.append(CheckResult.holds(f"barycentric_common[{name}]", not intersection(cells).is_empty))
    return results


# ---------------------------------------------------------
# HALF-INTEGER SESHADRI CONSTANTS
# ---------------------------------------------------------
@register_check("half_integer_seshadri")
def check_half_integer(seed: Optional[int] = None, size: Optional[int] = None, **_) -> List[CheckResult]:
    results = []
    for name, inp in toric_corpus(seed, size):
        value = toric_seshadri(inp)
        results.append(CheckResult.holds(f"half_integer[{name}]", value.denominator in (1, 2), f"value {value}"))
    for name, value in (("square/4", Fraction(1, 2)), ("simplex/3", Fraction(1, 2)), ("simplex/1", Fraction(1))):
        results.append(CheckResult.compare(f"toric_seshadri[{name}]", toric_seshadri(named_input(name)), value))
    return results


# ---------------------------------------------------------
# LATTICE ORACLE
# ---------------------------------------------------------
@register_check("oracle_equivalence")
def check_oracle(k_max: Optional[int] = None, **_) -> List[CheckResult]:
    """Level hulls inside the closed form, the 0.9-dilate inside the pooled hull, and the W partition."""
    k_max = k_max or settings.DEFAULT_K_MAX
    results = []
    for name in ORACLE_INPUTS:
        inp = named_input(name)
        data = toric_oracle_export(inp, k_max)
        bodies = toric_bodies(inp)
        for j, body in enumerate(bodies):
            approx = body_approx(data, j, k_max)
            outside = [k for k, hull in sorted(approx.levels.items()) if not is_subset(hull, body)]
            results.append(
                CheckResult.holds(f"oracle_inclusion[{name}][{j}]", not outside, f"levels outside: {outside}")
            )
            results.append(
                CheckResult.holds(
                    f"oracle_coverage[{name}][{j}]",
                    is_subset(dilate(body, Fraction(9, 10)), approx.limit_hull),
                    f"k_max {k_max}",
                )
            )
        broken = [k for k in range(1, k_max + 1) if not check_dimension_partition(data, k)]
        results.append(CheckResult.holds(f"oracle_partition[{name}]", not broken, f"levels failing: {broken}"))
        logger.info("oracle_checked", input=name, k_max=k_max)
    return results
