"""
Job orchestration: read the input, build bodies, fit the simplex, run the
checks and write the canonical report with its sidecars.
"""
from __future__ import annotations

import json
import math
import time
import uuid
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError
from structlog.contextvars import bind_contextvars, clear_contextvars

from okounkov.config import settings
from okounkov.core.geometry import Polytope, is_subset, volume
from okounkov.errors import OkounkovError, PreconditionError, SchemaError
from okounkov.logging_config import get_logger
from okounkov.schemas_pkg.jobs import JobConfig, JobMode
from okounkov.schemas_pkg.polytope import PolytopeSchema
from okounkov.schemas_pkg.report import BodyEntry, CheckEntry, Report, Timings, WitnessSchema
from okounkov.schemas_pkg.semigroup import LevelHullSchema, SemigroupBodySchema
from okounkov.schemas_pkg.surface import (
    LinearPieceSchema,
    SliceSchema,
    SurfaceBodySchema,
    SurfaceDetails,
    SurfaceInputSchema,
    ThresholdSchema,
    ZariskiSchema,
)
from okounkov.schemas_pkg.toric import ChartSchema, ToricBodySchema, ToricDetails, ToricInputSchema
from okounkov.services.check_registry import CheckResult, run_checks
from okounkov.services.picard import CurveProvenance, PicardClass
from okounkov.services.plotting import body_svgs, plot_subdivision
from okounkov.services.semigroup_engine import (
    body_approx,
    check_additivity,
    check_dimension_partition,
    ingest,
    limit_volume,
    volume_limit_estimate,
    w_counts,
)
from okounkov.services.seshadri import (
    BodyFamily,
    SeshadriResult,
    packing_volume_check,
    simplex_certificate,
    xi_simplex_fit,
)
from okounkov.services.surface_bodies import (
    PiecewiseLinear,
    curve_seshadri_infimum,
    restricted_volume_slice,
    surface_bodies,
    truncation_point,
    volume_difference_check,
)
from okounkov.services.toric_bodies import (
    barycentric_meeting_point,
    export_payload,
    jet_separation,
    toric_body,
    toric_oracle_export,
    toric_seshadri,
    toric_subdivision,
    toric_volume_check,
)
from okounkov.services.zariski import (
    check_zariski,
    ray_breakpoints,
    volume_of,
    zariski,
    zariski_chamber_count,
)
from okounkov.sources.dispatcher import BodySourceDispatcher
from okounkov.sources.surface_source import P2FormulaSource, line_bundle_from_schema, surface_spec_from_schema
from okounkov.sources.toric_source import toric_input_from_schema

logger = get_logger(__name__)


class StageTimer:
    """Wall-clock seconds per pipeline stage, for the timings sidecar only."""

    def __init__(self):
        self.seconds: Dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.seconds[name] = round(time.perf_counter() - start, 6)


@dataclass
class JobOutcome:
    report: Report
    files: Dict[str, str] = field(default_factory=dict)  # extra outputs by file name
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def failed_checks(self) -> List[str]:
        return [c.name for c in self.report.checks if not c.passed]


# ---------------------------------------------------------
# INPUT
# ---------------------------------------------------------
def load_payload(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise SchemaError(f"input file {path} does not exist") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input file {path} is not valid JSON: {exc}") from exc


def _validate(model, payload: Any):
    if not isinstance(payload, dict):
        raise SchemaError("input must be a JSON object")
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        raise SchemaError(f"input does not match the {model.__name__} schema: {exc}") from exc


def _load_curves(spec: str) -> Any:
    if spec == "delpezzo":
        return spec
    payload = load_payload(Path(spec))
    return payload.get("curves") if isinstance(payload, dict) else payload


# ---------------------------------------------------------
# SHARED REPORT PIECES
# ---------------------------------------------------------
def _entry(result: CheckResult) -> CheckEntry:
    return CheckEntry(**asdict(result))


def _entries(results: List[CheckResult]) -> List[CheckEntry]:
    return [_entry(r) for r in results]


def _body_entries(bodies: List[Polytope]) -> List[BodyEntry]:
    return [
        BodyEntry(label=f"body_{j}", polytope=PolytopeSchema.from_polytope(B), volume=volume(B) if not B.is_empty else 0)
        for j, B in enumerate(bodies)
    ]


def _fit(fam: BodyFamily, vol_total: Fraction) -> Tuple[SeshadriResult, List[CheckResult], bool]:
    """Simplex fit with its certificate, upper bound and packing checks."""
    result = xi_simplex_fit(fam)
    certificate = simplex_certificate(fam, result)
    lhs, rhs, _ok = packing_volume_check(fam, vol_total)
    bound = vol_total / len(fam.bodies)
    checks = [
        CheckResult.holds("xi_certificate", certificate, f"denominator {settings.CERTIFICATE_DENOMINATOR}"),
        CheckResult.compare("xi_upper_bound", result.xi ** fam.n, bound, "<="),
        CheckResult.compare("packing_volume", lhs, rhs),
    ]
    return result, checks, result.xi ** fam.n <= bound


def _apply_fit(report: Report, result: SeshadriResult, upper_ok: bool, certificate_ok: bool) -> None:
    report.xi = result.xi
    report.witness = WitnessSchema(body=result.witness_body, facet=result.witness_facet)
    report.capacity_note = result.capacity_note
    report.upper_bound_ok = upper_ok
    report.certificate_ok = certificate_ok


def _fit_into(report: Report, fam: BodyFamily, vol_total: Fraction) -> SeshadriResult:
    result, checks, upper_ok = _fit(fam, vol_total)
    _apply_fit(report, result, upper_ok, checks[0].passed)
    report.checks.extend(_entries(checks))
    return result


def _pieces(profile: PiecewiseLinear) -> List[LinearPieceSchema]:
    return [
        LinearPieceSchema(start=p.start, end=p.end, intercept=p.intercept, slope=p.slope) for p in profile.pieces
    ]


def _planar_svgs(bodies: List[Polytope], xi: Optional[Fraction], config: JobConfig) -> Dict[str, str]:
    if not config.emit_svg:
        return {}
    if any(B.dim != 2 for B in bodies):
        logger.warning("svg_skipped", reason="bodies are not planar")
        return {}
    return {f"body_{j}.svg": svg for j, svg in enumerate(body_svgs(bodies, xi))}


# ---------------------------------------------------------
# MODES
# ---------------------------------------------------------
def run_toric(config: JobConfig, timer: StageTimer) -> JobOutcome:
    payload = load_payload(config.input_path)
    if isinstance(payload, dict) and config.points is not None:
        payload = {**payload, "chosen": list(config.points)}
    schema: ToricInputSchema = _validate(ToricInputSchema, payload)
    k_max = config.k_max or schema.k_max
    inp = toric_input_from_schema(schema)

    with timer.stage("subdivision"):
        cells = toric_subdivision(inp)
        bodies = [toric_body(inp, j, cells) for j in range(len(inp.chosen))]
    scale = math.factorial(inp.n)
    vol_total = scale * volume(inp.polytope.base)
    report = Report(mode=JobMode.TORIC, app_version=settings.APP_VERSION, bodies=_body_entries(bodies))
    report.volumes = {"line_bundle": vol_total, "bodies_sum": scale * sum((volume(B) for B in bodies), Fraction(0))}

    closed_form = toric_seshadri(inp)
    lhs, rhs, _ok = toric_volume_check(inp)
    report.checks.extend(_entries([
        CheckResult.compare("toric_volume", lhs, rhs),
        CheckResult.holds("half_integer_seshadri", closed_form.denominator in (1, 2), f"value {closed_form}"),
    ]))
    with timer.stage("seshadri"):
        result = _fit_into(report, BodyFamily.of(bodies), vol_total)
    report.checks.append(_entry(CheckResult.compare("xi_toric_agreement", result.xi, closed_form)))

    files: Dict[str, str] = {}
    with timer.stage("oracle"):
        data = toric_oracle_export(inp, k_max)
        for j, body in enumerate(bodies):
            approx = body_approx(data, j, k_max)
            outside = [k for k, hull in sorted(approx.levels.items()) if not is_subset(hull, body)]
            report.checks.append(_entry(CheckResult.holds(f"oracle_inclusion[{j}]", not outside, f"levels outside: {outside}")))
        broken = [k for k in range(1, k_max + 1) if not check_dimension_partition(data, k)]
        report.checks.append(_entry(CheckResult.holds("oracle_partition", not broken, f"levels failing: {broken}")))
        files["oracle.json"] = json.dumps(export_payload(data), separators=(",", ":")) + "\n"

    meeting = barycentric_meeting_point(inp)
    report.toric = ToricDetails(
        bodies=[
            ToricBodySchema(
                j=j,
                chart=ChartSchema(
                    vertex=list(chart.vertex),
                    edge_directions=[list(e.direction) for e in chart.edges],
                    edge_lengths=[e.length for e in chart.edges],
                    inverse_basis=[list(row) for row in chart.inverse_basis],
                ),
                cell=PolytopeSchema.from_polytope(cells[j]),
                body=PolytopeSchema.from_polytope(bodies[j]),
                volume=volume(bodies[j]),
            )
            for j, chart in enumerate(inp.charts)
        ],
        seshadri_closed_form=closed_form,
        jet_separation=[jet_separation(inp.polytope, v) for v in inp.chosen],
        meeting_point=list(meeting) if meeting is not None else None,
    )

    files.update(_planar_svgs(bodies, result.xi, config))
    if config.emit_svg and inp.n == 2:
        files["subdivision.svg"] = plot_subdivision(inp.polytope.base, cells, [inp.polytope.vertices[v] for v in inp.chosen])
    return JobOutcome(report, files)


def run_surface(config: JobConfig, timer: StageTimer) -> JobOutcome:
    payload = load_payload(config.input_path)
    if isinstance(payload, dict) and config.curves is not None:
        payload = {**payload, "curves": _load_curves(config.curves)}
    schema: SurfaceInputSchema = _validate(SurfaceInputSchema, payload)
    report = Report(mode=JobMode.SURFACE, app_version=settings.APP_VERSION)

    if schema.epsilon is not None:
        return _run_p2_formula(schema, report, timer, config)

    with timer.stage("curves"):
        spec = surface_spec_from_schema(schema)
    L = line_bundle_from_schema(schema)
    details = SurfaceDetails(N=spec.N, curve_count=len(spec.curves), provenance=spec.provenance.value)
    with timer.stage("zariski"):
        dec = zariski(spec, L)
        check_zariski(spec, dec)
    details.zariski = ZariskiSchema(
        D=dec.D.as_list(), P=dec.P.as_list(), Nneg=dec.Nneg.as_list(),
        support=list(dec.support), coefficients=list(dec.coefficients), volume=dec.volume,
    )
    report.volumes = {"line_bundle": dec.volume}
    report.surface = details
    if not schema.rays:
        return JobOutcome(report)

    with timer.stage("rays"):
        ray = ray_breakpoints(spec, L)
        details.breakpoints = list(ray.breakpoints)
        details.mu = ThresholdSchema(
            value=str(ray.mu),
            rational=ray.mu.rational if ray.mu.is_rational else None,
            quadratic=list(ray.mu.quadratic),
        )
        details.chamber_count = zariski_chamber_count(spec, L)
        upto = truncation_point(ray, schema.t_values)
        details.truncated_at = upto
        results = surface_bodies(spec, L, upto)
    details.bodies = [
        SurfaceBodySchema(
            j=b.j,
            breakpoints=list(b.breakpoints),
            beta=_pieces(b.beta),
            body_blowup=PolytopeSchema.from_polytope(b.body_blowup_coords),
            body_deglex=PolytopeSchema.from_polytope(b.body_deglex_coords),
            area=b.area,
        )
        for b in results
    ]
    deglex = [b.body_deglex_coords for b in results]
    report.bodies = _body_entries(deglex)
    total = 2 * sum((b.area for b in results), Fraction(0))
    report.volumes["bodies_sum"] = total

    if upto is None:
        vol_total = dec.volume
        checks = [CheckResult.compare("surface_volume", total, vol_total)]
    else:
        # truncated bodies carry Vol(L) - Vol(L - upto * G)
        vol_total = dec.volume - volume_of(spec, L - ray.G * upto)
        report.volumes["truncated"] = vol_total
        checks = [CheckResult.compare(f"surface_volume[t<={upto}]", total, vol_total)]
    if spec.provenance == CurveProvenance.DELPEZZO_AUTO and L == PicardClass.hyperplane(spec.N):
        checks.append(CheckResult.compare("zariski_chambers", details.chamber_count, 2, "<="))
    for t in schema.t_values:
        lhs, rhs, _ok = volume_difference_check(spec, L, t)
        checks.append(CheckResult.compare(f"volume_difference[t={t}]", lhs, rhs))
        if ray.mu.exceeds(t):
            details.slices.append(SliceSchema(t=t, lengths=[restricted_volume_slice(spec, L, j, t) for j in range(spec.N)]))
    report.checks.extend(_entries(checks))

    with timer.stage("seshadri"):
        result = _fit_into(report, BodyFamily.of(deglex), vol_total)
    if spec.provenance == CurveProvenance.DELPEZZO_AUTO and upto is None:
        report.checks.append(_entry(CheckResult.compare("xi_curve_agreement", result.xi, curve_seshadri_infimum(spec, L))))
    return JobOutcome(report, _planar_svgs(deglex, result.xi, config))


def _run_p2_formula(schema: SurfaceInputSchema, report: Report, timer: StageTimer, config: JobConfig) -> JobOutcome:
    if schema.L is not None and PicardClass.from_list(schema.L) != PicardClass.hyperplane(schema.N):
        raise PreconditionError("the closed form describes L = H only")
    with timer.stage("formula"):
        source = P2FormulaSource(schema.N, schema.epsilon)
    formula = source.formula
    bodies = source.bodies()
    area = volume(formula.body)
    report.bodies = _body_entries(bodies)
    report.volumes = {"line_bundle": Fraction(1), "bodies_sum": 2 * schema.N * area}
    report.surface = SurfaceDetails(
        N=schema.N,
        curve_count=0,
        provenance="closed_form",
        epsilon=formula.epsilon,
        profile=_pieces(formula.profile),
    )
    report.checks.extend(_entries([
        CheckResult.compare("surface_volume", 2 * schema.N * area, Fraction(1)),
        CheckResult.compare("profile_integral", formula.profile.integral(), area),
    ]))
    with timer.stage("seshadri"):
        result = _fit_into(report, source.family(), Fraction(1))
    return JobOutcome(report, _planar_svgs(bodies, result.xi, config))


def run_semigroup(config: JobConfig, timer: StageTimer) -> JobOutcome:
    payload = load_payload(config.input_path)
    if not isinstance(payload, dict):
        raise SchemaError("input must be a JSON object")
    data = ingest(payload)
    k_max = config.k_max or payload.get("k_max") or max(data.levels)
    report = Report(mode=JobMode.SEMIGROUP, app_version=settings.APP_VERSION)

    summaries, hulls, checks = [], [], []
    with timer.stage("bodies"):
        for j in range(data.N):
            approx = body_approx(data, j, k_max)
            levels = sorted(approx.levels)
            summaries.append(SemigroupBodySchema(
                j=j,
                k_max=k_max,
                levels=[LevelHullSchema(k=k, hull=PolytopeSchema.from_polytope(approx.levels[k])) for k in levels],
                limit_hull=PolytopeSchema.from_polytope(approx.limit_hull),
                limit_volume=limit_volume(approx),
                volume_sequence=[[m, value] for m, value in volume_limit_estimate(data, j, levels)],
            ))
            hulls.append(approx.limit_hull)
            top = min(k_max, settings.ADDITIVITY_MAX_LEVEL)
            pairs = [(k, l) for k in levels for l in levels if k <= l and k + l <= top and k + l in data.levels]
            bad = [(k, l) for k, l in pairs if not check_additivity(data, j, k, l)]
            checks.append(CheckResult.holds(f"additivity[{j}]", not bad, f"pairs failing: {bad}"))

    counts = {k: w_counts(data, k) for k in sorted(data.levels) if k <= k_max}
    for summary in summaries:
        summary.w_counts = counts
    declared = [k for k in sorted(data.levels) if k <= k_max and k in data.h0]
    broken = [k for k in declared if not check_dimension_partition(data, k)]
    if declared:
        checks.append(CheckResult.holds("dimension_partition", not broken, f"levels failing: {broken}"))

    report.semigroup = summaries
    report.bodies = _body_entries(hulls)
    report.volumes = {f"body_{j}": s.limit_volume for j, s in enumerate(summaries)}
    report.checks = _entries(checks)
    return JobOutcome(report, _planar_svgs(hulls, None, config))


def run_seshadri(config: JobConfig, timer: StageTimer) -> JobOutcome:
    payload = load_payload(config.input_path)
    with timer.stage("bodies"):
        source = BodySourceDispatcher.from_payload(payload, points=config.points)
        bodies = source.bodies()
    report = Report(mode=JobMode.SESHADRI, app_version=settings.APP_VERSION, bodies=_body_entries(bodies))
    vol_total = source.volume_total()
    report.volumes = {"line_bundle": vol_total}
    with timer.stage("seshadri"):
        result = _fit_into(report, BodyFamily.of(bodies), vol_total)
    logger.info("seshadri_fitted", source=source.label(), xi=str(result.xi))
    return JobOutcome(report, _planar_svgs(bodies, result.xi, config))


def run_check(config: JobConfig, timer: StageTimer) -> JobOutcome:
    import okounkov.checks  # noqa: F401  registers the checks

    with timer.stage("checks"):
        try:
            results = run_checks(config.checks or None, k_max=config.k_max)
        except KeyError as exc:
            raise SchemaError(str(exc.args[0])) from None
    return JobOutcome(Report(mode=JobMode.CHECK, app_version=settings.APP_VERSION, checks=_entries(results)))


MODE_HANDLERS: Dict[JobMode, Callable[[JobConfig, StageTimer], JobOutcome]] = {
    JobMode.TORIC: run_toric,
    JobMode.SURFACE: run_surface,
    JobMode.SEMIGROUP: run_semigroup,
    JobMode.SESHADRI: run_seshadri,
    JobMode.CHECK: run_check,
}


# ---------------------------------------------------------
# OUTPUT
# ---------------------------------------------------------
def write_outputs(outcome: JobOutcome, output_dir: Path, job_id: str) -> List[Path]:
    """Report and extra files are canonical; timings.json is the only run-dependent file."""
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    report_path = output_dir / settings.REPORT_FILENAME
    report_path.write_text(outcome.report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    written.append(report_path)
    for name in sorted(outcome.files):
        path = output_dir / name
        path.write_text(outcome.files[name], encoding="utf-8")
        written.append(path)
    timings = Timings(job_id=job_id, mode=outcome.report.mode, seconds=outcome.timings)
    timings_path = output_dir / settings.TIMINGS_FILENAME
    timings_path.write_text(timings.model_dump_json(indent=2) + "\n", encoding="utf-8")
    written.append(timings_path)
    return written


def run(config: JobConfig) -> JobOutcome:
    """Run one job; binds job_id and mode to every log line emitted meanwhile."""
    job_id = str(uuid.uuid4())
    clear_contextvars()
    bind_contextvars(job_id=job_id, mode=config.mode.value)
    logger.info("job_started", input=str(config.input_path) if config.input_path else None, output=str(config.output_dir))
    timer = StageTimer()
    try:
        outcome = MODE_HANDLERS[config.mode](config, timer)
        outcome.timings = timer.seconds
        written = write_outputs(outcome, config.output_dir, job_id)
        logger.info(
            "job_completed",
            files=[p.name for p in written],
            checks=len(outcome.report.checks),
            failed=outcome.failed_checks,
        )
        return outcome
    except OkounkovError as exc:
        logger.error("job_failed", error=exc.message, error_type=type(exc).__name__, exit_code=exc.exit_code)
        raise
    finally:
        clear_contextvars()
