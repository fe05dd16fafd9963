"""Couple the mode solvers to the uncertainty engine over a geometry sweep.

One transverse dimension (slab thickness or fiber core radius) is swept
over a grid; at every point the requested mode is solved and the
uncertainty bound evaluated with delta_x tied to a chosen confinement
measure.  Below-cutoff points are carried as explicit absences, never
zeros, so downstream consumers cannot silently average them away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Final

from .coherence import LightSource, coherence_info
from .errors import ConfigError, SolverError
from .fiber import HE11, LP01, FiberGeometry, solve_he11, solve_lp01
from .slab import TE, TM, SlabGeometry, solve_mode
from .uncertainty import DEFAULT_MODAL_WINDOW, BoundInputs, bound_neff

__all__ = [
    "CORE_DIMENSION",
    "EFFECTIVE_WIDTH",
    "LOG",
    "LINEAR",
    "SweepSpec",
    "SweepRow",
    "SweepTable",
    "validate_spec",
    "run_sweep",
    "fuzziness_crossover",
]

CORE_DIMENSION: Final = "CoreDimension"
EFFECTIVE_WIDTH: Final = "EffectiveWidth"
LOG: Final = "log"
LINEAR: Final = "linear"


@dataclass(frozen=True, slots=True)
class SweepSpec:
    """A geometry template with one swept dimension plus mode and source
    selectors.

    The swept field of ``structure`` (d for slabs, a for fibers) is a
    placeholder; its value is replaced at every grid point.
    """

    structure: SlabGeometry | FiberGeometry
    range_min: float
    range_max: float
    points: int
    source: LightSource
    spacing: str = LOG
    polarization: str | None = None  # slab selector
    order: int | None = None  # slab selector
    family: str | None = None  # fiber selector
    dx_policy: str = CORE_DIMENSION
    modal_window: float = DEFAULT_MODAL_WINDOW


@dataclass(frozen=True, slots=True)
class SweepRow:
    """One sweep point; bound fields are None when the mode is below cutoff."""

    dimension: float
    n_eff: float | None
    min_delta_neff: float | None
    vacuous: bool | None
    classification: str | None
    relative_fuzziness: float | None


@dataclass(frozen=True, slots=True)
class SweepTable:
    rows: list[SweepRow]
    meta: dict = field(default_factory=dict)


def validate_spec(spec: SweepSpec) -> None:
    """Check every field; raises ConfigError listing all offending fields."""
    problems: list[tuple[str, str]] = []
    is_slab = isinstance(spec.structure, SlabGeometry)
    is_fiber = isinstance(spec.structure, FiberGeometry)
    if not (is_slab or is_fiber):
        problems.append(("structure", "must be a SlabGeometry or FiberGeometry"))
    if not (isinstance(spec.range_min, (int, float)) and spec.range_min > 0.0):
        problems.append(("range_min", f"must be positive (got {spec.range_min!r})"))
    if not (isinstance(spec.range_max, (int, float)) and spec.range_max > spec.range_min):
        problems.append(
            ("range_max", f"must exceed range_min (got {spec.range_max!r})")
        )
    if not (isinstance(spec.points, int) and spec.points >= 2):
        problems.append(("points", f"must be an integer >= 2 (got {spec.points!r})"))
    if spec.spacing not in (LOG, LINEAR):
        problems.append(("spacing", f"must be {LOG!r} or {LINEAR!r} (got {spec.spacing!r})"))
    if is_slab:
        if spec.polarization not in (TE, TM):
            problems.append(
                ("polarization", f"must be TE or TM for a slab sweep (got {spec.polarization!r})")
            )
        if not (isinstance(spec.order, int) and spec.order >= 0):
            problems.append(
                ("order", f"must be a non-negative integer for a slab sweep (got {spec.order!r})")
            )
        if spec.family is not None:
            problems.append(("family", "only applies to fiber sweeps"))
    if is_fiber:
        if spec.family not in (HE11, LP01):
            problems.append(
                ("family", f"must be HE11 or LP01 for a fiber sweep (got {spec.family!r})")
            )
        if spec.polarization is not None or spec.order is not None:
            problems.append(("polarization", "slab selectors do not apply to fiber sweeps"))
    if spec.dx_policy not in (CORE_DIMENSION, EFFECTIVE_WIDTH):
        problems.append(
            ("dx_policy", f"must be {CORE_DIMENSION!r} or {EFFECTIVE_WIDTH!r} (got {spec.dx_policy!r})")
        )
    elif spec.dx_policy == EFFECTIVE_WIDTH and not is_slab:
        problems.append(("dx_policy", f"{EFFECTIVE_WIDTH!r} is only defined for slab sweeps"))
    if not (isinstance(spec.modal_window, (int, float)) and spec.modal_window > 0.0):
        problems.append(("modal_window", f"must be positive (got {spec.modal_window!r})"))
    if not isinstance(spec.source, LightSource):
        problems.append(("source", "must be a LightSource"))
    if problems:
        detail = "; ".join(f"{name}: {why}" for name, why in problems)
        raise ConfigError(
            f"invalid sweep spec ({detail})", fields=[name for name, _ in problems]
        )


def _grid(spec: SweepSpec) -> list[float]:
    n = spec.points
    if spec.spacing == LINEAR:
        step = (spec.range_max - spec.range_min) / (n - 1)
        values = [spec.range_min + i * step for i in range(n)]
    else:
        ratio = math.log(spec.range_max / spec.range_min)
        values = [spec.range_min * math.exp(ratio * i / (n - 1)) for i in range(n)]
    values[-1] = spec.range_max  # pin the endpoint against rounding drift
    return values


def run_sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate the sweep; rows come back ordered by dimension."""
    validate_spec(spec)
    lambda0 = spec.source.lambda0
    lc = coherence_info(spec.source).coherence_length
    is_slab = isinstance(spec.structure, SlabGeometry)
    if is_slab:
        window_span = spec.structure.n_core - max(
            spec.structure.n_sub, spec.structure.n_cover
        )
    else:
        window_span = spec.structure.n_core - spec.structure.n_clad

    rows: list[SweepRow] = []
    for dim in _grid(spec):
        if is_slab:
            geometry = replace(spec.structure, d=dim)
            try:
                mode = solve_mode(geometry, lambda0, spec.polarization, spec.order)
            except SolverError as exc:
                raise SolverError(f"sweep point d={dim!r}: {exc}") from exc
            n_eff = None if mode is None else mode.n_eff
            width = None if mode is None else mode.effective_width
        else:
            geometry = replace(spec.structure, a=dim)
            solver = solve_he11 if spec.family == HE11 else solve_lp01
            try:
                mode = solver(geometry, lambda0)
            except SolverError as exc:
                raise SolverError(f"sweep point a={dim!r}: {exc}") from exc
            n_eff = mode.n_eff
            width = None

        if n_eff is None:
            rows.append(
                SweepRow(
                    dimension=dim,
                    n_eff=None,
                    min_delta_neff=None,
                    vacuous=None,
                    classification=None,
                    relative_fuzziness=None,
                )
            )
            continue

        delta_x = dim if spec.dx_policy == CORE_DIMENSION else width
        report = bound_neff(
            BoundInputs(
                lambda0=lambda0,
                n_eff=n_eff,
                delta_x=delta_x,
                coherence_length=lc,
            ),
            modal_window=spec.modal_window,
        )
        rows.append(
            SweepRow(
                dimension=dim,
                n_eff=n_eff,
                min_delta_neff=report.min_delta_neff,
                vacuous=report.vacuous,
                classification=report.classification,
                relative_fuzziness=report.min_delta_neff / window_span,
            )
        )

    meta = {
        "structure": "slab" if is_slab else "fiber",
        "swept_parameter": "d" if is_slab else "a",
        "range_min_m": spec.range_min,
        "range_max_m": spec.range_max,
        "points": spec.points,
        "spacing": spec.spacing,
        "lambda0_m": lambda0,
        "source_label": spec.source.label,
        "source_delta_lambda_m": spec.source.delta_lambda,
        "dx_policy": spec.dx_policy,
        "modal_window": spec.modal_window,
    }
    if is_slab:
        meta.update(
            n_core=spec.structure.n_core,
            n_sub=spec.structure.n_sub,
            n_cover=spec.structure.n_cover,
            polarization=spec.polarization,
            order=spec.order,
        )
    else:
        meta.update(
            n_core=spec.structure.n_core,
            n_clad=spec.structure.n_clad,
            family=spec.family,
        )
    return SweepTable(rows=rows, meta=meta)


def fuzziness_crossover(spec: SweepSpec) -> float | None:
    """Swept-dimension value where the bound first exceeds the modal window
    (walking from large dimensions down), interpolated between rows.

    None when the bound never exceeds the window in range.  Requires the
    CoreDimension delta_x policy (the crossover is a property of the
    dimension itself).
    """
    if spec.dx_policy != CORE_DIMENSION:
        raise ConfigError(
            f"fuzziness_crossover requires the {CORE_DIMENSION!r} policy",
            fields=["dx_policy"],
        )
    table = run_sweep(spec)
    present = [
        (row.dimension, row.min_delta_neff)
        for row in table.rows
        if row.min_delta_neff is not None
    ]
    if not any(bound > spec.modal_window for _, bound in present):
        return None
    for (d_lo, b_lo), (d_hi, b_hi) in zip(present, present[1:]):
        if b_lo > spec.modal_window >= b_hi:
            t = (spec.modal_window - b_lo) / (b_hi - b_lo)
            if spec.spacing == LOG:
                return math.exp(math.log(d_lo) + t * (math.log(d_hi) - math.log(d_lo)))
            return d_lo + t * (d_hi - d_lo)
    # every in-range row exceeds the window: report the top of the range
    return present[-1][0]
