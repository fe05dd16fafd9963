"""Batch command-line interface.

Subcommands: solve-slab, solve-fiber, coherence, bound, sweep, limit.
Exit codes: 0 success, 1 validation or config error, 2 valid input but the
requested mode does not exist (below cutoff).  Output is deterministic by
default (no timestamps) and numbers are serialized at 15 significant
digits, enough to round-trip doubles between the CSV and JSON forms.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import sys
from typing import Any

from .coherence import LightSource, coherence_info, preset_sources
from .errors import ConfigError, DomainError, PoleError, SolverError, UnderflowError
from .fiber import HE11, LP01, FiberGeometry, normalized_frequency, solve_he11, solve_lp01
from .quantities import make_eigenvalue_set
from .slab import SlabGeometry, cutoff_thickness, enumerate_modes, solve_mode
from .sweep import (
    CORE_DIMENSION,
    EFFECTIVE_WIDTH,
    LINEAR,
    LOG,
    SweepSpec,
    fuzziness_crossover,
    run_sweep,
)
from .uncertainty import BoundInputs, bound_neff, definability_limit
from .units import LENGTH_UNITS, parse_length

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_MODE = 2


def _f15(x: float) -> str:
    return format(x, ".15g")


def _round15(x: float) -> float:
    # keep JSON numerics at exactly the CSV serialization precision
    return float(_f15(x))


def _json_value(value: Any) -> Any:
    if isinstance(value, float):
        return _round15(value)
    return value


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _f15(value)
    return str(value)


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _table_csv(meta: dict, header: list[str], rows: list[list], footer: dict | None = None) -> str:
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}={_csv_cell(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(cell) for cell in row])
    for key, value in (footer or {}).items():
        buf.write(f"# {key}={_csv_cell(value)}\n")
    return buf.getvalue()


def _table_json(meta: dict, header: list[str], rows: list[list], footer: dict | None = None) -> str:
    payload = {
        "meta": {k: _json_value(v) for k, v in {**meta, **(footer or {})}.items()},
        "rows": [
            {key: _json_value(cell) for key, cell in zip(header, row)} for row in rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit_table(
    args, meta: dict, header: list[str], rows: list[list], footer: dict | None = None
) -> None:
    if args.emit == "csv":
        text = _table_csv(meta, header, rows, footer)
    else:
        text = _table_json(meta, header, rows, footer)
    _emit(text, args.output)


def _emit_report(args, report: dict) -> None:
    text = json.dumps({k: _json_value(v) for k, v in report.items()}, indent=2) + "\n"
    _emit(text, args.output)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors by default; the contract
    # reserves 2 for "valid input, no such mode", so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _length_flag(text: str) -> float:
    try:
        return parse_length(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _err(message: str) -> None:
    sys.stderr.write(f"neffkit: error: {message}\n")


# ---------------------------------------------------------------- solve-slab


def cmd_solve_slab(args) -> int:
    g = SlabGeometry(d=args.d, n_core=args.n_core, n_sub=args.n_sub, n_cover=args.n_cover)
    pol = args.pol.upper()
    if args.order is None:
        modes = enumerate_modes(g, args.lambda0, pol)
        missing_order = 0
    else:
        mode = solve_mode(g, args.lambda0, pol, args.order)
        modes = [] if mode is None else [mode]
        missing_order = args.order
    if not modes:
        payload = {
            "error": "below-cutoff",
            "polarization": pol,
            "order": missing_order,
            "d_m": _round15(g.d),
            "cutoff_thickness_m": _round15(
                cutoff_thickness(g, args.lambda0, pol, missing_order)
            ),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
        return EXIT_NO_MODE

    header = [
        "polarization",
        "order",
        "n_eff",
        "beta_rad_per_m",
        "lambda_eff_m",
        "kappa_rad_per_m",
        "gamma_sub_rad_per_m",
        "gamma_cover_rad_per_m",
        "effective_width_m",
    ]
    rows = []
    for mode in modes:
        ev = make_eigenvalue_set(args.lambda0, mode.n_eff)
        rows.append(
            [
                mode.polarization,
                mode.m,
                mode.n_eff,
                ev.beta,
                ev.lambda_eff,
                mode.kappa,
                mode.gamma_sub,
                mode.gamma_cover,
                mode.effective_width,
            ]
        )
    meta = {
        "command": "solve-slab",
        "d_m": g.d,
        "n_core": g.n_core,
        "n_sub": g.n_sub,
        "n_cover": g.n_cover,
        "lambda0_m": args.lambda0,
        "polarization": pol,
    }
    _emit_table(args, meta, header, rows)
    return EXIT_OK


# --------------------------------------------------------------- solve-fiber


def cmd_solve_fiber(args) -> int:
    g = FiberGeometry(a=args.a, n_core=args.n_core, n_clad=args.n_clad)
    family = args.family.upper()
    solver = solve_he11 if family == HE11 else solve_lp01
    mode = solver(g, args.lambda0)
    ev = make_eigenvalue_set(args.lambda0, mode.n_eff)
    header = ["family", "n_eff", "u", "w", "v", "beta_rad_per_m", "lambda_eff_m"]
    rows = [[mode.family, mode.n_eff, mode.u, mode.w, mode.v, ev.beta, ev.lambda_eff]]
    meta = {
        "command": "solve-fiber",
        "a_m": g.a,
        "n_core": g.n_core,
        "n_clad": g.n_clad,
        "lambda0_m": args.lambda0,
        "family": family,
        "v": normalized_frequency(g, args.lambda0),
    }
    _emit_table(args, meta, header, rows)
    return EXIT_OK


# ----------------------------------------------------------------- coherence


def cmd_coherence(args) -> int:
    if args.presets:
        header = [
            "label",
            "lambda0_m",
            "delta_lambda_m",
            "delta_nu_hz",
            "coherence_time_s",
            "coherence_length_m",
        ]
        rows = []
        for src in preset_sources():
            info = coherence_info(src)
            rows.append(
                [
                    src.label,
                    src.lambda0,
                    src.delta_lambda,
                    info.delta_nu,
                    info.coherence_time,
                    info.coherence_length,
                ]
            )
        _emit_table(args, {"command": "coherence-presets"}, header, rows)
        return EXIT_OK
    missing = [
        name
        for name, value in (("lambda0", args.lambda0), ("delta-lambda", args.delta_lambda))
        if value is None
    ]
    if missing:
        raise ConfigError(
            f"missing required flags: {', '.join('--' + m for m in missing)}",
            fields=missing,
        )
    src = LightSource(
        lambda0=args.lambda0, delta_lambda=args.delta_lambda, label=args.label
    )
    info = coherence_info(src)
    _emit_report(
        args,
        {
            "lambda0_m": src.lambda0,
            "delta_lambda_m": src.delta_lambda,
            "label": src.label,
            "delta_nu_hz": info.delta_nu,
            "coherence_time_s": info.coherence_time,
            "coherence_length_m": info.coherence_length,
        },
    )
    return EXIT_OK


# --------------------------------------------------------------------- bound


def cmd_bound(args) -> int:
    lc = None if args.dirac else args.lc
    report = bound_neff(
        BoundInputs(
            lambda0=args.lambda0,
            n_eff=args.n_eff,
            delta_x=args.dx,
            coherence_length=lc,
        ),
        modal_window=args.window,
    )
    _emit_report(
        args,
        {
            "lambda0_m": args.lambda0,
            "delta_x_m": args.dx,
            "n_eff": args.n_eff,
            "coherence_length_m": lc,
            "modal_window": args.window,
            "min_delta_neff": report.min_delta_neff,
            "confinement_term": report.confinement_term,
            "coherence_term": report.coherence_term,
            "ratio_lambda_dx": report.ratio_lambda_dx,
            "ratio_lambda_lc": report.ratio_lambda_lc,
            "vacuous": report.vacuous,
            "classification": report.classification,
        },
    )
    return EXIT_OK


# --------------------------------------------------------------------- limit


def cmd_limit(args) -> int:
    lc = None if args.dirac else args.lc
    dx = definability_limit(args.lambda0, args.n_eff, lc, args.window)
    _emit(f"{_f15(dx / LENGTH_UNITS[args.unit])} {args.unit}\n", args.output)
    return EXIT_OK


# --------------------------------------------------------------------- sweep

_SWEEP_HEADER = [
    "dimension_m",
    "n_eff",
    "min_delta_neff",
    "vacuous",
    "classification",
    "relative_fuzziness",
]

_DX_POLICIES = {"core": CORE_DIMENSION, "width": EFFECTIVE_WIDTH,
                CORE_DIMENSION: CORE_DIMENSION, EFFECTIVE_WIDTH: EFFECTIVE_WIDTH}

_CONFIG_KEYS = {
    "structure", "n_core", "n_sub", "n_cover", "n_clad", "polarization",
    "order", "family", "lambda0", "delta_lambda", "label", "min", "max",
    "points", "spacing", "dx_policy", "window",
}


def _spec_from_config(cfg: dict) -> SweepSpec:
    if not isinstance(cfg, dict):
        raise ConfigError("config root must be a JSON object")
    unknown = sorted(set(cfg) - _CONFIG_KEYS)
    if unknown:
        raise ConfigError(
            f"unknown config fields: {', '.join(unknown)}", fields=unknown
        )
    missing = [k for k in ("structure", "lambda0", "min", "max", "points") if k not in cfg]
    if missing:
        raise ConfigError(
            f"missing config fields: {', '.join(missing)}", fields=missing
        )
    kind = cfg["structure"]
    range_min = parse_length(cfg["min"], field="min")
    range_max = parse_length(cfg["max"], field="max")
    source = LightSource(
        lambda0=parse_length(cfg["lambda0"], field="lambda0"),
        delta_lambda=parse_length(cfg.get("delta_lambda", 0.0), field="delta_lambda"),
        label=str(cfg.get("label", "")),
    )
    common = dict(
        range_min=range_min,
        range_max=range_max,
        points=cfg["points"],
        source=source,
        spacing=cfg.get("spacing", LOG),
        dx_policy=_DX_POLICIES.get(cfg.get("dx_policy", CORE_DIMENSION),
                                   cfg.get("dx_policy", CORE_DIMENSION)),
        modal_window=cfg.get("window", 3.0),
    )
    if kind == "slab":
        needed = [k for k in ("n_core", "n_sub", "n_cover", "polarization") if k not in cfg]
        if needed:
            raise ConfigError(f"missing slab fields: {', '.join(needed)}", fields=needed)
        structure = SlabGeometry(
            d=range_min, n_core=cfg["n_core"], n_sub=cfg["n_sub"], n_cover=cfg["n_cover"]
        )
        return SweepSpec(
            structure=structure,
            polarization=str(cfg["polarization"]).upper(),
            order=cfg.get("order", 0),
            **common,
        )
    if kind == "fiber":
        needed = [k for k in ("n_core", "n_clad") if k not in cfg]
        if needed:
            raise ConfigError(f"missing fiber fields: {', '.join(needed)}", fields=needed)
        structure = FiberGeometry(a=range_min, n_core=cfg["n_core"], n_clad=cfg["n_clad"])
        return SweepSpec(
            structure=structure,
            family=str(cfg.get("family", "HE11")).upper(),
            **common,
        )
    raise ConfigError(
        f"structure must be 'slab' or 'fiber' (got {kind!r})", fields=["structure"]
    )


def _spec_from_flags(args) -> SweepSpec:
    if args.structure is None:
        raise ConfigError(
            "either --config or --structure with full flags is required",
            fields=["structure"],
        )
    cfg: dict[str, Any] = {
        "structure": args.structure,
        "lambda0": args.lambda0,
        "delta_lambda": args.delta_lambda,
        "label": args.label,
        "min": args.min,
        "max": args.max,
        "points": args.points,
        "spacing": args.spacing,
        "dx_policy": args.dx_policy,
        "window": args.window,
    }
    missing = [k for k, v in cfg.items() if v is None]
    if missing:
        raise ConfigError(
            f"missing required sweep flags: {', '.join('--' + k.replace('_', '-') for k in missing)}",
            fields=missing,
        )
    if args.structure == "slab":
        for name in ("n_core", "n_sub", "n_cover", "pol"):
            if getattr(args, name) is None:
                raise ConfigError(
                    f"--{name.replace('_', '-')} is required for slab sweeps", fields=[name]
                )
        cfg.update(
            n_core=args.n_core, n_sub=args.n_sub, n_cover=args.n_cover,
            polarization=args.pol, order=args.order if args.order is not None else 0,
        )
    else:
        for name in ("n_core", "n_clad"):
            if getattr(args, name) is None:
                raise ConfigError(
                    f"--{name.replace('_', '-')} is required for fiber sweeps", fields=[name]
                )
        cfg.update(n_core=args.n_core, n_clad=args.n_clad, family=args.family)
    return _spec_from_config(cfg)


def cmd_sweep(args) -> int:
    if args.config is not None:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(
                f"config parse error in {args.config!r} at line {exc.lineno}, "
                f"column {exc.colno}: {exc.msg}"
            ) from exc
        spec = _spec_from_config(cfg)
    else:
        spec = _spec_from_flags(args)

    table = run_sweep(spec)
    meta = dict(table.meta)
    if args.stamp:
        meta["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    footer = None
    if args.find_limit:
        crossover = fuzziness_crossover(spec)
        footer = {
            "find_limit_dimension_m": "none" if crossover is None else crossover
        }
    rows = [
        [
            row.dimension,
            row.n_eff,
            row.min_delta_neff,
            row.vacuous,
            row.classification,
            row.relative_fuzziness,
        ]
        for row in table.rows
    ]
    _emit_table(args, meta, _SWEEP_HEADER, rows, footer)
    return EXIT_OK


# -------------------------------------------------------------------- parser


def _add_output_flags(p: _Parser, default_emit: str) -> None:
    p.add_argument("--emit", choices=["csv", "json"], default=default_emit,
                   help=f"output format (default {default_emit})")
    p.add_argument("--output", default=None, metavar="PATH",
                   help="write to a file instead of standard output")


def build_parser() -> _Parser:
    parser = _Parser(prog="neffkit", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve-slab", help="solve planar waveguide modes")
    p.add_argument("--d", type=_length_flag, required=True, help="core thickness, e.g. 500nm")
    p.add_argument("--n-core", type=float, required=True, dest="n_core")
    p.add_argument("--n-sub", type=float, required=True, dest="n_sub")
    p.add_argument("--n-cover", type=float, required=True, dest="n_cover")
    p.add_argument("--lambda0", type=_length_flag, required=True, help="vacuum wavelength, e.g. 1550nm")
    p.add_argument("--pol", choices=["te", "tm"], required=True)
    order_group = p.add_mutually_exclusive_group()
    order_group.add_argument("--order", type=int, default=None, help="single mode order m")
    order_group.add_argument("--all", action="store_true", help="all guided orders (default)")
    _add_output_flags(p, "json")
    p.set_defaults(func=cmd_solve_slab)

    p = sub.add_parser("solve-fiber", help="solve the circular-core fundamental mode")
    p.add_argument("--a", type=_length_flag, required=True, help="core radius, e.g. 4um")
    p.add_argument("--n-core", type=float, required=True, dest="n_core")
    p.add_argument("--n-clad", type=float, required=True, dest="n_clad")
    p.add_argument("--lambda0", type=_length_flag, required=True)
    p.add_argument("--family", choices=["he11", "lp01"], default="he11")
    _add_output_flags(p, "json")
    p.set_defaults(func=cmd_solve_fiber)

    p = sub.add_parser("coherence", help="coherence time/length of a source")
    p.add_argument("--lambda0", type=_length_flag, default=None)
    p.add_argument("--delta-lambda", type=_length_flag, default=None, dest="delta_lambda",
                   help="FWHM linewidth; 0 for an ideal line")
    p.add_argument("--label", default="")
    p.add_argument("--presets", action="store_true", help="list the bundled example sources")
    _add_output_flags(p, "json")
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("bound", help="uncertainty bound on the effective index")
    p.add_argument("--lambda0", type=_length_flag, required=True)
    p.add_argument("--dx", type=_length_flag, required=True, help="spatial localization")
    p.add_argument("--n-eff", type=float, required=True, dest="n_eff")
    lc_group = p.add_mutually_exclusive_group(required=True)
    lc_group.add_argument("--lc", type=_length_flag, default=None, help="coherence length")
    lc_group.add_argument("--dirac", action="store_true", help="ideal zero-linewidth source")
    p.add_argument("--window", type=float, default=3.0, help="definability scale (default 3)")
    p.add_argument("--output", default=None, metavar="PATH")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="sweep a dimension and tabulate bound vs size")
    p.add_argument("--config", default=None, metavar="PATH", help="JSON run config")
    p.add_argument("--structure", choices=["slab", "fiber"], default=None)
    p.add_argument("--n-core", type=float, default=None, dest="n_core")
    p.add_argument("--n-sub", type=float, default=None, dest="n_sub")
    p.add_argument("--n-cover", type=float, default=None, dest="n_cover")
    p.add_argument("--n-clad", type=float, default=None, dest="n_clad")
    p.add_argument("--pol", choices=["te", "tm"], default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--family", choices=["he11", "lp01"], default="he11")
    p.add_argument("--lambda0", type=_length_flag, default=None)
    p.add_argument("--delta-lambda", type=_length_flag, default=0.0, dest="delta_lambda")
    p.add_argument("--label", default="")
    p.add_argument("--min", type=_length_flag, default=None, help="sweep range start")
    p.add_argument("--max", type=_length_flag, default=None, help="sweep range end")
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--spacing", choices=[LOG, LINEAR], default=LOG)
    p.add_argument("--dx-policy", choices=["core", "width"], default="core", dest="dx_policy")
    p.add_argument("--window", type=float, default=3.0)
    p.add_argument("--find-limit", action="store_true", dest="find_limit",
                   help="append the interpolated definability crossover")
    p.add_argument("--stamp", action="store_true", help="include a timestamp in metadata")
    _add_output_flags(p, "csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("limit", help="definability localization limit")
    p.add_argument("--lambda0", type=_length_flag, required=True)
    p.add_argument("--n-eff", type=float, required=True, dest="n_eff")
    lc_group = p.add_mutually_exclusive_group(required=True)
    lc_group.add_argument("--lc", type=_length_flag, default=None)
    lc_group.add_argument("--dirac", action="store_true")
    p.add_argument("--window", type=float, default=3.0)
    p.add_argument("--unit", choices=sorted(LENGTH_UNITS), default="nm")
    p.add_argument("--output", default=None, metavar="PATH")
    p.set_defaults(func=cmd_limit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ConfigError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (UnderflowError, PoleError) as exc:
        _err(f"numeric range error: {exc}")
        return EXIT_USAGE
    except SolverError as exc:
        _err(f"internal solver failure: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
