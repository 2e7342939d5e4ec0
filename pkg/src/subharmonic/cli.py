"""Command-line interface: compute quantities, sweep grids, verify oracles.

Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
3 regime error (the requested quantity does not exist at or above
threshold; the message carries the margin kappa - 2*epsilon).

Outputs are deterministic: CSV files use LF line endings, a fixed header
per command, and 9 significant digits; JSON files are UTF-8 with sorted
keys.  A flat key-value config file can pre-set any flag; explicit flags
win.  Relative output paths resolve against $SUBHARMONIC_OUTDIR when set.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import moments as cf
from . import squeezing as sq
from .errors import ConvergenceError, ParameterError, ThresholdError
from .model import ModelParams, validate_regime
from .oracles import run_verification
from .qfunction import distribution_table, q_params

OUTDIR_ENV = "SUBHARMONIC_OUTDIR"


# ---------------------------------------------------------------- output

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def _sanitize(value):
    """Make floats JSON-safe: NaN -> None, infinities -> strings."""
    if isinstance(value, float):
        if math.isnan(value):
            return None
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {k: _sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_sanitize(v) for v in value]
    return value


def _resolve_output(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not p.is_absolute():
        p = Path(outdir) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _emit_text(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8", newline="\n")


def _emit_json(data, path: Path | None) -> None:
    _emit_text(json.dumps(_sanitize(data), sort_keys=True, indent=2) + "\n", path)


def _emit_csv(header: list[str], rows: list[tuple], path: Path | None) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    _emit_text("\n".join(lines) + "\n", path)


# ---------------------------------------------------------------- params

def _require_kappa(args) -> float:
    if args.kappa is None:
        raise ParameterError("--kappa is required (flag or config file)")
    return args.kappa


def _params_from_args(args) -> ModelParams:
    kappa = _require_kappa(args)
    has_eps = args.epsilon is not None
    has_pump = args.mu is not None or args.g is not None
    if has_eps and has_pump:
        raise ParameterError("give either --epsilon or the pump pair --mu/--g, not both")
    if has_eps:
        return ModelParams(kappa=kappa, epsilon=args.epsilon)
    if args.mu is None or args.g is None:
        raise ParameterError("the pump description needs both --mu and --g")
    return ModelParams.from_pump(kappa=kappa, mu=args.mu, g=args.g)


def _grid(args) -> np.ndarray:
    if args.points < 2:
        raise ParameterError(f"a sweep needs at least 2 grid points, got {args.points}")
    if args.scale == "log":
        if args.start <= 0 or args.stop <= 0:
            raise ParameterError("log-scale grids need positive start and stop")
        return np.geomspace(args.start, args.stop, args.points)
    return np.linspace(args.start, args.stop, args.points)


# -------------------------------------------------------------- commands

def _cmd_moments(args) -> int:
    p = _params_from_args(args)
    sm = cf.steady_moments(p)
    stats = cf.photon_statistics(p)
    data = {
        "kappa": p.kappa, "epsilon": p.epsilon,
        "n1": sm.n1, "n2": sm.n2, "cross": sm.cross,
        "mean": stats.mean, "variance": stats.variance, "fano": stats.fano,
    }
    path = _resolve_output(args.output)
    if args.format == "csv":
        header = ["kappa", "epsilon", "n1", "n2", "cross", "mean", "variance", "fano"]
        _emit_csv(header, [tuple(data[h] for h in header)], path)
    else:
        _emit_json(data, path)
    return 0


def _cmd_photon_dist(args) -> int:
    p = _params_from_args(args)
    q = q_params(p)
    table = distribution_table(q, cutoff=args.cutoff)
    path = _resolve_output(args.output)
    if args.format == "csv":
        rows = [(m, n, table[m, n])
                for m in range(table.shape[0]) for n in range(table.shape[1])]
        _emit_csv(["m", "n", "probability"], rows, path)
    else:
        _emit_json({
            "kappa": p.kappa, "epsilon": p.epsilon,
            "cutoff": table.shape[0] - 1,
            "total": float(table.sum()),
            "probabilities": table.tolist(),
        }, path)
    return 0


def _squeezing_data(p: ModelParams) -> dict:
    report = sq.squeezing_report(p)
    return {
        "kappa": p.kappa, "epsilon": p.epsilon, "margin": report.margin,
        "var_plus": report.var_plus, "var_minus": report.var_minus,
        "s_global": report.s_global,
        "var_plus_out": report.var_plus_out, "var_minus_out": report.var_minus_out,
        "s_out": report.s_out, "vacuum_level": report.vacuum_level,
    }


_SQUEEZING_HEADER = ["kappa", "epsilon", "margin", "var_plus", "var_minus",
                     "s_global", "var_plus_out", "var_minus_out", "s_out"]


def _cmd_squeezing(args) -> int:
    p = _params_from_args(args)
    data = _squeezing_data(p)
    path = _resolve_output(args.output)
    if args.format == "csv":
        _emit_csv(_SQUEEZING_HEADER, [tuple(data[h] for h in _SQUEEZING_HEADER)], path)
    else:
        _emit_json(data, path)
    return 0


def _cmd_spectrum(args) -> int:
    p = _params_from_args(args)
    path = _resolve_output(args.output)
    if args.offset is not None:
        data = {
            "kappa": p.kappa, "epsilon": p.epsilon,
            "offset": args.offset, "density": sq.spectrum_plus(p, args.offset),
        }
        if args.format == "csv":
            _emit_csv(["offset", "density"], [(args.offset, data["density"])], path)
        else:
            _emit_json(data, path)
        return 0
    offsets = _grid(args)
    rows = [(w, sq.spectrum_plus(p, w)) for w in offsets]
    if args.format == "json":
        _emit_json({
            "kappa": p.kappa, "epsilon": p.epsilon,
            "rows": [{"offset": w, "density": d} for w, d in rows],
        }, path)
    else:
        _emit_csv(["offset", "density"], rows, path)
    return 0


def _cmd_local_squeezing(args) -> int:
    p = _params_from_args(args)
    if args.half_width is None:
        raise ParameterError("--half-width is required (flag or config file)")
    s_local = sq.local_squeezing(p, args.half_width)
    data = {
        "kappa": p.kappa, "epsilon": p.epsilon,
        "half_width": args.half_width,
        "s_local": s_local,
        "s_global_reference": sq.global_squeezing(p),
        "local_variance": sq.local_variance_plus(p, args.half_width),
    }
    path = _resolve_output(args.output)
    if args.format == "csv":
        _emit_csv(["half_width", "s_local", "s_global_reference"],
                  [(args.half_width, s_local, data["s_global_reference"])], path)
    else:
        _emit_json(data, path)
    return 0


def _cmd_pump(args) -> int:
    kappa = _require_kappa(args)
    if args.mu is None or args.g is None:
        raise ParameterError("the pump command needs both --mu and --g")
    p = ModelParams.from_pump(kappa=kappa, mu=args.mu, g=args.g)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        value = cf.pump_mean_photon_number(p)
    data = {
        "kappa": p.kappa, "mu": p.mu, "g": p.g, "epsilon": p.epsilon,
        "pump_mean": value, "depleted": bool(value < 0),
    }
    path = _resolve_output(args.output)
    if args.format == "csv":
        header = ["kappa", "mu", "g", "epsilon", "pump_mean", "depleted"]
        _emit_csv(header, [tuple(data[h] for h in header)], path)
    else:
        _emit_json(data, path)
    return 0


def _cmd_verify(args) -> int:
    ratios = tuple(float(r) for r in args.ratios.split(","))
    report = run_verification(
        kappa=args.kappa,
        ratios=ratios,
        seed=args.seed,
        fock_rtol=args.fock_rtol,
        fock_abs=args.fock_abs,
    )
    _emit_json(report, _resolve_output(args.output))
    failures = [c for c in report["checks"] if not c["passed"]]
    print(
        f"verification: {len(report['checks'])} checks, "
        f"{'all passed' if not failures else f'{len(failures)} FAILED'}",
        file=sys.stderr,
    )
    for c in failures:
        print(f"  FAIL {c['name']}: computed {c['computed']:.10g} vs "
              f"expected {c['expected']:.10g} (tol {c['tolerance']:.1e})",
              file=sys.stderr)
    return 0 if report["passed"] else 1


_SWEEP_GRIDS = {
    # quantity: (start, stop, points, scale); epsilon sweeps scale with kappa
    "local-squeezing": (0.05, 10.0, 200, "log"),
    "spectrum": (-5.0, 5.0, 201, "linear"),
}


def _cmd_sweep(args) -> int:
    kappa = _require_kappa(args)
    over_epsilon = args.quantity in ("squeezing", "moments")
    default = _SWEEP_GRIDS.get(args.quantity, (0.0, 0.45 * kappa, 100, "linear"))
    if args.start is None:
        args.start = default[0]
    if args.stop is None:
        args.stop = default[1]
    if args.points is None:
        args.points = default[2]
    if args.scale is None:
        args.scale = default[3]
    path = _resolve_output(args.output)
    grid = _grid(args)

    if over_epsilon:
        epsilons = [ModelParams(kappa=kappa, epsilon=float(x)) for x in grid]
        if args.quantity == "squeezing":
            header = _SQUEEZING_HEADER
            rows = [tuple(_squeezing_data(px)[h] for h in header) for px in epsilons]
        else:
            header = ["epsilon", "n1", "n2", "cross", "mean", "variance", "fano"]
            rows = []
            for px in epsilons:
                sm = cf.steady_moments(px)
                stats = cf.photon_statistics(px)
                rows.append((px.epsilon, sm.n1, sm.n2, sm.cross,
                             stats.mean, stats.variance, stats.fano))
    else:
        p = _params_from_args(args)
        if args.quantity == "local-squeezing":
            s_global = sq.global_squeezing(p)
            rows = [(x, sq.local_squeezing(p, x), s_global) for x in grid]
            header = ["half_width", "s_local", "s_global_reference"]
        else:
            rows = [(x, sq.spectrum_plus(p, x)) for x in grid]
            header = ["offset", "density"]

    if args.format == "json":
        _emit_json({
            "kappa": kappa, "quantity": args.quantity,
            "rows": [dict(zip(header, row)) for row in rows],
        }, path)
    else:
        _emit_csv(header, rows, path)
    return 0


# --------------------------------------------------------------- parsing

def _add_param_flags(sub, pump_only: bool = False):
    # kappa is validated in the handlers so a config file may supply it
    sub.add_argument("--kappa", type=float, default=None,
                     help="cavity damping rate (both modes)")
    if not pump_only:
        sub.add_argument("--epsilon", type=float, default=None,
                         help="effective pump amplitude")
    sub.add_argument("--mu", type=float, default=None,
                     help="coherent drive amplitude of the pump")
    sub.add_argument("--g", type=float, default=None,
                     help="parametric coupling constant")


def _add_output_flags(sub, default_format="json"):
    sub.add_argument("--output", "-o", default=None,
                     help=f"output file (stdout if omitted; relative paths "
                          f"resolve against ${OUTDIR_ENV})")
    sub.add_argument("--format", choices=("json", "csv"), default=default_format,
                     help=f"output format (default {default_format})")


def _add_grid_flags(sub, start, stop, points, scale):
    sub.add_argument("--start", type=float, default=start, help="grid start")
    sub.add_argument("--stop", type=float, default=stop, help="grid stop")
    sub.add_argument("--points", type=int, default=points, help="grid points (>= 2)")
    sub.add_argument("--scale", choices=("linear", "log"), default=scale,
                     help="grid spacing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subharmonic",
        description="Photon statistics and quadrature squeezing of two-mode "
                    "cavity subharmonic light, with a brute-force verification suite.",
    )
    parser.add_argument("--config", default=None,
                        help="flat key=value file pre-setting any flag (flags win)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None,
                        help="flat key=value file pre-setting any flag (flags win)")
    subs = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return subs.add_parser(name, parents=[common], **kwargs)

    s = add_parser("moments", help="steady-state moments and photon statistics")
    _add_param_flags(s)
    _add_output_flags(s)
    s.set_defaults(func=_cmd_moments)

    s = add_parser("photon-dist", help="joint photon-number distribution P(m, n)")
    _add_param_flags(s)
    s.add_argument("--cutoff", type=int, default=None,
                   help="max photon number per mode (adaptive if omitted)")
    _add_output_flags(s)
    s.set_defaults(func=_cmd_photon_dist)

    s = add_parser("squeezing", help="quadrature variances and squeezing fractions")
    _add_param_flags(s)
    _add_output_flags(s)
    s.set_defaults(func=_cmd_squeezing)

    s = add_parser("spectrum", help="plus-quadrature fluctuation spectrum")
    _add_param_flags(s)
    s.add_argument("--offset", type=float, default=None,
                   help="single frequency offset omega - omega0")
    _add_grid_flags(s, start=-5.0, stop=5.0, points=201, scale="linear")
    _add_output_flags(s)
    s.set_defaults(func=_cmd_spectrum)

    s = add_parser("local-squeezing", help="squeezing in a frequency window")
    _add_param_flags(s)
    s.add_argument("--half-width", type=float, default=None,
                   help="window half-width (> 0)")
    _add_output_flags(s)
    s.set_defaults(func=_cmd_local_squeezing)

    s = add_parser("pump", help="mean photon number of the pump mode")
    _add_param_flags(s, pump_only=True)
    _add_output_flags(s)
    s.set_defaults(func=_cmd_pump)

    s = add_parser("verify", help="run every oracle-vs-closed-form check")
    s.add_argument("--kappa", type=float, default=1.0)
    s.add_argument("--ratios", default="0.1,0.2,0.3,0.4",
                   help="comma-separated epsilon/kappa ratios for the Fock oracle")
    s.add_argument("--seed", type=int, default=20260809,
                   help="seed for random parameter sets and Monte Carlo sampling")
    s.add_argument("--fock-rtol", type=float, default=1e-6,
                   help="relative tolerance for Fock-oracle comparisons")
    s.add_argument("--fock-abs", type=float, default=1e-8,
                   help="absolute tolerance for small probabilities")
    s.add_argument("--output", "-o", default=None)
    s.set_defaults(func=_cmd_verify, format="json")

    s = add_parser("sweep", help="evaluate a quantity over a grid")
    s.add_argument("quantity",
                   choices=("local-squeezing", "spectrum", "squeezing", "moments"),
                   help="what to sweep: local-squeezing over the window "
                        "half-width, spectrum over the frequency offset, "
                        "squeezing/moments over epsilon")
    _add_param_flags(s)
    _add_grid_flags(s, start=None, stop=None, points=None, scale=None)
    _add_output_flags(s, default_format="csv")
    s.set_defaults(func=_cmd_sweep)

    return parser


def _load_config(path: str) -> dict[str, str]:
    values = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"config line is not key=value: {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    if not args.config:
        return
    explicit = set()
    for token in argv:
        if token.startswith("--"):
            explicit.add(token.split("=", 1)[0][2:].replace("-", "_"))
    for key, raw in _load_config(args.config).items():
        if key in explicit or not hasattr(args, key):
            continue
        current = getattr(args, key)
        if isinstance(current, bool):
            value = raw.lower() in ("1", "true", "yes")
        elif isinstance(current, int) and not isinstance(current, bool):
            value = int(raw)
        elif isinstance(current, float):
            value = float(raw)
        else:
            try:
                value = float(raw)
            except ValueError:
                value = raw
        setattr(args, key, value)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return args.func(args)
    except ThresholdError as exc:
        print(f"error: {exc} [threshold margin: {exc.margin:.9g}]", file=sys.stderr)
        return 3
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
