"""Command-line surface.

Subcommands: gamma, transform, compute, compare, strips, regions, curves,
semigroup.  Exit codes: 0 success, 2 input or domain error, 3 numerical
failure.  An optional key=value config file can override tolerances and
budgets; explicit flags always win.
"""

import argparse
import sys
import time

import numpy as np

from .engines import METHODS
from .errors import DomainError, NumericalError
from .gamma import gamma as gamma_fn
from .integrand import Integrand, power_integrand
from .operator import FractionalOperator, compose, power_oracle
from .output import format_number, join_blocks, json_text, svg_document, write_text
from .strips import build_strips, region_family
from .transforms import make_transform

DEFAULT_ALPHAS = "0,0.2,0.4,0.6,0.8,1"
DEFAULT_HORIZONS = "2,4,6,8,10"

DEFAULTS = {
    "abs_tol": 1e-10,
    "rel_tol": 1e-10,
    "budget": 10_000,
    "n": 100_000,
    "tolerance": 1e-3,
}
_CONFIG_CASTS = {
    "abs_tol": float,
    "rel_tol": float,
    "budget": int,
    "n": int,
    "tolerance": float,
}

_TINY = 1e-300


def parse_integrand(spec: str) -> Integrand:
    """Integrand grammar: pow:<coefficient>:<exponent>."""
    parts = spec.split(":")
    if len(parts) != 3 or parts[0] != "pow":
        raise DomainError(f"unsupported integrand spec {spec!r}; expected pow:<c>:<p>")
    try:
        coefficient, exponent = float(parts[1]), float(parts[2])
    except ValueError as exc:
        raise DomainError(f"bad integrand spec {spec!r}: {exc}") from None
    return power_integrand(coefficient, exponent)


def parse_float_list(text: str):
    try:
        values = [float(item) for item in text.split(",") if item.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"bad numeric list {text!r}: {exc}") from None
    if not values:
        raise DomainError(f"empty numeric list {text!r}")
    return values


def load_config(path: str) -> dict:
    config = {}
    try:
        with open(path) as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise DomainError(f"{path}:{lineno}: expected key=value, got {line!r}")
                config[key.strip()] = value.strip()
    except OSError as exc:
        raise DomainError(f"cannot read config {path!r}: {exc}") from None
    return config


def resolve_settings(args) -> dict:
    """Merge flag values, config-file values, and built-in defaults."""
    config = load_config(args.config) if getattr(args, "config", None) else {}
    settings = {}
    for key, cast in _CONFIG_CASTS.items():
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            settings[key] = flag_value
        elif key in config:
            try:
                settings[key] = cast(config[key])
            except ValueError as exc:
                raise DomainError(f"config key {key!r}: {exc}") from None
        else:
            settings[key] = DEFAULTS[key]
    return settings


def _operator(alpha: float, method: str, cfg: dict) -> FractionalOperator:
    return FractionalOperator(
        alpha,
        route=method,
        abs_tol=cfg["abs_tol"],
        rel_tol=cfg["rel_tol"],
        budget=cfg["budget"],
        n=cfg["n"],
    )


def _oracle_value(f: Integrand, alpha: float, t: float):
    if f.power is None:
        return None
    coefficient, exponent = f.power
    return power_oracle(exponent, alpha, t, coefficient)


def _rel_delta(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), _TINY)


def cmd_gamma(args) -> None:
    value = gamma_fn(args.x)
    write_text(args.out, f"{value:.15g}\n")


def cmd_transform(args) -> None:
    pair = make_transform(args.alpha, args.t)
    taus = np.linspace(0.0, pair.t, args.samples)
    xs = np.linspace(0.0, pair.width, args.samples)
    g_block = ["tau,g"] + [
        f"{format_number(tau)},{format_number(g)}"
        for tau, g in zip(taus, pair.forward(taus))
    ]
    h_block = ["x,h"] + [
        f"{format_number(x)},{format_number(h)}"
        for x, h in zip(xs, pair.inverse(xs))
    ]
    write_text(args.out, join_blocks(g_block, h_block))


def cmd_compute(args) -> None:
    cfg = resolve_settings(args)
    f = parse_integrand(args.f)
    rows = ["alpha,t,method,value,oracle,abs_err,rel_err,n_evals,seconds"]
    for alpha in parse_float_list(args.alpha):
        op = _operator(alpha, args.method, cfg)
        for t in parse_float_list(args.t):
            start = time.perf_counter()
            result = op.apply(f, t)
            seconds = time.perf_counter() - start
            oracle = _oracle_value(f, alpha, t)
            if oracle is None:
                oracle_cell = abs_cell = rel_cell = ""
            else:
                abs_err = abs(result.value - oracle)
                oracle_cell = format_number(oracle)
                abs_cell = format_number(abs_err)
                rel_cell = format_number(abs_err / max(abs(oracle), _TINY))
            rows.append(
                ",".join(
                    (
                        format_number(alpha),
                        format_number(t),
                        args.method,
                        format_number(result.value),
                        oracle_cell,
                        abs_cell,
                        rel_cell,
                        str(result.evaluations),
                        format_number(seconds),
                    )
                )
            )
    write_text(args.out, "\n".join(rows) + "\n")


def cmd_compare(args) -> None:
    cfg = resolve_settings(args)
    f = parse_integrand(args.f)
    routes = ("direct", "stieltjes", "cavalieri", "transformed")
    results = {}
    all_consistent = True
    for alpha in parse_float_list(args.alpha):
        for t in parse_float_list(args.t):
            values = {
                route: _operator(alpha, route, cfg).apply(f, t).value
                for route in routes
            }
            deltas = {}
            for i, r1 in enumerate(routes):
                for r2 in routes[i + 1:]:
                    deltas[f"{r1}|{r2}"] = _rel_delta(values[r1], values[r2])
            consistent = all(d <= cfg["tolerance"] for d in deltas.values())
            all_consistent = all_consistent and consistent
            entry = dict(values)
            entry["oracle"] = _oracle_value(f, alpha, t)
            entry["deltas"] = deltas
            entry["consistent"] = consistent
            results[f"alpha={alpha:g},t={t:g}"] = entry
    payload = {
        "integrand": f.label,
        "tolerance": cfg["tolerance"],
        "n": cfg["n"],
        "budget": cfg["budget"],
        "consistent": all_consistent,
        "results": results,
    }
    write_text(args.out, json_text(payload))


def _strips_csv(geometry) -> str:
    boundary_block = ["boundary_index,y,x"]
    for index, polyline in enumerate(geometry.boundaries):
        for x, y in polyline:
            boundary_block.append(f"{index},{format_number(y)},{format_number(x)}")
    area_block = ["strip_index,area"]
    for index, area in enumerate(geometry.strip_areas):
        area_block.append(f"{index},{format_number(area)}")
    return join_blocks(boundary_block, area_block)


def _strips_svg(geometry) -> str:
    curves = [{"points": geometry.region_outline, "dashed": False, "shade": 0.0}]
    count = max(len(geometry.boundaries) - 1, 1)
    for index, polyline in enumerate(geometry.boundaries):
        curves.append({"points": polyline, "dashed": True, "shade": index / count})
    return svg_document(curves)


def cmd_strips(args) -> None:
    cfg = resolve_settings(args)
    f = parse_integrand(args.f)
    pair = make_transform(args.alpha, args.t)
    geometry = build_strips(
        f, pair, args.n_strips, args.samples, cfg["budget"], cfg["abs_tol"], cfg["rel_tol"]
    )
    write_text(args.out, _strips_csv(geometry))
    if args.svg:
        write_text(args.svg, _strips_svg(geometry))


def cmd_regions(args) -> None:
    cfg = resolve_settings(args)
    f = parse_integrand(args.f)
    alphas = parse_float_list(args.alpha)
    horizons = parse_float_list(args.t)
    family = region_family(f, alphas, horizons, args.samples)

    outline_block = ["alpha,t,part,x,y"]
    area_block = ["alpha,t,area"]
    for geometry in family:
        prefix = f"{format_number(geometry.alpha)},{format_number(geometry.t)}"
        curve = geometry.region_outline[: geometry.samples_per_curve]
        for x, y in curve:
            outline_block.append(f"{prefix},f,{format_number(x)},{format_number(y)}")
        for x, y in geometry.boundaries[-1]:
            outline_block.append(f"{prefix},edge,{format_number(x)},{format_number(y)}")
        area_block.append(f"{prefix},{format_number(geometry.total_area)}")
    write_text(args.out, join_blocks(outline_block, area_block))

    if args.svg:
        t_values = sorted({g.t for g in family})
        curves = []
        for geometry in family:
            shade = (
                t_values.index(geometry.t) / max(len(t_values) - 1, 1)
            )
            curve = geometry.region_outline[: geometry.samples_per_curve]
            curves.append({"points": curve, "dashed": False, "shade": 0.0})
            curves.append({"points": geometry.boundaries[-1], "dashed": False, "shade": shade})
        write_text(args.svg, svg_document(curves))


def _curve_value(op: FractionalOperator, f: Integrand, t: float) -> float:
    if t < 0:
        raise DomainError(f"curve horizon must be >= 0, got {t:g}")
    if t == 0.0:
        return float(f(0.0)) if op.alpha == 0.0 else 0.0
    return op.apply(f, t).value


def cmd_curves(args) -> None:
    cfg = resolve_settings(args)
    f = parse_integrand(args.f)
    alphas = parse_float_list(args.alpha)
    if args.t_step <= 0 or args.t_stop < args.t_start:
        raise DomainError("need t-step > 0 and t-stop >= t-start")
    count = int(np.floor((args.t_stop - args.t_start) / args.t_step + 1e-9)) + 1
    horizons = [args.t_start + k * args.t_step for k in range(count)]

    curve_block = ["alpha,t,value"]
    for alpha in alphas:
        op = _operator(alpha, args.method, cfg)
        for t in horizons:
            value = _curve_value(op, f, t)
            curve_block.append(
                f"{format_number(alpha)},{format_number(t)},{format_number(value)}"
            )

    marker_block = ["alpha,t,area_marker"]
    marker_ts = parse_float_list(args.marker_t)
    family = region_family(f, alphas, marker_ts, samples=2)
    for geometry in family:
        marker_block.append(
            f"{format_number(geometry.alpha)},{format_number(geometry.t)},"
            f"{format_number(geometry.total_area)}"
        )
    write_text(args.out, join_blocks(curve_block, marker_block))


def cmd_semigroup(args) -> None:
    cfg = resolve_settings(args)
    f = parse_integrand(args.f)
    total = args.alpha + args.beta
    if total > 1.0 + 1e-12:
        raise DomainError(f"alpha + beta = {total:g} exceeds the supported domain (0, 1]")
    outer = _operator(args.alpha, args.method, cfg)
    inner = _operator(args.beta, args.method, cfg)
    composed = compose(outer, inner, f, args.t, args.grid)
    direct = _operator(min(total, 1.0), args.method, cfg).apply(f, args.t).value
    gap = _rel_delta(composed, direct)
    write_text(
        args.out,
        f"composed={format_number(composed)}\n"
        f"direct={format_number(direct)}\n"
        f"rel_gap={format_number(gap)}\n",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracint",
        description="Order-alpha integrals by four mutually verifying routes, "
        "with strip-geometry and table/figure data emitters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tolerances=True):
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--config", default=None, help="key=value file overriding tolerances/budgets")
        if tolerances:
            p.add_argument("--abs-tol", dest="abs_tol", type=float, default=None)
            p.add_argument("--rel-tol", dest="rel_tol", type=float, default=None)
            p.add_argument("--budget", type=int, default=None, help="adaptive evaluation budget")
            p.add_argument("--n", type=int, default=None, help="partition size for the sum routes")

    p = sub.add_parser("gamma", help="evaluate the gamma function")
    p.add_argument("--x", type=float, required=True)
    common(p, tolerances=False)
    p.set_defaults(handler=cmd_gamma)

    p = sub.add_parser("transform", help="sample the forward/inverse transform pair as CSV")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--samples", type=int, default=200)
    common(p, tolerances=False)
    p.set_defaults(handler=cmd_transform)

    p = sub.add_parser("compute", help="stream value/oracle rows as CSV")
    p.add_argument("--f", default="pow:1:1", help="integrand spec pow:<c>:<p>")
    p.add_argument("--alpha", default=DEFAULT_ALPHAS)
    p.add_argument("--t", default=DEFAULT_HORIZONS)
    p.add_argument("--method", choices=METHODS, default="transformed")
    common(p)
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("compare", help="run all four routes and report agreement as JSON")
    p.add_argument("--f", default="pow:1:1")
    p.add_argument("--alpha", default=DEFAULT_ALPHAS)
    p.add_argument("--t", default=DEFAULT_HORIZONS)
    p.add_argument("--tolerance", type=float, default=None, help="pairwise consistency tolerance")
    common(p)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("strips", help="emit strip boundary polylines and areas")
    p.add_argument("--f", default="pow:1:1")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--n-strips", dest="n_strips", type=int, default=5)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--svg", default=None, help="also render an SVG to this path")
    common(p)
    p.set_defaults(handler=cmd_strips)

    p = sub.add_parser("regions", help="emit region outlines and areas for an (alpha, t) family")
    p.add_argument("--f", default="pow:1:1")
    p.add_argument("--alpha", default=DEFAULT_ALPHAS)
    p.add_argument("--t", default=DEFAULT_HORIZONS)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--svg", default=None)
    common(p)
    p.set_defaults(handler=cmd_regions)

    p = sub.add_parser("curves", help="emit value curves over t plus region-area markers")
    p.add_argument("--f", default="pow:1:1")
    p.add_argument("--alpha", default=DEFAULT_ALPHAS)
    p.add_argument("--t-start", dest="t_start", type=float, default=0.0)
    p.add_argument("--t-stop", dest="t_stop", type=float, default=10.0)
    p.add_argument("--t-step", dest="t_step", type=float, default=0.1)
    p.add_argument("--marker-t", dest="marker_t", default=DEFAULT_HORIZONS)
    p.add_argument("--method", choices=METHODS, default="oracle")
    common(p)
    p.set_defaults(handler=cmd_curves)

    p = sub.add_parser("semigroup", help="check composed orders against the single operator")
    p.add_argument("--f", default="pow:1:1")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--method", choices=METHODS, default="transformed")
    common(p)
    p.set_defaults(handler=cmd_semigroup)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.handler(args)
    except DomainError as exc:
        print(f"fracint: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"fracint: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
