"""Command-line front end: CSV tabulations of the critical-line phase.

Exit codes: 0 success, 2 usage or invalid range, 3 evaluation or
convergence failure, 4 identity check failed, 5 point too close to a zero.
All CSV is computed in full before anything is written, so a failing run
never emits partial rows.
"""

from __future__ import annotations

import csv
import functools
import math
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor

import click

from .config import SeriesConfig
from .core_math import HALF_PI, circle_distance, unwrap_phase
from .errors import AccuracyError, ConvergenceError, NearZeroError
from .phase import (
    offline_deviation_scan,
    phase_from_chi,
    phase_series,
    ratio_argument,
    identity_residual,
)
from .zeta import find_zeros, nearest_zero

EXIT_USAGE = 2
EXIT_EVAL = 3
EXIT_IDENTITY = 4
EXIT_NEAR_ZERO = 5

MAX_GRID_POINTS = 10_000_000
T_LIMIT = 120.0
FIGURE_T_MAX = 60.0
FIGURE_STEP = 0.05
# ratio requests with |t - t0| below this are refused
REFUSAL_RADIUS = 1e-3
IDENTITY_FACTOR = 50.0


class Failure(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def fmt_t(t: float) -> str:
    return repr(float(t))


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _pool_map(fn, items, threads: int):
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _grid(t_min: float, t_max: float, step: float) -> list[float]:
    if not step > 0:
        raise Failure(f"step must be positive, got {step}", EXIT_USAGE)
    if t_min > t_max:
        raise Failure(f"empty range: t_min={t_min} > t_max={t_max}", EXIT_USAGE)
    if max(abs(t_min), abs(t_max)) > T_LIMIT:
        raise Failure(f"|t| must not exceed {T_LIMIT:g}", EXIT_USAGE)
    n = math.floor((t_max - t_min) / step + 1e-9)
    if n + 1 > MAX_GRID_POINTS:
        raise Failure(f"grid of {n + 1} points exceeds {MAX_GRID_POINTS}", EXIT_USAGE)
    return [round(t_min + i * step, 12) for i in range(n + 1)]


def _series_at(t: float, config: SeriesConfig):
    try:
        return phase_series(t, config)
    except (ConvergenceError, AccuracyError) as exc:
        raise Failure(f"t={fmt_t(t)}: {exc}", EXIT_EVAL) from exc


def _emit(ctx_obj, header: list[str], rows: list[list[str]]) -> None:
    path = ctx_obj["out"]
    if path is None or path == "-":
        stream = click.get_text_stream("stdout")
        _write_csv(stream, header, rows)
    else:
        with open(path, "w", newline="") as fh:
            _write_csv(fh, header, rows)


def _write_csv(stream, header, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def run_options(fn):
    """Options shared by every subcommand."""

    @click.option("--eps", type=click.FloatRange(1e-14, 1e-6), default=1e-11, show_default=True,
                  help="Target absolute tolerance for every series.")
    @click.option("--kmax", type=click.IntRange(min=16), default=2_000_000, show_default=True,
                  help="Hard cap on series terms.")
    @click.option("--threads", type=click.IntRange(min=1), default=None,
                  help="Worker threads for grid evaluation [default: CPU count].")
    @click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
                  help="Write CSV here instead of standard output.")
    @functools.wraps(fn)
    def wrapper(eps, kmax, threads, out, **kwargs):
        cfg = {
            "config": SeriesConfig(eps=eps, k_max=kmax),
            "threads": threads or os.cpu_count() or 1,
            "out": out,
        }
        try:
            fn(cfg, **kwargs)
        except Failure as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(exc.code)

    return wrapper


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Phase of zeta along the critical line, as CSV."""


@main.command("phase", context_settings={"ignore_unknown_options": True})
@click.argument("t_min", type=float)
@click.argument("t_max", type=float)
@click.argument("step", type=float)
@run_options
def cmd_phase(cfg, t_min, t_max, step):
    """Tabulate the phase on a t grid, with the closed-form cross-check."""
    grid = _grid(t_min, t_max, step)
    config = cfg["config"]

    def row(t):
        ps = _series_at(t, config)
        pc = phase_from_chi(t)
        gap = circle_distance(ps.phi_mod, pc.phi_mod, HALF_PI)
        return [fmt_t(t), fmt(math.degrees(ps.phi)), fmt(math.degrees(ps.phi_mod)), fmt(math.degrees(gap))]

    rows = _pool_map(row, grid, cfg["threads"])
    _emit(cfg, ["t", "phi_deg", "phi_mod90_deg", "method_disagreement"], rows)


@main.command("figure")
@click.argument("which", type=click.Choice(["1", "2"]))
@click.option("--signed", is_flag=True,
              help="Emit the signed phase over [-60, 60] instead (odd in t).")
@run_options
def cmd_figure(cfg, which, signed):
    """Plot-ready data: 1 = unwrapped phase, 2 = phase mod 90 degrees."""
    config = cfg["config"]
    t_lo = -FIGURE_T_MAX if signed else 0.0
    grid = _grid(t_lo, FIGURE_T_MAX, FIGURE_STEP)
    results = _pool_map(lambda t: _series_at(t, config), grid, cfg["threads"])
    if signed:
        rows = [[fmt_t(t), fmt(math.degrees(r.phi))] for t, r in zip(grid, results)]
        _emit(cfg, ["t", "phi_deg"], rows)
        return
    if which == "1":
        # phi is only defined mod pi: unwrap 2*phi at period 2*pi and halve
        doubled = unwrap_phase([2.0 * r.phi for r in results])
        rows = [[fmt_t(t), fmt(math.degrees(0.5 * a))] for t, a in zip(grid, doubled)]
        _emit(cfg, ["t", "phi_deg_unwrapped"], rows)
    else:
        rows = [[fmt_t(t), fmt(math.degrees(r.phi_mod))] for t, r in zip(grid, results)]
        _emit(cfg, ["t", "phi_mod90_deg"], rows)


@main.command("identity", context_settings={"ignore_unknown_options": True})
@click.argument("t_list", type=float, nargs=-1)
@run_options
def cmd_identity(cfg, t_list):
    """Evaluate the real-part identity residual at each t; exit 4 if any fails."""
    if not t_list:
        raise Failure("at least one t is required", EXIT_USAGE)
    config = cfg["config"]
    for t in t_list:
        if abs(t) > T_LIMIT:
            raise Failure(f"|t| must not exceed {T_LIMIT:g}, got {t}", EXIT_USAGE)

    def residual(t):
        try:
            return identity_residual(t, config)
        except (ConvergenceError, AccuracyError) as exc:
            raise Failure(f"t={fmt_t(t)}: {exc}", EXIT_EVAL) from exc

    values = _pool_map(residual, list(t_list), cfg["threads"])
    _emit(cfg, ["t", "residual"], [[fmt_t(t), fmt(r)] for t, r in zip(t_list, values)])
    threshold = IDENTITY_FACTOR * config.eps
    bad = [t for t, r in zip(t_list, values) if not abs(r) <= threshold]
    if bad:
        raise Failure(
            f"identity residual above {threshold:g} at t = {', '.join(fmt_t(t) for t in bad)}",
            EXIT_IDENTITY,
        )


@main.command("ratio", context_settings={"ignore_unknown_options": True})
@click.argument("t", type=float)
@click.argument("sigma_list", type=float, nargs=-1, required=True)
@run_options
def cmd_ratio(cfg, t, sigma_list):
    """Modulus deviation and argument of zeta(s)/zeta(1-s) at sigma + it."""
    config = cfg["config"]
    if not 2.0 <= t <= T_LIMIT:
        raise Failure(f"t must lie in [2, {T_LIMIT:g}], got {t}", EXIT_USAGE)
    for x in sigma_list:
        if not 0.0 < x < 1.0:
            raise Failure(f"sigma must lie in (0, 1), got {x}", EXIT_USAGE)
    z = nearest_zero(t, radius=0.1, config=config)
    if z is not None and abs(z.t - t) < REFUSAL_RADIUS:
        raise Failure(
            f"t = {fmt_t(t)} is within {REFUSAL_RADIUS:g} of the zero at t0 = {z.t:.9f}; "
            "the ratio there is a 0/0 limit (use `zeros` for its phase)",
            EXIT_NEAR_ZERO,
        )
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            samples = offline_deviation_scan(t, sigma_list, config)
    except NearZeroError as exc:
        raise Failure(str(exc), EXIT_NEAR_ZERO) from exc
    except (ConvergenceError, AccuracyError) as exc:
        raise Failure(str(exc), EXIT_EVAL) from exc
    rows = [
        [fmt_t(x), fmt(smp.modulus_deviation), fmt(math.degrees(ratio_argument(smp)))]
        for x, smp in zip(sigma_list, samples)
    ]
    _emit(cfg, ["sigma", "modulus_deviation", "arg_deg"], rows)


@main.command("zeros")
@click.argument("t_max", type=float)
@run_options
def cmd_zeros(cfg, t_max):
    """List zeros on the critical line up to t_max with the phase at each."""
    if not 2.0 < t_max <= T_LIMIT:
        raise Failure(f"t_max must lie in (2, {T_LIMIT:g}], got {t_max}", EXIT_USAGE)
    try:
        zeros = find_zeros(2.0, t_max, cfg["config"], workers=cfg["threads"])
    except (ConvergenceError, AccuracyError) as exc:
        raise Failure(str(exc), EXIT_EVAL) from exc
    rows = [
        [str(i), fmt_t(z.t), fmt(math.degrees(phase_from_chi(z.t).phi_mod))]
        for i, z in enumerate(zeros, start=1)
    ]
    _emit(cfg, ["index", "t", "phi_mod90_deg"], rows)


if __name__ == "__main__":
    main()
