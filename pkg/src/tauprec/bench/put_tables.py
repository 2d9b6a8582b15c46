"""Boundary, trace and simulation tables of the American put."""
from pathlib import Path
from typing import List

import numpy as np

from tauprec.amput.brennan_schwartz import brennan_schwartz
from tauprec.amput.model import PutGrid, PutParams, perpetual_put_boundary
from tauprec.amput.montecarlo import mc_simulate
from tauprec.amput.pia import PIAResult, convergence_slope, pia
from tauprec.bench.reference import (
    PUT_BOUNDARY_BS,
    PUT_BOUNDARY_PIA,
    PUT_TAUS,
    SIMULATION,
    SIMULATION_TAU,
)
from tauprec.config import RunConfig
from tauprec.constants import SLOPE_WINDOW_RATIO
from tauprec.logger import get_logger
from tauprec.report_writer import RunOutput, write_plot_script, write_report, write_table

logger = get_logger(__name__)

REFERENCE_PARAMS = PutParams(rate=0.1, volatility=0.3, strike=100.0, horizon=1.0)


def put_setup(config: RunConfig):
    params = PutParams(config.rate, config.volatility, config.strike, config.horizon)
    grid = PutGrid.build(params, config.dx, config.dt, config.x_max_factor)
    return params, grid


def _boundary_rows(config: RunConfig, params: PutParams, result: PIAResult, output: RunOutput) -> List[list]:
    taus = [t for t in PUT_TAUS if t <= params.horizon]
    reference = params == REFERENCE_PARAMS
    rows = [[t, float(result.boundary.at(t)), PUT_BOUNDARY_PIA[k] if reference else None] for k, t in enumerate(taus)]
    if config.adjusted:
        bs = brennan_schwartz(params, result.surface.grid)
        for k, t in enumerate(taus):
            rows[k] += [float(bs.adjusted.at(t)), float(bs.unadjusted.at(t)), PUT_BOUNDARY_BS[k] if reference else None]
        gap = np.max(np.abs(bs.adjusted.values[1:] - bs.unadjusted.values[1:]) / params.strike)
        output.metrics["bs_relative_gap"] = float(gap)
    return rows


def _simulation_rows(config: RunConfig, params: PutParams, result: PIAResult) -> List[list]:
    tau0 = min(SIMULATION_TAU, params.horizon)
    dt = config.mc_dt_ratio * result.surface.grid.dt
    reference = params == REFERENCE_PARAMS
    rows = []
    for price, (value, sim, sd) in SIMULATION.items():
        mc = mc_simulate(
            params, result.boundary, price, config.paths, dt,
            tau0=tau0, seed=config.seed, workers=config.workers,
        )
        pde = float(result.surface.value_at(price, tau0))
        rows.append([price, pde, mc.mean, mc.stderr] + ([value, sim, sd] if reference else [None] * 3))
    return rows


def run_put_pia(config: RunConfig, plot: bool = False) -> RunOutput:
    """Policy iteration plus the optional Brennan–Schwartz and Monte Carlo tables.

    Writes ``boundary.csv``, ``trace.csv``, ``report.txt`` and, with ``mc``,
    ``simulation.csv``.
    """
    params, grid = put_setup(config)
    result = pia(params, grid, config.b0_ratio * params.strike, config.pia_tol, config.max_iter)
    out = Path(config.out)
    output = RunOutput()

    header = ["tau", "pia", "reference_pia"]
    if config.adjusted:
        header += ["bs_adjusted", "bs_unadjusted", "reference_bs"]
    output.files.append(
        write_table(out / "boundary.csv", "put-boundary", header, _boundary_rows(config, params, result, output))
    )

    trace_rows = [
        [s.iteration, s.boundary_change, s.value_change, s.min_value_increase, s.pasting_residual]
        for s in result.trace.iterations
    ]
    output.files.append(
        write_table(
            out / "trace.csv",
            "pia-trace",
            ["iteration", "boundary_change", "value_change", "min_value_increase", "pasting_residual"],
            trace_rows,
        )
    )

    if config.mc:
        output.files.append(
            write_table(
                out / "simulation.csv",
                "put-simulation",
                ["price", "pde_value", "mc_mean", "mc_stderr", "reference_value", "reference_sim", "reference_sd"],
                _simulation_rows(config, params, result),
            )
        )

    last = result.trace.iterations[-1]
    output.metrics.update(
        {
            "iterations": len(result.trace),
            "pasting_residual": last.pasting_residual,
            "min_value_increase": min(s.min_value_increase for s in result.trace.iterations),
            "convergence_slope": convergence_slope(
                result.trace, lower=grid.dx, upper=SLOPE_WINDOW_RATIO * params.strike
            ),
            "boundary_at_horizon": float(result.boundary.at(params.horizon)),
            "perpetual_boundary": perpetual_put_boundary(params),
            "dx": grid.dx,
            "dt": grid.dt,
        }
    )
    output.files.append(write_report(out / "report.txt", output.metrics))
    if plot:
        columns = [2, 4] if config.adjusted else [2]
        output.files.append(
            write_plot_script(out / "boundary.gp", "boundary.csv", 1, columns, "exercise boundary",
                              labels=["PIA", "Brennan-Schwartz"][: len(columns)])
        )
    return output
