# -*- coding: utf-8 -*-
# Copyright 2023-2026 the sepspec developers
#
# This file is part of sepspec.
#
# sepspec is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# sepspec is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with sepspec.  If not, see <http://www.gnu.org/licenses/>.

"""Command line interface ``sepspec test|lsd|clt-params|simulate``.

Exit codes are 0 on success (and when the white noise null is not
rejected), 3 when it is rejected, 1 on usage, configuration and file
errors and 2 on invalid data files. Results go to stdout, log messages
to stderr.
"""

from __future__ import annotations

import argparse
from dataclasses import replace
import hashlib
import logging
import os
import sys
from typing import List, Optional

import numpy as np

from sepspec import __version__
from sepspec.base import ConfigurationError, DataError
from sepspec.clt import Contour, clt_moments
from sepspec.io import ModelConfig, RunManifest, load, save
from sepspec.io.plugins import csv_table, json_report
from sepspec.lsd import lsd_density, support_from_measures
from sepspec.montecarlo import TABLE1_SIZE, TABLE2_POWER, SimulationPlan, run_plan
from sepspec.whitenoise import CENTERINGS, PLUG_IN, KnownMoments, TestConfig, run_test

__all__ = ["build_parser", "main"]

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_REJECT = 3


class _ArgumentParser(argparse.ArgumentParser):
    """Parser exiting with :data:`EXIT_USAGE` on invalid arguments."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_arguments(parser: argparse.ArgumentParser, default):
    parser.add_argument(
        "--seed", type=int, default=default(None), help="Base seed of the run."
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=default(None),
        help="Worker threads. Falls back to the SEPSPEC_THREADS variable.",
    )
    parser.add_argument(
        "--level", type=float, default=default(None), help="Significance level."
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=default(0),
        help="Log progress to stderr, -vv for debug messages.",
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the ``sepspec`` command."""
    parser = _ArgumentParser(
        prog="sepspec",
        description="Separable sample covariance spectra and white noise tests.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    _global_arguments(parser, lambda value: value)

    # Global flags are also accepted after the subcommand
    common = _ArgumentParser(add_help=False)
    _global_arguments(common, lambda value: argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    sub.required = True

    p = sub.add_parser(
        "test", parents=[common], help="Test a data file for white noise."
    )
    p.add_argument("input", help="CSV file with p rows and n columns.")
    p.add_argument("--header", action="store_true", help="Skip the first line.")
    p.add_argument(
        "--transpose", action="store_true", help="The file has one observation per row."
    )
    p.add_argument("--delimiter", default=",", help="Field separator.")
    p.add_argument("-q", "--lags", type=int, default=1, help="Largest lag q.")
    p.add_argument("--moments", choices=["plug_in", "known"], default=PLUG_IN)
    p.add_argument("--m1", type=float, help="Known first spectral moment.")
    p.add_argument("--m2", type=float, help="Known second spectral moment.")
    p.add_argument("--centering", choices=CENTERINGS, default="finite_n")
    p.add_argument("--alpha-x", type=float, default=1.0)
    p.add_argument("--kappa-x", type=float, default=0.0)
    p.add_argument("--out", help="Also write the report to this JSON file.")
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser(
        "lsd", parents=[common], help="Compute the limiting spectral density."
    )
    p.add_argument("config", help="Model configuration file.")
    p.add_argument("--grid", help="Grid as LO:HI:NUM. Default is the support.")
    p.add_argument(
        "--points", type=int, default=200, help="Points of the default grid."
    )
    p.add_argument("--vmin", type=float, default=1e-5, help="Imaginary part of z.")
    p.add_argument("--out", help="Write the CSV to this file instead of stdout.")
    p.set_defaults(func=_cmd_lsd)

    p = sub.add_parser(
        "clt-params",
        parents=[common],
        help="Compute the CLT mean and variance of linear spectral statistics.",
    )
    p.add_argument("config", help="Model configuration file.")
    p.add_argument(
        "--f",
        action="append",
        dest="functions",
        help='Polynomial test function like "x^2". Can be repeated.',
    )
    p.add_argument(
        "--method",
        choices=["finite_difference", "analytic"],
        default="finite_difference",
    )
    p.add_argument("--nodes", type=int, default=512, help="Contour nodes per side.")
    p.add_argument("--out", help="Also write the result to this JSON file.")
    p.set_defaults(func=_cmd_clt_params)

    p = sub.add_parser(
        "simulate", parents=[common], help="Run a Monte Carlo simulation plan."
    )
    p.add_argument("plan", help="Simulation plan file.")
    p.add_argument("--out", help="Write the table to this CSV or JSON file.")
    p.add_argument("--replications", type=int, help="Override the replications.")
    p.add_argument("--batch-size", type=int, default=50)
    p.add_argument(
        "--compare",
        action="store_true",
        help="Log cells whose reference rate is outside the Wilson interval.",
    )
    p.set_defaults(func=_cmd_simulate)

    return parser


def _file_digest(filename: str) -> str:
    with open(filename, "rb") as f:
        return hashlib.sha256(f.read()).hexdigest()


def _manifest(args: argparse.Namespace, filename: str) -> RunManifest:
    skip = ["func", "verbose", "out"]
    config = {k: v for k, v in vars(args).items() if k not in skip}
    config["input_sha256"] = _file_digest(filename)
    return RunManifest.create(args.command, config, args.seed)


def _emit_json(obj, manifest: RunManifest, out: Optional[str]):
    sys.stdout.write(json_report.dumps(obj, manifest) + "\n")
    if out is not None:
        save(out, obj, overwrite=True, manifest=manifest)


def _emit_table(obj, manifest: RunManifest, out: Optional[str]):
    if out is None:
        csv_table.write_table(sys.stdout, obj, manifest)
    else:
        save(out, obj, overwrite=True, manifest=manifest)
        _logger.info("Wrote %s", out)


def _check_file(filename: str):
    if not os.path.isfile(filename):
        raise FileNotFoundError(f"No filename matches '{filename}'.")


def _cmd_test(args: argparse.Namespace) -> int:
    _check_file(args.input)
    data = load(
        args.input,
        format_name="csv_matrix",
        header=args.header,
        transpose=args.transpose,
        delimiter=args.delimiter,
    )
    _logger.info("Read data with p=%d, n=%d", *data.shape)
    if args.moments == "known":
        if args.m1 is None or args.m2 is None:
            raise ConfigurationError("Known moments need both --m1 and --m2.")
        moments = KnownMoments(args.m1, args.m2)
    else:
        moments = PLUG_IN
    level = 0.05 if args.level is None else args.level
    cfg = TestConfig(
        args.lags, level, moments, args.centering, args.alpha_x, args.kappa_x
    )
    report = run_test(data, cfg)
    _emit_json(report, _manifest(args, args.input), args.out)
    return EXIT_REJECT if report.decision else EXIT_OK


def _read_model(filename: str) -> ModelConfig:
    _check_file(filename)
    config = load(filename, format_name="model_config")
    if not isinstance(config, ModelConfig):
        raise ConfigurationError(f"'{filename}' is a simulation plan, not a model.")
    return config


def _parse_grid(text: str) -> np.ndarray:
    try:
        lo, hi, num = text.split(":")
        return np.linspace(float(lo), float(hi), int(num))
    except ValueError as e:
        raise ConfigurationError(f"Grid {text!r} is not of the form LO:HI:NUM.") from e


def _cmd_lsd(args: argparse.Namespace) -> int:
    config = _read_model(args.config)
    h1, h2, c = config.measures()
    if args.grid is not None:
        grid = _parse_grid(args.grid)
    else:
        support = support_from_measures(h1, h2, c)
        grid = np.linspace(support.x_l, support.x_r, args.points)
    density = lsd_density(h1, h2, c, grid, v_min=args.vmin)
    _emit_table(density, _manifest(args, args.config), args.out)
    return EXIT_OK


def _cmd_clt_params(args: argparse.Namespace) -> int:
    config = _read_model(args.config)
    h1, h2, c = config.measures()
    law = config.model.law
    functions = args.functions if args.functions else ["x^2"]
    contour = Contour.enclosing(
        support_from_measures(h1, h2, c), nodes_per_side=args.nodes
    )
    moments = clt_moments(
        functions,
        h1,
        h2,
        c,
        law.alpha_x,
        law.kappa_x,
        contour=contour,
        method=args.method,
        progressbar=args.verbose > 0,
        threads=args.threads,
    )
    _emit_json(moments, _manifest(args, args.config), args.out)
    return EXIT_OK


def _compare(table, model: str):
    reference = TABLE1_SIZE if model == "model1" else TABLE2_POWER
    for row in table.rows:
        expected = reference.get(row.cell)
        if expected is None or row.error is not None:
            continue
        if not row.ci_low <= expected <= row.ci_high:
            _logger.warning(
                "Cell (p=%d, n=%d, q=%d): reference rate %.3f outside [%.3f, %.3f]",
                row.p,
                row.n,
                row.q,
                expected,
                row.ci_low,
                row.ci_high,
            )


def _cmd_simulate(args: argparse.Namespace) -> int:
    _check_file(args.plan)
    plan = load(args.plan, format_name="model_config")
    if not isinstance(plan, SimulationPlan):
        raise ConfigurationError(f"'{args.plan}' has no [plan] section.")
    changes = {}
    if args.seed is not None:
        changes["base_seed"] = args.seed
    if args.level is not None:
        changes["level"] = args.level
    if args.replications is not None:
        changes["replications"] = args.replications
    plan = replace(plan, **changes)
    table = run_plan(
        plan, batch_size=args.batch_size, threads=args.threads, verbose=args.verbose > 0
    )
    if args.compare and isinstance(plan.model, str):
        _compare(table, plan.model)
    args.seed = plan.base_seed
    manifest = _manifest(args, args.plan)
    if args.out is not None and args.out.lower().endswith(".json"):
        save(args.out, table, overwrite=True, manifest=manifest)
    else:
        _emit_table(table, manifest, args.out)
    return EXIT_OK


def _configure_logging(verbose: int):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.captureWarnings(True)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the ``sepspec`` command and return its exit code.

    Parameters
    ----------
    argv
        Arguments without the program name. Default is
        :data:`sys.argv`.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code is None else int(e.code)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except DataError as e:
        _logger.error("%s", e)
        return EXIT_DATA
    except (ValueError, OSError) as e:
        _logger.error("%s", e)
        return EXIT_USAGE
