#               This file is part of the painleve package.
#
#
#                 Copyright (c) 2026 The painleve developers.
#
#
# SPDX-License-Identifier: AGPL-3.0
#
#  This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.
#

"""
Command-line front end.

    painleve <command> --config FILE [--out DIR] [--emit-plot-data]
             [--order N] [--seed S] [--dump-config] [-v]

Commands: solve, limit, fiber, check-line, monodromy, bounds. Results go to
files in the output directory (trace.csv, summary.json, ...) and the
summary is echoed on stdout; log messages go to stderr.

Exit status: 0 success (an undetermined verdict is a result), 1 hypothesis
violation, 2 configuration or expression error, 3 numerical failure.
"""

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path

from painleve.config import dump_config, load_config
from painleve.continuation import (
    Arc,
    EventKind,
    TraceStatus,
    check_hypotheses,
    continue_along,
    endpoint_limit,
    monodromy_loop,
    sweep_limits,
)
from painleve.exceptions import (
    ConfigError,
    HypothesisError,
    LineContainedError,
    PainleveError,
    SampleEvaluationError,
)
from painleve.expression import parse_polynomial, singular_set
from painleve.local_solver import estimate_bounds, guaranteed_radius, sigma_radius
from painleve.misc import format_complex
from painleve.polynomials import fiber_loci, fiber_roots, line_contained, proximity_estimate
from painleve.symbolic import substitution_check

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

TRACE_HEADER = ["t", "re_z", "im_z", "re_w", "im_w", "radius", "event"]

# Stops of `solve` that are numerical failures rather than findings.
_FAILURE_EVENTS = {EventKind.STEP_UNDERFLOW, EventKind.RESIDUAL_FAILURE, EventKind.STEP_BUDGET}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="painleve",
        description="Analytic continuation of w' = F(w, z) with radical right-hand sides.",
    )
    parser.add_argument(
        "command",
        choices=["solve", "limit", "fiber", "check-line", "monodromy", "bounds"],
    )
    parser.add_argument("--config", required=True, help="problem file (JSON)")
    parser.add_argument("--out", default=".", help="output directory (default: current)")
    parser.add_argument(
        "--emit-plot-data",
        action="store_true",
        help="also write the fibers of the singular components along the arc",
    )
    parser.add_argument("--order", type=int, help="Taylor order of the local solutions")
    parser.add_argument("--seed", type=int, help="seed of the root finder")
    parser.add_argument(
        "--dump-config",
        action="store_true",
        help="write the normalized problem file to OUT/config.json",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


# Output #########################################################################


def _number(x):
    return None if x != x else float(x)


def _point(t, z, w):
    return {"t": float(t), "z": format_complex(z), "w": format_complex(w)}


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    logger.info("wrote %s", path)


def _write_trace(path, trace):
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TRACE_HEADER)
        for step in trace.steps:
            writer.writerow(
                [repr(step.t), repr(step.z.real), repr(step.z.imag),
                 repr(step.w.real), repr(step.w.imag), repr(step.radius), ""]
            )
        f_ = trace.frontier
        event = trace.stop_event.kind.value if trace.stop_event else TraceStatus.COMPLETED.value
        writer.writerow(
            [repr(f_.t), repr(f_.z.real), repr(f_.z.imag),
             repr(f_.w.real), repr(f_.w.imag), "", event]
        )
    logger.info("wrote %s", path)


def _write_fiber_loci(path, ast, trace, seed):
    components = singular_set(ast)
    zs = [z for _, z, _ in trace.points()]
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["re_z", "im_z", "component", "re_u", "im_u"])
        for z, index, roots in fiber_loci(components, zs, seed=seed):
            for root in roots:
                writer.writerow([repr(z.real), repr(z.imag), index, repr(root.real), repr(root.imag)])
    logger.info("wrote %s", path)


def _trace_summary(trace):
    event = trace.stop_event
    return {
        "status": trace.status.value,
        "event": None if event is None else event.kind.value,
        "message": "" if event is None else event.message,
        "steps": len(trace.steps),
        "final": _point(trace.frontier.t, trace.frontier.z, trace.frontier.w),
    }


def _verdict_summary(verdict):
    return {
        "kind": verdict.kind.value,
        "value": None if verdict.value is None else format_complex(verdict.value),
        "tail_diameter": float(verdict.tail_diameter),
        "samples_used": verdict.samples_used,
        "diagnostics": verdict.diagnostics,
    }


def _single_arc(config):
    arcs = config.arc_objects()
    if not arcs:
        raise ConfigError("missing required key", "arc")
    return arcs[0]


def _add_symbolic(summary, config, ast):
    if config.solution is not None:
        summary["substitution_check"] = substitution_check(ast, config.solution).as_dict()


# Commands #######################################################################


def _solve(config, out, args):
    ast = config.expression()
    state = config.initial_state(ast)
    trace = continue_along(ast, config.w0, config.z0, _single_arc(config), config.options, state)

    _write_trace(out / "trace.csv", trace)
    if args.emit_plot_data:
        _write_fiber_loci(out / "fibers.csv", ast, trace, config.options.seed)

    summary = {"command": "solve", "rhs": config.rhs, "trace": _trace_summary(trace)}
    _add_symbolic(summary, config, ast)
    _write_json(out / "summary.json", summary)

    event = trace.stop_event
    code = EXIT_NUMERICAL if event is not None and event.kind in _FAILURE_EVENTS else EXIT_OK
    return summary, code


def _limit(config, out, args):
    ast = config.expression()
    state = config.initial_state(ast)
    arcs = config.arc_objects()
    if not arcs:
        raise ConfigError("missing required key", "arc")

    if len(arcs) == 1:
        trace = continue_along(ast, config.w0, config.z0, arcs[0], config.options, state)
        results = [(trace, endpoint_limit(trace))]
        names = ["trace.csv"]
    else:
        results = sweep_limits(ast, config.w0, config.z0, arcs, config.options, state)
        names = [f"trace_{i}.csv" for i in range(len(arcs))]

    entries = []
    for name, (trace, verdict) in zip(names, results):
        _write_trace(out / name, trace)
        entries.append(
            {"trace_file": name, "trace": _trace_summary(trace), "verdict": _verdict_summary(verdict)}
        )
    if args.emit_plot_data:
        _write_fiber_loci(out / "fibers.csv", ast, results[0][0], config.options.seed)

    summary = {"command": "limit", "rhs": config.rhs}
    if len(entries) == 1:
        summary.update(entries[0])
    else:
        summary["arcs"] = entries
    _add_symbolic(summary, config, ast)
    _write_json(out / "summary.json", summary)
    return summary, EXIT_OK


def _polynomials(config):
    if config.polynomial is not None:
        return [(config.polynomial, parse_polynomial(config.polynomial))]
    return [(repr(P), P) for P in singular_set(config.expression())]


def _fiber(config, out, args):
    if not config.nu:
        raise ConfigError("missing required key", "nu")

    fibers = []
    for text, P in _polynomials(config):
        for nu in config.nu:
            entry = {"polynomial": text, "nu": format_complex(nu)}
            try:
                fiber = fiber_roots(P, nu, seed=config.options.seed)
            except LineContainedError:
                entry.update(contained=True, roots=[], degree_drop=None)
            else:
                entry.update(
                    contained=False,
                    roots=[format_complex(r) for r in fiber.roots],
                    degree_drop=fiber.degree_drop,
                )
            fibers.append(entry)

    summary = {"command": "fiber", "fibers": fibers}
    _write_json(out / "fiber.json", summary)
    return summary, EXIT_OK


def _check_line(config, out, args):
    checks = []
    if config.nu:
        for text, P in _polynomials(config):
            for nu in config.nu:
                checks.append(
                    {"polynomial": text, "nu": format_complex(nu), "contained": line_contained(P, nu)}
                )
    for arc in config.arc_objects():
        report = check_hypotheses(config.expression(), arc)
        for v in report.violations:
            checks.append({"polynomial": repr(v.component), "nu": format_complex(v.nu), "contained": True})
    if not checks:
        raise ConfigError("missing required key", "nu")

    violated = any(c["contained"] for c in checks)
    summary = {"command": "check-line", "checks": checks, "passed": not violated}
    _write_json(out / "check_line.json", summary)
    return summary, EXIT_HYPOTHESIS if violated else EXIT_OK


def _monodromy(config, out, args):
    if config.loop is None:
        raise ConfigError("missing required key", "loop")

    ast = config.expression()
    report = monodromy_loop(ast, config.w0, config.z0, Arc(config.loop), config.initial_state(ast))
    summary = {
        "command": "monodromy",
        "w0": format_complex(report.w0),
        "z0": format_complex(report.z0),
        "radicals": [
            {
                "index": e.index,
                "k": e.k,
                "multiplier": format_complex(e.multiplier),
                "root_of_unity": e.is_root_of_unity,
                "order": e.order,
            }
            for e in report.entries
        ],
    }
    _write_json(out / "monodromy.json", summary)
    return summary, EXIT_OK


def _bounds(config, out, args):
    ast = config.expression()
    state = config.initial_state(ast)
    options = config.options
    w0, z0 = config.w0, config.z0

    ceiling = options.proximity_ceiling * max(1.0, abs(w0))
    proximity = proximity_estimate(singular_set(ast), w0, z0, ceiling=ceiling, seed=options.seed)

    scales = []
    for scale in options.bidisc_scales:
        entry = {"scale": scale, "a": scale * proximity, "b": scale * proximity}
        try:
            bounds = estimate_bounds(
                ast, state, w0, z0, scale * proximity, scale * proximity,
                n_samples=options.torus_samples, safety=options.safety_factor,
                pole_tolerance=options.pole_tolerance, continuity_floor=options.continuity_floor,
            )
        except SampleEvaluationError as exc:
            entry["error"] = str(exc)
        else:
            entry.update(
                M_hat=bounds.M_hat,
                K_hat=bounds.K_hat,
                T_hat=bounds.T_hat,
                r=guaranteed_radius(bounds, options.radius_safety),
                sigma=sigma_radius(bounds.a, bounds.b, bounds.T_hat) if bounds.T_hat > 0 else bounds.a,
            )
        scales.append(entry)

    summary = {
        "command": "bounds",
        "w0": format_complex(w0),
        "z0": format_complex(z0),
        "proximity": _number(proximity),
        "scales": scales,
    }
    _write_json(out / "bounds.json", summary)
    return summary, EXIT_OK


COMMANDS = {
    "solve": _solve,
    "limit": _limit,
    "fiber": _fiber,
    "check-line": _check_line,
    "monodromy": _monodromy,
    "bounds": _bounds,
}


def main(argv=None):
    args = build_parser().parse_args(list(argv) if argv is not None else None)

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    out = Path(args.out)
    try:
        config = load_config(args.config).with_options(order=args.order, seed=args.seed)
        out.mkdir(parents=True, exist_ok=True)
        if args.dump_config:
            dump_config(config, out / "config.json")

        start = time.perf_counter()
        summary, code = COMMANDS[args.command](config, out, args)
        elapsed = time.perf_counter() - start
    except ConfigError as exc:
        print(f"painleve: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except HypothesisError as exc:
        print(f"painleve: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except PainleveError as exc:
        print(f"painleve: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    _write_json(out / "timing.json", {"command": args.command, "wall_time_seconds": elapsed})
    logger.info("%s finished in %.3f s", args.command, elapsed)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
