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
Problem files: a JSON object describing one Cauchy problem and what to do
with it. Complex numbers are written as strings "re+imi" or plain numbers.

    {
      "rhs": "1/(2*w)",
      "w0": "1+0i",
      "z0": 1,
      "branch": "principal-positive-real",
      "arc": ["1", "0"],
      "options": {"order": 24}
    }

Optional keys: "arcs" (several arcs for a limit sweep), "nu" and
"polynomial" (fibers and line checks), "loop" (closed loop for monodromy)
and "solution" (closed form in z for the symbolic check).
"""

import dataclasses
import json
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from painleve.continuation import Arc, ContinuationOptions
from painleve.exceptions import ConfigError, ExpressionError
from painleve.expression import (
    PRINCIPAL_POSITIVE_REAL,
    branches_from_values,
    init_branches,
    parse_expression,
    parse_polynomial,
)
from painleve.misc import format_complex, parse_complex

__all__ = [
    "ProblemConfig",
    "config_from_dict",
    "config_to_dict",
    "load_config",
    "dump_config",
]

logger = logging.getLogger(__name__)

_KNOWN_KEYS = {
    "rhs",
    "w0",
    "z0",
    "branch",
    "arc",
    "arcs",
    "nu",
    "polynomial",
    "loop",
    "solution",
    "options",
}


@dataclass(frozen=True)
class ProblemConfig:
    rhs: str
    w0: complex
    z0: complex
    branch: Union[str, Tuple[complex, ...]] = PRINCIPAL_POSITIVE_REAL
    arc: Optional[Tuple[complex, ...]] = None
    arcs: Optional[Tuple[Tuple[complex, ...], ...]] = None
    nu: Tuple[complex, ...] = ()
    polynomial: Optional[str] = None
    loop: Optional[Tuple[complex, ...]] = None
    solution: Optional[str] = None
    options: ContinuationOptions = field(default_factory=ContinuationOptions)

    def expression(self):
        return parse_expression(self.rhs)

    def initial_state(self, ast=None):
        ast = ast or self.expression()
        if self.branch == PRINCIPAL_POSITIVE_REAL:
            return init_branches(ast, self.w0, self.z0)
        try:
            return branches_from_values(ast, self.w0, self.z0, self.branch)
        except ValueError as exc:
            raise ConfigError(str(exc), "branch") from exc

    def arc_objects(self):
        """
        The arcs of the problem: "arcs" when given, else the single "arc".
        """

        if self.arcs:
            return [Arc(a) for a in self.arcs]
        if self.arc:
            return [Arc(self.arc)]
        return []

    def with_options(self, **changes):
        changes = {k: v for k, v in changes.items() if v is not None}
        if not changes:
            return self
        try:
            options = dataclasses.replace(self.options, **changes)
        except ValueError as exc:
            raise ConfigError(str(exc), "options") from exc
        return dataclasses.replace(self, options=options)


def _complex(value, name):
    try:
        return parse_complex(value)
    except ValueError as exc:
        raise ConfigError(str(exc), name) from None


def _vertices(value, name, minimum=2):
    if not isinstance(value, list) or len(value) < minimum:
        raise ConfigError(f"expected a list of at least {minimum} complex numbers", name)
    return tuple(_complex(v, f"{name}[{i}]") for i, v in enumerate(value))


def _check_arc(vertices, z0, name):
    if abs(vertices[0] - z0) > 1e-12 * (1.0 + abs(z0)):
        raise ConfigError(f"the arc starts at {vertices[0]}, not at z0 = {z0}", name)
    for i, (a, b) in enumerate(zip(vertices, vertices[1:])):
        if a == b:
            raise ConfigError(f"repeated vertex {a}", f"{name}[{i + 1}]")


def _options(value):
    if value is None:
        return ContinuationOptions()
    if not isinstance(value, dict):
        raise ConfigError("expected an object", "options")

    known = {f.name for f in dataclasses.fields(ContinuationOptions)}
    unknown = sorted(set(value) - known)
    if unknown:
        raise ConfigError(f"unknown option {unknown[0]!r}", "options")
    try:
        return ContinuationOptions(**value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc), "options") from exc


def config_from_dict(data):
    """
    Validates a decoded problem file. The right-hand side is parsed so that
    syntax errors are reported here, with the offending position.
    """

    if not isinstance(data, dict):
        raise ConfigError("the problem file must hold a JSON object")
    unknown = sorted(set(data) - _KNOWN_KEYS)
    if unknown:
        raise ConfigError("unknown key", unknown[0])

    for key in ("rhs", "w0", "z0"):
        if key not in data:
            raise ConfigError("missing required key", key)

    rhs = data["rhs"]
    if not isinstance(rhs, str):
        raise ConfigError("expected an expression string", "rhs")
    try:
        ast = parse_expression(rhs)
    except ExpressionError as exc:
        raise ConfigError(str(exc), "rhs") from exc

    w0 = _complex(data["w0"], "w0")
    z0 = _complex(data["z0"], "z0")

    branch = data.get("branch", PRINCIPAL_POSITIVE_REAL)
    if isinstance(branch, list):
        branch = tuple(_complex(v, f"branch[{i}]") for i, v in enumerate(branch))
        if len(branch) != len(ast.radicals):
            raise ConfigError(
                f"expected {len(ast.radicals)} sheet values, one per rad node", "branch"
            )
    elif branch != PRINCIPAL_POSITIVE_REAL:
        raise ConfigError(
            f"expected {PRINCIPAL_POSITIVE_REAL!r} or a list of sheet values", "branch"
        )

    arc = None
    if data.get("arc") is not None:
        arc = _vertices(data["arc"], "arc")
        _check_arc(arc, z0, "arc")

    arcs = None
    if data.get("arcs") is not None:
        if not isinstance(data["arcs"], list) or not data["arcs"]:
            raise ConfigError("expected a nonempty list of arcs", "arcs")
        arcs = tuple(_vertices(a, f"arcs[{i}]") for i, a in enumerate(data["arcs"]))
        for i, a in enumerate(arcs):
            _check_arc(a, z0, f"arcs[{i}]")

    nu = ()
    if data.get("nu") is not None:
        nu = _vertices(data["nu"], "nu", minimum=1)

    polynomial = data.get("polynomial")
    if polynomial is not None:
        if not isinstance(polynomial, str):
            raise ConfigError("expected a polynomial string", "polynomial")
        try:
            parse_polynomial(polynomial)
        except ExpressionError as exc:
            raise ConfigError(str(exc), "polynomial") from exc

    loop = None
    if data.get("loop") is not None:
        loop = _vertices(data["loop"], "loop", minimum=3)
        _check_arc(loop, z0, "loop")
        if abs(loop[0] - loop[-1]) > 1e-12 * (1.0 + abs(loop[0])):
            raise ConfigError("the loop must end where it starts", "loop")

    solution = data.get("solution")
    if solution is not None:
        if not isinstance(solution, str):
            raise ConfigError("expected an expression string", "solution")
        try:
            parse_expression(solution)
        except ExpressionError as exc:
            raise ConfigError(str(exc), "solution") from exc

    return ProblemConfig(
        rhs=rhs,
        w0=w0,
        z0=z0,
        branch=branch,
        arc=arc,
        arcs=arcs,
        nu=nu,
        polynomial=polynomial,
        loop=loop,
        solution=solution,
        options=_options(data.get("options")),
    )


def config_to_dict(config):
    """
    Normalized form of a config: every option spelled out and complex
    numbers as "re+imi" strings with full precision.
    """

    def vertices(vs):
        return [format_complex(v) for v in vs]

    data = {
        "rhs": config.rhs,
        "w0": format_complex(config.w0),
        "z0": format_complex(config.z0),
        "branch": (
            config.branch
            if isinstance(config.branch, str)
            else vertices(config.branch)
        ),
        "options": {
            k: list(v) if isinstance(v, tuple) else v
            for k, v in dataclasses.asdict(config.options).items()
        },
    }
    if config.arc is not None:
        data["arc"] = vertices(config.arc)
    if config.arcs is not None:
        data["arcs"] = [vertices(a) for a in config.arcs]
    if config.nu:
        data["nu"] = vertices(config.nu)
    if config.polynomial is not None:
        data["polynomial"] = config.polynomial
    if config.loop is not None:
        data["loop"] = vertices(config.loop)
    if config.solution is not None:
        data["solution"] = config.solution
    return data


def load_config(path):
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc

    config = config_from_dict(data)
    logger.info("loaded problem %r from %s", config.rhs, path)
    return config


def dump_config(config, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(config_to_dict(config), f, indent=2, sort_keys=True)
        f.write("\n")
