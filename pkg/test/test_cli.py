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

import csv
import json

import numpy as np
import pytest

from painleve.cli import EXIT_CONFIG, EXIT_HYPOTHESIS, EXIT_OK, TRACE_HEADER, build_parser, main
from painleve.config import load_config
from painleve.continuation import circle_arc
from painleve.misc import format_complex, parse_complex


def run(tmp_path, command, problem, *extra, out="out"):
    config = tmp_path / f"{out}.json"
    config.write_text(json.dumps(problem))
    return main([command, "--config", str(config), "--out", str(tmp_path / out), *extra])


def read_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def read_trace(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.reader(f))


SQRT = {"rhs": "1/(2*w)", "w0": "1", "z0": "1", "arc": ["1", "0.25"]}


def test_parser():
    args = build_parser().parse_args(["limit", "--config", "p.json", "-vv", "--order", "12"])
    assert args.command == "limit"
    assert args.out == "."
    assert args.verbose == 2 and args.order == 12
    assert not args.emit_plot_data and not args.dump_config

    with pytest.raises(SystemExit):
        build_parser().parse_args(["integrate", "--config", "p.json"])


def test_solve(tmp_path, capsys):
    assert run(tmp_path, "solve", SQRT) == EXIT_OK

    rows = read_trace(tmp_path / "out" / "trace.csv")
    assert rows[0] == TRACE_HEADER
    assert rows[-1][-1] == "Completed"
    assert rows[-1][5] == ""
    assert all(row[-1] == "" and float(row[5]) > 0 for row in rows[1:-1])
    assert abs(complex(float(rows[-1][3]), float(rows[-1][4])) - 0.5) < 1e-8

    summary = read_json(tmp_path / "out" / "summary.json")
    assert summary["trace"]["status"] == "Completed"
    assert summary["trace"]["steps"] == len(rows) - 2
    assert json.loads(capsys.readouterr().out) == summary
    assert read_json(tmp_path / "out" / "timing.json")["wall_time_seconds"] >= 0


def test_solve_stops_at_singular_set(tmp_path):
    problem = dict(SQRT, arc=["1", "0"])
    assert run(tmp_path, "solve", problem, "--emit-plot-data") == EXIT_OK
    summary = read_json(tmp_path / "out" / "summary.json")
    assert summary["trace"]["event"] == "SingularApproach"
    assert read_trace(tmp_path / "out" / "trace.csv")[-1][-1] == "SingularApproach"

    fibers = read_trace(tmp_path / "out" / "fibers.csv")
    assert fibers[0] == ["re_z", "im_z", "component", "re_u", "im_u"]
    # the only component is w = 0
    assert all(float(row[3]) == 0 and float(row[4]) == 0 for row in fibers[1:])


def test_solve_deterministic(tmp_path):
    problem = {"rhs": "w^2", "w0": "1", "z0": "0", "arc": ["0", "0.9"]}
    assert run(tmp_path, "solve", problem, out="first") == EXIT_OK
    assert run(tmp_path, "solve", problem, out="second") == EXIT_OK
    for name in ("summary.json", "trace.csv"):
        assert (tmp_path / "first" / name).read_text() == (tmp_path / "second" / name).read_text()


def test_limit(tmp_path):
    problem = {"rhs": "w^2", "w0": "1", "z0": "0", "arc": ["0", "1"]}
    assert run(tmp_path, "limit", problem) == EXIT_OK
    summary = read_json(tmp_path / "out" / "summary.json")
    assert summary["trace"]["event"] == "Blowup"
    assert summary["verdict"]["kind"] == "Infinity"
    assert summary["verdict"]["value"] is None

    problem = dict(SQRT, arcs=[["1", "0"], ["1", "1i", "0"]])
    del problem["arc"]
    assert run(tmp_path, "limit", problem, out="sweep") == EXIT_OK
    summary = read_json(tmp_path / "sweep" / "summary.json")
    assert [a["trace_file"] for a in summary["arcs"]] == ["trace_0.csv", "trace_1.csv"]
    for entry in summary["arcs"]:
        assert entry["verdict"]["kind"] == "Finite"
        assert abs(parse_complex(entry["verdict"]["value"])) < 1e-3
    assert (tmp_path / "sweep" / "trace_1.csv").exists()

    problem = dict(SQRT, arc=["1", "-1"])
    assert run(tmp_path, "limit", problem, out="interior") == EXIT_OK
    summary = read_json(tmp_path / "interior" / "summary.json")
    assert summary["verdict"]["kind"] == "Undetermined"
    assert summary["verdict"]["value"] is None


def test_limit_with_substitution_check(tmp_path):
    problem = dict(SQRT, solution="rad(2, z)")
    assert run(tmp_path, "limit", problem) == EXIT_OK
    summary = read_json(tmp_path / "out" / "summary.json")
    assert summary["verdict"]["kind"] == "Finite"
    assert summary["substitution_check"]["consistent"] is True


def test_fiber(tmp_path):
    problem = dict(SQRT, polynomial="w^2 - z", nu=["4", "-1"])
    assert run(tmp_path, "fiber", problem) == EXIT_OK
    fibers = read_json(tmp_path / "out" / "fiber.json")["fibers"]
    roots = sorted(parse_complex(r).real for r in fibers[0]["roots"])
    assert np.allclose(roots, [-2, 2])
    assert fibers[0]["degree_drop"] == 0
    assert np.allclose(sorted(parse_complex(r).imag for r in fibers[1]["roots"]), [-1, 1])

    problem = dict(SQRT, polynomial="w*z", nu=["0"])
    assert run(tmp_path, "fiber", problem, out="contained") == EXIT_OK
    assert read_json(tmp_path / "contained" / "fiber.json")["fibers"][0]["contained"] is True


def test_check_line(tmp_path):
    problem = dict(SQRT, polynomial="w*z", nu=["1"])
    assert run(tmp_path, "check-line", problem) == EXIT_OK
    assert read_json(tmp_path / "out" / "check_line.json")["passed"] is True

    problem = dict(SQRT, polynomial="w*z", nu=["0", "2"])
    assert run(tmp_path, "check-line", problem, out="violated") == EXIT_HYPOTHESIS
    checks = read_json(tmp_path / "violated" / "check_line.json")["checks"]
    assert [c["contained"] for c in checks] == [True, False]

    problem = {"rhs": "1/(w*z)", "w0": "1", "z0": "1", "arc": ["1", "-2"]}
    assert run(tmp_path, "check-line", problem, out="arc") == EXIT_HYPOTHESIS


def test_hypothesis_violation(tmp_path, capsys):
    problem = {"rhs": "1/(w*z)", "w0": "1", "z0": "1", "arc": ["1", "-1"]}
    assert run(tmp_path, "solve", problem) == EXIT_HYPOTHESIS
    assert "hypothesis violated" in capsys.readouterr().err


def test_monodromy(tmp_path):
    loop = [format_complex(z) for z in circle_arc(0, 1).vertices]
    problem = {"rhs": "rad(2, z) + rad(3, z - 5)", "w0": "0", "z0": "1", "loop": loop}
    assert run(tmp_path, "monodromy", problem) == EXIT_OK
    radicals = read_json(tmp_path / "out" / "monodromy.json")["radicals"]
    assert abs(parse_complex(radicals[0]["multiplier"]) + 1) < 1e-6
    assert radicals[0]["order"] == 2
    assert abs(parse_complex(radicals[1]["multiplier"]) - 1) < 1e-9
    assert radicals[1]["order"] == 1


def test_bounds(tmp_path):
    assert run(tmp_path, "bounds", SQRT) == EXIT_OK
    summary = read_json(tmp_path / "out" / "bounds.json")
    assert summary["proximity"] == pytest.approx(1.0)
    assert [s["scale"] for s in summary["scales"]] == [0.35, 0.25, 0.125]
    for entry in summary["scales"]:
        assert 0 < entry["r"] <= 0.8 * entry["a"]
        assert 0 < entry["sigma"] <= entry["a"]


def test_config_errors(tmp_path, capsys):
    assert run(tmp_path, "solve", dict(SQRT, rhs="rad(1, w)")) == EXIT_CONFIG
    err = capsys.readouterr().err
    assert "configuration error" in err
    assert "rad index must be ≥ 2" in err

    assert run(tmp_path, "solve", dict(SQRT, rhs="w^1e400"), out="overflow") == EXIT_CONFIG
    assert run(tmp_path, "monodromy", SQRT) == EXIT_CONFIG
    assert main(["solve", "--config", str(tmp_path / "missing.json")]) == EXIT_CONFIG


def test_dump_config(tmp_path):
    assert run(tmp_path, "solve", SQRT, "--dump-config", "--order", "12", "--seed", "7") == EXIT_OK
    dumped = load_config(tmp_path / "out" / "config.json")
    assert dumped.options.order == 12
    assert dumped.options.seed == 7
    assert dumped == load_config(tmp_path / "out.json").with_options(order=12, seed=7)


def test_fiber_of_worked_example_component(tmp_path):
    problem = dict(SQRT, polynomial="3*z + w^2", nu=["1"])
    assert run(tmp_path, "fiber", problem) == EXIT_OK
    roots = [parse_complex(r) for r in read_json(tmp_path / "out" / "fiber.json")["fibers"][0]["roots"]]
    assert np.allclose(sorted(r.imag for r in roots), [-np.sqrt(3), np.sqrt(3)])
    assert np.allclose([r.real for r in roots], 0, atol=1e-12)
