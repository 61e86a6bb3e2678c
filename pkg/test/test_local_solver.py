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

import numpy as np
import pytest
from scipy.special import factorial

from painleve.exceptions import ResidualError, SampleEvaluationError
from painleve.expression import BranchState, init_branches, parse_expression
from painleve.local_solver import (
    LocalBounds,
    estimate_bounds,
    guaranteed_radius,
    picard_step,
    sigma_radius,
    solve_local,
)
from painleve.series import TaylorSeries, series_truncate

ORDER = 24

EXP_RHS = parse_expression("w")
SQUARE_RHS = parse_expression("w^2")
LINEAR_RHS = parse_expression("2*z")


def solve(ast, w0, z0, radius=0.35, **kwargs):
    state = init_branches(ast, w0, z0)
    bounds = estimate_bounds(ast, state, w0, z0, radius, radius)
    return state, bounds, solve_local(ast, state, w0, z0, bounds, ORDER, **kwargs)


def test_local_bounds():
    with pytest.raises(ValueError):
        LocalBounds(0, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        LocalBounds(1, 1, -1, 1, 1)
    with pytest.raises(ValueError):
        LocalBounds(1, 1, np.inf, 1, 1)


def test_estimate_bounds():
    bounds = estimate_bounds(parse_expression("3"), BranchState(), 0, 0, 1, 0.5)
    assert np.isclose(bounds.M_hat, 3 * 1.25)
    assert np.isclose(bounds.T_hat, 4 * 3 * 1.25)
    assert np.isclose(bounds.K_hat, 3 * 1.25 / 0.5)

    bounds = estimate_bounds(EXP_RHS, BranchState(), 0, 0, 1, 1)
    assert np.isclose(bounds.M_hat, 1.25)
    assert bounds.K_hat >= 1

    bounds = estimate_bounds(parse_expression("w*z"), BranchState(), 0, 0, 3, 2)
    assert np.isclose(bounds.M_hat, 6 * 1.25)


def test_guaranteed_radius():
    assert guaranteed_radius(LocalBounds(1, 1, 2, 4, 1)) == 0.2
    assert np.isclose(guaranteed_radius(LocalBounds(1.5, 1, 0, 0, 0)), 0.8 * 1.5)
    assert np.isclose(guaranteed_radius(LocalBounds(2, 1, 1, 0.1, 1)), 0.8)


def test_sigma_radius():
    assert abs(sigma_radius(1, 1, 1) - (1 - np.exp(-0.5))) <= 1e-12
    assert np.isclose(sigma_radius(2, 1, 1), 0.4423985, atol=1e-7)
    assert np.isclose(sigma_radius(1, 1, 100), 0.0049875, atol=1e-7)

    with pytest.raises(ValueError):
        sigma_radius(1, 1, 0)


def test_sigma_radius_monotone():
    Ts = [0.5, 1, 2, 4, 8]
    bs = [0.25, 0.5, 1, 2]
    for a in [0.5, 1, 2]:
        for b in bs:
            sigmas = [sigma_radius(a, b, T) for T in Ts]
            assert np.all(np.diff(sigmas) < 0)
        for T in Ts:
            sigmas = [sigma_radius(a, b, T) for b in bs]
            assert np.all(np.diff(sigmas) > 0)


def test_solve_local_exponential():
    _, _, local = solve(EXP_RHS, 1, 0)
    assert np.allclose(local.series.coeffs, 1 / factorial(np.arange(ORDER + 1)), atol=1e-14)
    assert local.series.order == ORDER
    assert local.guaranteed_radius <= local.series.validity_radius
    assert local.residual <= 1e-8


def test_solve_local_geometric():
    _, _, local = solve(SQUARE_RHS, 1, 0)
    assert np.allclose(local.series.coeffs, np.ones(ORDER + 1), atol=1e-12)
    # the solution 1/(1 - z) blows up at distance 1
    assert local.guaranteed_radius <= 1


def test_solve_local_polynomial():
    _, _, local = solve(LINEAR_RHS, 5, 0)
    expected = np.zeros(ORDER + 1)
    expected[0], expected[2] = 5, 1
    assert np.allclose(local.series.coeffs, expected, atol=1e-14)
    assert np.isclose(local(0.1), 5.01)


def test_solve_local_off_center():
    ast = parse_expression("1/(2*w)")
    _, _, local = solve(ast, 1, 1)
    assert abs(local(1.1) - np.sqrt(1.1)) <= 1e-12


def test_picard_fixed_point():
    for ast, w0 in [(EXP_RHS, 1), (SQUARE_RHS, 1), (parse_expression("rad(2, z + w^2)"), 0.5)]:
        state, _, local = solve(ast, w0, 0.5, radius=0.1)
        again = picard_step(ast, state, local.series, w0)
        old = local.series.coeffs[:ORDER]
        new = again.coeffs[:ORDER]
        assert np.all(np.abs(new - old) <= 1e-12 * np.maximum(1, np.abs(old)))


def test_picard_uniqueness():
    ast = parse_expression("rad(2, z + w^2)")
    state, _, local = solve(ast, 0.5, 0.5, radius=0.1)

    coeffs = np.zeros(ORDER + 1, dtype=complex)
    coeffs[:3] = [0.5, 0.3, -2]
    w = TaylorSeries(0.5, coeffs)
    for _ in range(ORDER + 2):
        w = series_truncate(picard_step(ast, state, w, 0.5), ORDER)
    assert np.allclose(w.coeffs, local.series.coeffs, rtol=1e-12, atol=1e-12)


def test_solve_local_residual_failure():
    state = init_branches(SQUARE_RHS, 1, 0)
    bounds = estimate_bounds(SQUARE_RHS, state, 1, 0, 0.35, 0.35)
    with pytest.raises(ResidualError) as info:
        solve_local(SQUARE_RHS, state, 1, 0, bounds, order=2)
    assert info.value.residual > 1e-8


def test_solve_local_passes_sheet_tolerances():
    ast = parse_expression("rad(2, z)")
    _, _, local = solve(ast, 1, 1, radius=0.25)
    assert local.residual <= 1e-8

    # the radicand stays near 1 on the residual circle, below a floor of 2
    with pytest.raises(SampleEvaluationError):
        solve(ast, 1, 1, radius=0.25, continuity_floor=2.0)
