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
One step of the continuation: bounds on F over a bidisc, the radii they
guarantee and the local solution of w' = F(w, z), w(z0) = w0, as a Taylor
series obtained by Picard iteration.

Conventions: a is the radius in z, b the radius in w. The bidisc is
|w - w0| <= b, |z - z0| <= a.
"""

import logging
from dataclasses import dataclass

import numpy as np

from painleve.exceptions import ResidualError
from painleve.expression import (
    CONTINUITY_FLOOR,
    POLE_TOLERANCE,
    eval_series,
    eval_transported,
)
from painleve.general_functions import Bidisc, circle_points, torus_max_sample
from painleve.series import (
    TaylorSeries,
    constant_series,
    series_derivative,
    series_eval,
    series_integrate,
    series_truncate,
)

__all__ = [
    "LocalBounds",
    "LocalSolution",
    "estimate_bounds",
    "guaranteed_radius",
    "sigma_radius",
    "picard_step",
    "solve_local",
    "local_residual",
]

logger = logging.getLogger(__name__)

RADIUS_SAFETY = 0.8
RESIDUAL_TOLERANCE = 1e-8
RESIDUAL_POINTS = 8


@dataclass(frozen=True)
class LocalBounds:
    a: float
    b: float
    M_hat: float
    K_hat: float
    T_hat: float

    def __post_init__(self):
        for name in ("a", "b", "M_hat", "K_hat", "T_hat"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value >= 0):
                raise ValueError(f"{name} must be finite and nonnegative, got {value}")
        if self.a == 0 or self.b == 0:
            raise ValueError("the radii a and b must be positive")


@dataclass(frozen=True)
class LocalSolution:
    series: TaylorSeries
    guaranteed_radius: float
    residual: float

    @property
    def center(self):
        return self.series.center

    def __call__(self, z):
        return series_eval(self.series, z)


def estimate_bounds(
    ast,
    state,
    w0,
    z0,
    a,
    b,
    n_samples=64,
    safety=1.25,
    pole_tolerance=POLE_TOLERANCE,
    continuity_floor=CONTINUITY_FLOOR,
):
    """
    Bounds for F on the bidisc of radii (b, a) about (w0, z0).

    M_hat is the sampled maximum of |F| on the torus of radii (b, a) and M2
    the one on the doubled torus (2b, 2a). The Cauchy estimates
    |c_kl| <= M2 / ((2b)^k (2a)^l) give

        sum |c_kl| b^k a^l <= 4 M2 = T_hat,    |dF/dw| <= M2 / b = K_hat.

    The caller must keep the doubled bidisc away from the singular set;
    evaluation failures surface as SampleEvaluationError.
    """

    w0, z0 = complex(w0), complex(z0)

    def f(U, V):
        return eval_transported(
            ast, state, (w0, z0), U, V,
            pole_tol=pole_tolerance, floor=continuity_floor,
        )

    bidisc = Bidisc(w0, z0, b, a)
    M_hat = torus_max_sample(f, bidisc, n_samples, safety)
    M2 = torus_max_sample(f, bidisc.scaled(2.0), n_samples, safety)

    bounds = LocalBounds(float(a), float(b), M_hat, M2 / b, 4.0 * M2)
    logger.debug("bounds at (%s, %s): %s", w0, z0, bounds)
    return bounds


def guaranteed_radius(bounds, safety_r=RADIUS_SAFETY):
    """
    r = safety_r * min(a, b/M, 1/K), with b/0 = 1/0 = +inf.
    """

    b_over_m = bounds.b / bounds.M_hat if bounds.M_hat > 0 else np.inf
    one_over_k = 1.0 / bounds.K_hat if bounds.K_hat > 0 else np.inf
    return safety_r * min(bounds.a, b_over_m, one_over_k)


def sigma_radius(a, b, T):
    """
    a (1 - exp(-b / (2 a T))), a lower bound for the radius of convergence
    of the solution in terms of the coefficient-sum bound T.
    """

    if T <= 0:
        raise ValueError("T must be positive")
    return a * -np.expm1(-b / (2.0 * a * T))


def picard_step(ast, state, w_series, w0, order=None):
    """
    One Picard iteration w -> w0 + integral of F(w(z), z) from z0, where z0
    is the center of w_series. The result has order (order or
    w_series.order) + 1.
    """

    z0 = w_series.center
    F = eval_series(ast, w_series, z0, state, order)
    return series_integrate(F, w0)


def local_residual(
    ast,
    state,
    series,
    radius,
    n_points=RESIDUAL_POINTS,
    pole_tolerance=POLE_TOLERANCE,
    continuity_floor=CONTINUITY_FLOOR,
):
    """
    max |w'(z) - F(w(z), z)| / (1 + |F(w(z), z)|) over n_points on the
    circle |z - z0| = radius.
    """

    z0 = series.center
    zs = circle_points(z0, radius, n_points)
    ws = series_eval(series, zs)
    dws = series_eval(series_derivative(series), zs)
    F = eval_transported(
        ast, state, (series.coeffs[0], z0), ws, zs, pole_tol=pole_tolerance, floor=continuity_floor
    )
    return float(np.max(np.abs(dws - F) / (1.0 + np.abs(F))))


def solve_local(
    ast,
    state,
    w0,
    z0,
    bounds,
    order=24,
    residual_tolerance=RESIDUAL_TOLERANCE,
    safety_r=RADIUS_SAFETY,
    pole_tolerance=POLE_TOLERANCE,
    continuity_floor=CONTINUITY_FLOOR,
):
    """
    Solves w' = F(w, z), w(z0) = w0 on the guaranteed disc.

    Picard iteration on truncated series: starting from the constant w0,
    step m works at order m and fixes the coefficient of degree m + 1. After
    order such steps one more step at full order is made and truncated back
    to order, so the iteration runs order + 1 times. The residual is checked
    on the circle of half the guaranteed radius.

    Raises
    ------
    ResidualError
        when the residual exceeds residual_tolerance.
    """

    w0, z0 = complex(w0), complex(z0)
    radius = guaranteed_radius(bounds, safety_r)

    w = constant_series(w0, z0, 0)
    for m in range(order):
        w = picard_step(ast, state, w, w0, m)
    w = series_truncate(picard_step(ast, state, w, w0, order), order)
    w = TaylorSeries(z0, w.coeffs, radius)

    residual = local_residual(
        ast, state, w, radius / 2.0, pole_tolerance=pole_tolerance, continuity_floor=continuity_floor
    )
    if not residual <= residual_tolerance:
        raise ResidualError(
            f"residual {residual:.3g} above tolerance {residual_tolerance:.3g} "
            f"at z0 = {z0} (order {order}, radius {radius:.3g})",
            residual=residual,
        )

    logger.debug("local solution at z0 = %s: radius %.6g, residual %.3g", z0, radius, residual)
    return LocalSolution(w, radius, residual)
