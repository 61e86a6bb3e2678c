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

import logging
from dataclasses import dataclass

import numpy as np

from painleve.exceptions import PainleveError, SampleEvaluationError

__all__ = [
    "Bidisc",
    "circle_points",
    "torus_grid",
    "torus_max_sample",
    "in_disc",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bidisc:
    """
    The bidisc D(center_u, radius_u) x D(center_v, radius_v) in C^2.

    Following the local existence theorem, radius_u (b) bounds the unknown w
    and radius_v (a) bounds the independent variable z.
    """

    center_u: complex
    center_v: complex
    radius_u: float
    radius_v: float

    def __post_init__(self):
        if not (self.radius_u > 0 and self.radius_v > 0):
            raise ValueError(
                f"bidisc radii must be positive, got b={self.radius_u}, a={self.radius_v}"
            )
        object.__setattr__(self, "center_u", complex(self.center_u))
        object.__setattr__(self, "center_v", complex(self.center_v))

    def scaled(self, factor):
        return Bidisc(
            self.center_u, self.center_v, factor * self.radius_u, factor * self.radius_v
        )


def circle_points(center, radius, n):
    """
    n equally spaced points on the circle |z - center| = radius, starting
    at center + radius.
    """

    angles = 2 * np.pi * np.arange(n) / n
    return complex(center) + radius * np.exp(1j * angles)


def torus_grid(bidisc, n_samples):
    """
    The n x n grid on the distinguished boundary
    {|u - c_u| = b} x {|v - c_v| = a}, as a pair of 2d arrays (U, V).
    """

    us = circle_points(bidisc.center_u, bidisc.radius_u, n_samples)
    vs = circle_points(bidisc.center_v, bidisc.radius_v, n_samples)
    return np.meshgrid(us, vs, indexing="ij")


def torus_max_sample(f, bidisc, n_samples=64, safety=1.25):
    """
    Estimates sup |f| over the bidisc by sampling the distinguished boundary
    torus, where the maximum of a holomorphic function is attained. The
    sampled maximum is multiplied by safety >= 1.

    f is called once on the whole grid, f(U, V), and must broadcast; scalar
    returns (constant functions) are fine.
    """

    if safety < 1:
        raise ValueError("safety factor must be at least 1")
    if n_samples < 1:
        raise ValueError("n_samples must be positive")

    U, V = torus_grid(bidisc, n_samples)

    try:
        values = np.broadcast_to(np.asarray(f(U, V), dtype=np.complex128), U.shape)
    except SampleEvaluationError:
        raise
    except (PainleveError, ZeroDivisionError, FloatingPointError) as exc:
        raise SampleEvaluationError(
            f"evaluation failed on the torus of {bidisc}: {exc}"
        ) from exc

    bad = ~np.isfinite(values)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        location = (complex(U[i, j]), complex(V[i, j]))
        raise SampleEvaluationError(
            f"non-finite value at sample point u={location[0]}, v={location[1]}",
            location=location,
        )

    peak = float(np.max(np.abs(values)))
    logger.debug("torus max over %s with %d^2 samples: %g", bidisc, n_samples, peak)
    return safety * peak


def in_disc(center, radius, z):
    return abs(complex(z) - complex(center)) < radius
