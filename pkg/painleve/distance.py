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

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

__all__ = [
    "SpherePoint",
    "INFINITY",
    "as_sphere_point",
    "chordal_distance",
    "chordal_diameter",
    "chordal_mean",
    "sphere_embedding",
    "from_sphere_embedding",
]


@dataclass(frozen=True)
class SpherePoint:
    """
    A point of the Riemann sphere P^1: a finite complex value, or infinity
    when value is None.
    """

    value: Optional[complex] = None

    def __post_init__(self):
        if self.value is not None:
            value = complex(self.value)
            if not (np.isfinite(value.real) and np.isfinite(value.imag)):
                value = None
            object.__setattr__(self, "value", value)

    @property
    def is_infinity(self):
        return self.value is None

    @classmethod
    def finite(cls, value):
        return cls(complex(value))

    @classmethod
    def infinity(cls):
        return cls(None)

    def __repr__(self):
        if self.is_infinity:
            return "SpherePoint(inf)"
        return f"SpherePoint({self.value})"


INFINITY = SpherePoint(None)


def as_sphere_point(p):
    """
    Accepts a SpherePoint, a complex number, or anything non-finite (which
    is read as the point at infinity).
    """

    if isinstance(p, SpherePoint):
        return p
    if p is None:
        return INFINITY
    return SpherePoint(complex(p))


def chordal_distance(p, q):
    """
    Chordal distance on the Riemann sphere,

        |p - q| / (sqrt(1 + |p|^2) * sqrt(1 + |q|^2)),

    with d(p, inf) = 1 / sqrt(1 + |p|^2) and d(inf, inf) = 0. It takes values
    in [0, 1]; 0 and infinity are at distance 1.
    """

    p = as_sphere_point(p)
    q = as_sphere_point(q)

    if p.is_infinity and q.is_infinity:
        return 0.0
    if q.is_infinity:
        return float(1.0 / np.hypot(1.0, abs(p.value)))
    if p.is_infinity:
        return float(1.0 / np.hypot(1.0, abs(q.value)))

    return float(
        abs(p.value - q.value) / (np.hypot(1.0, abs(p.value)) * np.hypot(1.0, abs(q.value)))
    )


def sphere_embedding(p):
    """
    Maps p to the sphere of diameter one resting on the origin,

        p -> (Re p, Im p, |p|^2) / (1 + |p|^2),      inf -> (0, 0, 1),

    under which the chordal distance is the Euclidean distance in R^3.
    """

    p = as_sphere_point(p)
    if p.is_infinity:
        return np.array([0.0, 0.0, 1.0])

    modulus_sq = abs(p.value) ** 2
    return np.array([p.value.real, p.value.imag, modulus_sq]) / (1.0 + modulus_sq)


def from_sphere_embedding(x):
    """
    Inverse of sphere_embedding for points on the sphere.
    """

    x = np.asarray(x, dtype=float)
    if 1.0 - x[2] <= 1e-300:
        return INFINITY
    return SpherePoint(complex(x[0], x[1]) / (1.0 - x[2]))


def chordal_diameter(points):
    """
    Largest pairwise chordal distance of a collection of points.
    """

    points = [as_sphere_point(p) for p in points]
    if len(points) < 2:
        return 0.0
    return max(chordal_distance(p, q) for p, q in itertools.combinations(points, 2))


def chordal_mean(points):
    """
    Frechet mean of the points for the chordal metric.

    Since the chordal metric is the restriction of the Euclidean metric of
    R^3 to the embedded sphere, the minimiser of the summed squared distances
    is the radial projection of the Euclidean centroid onto the sphere.
    Returns None when the centroid sits at the centre of the sphere.
    """

    embedded = np.array([sphere_embedding(p) for p in points])
    if embedded.size == 0:
        raise ValueError("chordal_mean needs at least one point")

    centre = np.array([0.0, 0.0, 0.5])
    offset = embedded.mean(axis=0) - centre
    length = np.linalg.norm(offset)
    if length < 1e-15:
        return None

    return from_sphere_embedding(centre + 0.5 * offset / length)
