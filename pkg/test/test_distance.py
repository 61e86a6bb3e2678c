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

import numpy as np

from painleve.distance import (
    INFINITY,
    SpherePoint,
    as_sphere_point,
    chordal_diameter,
    chordal_distance,
    chordal_mean,
    from_sphere_embedding,
    sphere_embedding,
)

POINTS = [0, 1, -1, 1j, 2 - 3j, 0.5 + 0.25j, 1e3, -7.5j, None]


def test_sphere_point():
    assert SpherePoint(float("inf")).is_infinity
    assert SpherePoint(complex(np.nan, 0)).is_infinity
    assert SpherePoint.finite(2).value == 2 + 0j
    assert as_sphere_point(None) == INFINITY
    assert as_sphere_point(INFINITY) is INFINITY


def test_chordal_distance():
    assert chordal_distance(0, INFINITY) == 1.0
    assert chordal_distance(INFINITY, None) == 0.0
    assert np.isclose(chordal_distance(0, 1), 1 / np.sqrt(2), atol=1e-12)
    assert np.isclose(chordal_distance(1, -1), 1.0, atol=1e-12)
    assert np.isclose(chordal_distance(1, INFINITY), 1 / np.sqrt(2), atol=1e-12)


def test_chordal_metric_axioms():
    for p, q in itertools.product(POINTS, repeat=2):
        d = chordal_distance(p, q)
        assert -1e-12 <= d <= 1 + 1e-12
        assert abs(d - chordal_distance(q, p)) <= 1e-12

    for p in POINTS:
        assert chordal_distance(p, p) <= 1e-12

    for p, q, r in itertools.product(POINTS, repeat=3):
        assert chordal_distance(p, r) <= chordal_distance(p, q) + chordal_distance(q, r) + 1e-12


def test_sphere_embedding():
    centre = np.array([0.0, 0.0, 0.5])
    for p in POINTS:
        assert abs(np.linalg.norm(sphere_embedding(p) - centre) - 0.5) <= 1e-12

    for p, q in itertools.product(POINTS, repeat=2):
        euclidean = np.linalg.norm(sphere_embedding(p) - sphere_embedding(q))
        assert abs(euclidean - chordal_distance(p, q)) <= 1e-12

    assert abs(from_sphere_embedding(sphere_embedding(2 - 3j)).value - (2 - 3j)) <= 1e-12
    assert from_sphere_embedding(sphere_embedding(None)).is_infinity


def test_chordal_diameter():
    assert chordal_diameter([1.0]) == 0.0
    assert np.isclose(chordal_diameter([0, 1, INFINITY]), 1.0)
    assert chordal_diameter([1e9, 2e9, None]) < 2e-9


def test_chordal_mean():
    assert abs(chordal_mean([2 + 1j] * 3).value - (2 + 1j)) <= 1e-12
    assert abs(chordal_mean([1, 1j]).value - np.exp(1j * np.pi / 4)) <= 1e-12
    assert chordal_mean([INFINITY, INFINITY]).is_infinity
    assert chordal_mean([1, -1]) is None
