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

import numpy as np
import pytest

from painleve.exceptions import LineContainedError
from painleve.polynomials import (
    BivariatePoly,
    contained_lines,
    fiber_loci,
    fiber_roots,
    line_contained,
    poly_add,
    poly_constant,
    poly_derivative,
    poly_eval,
    poly_from_terms,
    poly_mul,
    poly_pow,
    poly_proportional,
    poly_restrict,
    poly_scale,
    poly_u,
    poly_v,
    proximity_estimate,
)

U = poly_u()
V = poly_v()

# 3v + u^2 and u v
P1 = poly_from_terms({(0, 1): 3, (2, 0): 1})
UV = poly_mul(U, V)


def test_bivariate_poly():
    P = BivariatePoly([[1, 0, 0], [2, 0, 0], [0, 0, 0]])
    assert P.coeffs.shape == (2, 1)
    assert P.deg_u == 1 and P.deg_v == 0
    assert BivariatePoly([[0, 0]]).is_zero
    assert poly_constant(5).is_constant
    assert P == poly_add(poly_constant(1), poly_scale(U, 2))
    assert hash(P) == hash(poly_add(poly_constant(1), poly_scale(U, 2)))


def test_poly_eval():
    assert poly_eval(P1, 1j * np.sqrt(3), 1) == pytest.approx(0, abs=1e-12)
    assert poly_eval(UV, 2, 3) == 6
    assert np.allclose(poly_eval(P1, np.array([1, 2]), 0), [1, 4])
    assert P1(0, 1) == 3


def test_poly_arithmetic():
    square = poly_pow(poly_add(U, V), 2)
    expected = poly_from_terms({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert square == expected
    assert poly_pow(U, 0) == poly_constant(1)

    with pytest.raises(ValueError):
        poly_pow(U, -1)


def test_poly_derivative():
    assert poly_derivative(P1, "u") == poly_scale(U, 2)
    assert poly_derivative(P1, "v") == poly_constant(3)
    assert poly_derivative(V, "u").is_zero

    with pytest.raises(ValueError):
        poly_derivative(P1, "w")


def test_poly_restrict():
    assert np.allclose(poly_restrict(P1, 1), [3, 0, 1])
    assert np.allclose(poly_restrict(UV, 2), [0, 2])


def test_poly_proportional():
    assert poly_proportional(P1, poly_scale(P1, -2j))
    assert not poly_proportional(P1, UV)
    assert not poly_proportional(P1, poly_add(P1, poly_constant(1)))


def test_line_contained():
    assert line_contained(UV, 0)
    assert not line_contained(UV, 1)
    assert line_contained(poly_mul(poly_add(V, poly_constant(-1)), poly_pow(U, 2)), 1)
    assert not line_contained(P1, 0)

    # 1e6 u v + 1e-5: the constant is below the tolerance relative to the size of P
    P = poly_from_terms({(1, 1): 1e6, (0, 0): 1e-5})
    assert line_contained(P, 0)
    assert not line_contained(P, 0, tol=1e-12)


def test_contained_lines():
    assert np.allclose(contained_lines(UV), [0])
    assert contained_lines(P1) == []
    lines = contained_lines(poly_mul(poly_add(V, poly_constant(-2j)), poly_add(U, V)))
    assert np.allclose(lines, [2j])


def test_fiber_roots():
    fiber = fiber_roots(P1, 1)
    roots = sorted(fiber.roots, key=lambda r: r.imag)
    assert np.allclose(roots, [-1j * np.sqrt(3), 1j * np.sqrt(3)], atol=1e-9)
    assert fiber.degree == 2 and fiber.degree_drop == 0

    fiber = fiber_roots(poly_add(U, poly_constant(-4)), 0)
    assert fiber.roots == (4,)

    with pytest.raises(LineContainedError):
        fiber_roots(UV, 0)


def test_fiber_roots_degree_drop(caplog):
    # v u^2 + u - 1 loses its quadratic term at v = 0
    P = poly_from_terms({(2, 1): 1, (1, 0): 1, (0, 0): -1})
    with caplog.at_level(logging.WARNING, logger="painleve.polynomials"):
        fiber = fiber_roots(P, 0)
    assert "degree drops by 1" in caplog.text
    assert fiber.degree_drop == 1
    assert np.allclose(fiber.roots, [1])


def test_fiber_roots_accuracy():
    rng = np.random.default_rng(7)
    coeffs = rng.normal(size=(7, 3)) + 1j * rng.normal(size=(7, 3))
    P = BivariatePoly(coeffs)
    for nu in [0.3, -1 + 2j, 5j]:
        restriction = poly_restrict(P, nu)
        roots = fiber_roots(P, nu, seed=1).roots
        assert len(roots) == 6
        for r in roots:
            scale = np.sum(np.abs(restriction) * np.abs(r) ** np.arange(7))
            assert abs(np.polyval(restriction[::-1], r)) <= 1e-9 * scale
        assert np.allclose(sorted(roots, key=abs), sorted(np.roots(restriction[::-1]), key=abs), atol=1e-8)


def test_fiber_roots_multiple_root():
    triple = poly_pow(poly_add(U, poly_constant(-1)), 3)
    fiber = fiber_roots(triple, 0.5)
    assert np.allclose(fiber.roots, [1, 1, 1], atol=1e-4)
    assert fiber.distinct_roots(tol=1e-3)[0][1] == 3


def test_fiber_roots_seeded():
    P = poly_add(poly_pow(U, 5), poly_scale(V, 2))
    assert fiber_roots(P, 1, seed=3) == fiber_roots(P, 1, seed=3)


def test_proximity_estimate():
    assert np.isclose(proximity_estimate([P1], 0, 1), 1.0)
    assert np.isclose(proximity_estimate([P1], 0, 1, method="fiber"), np.sqrt(3))
    assert np.isclose(proximity_estimate([P1], 0, 1, method="newton"), 1.0)
    assert proximity_estimate([P1], 0, 1, ceiling=0.5) == 0.5
    assert proximity_estimate([], 3, 3, ceiling=2.0) == 2.0
    assert proximity_estimate([UV], 1, 0) == 0.0
    assert np.isclose(proximity_estimate([U], 0.25, 7), 0.25)

    with pytest.raises(ValueError):
        proximity_estimate([P1], 0, 1, method="exact")


def test_fiber_loci():
    loci = fiber_loci([U, UV], [0, 1])
    assert [(z, index) for z, index, _ in loci] == [(0, 0), (1, 0), (1, 1)]
    assert all(np.allclose(roots, [0]) for _, _, roots in loci)


def random_poly(rng, deg_u=3, deg_v=2):
    return BivariatePoly(rng.normal(size=(deg_u + 1, deg_v + 1)) + 1j * rng.normal(size=(deg_u + 1, deg_v + 1)))


def test_line_contained_agrees_with_fiber_roots():
    rng = np.random.default_rng(23)
    for _ in range(10):
        nu0 = complex(*rng.normal(size=2))
        P = poly_mul(poly_add(V, poly_constant(-nu0)), random_poly(rng))
        assert line_contained(P, nu0)
        with pytest.raises(LineContainedError):
            fiber_roots(P, nu0)

        nu = nu0 + 0.5 + rng.random()
        assert not line_contained(P, nu)
        fiber = fiber_roots(P, nu, seed=2)
        assert fiber.degree == P.deg_u - fiber.degree_drop


def test_proximity_vanishes_on_the_curve():
    rng = np.random.default_rng(29)
    for _ in range(10):
        P = random_poly(rng)
        nu = complex(*rng.normal(size=2))
        for u in fiber_roots(P, nu, seed=3).roots:
            assert proximity_estimate([P], u, nu) <= 1e-8 * (1 + abs(u))
