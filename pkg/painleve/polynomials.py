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
Bivariate polynomials P(u, v) = sum c[i, j] u^i v^j over the complex numbers.

The singular set A of a right-hand side is kept as a list of such
polynomials, one per radicand or denominator factor, and is never expanded
into a single product.
"""

import logging
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from painleve.exceptions import LineContainedError, RootFindingError
from painleve.misc import scaled_tolerance

__all__ = [
    "BivariatePoly",
    "Fiber",
    "poly_from_terms",
    "poly_constant",
    "poly_u",
    "poly_v",
    "poly_eval",
    "poly_add",
    "poly_sub",
    "poly_scale",
    "poly_mul",
    "poly_pow",
    "poly_derivative",
    "poly_restrict",
    "poly_proportional",
    "line_contained",
    "contained_lines",
    "fiber_roots",
    "fiber_loci",
    "proximity_estimate",
]

logger = logging.getLogger(__name__)

CONTAINMENT_TOLERANCE = 1e-10
MAX_ITERATIONS = 200


@dataclass(frozen=True, eq=False)
class BivariatePoly:
    """
    coeffs[i, j] is the coefficient of u^i v^j. Trailing all-zero rows and
    columns are trimmed on construction; the zero polynomial is stored as
    [[0]] and flagged by is_zero.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_2d(np.array(self.coeffs, dtype=np.complex128))
        if c.size == 0:
            c = np.zeros((1, 1), dtype=np.complex128)

        rows = np.flatnonzero(np.any(c != 0, axis=1))
        cols = np.flatnonzero(np.any(c != 0, axis=0))
        if rows.size == 0:
            c = np.zeros((1, 1), dtype=np.complex128)
        else:
            c = c[: rows[-1] + 1, : cols[-1] + 1].copy()

        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def deg_u(self):
        return self.coeffs.shape[0] - 1

    @property
    def deg_v(self):
        return self.coeffs.shape[1] - 1

    @property
    def is_zero(self):
        return self.coeffs.shape == (1, 1) and self.coeffs[0, 0] == 0

    @property
    def is_constant(self):
        return self.coeffs.shape == (1, 1)

    @property
    def scale(self):
        return float(np.max(np.abs(self.coeffs)))

    def __call__(self, u, v):
        return poly_eval(self, u, v)

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and np.array_equal(
            self.coeffs, other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs.shape, self.coeffs.tobytes()))

    def __repr__(self):
        terms = []
        for (i, j), c in np.ndenumerate(self.coeffs):
            if c != 0:
                terms.append(f"({c})*u^{i}*v^{j}")
        return "BivariatePoly(" + (" + ".join(terms) or "0") + ")"


@dataclass(frozen=True)
class Fiber:
    """
    The roots in u of P(u, v_value), listed with repetition, so that their
    number equals the degree of the restriction once vanishing leading
    coefficients have been dropped (degree_drop of them).
    """

    v_value: complex
    roots: Tuple[complex, ...] = field(default_factory=tuple)
    degree_drop: int = 0

    @property
    def degree(self):
        return len(self.roots)

    def distinct_roots(self, tol=1e-6):
        """
        Groups coincident roots; returns a list of (root, multiplicity).
        """

        groups = []
        for r in self.roots:
            for g in groups:
                if abs(g[0] - r) <= scaled_tolerance(tol, r):
                    g[1].append(r)
                    break
            else:
                groups.append((r, [r]))
        return [(complex(np.mean(members)), len(members)) for _, members in groups]


def poly_from_terms(terms):
    """
    Builds a polynomial from a mapping {(i, j): coefficient of u^i v^j}.
    """

    if not terms:
        return BivariatePoly(np.zeros((1, 1)))
    deg_u = max(i for i, _ in terms)
    deg_v = max(j for _, j in terms)
    c = np.zeros((deg_u + 1, deg_v + 1), dtype=np.complex128)
    for (i, j), value in terms.items():
        c[i, j] += value
    return BivariatePoly(c)


def poly_constant(value):
    return BivariatePoly(np.array([[value]], dtype=np.complex128))


def poly_u():
    return poly_from_terms({(1, 0): 1.0})


def poly_v():
    return poly_from_terms({(0, 1): 1.0})


def poly_eval(P, u, v):
    """
    Horner in u of coefficients that are themselves Horner-evaluated in v.
    Broadcasts over arrays u and v.
    """

    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)

    result = np.zeros(np.broadcast(u, v).shape, dtype=np.complex128)
    for row in P.coeffs[::-1]:
        result = result * u + np.polyval(row[::-1], v)

    if result.ndim == 0:
        return complex(result)
    return result


def _padded(P, shape):
    c = np.zeros(shape, dtype=np.complex128)
    c[: P.coeffs.shape[0], : P.coeffs.shape[1]] = P.coeffs
    return c


def poly_add(P, Q):
    shape = (max(P.deg_u, Q.deg_u) + 1, max(P.deg_v, Q.deg_v) + 1)
    return BivariatePoly(_padded(P, shape) + _padded(Q, shape))


def poly_sub(P, Q):
    return poly_add(P, poly_scale(Q, -1.0))


def poly_scale(P, c):
    return BivariatePoly(complex(c) * P.coeffs)


def poly_mul(P, Q):
    c = np.zeros((P.deg_u + Q.deg_u + 1, P.deg_v + Q.deg_v + 1), dtype=np.complex128)
    for i, row in enumerate(P.coeffs):
        for k, other in enumerate(Q.coeffs):
            c[i + k] += np.convolve(row, other)
    return BivariatePoly(c)


def poly_pow(P, n):
    if n < 0:
        raise ValueError("polynomial powers must be nonnegative")
    result = poly_constant(1.0)
    for _ in range(n):
        result = poly_mul(result, P)
    return result


def poly_derivative(P, variable):
    """
    Partial derivative with respect to "u" or "v".
    """

    c = P.coeffs
    if variable == "u":
        if c.shape[0] == 1:
            return poly_constant(0.0)
        return BivariatePoly(c[1:] * np.arange(1, c.shape[0])[:, None])
    elif variable == "v":
        if c.shape[1] == 1:
            return poly_constant(0.0)
        return BivariatePoly(c[:, 1:] * np.arange(1, c.shape[1])[None, :])
    else:
        raise ValueError(f"unknown variable {variable!r}; use 'u' or 'v'")


def poly_restrict(P, nu):
    """
    Coefficients (ascending in u) of the univariate polynomial P(., nu).
    """

    nu = complex(nu)
    return np.array([np.polyval(row[::-1], nu) for row in P.coeffs], dtype=np.complex128)


def poly_proportional(P, Q, tol=1e-10):
    """
    True when Q = c*P for some nonzero constant c.
    """

    if P.coeffs.shape != Q.coeffs.shape or P.is_zero or Q.is_zero:
        return False
    index = np.unravel_index(np.argmax(np.abs(P.coeffs)), P.coeffs.shape)
    c = Q.coeffs[index] / P.coeffs[index]
    if c == 0:
        return False
    return float(np.max(np.abs(Q.coeffs - c * P.coeffs))) <= tol * Q.scale


def line_contained(P, nu, tol=CONTAINMENT_TOLERANCE):
    """
    Whether the complex line v = nu lies inside {P = 0}, i.e. whether every
    coefficient of P(., nu) vanishes (relative to the size of P).
    """

    restriction = poly_restrict(P, nu)
    return bool(np.all(np.abs(restriction) <= scaled_tolerance(tol, P.scale)))


def _aberth(a, rng, max_iter):
    """
    Simultaneous Aberth-Ehrlich iteration for the monic polynomial with
    ascending coefficients a. Returns (roots, converged).
    """

    n = a.size - 1
    bound = 1.0 + np.max(np.abs(a[:-1]))
    phase = rng.uniform(0, 2 * np.pi)
    x = bound * np.exp(1j * (phase + 2 * np.pi * np.arange(n) / n))

    desc = a[::-1]
    ddesc = np.polyder(desc)

    with np.errstate(all="ignore"):
        for iteration in range(max_iter):
            pv = np.polyval(desc, x)
            dpv = np.polyval(ddesc, x)

            diff = x[:, None] - x[None, :]
            np.fill_diagonal(diff, 1.0)
            sums = (1.0 / diff).sum(axis=1) - 1.0

            ratio = pv / dpv
            delta = ratio / (1.0 - ratio * sums)
            delta = np.where(pv == 0, 0.0, delta)
            if not np.all(np.isfinite(delta)):
                return x, False

            x = x - delta
            if np.all(np.abs(delta) <= 1e-14 * (1.0 + np.abs(x))):
                logger.debug("Aberth converged after %d iterations", iteration + 1)
                return x, True

    return x, False


def _durand_kerner(a, rng, max_iter):
    n = a.size - 1
    bound = 1.0 + np.max(np.abs(a[:-1]))
    x = bound * (0.4 + 0.9j) ** np.arange(n) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    desc = a[::-1]

    with np.errstate(all="ignore"):
        for _ in range(max_iter):
            diff = x[:, None] - x[None, :]
            np.fill_diagonal(diff, 1.0)
            delta = np.polyval(desc, x) / diff.prod(axis=1)
            if not np.all(np.isfinite(delta)):
                return x, False
            x = x - delta
            if np.all(np.abs(delta) <= 1e-14 * (1.0 + np.abs(x))):
                return x, True

    return x, False


def _polish(a, x, steps=3):
    desc = a[::-1]
    ddesc = np.polyder(desc)
    with np.errstate(all="ignore"):
        for _ in range(steps):
            pv = np.polyval(desc, x)
            dpv = np.polyval(ddesc, x)
            candidate = x - pv / dpv
            better = np.isfinite(candidate) & (
                np.abs(np.polyval(desc, candidate)) < np.abs(pv)
            )
            x = np.where(better, candidate, x)
    return x


def _acceptable(a, x, tol):
    """
    Backward-error test on the monic polynomial a.
    """

    scale = np.polyval(np.abs(a[::-1]), np.abs(x))
    return bool(np.all(np.abs(np.polyval(a[::-1], x)) <= tol * (1.0 + scale)))


def fiber_roots(P, nu, seed=0, tol=CONTAINMENT_TOLERANCE, max_iter=MAX_ITERATIONS):
    """
    All roots u of P(u, nu) = 0.

    Leading coefficients that vanish at nu are trimmed (the number trimmed
    is reported as degree_drop). The roots come from the Aberth method with
    random circular initialisation (seeded), with Durand-Kerner as fallback,
    and are finished by Newton polishing.
    """

    nu = complex(nu)
    restriction = poly_restrict(P, nu)
    threshold = scaled_tolerance(tol, P.scale)
    significant = np.flatnonzero(np.abs(restriction) > threshold)
    if significant.size == 0:
        raise LineContainedError(f"the line v = {nu} lies in {{P = 0}}")

    degree = int(significant[-1])
    drop = P.deg_u - degree
    if drop:
        logger.warning("fiber at v = %s: degree drops by %d", nu, drop)
    if degree == 0:
        return Fiber(nu, (), drop)

    a = restriction[: degree + 1] / restriction[degree]
    if degree == 1:
        return Fiber(nu, (complex(-a[0]),), drop)

    rng = np.random.default_rng(seed)
    x, converged = _aberth(a, rng, max_iter)
    if not converged and not _acceptable(a, x, 1e-12):
        logger.warning("Aberth did not converge at v = %s; trying Durand-Kerner", nu)
        x, converged = _durand_kerner(a, rng, max_iter)
        if not converged and not _acceptable(a, x, 1e-12):
            raise RootFindingError(
                f"no convergence for the fiber at v = {nu} after {max_iter} iterations"
            )

    x = _polish(a, x)
    roots = sorted((complex(r) for r in x), key=lambda r: (round(r.real, 10), round(r.imag, 10)))
    return Fiber(nu, tuple(roots), drop)


def _component_distance(P, w, z, method, gradient_floor, seed):
    if line_contained(P, z):
        return 0.0

    candidates = []
    if method in ("min", "fiber"):
        try:
            fiber = fiber_roots(P, z, seed=seed)
        except RootFindingError as exc:
            logger.warning("fiber part of the proximity estimate skipped: %s", exc)
        else:
            if fiber.roots:
                candidates.append(min(abs(w - r) for r in fiber.roots))

    if method in ("min", "newton"):
        value = abs(poly_eval(P, w, z))
        gradient = np.hypot(
            abs(poly_eval(poly_derivative(P, "u"), w, z)),
            abs(poly_eval(poly_derivative(P, "v"), w, z)),
        )
        if gradient > gradient_floor:
            candidates.append(value / gradient)
        elif value == 0 or method == "newton":
            candidates.append(0.0)

    if not candidates:
        return np.inf
    return float(min(candidates))


def proximity_estimate(
    components, w, z, ceiling=np.inf, method="min", gradient_floor=1e-12, seed=0
):
    """
    Estimated distance from the point (u, v) = (w, z) to the union of the
    curves {P = 0}.

    For every component two estimates are available: the distance in u to
    the nearest root of P(., z) ("fiber") and the first-order Newton
    estimate |P| / |grad P| ("newton"); method="min" takes the smaller.
    The minimum over components is capped at ceiling. A component containing
    the whole line v = z gives 0.
    """

    if method not in ("min", "fiber", "newton"):
        raise ValueError(f"unknown proximity method {method!r}")

    w = complex(w)
    z = complex(z)
    best = float(ceiling)
    for P in components:
        best = min(best, _component_distance(P, w, z, method, gradient_floor, seed))
        if best == 0.0:
            break
    return max(best, 0.0)


def fiber_loci(components, zs, seed=0):
    """
    Samples the fibers of every component over the given values of v.
    Returns a list of (z, component index, roots); lines contained in a
    component are skipped.
    """

    loci = []
    for z in zs:
        for index, P in enumerate(components):
            if line_contained(P, z):
                continue
            loci.append((complex(z), index, fiber_roots(P, z, seed=seed).roots))
    return loci


def contained_lines(P, tol=CONTAINMENT_TOLERANCE):
    """
    All nu for which the line v = nu lies in {P = 0}: the common roots of the
    coefficients of P as a polynomial in u.
    """

    if P.is_zero:
        raise ValueError("the zero polynomial contains every line")

    rows = [np.trim_zeros(row, "b") for row in P.coeffs]
    rows = [row for row in rows if row.size > 0]
    shortest = min(rows, key=len)
    if shortest.size == 1:
        return []

    return [complex(nu) for nu in np.roots(shortest[::-1]) if line_contained(P, nu, tol)]
