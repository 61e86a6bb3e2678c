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
Truncated power series sum_k c_k (z - center)^k with complex coefficients.

A TaylorSeries is immutable. Binary operations truncate to the smaller of
the two orders and keep the smaller validity radius.
"""

from dataclasses import dataclass

import numpy as np

from painleve.exceptions import PoleError, SeriesError
from painleve.misc import scaled_tolerance

__all__ = [
    "TaylorSeries",
    "constant_series",
    "variable_series",
    "series_truncate",
    "series_eval",
    "series_derivative",
    "series_add",
    "series_sub",
    "series_scale",
    "series_mul",
    "series_inverse",
    "series_div",
    "series_pow",
    "series_integrate",
    "series_kth_root",
]


@dataclass(frozen=True, eq=False)
class TaylorSeries:
    center: complex
    coeffs: np.ndarray
    validity_radius: float = np.inf

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.complex128).ravel()
        if coeffs.size == 0:
            raise ValueError("a TaylorSeries needs at least one coefficient")
        if not self.validity_radius >= 0:
            raise ValueError("validity_radius must be nonnegative")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "validity_radius", float(self.validity_radius))

    @property
    def order(self):
        return self.coeffs.size - 1

    def __call__(self, z):
        return series_eval(self, z)

    def __len__(self):
        return self.coeffs.size

    def __repr__(self):
        return (
            f"TaylorSeries(center={self.center}, order={self.order}, "
            f"validity_radius={self.validity_radius})"
        )


def constant_series(value, center, order=0, validity_radius=np.inf):
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    coeffs[0] = value
    return TaylorSeries(center, coeffs, validity_radius)


def variable_series(center, order):
    """
    The identity function z, expanded about center.
    """

    coeffs = np.zeros(order + 1, dtype=np.complex128)
    coeffs[0] = center
    if order >= 1:
        coeffs[1] = 1.0
    return TaylorSeries(center, coeffs)


def series_truncate(s, order):
    if order >= s.order:
        return s
    return TaylorSeries(s.center, s.coeffs[: order + 1], s.validity_radius)


def series_eval(s, z):
    """
    Horner evaluation at z (scalar or array).
    """

    h = np.asarray(z, dtype=np.complex128) - s.center
    result = np.zeros_like(h) + s.coeffs[-1]
    for c in s.coeffs[-2::-1]:
        result = result * h + c
    if result.ndim == 0:
        return complex(result)
    return result


def series_derivative(s):
    if s.order == 0:
        return TaylorSeries(s.center, [0.0], s.validity_radius)
    k = np.arange(1, s.order + 1)
    return TaylorSeries(s.center, s.coeffs[1:] * k, s.validity_radius)


def _common(s, t):
    if abs(s.center - t.center) > 1e-14 * (1.0 + abs(s.center)):
        raise SeriesError(f"mismatched centers {s.center} and {t.center}")
    return min(s.order, t.order), min(s.validity_radius, t.validity_radius)


def series_add(s, t):
    n, radius = _common(s, t)
    return TaylorSeries(s.center, s.coeffs[: n + 1] + t.coeffs[: n + 1], radius)


def series_sub(s, t):
    n, radius = _common(s, t)
    return TaylorSeries(s.center, s.coeffs[: n + 1] - t.coeffs[: n + 1], radius)


def series_scale(s, c):
    return TaylorSeries(s.center, complex(c) * s.coeffs, s.validity_radius)


def series_mul(s, t):
    """
    Cauchy product, truncated to the smaller order of s and t.
    """

    n, radius = _common(s, t)
    coeffs = np.convolve(s.coeffs[: n + 1], t.coeffs[: n + 1])[: n + 1]
    return TaylorSeries(s.center, coeffs, radius)


def series_inverse(s, tol=0.0):
    """
    Reciprocal series 1/s. The constant term must not vanish (|c_0| > tol).
    """

    a = s.coeffs
    if abs(a[0]) <= tol:
        raise PoleError(f"series has a vanishing constant term at {s.center}")

    b = np.zeros_like(a)
    b[0] = 1.0 / a[0]
    for n in range(1, a.size):
        b[n] = -np.dot(a[1 : n + 1], b[n - 1 :: -1]) / a[0]

    return TaylorSeries(s.center, b, s.validity_radius)


def series_div(s, t, tol=0.0):
    return series_mul(s, series_inverse(t, tol))


def series_pow(s, n, tol=0.0):
    """
    Integer power s^n; negative n goes through series_inverse.
    """

    n = int(n)
    if n < 0:
        return series_pow(series_inverse(s, tol), -n)

    result = constant_series(1.0, s.center, s.order, s.validity_radius)
    base = s
    while n:
        if n & 1:
            result = series_mul(result, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return result


def series_integrate(s, constant):
    """
    Antiderivative with the given constant term: c_k -> c_k/(k+1) moved one
    degree up, so the result has order s.order + 1.
    """

    coeffs = np.empty(s.order + 2, dtype=np.complex128)
    coeffs[0] = constant
    coeffs[1:] = s.coeffs / np.arange(1, s.order + 2)
    return TaylorSeries(s.center, coeffs, s.validity_radius)


def series_kth_root(q, k, root_at_center, tol=1e-8):
    """
    The series s with s^k = q and s(center) = root_at_center.

    The coefficients follow from k q s' = q' s, solved order by order:

        (n+1) q_0 s_{n+1} = (1/k) sum_{m=1}^{n+1} m q_m s_{n+1-m}
                            - sum_{m=1}^{n} m s_m q_{n+1-m}

    root_at_center selects the branch and must be a k-th root of q_0.
    """

    k = int(k)
    if k < 1:
        raise ValueError("k must be a positive integer")

    a = q.coeffs
    if a[0] == 0:
        raise SeriesError(f"branch point at the center {q.center}: constant term vanishes")

    root = complex(root_at_center)
    if abs(root**k - a[0]) > scaled_tolerance(tol, a[0]):
        raise SeriesError(
            f"{root} is not a {k}-th root of the constant term {complex(a[0])}"
        )

    s = np.zeros_like(a)
    s[0] = root
    weights = np.arange(a.size, dtype=float)
    for n in range(a.size - 1):
        total = np.dot(weights[1 : n + 2] * a[1 : n + 2], s[n::-1]) / k
        if n:
            total -= np.dot(weights[1 : n + 1] * s[1 : n + 1], a[n:0:-1])
        s[n + 1] = total / ((n + 1) * a[0])

    return TaylorSeries(q.center, s, q.validity_radius)
