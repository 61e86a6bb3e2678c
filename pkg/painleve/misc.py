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

import math

import numpy as np

__all__ = [
    "parse_complex",
    "format_complex",
    "principal_root",
    "scaled_tolerance",
]


def parse_complex(value):
    """
    Reads a complex number written as "re+imi", e.g. "1+0i", "-0.5-2i",
    "3i", "-i" or "2.5". Plain ints, floats and complex numbers pass through.
    """

    if isinstance(value, bool):
        raise ValueError(f"not a complex number: {value!r}")
    if isinstance(value, (int, float, complex, np.number)):
        return complex(value)
    if not isinstance(value, str):
        raise ValueError(f"not a complex number: {value!r}")

    text = value.strip().replace(" ", "")
    if text.endswith(("i", "I")):
        text = text[:-1] + "j"
    try:
        return complex(text)
    except ValueError:
        raise ValueError(f"not a complex number: {value!r}") from None


def format_complex(value):
    """
    Inverse of parse_complex. Uses the shortest float reprs, so that
    parse_complex(format_complex(c)) == c bit for bit (signed zeros included).
    """

    value = complex(value)
    sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def principal_root(q, k):
    """
    The k-th root of q whose argument lies in (-pi/k, pi/k]; this is the
    branch that takes positive values on the positive real axis. Works
    elementwise on arrays.
    """

    q = np.asarray(q, dtype=np.complex128) + 0.0  # turns -0.0 imaginary parts into +0.0
    return np.abs(q) ** (1.0 / k) * np.exp(1j * np.angle(q) / k)


def scaled_tolerance(tol, *magnitudes):
    """
    Absolute tolerance tol*(1 + max of the given magnitudes).
    """

    scale = max([float(np.max(np.abs(m))) for m in magnitudes] + [0.0])
    return tol * (1.0 + scale)
