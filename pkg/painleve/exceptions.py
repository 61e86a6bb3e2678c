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
Errors raised by the painleve package.

Everything derives from PainleveError, so callers (the command-line front
end in particular) can separate numerical trouble from programming errors.
"""

__all__ = [
    "PainleveError",
    "ExpressionError",
    "SeriesError",
    "PoleError",
    "BranchPointError",
    "AmbiguousSheetError",
    "LineContainedError",
    "RootFindingError",
    "SampleEvaluationError",
    "ResidualError",
    "HypothesisError",
    "BoundaryExtensionError",
    "TraceTooShortError",
    "MonodromyError",
    "ConfigError",
]


class PainleveError(Exception):
    pass


class ExpressionError(PainleveError):
    """
    Raised for malformed right-hand sides. position is the character offset
    in the source text (None when the problem is structural rather than
    syntactic) and expected names what the parser was looking for.
    """

    def __init__(self, message, position=None, expected=None):
        self.position = position
        self.expected = expected
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SeriesError(PainleveError):
    pass


class PoleError(SeriesError):
    pass


class BranchPointError(PainleveError):
    pass


class AmbiguousSheetError(PainleveError):
    pass


class LineContainedError(PainleveError):
    pass


class RootFindingError(PainleveError):
    pass


class SampleEvaluationError(PainleveError):
    def __init__(self, message, location=None):
        self.location = location
        super().__init__(message)


class ResidualError(PainleveError):
    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class HypothesisError(PainleveError):
    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class BoundaryExtensionError(PainleveError):
    pass


class TraceTooShortError(PainleveError):
    pass


class MonodromyError(PainleveError):
    pass


class ConfigError(PainleveError):
    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)
