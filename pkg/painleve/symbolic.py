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
Symbolic side of the right-hand sides: conversion to sympy and the check
that a closed-form candidate w(z) satisfies w' = F(w(z), z).

z is declared positive, so sympy.root picks the branches that are positive
on the positive real axis, the same ones init_branches picks there.
"""

import logging
from dataclasses import dataclass

import sympy

from painleve.expression import (
    BinOp,
    Const,
    Neg,
    Pow,
    Rad,
    Var,
    uses_variable,
    parse_expression,
)

__all__ = [
    "W",
    "Z",
    "WORKED_EXAMPLE_RHS",
    "WORKED_EXAMPLE_SOLUTION",
    "SubstitutionCheck",
    "to_sympy",
    "substitution_check",
    "worked_example_check",
]

logger = logging.getLogger(__name__)

W = sympy.Symbol("w")
Z = sympy.Symbol("z", positive=True)

# The worked example: claimed solution sqrt(z) with w(1) = 1.
WORKED_EXAMPLE_RHS = "-rad(4, 8) * rad(2, 3*z + w^2) / (4 * rad(4, (z + w^2)^3))"
WORKED_EXAMPLE_SOLUTION = "rad(2, z)"


def _constant(value):
    value = complex(value)
    real = sympy.nsimplify(value.real, rational=True)
    imag = sympy.nsimplify(value.imag, rational=True)
    return real + sympy.I * imag


def _convert(node):
    if isinstance(node, Const):
        return _constant(node.value)
    if isinstance(node, Var):
        return W if node.name == "w" else Z
    if isinstance(node, Neg):
        return -_convert(node.operand)
    if isinstance(node, Pow):
        return _convert(node.base) ** node.exponent
    if isinstance(node, Rad):
        return sympy.root(_convert(node.radicand), node.k)

    left = _convert(node.left)
    right = _convert(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


def to_sympy(ast):
    """
    The sympy expression of a parsed right-hand side, in the symbols W, Z.
    """

    return _convert(ast.root)


@dataclass(frozen=True)
class SubstitutionCheck:
    rhs_on_solution: sympy.Expr
    derivative: sympy.Expr
    difference: sympy.Expr
    consistent: bool

    def as_dict(self):
        return {
            "rhs_on_solution": str(self.rhs_on_solution),
            "derivative": str(self.derivative),
            "difference": str(self.difference),
            "consistent": self.consistent,
        }


def substitution_check(ast, solution):
    """
    Substitutes the candidate solution (text or ExpressionAST in z only)
    into F and compares with its derivative.
    """

    if isinstance(solution, str):
        solution = parse_expression(solution)
    if uses_variable(solution.root, "w"):
        raise ValueError("the candidate solution must be an expression in z alone")

    w_of_z = to_sympy(solution)
    rhs = sympy.simplify(to_sympy(ast).subs(W, w_of_z))
    derivative = sympy.simplify(sympy.diff(w_of_z, Z))
    difference = sympy.simplify(rhs - derivative)
    consistent = bool(difference == 0 or difference.equals(0))

    logger.info("substituting %s into %r: F = %s, w' = %s", solution.text, ast.text, rhs, derivative)
    return SubstitutionCheck(rhs, derivative, difference, consistent)


def worked_example_check():
    """
    Runs substitution_check on the worked example and its claimed solution
    sqrt(z). With the positive branches F(sqrt(z), z) = -z^(-1/4)/2 while
    w' = z^(-1/2)/2, so the check reports an inconsistency.
    """

    return substitution_check(parse_expression(WORKED_EXAMPLE_RHS), WORKED_EXAMPLE_SOLUTION)
