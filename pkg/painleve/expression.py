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
Right-hand sides F(w, z) with radicals of polynomials.

Grammar (whitespace is ignored):

    expression = term, { ("+" | "-"), term }
    term       = unary, { ("*" | "/"), unary }
    unary      = ("+" | "-"), unary | power
    power      = atom, [ "^", [ "+" | "-" ], integer ]
    atom       = number | number "i" | "i" | "w" | "z"
               | "rad", "(", integer, ",", expression, ")"
               | "(", expression, ")"

rad(k, q) is a k-th root (k >= 2) of a polynomial q(w, z). Denominators must
be products of constants, polynomials and radicals, so that the poles and
branch points of F lie on algebraic curves.

Every rad node carries a sheet value in a BranchState. Sheets are moved
along segments by continuity: at each step the new sheet is the k-th root
of the new radicand value nearest in argument to the previous sheet.
"""

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum, auto
from typing import Tuple

import numpy as np

from painleve.exceptions import (
    AmbiguousSheetError,
    BranchPointError,
    ExpressionError,
    PoleError,
    SampleEvaluationError,
    SeriesError,
)
from painleve.misc import principal_root, scaled_tolerance
from painleve.polynomials import (
    BivariatePoly,
    poly_add,
    poly_constant,
    poly_eval,
    poly_mul,
    poly_pow,
    poly_proportional,
    poly_scale,
    poly_sub,
    poly_u,
    poly_v,
)
from painleve.series import (
    constant_series,
    series_add,
    series_div,
    series_kth_root,
    series_mul,
    series_pow,
    series_scale,
    series_sub,
    series_truncate,
    variable_series,
)

__all__ = [
    "Const",
    "Var",
    "Neg",
    "BinOp",
    "Pow",
    "Rad",
    "ExpressionAST",
    "BranchState",
    "PRINCIPAL_POSITIVE_REAL",
    "parse_expression",
    "parse_polynomial",
    "to_polynomial",
    "init_branches",
    "branches_from_values",
    "transport_branches",
    "evaluate",
    "eval_with_branches",
    "eval_transported",
    "eval_series",
    "singular_set",
    "uses_variable",
]

logger = logging.getLogger(__name__)

PRINCIPAL_POSITIVE_REAL = "principal-positive-real"

POLE_TOLERANCE = 1e-12
CONTINUITY_FLOOR = 1e-12

# Largest exponent or rad index accepted by the parser.
MAX_INTEGER = 64

# A transport step is accepted when the radicand turns by at most this angle.
MAX_TURN = np.pi / 4


# Abstract syntax tree ###########################################################


@dataclass(frozen=True)
class Const:
    value: complex


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True, eq=False)
class Rad:
    """
    rad(k, radicand). index numbers the radical nodes in source order;
    poly is the radicand as a polynomial in (u, v) = (w, z) and factors its
    structural non-constant factors, e.g. (z + w^2)^3 has the factor z + w^2.
    """

    k: int
    radicand: object
    index: int
    poly: BivariatePoly
    factors: Tuple[BivariatePoly, ...]


@dataclass(frozen=True, eq=False)
class ExpressionAST:
    text: str
    root: object
    radicals: Tuple[Rad, ...]
    denominator_factors: Tuple[BivariatePoly, ...]

    @property
    def sheet_count(self):
        """
        Number of sheets of the radical covering (product of the indices).
        """

        return math.prod(rad.k for rad in self.radicals)

    def __repr__(self):
        return f"ExpressionAST({self.text!r})"


@dataclass(frozen=True)
class BranchState:
    """
    Current sheet value of every rad node, in index order.
    """

    sheets: Tuple[complex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sheets", tuple(complex(s) for s in self.sheets))

    def replace(self, index, value):
        sheets = list(self.sheets)
        sheets[index] = complex(value)
        return BranchState(tuple(sheets))


# Tokenizer ######################################################################


class TokenId(Enum):
    NUMBER = auto()
    IMAGINARY = auto()
    NAME = auto()
    PLUS = auto()
    MINUS = auto()
    STAR = auto()
    SLASH = auto()
    CARET = auto()
    LPAREN = auto()
    RPAREN = auto()
    COMMA = auto()
    END = auto()


@dataclass(frozen=True)
class Token:
    token_id: TokenId
    text: str
    position: int


_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"

_TOKEN_PATTERNS = [
    (re.compile(r"\s+"), None),
    (re.compile(_NUMBER + r"i(?![A-Za-z0-9_])"), TokenId.IMAGINARY),
    (re.compile(_NUMBER), TokenId.NUMBER),
    (re.compile(r"[A-Za-z_][A-Za-z0-9_]*"), TokenId.NAME),
    (re.compile(r"\+"), TokenId.PLUS),
    (re.compile(r"-"), TokenId.MINUS),
    (re.compile(r"\*"), TokenId.STAR),
    (re.compile(r"/"), TokenId.SLASH),
    (re.compile(r"\^"), TokenId.CARET),
    (re.compile(r"\("), TokenId.LPAREN),
    (re.compile(r"\)"), TokenId.RPAREN),
    (re.compile(r","), TokenId.COMMA),
]


def tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        for pattern, token_id in _TOKEN_PATTERNS:
            m = pattern.match(text, position)
            if m:
                if token_id is not None:
                    tokens.append(Token(token_id, m.group(0), position))
                position = m.end()
                break
        else:
            raise ExpressionError(
                f"unexpected character {text[position]!r}", position, "a token"
            )
    tokens.append(Token(TokenId.END, "", len(text)))
    return tokens


# Polynomial structure ###########################################################


def to_polynomial(node):
    """
    The node as a BivariatePoly in (u, v) = (w, z), or None when it is not
    a polynomial (radicals, division by non-constants, negative powers).
    """

    if isinstance(node, ExpressionAST):
        node = node.root

    if isinstance(node, Const):
        return poly_constant(node.value)
    if isinstance(node, Var):
        return poly_u() if node.name == "w" else poly_v()
    if isinstance(node, Neg):
        inner = to_polynomial(node.operand)
        return None if inner is None else poly_scale(inner, -1.0)
    if isinstance(node, Pow):
        if node.exponent < 0:
            return None
        inner = to_polynomial(node.base)
        return None if inner is None else poly_pow(inner, node.exponent)
    if isinstance(node, BinOp):
        left = to_polynomial(node.left)
        if left is None:
            return None
        if node.op == "/":
            if isinstance(node.right, Const) and node.right.value != 0:
                return poly_scale(left, 1.0 / node.right.value)
            return None
        right = to_polynomial(node.right)
        if right is None:
            return None
        if node.op == "+":
            return poly_add(left, right)
        if node.op == "-":
            return poly_sub(left, right)
        return poly_mul(left, right)
    return None


def _polynomial_factors(node):
    """
    Non-constant factors of a polynomial node, read off its product and
    power structure.
    """

    if isinstance(node, Const):
        return []
    if isinstance(node, Neg):
        return _polynomial_factors(node.operand)
    if isinstance(node, Pow):
        return _polynomial_factors(node.base) if node.exponent > 0 else []
    if isinstance(node, BinOp) and node.op == "*":
        return _polynomial_factors(node.left) + _polynomial_factors(node.right)
    if isinstance(node, BinOp) and node.op == "/":
        return _polynomial_factors(node.left)

    poly = to_polynomial(node)
    return [] if poly.is_constant else [poly]


def _zero_factors(node, position):
    """
    Polynomial factors whose zero sets contain the zeros of node, for a node
    that may appear in a denominator.
    """

    if isinstance(node, Const):
        if node.value == 0:
            raise ExpressionError("division by zero", position)
        return []
    if to_polynomial(node) is not None:
        poly = to_polynomial(node)
        if poly.is_zero:
            raise ExpressionError("denominator is identically zero", position)
        return _polynomial_factors(node)
    if isinstance(node, Rad):
        return list(node.factors)
    if isinstance(node, Neg):
        return _zero_factors(node.operand, position)
    if isinstance(node, Pow):
        return _zero_factors(node.base, position) if node.exponent > 0 else []
    if isinstance(node, BinOp) and node.op == "*":
        return _zero_factors(node.left, position) + _zero_factors(node.right, position)
    if isinstance(node, BinOp) and node.op == "/":
        return _zero_factors(node.left, position)

    raise ExpressionError(
        "non-polynomial denominator: only products of polynomials and radicals "
        "may be divided by",
        position,
    )


def uses_variable(node, name):
    if isinstance(node, Var):
        return node.name == name
    if isinstance(node, Neg):
        return uses_variable(node.operand, name)
    if isinstance(node, Pow):
        return uses_variable(node.base, name)
    if isinstance(node, BinOp):
        return uses_variable(node.left, name) or uses_variable(node.right, name)
    if isinstance(node, Rad):
        return uses_variable(node.radicand, name)
    return False


# Parser #########################################################################


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.radicals = []
        self.denominator_factors = []

    def look(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def match(self, token_id, expected):
        token = self.look()
        if token.token_id != token_id:
            found = token.text or "end of input"
            raise ExpressionError(f"expected {expected}, found {found!r}", token.position, expected)
        return self.advance()

    def parse(self):
        root = self.expression()
        self.match(TokenId.END, "end of input")
        return root

    def expression(self):
        tree = self.term()
        while self.look().token_id in (TokenId.PLUS, TokenId.MINUS):
            op = self.advance()
            tree = BinOp(op.text, tree, self.term())
        return tree

    def term(self):
        tree = self.unary()
        while self.look().token_id in (TokenId.STAR, TokenId.SLASH):
            op = self.advance()
            start = self.look().position
            right = self.unary()
            if op.token_id == TokenId.SLASH:
                self.denominator_factors.extend(_zero_factors(right, start))
            tree = BinOp(op.text, tree, right)
        return tree

    def unary(self):
        if self.look().token_id == TokenId.MINUS:
            self.advance()
            return Neg(self.unary())
        if self.look().token_id == TokenId.PLUS:
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        start = self.look().position
        base = self.atom()
        if self.look().token_id != TokenId.CARET:
            return base

        self.advance()
        sign = 1
        if self.look().token_id in (TokenId.PLUS, TokenId.MINUS):
            sign = -1 if self.advance().token_id == TokenId.MINUS else 1
        exponent = self.integer("an integer exponent")
        if sign * exponent < 0:
            self.denominator_factors.extend(_zero_factors(base, start))
        return Pow(base, sign * exponent)

    def integer(self, expected):
        token = self.look()
        if token.token_id != TokenId.NUMBER:
            found = token.text or "end of input"
            raise ExpressionError(f"expected {expected}, found {found!r}", token.position, expected)
        if not token.text.isdigit():
            raise ExpressionError(f"expected {expected}, found {token.text!r}", token.position, expected)
        value = int(token.text)
        if value > MAX_INTEGER:
            raise ExpressionError(
                f"{token.text} exceeds the largest accepted integer {MAX_INTEGER}", token.position, expected
            )
        self.advance()
        return value

    def atom(self):
        token = self.look()

        if token.token_id == TokenId.NUMBER:
            self.advance()
            return Const(complex(float(token.text)))
        if token.token_id == TokenId.IMAGINARY:
            self.advance()
            return Const(complex(0.0, float(token.text[:-1])))
        if token.token_id == TokenId.LPAREN:
            self.advance()
            tree = self.expression()
            self.match(TokenId.RPAREN, "')'")
            return tree
        if token.token_id == TokenId.NAME:
            if token.text in ("w", "z"):
                self.advance()
                return Var(token.text)
            if token.text == "i":
                self.advance()
                return Const(1j)
            if token.text == "rad":
                return self.radical()
            raise ExpressionError(
                f"unknown name {token.text!r}", token.position, "w, z, i or rad"
            )

        found = token.text or "end of input"
        raise ExpressionError(
            f"expected a number, variable, rad(...) or '(', found {found!r}",
            token.position,
            "an operand",
        )

    def radical(self):
        self.advance()
        self.match(TokenId.LPAREN, "'(' after rad")
        k_token = self.look()
        k = self.integer("the rad index")
        if k < 2:
            raise ExpressionError("rad index must be ≥ 2", k_token.position, "an integer >= 2")
        self.match(TokenId.COMMA, "','")

        start = self.look().position
        radicand = self.expression()
        self.match(TokenId.RPAREN, "')'")

        poly = to_polynomial(radicand)
        if poly is None:
            raise ExpressionError(
                "non-polynomial radicand: rad needs a polynomial in w and z", start
            )
        if poly.is_zero:
            raise ExpressionError("radicand is identically zero", start)

        rad = Rad(k, radicand, len(self.radicals), poly, tuple(_polynomial_factors(radicand)))
        self.radicals.append(rad)
        return rad


def parse_expression(text):
    """
    Parses a right-hand side F(w, z). Errors carry the offending position.
    """

    parser = _Parser(text)
    root = parser.parse()
    ast = ExpressionAST(text, root, tuple(parser.radicals), tuple(parser.denominator_factors))
    logger.debug(
        "parsed %r: %d radicals, %d denominator factors",
        text,
        len(ast.radicals),
        len(ast.denominator_factors),
    )
    return ast


def parse_polynomial(text):
    """
    Parses text that must reduce to a polynomial in (w, z).
    """

    ast = parse_expression(text)
    poly = to_polynomial(ast.root)
    if poly is None:
        raise ExpressionError(f"{text!r} is not a polynomial in w and z")
    return poly


def singular_set(ast):
    """
    Components of the singular set A: the distinct radicand factors (branch
    locus) and denominator factors (poles), up to scalar multiples.
    """

    candidates = [f for rad in ast.radicals for f in rad.factors]
    candidates += list(ast.denominator_factors)

    components = []
    for P in candidates:
        if not any(poly_proportional(Q, P) for Q in components):
            components.append(P)
    return components


# Branches #######################################################################


def init_branches(ast, w, z, convention=PRINCIPAL_POSITIVE_REAL, floor=CONTINUITY_FLOOR):
    """
    Initial sheets at (w, z): every rad(k, q) gets the k-th root of q(w, z)
    with argument in (-pi/k, pi/k], which is positive on the positive real
    axis.
    """

    if convention != PRINCIPAL_POSITIVE_REAL:
        raise ValueError(
            f"unknown branch convention {convention!r}; supply sheet values instead"
        )

    sheets = []
    for rad in ast.radicals:
        q = poly_eval(rad.poly, w, z)
        if abs(q) <= floor:
            raise BranchPointError(
                f"radicand of rad #{rad.index} vanishes at (w, z) = ({w}, {z})"
            )
        sheets.append(complex(principal_root(q, rad.k)))
    return BranchState(tuple(sheets))


def branches_from_values(ast, w, z, values, tol=1e-8, floor=CONTINUITY_FLOOR):
    """
    A BranchState from explicitly chosen sheet values, checked against the
    radicands at (w, z).
    """

    values = [complex(v) for v in values]
    if len(values) != len(ast.radicals):
        raise ValueError(
            f"expected {len(ast.radicals)} sheet values, got {len(values)}"
        )
    for rad, value in zip(ast.radicals, values):
        q = poly_eval(rad.poly, w, z)
        if abs(q) <= floor:
            raise BranchPointError(
                f"radicand of rad #{rad.index} vanishes at (w, z) = ({w}, {z})"
            )
        if abs(value**rad.k - q) > scaled_tolerance(tol, q):
            raise ValueError(
                f"sheet value {value} of rad #{rad.index} is not a {rad.k}-th root of {q}"
            )
    return BranchState(tuple(values))


def _turn(a, b):
    return abs(np.angle(b / a))


def _transport_sheet(rad, sheet, p0, p1, floor, depth):
    q0 = poly_eval(rad.poly, *p0)
    mid = ((p0[0] + p1[0]) / 2, (p0[1] + p1[1]) / 2)
    qm = poly_eval(rad.poly, *mid)
    q1 = poly_eval(rad.poly, *p1)

    if abs(q1) <= floor or abs(qm) <= floor:
        raise AmbiguousSheetError(
            f"radicand of rad #{rad.index} falls below the continuity floor "
            f"between {p0} and {p1}"
        )

    if _turn(q0, qm) <= MAX_TURN and _turn(qm, q1) <= MAX_TURN:
        return sheet * complex(principal_root(qm / q0, rad.k)) * complex(
            principal_root(q1 / qm, rad.k)
        )

    if depth == 0:
        raise AmbiguousSheetError(
            f"cannot follow the sheet of rad #{rad.index} from {p0} to {p1}"
        )
    sheet = _transport_sheet(rad, sheet, p0, mid, floor, depth - 1)
    return _transport_sheet(rad, sheet, mid, p1, floor, depth - 1)


def transport_branches(ast, state, prev_point, point, floor=CONTINUITY_FLOOR, max_depth=40):
    """
    Moves every sheet by continuity along the straight segment from
    prev_point to point in C^2, bisecting the segment where the radicand
    turns too fast.
    """

    p0 = (complex(prev_point[0]), complex(prev_point[1]))
    p1 = (complex(point[0]), complex(point[1]))
    sheets = [
        _transport_sheet(rad, state.sheets[rad.index], p0, p1, floor, max_depth)
        for rad in ast.radicals
    ]
    return BranchState(tuple(sheets))


# Evaluation #####################################################################


def _evaluate(node, w, z, sheets, pole_tol):
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return w if node.name == "w" else z
    if isinstance(node, Neg):
        return -_evaluate(node.operand, w, z, sheets, pole_tol)
    if isinstance(node, Rad):
        return sheets[node.index]
    if isinstance(node, Pow):
        base = _evaluate(node.base, w, z, sheets, pole_tol)
        if node.exponent < 0 and np.any(np.abs(base) <= pole_tol):
            raise PoleError("pole of F: a negative power of a vanishing base")
        return base ** node.exponent if node.exponent >= 0 else (1.0 / base) ** (-node.exponent)

    left = _evaluate(node.left, w, z, sheets, pole_tol)
    right = _evaluate(node.right, w, z, sheets, pole_tol)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if np.any(np.abs(right) <= pole_tol):
        raise PoleError("pole of F: denominator below the pole tolerance")
    return left / right


def evaluate(ast, w, z, state, pole_tol=POLE_TOLERANCE):
    """
    F(w, z) on the sheets given by state (no transport).
    """

    value = _evaluate(ast.root, w, z, state.sheets, pole_tol)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def eval_with_branches(
    ast, w, z, state, prev_point, pole_tol=POLE_TOLERANCE, floor=CONTINUITY_FLOOR
):
    """
    Moves the sheets from prev_point to (w, z) by continuity and evaluates
    F there. Returns (value, new state).
    """

    new_state = transport_branches(ast, state, prev_point, (w, z), floor)
    return evaluate(ast, w, z, new_state, pole_tol), new_state


def eval_transported(
    ast, state, base_point, W, Z, substeps=8, pole_tol=POLE_TOLERANCE, floor=CONTINUITY_FLOOR
):
    """
    Vectorised evaluation of F on arrays (W, Z), with every sheet carried
    radially from base_point, where state is valid. The radial segments are
    walked in substeps; a substep on which a radicand drops below floor or
    turns by more than pi/2 is reported as a SampleEvaluationError.
    """

    w0, z0 = complex(base_point[0]), complex(base_point[1])
    W = np.asarray(W, dtype=np.complex128)
    Z = np.asarray(Z, dtype=np.complex128)

    sheets = []
    with np.errstate(all="ignore"):
        for rad in ast.radicals:
            sheet = np.full(np.broadcast(W, Z).shape, state.sheets[rad.index])
            q_prev = np.full(sheet.shape, poly_eval(rad.poly, w0, z0))
            for s in np.linspace(0.0, 1.0, substeps + 1)[1:]:
                q = poly_eval(rad.poly, w0 + s * (W - w0), z0 + s * (Z - z0))
                ratio = q / q_prev
                bad = (np.abs(q) <= floor) | (np.abs(np.angle(ratio)) > np.pi / 2)
                if bad.any():
                    i = np.unravel_index(np.argmax(bad), bad.shape)
                    location = (complex(np.broadcast_to(W, bad.shape)[i]),
                                complex(np.broadcast_to(Z, bad.shape)[i]))
                    raise SampleEvaluationError(
                        f"sheet of rad #{rad.index} is ambiguous near u={location[0]}, "
                        f"v={location[1]}",
                        location=location,
                    )
                sheet = sheet * principal_root(ratio, rad.k)
                q_prev = q
            sheets.append(sheet)

        return _evaluate(ast.root, W, Z, sheets, pole_tol)


def _series(node, w_series, z0, sheets, order, pole_tol):
    if isinstance(node, Const):
        return constant_series(node.value, z0, order)
    if isinstance(node, Var):
        if node.name == "w":
            return series_truncate(w_series, order)
        return variable_series(z0, order)
    if isinstance(node, Neg):
        return series_scale(_series(node.operand, w_series, z0, sheets, order, pole_tol), -1.0)
    if isinstance(node, Pow):
        base = _series(node.base, w_series, z0, sheets, order, pole_tol)
        return series_pow(base, node.exponent, pole_tol)
    if isinstance(node, Rad):
        q = _series(node.radicand, w_series, z0, sheets, order, pole_tol)
        if abs(q.coeffs[0]) <= pole_tol:
            raise SeriesError(f"radicand of rad #{node.index} vanishes at the center {z0}")
        return series_kth_root(q, node.k, sheets[node.index])

    left = _series(node.left, w_series, z0, sheets, order, pole_tol)
    right = _series(node.right, w_series, z0, sheets, order, pole_tol)
    if node.op == "+":
        return series_add(left, right)
    if node.op == "-":
        return series_sub(left, right)
    if node.op == "*":
        return series_mul(left, right)
    return series_div(left, right, pole_tol)


def eval_series(ast, w_series, z0, state, order=None, pole_tol=POLE_TOLERANCE):
    """
    The Taylor series of z -> F(w(z), z) about z0, where w_series is centred
    at z0 and state holds the sheets at (w(z0), z0). The result has order
    min(order, w_series.order).
    """

    if abs(w_series.center - complex(z0)) > 1e-14 * (1.0 + abs(z0)):
        raise SeriesError(f"w_series is centred at {w_series.center}, not at {z0}")
    if order is None:
        order = w_series.order
    order = min(order, w_series.order)
    return _series(ast.root, w_series, complex(z0), state.sheets, order, pole_tol)
