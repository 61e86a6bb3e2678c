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
Analytic continuation of the solution of w' = F(w, z), w(z0) = w0 along a
polygonal arc in the z-plane.

Every step expands the solution at the current point (Taylor series on a
bidisc kept away from the singular set A), moves at most half the
guaranteed radius along the arc and carries the radical sheets along. The
march stops at the end of the arc or at the first event:

    SingularApproach   the point comes closer to A than the proximity floor
    Blowup             |w| exceeds max_modulus
    StepUnderflow      the guaranteed radius falls below min_step
    ResidualFailure    no local solution meets the residual tolerance
    StepBudget         max_steps steps were made

Endpoint verdicts are taken on the Riemann sphere with the chordal metric,
so a solution tending to infinity has a limit like any other.
"""

import concurrent.futures
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from painleve.distance import SpherePoint, chordal_diameter, chordal_mean
from painleve.exceptions import (
    AmbiguousSheetError,
    BoundaryExtensionError,
    HypothesisError,
    MonodromyError,
    ResidualError,
    SampleEvaluationError,
    SeriesError,
    TraceTooShortError,
)
from painleve.expression import (
    BranchState,
    init_branches,
    singular_set,
    transport_branches,
)
from painleve.general_functions import in_disc
from painleve.local_solver import (
    LocalBounds,
    LocalSolution,
    estimate_bounds,
    guaranteed_radius,
    sigma_radius,
    solve_local,
)
from painleve.misc import scaled_tolerance
from painleve.polynomials import contained_lines, line_contained, proximity_estimate

__all__ = [
    "ContinuationOptions",
    "Arc",
    "circle_arc",
    "EventKind",
    "Event",
    "TraceStatus",
    "TraceStep",
    "Frontier",
    "ContinuationTrace",
    "VerdictKind",
    "LimitVerdict",
    "HypothesisViolation",
    "HypothesisReport",
    "MonodromyEntry",
    "MonodromyReport",
    "check_hypotheses",
    "continue_along",
    "endpoint_limit",
    "extend_to_boundary",
    "monodromy_loop",
    "reverse_continuation",
    "sweep_limits",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContinuationOptions:
    order: int = 24
    torus_samples: int = 64
    safety_factor: float = 1.25
    radius_safety: float = 0.8
    residual_tolerance: float = 1e-8
    max_modulus: float = 1e6
    proximity_floor: float = 1e-4
    proximity_ceiling: float = 1.0
    min_step: float = 1e-9
    verdict_tolerance: float = 1e-3
    max_geometric_samples: int = 40
    tail_samples: int = 8
    bidisc_scales: Tuple[float, ...] = (0.35, 0.25, 0.125)
    pole_tolerance: float = 1e-12
    continuity_floor: float = 1e-12
    holomorphy_floor: float = 1e-4
    endpoint_gap: float = 1e-3
    max_steps: int = 200000
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "bidisc_scales", tuple(float(s) for s in self.bidisc_scales))

        for name in ("order", "torus_samples", "max_geometric_samples", "max_steps"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.tail_samples < 2:
            raise ValueError("tail_samples must be at least 2")
        if self.safety_factor < 1:
            raise ValueError("safety_factor must be at least 1")
        if not 0 < self.radius_safety < 1:
            raise ValueError("radius_safety must lie in (0, 1)")
        for name in (
            "residual_tolerance",
            "max_modulus",
            "proximity_floor",
            "proximity_ceiling",
            "min_step",
            "verdict_tolerance",
            "pole_tolerance",
            "continuity_floor",
            "holomorphy_floor",
            "endpoint_gap",
        ):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not self.bidisc_scales or not all(0 < s <= 0.5 for s in self.bidisc_scales):
            raise ValueError("bidisc_scales must be a nonempty list of numbers in (0, 0.5]")


# Arcs ###########################################################################


@dataclass(frozen=True, eq=False)
class Arc:
    """
    Polygonal arc through the given vertices, parameterized by arc length
    rescaled to [0, 1].
    """

    vertices: Tuple[complex, ...]
    _times: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        vertices = tuple(complex(v) for v in self.vertices)
        if len(vertices) < 2:
            raise ValueError("an arc needs at least two vertices")
        if any(a == b for a, b in zip(vertices, vertices[1:])):
            raise ValueError("consecutive arc vertices must be distinct")

        cumulative = np.concatenate(([0.0], np.cumsum(np.abs(np.diff(vertices)))))
        times = cumulative / cumulative[-1]
        times[-1] = 1.0
        times.setflags(write=False)

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "_times", times)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def length(self):
        return float(np.sum(np.abs(np.diff(self.vertices))))

    @property
    def vertex_times(self):
        return self._times

    @property
    def is_closed(self):
        return abs(self.start - self.end) <= 1e-12 * (1.0 + abs(self.start))

    def point_at(self, t):
        if t <= 0:
            return self.vertices[0]
        if t >= 1:
            return self.vertices[-1]

        i = int(np.searchsorted(self._times, t, side="right")) - 1
        i = min(i, len(self.vertices) - 2)
        frac = (t - self._times[i]) / (self._times[i + 1] - self._times[i])
        if frac >= 1:
            return self.vertices[i + 1]
        return self.vertices[i] + frac * (self.vertices[i + 1] - self.vertices[i])

    def next_vertex_time(self, t):
        """
        The first vertex time strictly after t (1 at the end).
        """

        later = self._times[self._times > t]
        return float(later[0]) if later.size else 1.0

    def reversed(self):
        return Arc(self.vertices[::-1])

    def sub_arc(self, t):
        """
        The part of the arc between the parameters 0 and t > 0.
        """

        if not 0 < t <= 1:
            raise ValueError("sub_arc needs 0 < t <= 1")
        inner = [v for v, s in zip(self.vertices, self._times) if s < t]
        end = self.point_at(t)
        if end == inner[-1]:
            inner = inner[:-1]
        return Arc(tuple(inner) + (end,))

    def sample(self, n):
        return [self.point_at(t) for t in np.linspace(0.0, 1.0, n)]


def circle_arc(center, radius, n=64, start_angle=0.0):
    """
    Closed polygon with n vertices on the circle |z - center| = radius,
    run counterclockwise.
    """

    if radius <= 0:
        raise ValueError("radius must be positive")
    if n < 3:
        raise ValueError("a closed loop needs at least 3 vertices")
    angles = start_angle + 2 * np.pi * np.arange(n) / n
    vertices = [complex(center) + radius * np.exp(1j * a) for a in angles]
    return Arc(tuple(vertices) + (vertices[0],))


# Traces #########################################################################


class EventKind(Enum):
    SINGULAR_APPROACH = "SingularApproach"
    BLOWUP = "Blowup"
    STEP_UNDERFLOW = "StepUnderflow"
    RESIDUAL_FAILURE = "ResidualFailure"
    STEP_BUDGET = "StepBudget"


@dataclass(frozen=True)
class Event:
    t: float
    kind: EventKind
    z: complex
    w: complex
    message: str = ""


class TraceStatus(Enum):
    COMPLETED = "Completed"
    STOPPED = "Stopped"


@dataclass(frozen=True, eq=False)
class TraceStep:
    """
    The expansion made at arc parameter t, where the solution has the value
    w at z. state holds the radical sheets at (w, z).
    """

    t: float
    z: complex
    w: complex
    local: Optional[LocalSolution]
    bounds: Optional[LocalBounds]
    state: BranchState
    sigma: float = np.nan
    proximity: float = np.nan

    @property
    def radius(self):
        return self.local.guaranteed_radius if self.local is not None else np.nan


@dataclass(frozen=True)
class Frontier:
    """
    The last point reached by a march.
    """

    t: float
    z: complex
    w: complex
    state: BranchState


@dataclass(frozen=True, eq=False)
class ContinuationTrace:
    steps: Tuple[TraceStep, ...]
    events: Tuple[Event, ...]
    status: TraceStatus
    frontier: Frontier
    arc: Optional[Arc] = None
    ast: object = None
    options: Optional[ContinuationOptions] = None

    @property
    def stop_event(self):
        if self.status is TraceStatus.STOPPED and self.events:
            return self.events[-1]
        return None

    @property
    def final_point(self):
        return self.frontier.z, self.frontier.w

    def points(self):
        """
        (t, z, w) of every step followed by the frontier.
        """

        pts = [(s.t, s.z, s.w) for s in self.steps]
        pts.append((self.frontier.t, self.frontier.z, self.frontier.w))
        return pts

    def value_at(self, z):
        """
        The solution at z, from the local series of the step whose center is
        nearest to z among those whose guaranteed disc contains z.
        """

        z = complex(z)
        best = None
        for step in self.steps:
            if step.local is None:
                continue
            distance = abs(z - step.z)
            if distance < step.local.guaranteed_radius and (best is None or distance < best[0]):
                best = (distance, step)
        if best is None:
            raise ValueError(f"{z} lies in no guaranteed disc of the trace")
        return best[1].local(z)


# Verdicts and reports ###########################################################


class VerdictKind(Enum):
    FINITE = "Finite"
    INFINITY = "Infinity"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class LimitVerdict:
    kind: VerdictKind
    value: Optional[complex]
    tail_diameter: float
    samples_used: int
    diagnostics: str = ""

    @property
    def point(self):
        if self.kind is VerdictKind.FINITE:
            return SpherePoint(self.value)
        if self.kind is VerdictKind.INFINITY:
            return SpherePoint(None)
        return None


@dataclass(frozen=True)
class HypothesisViolation:
    component: object
    nu: complex


@dataclass(frozen=True)
class HypothesisReport:
    violations: Tuple[HypothesisViolation, ...]
    checked: int

    @property
    def passed(self):
        return not self.violations


@dataclass(frozen=True)
class MonodromyEntry:
    index: int
    k: int
    multiplier: complex
    is_root_of_unity: bool
    order: Optional[int]


@dataclass(frozen=True)
class MonodromyReport:
    w0: complex
    z0: complex
    entries: Tuple[MonodromyEntry, ...]

    @property
    def multipliers(self):
        return tuple(e.multiplier for e in self.entries)


def _on_segment(nu, a, b, tol=1e-12):
    d = b - a
    s = ((nu - a) * d.conjugate()).real / abs(d) ** 2
    s = min(max(s, 0.0), 1.0)
    return abs(a + s * d - nu) <= scaled_tolerance(tol, nu)


def check_hypotheses(ast, arc):
    """
    Checks that no line v = nu over the arc lies inside a component of the
    singular set, at the vertices, the segment midpoints and every contained
    line of a component that meets the arc.
    """

    components = singular_set(ast)
    samples = list(arc.vertices)
    samples += [(a + b) / 2 for a, b in zip(arc.vertices, arc.vertices[1:])]

    violations = []
    for P in components:
        hits = [nu for nu in samples if line_contained(P, nu)]
        for nu in contained_lines(P):
            on_arc = any(_on_segment(nu, a, b) for a, b in zip(arc.vertices, arc.vertices[1:]))
            if on_arc and not any(abs(nu - h) <= 1e-9 for h in hits):
                hits.append(nu)
        violations += [HypothesisViolation(P, complex(nu)) for nu in hits]

    report = HypothesisReport(tuple(violations), len(components) * len(samples))
    for v in violations:
        logger.info("line v = %s lies in the component %s", v.nu, v.component)
    return report


# Marching #######################################################################


class _Stop(Exception):
    def __init__(self, kind, message):
        self.kind = kind
        super().__init__(message)


def _expand(ast, components, w, z, state, options, detect_singular=True):
    """
    The best local solution at (w, z) over the configured bidisc scales.
    """

    ceiling = options.proximity_ceiling * max(1.0, abs(w))
    proximity = proximity_estimate(components, w, z, ceiling=ceiling, seed=options.seed)
    if detect_singular and proximity < options.proximity_floor:
        raise _Stop(
            EventKind.SINGULAR_APPROACH,
            f"distance {proximity:.3g} to the singular set is below the floor",
        )
    if proximity <= 0:
        raise _Stop(EventKind.SINGULAR_APPROACH, "the point lies on the singular set")

    candidates = []
    for scale in options.bidisc_scales:
        radius = scale * proximity
        try:
            bounds = estimate_bounds(
                ast, state, w, z, radius, radius,
                n_samples=options.torus_samples,
                safety=options.safety_factor,
                pole_tolerance=options.pole_tolerance,
                continuity_floor=options.continuity_floor,
            )
        except SampleEvaluationError as exc:
            logger.debug("bidisc scale %g rejected at z = %s: %s", scale, z, exc)
            continue
        candidates.append(bounds)

    if not candidates:
        raise _Stop(EventKind.SINGULAR_APPROACH, "no bidisc around the point avoids the singular set")

    candidates.sort(key=lambda b: -guaranteed_radius(b, options.radius_safety))
    failure = None
    for bounds in candidates:
        try:
            local = solve_local(
                ast, state, w, z, bounds,
                order=options.order,
                residual_tolerance=options.residual_tolerance,
                safety_r=options.radius_safety,
                pole_tolerance=options.pole_tolerance,
                continuity_floor=options.continuity_floor,
            )
        except (ResidualError, SeriesError) as exc:
            failure = exc
            continue
        return proximity, bounds, local

    raise _Stop(EventKind.RESIDUAL_FAILURE, str(failure))


def _sigma(bounds):
    if bounds.T_hat == 0:
        return bounds.a
    return sigma_radius(bounds.a, bounds.b, bounds.T_hat)


def _march(ast, components, arc, frontier, t_target, options, detect_singular=True, detect_blowup=True):
    """
    Steps from frontier to the arc parameter t_target. Returns the recorded
    steps, the stop event (None when t_target was reached) and the new
    frontier.
    """

    steps = []
    t, z, w, state = frontier.t, frontier.z, frontier.w, frontier.state
    length = arc.length

    def stop(kind, message):
        logger.info("%s at t = %.12g, z = %s, w = %s: %s", kind.value, t, z, w, message)
        return steps, Event(t, kind, z, w, message), Frontier(t, z, w, state)

    while t < t_target:
        if len(steps) >= options.max_steps:
            return stop(EventKind.STEP_BUDGET, f"{options.max_steps} steps made")
        if detect_blowup and abs(w) > options.max_modulus:
            return stop(EventKind.BLOWUP, f"|w| = {abs(w):.3g} exceeds {options.max_modulus:.3g}")

        try:
            proximity, bounds, local = _expand(ast, components, w, z, state, options, detect_singular)
        except _Stop as exc:
            return stop(exc.kind, str(exc))

        r = local.guaranteed_radius
        if r < options.min_step:
            return stop(EventKind.STEP_UNDERFLOW, f"guaranteed radius {r:.3g} below {options.min_step:.3g}")

        steps.append(TraceStep(t, z, w, local, bounds, state, _sigma(bounds), proximity))

        t_stop = min(t_target, arc.next_vertex_time(t))
        z_stop = arc.point_at(t_stop)
        h = 0.5 * r
        chord = abs(z_stop - z)
        if chord <= h:
            t_new, z_new = t_stop, z_stop
        else:
            # move from z itself so the chord stays within h
            t_new = t + h / length
            z_new = z + (h / chord) * (z_stop - z)
        if t_new <= t:
            steps.pop()
            return stop(EventKind.STEP_UNDERFLOW, "the arc parameter no longer advances")

        w_new = local(z_new)
        try:
            state = transport_branches(ast, state, (w, z), (w_new, z_new), options.continuity_floor)
        except AmbiguousSheetError as exc:
            return stop(EventKind.SINGULAR_APPROACH, str(exc))

        logger.debug("step t = %.12g -> %.12g, r = %.6g, w = %s", t, t_new, r, w_new)
        t, z, w = t_new, z_new, w_new

    return steps, None, Frontier(t, z, w, state)


def continue_along(ast, w0, z0, arc, options=None, state=None):
    """
    Continues the solution of w' = F(w, z), w(z0) = w0 along arc.

    Parameters
    ----------
    ast : ExpressionAST
        right-hand side F.
    w0, z0 : complex
        initial condition; arc must start at z0.
    arc : Arc
    options : ContinuationOptions, optional
    state : BranchState, optional
        sheets at (w0, z0); defaults to the principal-positive-real ones.

    Returns
    -------
    ContinuationTrace

    Raises
    ------
    HypothesisError
        when a line v = nu over the arc lies in the singular set.
    """

    options = options or ContinuationOptions()
    w0, z0 = complex(w0), complex(z0)
    if abs(arc.start - z0) > 1e-12 * (1.0 + abs(z0)):
        raise ValueError(f"the arc starts at {arc.start}, not at z0 = {z0}")

    report = check_hypotheses(ast, arc)
    if not report.passed:
        where = ", ".join(str(v.nu) for v in report.violations)
        raise HypothesisError(f"the arc meets lines contained in the singular set at v = {where}", report)

    if state is None:
        state = init_branches(ast, w0, z0)
    components = singular_set(ast)

    logger.info("continuing %r from (w, z) = (%s, %s) along %d vertices", ast.text, w0, z0, len(arc.vertices))
    steps, event, frontier = _march(ast, components, arc, Frontier(0.0, z0, w0, state), 1.0, options)

    status = TraceStatus.COMPLETED if event is None else TraceStatus.STOPPED
    events = () if event is None else (event,)
    logger.info("%s after %d steps at z = %s, w = %s", status.value, len(steps), frontier.z, frontier.w)
    return ContinuationTrace(tuple(steps), events, status, frontier, arc, ast, options)


def _resume(trace, ast, arc, options):
    """
    Values at the geometric targets t_j = 1 - 2^-j (1 - t_last), continuing
    past the proximity floor and max_modulus until a step underflows, and the
    last target reached.
    """

    components = singular_set(ast)
    frontier = trace.frontier
    gap = 1.0 - frontier.t
    samples = []
    t_reached = frontier.t
    for j in range(1, options.max_geometric_samples + 1):
        t_j = 1.0 - 2.0**-j * gap
        if t_j <= frontier.t:
            break
        _, event, frontier = _march(
            ast, components, arc, frontier, t_j, options, detect_singular=False, detect_blowup=False
        )
        if event is not None:
            logger.info("resumption ended after %d samples: %s", len(samples), event.kind.value)
            break
        samples.append(frontier.w)
        t_reached = frontier.t
    return samples, t_reached


def endpoint_limit(trace, ast=None, arc=None, options=None):
    """
    Verdict on lim w(gamma(t)) as t -> 1, within the Riemann sphere.

    A completed trace has reached the end of the arc and the limit is the
    value there. A march that stops, and cannot be resumed, farther than
    endpoint_gap from t = 1 is Undetermined: its samples say nothing about the
    endpoint. Otherwise the samples are the step values, the stop point
    and the values at the geometric targets of a resumed march; when the
    chordal diameter of the last tail_samples of them is below the verdict
    tolerance the limit is their chordal mean (infinity when every tail
    modulus exceeds 1/tolerance). Undetermined means the samples do not
    settle, which points at a violated hypothesis or a numerical failure.
    """

    ast = ast if ast is not None else trace.ast
    arc = arc if arc is not None else trace.arc
    options = options or trace.options or ContinuationOptions()
    tol = options.verdict_tolerance

    if trace.status is TraceStatus.COMPLETED:
        return LimitVerdict(VerdictKind.FINITE, complex(trace.frontier.w), 0.0, 1, "regular endpoint")

    samples = [step.w for step in trace.steps] + [trace.frontier.w]
    t_last = trace.frontier.t
    if ast is not None and arc is not None and t_last < 1:
        resumed, t_last = _resume(trace, ast, arc, options)
        samples += resumed
    if len(samples) < 4:
        raise TraceTooShortError(f"only {len(samples)} samples for an endpoint verdict")

    tail = samples[-options.tail_samples :]
    diameter = chordal_diameter(tail)
    n = len(tail)

    if 1.0 - t_last > options.endpoint_gap:
        verdict = LimitVerdict(
            VerdictKind.UNDETERMINED, None, diameter, n,
            f"stopped at t = {trace.frontier.t:.6g} and resumption reached t = {t_last:.6g}, "
            f"short of the endpoint by more than {options.endpoint_gap:.3g}",
        )
        logger.warning("endpoint verdict %s: %s", verdict.kind.value, verdict.diagnostics)
        return verdict

    if not diameter < tol:
        verdict = LimitVerdict(
            VerdictKind.UNDETERMINED, None, diameter, n,
            f"tail diameter {diameter:.3g} not below tolerance {tol:.3g}",
        )
    elif all(abs(w) > 1.0 / tol for w in tail):
        verdict = LimitVerdict(VerdictKind.INFINITY, None, diameter, n)
    else:
        mean = chordal_mean(tail)
        if mean is None or mean.is_infinity:
            verdict = LimitVerdict(VerdictKind.INFINITY, None, diameter, n)
        else:
            verdict = LimitVerdict(VerdictKind.FINITE, mean.value, diameter, n)

    logger.info("endpoint verdict %s (tail diameter %.3g over %d samples)", verdict.kind.value, diameter, n)
    return verdict


def extend_to_boundary(trace, z_inf, ast=None, options=None):
    """
    Continues the trace up to the boundary point z_inf: the value there
    from a local solution whose guaranteed disc contains z_inf. Candidates
    are a fresh expansion at the frontier and the step expansions, latest
    first.

    Returns
    -------
    (complex, LocalSolution)

    Raises
    ------
    BoundaryExtensionError
        when no guaranteed disc reaches z_inf or the value found is too close
        to the singular set for F to be holomorphic there.
    """

    ast = ast if ast is not None else trace.ast
    options = options or trace.options or ContinuationOptions()
    z_inf = complex(z_inf)
    components = singular_set(ast)

    candidates = [step.local for step in trace.steps if step.local is not None]
    f = trace.frontier
    try:
        _, _, fresh = _expand(ast, components, f.w, f.z, f.state, options, detect_singular=False)
        candidates.append(fresh)
    except _Stop as exc:
        logger.info("no expansion at the frontier: %s", exc)

    for local in reversed(candidates):
        if in_disc(local.center, local.guaranteed_radius, z_inf):
            value = local(z_inf)
            ceiling = options.proximity_ceiling * max(1.0, abs(value))
            proximity = proximity_estimate(components, value, z_inf, ceiling=ceiling, seed=options.seed)
            if proximity <= options.holomorphy_floor:
                raise BoundaryExtensionError(
                    f"the limit candidate ({value}, {z_inf}) is within {proximity:.3g} of the singular set"
                )
            return value, local

    raise BoundaryExtensionError(f"{z_inf} lies outside every guaranteed disc of the trace")


def monodromy_loop(ast, w0, z0, loop_arc, state=None, continuity_floor=1e-12, tol=1e-6):
    """
    Carries the radical sheets around a closed loop in z with w held at
    w0, and reports for each rad node the multiplier final/initial sheet
    together with its order as a root of unity.
    """

    w0, z0 = complex(w0), complex(z0)
    if not loop_arc.is_closed:
        raise MonodromyError("the loop is not closed")
    if abs(loop_arc.start - z0) > 1e-12 * (1.0 + abs(z0)):
        raise MonodromyError(f"the loop starts at {loop_arc.start}, not at z0 = {z0}")

    initial = state if state is not None else init_branches(ast, w0, z0)
    current = initial
    for a, b in zip(loop_arc.vertices, loop_arc.vertices[1:]):
        try:
            current = transport_branches(ast, current, (w0, a), (w0, b), continuity_floor)
        except AmbiguousSheetError as exc:
            raise MonodromyError(f"the loop passes a branch point: {exc}") from exc

    entries = []
    for rad in ast.radicals:
        m = current.sheets[rad.index] / initial.sheets[rad.index]
        order = next((n for n in range(1, rad.k + 1) if abs(m**n - 1) < tol), None)
        entries.append(MonodromyEntry(rad.index, rad.k, m, order is not None, order))
        logger.info("rad #%d: multiplier %s (order %s)", rad.index, m, order)
    return MonodromyReport(w0, z0, tuple(entries))


def reverse_continuation(trace, ast=None, options=None):
    """
    Continues back from the frontier of trace to the start of its arc.
    """

    ast = ast if ast is not None else trace.ast
    options = options or trace.options
    f = trace.frontier
    if f.t <= 0:
        raise ValueError("the trace did not leave its starting point")
    back = trace.arc.sub_arc(f.t).reversed()
    return continue_along(ast, f.w, f.z, back, options, state=f.state)


def _limit_along(ast, w0, z0, arc, options, state):
    trace = continue_along(ast, w0, z0, arc, options, state)
    return trace, endpoint_limit(trace)


def sweep_limits(ast, w0, z0, arcs, options=None, state=None, max_workers=None):
    """
    Endpoint verdicts along several arcs, run concurrently. Returns
    (trace, verdict) pairs in the order of arcs.
    """

    options = options or ContinuationOptions()
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [
            executor.submit(_limit_along, ast, w0, z0, arc, options, state) for arc in arcs
        ]
        return [future.result() for future in futures]
