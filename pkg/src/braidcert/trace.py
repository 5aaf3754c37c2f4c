"""Piecewise-linear trajectories, exact event tracers, and generator motions.

A trajectory assigns each of n points a closed polygonal path over the common
time interval [0, 1], all breakpoints rational.  The tracers scan every time
slab (between consecutive breakpoints of any point) and every 3- or 4-point
tuple: collinearity is the 2x2 orientation determinant, concyclicity the 4x4
determinant with rows (x, y, x^2+y^2, 1) (zero also for four collinear
points, i.e. a circle through infinity, which counts as an event).  Per slab
these determinants are polynomials in t with rational coefficients; sign
changes are isolated exactly (Sturm chains), events are sorted by exact
algebraic-number comparison, and any tangency, boundary root, simultaneous
pair or particle collision raises NonGenericTrajectory naming the tuple and
slab.

The simulators realise the generator braid b_ij as the four-stage motion the
homomorphisms are read from: on a circle (trisecants) the mover slides along
the inside hugging the circle, so it crosses a chord exactly when passing one
of its endpoints; on the parabola (concyclicities) the mover hops over each
passed point and otherwise stays inside the safe strip between the parabola
and the lowest circle arcs.  All clearances are rational, every constructed
segment is checked exactly against every static chord/circle, and offending
offsets are halved deterministically (bounded retries).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateInput, InvalidContext, InvalidPair, NonGenericTrajectory
from .geometry import (
    ParabolaConfig,
    ceil_sqrt,
    circle_through,
    growth_sequence_case1,
    passing_word_geometric,
    upgrade_to_case23,
)
from .gnk import GnkWord
from .roots import (
    Poly,
    RealRoot,
    count_roots,
    isolate_roots,
    poly,
    poly_add,
    poly_deriv,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_sub,
    root_compare,
    squarefree_part,
)

Point = tuple[Fraction, Fraction]
Breakpoint = tuple[Fraction, Point]


@dataclass(frozen=True)
class Trajectory:
    """Closed piecewise-linear motion of n labelled points over [0, 1]."""

    paths: tuple[tuple[Breakpoint, ...], ...]

    def __post_init__(self):
        norm = []
        for path in self.paths:
            fixed = tuple((Fraction(t), (Fraction(x), Fraction(y))) for t, (x, y) in path)
            if len(fixed) < 2 or fixed[0][0] != 0 or fixed[-1][0] != 1:
                raise DegenerateInput("each path must span times 0..1")
            if any(a[0] >= b[0] for a, b in zip(fixed, fixed[1:])):
                raise DegenerateInput("breakpoint times must strictly increase")
            if fixed[0][1] != fixed[-1][1]:
                raise DegenerateInput("paths must be closed (start = end position)")
            norm.append(fixed)
        object.__setattr__(self, "paths", tuple(norm))

    @property
    def n(self) -> int:
        return len(self.paths)

    def position(self, point: int, t: Fraction) -> Point:
        """Exact position of 1-based point at rational time t."""
        path = self.paths[point - 1]
        for (t0, p0), (t1, p1) in zip(path, path[1:]):
            if t0 <= t <= t1:
                if t == t0:
                    return p0
                lam = (t - t0) / (t1 - t0)
                return (p0[0] + lam * (p1[0] - p0[0]), p0[1] + lam * (p1[1] - p0[1]))
        raise ValueError(f"time {t} outside [0, 1]")


@dataclass(frozen=True)
class SecantEvent:
    """One generic event: the named tuple of points is collinear (trisecant)
    or concyclic at the root time."""

    kind: str
    participants: tuple[int, ...]
    root: RealRoot

    def interval(self) -> tuple[Fraction, Fraction]:
        return (self.root.lo, self.root.hi)


def _slab_grid(traj: Trajectory) -> list[Fraction]:
    times = {t for path in traj.paths for t, _ in path}
    return sorted(times)


def _linear_coeffs(path: Sequence[Breakpoint], t0: Fraction, t1: Fraction) -> tuple[Poly, Poly]:
    """Position of one point on [t0, t1] as two degree <= 1 polynomials in
    global time.  The slab grid contains all breakpoints, so the slab lies
    inside a single segment of the path."""
    for (a, p0), (b, p1) in zip(path, path[1:]):
        if a <= t0 and t1 <= b:
            vx = (p1[0] - p0[0]) / (b - a)
            vy = (p1[1] - p0[1]) / (b - a)
            return poly((p0[0] - vx * a, vx)), poly((p0[1] - vy * a, vy))
    raise ValueError(f"slab [{t0}, {t1}] not inside any segment")


def _det3(rows: list[list[Poly]]) -> Poly:
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = rows
    term1 = poly_mul(a1, poly_sub(poly_mul(b2, c3), poly_mul(b3, c2)))
    term2 = poly_mul(b1, poly_sub(poly_mul(a2, c3), poly_mul(a3, c2)))
    term3 = poly_mul(c1, poly_sub(poly_mul(a2, b3), poly_mul(a3, b2)))
    return poly_add(poly_sub(term1, term2), term3)


def _orientation_poly(ps: list[tuple[Poly, Poly]]) -> Poly:
    (x1, y1), (x2, y2), (x3, y3) = ps
    ax, ay = poly_sub(x2, x1), poly_sub(y2, y1)
    bx, by = poly_sub(x3, x1), poly_sub(y3, y1)
    return poly_sub(poly_mul(ax, by), poly_mul(ay, bx))


def _concyclic_poly(ps: list[tuple[Poly, Poly]]) -> Poly:
    # Laplace expansion of det [x y x^2+y^2 1] along the all-ones column,
    # up to an overall sign (irrelevant for root finding).
    rows = [[x, y, poly_add(poly_mul(x, x), poly_mul(y, y))] for x, y in ps]
    out: Poly = ()
    for skip in range(4):
        minor = _det3([rows[r] for r in range(4) if r != skip])
        out = poly_sub(out, minor) if skip % 2 else poly_add(out, minor)
    return out


def _check_pair_distinct(ps, pair, t0, t1) -> None:
    (x1, y1), (x2, y2) = ps
    dx, dy = poly_sub(x1, x2), poly_sub(y1, y2)
    d2 = poly_add(poly_mul(dx, dx), poly_mul(dy, dy))
    if not d2:
        raise NonGenericTrajectory("two points coincide throughout a slab", pair, (t0, t1))
    if poly_eval(d2, t0) == 0 or poly_eval(d2, t1) == 0:
        raise NonGenericTrajectory("two points coincide at a slab boundary", pair, (t0, t1))
    sf = squarefree_part(d2)
    if count_roots(sf, t0, t1) > 0:
        raise NonGenericTrajectory("two points collide", pair, (t0, t1))


def trace_events(traj: Trajectory, k: int) -> list[SecantEvent]:
    """All generic degeneracy events of the trajectory, sorted by exact time."""
    if k not in (3, 4):
        raise InvalidContext(f"events are defined for k in {{3, 4}}, got {k}")
    if traj.n < k:
        raise InvalidContext(f"need at least {k} points, got {traj.n}")
    kind = "trisecant" if k == 3 else "concyclic"
    grid = _slab_grid(traj)
    events: list[SecantEvent] = []
    for t0, t1 in zip(grid, grid[1:]):
        coeffs = [_linear_coeffs(path, t0, t1) for path in traj.paths]
        for pair in combinations(range(1, traj.n + 1), 2):
            _check_pair_distinct([coeffs[p - 1] for p in pair], pair, t0, t1)
        for tup in combinations(range(1, traj.n + 1), k):
            ps = [coeffs[p - 1] for p in tup]
            det = _orientation_poly(ps) if k == 3 else _concyclic_poly(ps)
            if not det:
                raise NonGenericTrajectory(f"{kind} holds on a whole slab", tup, (t0, t1))
            if poly_eval(det, t0) == 0 or poly_eval(det, t1) == 0:
                raise NonGenericTrajectory(f"{kind} at a slab boundary", tup, (t0, t1))
            sf = squarefree_part(det)
            if len(sf) != len(det):
                # multiple root somewhere; reject only if it lies in this slab
                g = poly_gcd(det, poly_deriv(det))
                gs = squarefree_part(g)
                if poly_eval(gs, t0) == 0 or poly_eval(gs, t1) == 0 or count_roots(gs, t0, t1) > 0:
                    raise NonGenericTrajectory(f"tangential {kind}", tup, (t0, t1))
            for root in isolate_roots(sf, t0, t1):
                events.append(SecantEvent(kind, tup, root))
    events.sort(key=cmp_to_key(lambda a, b: root_compare(a.root, b.root)))
    for a, b in zip(events, events[1:]):
        if root_compare(a.root, b.root) == 0:
            raise NonGenericTrajectory(
                "simultaneous events", a.participants + b.participants,
                (a.root.lo, a.root.hi))
    return events


def trisecant_trace(traj: Trajectory) -> GnkWord:
    """Word of collinearity events, one k = 3 letter per event, in time order."""
    events = trace_events(traj, 3)
    return GnkWord(traj.n, 3, tuple(ev.participants for ev in events))


def concyclic_trace(traj: Trajectory) -> GnkWord:
    """Word of concyclicity events, one k = 4 letter per event, in time order."""
    events = trace_events(traj, 4)
    return GnkWord(traj.n, 4, tuple(ev.participants for ev in events))


# ---------------------------------------------------------------------------
# Exact segment-versus-circle crossing counts (builders' validation).

def _crossing_count(p0: Point, p1: Point, circle: tuple[Point, Fraction]) -> int | None:
    """Number of interior crossings of the open segment with the circle;
    None flags a tangency or an endpoint exactly on the circle."""
    (a, b), r2 = circle
    wx, wy = p0[0] - a, p0[1] - b
    vx, vy = p1[0] - p0[0], p1[1] - p0[1]
    A = vx * vx + vy * vy
    B = 2 * (vx * wx + vy * wy)
    C = wx * wx + wy * wy - r2
    q0, q1 = C, A + B + C
    if q0 == 0 or q1 == 0:
        return None
    if A == 0:
        if B == 0:
            return 0
        t = -C / B
        return 1 if 0 < t < 1 else 0
    disc = B * B - 4 * A * C
    if disc < 0:
        return 0
    if disc == 0:
        t = Fraction(-B, 2 * A)
        return None if 0 <= t <= 1 else 0
    if (q0 > 0) != (q1 > 0):
        return 1
    # same sign at both ends: 2 roots inside iff the vertex lies inside and
    # the parabola dips through (ends positive, opens upward since A > 0)
    tv = Fraction(-B, 2 * A)
    if q0 > 0 and 0 < tv < 1:
        return 2
    return 0


def _count_or_fail(p0: Point, p1: Point, circle) -> int:
    c = _crossing_count(p0, p1, circle)
    if c is None:
        raise _BuildRetry("tangential or boundary contact")
    return c


class _BuildRetry(Exception):
    """Internal: a candidate path failed exact validation; retry smaller."""


# ---------------------------------------------------------------------------
# Circle motions (k = 3).

def _circle_point(s: Fraction) -> Point:
    d = 1 + s * s
    return ((1 - s * s) / d, 2 * s / d)


def _polyline(points: list[Point]) -> list[Point]:
    out = [points[0]]
    for p in points[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def _circle_sweep(s_from: Fraction, s_to: Fraction, passed: list[Fraction],
                  eps: Fraction) -> list[Point]:
    """Waypoints for a sweep along the inside of the unit circle from the
    circle point at parameter s_from to the one at s_to, passing the static
    points at the given parameters: one via point per gap midpoint, pulled
    inward by eps, so each segment handles exactly one passed point."""
    landmarks = [s_from] + sorted(passed, reverse=s_to < s_from) + [s_to]
    vias = [(a + b) / 2 for a, b in zip(landmarks, landmarks[1:])]
    down = 1 - eps
    pts = [_circle_point(s_from)]
    pts += [(down * x, down * y) for x, y in (_circle_point(v) for v in vias)]
    pts.append(_circle_point(s_to))
    return _polyline(pts)


def _min_gap_sq(params: Iterable[Fraction]) -> Fraction:
    pts = [_circle_point(s) for s in params]
    best = None
    for p, q in combinations(pts, 2):
        d2 = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
        best = d2 if best is None else min(best, d2)
    if best is None or best == 0:
        raise DegenerateInput("need distinct circle points")
    return best


def simulate_bij_circle(i: int, j: int, n: int, *, max_retries: int = 16) -> Trajectory:
    """Closed motion realising the generator b_ij on a circle configuration.

    Points sit at rational circle points (tangent-half-angle parameters
    1, 2, ..., n, all on the upper arc, counterclockwise).  Stage 1: point i
    slides inside the circle past i+1 .. j-1 and lands on the circle just
    before j; stage 2: j slides over the parked i; stage 3: i returns home
    over j (parked) and j-1 .. i+1; stage 4: j returns home.  Offsets are
    halved and the build retried if the exact trace finds any degeneracy.
    """
    if n < 3:
        raise InvalidContext(f"circle motions need n >= 3, got {n}")
    if not (1 <= i < j <= n):
        raise InvalidPair(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    home = {u: Fraction(u) for u in range(1, n + 1)}
    rho = (home[j - 1] + home[j]) / 2  # parking spot for i, just before j
    lam = (home[j - 1] + rho) / 2      # landing spot for j, just before that
    eps = _min_gap_sq(list(home.values()) + [rho, lam]) / 64
    last_error: Exception | None = None
    for _ in range(max_retries):
        traj = _build_circle_trajectory(i, j, n, home, rho, lam, eps)
        try:
            trisecant_trace(traj)
            return traj
        except NonGenericTrajectory as exc:
            last_error = exc
            eps /= 2
    raise NonGenericTrajectory(
        f"could not build a generic circle motion for b_{i}{j}: {last_error}")


def _build_circle_trajectory(i: int, j: int, n: int, home: dict[int, Fraction],
                             rho: Fraction, lam: Fraction, eps: Fraction) -> Trajectory:
    quarters = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]

    sweep1 = _circle_sweep(home[i], rho, [home[u] for u in range(i + 1, j)], eps)
    sweep2 = _circle_sweep(home[j], lam, [rho], eps)
    sweep3 = _circle_sweep(rho, home[i],
                           [lam] + [home[u] for u in range(i + 1, j)], eps)
    sweep4 = _circle_sweep(lam, home[j], [], eps)

    def timed(points: list[Point], t0: Fraction, t1: Fraction) -> list[Breakpoint]:
        m = len(points) - 1
        return [(t0 + (t1 - t0) * Fraction(s, m), p) for s, p in enumerate(points)]

    paths: list[tuple[Breakpoint, ...]] = []
    for u in range(1, n + 1):
        pu = _circle_point(home[u])
        if u == i:
            bps = timed(sweep1, quarters[0], quarters[1])
            bps.append((quarters[2], bps[-1][1]))
            bps += timed(sweep3, quarters[2], quarters[3])[1:]
            bps.append((quarters[4], pu))
        elif u == j:
            bps = [(quarters[0], pu)]
            bps += timed(sweep2, quarters[1], quarters[2])
            bps.append((quarters[3], bps[-1][1]))
            bps += timed(sweep4, quarters[3], quarters[4])[1:]
        else:
            bps = [(quarters[0], pu), (quarters[4], pu)]
        paths.append(tuple(bps))
    return Trajectory(tuple(paths))


# ---------------------------------------------------------------------------
# Parabola motions (k = 4).

def _parabola_pt(t: Fraction, h: Fraction = Fraction(0)) -> Point:
    return (t, t * t + h)


def _static_circles(static_ts: Iterable[Fraction]) -> list[tuple[tuple[Fraction, ...], tuple[Point, Fraction]]]:
    """Circumcircles of all static triples, keyed by their abscissas."""
    out = []
    for ts in combinations(sorted(static_ts), 3):
        pts = [_parabola_pt(t) for t in ts]
        out.append((ts, circle_through(*pts)))
    return out


def _safe_ceiling(t: Fraction, circles) -> Fraction | None:
    """Rational lower bound on the height above the parabola at abscissa t at
    which the vertical ray first meets some static circle; None if it meets
    none.  Points strictly below the ceiling are on the same side of every
    circle as the parabola point itself."""
    y0 = t * t
    best: Fraction | None = None
    for (a, b), r2 in circles:
        q = (t - a) ** 2 + (y0 - b) ** 2 - r2
        beta = y0 - b  # Q(h) = h^2 + 2 beta h + q
        if q == 0:
            return Fraction(0)
        if q > 0:
            if beta >= 0:
                continue  # moving up leaves the circle further behind
            if (t - a) ** 2 >= r2:
                continue  # the vertical line misses the circle
            bound = q / (-2 * beta)
        else:
            if beta < 0:
                bound = -beta
            else:
                bound = -q / (2 * beta + 2 * ceil_sqrt(-q))
        best = bound if best is None else min(best, bound)
    return best


def _midline_point(t: Fraction, circles, fallback: Fraction) -> Point:
    ceiling = _safe_ceiling(t, circles)
    if ceiling is None:
        return _parabola_pt(t, fallback)
    if ceiling == 0:
        raise _BuildRetry("waypoint lands exactly on a circle")
    return _parabola_pt(t, min(ceiling / 2, fallback))


def _safe_polyline(p0: Point, p1: Point, circles, fallback: Fraction,
                   depth: int = 0) -> list[Point]:
    """Polyline from p0 to p1 crossing no static circle, built by splitting
    offending segments at the midline of the safe strip."""
    if all(_count_or_fail(p0, p1, c) == 0 for c in circles):
        return [p0, p1]
    if depth > 48:
        raise _BuildRetry("corridor subdivision did not converge")
    tm = (p0[0] + p1[0]) / 2
    mid = _midline_point(tm, circles, fallback)
    left = _safe_polyline(p0, mid, circles, fallback, depth + 1)
    right = _safe_polyline(mid, p1, circles, fallback, depth + 1)
    return left[:-1] + right


def _hop(t_u: Fraction, base_l: Point, base_r: Point, h: Fraction,
         fan, others) -> list[Point]:
    """Two-segment hop over the parabola point at t_u: up to the apex
    directly above it, then down.  Exactly one crossing of each circle
    through the point, none of any other circle."""
    apex = _parabola_pt(t_u, h)
    for circle in fan:
        total = _count_or_fail(base_l, apex, circle) + _count_or_fail(apex, base_r, circle)
        if total != 1:
            raise _BuildRetry(f"hop crosses a fan circle {total} times")
    for circle in others:
        if _count_or_fail(base_l, apex, circle) or _count_or_fail(apex, base_r, circle):
            raise _BuildRetry("hop strays into a foreign circle")
    return [base_l, apex, base_r]


@dataclass
class _StagePlan:
    mover: int
    start_t: Fraction
    end_t: Fraction
    rounded: list[Fraction]       # abscissas hopped over, in travel order
    static_ts: list[Fraction]     # abscissas of all other points


def _mover_stage_path(plan: _StagePlan, scale: Fraction) -> list[Point]:
    """Waypoints of one stage: lift off the parabola, alternate safe
    corridors and hops over the rounded abscissas, then drop back down."""
    statics = sorted(plan.static_ts)
    keyed = _static_circles(statics)
    circles = [c for _, c in keyed]
    landmarks = sorted(set(statics + [plan.start_t, plan.end_t] + plan.rounded))

    def local_gap(t: Fraction) -> Fraction:
        gaps = [abs(t - s) for s in landmarks if s != t]
        return min(gaps)

    eta = min(local_gap(plan.start_t), local_gap(plan.end_t)) * scale / 64

    def low_point(t: Fraction) -> Point:
        ceiling = _safe_ceiling(t, circles)
        h = eta if ceiling is None else min(eta, ceiling / 2)
        if h <= 0:
            raise _BuildRetry("no clearance above a corridor anchor")
        return _parabola_pt(t, h)

    fan_of = {t: [c for ts, c in keyed if t in ts] for t in plan.rounded}
    others_of = {t: [c for ts, c in keyed if t not in ts] for t in plan.rounded}

    lift = low_point(plan.start_t)
    path = [_parabola_pt(plan.start_t), lift]
    cursor = lift
    for t_u in plan.rounded:
        delta = local_gap(t_u) * scale / 16
        side = 1 if plan.end_t > plan.start_t else -1
        base_l = low_point(t_u - side * delta)
        base_r = low_point(t_u + side * delta)
        corridor = _safe_polyline(cursor, base_l, circles, eta)
        path += corridor[1:]
        hop = _hop(t_u, base_l, base_r, local_gap(t_u) * scale / 8 * (2 * abs(t_u) + 1),
                   fan_of[t_u], others_of[t_u])
        path += hop[1:]
        cursor = base_r
    drop = low_point(plan.end_t)
    corridor = _safe_polyline(cursor, drop, circles, eta)
    path += corridor[1:]
    path.append(_parabola_pt(plan.end_t))
    # validate the lift and drop segments too
    for seg0, seg1 in ((path[0], path[1]), (path[-2], path[-1])):
        for c in circles:
            if _count_or_fail(seg0, seg1, c) != 0:
                raise _BuildRetry("lift/drop segment crosses a circle")
    return _polyline(path)


def _motion_word_g4(i: int, j: int, cfg: ParabolaConfig) -> tuple[tuple[int, ...], ...]:
    """Expected event word of the four-stage from-above motion: rightward
    passes give the crossing-order blocks, the return passes give their
    reversals, and the middle block appears twice (once when i passes j,
    once when j passes the parked i)."""
    letters: list[tuple[int, ...]] = []
    for u in range(i + 1, j + 1):
        letters.extend(passing_word_geometric(i, u, cfg))
    letters.extend(passing_word_geometric(i, j, cfg))
    for u in range(j - 1, i, -1):
        letters.extend(reversed(passing_word_geometric(i, u, cfg)))
    return tuple(letters)


def simulate_bij_parabola(i: int, j: int, n: int, *, max_retries: int = 12) -> Trajectory:
    """Closed motion realising b_ij on a fast-growing parabola configuration.

    The abscissas come from the canonical growth sequence, upgraded until the
    case-2/3 growth condition holds, so the crossing orders are frozen;
    the construction is validated two ways: every segment is checked exactly
    against every static circle during the build, and the full concyclicity
    trace must reproduce the crossing-order word before the trajectory is
    returned (offsets are halved otherwise, bounded retries).
    """
    if n < 4:
        raise InvalidContext(f"parabola motions need n >= 4, got {n}")
    if not (1 <= i < j <= n):
        raise InvalidPair(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    cfg = upgrade_to_case23(growth_sequence_case1(n))
    expected = _motion_word_g4(i, j, cfg)
    scale = Fraction(1)
    last_error: Exception | None = None
    for _ in range(max_retries):
        try:
            traj = _build_parabola_trajectory(i, j, n, cfg, scale)
            word = concyclic_trace(traj)
            if word.letters == expected:
                return traj
            last_error = RuntimeError("traced word disagrees with the crossing orders")
        except (_BuildRetry, NonGenericTrajectory) as exc:
            last_error = exc
        scale /= 2
    raise NonGenericTrajectory(
        f"could not build a generic parabola motion for b_{i}{j}: {last_error}")


def _build_parabola_trajectory(i: int, j: int, n: int, cfg: ParabolaConfig,
                               scale: Fraction) -> Trajectory:
    t = {u: cfg.t(u) for u in range(1, n + 1)}
    gap_right = (t[j + 1] - t[j]) if j < n else (t[j] - t[j - 1])
    delta = gap_right / 4
    t_star = t[j] + delta          # stage-1 parking spot for i
    t_park2 = t[j] + 3 * delta / 2  # stage-2 landing spot for j

    homes_not = lambda *skip: [t[u] for u in range(1, n + 1) if u not in skip]
    plans = [
        _StagePlan(i, t[i], t_star, [t[u] for u in range(i + 1, j + 1)], homes_not(i)),
        _StagePlan(j, t[j], t_park2, [t_star], homes_not(i, j) + [t_star]),
        _StagePlan(i, t_star, t[i], [t[u] for u in range(j - 1, i, -1)],
                   homes_not(i, j) + [t_park2]),
        _StagePlan(j, t_park2, t[j], [], homes_not(j)),
    ]
    quarters = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]
    stage_paths = [_mover_stage_path(p, scale) for p in plans]

    def timed(points: list[Point], t0: Fraction, t1: Fraction) -> list[Breakpoint]:
        m = len(points) - 1
        return [(t0 + (t1 - t0) * Fraction(s, m), p) for s, p in enumerate(points)]

    paths: list[tuple[Breakpoint, ...]] = []
    for u in range(1, n + 1):
        pu = _parabola_pt(t[u])
        if u == i:
            bps = timed(stage_paths[0], quarters[0], quarters[1])
            bps.append((quarters[2], bps[-1][1]))
            bps += timed(stage_paths[2], quarters[2], quarters[3])[1:]
            bps.append((quarters[4], pu))
        elif u == j:
            bps = [(quarters[0], pu)]
            bps += timed(stage_paths[1], quarters[1], quarters[2])
            bps.append((quarters[3], bps[-1][1]))
            bps += timed(stage_paths[3], quarters[3], quarters[4])[1:]
        else:
            bps = [(quarters[0], pu), (quarters[4], pu)]
        paths.append(tuple(bps))
    return Trajectory(tuple(paths))


# ---------------------------------------------------------------------------
# JSON serialisation: rationals as "p/q" strings.

def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _parse_frac(s: str) -> Fraction:
    return Fraction(s)


def trajectory_to_json(traj: Trajectory) -> str:
    data = {
        "n": traj.n,
        "paths": [
            [[_frac_str(t), [_frac_str(x), _frac_str(y)]] for t, (x, y) in path]
            for path in traj.paths
        ],
    }
    return json.dumps(data, sort_keys=True)


def trajectory_from_json(text: str) -> Trajectory:
    data = json.loads(text)
    paths = tuple(
        tuple((_parse_frac(t), (_parse_frac(x), _parse_frac(y))) for t, (x, y) in path)
        for path in data["paths"]
    )
    return Trajectory(paths)


def event_log(events: Iterable[SecantEvent]) -> list[dict]:
    return [
        {
            "time_lo": _frac_str(ev.root.lo),
            "time_hi": _frac_str(ev.root.hi),
            "kind": ev.kind,
            "participants": list(ev.participants),
        }
        for ev in events
    ]
