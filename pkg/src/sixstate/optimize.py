"""Brute-force maximization of Eve's information and stationarity checks.

The constrained seven-parameter attack family collapses to a search
over the two squared weights ``(beta_a_sq, beta_c_sq)`` in the unit
square: the unit-norm conditions fix the gamma radii, and the overlap
condition fixes the cosine of the phase difference wherever a feasible
phase exists.  A deterministic lattice sweep with iterated window
refinement then serves as an oracle that is independent of every closed
form in `sixstate.info`.

The module also evaluates the first-order optimality system: the four
radius derivatives of the objective against the three constraint
gradients, fitted by least squares.  A small residual certifies a
stationary point.
"""

import dataclasses
import math

import numpy as np

from .attack import AttackParameters, overlap_target, parameters_from_squares
from .exceptions import ConstraintError, DomainError, InfeasibleError
from .info import check_domain, i_ae_general, beta_sq_optimal, tau

__all__ = [
    "OptimizationResult",
    "LagrangeResidual",
    "feasible_phase",
    "grid_refine_maximize",
    "lagrange_residual",
    "phase_branch_scan",
    "verify_root_pair",
]

# Absolute slack when testing whether a lattice point admits a phase.
_FEAS_SLACK = 1e-12
# Residual cut separating true overlap-boundary roots from the spurious
# roots introduced by squaring the boundary equation.
_BOUNDARY_CUT = 1e-9


@dataclasses.dataclass(frozen=True)
class OptimizationResult:
    """Outcome of `grid_refine_maximize`.

    branch is "phase0" when the best point sits on the aligned-phase
    side (cosine of the phase difference >= 0) and "phasepi" otherwise.
    evaluations counts objective evaluations across all rounds.
    """

    best_params: AttackParameters
    best_value: float
    branch: str
    evaluations: int


@dataclasses.dataclass(frozen=True)
class LagrangeResidual:
    """Least-squares multipliers and residual of the stationarity system.

    degenerate marks points where the system carries no information
    (the information surface is identically zero, or every coefficient
    row vanishes); there the residual is reported as 0.
    """

    lambda1: float
    lambda2: float
    lambda3: float
    residual_norm: float
    degenerate: bool = False


def feasible_phase(r_beta_a_sq, r_beta_c_sq, p, q):
    """Cosine of the phase difference that meets the overlap condition.

    Solves ``pb + pg * cos = overlap_target(p, q)`` where pb and pg are
    the products of the beta and gamma radii.  Returns the cosine
    clamped to [-1, 1] when a solution exists, and None otherwise.
    When both gamma radii vanish the equation drops the cosine entirely;
    a (conventional) 1.0 is returned iff it already holds.
    """
    p, q = check_domain(p, q)
    ba = float(r_beta_a_sq)
    bc = float(r_beta_c_sq)
    for val in (ba, bc):
        if not (-1e-12 <= val <= 1.0 + 1e-12):
            raise DomainError(f"squared weight {val} outside [0, 1]")
    ba = min(max(ba, 0.0), 1.0)
    bc = min(max(bc, 0.0), 1.0)
    t = overlap_target(p, q)
    pb = math.sqrt(ba * bc)
    pg = math.sqrt((1.0 - ba) * (1.0 - bc))
    if pg == 0.0:
        if abs(pb - t) <= _FEAS_SLACK:
            return 1.0
        return None
    cos = (t - pb) / pg
    if abs(cos) > 1.0 + _FEAS_SLACK:
        return None
    return min(max(cos, -1.0), 1.0)


def _tau_grid(x, y):
    """Vectorized tau over nonnegative arrays (0 log 0 = 0)."""
    xs = np.where(x > 0.0, x, 1.0)
    ys = np.where(y > 0.0, y, 1.0)
    s = x + y
    ss = np.where(s > 0.0, s, 1.0)
    return x * np.log2(xs) + y * np.log2(ys) - s * np.log2(ss)


def _objective(p, q, ba, bc):
    """Eve's information over arrays of squared weights.

    Identical to `sixstate.info.i_ae_general` but vectorized and
    phase-free (the objective never depends on the phases).
    """
    half = p / 2.0
    d = (q - half) / (1.0 - p)
    pref = (1.0 - half - q) / (1.0 - p)
    x1 = (1.0 - half) * ba + half * bc
    y1 = half * ba + (1.0 - half) * bc
    x2 = (1.0 - half) * (1.0 - ba) + half * (1.0 - bc)
    y2 = half * (1.0 - ba) + (1.0 - half) * (1.0 - bc)
    t_noise = tau(1.0 - half, half)
    return 1.0 + 0.5 * pref * (_tau_grid(x1, y1) + _tau_grid(x2, y2)) + d * t_noise


def _boundary_candidates(t, axis_vals, lo, hi):
    """Exact overlap-boundary points above each lattice column.

    For each fixed first coordinate a, solves ``pb +- pg = t`` for the
    second coordinate.  Squaring merges the two signs into one
    quadratic, so each root is checked against the unsquared equations
    and kept only if one of them genuinely holds.
    """
    out_a = []
    out_c = []
    for a in axis_vals:
        disc = (1.0 - t * t) * (1.0 - a)
        if disc < 0.0:
            continue
        root = math.sqrt(disc)
        base = t * math.sqrt(a)
        for u in (base + root, base - root):
            if u < 0.0:
                if u < -1e-9:
                    continue
                u = 0.0
            if u > 1.0:
                if u > 1.0 + 1e-9:
                    continue
                u = 1.0
            c = u * u
            if not (lo - 1e-15 <= c <= hi + 1e-15):
                continue
            pb = math.sqrt(a * c)
            pg = math.sqrt((1.0 - a) * (1.0 - c))
            if min(abs(pb + pg - t), abs(pb - pg - t)) > _BOUNDARY_CUT:
                continue
            out_a.append(a)
            out_c.append(min(max(c, lo), hi))
    return np.array(out_a), np.array(out_c)


def grid_refine_maximize(p, q, grid=201, refine_iters=6):
    """Maximize Eve's information by lattice sweep plus window refinement.

    Sweeps a grid x grid lattice over the two squared weights in
    [0, 1]^2, keeping points that admit a feasible phase, and augments
    each round with the exact phase-boundary points above every lattice
    column (the maximum often sits on that boundary, where a plain
    lattice converges too slowly).  After the coarse round the window
    shrinks by a factor of 10 around the best point, refine_iters
    times.  Deterministic: ties go to the earliest candidate in scan
    order, and of the two symmetric maximizers the one with the larger
    beta_a_sq is reported.

    Parameters
    ----------
    p, q : float
        Noise weight and error rate.
    grid : int
        Lattice points per axis, at least 51.
    refine_iters : int
        Number of refinement rounds.

    Returns
    -------
    OptimizationResult
    """
    p, q = check_domain(p, q)
    grid = int(grid)
    if grid < 51:
        raise DomainError(f"grid={grid} too coarse; need at least 51")
    refine_iters = int(refine_iters)
    if refine_iters < 0:
        raise DomainError(f"refine_iters={refine_iters} must be nonnegative")
    t = overlap_target(p, q)

    lo_a, hi_a = 0.0, 1.0
    lo_c, hi_c = 0.0, 1.0
    best_a = best_c = best_j = None
    evaluations = 0

    for round_idx in range(refine_iters + 1):
        av = np.linspace(lo_a, hi_a, grid)
        cv = np.linspace(lo_c, hi_c, grid)
        aa, cc = np.meshgrid(av, cv, indexing="ij")
        aa = aa.ravel()
        cc = cc.ravel()
        ba_bound, bc_bound = _boundary_candidates(t, av, lo_c, hi_c)
        bc_bound2, ba_bound2 = _boundary_candidates(t, cv, lo_a, hi_a)
        aa = np.concatenate([aa, ba_bound, ba_bound2])
        cc = np.concatenate([cc, bc_bound, bc_bound2])

        pb = np.sqrt(aa * cc)
        pg = np.sqrt((1.0 - aa) * (1.0 - cc))
        feasible = (t <= pb + pg + _FEAS_SLACK) & (t >= pb - pg - _FEAS_SLACK)
        if not np.any(feasible):
            if round_idx == 0:
                raise InfeasibleError(
                    f"no feasible attack point found for p={p}, q={q}"
                )
            break
        fa = aa[feasible]
        fc = cc[feasible]
        vals = _objective(p, q, fa, fc)
        evaluations += vals.size
        k = int(np.argmax(vals))
        cand = (float(fa[k]), float(fc[k]), float(vals[k]))
        if best_j is None or cand[2] > best_j:
            best_a, best_c, best_j = cand
        # Keep the window centered on the larger-weight twin of the two
        # mirror-symmetric maximizers so refinement homes in on it.
        if best_a < 0.5:
            mirror_j = float(_objective(p, q, 1.0 - best_a, 1.0 - best_c))
            evaluations += 1
            if mirror_j >= best_j:
                best_a, best_c, best_j = 1.0 - best_a, 1.0 - best_c, mirror_j
        span_a = (hi_a - lo_a) / 10.0
        span_c = (hi_c - lo_c) / 10.0
        lo_a = max(0.0, best_a - span_a / 2.0)
        hi_a = min(1.0, best_a + span_a / 2.0)
        lo_c = max(0.0, best_c - span_c / 2.0)
        hi_c = min(1.0, best_c + span_c / 2.0)

    cos = feasible_phase(best_a, best_c, p, q)
    if cos is None:
        pb = math.sqrt(best_a * best_c)
        pg = math.sqrt((1.0 - best_a) * (1.0 - best_c))
        cos = 1.0 if pg == 0.0 else min(max((t - pb) / pg, -1.0), 1.0)
    params = parameters_from_squares(p, q, best_a, best_c, cos)
    branch = "phase0" if cos >= 0.0 else "phasepi"
    return OptimizationResult(
        best_params=params,
        best_value=best_j,
        branch=branch,
        evaluations=evaluations,
    )


def _wlog2(w, x):
    """w log2 x, dropping the term when its weight is exactly zero."""
    if w == 0.0:
        return 0.0
    return w * math.log2(x)


def lagrange_residual(params):
    """First-order optimality check at a constrained parameter point.

    Builds the four stationarity equations (one per radius) in the
    three multipliers of the overlap and norm constraints, using Eve's
    outcome probabilities, and solves them in least squares.  The
    residual 2-norm is ~0 at a true constrained optimum and order one a
    short distance away.

    Raises
    ------
    ConstraintError
        If the point violates the overlap condition beyond 1e-8 (the
        norm conditions are enforced by `AttackParameters` itself).
    """
    p, q = params.p, params.q
    rba, rga = params.r_beta_a, params.r_gamma_a
    rbc, rgc = params.r_beta_c, params.r_gamma_c
    cos = params.cos_delta_phi
    t = overlap_target(p, q)
    g1 = rba * rbc + rga * rgc * cos - t
    if abs(g1) > 1e-8:
        raise ConstraintError(f"overlap condition violated by {g1}")

    if q - p / 2.0 <= _FEAS_SLACK:
        # The information vanishes identically on the feasible set, so
        # stationarity holds trivially and the fit is meaningless.
        return LagrangeResidual(0.0, 0.0, 0.0, 0.0, degenerate=True)

    half = p / 2.0
    pref = (1.0 - half - q) / (1.0 - p)
    m2 = pref * ((1.0 - half) * rba ** 2 + half * rbc ** 2)
    m6 = pref * (half * rba ** 2 + (1.0 - half) * rbc ** 2)
    m3 = pref * ((1.0 - half) * rga ** 2 + half * rgc ** 2)
    m7 = pref * (half * rga ** 2 + (1.0 - half) * rgc ** 2)

    def rhs_entry(r, m_top, m_bot, w_top, w_bot):
        if r == 0.0:
            return 0.0
        f = pref * (
            _wlog2(w_top, m_top) + _wlog2(w_bot, m_bot) - math.log2(m_top + m_bot)
        )
        return r * f

    rhs = np.array(
        [
            rhs_entry(rba, m2, m6, 1.0 - half, half),
            rhs_entry(rbc, m2, m6, half, 1.0 - half),
            rhs_entry(rga, m3, m7, 1.0 - half, half),
            rhs_entry(rgc, m3, m7, half, 1.0 - half),
        ]
    )
    coeff = np.array(
        [
            [rbc, 2.0 * rba, 0.0],
            [rba, 0.0, 2.0 * rbc],
            [rgc * cos, 2.0 * rga, 0.0],
            [rga * cos, 0.0, 2.0 * rgc],
        ]
    )
    if float(np.abs(coeff).max()) < 1e-12:
        return LagrangeResidual(0.0, 0.0, 0.0, 0.0, degenerate=True)
    lam, _, _, _ = np.linalg.lstsq(coeff, rhs, rcond=None)
    residual = float(np.linalg.norm(coeff @ lam - rhs))
    return LagrangeResidual(
        float(lam[0]), float(lam[1]), float(lam[2]), residual, degenerate=False
    )


def phase_branch_scan(p, q, cos_sign, samples=2001):
    """Sample the attack family along one pinned-phase boundary.

    The boundary where the phase cosine is pinned to +1 or -1 is a
    curve in the (beta_a_sq, beta_c_sq) square.  Writing the squared
    weights as squared cosines of angles turns it into straight angle
    arcs, sampled uniformly here.

    Parameters
    ----------
    p, q : float
        Noise weight and error rate.
    cos_sign : {+1, -1}
        Which pinned branch to scan.
    samples : int
        Points per arc, at least 2.

    Returns
    -------
    list of (beta_a_sq, beta_c_sq, value) array triples
        Two arcs for the +1 branch (mirror images under the
        beta/gamma exchange), one for the -1 branch.
    """
    p, q = check_domain(p, q)
    if cos_sign not in (1, -1, 1.0, -1.0):
        raise DomainError(f"cos_sign must be +1 or -1, got {cos_sign!r}")
    samples = int(samples)
    if samples < 2:
        raise DomainError(f"samples={samples} must be at least 2")
    t = overlap_target(p, q)
    theta = math.acos(min(max(t, -1.0), 1.0))
    arcs = []
    if cos_sign > 0:
        # pb + pg = t  <=>  |alpha - chi| = theta.
        n = max(1, samples)
        base = np.linspace(0.0, math.pi / 2.0 - theta, n)
        pairs = ((base + theta, base), (base, base + theta))
    else:
        # pb - pg = t  <=>  alpha + chi = theta.
        base = np.linspace(0.0, theta, samples)
        pairs = ((base, theta - base),)
    for alpha, chi in pairs:
        ba = np.cos(alpha) ** 2
        bc = np.cos(chi) ** 2
        arcs.append((ba, bc, _objective(p, q, ba, bc)))
    return arcs


def _local_max_runs(values):
    """Indices of local maxima, one representative per plateau run.

    Equal-valued runs collapse to a single candidate (its first index);
    a run counts as a maximum when every existing neighbor run is
    strictly lower.  A constant array yields exactly one maximum.
    """
    n = len(values)
    starts = [0]
    for i in range(1, n):
        if values[i] != values[starts[-1]]:
            starts.append(i)
    out = []
    for j, s in enumerate(starts):
        left_ok = j == 0 or values[starts[j - 1]] < values[s]
        right_ok = j == len(starts) - 1 or values[starts[j + 1]] < values[s]
        if left_ok and right_ok:
            out.append(s)
    return out


def verify_root_pair(p, q, samples=4001, loc_tol=1e-3, val_tol=1e-10):
    """Check that the aligned-phase boundary has exactly two maxima.

    Scans both arcs of the +1 branch and confirms the local maxima of
    the information come as one mirror pair, located at the two
    analytic stationary weights within loc_tol and equal in value
    within val_tol.  Degenerate geometries where each arc collapses to
    a point count as a coincident pair.
    """
    p, q = check_domain(p, q)
    arcs = phase_branch_scan(p, q, 1, samples=samples)
    maxima = []
    for ba, bc, vals in arcs:
        for idx in _local_max_runs(vals):
            maxima.append((float(ba[idx]), float(vals[idx])))
    if len(maxima) != 2:
        return False
    (ba1, v1), (ba2, v2) = maxima
    if abs(v1 - v2) > val_tol:
        return False
    lo, hi = sorted((ba1, ba2))
    plus = beta_sq_optimal(p, q, "plus")
    minus = beta_sq_optimal(p, q, "minus")
    return abs(hi - plus) <= loc_tol and abs(lo - minus) <= loc_tol
