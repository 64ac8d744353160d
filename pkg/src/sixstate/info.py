"""Information measures for the noisy six-state attack analysis.

All logarithms are base 2 and ``0 log 0`` is taken to be 0.  Throughout,
p is the white-noise weight of the source and q is Bob's observed error
rate; the physical domain is ``0 <= p < 1`` and ``p/2 <= q <= 1/2``.

The closed forms in this module have two independent cross-checks
elsewhere in the package: `mutual_information` applied to the joint
outcome table of the eavesdropper, and the brute-force search in
`sixstate.optimize`.
"""

import math

import numpy as np

from .exceptions import DomainError

__all__ = [
    "tau",
    "check_domain",
    "mutual_information",
    "i_ab",
    "beta_sq_optimal",
    "i_ae_closed_form",
    "i_ae_optimal",
    "i_ae_antiphase",
    "i_ae_general",
]

# Negative values closer to zero than this are treated as round-off.
_NEG_TOL = 1e-12


def _xlog2(x):
    """x log2 x with the 0 log 0 = 0 convention."""
    if x == 0.0:
        return 0.0
    return x * math.log2(x)


def _clamp_nonneg(x, what):
    x = float(x)
    if x < -_NEG_TOL:
        raise DomainError(f"{what} is negative beyond round-off: {x}")
    return max(x, 0.0)


def tau(x, y):
    """x log2 x + y log2 y - (x + y) log2 (x + y).

    The building block of the eavesdropper information formulas.  Inputs
    must be nonnegative; values in [-1e-12, 0) clamp to zero.
    """
    x = _clamp_nonneg(x, "tau argument")
    y = _clamp_nonneg(y, "tau argument")
    return _xlog2(x) + _xlog2(y) - _xlog2(x + y)


def check_domain(p, q):
    """Validate a noise and error-rate pair, clamping boundary round-off.

    Returns (p, q) with q forced into [p/2, 1/2].

    Raises
    ------
    DomainError
        If p is outside [0, 1) or q outside [p/2, 1/2] by more than
        1e-12.
    """
    p = float(p)
    q = float(q)
    if not (math.isfinite(p) and 0.0 <= p < 1.0):
        raise DomainError(f"noise parameter p={p} outside [0, 1)")
    if not math.isfinite(q) or q < p / 2.0 - _NEG_TOL or q > 0.5 + _NEG_TOL:
        raise DomainError(f"error rate q={q} outside [p/2, 1/2] for p={p}")
    return p, min(max(q, p / 2.0), 0.5)


def mutual_information(joint):
    """Mutual information in bits of a joint probability table.

    Parameters
    ----------
    joint : array-like
        2-d table ``p(x, y)`` with rows indexed by the first variable.
        Entries must be nonnegative up to -1e-12 round-off and the total
        must be 1 within 1e-10.

    Returns
    -------
    float
        ``sum p(x,y) log2 p(y|x) - sum p(y) log2 p(y)``, clamped to be
        nonnegative against round-off.
    """
    p = np.asarray(joint, dtype=float)
    if p.ndim != 2:
        raise DomainError(f"joint table must be 2-d, got shape {p.shape}")
    if float(p.min()) < -_NEG_TOL:
        raise DomainError(f"joint table has negative entry {float(p.min())}")
    p = np.maximum(p, 0.0)
    total = float(p.sum())
    if abs(total - 1.0) > 1e-10:
        raise DomainError(f"joint table sums to {total}, not 1")
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    mask = p > 0.0
    cond = np.broadcast_to(px[:, None], p.shape)
    term1 = float(np.sum(p[mask] * np.log2(p[mask] / cond[mask])))
    nz = py > 0.0
    term2 = float(np.sum(py[nz] * np.log2(py[nz])))
    value = term1 - term2
    if value < 0.0:
        if value < -_NEG_TOL:
            raise DomainError(f"mutual information {value} below round-off floor")
        value = 0.0
    return value


def i_ab(q):
    """Mutual information between Alice and Bob at error rate q.

    ``1 + q log2 q + (1 - q) log2 (1 - q)``; exactly 1 at q = 0 and
    exactly 0 at q = 1/2.
    """
    q = float(q)
    if not math.isfinite(q) or q < -_NEG_TOL or q > 0.5 + _NEG_TOL:
        raise DomainError(f"error rate q={q} outside [0, 1/2]")
    q = min(max(q, 0.0), 0.5)
    return 1.0 + _xlog2(q) + _xlog2(1.0 - q)


def beta_sq_optimal(p, q, branch="plus"):
    """Squared |10> weight of the best probe attached to the kept signal.

    The stationarity analysis leaves two symmetric roots,

        1/2 * (1 +- sqrt((q - p/2) (2 - 3q - p/2)) / (1 - p/2 - q)),

    which sum to 1.  `branch` selects "plus" (the root >= 1/2, the
    conventional choice) or "minus".
    """
    p, q = check_domain(p, q)
    if branch not in ("plus", "minus"):
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")
    radicand = (q - p / 2.0) * (2.0 - 3.0 * q - p / 2.0)
    # Nonnegative for every q <= 1/2; a violation means broken domain logic.
    radicand = _clamp_nonneg(radicand, "root radicand")
    root = math.sqrt(radicand) / (1.0 - p / 2.0 - q)
    root = min(root, 1.0)
    if branch == "plus":
        return (1.0 + root) / 2.0
    return (1.0 - root) / 2.0


def i_ae_closed_form(p, q, beta_sq):
    """Eve's information for a given probe weight on the aligned-phase branch.

    With ``x = (1 - p) beta_sq + p/2`` this is

        1 + ((1 - p/2 - q) / (1 - p)) * (x log2 x + (1 - x) log2 (1 - x))
          + ((q - p/2) / (1 - p)) * ((p/2) log2 (p/2) + (1 - p/2) log2 (1 - p/2)).

    Swapping ``beta_sq`` for ``1 - beta_sq`` swaps the two logarithm
    terms of the first brace and leaves the value unchanged.
    """
    p, q = check_domain(p, q)
    beta_sq = float(beta_sq)
    if beta_sq < -_NEG_TOL or beta_sq > 1.0 + _NEG_TOL:
        raise DomainError(f"beta_sq={beta_sq} outside [0, 1]")
    beta_sq = min(max(beta_sq, 0.0), 1.0)
    d = (q - p / 2.0) / (1.0 - p)
    pref = (1.0 - p / 2.0 - q) / (1.0 - p)
    x = (1.0 - p) * beta_sq + p / 2.0
    y = (1.0 - p) * (1.0 - beta_sq) + p / 2.0
    brace1 = _xlog2(x) + _xlog2(y)
    brace2 = _xlog2(p / 2.0) + _xlog2(1.0 - p / 2.0)
    return 1.0 + pref * brace1 + d * brace2


def i_ae_optimal(p, q):
    """Eve's maximal information at noise p and error rate q.

    Evaluates `i_ae_closed_form` at the plus root of `beta_sq_optimal`.
    Returns exactly 0 at q = p/2, where the probe cannot interact
    without raising the error rate.
    """
    p, q = check_domain(p, q)
    if q <= p / 2.0:
        return 0.0
    return i_ae_closed_form(p, q, beta_sq_optimal(p, q, "plus"))


def i_ae_antiphase(p, q):
    """Eve's information at the opposed-phase stationary point.

    ``((q - p/2) / (1 - p)) * (1 + (p/2) log2 (p/2) + (1 - p/2) log2 (1 - p/2))``.
    Never exceeds `i_ae_optimal`; at p = 0 it reduces to q.
    """
    p, q = check_domain(p, q)
    if q <= p / 2.0:
        return 0.0
    d = (q - p / 2.0) / (1.0 - p)
    return d * (1.0 + _xlog2(p / 2.0) + _xlog2(1.0 - p / 2.0))


def i_ae_general(params):
    """Eve's information for arbitrary probe parameters.

    Parameters
    ----------
    params : AttackParameters
        Any parameter point; only the four squared magnitudes enter, so
        the value is independent of the phases.

    Returns
    -------
    float
        The tau-form expression over Eve's outcome probabilities.  It
        agrees with `mutual_information` applied to the joint table that
        pairs Alice's uniform bit with Eve's four outcomes.
    """
    p, q = check_domain(params.p, params.q)
    ba = params.r_beta_a ** 2
    bc = params.r_beta_c ** 2
    ga = params.r_gamma_a ** 2
    gc = params.r_gamma_c ** 2
    d = (q - p / 2.0) / (1.0 - p)
    pref = (1.0 - p / 2.0 - q) / (1.0 - p)
    half = p / 2.0
    t_beta = tau((1.0 - half) * ba + half * bc, half * ba + (1.0 - half) * bc)
    t_gamma = tau((1.0 - half) * ga + half * gc, half * ga + (1.0 - half) * gc)
    t_noise = tau(1.0 - half, half)
    return 1.0 + 0.5 * pref * (t_beta + t_gamma) + d * t_noise
