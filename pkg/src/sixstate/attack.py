"""Eavesdropping attack construction for the noisy six-state protocol.

Eve attaches a two-qubit probe to each transmitted signal.  The attack
family is parameterized by `AttackParameters`: four nonnegative radii
and two phases describing the probe states paired with the kept and
flipped signal, under the normalization that each radius pair squares
to 1.  From these, the module builds the probe states, assembles the
8x2 interaction isometry, and produces Eve's outcome distribution both
in closed form and by direct density-matrix simulation (the latter acts
as an independent oracle for the former).

Probe basis ordering is |00>, |01>, |10>, |11> (index = 2*left + right);
joint signal-probe vectors use index = 4*signal + probe as in
`sixstate.linalg`.
"""

import dataclasses
import math

import numpy as np

from . import protocol
from .exceptions import ConstraintError, DomainError
from .info import check_domain
from .linalg import adjoint, is_isometry, partial_trace_probe, partial_trace_signal

__all__ = [
    "AttackParameters",
    "AncillaSet",
    "overlap_target",
    "optimal_parameters",
    "antiphase_parameters",
    "parameters_from_squares",
    "build_ancillas",
    "constraint_residuals",
    "build_isometry",
    "eve_distribution_closed_form",
    "simulate_eve_distribution",
    "simulate_qber",
    "bob_symmetry_residual",
]

_NORM_TOL = 1e-10

# Eve measures her probe in the computational basis; outcomes are
# reported in the order |00>, |10>, |01>, |11>.
_OUTCOME_ORDER = (0, 2, 1, 3)


@dataclasses.dataclass(frozen=True)
class AttackParameters:
    """One point of the constrained attack family.

    Parameters
    ----------
    p : float
        White-noise weight of the source, in [0, 1).
    q : float
        Bob's error rate, in [p/2, 1/2].
    r_beta_a, r_gamma_a : float
        Magnitudes of the |10> and |01> components of the probe state
        paired with the kept signal; squares must sum to 1 within 1e-10.
    phi_gamma_a : float
        Phase (radians) of the |01> component of that probe state.
    r_beta_c, r_gamma_c : float
        Same magnitudes for the probe state paired with the flipped
        signal.
    phi_gamma_c : float
        Phase of its |01> component.

    Only the phase difference ``phi_gamma_a - phi_gamma_c`` affects any
    observable quantity.
    """

    p: float
    q: float
    r_beta_a: float
    r_gamma_a: float
    phi_gamma_a: float
    r_beta_c: float
    r_gamma_c: float
    phi_gamma_c: float

    def __post_init__(self):
        p, q = check_domain(self.p, self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        for name in ("r_beta_a", "r_gamma_a", "r_beta_c", "r_gamma_c"):
            r = float(getattr(self, name))
            if not math.isfinite(r) or r < 0.0:
                raise DomainError(f"{name}={r} must be a nonnegative real")
            object.__setattr__(self, name, r)
        object.__setattr__(self, "phi_gamma_a", float(self.phi_gamma_a))
        object.__setattr__(self, "phi_gamma_c", float(self.phi_gamma_c))
        na = self.r_beta_a ** 2 + self.r_gamma_a ** 2
        nc = self.r_beta_c ** 2 + self.r_gamma_c ** 2
        if abs(na - 1.0) > _NORM_TOL:
            raise ConstraintError(f"kept-signal probe norm squared is {na}, not 1")
        if abs(nc - 1.0) > _NORM_TOL:
            raise ConstraintError(f"flipped-signal probe norm squared is {nc}, not 1")

    @property
    def beta_a_sq(self):
        """Squared |10> weight of the kept-signal probe state."""
        return self.r_beta_a ** 2

    @property
    def beta_c_sq(self):
        """Squared |10> weight of the flipped-signal probe state."""
        return self.r_beta_c ** 2

    @property
    def delta_phi(self):
        """Phase difference phi_gamma_a - phi_gamma_c."""
        return self.phi_gamma_a - self.phi_gamma_c

    @property
    def cos_delta_phi(self):
        return math.cos(self.delta_phi)


@dataclasses.dataclass(frozen=True)
class AncillaSet:
    """The four probe states, as normalized 4-component vectors.

    a and c are the states attached to the kept signal branch; b and d
    (fixed to |00> and |11>) to the disturbed branch.  b and d are
    exactly orthogonal by construction.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            vec = np.asarray(getattr(self, name), dtype=complex)
            if vec.shape != (4,):
                raise DomainError(f"probe state {name} must have 4 components")
            norm = float(np.linalg.norm(vec))
            if abs(norm - 1.0) > 1e-12:
                raise ConstraintError(f"probe state {name} has norm {norm}, not 1")
            object.__setattr__(self, name, vec)


def overlap_target(p, q):
    """Required Re<a|c> so the attack reproduces error rate q at noise p.

    ``2 (1 - 2q) / (2 - p - 2q)``; equals 1 at q = p/2 (the probes must
    coincide, so Eve learns nothing) and 0 at q = 1/2.
    """
    p, q = check_domain(p, q)
    return 2.0 * (1.0 - 2.0 * q) / (2.0 - p - 2.0 * q)


def parameters_from_squares(p, q, beta_a_sq, beta_c_sq, cos_dphi):
    """Build `AttackParameters` from squared weights and a phase cosine.

    Radii are the nonnegative square roots; the gamma radii follow from
    the unit-norm pairs.  ``phi_gamma_a = arccos(cos_dphi)`` and
    ``phi_gamma_c = 0``.  No overlap condition is imposed here — use
    `constraint_residuals` or `sixstate.optimize.feasible_phase` for
    that.
    """
    beta_a_sq = float(beta_a_sq)
    beta_c_sq = float(beta_c_sq)
    for val in (beta_a_sq, beta_c_sq):
        if not (-1e-12 <= val <= 1.0 + 1e-12):
            raise DomainError(f"squared weight {val} outside [0, 1]")
    beta_a_sq = min(max(beta_a_sq, 0.0), 1.0)
    beta_c_sq = min(max(beta_c_sq, 0.0), 1.0)
    cos_dphi = float(cos_dphi)
    if abs(cos_dphi) > 1.0 + 1e-12:
        raise DomainError(f"cos_dphi={cos_dphi} outside [-1, 1]")
    cos_dphi = min(max(cos_dphi, -1.0), 1.0)
    return AttackParameters(
        p=p,
        q=q,
        r_beta_a=math.sqrt(beta_a_sq),
        r_gamma_a=math.sqrt(1.0 - beta_a_sq),
        phi_gamma_a=math.acos(cos_dphi),
        r_beta_c=math.sqrt(beta_c_sq),
        r_gamma_c=math.sqrt(1.0 - beta_c_sq),
        phi_gamma_c=0.0,
    )


def optimal_parameters(p, q, branch="plus"):
    """Parameters of the information-maximizing attack at (p, q).

    Aligned phases (cos of the difference = +1) with the stationary
    squared weight from `sixstate.info.beta_sq_optimal`; the two probe
    weights are complementary, which satisfies the overlap condition
    automatically.
    """
    from .info import beta_sq_optimal

    ba = beta_sq_optimal(p, q, branch)
    return parameters_from_squares(p, q, ba, 1.0 - ba, 1.0)


def antiphase_parameters(p, q):
    """Parameters of the stationary attack with opposed phases.

    Equal probe weights ``(1 + t) / 2`` with ``t = overlap_target(p, q)``
    and a phase difference of pi.
    """
    t = overlap_target(p, q)
    ba = (1.0 + t) / 2.0
    return AttackParameters(
        p=p,
        q=q,
        r_beta_a=math.sqrt(ba),
        r_gamma_a=math.sqrt(1.0 - ba),
        phi_gamma_a=math.pi,
        r_beta_c=math.sqrt(ba),
        r_gamma_c=math.sqrt(1.0 - ba),
        phi_gamma_c=0.0,
    )


def build_ancillas(params):
    """Assemble the four probe state vectors for a parameter point."""
    a = np.zeros(4, dtype=complex)
    a[2] = params.r_beta_a
    a[1] = params.r_gamma_a * np.exp(1j * params.phi_gamma_a)
    c = np.zeros(4, dtype=complex)
    c[2] = params.r_beta_c
    c[1] = params.r_gamma_c * np.exp(1j * params.phi_gamma_c)
    b = np.zeros(4, dtype=complex)
    b[0] = 1.0
    d = np.zeros(4, dtype=complex)
    d[3] = 1.0
    return AncillaSet(a=a, b=b, c=c, d=d)


def constraint_residuals(ancillas, p, q):
    """Magnitudes of the four attack constraints at (p, q).

    Returns
    -------
    numpy.ndarray
        ``[|<b|d>|, |Re<a|c> - overlap_target(p, q)|,
        |<a|b> + <d|c>|, |<a|d> + <b|c>|]``.  The first, third and
        fourth vanish identically for states built by `build_ancillas`;
        the second measures how far the point is from reproducing error
        rate q.
    """
    t = overlap_target(p, q)
    r1 = abs(np.vdot(ancillas.b, ancillas.d))
    r2 = abs(np.vdot(ancillas.a, ancillas.c).real - t)
    r3 = abs(np.vdot(ancillas.a, ancillas.b) + np.vdot(ancillas.d, ancillas.c))
    r4 = abs(np.vdot(ancillas.a, ancillas.d) + np.vdot(ancillas.b, ancillas.c))
    return np.array([r1, r2, r3, r4])


def build_isometry(d, ancillas):
    """Assemble Eve's 8x2 interaction isometry at disturbance d.

    Column k is the image of signal state |k>: the signal is kept with
    amplitude sqrt(1-d) (attaching a or c) and flipped with amplitude
    sqrt(d) (attaching b or d).

    Raises
    ------
    ConstraintError
        If the columns fail the isometry check at 1e-10, which happens
        exactly when the probe states violate the orthogonality
        conditions linking the kept and flipped branches.
    """
    d = float(d)
    if not (0.0 <= d <= 0.5):
        raise DomainError(f"disturbance d={d} outside [0, 1/2]")
    keep = math.sqrt(1.0 - d)
    flip = math.sqrt(d)
    v = np.zeros((8, 2), dtype=complex)
    v[0:4, 0] = keep * ancillas.a
    v[4:8, 0] = flip * ancillas.b
    v[4:8, 1] = keep * ancillas.c
    v[0:4, 1] = flip * ancillas.d
    if not is_isometry(v, tol=_NORM_TOL):
        raise ConstraintError(
            "columns are not isometric: probe states violate the "
            "kept/flipped orthogonality conditions"
        )
    return v


def eve_distribution_closed_form(params):
    """Eve's eight outcome probabilities, four per value of Alice's bit.

    Entries 0-3 are the probabilities of probe outcomes |00>, |10>,
    |01>, |11> when Alice sent bit 0; entries 4-7 the same for bit 1.
    Each quadruple sums to 1.
    """
    p, q = params.p, params.q
    d = (q - p / 2.0) / (1.0 - p)
    pref = (1.0 - p / 2.0 - q) / (1.0 - p)
    half = p / 2.0
    ba = params.r_beta_a ** 2
    bc = params.r_beta_c ** 2
    ga = params.r_gamma_a ** 2
    gc = params.r_gamma_c ** 2
    m = np.array(
        [
            (1.0 - half) * d,
            pref * ((1.0 - half) * ba + half * bc),
            pref * ((1.0 - half) * ga + half * gc),
            half * d,
            half * d,
            pref * (half * ba + (1.0 - half) * bc),
            pref * (half * ga + (1.0 - half) * gc),
            (1.0 - half) * d,
        ]
    )
    for block in (m[:4], m[4:]):
        total = float(block.sum())
        if abs(total - 1.0) > 1e-12:
            raise ConstraintError(f"outcome quadruple sums to {total}, not 1")
    return m


def simulate_eve_distribution(iso, p):
    """Eve's outcome probabilities by direct density-matrix evolution.

    For each value of Alice's bit, sends the noisy computational-basis
    signal through the isometry, traces out the signal, and reads the
    probe populations in the order |00>, |10>, |01>, |11>.  Independent
    oracle for `eve_distribution_closed_form`.
    """
    iso = np.asarray(iso, dtype=complex)
    out = []
    for bit in (0, 1):
        rho = protocol.noisy_signal("z", bit, p)
        joint = iso @ rho @ adjoint(iso)
        probe = partial_trace_signal(joint)
        pops = np.real(np.diag(probe))
        out.extend(pops[i] for i in _OUTCOME_ORDER)
    return np.array(out)


def simulate_qber(iso, p, basis):
    """Bob's error rate in a basis, under the attack, at noise p.

    Sends both noisy basis states through the isometry, reduces to
    Bob's qubit, and scores the misidentification probability.
    """
    iso = np.asarray(iso, dtype=complex)
    reduced = []
    for bit in (0, 1):
        rho = protocol.noisy_signal(basis, bit, p)
        joint = iso @ rho @ adjoint(iso)
        reduced.append(partial_trace_probe(joint))
    return protocol.qber_from_bob_states(reduced[0], reduced[1], basis)


def bob_symmetry_residual(iso, p, basis):
    """How unevenly the attack flips the two basis states.

    ``|<0_b| rho_1 |0_b> - <1_b| rho_0 |1_b>|`` for Bob's reduced
    states; zero means the two flip probabilities match, so Alice and
    Bob see a symmetric error channel in that basis.
    """
    iso = np.asarray(iso, dtype=complex)
    flips = []
    for bit in (0, 1):
        rho = protocol.noisy_signal(basis, bit, p)
        joint = iso @ rho @ adjoint(iso)
        bob = partial_trace_probe(joint)
        other = protocol.pure_signal(basis, 1 - bit)
        flips.append(float(np.real(np.vdot(other, bob @ other))))
    return abs(flips[1] - flips[0])
