"""Six-state signal preparation, source noise and Bob's error rate.

Alice encodes each bit in one of the three mutually unbiased qubit bases
x, y, z.  A white-noise source replaces her pure state by the mixture
``(1 - p) |b><b| + (p / 2) I``, so even without an eavesdropper Bob sees
an error rate of p/2.  An eavesdropper who flips the kept signal with
probability d raises that to ``q = d (1 - p) + p / 2``.
"""

import numpy as np

from .exceptions import DomainError

__all__ = [
    "BASES",
    "pure_signal",
    "noisy_signal",
    "qber_from_bob_states",
    "qber_from_d",
    "d_from_qber",
]

#: Measurement bases of the protocol.
BASES = ("x", "y", "z")

_SQ2 = np.sqrt(2.0)

_EIGENSTATES = {
    ("z", 0): np.array([1.0, 0.0], dtype=complex),
    ("z", 1): np.array([0.0, 1.0], dtype=complex),
    ("x", 0): np.array([1.0, 1.0], dtype=complex) / _SQ2,
    ("x", 1): np.array([1.0, -1.0], dtype=complex) / _SQ2,
    ("y", 0): np.array([1.0, 1.0j], dtype=complex) / _SQ2,
    ("y", 1): np.array([1.0, -1.0j], dtype=complex) / _SQ2,
}

_TOL = 1e-12


def _check_basis_bit(basis, bit):
    if basis not in BASES:
        raise DomainError(f"basis must be one of {BASES}, got {basis!r}")
    if bit not in (0, 1):
        raise DomainError(f"bit must be 0 or 1, got {bit!r}")


def _check_noise(p):
    p = float(p)
    if not (np.isfinite(p) and 0.0 <= p < 1.0):
        raise DomainError(f"noise parameter p={p} outside [0, 1)")
    return p


def pure_signal(basis, bit):
    """Eigenstate of the Pauli operator for `basis` carrying `bit`.

    Bit 0 maps to the +1 eigenstate, bit 1 to the -1 eigenstate.
    """
    _check_basis_bit(basis, bit)
    return _EIGENSTATES[(basis, bit)].copy()


def noisy_signal(basis, bit, p):
    """Density operator of a signal state mixed with white noise.

    Returns ``(1 - p) |b><b| + (p / 2) I`` for the pure signal ``|b>``,
    the state the source actually emits at noise level p.
    """
    p = _check_noise(p)
    ket = pure_signal(basis, bit)
    return (1.0 - p) * np.outer(ket, ket.conj()) + (p / 2.0) * np.eye(2, dtype=complex)


def qber_from_bob_states(rho0, rho1, basis):
    """Probability that Bob decodes the wrong bit when measuring `basis`.

    Parameters
    ----------
    rho0, rho1 : array-like
        Bob's 2 x 2 reduced states given that Alice sent bit 0 and bit 1.
    basis : str
        One of "x", "y", "z".

    Returns
    -------
    float
        The bit average of the two wrong-outcome probabilities.
    """
    _check_basis_bit(basis, 0)
    k0 = _EIGENSTATES[(basis, 0)]
    k1 = _EIGENSTATES[(basis, 1)]
    rho0 = np.asarray(rho0)
    rho1 = np.asarray(rho1)
    wrong0 = np.real(k1.conj() @ rho0 @ k1)
    wrong1 = np.real(k0.conj() @ rho1 @ k0)
    return float(0.5 * (wrong0 + wrong1))


def qber_from_d(d, p):
    """Bob's error rate ``d (1 - p) + p / 2`` for flip probability d."""
    p = _check_noise(p)
    d = float(d)
    if d < -_TOL or d > 0.5 + _TOL:
        raise DomainError(f"flip probability d={d} outside [0, 1/2]")
    d = min(max(d, 0.0), 0.5)
    return d * (1.0 - p) + p / 2.0


def d_from_qber(q, p):
    """Flip probability ``(q - p/2) / (1 - p)``, inverse of qber_from_d."""
    p = _check_noise(p)
    q = float(q)
    if q < p / 2.0 - _TOL or q > 0.5 + _TOL:
        raise DomainError(f"error rate q={q} outside [p/2, 1/2] for p={p}")
    q = min(max(q, p / 2.0), 0.5)
    return (q - p / 2.0) / (1.0 - p)
