"""Two-configuration (CI) ground state of H2 in the minimal LCAO basis.

The spatial orbitals are the bonding/antibonding combinations
psi_+- = (phi_a +- phi_b) / sqrt(2 (1 +- S)); the two singlet configurations
are Psi_1 = psi_+ psi_+ and Psi_2 = psi_- psi_-, and the CI state is
Psi = c1 Psi_1 + c2 Psi_2 with c1^2 + c2^2 = 1.  In Hartree units, with the
integrals of the integrals module,

    H11 = 2 E1s + 1/s - 2(j' + k')/(1+S) + (j + 2k + m + 4l) / (2 (1+S)^2)
    H12 = H21 = (m - j) / (2 (1 - S^2))
    H22 = 2 E1s + 1/s - 2(j' - k')/(1-S) + (j + 2k + m - 4l) / (2 (1-S)^2)

H22 above is the "corrected" variant, consistent with the antibonding
normalization 1/(2(1-S)); a "printed" variant that keeps (1+S) denominators
in H22 is retained behind a flag for comparison.  The ground state of the
symmetric 2x2 block is found both by direct diagonalization and by the
closed-form coefficient squares

    c1^2, c2^2 = 1/2 +- 1/(2 sqrt(1 + (2 H12 / (H11 - H22))^2)),

which must agree to 1e-10 (enforced).

In the four-mode basis |a up>, |a down>, |b up>, |b down> (treated as
orthonormal modes) the CI ground state has the antisymmetric coefficient
matrix

    w12 = w34 = (c1 + c2)/4,   w14 = -w23 = (c1 - c2)/4,   w13 = w24 = 0,

whose concurrence is exactly 2 |c1 c2| and whose Slater coefficients are
{|c1|/2, |c2|/2}.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entanglement import AntisymW
from .integrals import integral_set
from .specfun import binary_entropy

__all__ = [
    "E1S",
    "H22_VARIANTS",
    "HamiltonianBlock",
    "CiSolution",
    "h11",
    "hamiltonian_block",
    "solve_block",
    "ci_solve",
    "w_from_ci",
    "ground_concurrence",
    "ground_entropy",
]

# ground-state energy of one hydrogen atom, Hartree
E1S = -0.5

H22_VARIANTS = ("corrected", "printed")

_COEFF_NORM_TOL = 1e-10
_CLOSED_FORM_TOL = 1e-10


@dataclass(frozen=True)
class HamiltonianBlock:
    """Symmetric 2x2 CI Hamiltonian at one reduced distance (Hartree)."""

    s: float
    h11: float
    h12: float
    h21: float
    h22: float
    variant: str


@dataclass(frozen=True)
class CiSolution:
    """Ground eigenpair of the CI block.

    c1 is the bonding-configuration coefficient (made nonnegative by global
    sign choice), e_psi1/e_psi2 are the diagonal configuration energies and
    e_ground the variational CI energy, all absolute in Hartree.
    """

    s: float
    c1: float
    c2: float
    e_ground: float
    e_psi1: float
    e_psi2: float
    degenerate: bool = False


def _check_variant(variant: str) -> None:
    if variant not in H22_VARIANTS:
        raise ValueError(f"unknown h22 variant {variant!r}; expected one of {H22_VARIANTS}")


def h11(s: float) -> float:
    """Energy of the doubly occupied bonding configuration (Hartree)."""
    q = integral_set(s)
    return (2.0 * E1S + 1.0 / q.s
            - 2.0 * (q.jp + q.kp) / (1.0 + q.S)
            + (q.j + 2.0 * q.k + q.m + 4.0 * q.l) / (2.0 * (1.0 + q.S) ** 2))


def hamiltonian_block(s: float, variant: str = "corrected") -> HamiltonianBlock:
    """CI matrix elements H11, H12 = H21, H22 at reduced distance s."""
    _check_variant(variant)
    q = integral_set(s)
    one = 2.0 * E1S + 1.0 / q.s
    e11 = (one - 2.0 * (q.jp + q.kp) / (1.0 + q.S)
           + (q.j + 2.0 * q.k + q.m + 4.0 * q.l) / (2.0 * (1.0 + q.S) ** 2))
    e12 = (q.m - q.j) / (2.0 * (1.0 - q.S * q.S))
    if variant == "corrected":
        e22 = (one - 2.0 * (q.jp - q.kp) / (1.0 - q.S)
               + (q.j + 2.0 * q.k + q.m - 4.0 * q.l) / (2.0 * (1.0 - q.S) ** 2))
    else:
        e22 = (one - 2.0 * (q.jp - q.kp) / (1.0 + q.S)
               + (q.j + 2.0 * q.k + q.m - 4.0 * q.l) / (2.0 * (1.0 + q.S) ** 2))
    return HamiltonianBlock(s=q.s, h11=e11, h12=e12, h21=e12, h22=e22, variant=variant)


def solve_block(block: HamiltonianBlock) -> CiSolution:
    """Ground eigenpair of a symmetric 2x2 block, deterministic and closed-form.

    The eigenvector is parameterized as (c1, c2) = (cos phi, -sin phi) with
    2 phi = atan2(2 H12, H22 - H11), which keeps c1 > 0 and ties the sign of
    c2 to -sign(H12).  At exact degeneracy (H12 = 0, H11 = H22) the solution
    (1, 0) is returned with its degeneracy flag set.

    Raises
    ------
    RuntimeError
        If the closed-form coefficient squares disagree with the
        eigen-decomposition beyond 1e-10 (internal consistency guard).
    """
    a, b, d = block.h11, block.h12, block.h22
    degenerate = (b == 0.0 and a == d)
    half_diff = 0.5 * (d - a)
    radius = math.hypot(half_diff, b)
    e_ground = 0.5 * (a + d) - radius
    phi = 0.5 * math.atan2(2.0 * b, d - a)
    c1 = math.cos(phi)
    c2 = -math.sin(phi)
    if c1 < 0.0 or (c1 == 0.0 and c2 < 0.0):
        c1, c2 = -c1, -c2
    # closed-form squares must match the eigenvector (checked when a < d)
    if a < d:
        t = 2.0 * b / (a - d)
        closed_c1_sq = 0.5 + 0.5 / math.sqrt(1.0 + t * t)
        if abs(closed_c1_sq - c1 * c1) > _CLOSED_FORM_TOL:
            raise RuntimeError(
                f"closed-form c1^2 {closed_c1_sq!r} disagrees with eigenvector "
                f"{c1 * c1!r} at s={block.s!r}")
    return CiSolution(s=block.s, c1=c1, c2=c2, e_ground=e_ground,
                      e_psi1=a, e_psi2=d, degenerate=degenerate)


def ci_solve(s: float, variant: str = "corrected") -> CiSolution:
    """Variational two-configuration ground state at reduced distance s."""
    return solve_block(hamiltonian_block(s, variant))


def _check_coefficients(c1: float, c2: float) -> None:
    if abs(c1 * c1 + c2 * c2 - 1.0) > _COEFF_NORM_TOL:
        raise ValueError(f"coefficients not normalized: c1^2 + c2^2 = {c1 * c1 + c2 * c2!r}")


def w_from_ci(c1: float, c2: float) -> AntisymW:
    """Antisymmetric coefficient matrix of the CI state in the four-mode basis.

    Basis order |a up>, |a down>, |b up>, |b down>; the spin-triplet entries
    w13, w24 vanish because the ground state is a singlet.
    """
    _check_coefficients(c1, c2)
    plus = (c1 + c2) / 4.0
    minus = (c1 - c2) / 4.0
    w = np.zeros((4, 4), dtype=complex)
    w[0, 1] = plus
    w[2, 3] = plus
    w[0, 3] = minus
    w[1, 2] = -minus
    w -= w.T.copy()
    # exact normalization guard against accumulated input round-off
    nrm2 = float(np.sum(np.abs(w) ** 2))
    w *= math.sqrt(0.5 / nrm2)
    return AntisymW(n=4, w=w)


def ground_concurrence(c1: float, c2: float) -> float:
    """Concurrence of the CI ground state: 2 |c1 c2|."""
    _check_coefficients(c1, c2)
    return 2.0 * abs(c1 * c2)


def ground_entropy(c1: float, c2: float) -> float:
    """Single-particle entropy of the CI ground state: 1 + H2(c1^2)."""
    _check_coefficients(c1, c2)
    return 1.0 + binary_entropy(min(max(c1 * c1, 0.0), 1.0))
