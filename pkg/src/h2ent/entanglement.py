"""Entanglement measures for pure states of two indistinguishable fermions.

A pure two-fermion state over an n-dimensional single-particle space is
encoded by an antisymmetric complex matrix w (w_ij = -w_ji) through

    |w> = sum_ij w_ij  f_i^dag f_j^dag |0>,

normalized so that sum_ij |w_ij|^2 = 1/2.  A unitary rotation of the modes
brings w to a block-diagonal canonical form of 2x2 antisymmetric blocks with
coefficients z_k >= 0 (the fermionic analogue of the Schmidt decomposition);
the state is a single Slater determinant iff only one block survives.

Implemented measures:

* concurrence for n = 4:  C = 8 |w12 w34 + w13 w42 + w14 w23|  (8 |pfaffian|)
* Slater coefficients {z_k} from the Hermitian spectrum of w^dag w, whose
  eigenvalues are the doubly degenerate pairs {|z_k|^2}
* single-particle reduced density matrix rho = 2 (w^dag w)^T
* von Neumann entropy  S = -1 - 4 sum_k z_k^2 log2 z_k^2   in [1, log2 n]

Everything is a pure function; no shared state.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AntisymW",
    "SlaterSpectrum",
    "make_antisym",
    "concurrence4",
    "slater_decompose",
    "slater_rank",
    "reduced_density",
    "von_neumann_entropy",
]

NORM_TOL = 1e-12
# eigenvalues of w^dag w must come in equal pairs; a worse mismatch means the
# input was not antisymmetric/normalized and is reported, never masked
PAIR_TOL = 1e-8
_LOG_CLAMP = 1e-14


@dataclass(frozen=True, eq=False)
class AntisymW:
    """Antisymmetric coefficient matrix of a two-fermion pure state.

    Attributes
    ----------
    n : int
        Even dimension of the single-particle space.
    w : numpy.ndarray
        Complex (n, n) matrix with w.T == -w and sum |w_ij|^2 == 1/2.
    """

    n: int
    w: np.ndarray


@dataclass(frozen=True, eq=False)
class SlaterSpectrum:
    """Nonnegative Slater coefficients z_k, sorted descending; sum z_k^2 = 1/4."""

    z: np.ndarray
    n: int


def make_antisym(upper_entries, n: int = 4) -> AntisymW:
    """Build a normalized AntisymW from the strict upper triangle.

    Parameters
    ----------
    upper_entries : sequence of complex
        Entries w_ij for i < j in row-major order; length n(n-1)/2.
    n : int
        Even dimension >= 2.

    Returns
    -------
    AntisymW
        The antisymmetric completion rescaled so sum |w_ij|^2 = 1/2.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError(f"single-particle dimension must be even and >= 2, got {n}")
    entries = np.asarray(upper_entries, dtype=complex).ravel()
    want = n * (n - 1) // 2
    if entries.size != want:
        raise ValueError(f"expected {want} upper-triangle entries for n={n}, got {entries.size}")
    w = np.zeros((n, n), dtype=complex)
    iu, ju = np.triu_indices(n, k=1)
    w[iu, ju] = entries
    w[ju, iu] = -entries
    nrm2 = float(np.sum(np.abs(w) ** 2))
    if nrm2 == 0.0:
        raise ValueError("all-zero coefficient matrix does not define a state")
    w *= math.sqrt(0.5 / nrm2)
    return AntisymW(n=n, w=w)


def _check_normalized(w: AntisymW) -> None:
    nrm2 = float(np.sum(np.abs(w.w) ** 2))
    if abs(nrm2 - 0.5) > 1e-10:
        raise ValueError(f"AntisymW is not normalized: sum |w_ij|^2 = {nrm2!r}")


def _pfaffian4(w: np.ndarray) -> complex:
    return (w[0, 1] * w[2, 3] - w[0, 2] * w[1, 3] + w[0, 3] * w[1, 2])


def concurrence4(w: AntisymW) -> float:
    """Concurrence of a two-fermion pure state with n = 4.

    C = 8 |w12 w34 + w13 w42 + w14 w23| in [0, 1]; zero iff the state is a
    single Slater determinant.
    """
    if w.n != 4:
        raise ValueError(f"concurrence4 is defined for n = 4, got n = {w.n}")
    return 8.0 * abs(_pfaffian4(w.w))


def slater_decompose(w: AntisymW) -> SlaterSpectrum:
    """Slater coefficients {z_k} of the canonical block decomposition.

    The Hermitian matrix w^dag w has eigenvalues {|z_k|^2}, each exactly
    doubly degenerate for an antisymmetric w.  Eigenvalues are sorted,
    paired greedily, and each pair averaged; a pairing mismatch beyond
    PAIR_TOL signals corrupted input and raises.

    Raises
    ------
    RuntimeError
        If the eigenvalue pairing is violated.
    numpy.linalg.LinAlgError
        If the Hermitian eigensolver itself fails (surfaced, not masked).
    """
    _check_normalized(w)
    h = w.w.conj().T @ w.w
    evals = np.linalg.eigvalsh(h)          # ascending, real
    evals = evals[::-1]                    # descending
    evals = np.where(evals < 0.0, 0.0, evals)
    pairs = evals.reshape(-1, 2)
    mismatch = float(np.max(np.abs(pairs[:, 0] - pairs[:, 1])))
    if mismatch > PAIR_TOL:
        raise RuntimeError(
            f"eigenvalues of w^dag w are not doubly degenerate (mismatch {mismatch:.3e}); "
            "input is not a normalized antisymmetric matrix")
    z = np.sqrt(pairs.mean(axis=1))
    z = np.sort(z)[::-1]
    return SlaterSpectrum(z=z, n=w.n)


def slater_rank(spec: SlaterSpectrum, tol: float = 1e-10) -> int:
    """Number of Slater coefficients above tol (the Slater number)."""
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    return int(np.count_nonzero(spec.z > tol))


def reduced_density(w: AntisymW) -> np.ndarray:
    """Single-particle reduced density matrix rho_{nu mu} = 2 (w^dag w)_{mu nu}.

    Hermitian with unit trace; its eigenvalues are {2 z_k^2}, each doubly
    degenerate.
    """
    _check_normalized(w)
    return 2.0 * (w.w.conj().T @ w.w).T


def von_neumann_entropy(spec: SlaterSpectrum) -> float:
    """Entropy of either particle: S = -1 - 4 sum_k z_k^2 log2 z_k^2.

    Ranges from 1 (single Slater determinant) to log2 n for even n.
    Coefficients with z_k^2 below 1e-14 are treated as exact zeros.
    """
    z2 = spec.z.astype(float) ** 2
    z2 = z2[z2 > _LOG_CLAMP]
    return -1.0 - 4.0 * float(np.sum(z2 * np.log2(z2)))
