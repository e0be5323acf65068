"""Hot Monte Carlo kernels: per-sample integrand values for the (aa|bb)-type
two-electron integrals.

Two interchangeable implementations of the same arithmetic:

* a numba @njit scalar loop (default when numba imports cleanly), and
* a vectorized pure-numpy fallback.

Set the environment variable H2E_NO_NUMBA=1 to force the numpy path.  Both
paths are deterministic functions of the uniform-variate array they receive;
they may differ from each other in the last few ulps (different libm), so a
given backend reproduces itself bit-for-bit but the two backends are only
statistically identical.

Sampling: electron positions are drawn from 1s probability densities by
inverting the closed-form radial CDF.  With x = 2r the complementary CDF is
Q(x) = e^-x (1 + x + x^2/2); Newton iteration on ln Q(x) = ln(1 - u) is
cancellation-free in both tails and converges from a cube-root (small u) or
iterated-log (large u) starting point.  Directions are uniform on the sphere.

Uniform-variate layout per sample (row of the (n, 8) array):
    u[0:4] electron 1: radius, cos(theta), phi/2pi, center selector
    u[4:8] electron 2: radius, cos(theta), phi/2pi, center selector
The center selector is consumed only by the mixture-sampled kinds.

Integrand kinds (nuclei at z=0 and z=s):
    KIND_J  electron 1 ~ rho_a, electron 2 ~ rho_b, value 1/r12
    KIND_K  both ~ (rho_a + rho_b)/2, value sech(dA1-dB1) sech(dA2-dB2) / r12
    KIND_L  both ~ (rho_a + rho_b)/2, value (1 - tanh(dA1-dB1)) sech(dA2-dB2) / r12
    KIND_M  both ~ rho_a, value 1/r12
"""

import math
import os

import numpy as np

__all__ = ["KIND_J", "KIND_K", "KIND_L", "KIND_M", "KIND_CODES",
           "active_backend", "integrand_samples", "radius_from_uniform"]

KIND_J, KIND_K, KIND_L, KIND_M = 0, 1, 2, 3
KIND_CODES = {"j": KIND_J, "k": KIND_K, "l": KIND_L, "m": KIND_M}

_NEWTON_STEPS = 8

try:
    from numba import njit, prange

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an install-time dependency
    njit = None
    prange = range
    _HAVE_NUMBA = False


def active_backend() -> str:
    """Kernel backend selected for this call: "numba" or "numpy"."""
    if os.environ.get("H2E_NO_NUMBA", "").strip() not in ("", "0"):
        return "numpy"
    return "numba" if _HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy path
# ---------------------------------------------------------------------------

def _radius_numpy(u):
    lnq = np.log1p(-u)
    big = -lnq
    x_big = big + np.log1p(big + 0.5 * big * big)
    x_big = big + np.log1p(x_big + 0.5 * x_big * x_big)
    x = np.where(u < 0.9, np.cbrt(6.0 * u), x_big)
    for _ in range(_NEWTON_STEPS):
        t = x * (1.0 + 0.5 * x)
        phi = -x + np.log1p(t) - lnq
        dphi = -(0.5 * x * x) / (1.0 + t)
        safe = dphi != 0.0
        x = x - np.where(safe, phi / np.where(safe, dphi, 1.0), 0.0)
        x = np.maximum(x, 1e-300)
    return 0.5 * x


def _positions_numpy(u3, center_z):
    r = _radius_numpy(u3[:, 0])
    cz = 2.0 * u3[:, 1] - 1.0
    ph = 2.0 * math.pi * u3[:, 2]
    st = np.sqrt(np.maximum(1.0 - cz * cz, 0.0))
    return (r * st * np.cos(ph), r * st * np.sin(ph), center_z + r * cz)


def _samples_numpy(kind, s, u):
    if kind == KIND_J:
        c1 = np.zeros(u.shape[0])
        c2 = np.full(u.shape[0], s)
    elif kind == KIND_M:
        c1 = np.zeros(u.shape[0])
        c2 = np.zeros(u.shape[0])
    else:
        c1 = np.where(u[:, 3] < 0.5, 0.0, s)
        c2 = np.where(u[:, 7] < 0.5, 0.0, s)
    x1, y1, z1 = _positions_numpy(u[:, 0:3], c1)
    x2, y2, z2 = _positions_numpy(u[:, 4:7], c2)
    r12 = np.sqrt((x1 - x2) ** 2 + (y1 - y2) ** 2 + (z1 - z2) ** 2)
    inv = 1.0 / r12
    if kind in (KIND_J, KIND_M):
        return inv
    da1 = np.sqrt(x1 * x1 + y1 * y1 + z1 * z1)
    db1 = np.sqrt(x1 * x1 + y1 * y1 + (z1 - s) ** 2)
    da2 = np.sqrt(x2 * x2 + y2 * y2 + z2 * z2)
    db2 = np.sqrt(x2 * x2 + y2 * y2 + (z2 - s) ** 2)
    sech2 = _sech_numpy(da2 - db2)
    if kind == KIND_K:
        return _sech_numpy(da1 - db1) * sech2 * inv
    return (1.0 - np.tanh(da1 - db1)) * sech2 * inv


def _sech_numpy(d):
    a = np.abs(d)
    e = np.exp(-a)
    return 2.0 * e / (1.0 + e * e)


# ---------------------------------------------------------------------------
# numba path (same arithmetic, scalar loop)
# ---------------------------------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True)
    def _radius_numba(u):
        lnq = math.log1p(-u)
        if u < 0.9:
            x = (6.0 * u) ** (1.0 / 3.0)
        else:
            big = -lnq
            x = big + math.log1p(big + 0.5 * big * big)
            x = big + math.log1p(x + 0.5 * x * x)
        for _ in range(_NEWTON_STEPS):
            t = x * (1.0 + 0.5 * x)
            phi = -x + math.log1p(t) - lnq
            dphi = -(0.5 * x * x) / (1.0 + t)
            if dphi != 0.0:
                x = x - phi / dphi
            if x < 1e-300:
                x = 1e-300
        return 0.5 * x

    @njit(cache=True)
    def _sech_numba(d):
        a = abs(d)
        e = math.exp(-a)
        return 2.0 * e / (1.0 + e * e)

    # prange writes independent elements (no reductions), so the threaded
    # loop stays bit-deterministic for a given input array
    @njit(cache=True, parallel=True)
    def _samples_numba(kind, s, u):
        n = u.shape[0]
        out = np.empty(n, dtype=np.float64)
        for i in prange(n):
            if kind == KIND_J:
                ctr1 = 0.0
                ctr2 = s
            elif kind == KIND_M:
                ctr1 = 0.0
                ctr2 = 0.0
            else:
                ctr1 = 0.0 if u[i, 3] < 0.5 else s
                ctr2 = 0.0 if u[i, 7] < 0.5 else s
            r1 = _radius_numba(u[i, 0])
            cz1 = 2.0 * u[i, 1] - 1.0
            ph1 = 2.0 * math.pi * u[i, 2]
            st1 = math.sqrt(max(1.0 - cz1 * cz1, 0.0))
            x1 = r1 * st1 * math.cos(ph1)
            y1 = r1 * st1 * math.sin(ph1)
            z1 = ctr1 + r1 * cz1
            r2 = _radius_numba(u[i, 4])
            cz2 = 2.0 * u[i, 5] - 1.0
            ph2 = 2.0 * math.pi * u[i, 6]
            st2 = math.sqrt(max(1.0 - cz2 * cz2, 0.0))
            x2 = r2 * st2 * math.cos(ph2)
            y2 = r2 * st2 * math.sin(ph2)
            z2 = ctr2 + r2 * cz2
            r12 = math.sqrt((x1 - x2) ** 2 + (y1 - y2) ** 2 + (z1 - z2) ** 2)
            inv = 1.0 / r12
            if kind == KIND_J or kind == KIND_M:
                out[i] = inv
            else:
                da1 = math.sqrt(x1 * x1 + y1 * y1 + z1 * z1)
                db1 = math.sqrt(x1 * x1 + y1 * y1 + (z1 - s) ** 2)
                da2 = math.sqrt(x2 * x2 + y2 * y2 + z2 * z2)
                db2 = math.sqrt(x2 * x2 + y2 * y2 + (z2 - s) ** 2)
                sech2 = _sech_numba(da2 - db2)
                if kind == KIND_K:
                    out[i] = _sech_numba(da1 - db1) * sech2 * inv
                else:
                    out[i] = (1.0 - math.tanh(da1 - db1)) * sech2 * inv
        return out


def radius_from_uniform(u):
    """Inverse-CDF radius of the 1s density p(r) = 4 r^2 e^-2r (numpy path)."""
    return _radius_numpy(np.asarray(u, dtype=np.float64))


def integrand_samples(kind: int, s: float, u: np.ndarray) -> np.ndarray:
    """Per-sample importance-weighted integrand values for one kind.

    Parameters
    ----------
    kind : int
        One of KIND_J, KIND_K, KIND_L, KIND_M.
    s : float
        Reduced internuclear distance.
    u : numpy.ndarray
        (n, 8) float64 array of uniforms in (0, 1) (see module docstring).
    """
    if kind not in (KIND_J, KIND_K, KIND_L, KIND_M):
        raise ValueError(f"unknown integrand kind {kind!r}")
    if active_backend() == "numba":
        return _samples_numba(kind, float(s), u)
    return _samples_numpy(kind, float(s), u)
