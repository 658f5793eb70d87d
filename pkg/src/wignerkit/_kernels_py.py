"""Pure-NumPy implementations of the hot kernels.

Same call signatures as the compiled module ``wignerkit._kernels``; the
active backend is chosen in :mod:`wignerkit.kernels` at import time.
"""

import numpy as np

BACKEND = "python"

# 4th-order centered first-derivative coefficients for offsets -2..2
_D1 = (1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0)


def contract_real(weighted, phases):
    """Real part of ``weighted @ phases`` plus the max |imaginary| entry.

    ``weighted`` is the (nx, ny) trapezoid-weighted autocorrelation array,
    ``phases`` the (ny, np) Fourier phase matrix.  Returns ``(out, imag_max)``.
    """
    prod = np.asarray(weighted) @ np.asarray(phases)
    imag_max = float(np.abs(prod.imag).max()) if prod.size else 0.0
    return np.ascontiguousarray(prod.real), imag_max


def advect_rhs(f, hx, hp, dx, dp):
    """Poisson-bracket advection right-hand side hx * df/dp - hp * df/dx.

    Fused 4th-order centered stencil with zero padding outside the grid;
    this is the inner loop of the Moyal/Liouville time stepper.
    """
    f = np.asarray(f)
    fp = np.zeros_like(f)
    fx = np.zeros_like(f)
    c0, c1, c2, c3 = _D1
    # d/dp along axis 1
    fp[:, 2:] += c0 * f[:, :-2]
    fp[:, 1:] += c1 * f[:, :-1]
    fp[:, :-1] += c2 * f[:, 1:]
    fp[:, :-2] += c3 * f[:, 2:]
    # d/dx along axis 0
    fx[2:, :] += c0 * f[:-2, :]
    fx[1:, :] += c1 * f[:-1, :]
    fx[:-1, :] += c2 * f[1:, :]
    fx[:-2, :] += c3 * f[2:, :]
    return hx * (fp / dp) - hp * (fx / dx)
