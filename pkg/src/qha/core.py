"""Finite centered phase-space model.

The lattice has ``n`` points per axis with step ``h = 1/sqrt(n)``, so the
time grid and the frequency grid coincide.  Arrays are stored in *centered
order*: array position ``p`` holds centered index ``p - n//2``.  A signal
entry at index ``j`` models ``psi(j*h) * sqrt(h)``; a phase-space function
entry at ``(m, k)`` models ``f(m*h, k*h)`` and carries quadrature weight
``1/n``.

Signals, phase-space functions and operators are plain numpy arrays
(shapes ``(n,)``, ``(n, n)`` and ``(n, n)``).  Functions validate their
inputs with the ``check_*`` helpers below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import numpy.typing as npt
from numpy.polynomial import hermite as _herm

__all__ = [
    "GridSpec",
    "DecayProfile",
    "make_grid",
    "as_grid",
    "check_signal",
    "check_phase_fn",
    "check_operator",
    "atom",
    "mask",
    "delta_mask",
    "integral",
    "weighted_norm",
    "symplectic_fourier",
    "symplectic_product",
    "decay_profile",
    "to_fft_order",
    "from_fft_order",
]

ComplexArray = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class GridSpec:
    """Centered lattice with ``n`` points per axis and step ``1/sqrt(n)``."""

    n: int
    h: float = field(init=False)

    def __post_init__(self):
        n = self.n
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise TypeError(f"grid size must be an integer, got {n!r}")
        if n < 8 or n % 2:
            raise ValueError(f"grid size must be even and >= 8, got {n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "h", 1.0 / math.sqrt(n))

    @property
    def indices(self) -> npt.NDArray[np.int64]:
        """Centered integer indices ``-n/2 .. n/2-1`` in storage order."""
        return np.arange(self.n) - self.n // 2

    @property
    def points(self) -> npt.NDArray[np.float64]:
        return self.indices * self.h

    @property
    def rho_max(self) -> float:
        """Largest distance from the origin of a lattice point (the corner)."""
        return math.hypot(self.n // 2, self.n // 2) * self.h

    def radius(self) -> npt.NDArray[np.float64]:
        """``|z|`` at every lattice point, shape ``(n, n)``."""
        x = self.points
        return np.hypot(x[:, None], x[None, :])

    def position(self, index: int) -> int:
        """Storage position of a centered index (taken modulo n)."""
        return (int(index) + self.n // 2) % self.n

    def wrap(self, index: int) -> int:
        """Centered representative of an integer index modulo n."""
        return (int(index) + self.n // 2) % self.n - self.n // 2


def make_grid(n: int) -> GridSpec:
    return GridSpec(n)


def as_grid(grid_or_n) -> GridSpec:
    if isinstance(grid_or_n, GridSpec):
        return grid_or_n
    return GridSpec(grid_or_n)


def _check_finite(a: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} contains NaN or Inf entries")


def check_signal(psi, n: int | None = None) -> ComplexArray:
    a = np.asarray(psi, dtype=np.complex128)
    if a.ndim != 1:
        raise ValueError(f"signal must be one-dimensional, got shape {a.shape}")
    if n is not None and a.shape[0] != n:
        raise ValueError(f"signal length {a.shape[0]} does not match grid size {n}")
    GridSpec(a.shape[0])
    _check_finite(a, "signal")
    return a


def _check_square(a, what: str, n: int | None) -> ComplexArray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{what} must be a square n x n array, got shape {a.shape}")
    if n is not None and a.shape[0] != n:
        raise ValueError(f"{what} size {a.shape[0]} does not match grid size {n}")
    GridSpec(a.shape[0])
    _check_finite(a, what)
    return a


def check_phase_fn(f, n: int | None = None) -> ComplexArray:
    return _check_square(f, "phase-space function", n)


def check_operator(S, n: int | None = None) -> ComplexArray:
    return _check_square(S, "operator", n)


def to_fft_order(a: np.ndarray, axes=None) -> np.ndarray:
    """Centered storage order -> numpy FFT order (index 0 at position 0)."""
    return np.fft.ifftshift(a, axes=axes)


def from_fft_order(a: np.ndarray, axes=None) -> np.ndarray:
    return np.fft.fftshift(a, axes=axes)


def integral(f) -> complex:
    """Lattice quadrature ``(1/n) * sum f``, modelling the phase-space integral."""
    f = check_phase_fn(f)
    return complex(f.sum() / f.shape[0])


def weighted_norm(f, p: float = 2) -> float:
    """``L^p`` norm of a phase-space function under the ``1/n`` point measure."""
    f = check_phase_fn(f)
    a = np.abs(f)
    if np.isinf(p):
        return float(a.max())
    return float((np.sum(a**p) / f.shape[0]) ** (1.0 / p))


# ----------------------------------------------------------------------------
# window atoms
# ----------------------------------------------------------------------------

def _normalize(values: np.ndarray, kind: str) -> ComplexArray:
    norm = np.linalg.norm(values)
    if norm == 0 or not np.isfinite(norm):
        raise ValueError(f"atom {kind!r} is degenerate on this grid (zero norm)")
    return (values / norm).astype(np.complex128)


def _hermite_function(t: np.ndarray, order: int) -> np.ndarray:
    # h_k(t) ~ H_k(sqrt(2 pi) t) exp(-pi t^2), normalized afterwards
    coeffs = np.zeros(order + 1)
    coeffs[order] = 1.0
    return _herm.hermval(math.sqrt(2 * math.pi) * t, coeffs) * np.exp(-math.pi * t**2)


def _hermite_l2(order: int) -> float:
    # continuum L^2 norm of H_k(sqrt(2 pi) t) exp(-pi t^2)
    return math.sqrt(2.0**order * math.factorial(order) * math.sqrt(math.pi) / math.sqrt(2 * math.pi))


def atom(grid, kind: str, **params) -> ComplexArray:
    """Unit-norm window sampled on the grid.

    ``kind`` is one of ``gaussian``, ``hermite`` (``order``), ``onesided_exp``,
    ``box`` (``width``), ``random`` (``seed``; i.i.d. entries, a new vector
    for every n) or ``random_hermite`` (``seed``, ``terms``; a seeded
    combination of Hermite functions, the same continuum window for every n).
    """
    g = as_grid(grid)
    t = g.points
    if kind == "gaussian":
        values = 2**0.25 * np.exp(-math.pi * t**2)
    elif kind == "hermite":
        order = int(params.get("order", 0))
        if order < 0:
            raise ValueError("hermite order must be non-negative")
        values = _hermite_function(t, order)
    elif kind == "onesided_exp":
        values = np.where(t >= 0, np.exp(-t), 0.0)
    elif kind == "box":
        width = float(params.get("width", 1.0))
        if not width > 0:
            raise ValueError(f"box width must be positive, got {width}")
        values = (np.abs(t) <= width / 2).astype(float)
    elif kind == "random":
        from .rng import make_rng

        rng = make_rng(params.get("seed", 0))
        values = rng.standard_normal(g.n) + 1j * rng.standard_normal(g.n)
    elif kind == "random_hermite":
        # same continuum function for every n: seeded complex Hermite coefficients
        from .rng import make_rng

        terms = int(params.get("terms", 8))
        if terms < 1:
            raise ValueError("random_hermite needs at least one term")
        rng = make_rng(params.get("seed", 0))
        coef = rng.standard_normal(terms) + 1j * rng.standard_normal(terms)
        values = sum(c * _hermite_function(t, k) / _hermite_l2(k) for k, c in enumerate(coef))
    else:
        raise ValueError(f"unknown atom kind {kind!r}")
    return _normalize(values * math.sqrt(g.h), kind)


# ----------------------------------------------------------------------------
# phase-space masks
# ----------------------------------------------------------------------------

def symplectic_product(grid) -> npt.NDArray[np.float64]:
    """Integer ``s(m, k)`` standing in for ``n * x * omega`` on the lattice.

    Equal to ``m * k`` with centered representatives, except on the boundary
    row/column (index ``-n/2``), where ``s = -(n/2) * |other index|``.  This
    makes ``s`` even under ``z -> -z`` modulo n, while ``exp(-i pi s / n)``
    still squares to ``exp(-2 pi i m k / n)``.
    """
    g = as_grid(grid)
    idx = g.indices
    half = g.n // 2
    m = idx[:, None]
    k = idx[None, :]
    s = (m * k).astype(float)
    s = np.where(m == -half, -half * np.abs(k), s)
    s = np.where(k == -half, -half * np.abs(m), s)
    return s


def _plane_wave(g: GridSpec, z0) -> ComplexArray:
    m0, k0 = (int(v) for v in z0)
    idx = g.indices
    m = idx[:, None]
    k = idx[None, :]
    # sigma(z0, z) = omega0 * x - omega * x0 = (k0 m - k m0) / n
    return np.exp(2j * np.pi * ((k0 * m - k * m0) % g.n) / g.n)


def mask(grid, kind: str, **params) -> ComplexArray:
    """Phase-space function sampled at the lattice points ``(m h, k h)``.

    Kinds: ``constant`` (``value``), ``chirp``, ``plane_wave`` (``z0`` as a
    lattice index pair), ``a_tau`` (``tau``), ``indicator_disk`` (``r``),
    ``indicator_disk_complement`` (``r``), ``gaussian_env``, ``custom``
    (``table``).
    """
    g = as_grid(grid)
    n = g.n
    idx = g.indices
    r = g.radius()
    if kind == "constant":
        return np.full((n, n), complex(params.get("value", 1.0)), dtype=np.complex128)
    if kind == "chirp":
        # exp(i pi |z|^2) is n-periodic in each index for even n
        q = (idx[:, None] ** 2 + idx[None, :] ** 2) % (2 * n)
        return np.exp(1j * np.pi * q / n)
    if kind == "plane_wave":
        return _plane_wave(g, params.get("z0", (0, 0)))
    if kind == "a_tau":
        tau = float(params["tau"])
        if not 0.0 < tau < 1.0:
            raise ValueError(f"tau must lie in (0, 1), got {tau}")
        if tau == 0.5:
            raise ValueError("a_tau at tau=1/2 is the delta symbol; use delta_mask")
        beta = 2.0 * tau - 1.0
        s = symplectic_product(g)
        return (2.0 / abs(beta)) * np.exp(2j * np.pi * (2.0 / beta) * s / n)
    if kind in ("indicator_disk", "indicator_disk_complement"):
        radius = float(params.get("r", 1.0))
        if radius < 0:
            raise ValueError("disk radius must be non-negative")
        if radius > (n // 2) * g.h:
            raise ValueError(
                f"disk radius {radius} exceeds the fundamental domain half-width {(n // 2) * g.h}"
            )
        inside = (r <= radius + 1e-12).astype(np.complex128)
        return inside if kind == "indicator_disk" else 1.0 - inside
    if kind == "gaussian_env":
        return np.exp(-math.pi * r**2).astype(np.complex128)
    if kind == "custom":
        return check_phase_fn(params["table"], n).copy()
    raise ValueError(f"unknown mask kind {kind!r}")


def delta_mask(grid) -> ComplexArray:
    """Discrete delta: value ``n`` at the origin, so its integral is 1."""
    g = as_grid(grid)
    d = np.zeros((g.n, g.n), dtype=np.complex128)
    d[g.n // 2, g.n // 2] = g.n
    return d


# ----------------------------------------------------------------------------
# symplectic Fourier transform
# ----------------------------------------------------------------------------

def symplectic_fourier(f) -> ComplexArray:
    """``F(m,k) = (1/n) sum f(m',k') exp(-2 pi i (k m' - k' m)/n)``.

    Self-inverse and unitary for the ``1/n``-weighted norm.
    """
    f = check_phase_fn(f)
    a = to_fft_order(f)
    out = np.fft.ifft(np.fft.fft(a, axis=0), axis=1).T
    return from_fft_order(out)


# ----------------------------------------------------------------------------
# decay profiles
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class DecayProfile:
    """Radial sup-profile ``D(rho) = max{|h(z)| : |z| >= rho}``."""

    radii: tuple
    values: tuple

    def as_dict(self) -> dict:
        return {"radii": list(self.radii), "D": list(self.values)}

    def strictly_decreasing(self, rel_tol: float = 0.0) -> bool:
        v = np.asarray(self.values)
        return bool(np.all(v[1:] < v[:-1] * (1 - rel_tol)))

    def non_increasing(self) -> bool:
        v = np.asarray(self.values)
        return bool(np.all(v[1:] <= v[:-1]))


def decay_profile(h, radii: Sequence[float], grid=None, within: float | None = None) -> DecayProfile:
    """Radial sup-profile of ``|h|``; ``within`` restricts the domain to ``|z| <= within``."""
    h = check_phase_fn(h)
    g = as_grid(grid if grid is not None else h.shape[0])
    r = g.radius().ravel()
    a = np.abs(h).ravel()
    if within is not None:
        sel = r <= float(within) + 1e-12
        r, a = r[sel], a[sel]
    order = np.argsort(r, kind="stable")[::-1]
    # running max from the outside in, queried by searchsorted
    r_desc = r[order]
    run_max = np.maximum.accumulate(a[order])
    out = []
    for rho in radii:
        rho = float(rho)
        if rho < 0:
            raise ValueError("radii must be non-negative")
        cnt = int(np.searchsorted(-r_desc, -rho + 1e-12, side="right"))
        out.append(float(run_max[cnt - 1]) if cnt > 0 else 0.0)
    return DecayProfile(tuple(float(x) for x in radii), tuple(out))
