"""Tauberian engine for the finite model.

At finite ``n`` every window with a non-vanishing Fourier(-Wigner) transform
can be deconvolved exactly, so the Tauberian transfer becomes an identity
that holds up to roundoff.  Compactness and vanishing at infinity have no
finite-dimensional meaning; they are tracked through singular-value tails
and radial sup-profiles compared across ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    DecayProfile,
    as_grid,
    check_operator,
    check_phase_fn,
    check_signal,
    decay_profile,
    integral,
    mask,
    symplectic_fourier,
)
from .conv import conv_fun_fun, conv_fun_op, conv_op_op, loc_op
from .gabor import stft_phase
from .operator import fourier_wigner, hs_norm, inverse_fourier_wigner, schatten

__all__ = [
    "WindowHasZeros",
    "DECONV_GUARD",
    "wiener_class_fun",
    "wiener_class_op",
    "deconvolve",
    "deconvolve_fun",
    "tauberian_transfer_fun",
    "tauberian_transfer_op",
    "equivalence_harness",
    "fg_sup_profile",
    "osc_modulus",
    "osc_surface",
    "IsoResult",
    "iso_check",
    "compactness_report",
    "schatten_counterexample_experiment",
    "TauberReport",
]

DECONV_GUARD = 1e-10


class WindowHasZeros(ValueError):
    """The window's Fourier(-Wigner) transform is too small to divide by."""


def _guard(F: np.ndarray, what: str, guard: float) -> None:
    a = np.abs(F)
    top = float(a.max())
    low = float(a.min())
    if top == 0 or low < guard * top:
        raise WindowHasZeros(
            f"{what} has (near) zeros: min |.| = {low:.3e}, max |.| = {top:.3e}, guard = {guard:.0e} * max"
        )


def wiener_class_fun(a, delta: float) -> tuple[bool, float]:
    """``(min |F_sigma a| >= delta, min |F_sigma a|)``."""
    m = float(np.abs(symplectic_fourier(a)).min())
    return m >= delta, m


def wiener_class_op(S, delta: float) -> tuple[bool, float]:
    """``(min |F_W S| >= delta, min |F_W S|)``."""
    m = float(np.abs(fourier_wigner(S)).min())
    return m >= delta, m


def deconvolve(T, S, guard: float = DECONV_GUARD, drop_zeros: bool = False) -> np.ndarray:
    """The function ``r`` with ``r * S = T``: ``F_sigma r = F_W T / F_W S``.

    With ``drop_zeros`` the quotient is set to 0 where ``|F_W S| < guard * max``
    instead of raising; ``r * S`` is then the part of ``T`` that ``S`` can reach.
    """
    T = check_operator(T)
    S = check_operator(S, T.shape[0])
    FS = fourier_wigner(S)
    if not drop_zeros:
        _guard(FS, "F_W(S)", guard)
        return symplectic_fourier(fourier_wigner(T) / FS)
    keep = np.abs(FS) >= guard * np.abs(FS).max()
    q = np.zeros_like(FS)
    q[keep] = fourier_wigner(T)[keep] / FS[keep]
    return symplectic_fourier(q)


def deconvolve_fun(g, S, guard: float = DECONV_GUARD) -> np.ndarray:
    """The operator ``T`` with ``T * S = g``: ``F_W T = F_sigma g / F_W S``."""
    g = check_phase_fn(g)
    S = check_operator(S, g.shape[0])
    FS = fourier_wigner(S)
    _guard(FS, "F_W(S)", guard)
    return inverse_fourier_wigner(symplectic_fourier(g) / FS)


def tauberian_transfer_fun(f, S, A: complex, T, drop_zeros: bool = False) -> tuple[float, np.ndarray]:
    """Transfer ``f * S = A tr(S) I + K_S`` to ``f * T = A tr(T) I + K_T``.

    Returns ``||K_T - r * K_S||_HS`` with ``r = deconvolve(T, S)`` (zero up to
    roundoff) and ``K_T``.  ``drop_zeros`` is passed on to :func:`deconvolve`.
    """
    f = check_phase_fn(f)
    S = check_operator(S, f.shape[0])
    T = check_operator(T, f.shape[0])
    n = f.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    r = deconvolve(T, S, drop_zeros=drop_zeros)
    K_S = conv_fun_op(f, S) - A * np.trace(S) * eye
    K_T = conv_fun_op(f, T) - A * np.trace(T) * eye
    return hs_norm(K_T - conv_fun_op(r, K_S)), K_T


def tauberian_transfer_op(R, S, A: complex, g, T=None) -> tuple[float, np.ndarray, np.ndarray]:
    """Transfer ``R * S = A tr(S) + h`` to ``R * T`` and to ``g * R``.

    Checks ``R * T - A tr(T) = r * (R * S - A tr(S))`` with
    ``r = deconvolve(T, S)`` and ``g * R - A int(g) I = (R * S - A tr(S)) * T_g``
    with ``T_g = deconvolve_fun(g, S)``.  ``T`` defaults to ``S``.
    Returns the larger residual (function residual in the weighted norm,
    operator residual in HS norm), ``h_T`` and ``K_g``.
    """
    R = check_operator(R)
    n = R.shape[0]
    S = check_operator(S, n)
    g = check_phase_fn(g, n)
    T = S if T is None else check_operator(T, n)
    r = deconvolve(T, S)
    h_S = conv_op_op(R, S) - A * np.trace(S)
    h_T = conv_op_op(R, T) - A * np.trace(T)
    res_fun = float(np.linalg.norm(h_T - conv_fun_fun(r, h_S)) / np.sqrt(n))
    T_g = deconvolve_fun(g, S)
    K_g = conv_fun_op(g, R) - A * integral(g) * np.eye(n, dtype=np.complex128)
    res_op = hs_norm(K_g - conv_fun_op(h_S, T_g))
    return max(res_fun, res_op), h_T, K_g


def equivalence_harness(S) -> dict:
    """``a = S * S`` has ``F_sigma a = (F_W S)^2`` and ``int a = tr(S)^2``."""
    S = check_operator(S)
    a = conv_op_op(S, S)
    return {
        "fourier_residual": float(np.abs(symplectic_fourier(a) - fourier_wigner(S) ** 2).max()),
        "integral_residual": float(abs(integral(a) - np.trace(S) ** 2)),
    }


def fg_sup_profile(f, A: complex, Phi, R_freq: float, radii) -> DecayProfile:
    """``G(rho) = max |V_Phi (f - A)(x, w)|`` over ``|x| >= rho``, ``|w| <= R_freq``."""
    f = check_phase_fn(f)
    Phi = check_phase_fn(Phi, f.shape[0])
    g = as_grid(f.shape[0])
    V = np.abs(stft_phase(f - A, Phi))
    r = g.radius()
    wsel = (r <= R_freq + 1e-12).ravel()
    if not np.any(wsel):
        raise ValueError(f"no frequency point with |w| <= {R_freq}")
    # best over the allowed frequencies, one value per x
    per_x = V.reshape(g.n * g.n, g.n * g.n)[:, wsel].max(axis=1).reshape(g.n, g.n)
    return decay_profile(per_x, radii, g)


def _offsets(g, delta: float):
    idx = g.indices
    for a in idx:
        for b in idx:
            if np.hypot(a, b) * g.h <= delta + 1e-12:
                yield int(a), int(b)


def osc_modulus(f, delta: float, rho: float) -> float:
    """``max |f(z) - f(z - z')|`` over lattice ``|z'| <= delta`` and ``|z| >= rho`` (cyclic)."""
    f = check_phase_fn(f)
    g = as_grid(f.shape[0])
    far = g.radius() >= rho - 1e-12
    if not np.any(far):
        return 0.0
    best = 0.0
    for a, b in _offsets(g, delta):
        diff = np.abs(f - np.roll(f, (a, b), axis=(0, 1)))
        best = max(best, float(diff[far].max()))
    return best


def osc_surface(f, deltas, rhos) -> np.ndarray:
    """Table of :func:`osc_modulus` over all ``(delta, rho)`` pairs."""
    return np.array([[osc_modulus(f, d, r) for r in rhos] for d in deltas])


@dataclass(frozen=True)
class IsoResult:
    sigma_min: float
    sigma_max: float
    verdict: str

    def as_dict(self) -> dict:
        return {"sigma_min": self.sigma_min, "sigma_max": self.sigma_max, "verdict": self.verdict}


def iso_check(f, phi, tol: float = 1e-8) -> IsoResult:
    """Extreme singular values of the localization operator ``A_f^{phi,phi}``."""
    phi = check_signal(phi)
    if abs(np.linalg.norm(phi) - 1.0) > 1e-10:
        raise ValueError("window must have unit norm")
    sp = schatten(loc_op(f, phi, phi), rel_cutoff=0.0)
    smin = float(sp.sigma[-1])
    return IsoResult(smin, sp.op, "invertible" if smin > tol else "not invertible")


def compactness_report(K, eps: float = 0.01) -> dict:
    return schatten(K).summary(eps)


def schatten_counterexample_experiment(grid, spreads) -> list[dict]:
    """Normalized disk indicators ``f_w`` (integral 1) against the Weyl quantizer.

    ``f_w * S_{1/2}`` is the Weyl transform of ``f_w``, so its HS norm equals
    the weighted L^2 norm of ``f_w`` while the trace norm grows with the
    spread.  One row per radius, in the given order.
    """
    from .quantize import tau_operator

    g = as_grid(grid)
    S_half = tau_operator(g, 0.5)
    rows = []
    for w in spreads:
        w = float(w)
        ind = mask(g, "indicator_disk", r=w)
        mass = integral(ind).real
        if mass <= 0:
            raise ValueError(f"disk of radius {w} contains no lattice point")
        f = ind / mass
        sp = schatten(conv_fun_op(f, S_half))
        l2 = float(np.sqrt(np.sum(np.abs(f) ** 2) / g.n))
        rows.append(
            {
                "radius": w,
                "points": int(round(mass * g.n)),
                "l1": float(np.sum(np.abs(f)) / g.n),
                "l2": l2,
                "s1": sp.s1,
                "s2": sp.s2,
                "op": sp.op,
                "s2_over_l2": sp.s2 / l2,
            }
        )
    return rows


@dataclass
class TauberReport:
    """Per-(mask, window) results of the Tauberian harness across grid sizes."""

    mask: str
    window: str
    A: complex
    ns: list = field(default_factory=list)
    wiener_ok: dict = field(default_factory=dict)
    wiener_min: dict = field(default_factory=dict)
    residual: dict = field(default_factory=dict)
    compact_profile: dict = field(default_factory=dict)
    decay_profile: dict = field(default_factory=dict)
    fg_profile: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        keys = sorted(self.ns)
        return {
            "mask": self.mask,
            "window": self.window,
            "A": [self.A.real, self.A.imag],
            "ns": keys,
            "wiener_ok": {str(n): self.wiener_ok[n] for n in keys},
            "wiener_min": {str(n): self.wiener_min[n] for n in keys},
            "residual": {str(n): self.residual[n] for n in keys},
            "compact_profile": {str(n): self.compact_profile[n] for n in keys},
            "decay_profile": {str(n): self.decay_profile[n] for n in keys},
            "fg_profile": {str(n): self.fg_profile[n] for n in keys if n in self.fg_profile},
            "verdicts": dict(self.verdicts),
        }
