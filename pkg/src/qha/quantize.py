"""Quantization schemes and Cohen's class distributions.

``S_tau`` is built from its Fourier-Wigner transform,
``F_W(S_tau)(z) = exp(-i pi (2 tau - 1) s(z) / n)``, which is the sampled
continuum value of ``F_sigma(a_tau)``.  Quantizing the sampled symbol
``a_tau`` directly is also available (:func:`tau_operator_from_symbol`) but
aliases badly: ``a_tau`` is a chirp of rate ``2/(2 tau - 1)``, above the
lattice bandwidth for every ``tau`` in (1/4, 3/4).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    as_grid,
    atom,
    check_operator,
    check_phase_fn,
    check_signal,
    decay_profile,
    delta_mask,
    mask,
    symplectic_product,
)
from .conv import conv_fun_fun, conv_fun_op, conv_op_op
from .operator import (
    check_op,
    inverse_fourier_wigner,
    rank_one,
    schatten,
    weyl_quantize,
    weyl_symbol,
    wigner,
)

__all__ = [
    "QuantizerSpec",
    "tau_symbol",
    "tau_operator",
    "tau_operator_from_symbol",
    "cohen_Q",
    "cohen_Q_weyl",
    "tau_wigner",
    "tau_quantize",
    "born_jordan",
    "born_jordan_quadrature",
    "quantizer_operator",
    "quantization_compactness_check",
]


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not 0.0 < tau < 1.0:
        raise ValueError(f"tau must lie in the open interval (0, 1), got {tau}")
    return tau


def tau_symbol(grid, tau: float) -> np.ndarray:
    """Sampled ``a_tau``; the discrete delta at ``tau = 1/2``."""
    tau = _check_tau(tau)
    if tau == 0.5:
        return delta_mask(grid)
    return mask(grid, "a_tau", tau=tau)


def _tau_fw(grid, tau: float) -> np.ndarray:
    g = as_grid(grid)
    return np.exp(-1j * np.pi * (2.0 * tau - 1.0) * symplectic_product(g) / g.n)


def tau_operator(grid, tau: float) -> np.ndarray:
    """``S_tau`` with ``F_W(S_tau) = exp(-i pi (2 tau - 1) x w)`` on the lattice."""
    tau = _check_tau(tau)
    return inverse_fourier_wigner(_tau_fw(grid, tau))


def tau_operator_from_symbol(grid, tau: float) -> np.ndarray:
    """Weyl quantization of the sampled symbol ``a_tau`` (aliased; diagnostic only)."""
    return weyl_quantize(tau_symbol(grid, tau))


def cohen_Q(R, psi) -> np.ndarray:
    """Cohen's class distribution ``Q_R(psi) = (psi (x) psi) * check(R)``."""
    R = check_operator(R)
    psi = check_signal(psi, R.shape[0])
    return conv_op_op(rank_one(psi, psi), check_op(R))


def cohen_Q_weyl(R, psi) -> np.ndarray:
    """Same distribution through the Weyl symbol: ``a_{check R} * W(psi, psi)``."""
    R = check_operator(R)
    return conv_fun_fun(weyl_symbol(check_op(R)), wigner(psi, psi))


def tau_wigner(psi, tau: float) -> np.ndarray:
    psi = check_signal(psi)
    return cohen_Q(tau_operator(psi.shape[0], tau), psi)


def tau_quantize(f, tau: float) -> np.ndarray:
    """Shubin tau-quantization ``f * S_{1 - tau}``."""
    f = check_phase_fn(f)
    tau = _check_tau(tau)
    return conv_fun_op(f, tau_operator(f.shape[0], 1.0 - tau))


def born_jordan(grid) -> np.ndarray:
    """``S_BJ`` with ``F_W(S_BJ)(x, w) = sinc(pi x w)``."""
    g = as_grid(grid)
    # np.sinc(u) = sin(pi u) / (pi u)
    return inverse_fourier_wigner(np.sinc(symplectic_product(g) / g.n).astype(np.complex128))


def born_jordan_quadrature(psi, nodes: int = 64) -> np.ndarray:
    """Midpoint rule for ``int_0^1 Q_{S_tau}(psi) dtau`` with pairwise summation."""
    psi = check_signal(psi)
    if nodes < 1:
        raise ValueError("need at least one quadrature node")
    taus = (np.arange(nodes) + 0.5) / nodes
    terms = [tau_wigner(psi, t) for t in taus]
    # pairwise tree sum in node order
    while len(terms) > 1:
        terms = [terms[i] + terms[i + 1] if i + 1 < len(terms) else terms[i] for i in range(0, len(terms), 2)]
    return terms[0] / nodes


@dataclass(frozen=True)
class QuantizerSpec:
    """``tau`` (value in (0, 1)), ``born_jordan`` or ``custom`` (explicit matrix)."""

    kind: str
    tau: float | None = None
    matrix: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.kind == "tau":
            _check_tau(self.tau if self.tau is not None else -1.0)
        elif self.kind == "custom":
            if self.matrix is None:
                raise ValueError("custom quantizer needs a matrix")
            check_operator(self.matrix)
        elif self.kind != "born_jordan":
            raise ValueError(f"unknown quantizer kind {self.kind!r}")

    @property
    def label(self) -> str:
        if self.kind == "tau":
            return f"tau={self.tau:g}"
        return self.kind


def quantizer_operator(spec: QuantizerSpec, grid) -> np.ndarray:
    g = as_grid(grid)
    if spec.kind == "tau":
        return tau_operator(g, spec.tau)
    if spec.kind == "born_jordan":
        return born_jordan(g)
    R = check_operator(spec.matrix, g.n)
    return R


def quantization_compactness_check(
    R,
    test_masks: dict | None = None,
    test_signals: dict | None = None,
    eps: float = 0.01,
    window_threshold: float = 1e-4,
    window_radius: float = 2.0,
    radii_fracs=(0.0, 0.2, 0.4, 0.6, 0.8),
) -> dict:
    """Profiles behind the equivalent conditions for ``R`` to quantize compactly.

    (i) Husimi function ``Q_R(phi0)`` decay, (ii) ``Q_R(psi)`` decay for each
    test signal, (iv) singular-value tails of ``f * R`` for each test mask.
    The verdicts are per-``n`` proxies: a decay verdict passes when the
    profile tail at 0.8 rho_max is below 1e-3 of its head.
    """
    from .gabor import interior_radius, min_abs_stft

    R = check_operator(R)
    n = R.shape[0]
    g = as_grid(n)
    phi0 = atom(g, "gaussian")
    wmin = min_abs_stft(phi0, min(window_radius, interior_radius(g)))
    if wmin <= window_threshold:
        raise ValueError(
            f"test window fails the no-zeros threshold: min |V phi phi| = {wmin:.3e} <= {window_threshold:.1e}"
        )
    radii = [fr * g.rho_max for fr in radii_fracs]

    def decay_verdict(prof) -> bool:
        head = prof.values[0]
        return bool(head > 0 and prof.values[-1] <= 1e-3 * head)

    husimi = decay_profile(cohen_Q(R, phi0), radii, g)
    out = {
        "n": n,
        "window_min_abs_stft": wmin,
        "husimi": {"profile": husimi.as_dict(), "decays": decay_verdict(husimi)},
        "signals": {},
        "masks": {},
    }
    for name, psi in (test_signals or {}).items():
        prof = decay_profile(cohen_Q(R, psi), radii, g)
        out["signals"][name] = {"profile": prof.as_dict(), "decays": decay_verdict(prof)}
    for name, f in (test_masks or {}).items():
        out["masks"][name] = schatten(conv_fun_op(f, R)).summary(eps)
    return out
