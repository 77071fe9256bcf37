"""The three convolutions of quantum harmonic analysis.

Each convolution has a fast path through the Fourier transforms and a naive
lattice-sum path.  The naive paths are O(n^4) and exist as oracles for
the fast ones; they refuse grids larger than ``NAIVE_MAX_N``.
"""

from __future__ import annotations

import numpy as np

from .core import check_operator, check_phase_fn, check_signal, symplectic_fourier
from .operator import (
    check_op,
    fourier_wigner,
    inverse_fourier_wigner,
    rank_one,
    translate_op,
)

__all__ = [
    "NAIVE_MAX_N",
    "conv_fun_fun",
    "conv_fun_op",
    "conv_op_op",
    "conv_fun_fun_naive",
    "conv_fun_op_naive",
    "conv_op_op_naive",
    "loc_op",
    "loc_op_naive",
]

NAIVE_MAX_N = 32


def _same_size(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"grid size mismatch: {a.shape[0]} vs {b.shape[0]}")


def _guard_naive(n: int) -> None:
    if n > NAIVE_MAX_N:
        raise ValueError(f"naive convolution paths are limited to n <= {NAIVE_MAX_N}, got {n}")


def _lattice(n: int):
    idx = np.arange(n) - n // 2
    for a, m in enumerate(idx):
        for b, k in enumerate(idx):
            yield a, b, int(m), int(k)


def conv_fun_fun(f, g) -> np.ndarray:
    """Cyclic ``(f * g)(z) = (1/n) sum_z' f(z') g(z - z')``."""
    f = check_phase_fn(f)
    g = check_phase_fn(g)
    _same_size(f, g)
    return symplectic_fourier(symplectic_fourier(f) * symplectic_fourier(g))


def conv_fun_op(f, S) -> np.ndarray:
    """``f * S = (1/n) sum_z f(z) alpha_z(S)`` via ``F_W(f*S) = F_sigma(f) F_W(S)``."""
    f = check_phase_fn(f)
    S = check_operator(S)
    _same_size(f, S)
    return inverse_fourier_wigner(symplectic_fourier(f) * fourier_wigner(S))


def conv_op_op(S, T) -> np.ndarray:
    """``(S * T)(z) = tr(S alpha_z(PTP))`` via ``F_sigma(S*T) = F_W(S) F_W(T)``."""
    S = check_operator(S)
    T = check_operator(T)
    _same_size(S, T)
    return symplectic_fourier(fourier_wigner(S) * fourier_wigner(T))


def conv_fun_fun_naive(f, g) -> np.ndarray:
    f = check_phase_fn(f)
    g = check_phase_fn(g)
    _same_size(f, g)
    n = f.shape[0]
    _guard_naive(n)
    out = np.zeros((n, n), dtype=np.complex128)
    for a, b, _, _ in _lattice(n):
        # g(z - z') for all z': roll so that position (a', b') holds g(z - z')
        shifted = np.roll(g[::-1, ::-1], (a + 1 + n // 2, b + 1 + n // 2), axis=(0, 1))
        out[a, b] = np.sum(f * shifted) / n
    return out


def conv_fun_op_naive(f, S) -> np.ndarray:
    f = check_phase_fn(f)
    S = check_operator(S)
    _same_size(f, S)
    n = f.shape[0]
    _guard_naive(n)
    out = np.zeros((n, n), dtype=np.complex128)
    for a, b, m, k in _lattice(n):
        if f[a, b] != 0:
            out += f[a, b] * translate_op(S, (m, k))
    return out / n


def conv_op_op_naive(S, T) -> np.ndarray:
    S = check_operator(S)
    T = check_operator(T)
    _same_size(S, T)
    n = S.shape[0]
    _guard_naive(n)
    Tc = check_op(T)
    out = np.zeros((n, n), dtype=np.complex128)
    for a, b, m, k in _lattice(n):
        # tr(S X) = sum_ij S_ij X_ji
        out[a, b] = np.sum(S * translate_op(Tc, (m, k)).T)
    return out


def loc_op(f, phi1, phi2) -> np.ndarray:
    """Localization operator ``A_f^{phi1, phi2}`` through ``f * (phi2 (x) phi1)``."""
    phi1 = check_signal(phi1)
    phi2 = check_signal(phi2, phi1.shape[0])
    if not np.any(phi1) or not np.any(phi2):
        raise ValueError("localization windows must be non-zero")
    return conv_fun_op(f, rank_one(phi2, phi1))


def loc_op_naive(f, phi1, phi2) -> np.ndarray:
    """Localization operator assembled from its weak definition.

    ``<A psi, phi> = (1/n) sum_z f(z) V_{phi2}phi(z) conj(V_{phi1}psi(z))``,
    i.e. ``A = V_{phi2}^* M_f V_{phi1}`` with explicit analysis matrices.
    """
    from .gabor import analysis_matrix

    f = check_phase_fn(f)
    phi1 = check_signal(phi1, f.shape[0])
    phi2 = check_signal(phi2, f.shape[0])
    if not np.any(phi1) or not np.any(phi2):
        raise ValueError("localization windows must be non-zero")
    n = f.shape[0]
    V1 = analysis_matrix(phi1)
    V2 = analysis_matrix(phi2)
    return (V2.conj().T * f.ravel()[None, :]) @ V1 / n
