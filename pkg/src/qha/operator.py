"""Operator-side calculus on the finite model.

Operators are ``n x n`` complex matrices in centered storage order.  The
time-frequency shift is ``(pi(m,k) psi)[j] = exp(2 pi i k j / n) psi[j - m]``.

The Fourier-Wigner transform uses the phase ``c(z) = exp(-i pi s(z) / n)``
with ``s`` from :func:`qha.core.symplectic_product`.  ``c`` is even in ``z``
and ``c(z)^2 = exp(-2 pi i m k / n)``; with this branch every identity of the
calculus (including real symbol <=> Hermitian operator) is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    as_grid,
    check_operator,
    check_phase_fn,
    check_signal,
    from_fft_order,
    symplectic_fourier,
    symplectic_product,
    to_fft_order,
)

__all__ = [
    "SchattenSpectrum",
    "SVDError",
    "tf_shift",
    "translate_op",
    "parity",
    "check_op",
    "rank_one",
    "fw_phase",
    "fourier_wigner",
    "inverse_fourier_wigner",
    "weyl_quantize",
    "weyl_symbol",
    "wigner",
    "schatten",
    "hs_norm",
]


class SVDError(RuntimeError):
    """Singular value decomposition failed to converge."""


def tf_shift(grid, z) -> np.ndarray:
    """Unitary matrix of ``pi(m, k)``."""
    g = as_grid(grid)
    n = g.n
    m, k = (int(v) for v in z)
    p = np.arange(n)
    M = np.zeros((n, n), dtype=np.complex128)
    M[p, (p - m) % n] = np.exp(2j * np.pi * ((k * g.indices) % n) / n)
    return M


def _modulation(n: int, k: int) -> np.ndarray:
    j = np.arange(n) - n // 2
    return np.exp(2j * np.pi * ((k * j) % n) / n)


def translate_op(S, z) -> np.ndarray:
    """``alpha_z(S) = pi(z) S pi(z)^*``."""
    S = check_operator(S)
    n = S.shape[0]
    m, k = (int(v) for v in z)
    mod = _modulation(n, k)
    shifted = np.roll(S, (m, m), axis=(0, 1))
    return mod[:, None] * shifted * mod.conj()[None, :]


def parity(grid) -> np.ndarray:
    g = as_grid(grid)
    n = g.n
    P = np.zeros((n, n), dtype=np.complex128)
    p = np.arange(n)
    P[p, (n - p) % n] = 1.0
    return P


def _flip(n: int) -> np.ndarray:
    return (n - np.arange(n)) % n


def check_op(S) -> np.ndarray:
    """``P S P``."""
    S = check_operator(S)
    f = _flip(S.shape[0])
    return S[np.ix_(f, f)]


def rank_one(psi, phi) -> np.ndarray:
    """``(psi (x) phi)(xi) = <xi, phi> psi``."""
    psi = check_signal(psi)
    phi = check_signal(phi, psi.shape[0])
    return np.outer(psi, phi.conj())


def fw_phase(grid) -> np.ndarray:
    g = as_grid(grid)
    return np.exp(-1j * np.pi * symplectic_product(g) / g.n)


def _commutation_phase(n: int) -> np.ndarray:
    idx = np.arange(n) - n // 2
    return np.exp(-2j * np.pi * ((idx[:, None] * idx[None, :]) % n) / n)


def fourier_wigner(S) -> np.ndarray:
    """``F_W(S)(z) = c(z) tr(pi(-z) S)`` on the whole lattice.

    ``tr(pi(-m,-k) S) = sum_j exp(-2 pi i k j/n) S[j+m, j]``: one FFT per
    cyclic diagonal.
    """
    S = check_operator(S)
    n = S.shape[0]
    A = to_fft_order(S)
    j = np.arange(n)
    m = np.arange(n)[:, None]
    diags = A[(j[None, :] + m) % n, j[None, :]]
    tr = from_fft_order(np.fft.fft(diags, axis=1))
    return fw_phase(n) * tr


def inverse_fourier_wigner(F) -> np.ndarray:
    """Exact inverse of :func:`fourier_wigner`.

    ``S = (1/n) sum_z C(z) pi(z)`` with ``C = tr(pi(z)^* S)``.
    """
    F = check_phase_fn(F)
    n = F.shape[0]
    coeff = _commutation_phase(n) * F / fw_phase(n)
    # S[j, j-m] = (1/n) sum_k C(m,k) exp(2 pi i k j/n)
    rows = np.fft.ifft(to_fft_order(coeff), axis=1)
    j = np.arange(n)
    m = np.arange(n)[:, None]
    A = np.zeros((n, n), dtype=np.complex128)
    A[np.broadcast_to(j, (n, n)), (j[None, :] - m) % n] = rows
    return from_fft_order(A)


def weyl_quantize(f) -> np.ndarray:
    """Weyl transform ``L_f``, defined by ``F_W(L_f) = F_sigma(f)``."""
    return inverse_fourier_wigner(symplectic_fourier(f))


def weyl_symbol(S) -> np.ndarray:
    return symplectic_fourier(fourier_wigner(S))


def wigner(psi, phi=None) -> np.ndarray:
    """Cross-Wigner distribution ``W(psi, phi)``, the Weyl symbol of ``psi (x) phi``."""
    if phi is None:
        phi = psi
    return weyl_symbol(rank_one(psi, phi))


def hs_norm(S) -> float:
    return float(np.linalg.norm(check_operator(S)))


@dataclass(frozen=True)
class SchattenSpectrum:
    """Singular values in non-increasing order plus derived norms."""

    sigma: np.ndarray

    @property
    def s1(self) -> float:
        return float(self.sigma.sum())

    @property
    def s2(self) -> float:
        return float(np.sqrt(np.sum(self.sigma**2)))

    @property
    def op(self) -> float:
        return float(self.sigma[0]) if self.sigma.size else 0.0

    def norm(self, p: float) -> float:
        if np.isinf(p):
            return self.op
        return float(np.sum(self.sigma**p) ** (1.0 / p))

    def fraction_above(self, eps: float) -> float:
        return float(np.count_nonzero(self.sigma > eps) / self.sigma.size)

    def count_above(self, eps: float) -> int:
        return int(np.count_nonzero(self.sigma > eps))

    def summary(self, eps: float = 0.01) -> dict:
        return {
            "n": int(self.sigma.size),
            "s1": self.s1,
            "s2": self.s2,
            "op": self.op,
            "eps": float(eps),
            "fraction_above": self.fraction_above(eps),
            "count_above": self.count_above(eps),
        }


def schatten(S, rel_cutoff: float = 1e-12) -> SchattenSpectrum:
    S = check_operator(S)
    try:
        sigma = np.linalg.svd(S, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise SVDError(
            f"SVD did not converge for a {S.shape[0]}x{S.shape[0]} operator "
            f"(max |entry| = {np.abs(S).max():.3e})"
        ) from exc
    sigma = np.sort(sigma)[::-1]
    if sigma.size and sigma[0] > 0:
        sigma = np.where(sigma < rel_cutoff * sigma[0], 0.0, sigma)
    sigma.setflags(write=False)
    return SchattenSpectrum(sigma)
