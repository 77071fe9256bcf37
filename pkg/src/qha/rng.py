"""Seeded random inputs.

All randomness goes through numpy's PCG64 bit generator seeded from a
``SeedSequence``; child streams come from ``SeedSequence.spawn`` so that
independent experiment cells never share a stream.
"""

from __future__ import annotations

import numpy as np

__all__ = ["make_rng", "spawn", "random_signal", "random_operator", "random_phase_fn"]


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def spawn(seed: int, count: int) -> list[np.random.Generator]:
    children = np.random.SeedSequence(int(seed)).spawn(count)
    return [np.random.Generator(np.random.PCG64(c)) for c in children]


def _complex_normal(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_signal(n: int, rng, normalize: bool = True) -> np.ndarray:
    psi = _complex_normal(make_rng(rng), n)
    return psi / np.linalg.norm(psi) if normalize else psi


def random_operator(n: int, rng, kind: str = "general") -> np.ndarray:
    """Random ``n x n`` matrix: ``general``, ``hermitian`` or ``psd``."""
    a = _complex_normal(make_rng(rng), (n, n)) / np.sqrt(n)
    if kind == "general":
        return a
    if kind == "hermitian":
        return (a + a.conj().T) / 2
    if kind == "psd":
        return a @ a.conj().T
    raise ValueError(f"unknown random operator kind {kind!r}")


def random_phase_fn(n: int, rng, real: bool = False, positive: bool = False) -> np.ndarray:
    rng = make_rng(rng)
    if positive:
        return rng.random((n, n)).astype(np.complex128)
    if real:
        return rng.standard_normal((n, n)).astype(np.complex128)
    return _complex_normal(rng, (n, n))
