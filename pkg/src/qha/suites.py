"""Identity suites behind ``qha verify``.

Every check returns a non-negative residual; a check passes when the
residual is at most the tolerance of its suite.  Residuals are relative to
the size of the quantity being compared unless the name says otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conv import (
    NAIVE_MAX_N,
    conv_fun_fun,
    conv_fun_fun_naive,
    conv_fun_op,
    conv_fun_op_naive,
    conv_op_op,
    conv_op_op_naive,
    loc_op,
    loc_op_naive,
)
from .core import atom, integral, mask, symplectic_fourier, symplectic_product
from .gabor import berezin, berezin_direct, gabor_projection, stft, synthesis, toeplitz_berezin
from .operator import (
    fourier_wigner,
    hs_norm,
    inverse_fourier_wigner,
    parity,
    rank_one,
    weyl_quantize,
    weyl_symbol,
    wigner,
)
from .quantize import born_jordan, cohen_Q, cohen_Q_weyl, tau_operator
from .rng import random_operator, random_phase_fn, random_signal, spawn
from .tauber import tauberian_transfer_fun, tauberian_transfer_op

__all__ = ["Check", "SUITES", "DEFAULT_TOLERANCES", "run_suites"]

DEFAULT_TOLERANCES = {
    "fsigma": 1e-10,
    "fourier_wigner": 1e-10,
    "convolution": 1e-10,
    "associativity": 1e-10,
    "identities": 1e-10,
    "trace_moyal": 1e-10,
    "weyl": 1e-10,
    "berezin": 1e-10,
    "cohen": 1e-10,
    "tauberian": 1e-8,
}


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    n: int
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.residual) and self.residual <= self.tol)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "n": self.n,
            "residual": self.residual,
            "tol": self.tol,
            "passed": self.passed,
        }


def _rel(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    scale = max(float(np.linalg.norm(b)), 1e-300)
    return float(np.linalg.norm(a - b) / scale)


def _wnorm(f) -> float:
    return float(np.linalg.norm(f) / np.sqrt(f.shape[0]))


def _inputs(n: int, rng):
    return {
        "f": random_phase_fn(n, rng),
        "g": random_phase_fn(n, rng),
        "R": random_operator(n, rng),
        "S": random_operator(n, rng),
        "T": random_operator(n, rng),
        "psi": random_signal(n, rng),
        "phi": random_signal(n, rng),
    }


def suite_fsigma(n, x):
    f = x["f"]
    Ff = symplectic_fourier(f)
    return {
        "self_inverse": _rel(symplectic_fourier(Ff), f),
        "isometry": abs(_wnorm(Ff) - _wnorm(f)) / _wnorm(f),
    }


def suite_fourier_wigner(n, x):
    S = x["S"]
    F = fourier_wigner(S)
    return {
        "isometry": abs(_wnorm(F) ** 2 - hs_norm(S) ** 2) / hs_norm(S) ** 2,
        "roundtrip": _rel(inverse_fourier_wigner(F), S),
    }


def suite_convolution(n, x):
    f, g, S, T = x["f"], x["g"], x["S"], x["T"]
    out = {
        "fsigma_conv_op_op": _rel(symplectic_fourier(conv_op_op(S, T)), fourier_wigner(S) * fourier_wigner(T)),
        "fw_conv_fun_op": _rel(fourier_wigner(conv_fun_op(f, S)), symplectic_fourier(f) * fourier_wigner(S)),
        "fsigma_conv_fun_fun": _rel(symplectic_fourier(conv_fun_fun(f, g)), symplectic_fourier(f) * symplectic_fourier(g)),
    }
    if n <= NAIVE_MAX_N:
        out["naive_fun_fun"] = _rel(conv_fun_fun(f, g), conv_fun_fun_naive(f, g))
        out["naive_fun_op"] = _rel(conv_fun_op(f, S), conv_fun_op_naive(f, S))
        out["naive_op_op"] = _rel(conv_op_op(S, T), conv_op_op_naive(S, T))
    return out


def suite_associativity(n, x):
    f, g, R, S, T = x["f"], x["g"], x["R"], x["S"], x["T"]
    return {
        "(RS)T=R(ST)": _rel(conv_fun_op(conv_op_op(R, S), T), conv_fun_op(conv_op_op(S, T), R)),
        "f*(RS)=(fR)S": _rel(conv_fun_fun(f, conv_op_op(R, S)), conv_op_op(conv_fun_op(f, R), S)),
        "(f*g)R=f(gR)": _rel(conv_fun_op(conv_fun_fun(f, g), R), conv_fun_op(f, conv_fun_op(g, R))),
        "ST=TS": _rel(conv_op_op(S, T), conv_op_op(T, S)),
    }


def suite_identities(n, x):
    f, S = x["f"], x["S"]
    eye = np.eye(n, dtype=np.complex128)
    one = np.ones((n, n), dtype=np.complex128)
    return {
        "S*I=trS": _rel(conv_op_op(S, eye), np.trace(S) * one),
        "1*S=trS I": _rel(conv_fun_op(one, S), np.trace(S) * eye),
        "f*I=intf I": _rel(conv_fun_op(f, eye), integral(f) * eye),
        "f*1=intf": _rel(conv_fun_fun(f, one), integral(f) * one),
    }


def suite_trace_moyal(n, x):
    S, T, psi, phi = x["S"], x["T"], x["psi"], x["phi"]
    V = stft(psi, phi)
    P = gabor_projection(phi)
    return {
        "int(ST)=trS trT": abs(integral(conv_op_op(S, T)) - np.trace(S) * np.trace(T)) / abs(np.trace(S) * np.trace(T)),
        "moyal": abs(np.sum(np.abs(V) ** 2) / n - 1.0),
        "V*V=I": _rel(synthesis(V, phi), psi),
        "projection_idempotent": _rel(P @ P, P),
        "projection_hermitian": _rel(P.conj().T, P),
    }


def suite_weyl(n, x):
    f, S, psi, phi = x["f"], x["S"], x["psi"], x["phi"]
    L = weyl_quantize(f)
    return {
        "symbol(quantize f)=f": _rel(weyl_symbol(L), f),
        "quantize(symbol S)=S": _rel(weyl_quantize(weyl_symbol(S)), S),
        "unitarity": abs(hs_norm(L) - _wnorm(f)) / _wnorm(f),
        "rank_one_symbol=wigner": _rel(weyl_symbol(rank_one(psi, phi)), wigner(psi, phi)),
        "loc_op_weak=conv": _rel(loc_op_naive(f, phi, psi), loc_op(f, phi, psi)),
    }


def suite_berezin(n, x):
    f, T, phi = x["f"], x["T"], x["phi"]
    return {
        "two_paths": _rel(berezin(T, phi), berezin_direct(T, phi)),
        "toeplitz": _rel(berezin(loc_op(f, phi, phi), phi), toeplitz_berezin(f, phi)),
    }


def suite_cohen(n, x):
    R, psi = x["R"], x["psi"]
    S_half = tau_operator(n, 0.5)
    sinc = np.sinc(symplectic_product(n) / n)
    return {
        "factorization": _rel(cohen_Q(R, psi), cohen_Q_weyl(R, psi)),
        "Q_half=wigner": _rel(cohen_Q(S_half, psi), wigner(psi, psi)),
        "FW(S_BJ)=sinc": _rel(fourier_wigner(born_jordan(n)), sinc),
    }


def suite_tauberian(n, x):
    T = x["T"]
    g = x["g"]
    out = {}
    # even/odd windows vanish on the Nyquist seam, so use windows without symmetry
    windows = {
        "random": x["phi"],
        "random_hermite": atom(n, "random_hermite", seed=0),
    }
    masks = {
        "constant": (mask(n, "constant", value=0.5 + 0.25j), 0.5 + 0.25j),
        "chirp": (mask(n, "chirp"), 0.0),
        "plane_wave": (mask(n, "plane_wave", z0=(1, 2)), 0.0),
        "gaussian_env": (mask(n, "gaussian_env"), 0.0),
    }
    for wname, phi in windows.items():
        S = rank_one(phi, phi)
        for mname, (f, A) in masks.items():
            res, _ = tauberian_transfer_fun(f, S, A, T)
            out[f"fun:{mname}/{wname}"] = res / (1.0 + np.abs(f).max() * np.linalg.norm(T, "nuc"))
        for rname, R in (("parity", parity(n)), ("random", x["R"])):
            res, _, _ = tauberian_transfer_op(R, S, 0.0, g, T)
            out[f"op:{rname}/{wname}"] = res / (1.0 + np.linalg.norm(R, 2) * (np.linalg.norm(T, "nuc") + _wnorm(g)))
    return out


SUITES = {
    "fsigma": suite_fsigma,
    "fourier_wigner": suite_fourier_wigner,
    "convolution": suite_convolution,
    "associativity": suite_associativity,
    "identities": suite_identities,
    "trace_moyal": suite_trace_moyal,
    "weyl": suite_weyl,
    "berezin": suite_berezin,
    "cohen": suite_cohen,
    "tauberian": suite_tauberian,
}


def run_suites(ns, seed: int, tolerances: dict | None = None, names=None) -> list[Check]:
    """Run the selected suites on every ``n``; inputs come from one child stream per ``n``."""
    tol = dict(DEFAULT_TOLERANCES)
    tol.update(tolerances or {})
    names = list(SUITES) if names is None else list(names)
    checks = []
    streams = spawn(seed, len(ns))
    for n, rng in zip(ns, streams):
        x = _inputs(int(n), rng)
        for name in names:
            for cname, value in SUITES[name](int(n), x).items():
                checks.append(Check(name, cname, int(n), float(value), float(tol[name])))
    return checks
