import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import derived
import oracles
from conftest import rel
from qha.core import atom, make_grid, mask, weighted_norm
from qha.conv import loc_op
from qha.gabor import (
    STFT4_MAX_N,
    analysis_matrix,
    atoms_matrix,
    berezin,
    berezin_direct,
    berezin_map_matrix,
    gabor_intersection_angle,
    gabor_projection,
    interior_radius,
    min_abs_stft,
    reproducing_kernel,
    stft,
    stft4_norm2,
    stft_phase,
    synthesis,
    toeplitz_berezin,
    window_zero_report,
)
from qha.rng import make_rng, random_operator, random_phase_fn, random_signal

seeds = st.integers(0, 2**32)
sizes = st.sampled_from([8, 12, 16])


def windows(n):
    return {
        "gaussian": atom(n, "gaussian"),
        "hermite1": atom(n, "hermite", order=1),
        "onesided_exp": atom(n, "onesided_exp"),
        "random": atom(n, "random", seed=4),
    }


class TestStft:
    def test_matches_oracle(self, rng):
        a, b = random_signal(8, rng), random_signal(8, rng, normalize=False)
        assert rel(stft(a, b), oracles.stft(a, b)) < 1e-13

    def test_origin_is_inner_product(self, rng):
        a, b = random_signal(16, rng), random_signal(16, rng)
        assert np.isclose(stft(a, b)[8, 8], np.vdot(b, a))

    @settings(max_examples=20, deadline=None)
    @given(sizes, seeds)
    def test_moyal(self, n, seed):
        rng = make_rng(seed)
        a = random_signal(n, rng, normalize=False)
        b = random_signal(n, rng, normalize=False)
        lhs = np.sum(np.abs(stft(a, b)) ** 2) / n
        assert abs(lhs - np.linalg.norm(a) ** 2 * np.linalg.norm(b) ** 2) < 1e-10 * lhs

    @pytest.mark.parametrize("n", [16, 32, 64])
    def test_gaussian_closed_form(self, n):
        phi = atom(n, "gaussian")
        err = np.abs(stft(phi, phi) - oracles.gaussian_stft_continuum(n)).max()
        assert err == pytest.approx(derived.GAUSS_STFT_ERR[n], rel=1e-6, abs=1e-14)

    def test_zero_window(self):
        with pytest.raises(ValueError):
            stft(atom(8, "gaussian"), np.zeros(8))


class TestSynthesis:
    @pytest.mark.parametrize("name", ["gaussian", "hermite1", "onesided_exp", "random"])
    def test_reconstruction_and_projection(self, name, rng):
        n = 16
        phi = windows(n)[name]
        psi = random_signal(n, rng)
        assert rel(synthesis(stft(psi, phi), phi), psi) < 1e-12
        P = gabor_projection(phi)
        assert np.abs(P @ P - P).max() < 1e-12
        assert np.abs(P - P.conj().T).max() < 1e-12
        assert np.isclose(np.trace(P).real, n)

    def test_zero_table(self):
        assert np.all(synthesis(np.zeros((8, 8)), atom(8, "gaussian")) == 0)

    def test_matrices(self, rng):
        phi = random_signal(8, rng)
        psi = random_signal(8, rng)
        A = atoms_matrix(phi)
        assert A.shape == (8, 64)
        assert np.allclose(analysis_matrix(phi) @ psi, stft(psi, phi).ravel())

    def test_reproducing_kernel(self, rng):
        n = 8
        phi = atom(n, "gaussian")
        psi = random_signal(n, rng)
        V = stft(psi, phi)
        idx = np.arange(n) - n // 2
        acc = np.zeros((n, n), dtype=complex)
        for a, m in enumerate(idx):
            for b, k in enumerate(idx):
                acc += V[a, b] * reproducing_kernel(phi, (m, k))
        assert rel(acc / n, V) < 1e-12


class TestBerezin:
    def test_identity(self):
        phi = atom(16, "onesided_exp")
        assert np.allclose(berezin(np.eye(16), phi), 1)

    def test_paths_and_oracle(self, rng):
        T = random_operator(8, rng)
        phi = random_signal(8, rng)
        assert rel(berezin(T, phi), berezin_direct(T, phi)) < 1e-12
        assert rel(berezin(T, phi), oracles.berezin(T, phi)) < 1e-12

    @settings(max_examples=15, deadline=None)
    @given(sizes, seeds)
    def test_toeplitz(self, n, seed):
        rng = make_rng(seed)
        f, phi = random_phase_fn(n, rng), random_signal(n, rng)
        assert rel(berezin(loc_op(f, phi, phi), phi), toeplitz_berezin(f, phi)) < 1e-10

    def test_gaussian_kernel(self):
        n = 64
        phi = atom(n, "gaussian")
        r = make_grid(n).radius()
        assert np.abs(np.abs(stft(phi, phi)) ** 2 - np.exp(-np.pi * r**2)).max() < 1e-10

    def test_unnormalized_window(self):
        with pytest.raises(ValueError):
            berezin(np.eye(8), 2 * atom(8, "gaussian"))

    def test_map_matrix(self, rng):
        phi = random_signal(8, rng)
        T = random_operator(8, rng)
        assert rel(berezin_map_matrix(phi) @ T.ravel(), berezin(T, phi).ravel()) < 1e-12

    @pytest.mark.parametrize("name", ["gaussian", "hermite1", "random"])
    def test_map_singular_values_are_stft_moduli(self, name):
        n = 8
        phi = windows(n)[name]
        sv = np.sort(np.linalg.svd(berezin_map_matrix(phi), compute_uv=False))
        expect = np.sort(math.sqrt(n) * np.abs(stft(phi, phi)).ravel())
        assert np.allclose(sv, expect, atol=1e-12)

    def test_injectivity_dichotomy(self):
        # a window with no lattice zeros gives an injective Berezin map; even windows vanish on the seam
        n = 8
        for seed in range(4):
            phi = atom(n, "random", seed=seed)
            assert np.abs(stft(phi, phi)).min() > 1e-3
            assert np.linalg.svd(berezin_map_matrix(phi), compute_uv=False).min() > 1e-3
        sv = np.linalg.svd(berezin_map_matrix(atom(n, "gaussian")), compute_uv=False)
        assert sv.min() < 1e-12


class TestWindowZeros:
    def test_frozen_ratios(self):
        w = windows(16)
        for name in ("gaussian", "onesided_exp", "hermite1"):
            r = window_zero_report(w[name])
            assert r.ratio == pytest.approx(derived.WINDOW_RATIO_16[name], rel=1e-6, abs=1e-12)

    def test_dichotomy(self):
        w = windows(16)
        assert window_zero_report(w["gaussian"]).no_zeros
        assert window_zero_report(w["onesided_exp"]).no_zeros
        h = window_zero_report(w["hermite1"])
        assert not h.no_zeros and h.ratio <= 1e-6
        assert min_abs_stft(w["hermite1"]) <= 1e-6 * np.abs(stft(w["hermite1"], w["hermite1"])).max()

    def test_gaussian_seam_zeros_are_excluded(self):
        phi = atom(16, "gaussian")
        V = np.abs(stft(phi, phi))
        assert V.min() < 1e-12  # on the seam
        assert min_abs_stft(phi, refine=False) > 1e-4

    def test_refinement_only_lowers(self):
        phi = atom(16, "onesided_exp")
        assert min_abs_stft(phi) <= min_abs_stft(phi, refine=False) + 1e-15

    def test_report_dict(self):
        d = window_zero_report(atom(16, "gaussian")).as_dict()
        assert d["n"] == 16 and d["radius"] == interior_radius(16)

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_higher_hermite_have_zeros(self, order):
        assert not window_zero_report(atom(16, "hermite", order=order)).no_zeros


class TestAngle:
    def test_same_range(self, rng):
        phi = random_signal(8, rng)
        assert gabor_intersection_angle(phi, phi) < 1e-6
        assert gabor_intersection_angle(phi, np.exp(0.7j) * phi) < 1e-6

    def test_gaussian_hermite(self):
        a = gabor_intersection_angle(atom(16, "gaussian"), atom(16, "hermite", order=1))
        assert a > 0.01
        assert a == pytest.approx(math.pi / 2, abs=1e-9)

    def test_equals_inner_product_angle(self, rng):
        a, b = random_signal(8, rng), random_signal(8, rng)
        assert gabor_intersection_angle(a, b) == pytest.approx(math.acos(abs(np.vdot(a, b))), abs=1e-8)


class TestStftPhase:
    def test_origin_and_moyal(self, rng):
        n = 8
        f, W = random_phase_fn(n, rng), random_phase_fn(n, rng)
        V = stft_phase(f, W)
        assert np.isclose(V[4, 4, 4, 4], np.sum(f * W.conj()) / n)
        expect = weighted_norm(f) ** 2 * weighted_norm(W) ** 2
        assert abs(stft4_norm2(V) - expect) < 1e-8 * expect

    def test_constant_is_translation_invariant(self):
        n = 16
        V = np.abs(stft_phase(mask(n, "constant", value=2.0), mask(n, "gaussian_env")))
        assert np.abs(V - V[:1, :1]).max() < 1e-12

    def test_size_guard(self):
        n = STFT4_MAX_N + 2
        with pytest.raises(ValueError):
            stft_phase(np.ones((n, n)), np.ones((n, n)))
        with pytest.raises(ValueError):
            stft_phase(np.ones((8, 8)), np.zeros((8, 8)))
