import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import derived
import oracles
from conftest import rel
from qha.core import atom, delta_mask, integral, make_grid, mask, symplectic_fourier, weighted_norm
from qha.conv import conv_fun_op
from qha.gabor import stft
from qha.operator import (
    check_op,
    fourier_wigner,
    fw_phase,
    hs_norm,
    inverse_fourier_wigner,
    parity,
    rank_one,
    schatten,
    tf_shift,
    translate_op,
    weyl_quantize,
    weyl_symbol,
    wigner,
)
from qha.rng import make_rng, random_operator, random_phase_fn, random_signal

seeds = st.integers(0, 2**32)
sizes = st.sampled_from([8, 12, 16])
points8 = st.tuples(st.integers(-4, 3), st.integers(-4, 3))


class TestTfShift:
    def test_matches_oracle(self):
        for m in range(-4, 4):
            for k in range(-4, 4):
                assert np.allclose(tf_shift(8, (m, k)), oracles.tf_shift(8, m, k), atol=1e-14)

    def test_identity_and_unitary(self):
        assert np.array_equal(tf_shift(8, (0, 0)), np.eye(8))
        for z in [(1, 2), (-4, 3), (3, -4)]:
            U = tf_shift(8, z)
            assert np.abs(U @ U.conj().T - np.eye(8)).max() < 1e-12

    @settings(max_examples=30, deadline=None)
    @given(points8, points8)
    def test_commutation_phase(self, z1, z2):
        (m, k), (mp, kp) = z1, z2
        lhs = tf_shift(8, z1) @ tf_shift(8, z2)
        rhs = np.exp(-2j * np.pi * kp * m / 8) * tf_shift(8, (m + mp, k + kp))
        assert np.abs(lhs - rhs).max() < 1e-12


class TestTranslate:
    def test_zero_shift(self, rng):
        S = random_operator(8, rng)
        assert np.array_equal(translate_op(S, (0, 0)), S)

    @settings(max_examples=20, deadline=None)
    @given(points8, points8, seeds)
    def test_trace_and_composition(self, z1, z2, seed):
        S = random_operator(8, make_rng(seed))
        assert abs(np.trace(translate_op(S, z1)) - np.trace(S)) < 1e-12
        both = translate_op(translate_op(S, z2), z1)
        assert np.abs(both - translate_op(S, (z1[0] + z2[0], z1[1] + z2[1]))).max() < 1e-12
        assert np.abs(translate_op(S, z1) - oracles.alpha(S, *z1)).max() < 1e-12

    def test_symbol_covariance(self, rng):
        S = random_operator(16, rng)
        z = (3, -5)
        assert rel(weyl_symbol(translate_op(S, z)), np.roll(weyl_symbol(S), z, axis=(0, 1))) < 1e-12

    def test_fw_covariance(self, rng):
        n = 8
        S = random_operator(n, rng)
        m0, k0 = 2, -3
        idx = np.arange(n) - n // 2
        sigma = (k0 * idx[:, None] - idx[None, :] * m0) / n
        expect = np.exp(2j * np.pi * sigma) * fourier_wigner(S)
        assert rel(fourier_wigner(translate_op(S, (m0, k0))), expect) < 1e-12


class TestParity:
    def test_square_and_gaussian(self):
        P = parity(16)
        assert np.array_equal(P @ P, np.eye(16))
        phi = atom(16, "gaussian")
        assert np.allclose(P @ phi, phi)
        assert np.array_equal(P, oracles.parity(16))

    @pytest.mark.parametrize("n", [8, 16, 32])
    def test_fourier_wigner_structure(self, n):
        # |F_W(P)| is 2 on the (even, even) sublattice and 0 elsewhere; not flat (see ledger)
        F = np.abs(fourier_wigner(parity(n)))
        idx = np.arange(n) - n // 2
        even = (idx[:, None] % 2 == 0) & (idx[None, :] % 2 == 0)
        assert np.allclose(F[even], 2.0)
        assert np.allclose(F[~even], 0.0)
        if n == 8:
            assert np.allclose(F, np.abs(oracles.fourier_wigner(parity(n))))


class TestCheckOp:
    def test_involution(self, rng):
        S = random_operator(10, rng)
        assert np.array_equal(check_op(check_op(S)), S)
        P = parity(10)
        assert np.allclose(check_op(S), P @ S @ P)

    def test_even_window(self):
        phi = atom(16, "gaussian")
        R = rank_one(phi, phi)
        assert np.allclose(check_op(R), R)

    def test_tf_shift(self):
        # P pi(m,k) P = pi(-m,-k) exactly in the finite model
        for z in [(1, 2), (-4, 3), (2, -4)]:
            assert np.allclose(check_op(tf_shift(8, z)), tf_shift(8, (-z[0], -z[1])), atol=1e-14)


class TestRankOne:
    def test_trace_adjoint(self, rng):
        a, b = random_signal(8, rng), random_signal(8, rng)
        assert np.isclose(np.trace(rank_one(a, a)), 1)
        assert np.isclose(np.trace(rank_one(a, b)), np.vdot(b, a))
        assert np.allclose(rank_one(a, b).conj().T, rank_one(b, a))

    def test_symbol_is_cross_wigner(self, rng):
        a, b = random_signal(8, rng), random_signal(8, rng)
        assert rel(weyl_symbol(rank_one(a, b)), wigner(a, b)) < 1e-13


class TestFourierWigner:
    def test_matches_oracle(self, rng):
        S = random_operator(8, rng)
        assert rel(fourier_wigner(S), oracles.fourier_wigner(S)) < 1e-13

    @pytest.mark.parametrize("n", [16, 32, 64])
    def test_gaussian(self, n):
        phi = atom(n, "gaussian")
        r = make_grid(n).radius()
        err = np.abs(fourier_wigner(rank_one(phi, phi)) - np.exp(-np.pi * r**2 / 2)).max()
        assert err == pytest.approx(derived.FW_GAUSS_ERR[n], rel=1e-6, abs=1e-14)
        if n == 64:
            assert err <= 1e-6

    def test_rank_one_is_stft(self, rng):
        n = 8
        a, b = random_signal(n, rng), random_signal(n, rng)
        F = fourier_wigner(rank_one(a, b))
        V = stft(a, b)
        assert np.abs(F - fw_phase(n).conj() * V).max() < 1e-13
        # away from the seam the half phase is the plain exp(i pi m k / n)
        idx = np.arange(n) - n // 2
        plain = np.exp(1j * np.pi * np.outer(idx, idx) / n) * V
        assert np.abs(F[1:, 1:] - plain[1:, 1:]).max() < 1e-13

    @settings(max_examples=20, deadline=None)
    @given(sizes, seeds)
    def test_linear_isometric_invertible(self, n, seed):
        rng = make_rng(seed)
        S, T = random_operator(n, rng), random_operator(n, rng)
        al, be = 0.3 - 1.1j, 2.0
        assert rel(fourier_wigner(al * S + be * T), al * fourier_wigner(S) + be * fourier_wigner(T)) < 1e-13
        F = fourier_wigner(S)
        assert abs(np.sum(np.abs(F) ** 2) / n - hs_norm(S) ** 2) < 1e-10 * hs_norm(S) ** 2
        assert rel(inverse_fourier_wigner(F), S) < 1e-12

    def test_inverse_of_constant(self):
        # F_W^{-1}(1) is the quantizer of the delta symbol
        one = np.ones((8, 8), dtype=complex)
        assert rel(inverse_fourier_wigner(one), weyl_quantize(delta_mask(8))) < 1e-13

    def test_inverse_of_fsigma_is_weyl(self, rng):
        f = random_phase_fn(8, rng)
        assert rel(inverse_fourier_wigner(symplectic_fourier(f)), weyl_quantize(f)) < 1e-14


class TestWeyl:
    @settings(max_examples=20, deadline=None)
    @given(sizes, seeds)
    def test_roundtrips_and_unitarity(self, n, seed):
        rng = make_rng(seed)
        f, S = random_phase_fn(n, rng), random_operator(n, rng)
        assert rel(weyl_symbol(weyl_quantize(f)), f) < 1e-12
        assert rel(weyl_quantize(weyl_symbol(S)), S) < 1e-12
        assert abs(hs_norm(weyl_quantize(f)) - weighted_norm(f)) < 1e-12 * weighted_norm(f)

    def test_constant(self):
        A = 1.5 - 0.5j
        assert np.allclose(weyl_quantize(mask(8, "constant", value=A)), A * np.eye(8), atol=1e-14)

    @settings(max_examples=20, deadline=None)
    @given(sizes, seeds)
    def test_real_iff_hermitian(self, n, seed):
        rng = make_rng(seed)
        f = random_phase_fn(n, rng, real=True)
        L = weyl_quantize(f)
        assert np.abs(L - L.conj().T).max() < 1e-12
        H = random_operator(n, rng, kind="hermitian")
        assert np.abs(weyl_symbol(H).imag).max() < 1e-12

    def test_trace_is_integral(self, rng):
        # brute force: trace of the quantized basis functions
        n = 8
        for _ in range(3):
            f = random_phase_fn(n, rng)
            assert abs(np.trace(weyl_quantize(f)) - integral(f)) < 1e-12


class TestWigner:
    @settings(max_examples=20, deadline=None)
    @given(sizes, seeds)
    def test_basic_properties(self, n, seed):
        rng = make_rng(seed)
        a, b = random_signal(n, rng), random_signal(n, rng)
        assert np.abs(wigner(a).imag).max() < 1e-12
        assert abs(integral(wigner(a)) - 1) < 1e-12
        assert rel(wigner(a, b), wigner(b, a).conj()) < 1e-12

    @pytest.mark.parametrize("n", [16, 32, 64])
    def test_gaussian(self, n):
        phi = atom(n, "gaussian")
        r = make_grid(n).radius()
        err = np.abs(wigner(phi) - 2 * np.exp(-2 * np.pi * r**2)).max()
        assert err == pytest.approx(derived.WIGNER_GAUSS_ERR[n], rel=1e-6, abs=1e-14)


class TestSchatten:
    def test_identity(self):
        sp = schatten(np.eye(8))
        assert np.allclose(sp.sigma, 1) and sp.fraction_above(0.5) == 1
        assert sp.summary(0.5)["count_above"] == 8

    def test_rank_one(self, rng):
        a = random_signal(8, rng, normalize=False)
        b = random_signal(8, rng, normalize=False)
        sp = schatten(rank_one(a, b))
        assert np.isclose(sp.s1, np.linalg.norm(a) * np.linalg.norm(b))
        assert sp.count_above(1e-9) == 1

    def test_norms_match_numpy(self, rng):
        S = random_operator(12, rng)
        sp = schatten(S)
        assert np.isclose(sp.s1, np.linalg.norm(S, "nuc"), rtol=1e-8)
        assert np.isclose(sp.s2, np.linalg.norm(S, "fro"), rtol=1e-8)
        assert np.isclose(sp.op, np.linalg.norm(S, 2), rtol=1e-8)
        assert np.isclose(sp.norm(np.inf), sp.op)
        assert np.isclose(sp.norm(3), np.sum(sp.sigma**3) ** (1 / 3))
        assert np.all(np.diff(sp.sigma) <= 0)

    def test_cutoff(self):
        sp = schatten(np.diag([1.0, 1e-13, 0.5, 0, 0, 0, 0, 0]))
        assert sp.sigma[1] == 0.5 and sp.sigma[2] == 0

    @settings(max_examples=20, deadline=None)
    @given(sizes, seeds)
    def test_young(self, n, seed):
        rng = make_rng(seed)
        f, S = random_phase_fn(n, rng), random_operator(n, rng)
        l1 = weighted_norm(f, 1)
        l2 = weighted_norm(f, 2)
        linf = weighted_norm(f, np.inf)
        K = schatten(conv_fun_op(f, S))
        sS = schatten(S)
        assert K.s1 <= l1 * sS.s1 * (1 + 1e-10)  # (1, 1, 1)
        assert K.s2 <= l1 * sS.s2 * (1 + 1e-10)  # (1, 2, 2)
        assert K.op <= l1 * sS.op * (1 + 1e-10)  # (1, inf, inf)
        assert K.op <= l2 * sS.s2 * (1 + 1e-10)  # (2, 2, inf)
        assert K.op <= linf * sS.s1 * (1 + 1e-10)
