from unittest import TestCase, main

import numpy as np
from zenlib.logging import loggify

from pyfsst.errors import InvalidModeError, LengthMismatchError, NotRealError, UndefinedSNRError
from pyfsst.signal import (
    BENCHMARK_F1,
    BENCHMARK_F2,
    ModeSpec,
    SampledSignal,
    add_noise,
    analytic,
    make_benchmark_signal,
    output_snr,
    surrogate_chirp,
    synthesize,
)

from fsst_test_signals import FS, N, tone


@loggify
class TestSignal(TestCase):
    def setUp(self):
        self.f1, self.f2, self.f, self.ideal = make_benchmark_signal(logger=self.logger)

    def test_tone_starts_at_one(self):
        self.assertEqual(tone().samples[0], 1 + 0j)

    def test_benchmark_signal_shapes(self):
        for sig in (self.f1, self.f2, self.f):
            self.assertEqual(len(sig), N)
            self.assertEqual(sig.sample_rate_hz, FS)
        self.assertEqual(self.ideal.inst_freqs.shape, (2, N))

    def test_benchmark_signal_at_zero(self):
        self.assertAlmostEqual(abs(self.f1.samples[0]), np.exp(2), places=9)
        self.assertAlmostEqual(abs(self.f2.samples[0]), 8.0, places=9)
        modes = (BENCHMARK_F1, BENCHMARK_F2)
        expected = sum(mode.amplitude(0.0) * np.exp(2j * np.pi * mode.phase(0.0)) for mode in modes)
        self.assertAlmostEqual(self.f.samples[0], expected, places=9)

    def test_decimated(self):
        decimated = self.f.decimated(4)
        self.assertEqual(len(decimated), N // 4)
        self.assertEqual(decimated.sample_rate_hz, FS / 4)
        np.testing.assert_array_equal(decimated.samples, self.f.samples[::4])
        ideal = self.ideal.decimated(4)
        np.testing.assert_array_equal(ideal.times, decimated.times)
        np.testing.assert_array_equal(ideal.inst_freqs, self.ideal.inst_freqs[:, ::4])
        self.assertEqual(ideal.labels, ("f1", "f2"))
        with self.assertRaises(ValueError):
            self.f.decimated(0)

    def test_benchmark_signal_sum(self):
        np.testing.assert_array_equal(self.f.samples, self.f1.samples + self.f2.samples)

    def test_benchmark_inst_freq(self):
        self.assertAlmostEqual(BENCHMARK_F1.inst_freq(0.5), 82.5, places=9)

    def test_benchmark_f2_inst_freq_matches_phase(self):
        t = np.linspace(0.05, 0.95, 50)
        h = 1e-6
        numeric = (BENCHMARK_F2.phase(t + h) - BENCHMARK_F2.phase(t - h)) / (2 * h)
        np.testing.assert_allclose(BENCHMARK_F2.inst_freq(t), numeric, rtol=1e-6)

    def test_ideal_in_band(self):
        self.assertTrue(np.all(self.ideal.inst_freqs > 0))
        self.assertTrue(np.all(self.ideal.inst_freqs < FS / 2))

    def test_synthesize_linear_in_amplitude(self):
        one = synthesize(ModeSpec.from_polynomials([0], [0, 50, 20]), N, FS)
        two = synthesize(ModeSpec.from_polynomials([np.log(2)], [0, 50, 20]), N, FS)
        np.testing.assert_allclose(two.samples, 2 * one.samples, rtol=1e-12)

    def test_invalid_mode(self):
        mode = ModeSpec(amplitude=lambda t: t - 0.5, phase=lambda t: 10 * t, inst_freq=lambda t: 10 + 0 * t)
        with self.assertRaises(InvalidModeError):
            synthesize(mode, N, FS)

    def test_decreasing_phase(self):
        with self.assertRaises(InvalidModeError):
            synthesize(ModeSpec.from_polynomials([0], [0, -10]), N, FS)

    def test_noise_infinite_snr(self):
        self.assertIs(add_noise(self.f, np.inf, seed=1), self.f)

    def test_noise_level(self):
        noisy = add_noise(self.f, 0, seed=3, logger=self.logger)
        ratio = np.std(noisy.samples - self.f.samples) / np.std(self.f.samples)
        self.assertAlmostEqual(ratio, 1, delta=0.05)

    def test_noise_deterministic(self):
        a = add_noise(self.f, 5, seed=7)
        b = add_noise(self.f, 5, seed=7)
        np.testing.assert_array_equal(a.samples, b.samples)
        c = add_noise(self.f, 5, seed=8)
        self.assertFalse(np.array_equal(a.samples, c.samples))

    def test_noise_constant_signal(self):
        with self.assertRaises(UndefinedSNRError):
            add_noise(SampledSignal(np.ones(16), FS), 0)

    def test_analytic_cosine(self):
        t = np.arange(N) / FS
        result = analytic(SampledSignal(np.cos(2 * np.pi * 100 * t), FS))
        np.testing.assert_allclose(result.samples, np.exp(2j * np.pi * 100 * t), atol=1e-8)

    def test_analytic_keeps_real_part(self):
        real = SampledSignal(np.random.default_rng(0).standard_normal(N), FS)
        np.testing.assert_allclose(analytic(real).samples.real, real.samples, atol=1e-10)

    def test_analytic_constant(self):
        constant = SampledSignal(np.full(32, 3.0), FS)
        np.testing.assert_allclose(analytic(constant).samples, constant.samples, atol=1e-12)

    def test_analytic_projection(self):
        sig = tone()
        np.testing.assert_allclose(analytic(sig.real_part()).samples, sig.samples, atol=1e-8)

    def test_analytic_rejects_complex(self):
        with self.assertRaises(NotRealError):
            analytic(tone())

    def test_output_snr(self):
        self.assertEqual(output_snr(self.f, self.f), np.inf)
        self.assertAlmostEqual(output_snr(self.f, self.f.scaled(0)), 0.0, places=12)
        self.assertAlmostEqual(output_snr(self.f, self.f.scaled(1 + 1e-2)), 40.0, places=9)

    def test_output_snr_length_mismatch(self):
        with self.assertRaises(LengthMismatchError):
            output_snr(self.f, SampledSignal(np.ones(10), FS))

    def test_pad_pow2(self):
        sig, ideal = surrogate_chirp()
        padded = sig.pad_pow2()
        self.assertEqual(len(padded), 512)
        np.testing.assert_array_equal(padded.samples[: len(sig)], sig.samples)
        self.assertFalse(np.any(padded.samples[len(sig) :]))
        self.assertEqual(ideal.zero_padded(512, sig.sample_rate_hz).amplitudes.shape, (1, 512))

    def test_surrogate_chirp(self):
        sig, ideal = surrogate_chirp(logger=self.logger)
        inst_freq = ideal.inst_freqs[0]
        merge = int(0.15 * sig.sample_rate_hz)
        self.assertTrue(np.all(np.diff(inst_freq[:merge]) >= 0))
        self.assertTrue(np.all(np.diff(inst_freq[merge + 1 :]) <= 0))
        self.assertTrue(np.all(inst_freq < sig.sample_rate_hz / 2))

    def test_signals_are_immutable(self):
        with self.assertRaises(ValueError):
            self.f.samples[0] = 0


if __name__ == "__main__":
    main()
