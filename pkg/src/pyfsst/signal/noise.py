"""Noise injection, analytic conversion and SNR arithmetic."""

import numpy as np
from scipy.signal import hilbert

from pyfsst.errors import LengthMismatchError, NotRealError, UndefinedSNRError

from .containers import SampledSignal


def add_noise(sig: SampledSignal, snr_db: float, seed: int = 0, *args, **kwargs) -> SampledSignal:
    """
    Adds white Gaussian noise so that 20 log10(std(f) / std(noise)) = snr_db.
    Complex signals get i.i.d. real and imaginary parts with equal variance.
    snr_db = inf returns the input unchanged.
    """
    signal_std = sig.std()
    if not signal_std > 0:
        raise UndefinedSNRError("SNR is undefined for a constant signal")
    if np.isposinf(snr_db):
        return sig

    noise_std = signal_std * 10 ** (-snr_db / 20)
    rng = np.random.default_rng(seed)
    if sig.is_real:
        noise = rng.standard_normal(len(sig)) * noise_std
    else:
        noise = (rng.standard_normal(len(sig)) + 1j * rng.standard_normal(len(sig))) * (noise_std / np.sqrt(2))

    if logger := kwargs.get("logger"):
        logger.debug("Adding noise at %s dB SNR (std=%.3e, seed=%s)" % (snr_db, noise_std, seed))
    return sig.with_samples(sig.samples + noise)


def analytic(real_sig: SampledSignal) -> SampledSignal:
    """Discrete analytic signal: negative bins zeroed, positive bins doubled, DC and Nyquist kept."""
    if not real_sig.is_real:
        if np.any(real_sig.samples.imag):
            raise NotRealError("Analytic conversion needs a real signal")
        real_sig = real_sig.real_part()
    return real_sig.with_samples(hilbert(real_sig.samples))


def output_snr(reference: SampledSignal, estimate: SampledSignal, trim: int = 0) -> float:
    """
    20 log10(||f|| / ||f_r - f||) in dB, +inf when the estimate is exact.
    trim excludes that many samples at both ends.
    """
    ref = np.asarray(getattr(reference, "samples", reference))
    est = np.asarray(getattr(estimate, "samples", estimate))
    if ref.shape != est.shape:
        raise LengthMismatchError("Reference and estimate lengths differ: %s != %s" % (ref.shape, est.shape))
    if trim:
        ref, est = ref[trim:-trim], est[trim:-trim]

    error = np.linalg.norm(est - ref)
    if error == 0:
        return np.inf
    return float(20 * np.log10(np.linalg.norm(ref) / error))
