"""
Modified STFT engine.

V(t_k, eta) = (1 / fs) sum_{m=-L..L} f[k + m] w[m] exp(-i 2 pi eta m / fs)

The phase is taken relative to the frame center, samples past either end of the signal are zero.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy import fft as sp_fft

from pyfsst.common import GAMMA_REL, fft_workers, frame_blocks
from pyfsst.errors import KindMismatchError, LengthMismatchError
from pyfsst.signal import SampledSignal

from .tfmatrix import TFKind, TFMatrix, WindowRef
from .window import Deriv, WindowFamily


def n_frames_for(n_samples: int, hop: int) -> int:
    return (n_samples - 1) // hop + 1


def frame_matrix(sig: SampledSignal, half_len: int, hop: int = 1, frames: slice | None = None) -> np.ndarray:
    """Returns the (n_frames, 2 * half_len + 1) matrix of zero-padded segments centered on each frame."""
    padded = np.pad(np.asarray(sig.samples, dtype=np.complex128), (half_len, half_len))
    segments = sliding_window_view(padded, 2 * half_len + 1)[::hop]
    return segments if frames is None else segments[frames]


def _fold(weighted: np.ndarray, half_len: int, n_fft: int) -> np.ndarray:
    """
    Wraps segments of any length onto n_fft points so that index 0 is the window center.
    The DFT of the result equals the DTFT of the segment at the bin frequencies.
    """
    width = weighted.shape[-1]
    folds = -(-width // n_fft)
    pad = [(0, 0)] * (weighted.ndim - 1) + [(0, folds * n_fft - width)]
    folded = np.pad(weighted, pad).reshape(*weighted.shape[:-1], folds, n_fft).sum(axis=-2)
    return np.roll(folded, -half_len, axis=-1)


def transform_segments(
    segments: np.ndarray,
    windows: np.ndarray,
    fs: float,
    half_len: int,
    n_fft: int | None = None,
    n_bins: int | None = None,
    freqs: np.ndarray | None = None,
) -> np.ndarray:
    """
    Windows each segment by every row of windows and transforms it.
    Returns an array of shape (n_windows, n_frames, n_bins).
    With freqs, the sum is evaluated directly at those frequencies instead of FFT bins.
    """
    weighted = segments[None, :, :] * np.atleast_2d(windows)[:, None, :]
    if freqs is not None:
        m = np.arange(-half_len, half_len + 1)
        kernel = np.exp(-2j * np.pi * np.outer(m, np.asarray(freqs, dtype=float)) / fs)
        return weighted @ kernel / fs

    spectrum = sp_fft.fft(_fold(weighted, half_len, n_fft), axis=-1, workers=fft_workers())
    return spectrum[..., :n_bins] / fs


def _grid(sig: SampledSignal, n_fft: int | None, n_bins: int | None, freqs):
    """Resolves the frequency grid to (n_fft, n_bins, f0, df)."""
    if freqs is not None:
        freqs = np.asarray(freqs, dtype=float)
        if freqs.ndim != 1 or not freqs.size:
            raise ValueError("Explicit frequencies must be a nonempty 1-D grid")
        df = float(freqs[1] - freqs[0]) if freqs.size > 1 else 0.0
        if freqs.size > 1 and not np.allclose(np.diff(freqs), df):
            raise ValueError("Explicit frequencies must be uniformly spaced")
        return None, freqs.size, float(freqs[0]), df

    n_fft = int(n_fft or len(sig))
    n_bins = int(n_bins or max(n_fft // 2, 1))
    if not 1 <= n_bins <= n_fft:
        raise ValueError("Number of bins must be in 1..n_fft (%d), got: %d" % (n_fft, n_bins))
    return n_fft, n_bins, 0.0, sig.sample_rate_hz / n_fft


def stft_fields(
    sig: SampledSignal,
    fam: WindowFamily,
    keys=None,
    hop: int = 1,
    n_fft: int | None = None,
    n_bins: int | None = None,
    freqs=None,
    frames: slice | None = None,
    *args,
    **kwargs,
) -> dict:
    """
    Computes the STFT for several windows of a family from one segment matrix.
    Returns {(l, deriv): TFMatrix}; keys defaults to every window in the family.
    """
    if sig.sample_rate_hz != fam.sample_rate_hz:
        raise LengthMismatchError(
            "Signal rate %s Hz does not match the window rate %s Hz" % (sig.sample_rate_hz, fam.sample_rate_hz)
        )
    fam.check_signal_length(len(sig))
    hop = int(hop)
    if hop < 1:
        raise ValueError("Hop must be at least 1: %s" % hop)

    keys = [(l, Deriv(d)) for l, d in (keys or fam.keys)]
    n_fft, n_bins, f0, df = _grid(sig, n_fft, n_bins, freqs)
    first, stop, _ = (frames or slice(0, None)).indices(n_frames_for(len(sig), hop))
    windows = np.stack([fam[key] for key in keys])
    values = np.concatenate(
        [
            transform_segments(
                frame_matrix(sig, fam.half_len, hop, slice(first + block.start, first + block.stop)),
                windows,
                sig.sample_rate_hz,
                fam.half_len,
                n_fft,
                n_bins,
                freqs,
            )
            for block in frame_blocks(max(stop - first, 0))
        ],
        axis=1,
    )
    if logger := kwargs.get("logger"):
        logger.debug("Computed %d STFT fields on %d frames x %d bins" % (len(keys), values.shape[1], n_bins))

    dt = hop / sig.sample_rate_hz
    return {
        key: TFMatrix(
            values[i],
            t0=sig.t0 + first * dt,
            dt=dt,
            f0=f0,
            df=df,
            kind=TFKind.STFT,
            sample_rate_hz=sig.sample_rate_hz,
            window_ref=WindowRef(fam.sigma, key[0], int(key[1])),
        )
        for i, key in enumerate(keys)
    }


def stft(
    sig: SampledSignal,
    fam: WindowFamily,
    l: int = 0,
    deriv: int = 0,
    hop: int = 1,
    n_fft: int | None = None,
    *args,
    **kwargs,
) -> TFMatrix:
    """
    Modified STFT of sig with the window t^l g^(deriv).
    n_fft defaults to the signal length and the bins cover [0, fs / 2).
    Accepts the n_bins, freqs and frames keywords of stft_fields.
    """
    key = (l, Deriv(deriv))
    return stft_fields(sig, fam, [key], hop, n_fft, *args, **kwargs)[key]


def inverse_column(col, g0: complex, d_eta: float) -> complex:
    """d_eta / g*(0) times the sum over frequency, applied along the last axis."""
    if g0 == 0:
        raise ZeroDivisionError("Reconstruction needs g(0) != 0")
    return d_eta / np.conj(g0) * np.sum(np.asarray(col), axis=-1)


def invert(tfr: TFMatrix) -> np.ndarray:
    """Applies inverse_column to every frame of an STFT or squeezed matrix."""
    if tfr.kind == TFKind.SQUEEZED:
        return np.sum(tfr.values, axis=-1) * tfr.df
    return inverse_column(tfr.values, tfr.window_ref.g0, tfr.df)


def spectrogram(tfr: TFMatrix) -> TFMatrix:
    """|V|^2 on the same axes."""
    if tfr.kind != TFKind.STFT:
        raise KindMismatchError("Spectrogram needs an STFT matrix, got: %s" % tfr.kind.name)
    return tfr.with_values(np.abs(tfr.values) ** 2, kind=TFKind.SPECTROGRAM)


def default_gamma(tfr, gamma_rel: float = GAMMA_REL) -> float:
    """Threshold on |V^g| relative to its maximum."""
    values = getattr(tfr, "values", tfr)
    return float(gamma_rel * np.max(np.abs(values), initial=0.0))
