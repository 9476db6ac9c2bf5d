import numpy as np

from pyfsst.errors import InvalidBandError, KindMismatchError, LengthMismatchError
from pyfsst.signal import SampledSignal
from pyfsst.stft import TFKind, TFMatrix


def band_mask(ridge, d: int, n_bins: int) -> np.ndarray:
    """(n_frames, n_bins) mask of the bins within d of the ridge."""
    return np.abs(np.arange(n_bins)[None, :] - np.asarray(ridge)[:, None]) <= d


def reconstruct_mode(squeezed: TFMatrix, ridge, d: int, real_source: bool = False, *args, **kwargs) -> SampledSignal:
    """
    Sums the squeezed coefficients in bins [ridge - d, ridge + d] times the output bin width.
    The 1 / g*(0) constant was applied once by squeezing.
    real_source returns twice the real part, for modes of real signals.
    """
    if squeezed.kind != TFKind.SQUEEZED:
        raise KindMismatchError("Mode reconstruction needs a squeezed matrix, got: %s" % squeezed.kind.name)
    if d < 0:
        raise InvalidBandError("Band halfwidth must be nonnegative: %s" % d)
    ridge = np.asarray(ridge)
    if ridge.shape != (squeezed.n_frames,):
        raise LengthMismatchError("Ridge has %s points for %d frames" % (ridge.shape, squeezed.n_frames))

    mode = squeezed.df * np.sum(np.where(band_mask(ridge, d, squeezed.n_bins), squeezed.values, 0), axis=1)
    if real_source:
        mode = 2 * mode.real

    if logger := kwargs.get("logger"):
        logger.debug("Reconstructed mode over +-%d bins on %d frames" % (d, squeezed.n_frames))
    hop = round(squeezed.dt * squeezed.sample_rate_hz)
    rate = squeezed.sample_rate_hz / hop if hop else 1 / squeezed.dt
    return SampledSignal(mode, rate, squeezed.t0)
