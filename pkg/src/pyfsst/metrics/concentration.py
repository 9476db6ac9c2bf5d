"""Concentration measures of time-frequency representations."""

import numpy as np

from pyfsst.common import DEFAULT_SIGMA_GRID
from pyfsst.errors import EmptyDistributionError, WindowTooLongError
from pyfsst.signal import SampledSignal
from pyfsst.stft import TFMatrix, build_window_family, stft


def _magnitude(tfr) -> np.ndarray:
    if isinstance(tfr, TFMatrix):
        return tfr.amplitude()
    return np.abs(tfr)


def renyi_entropy(tfr, alpha: float = 3) -> float:
    """
    Renyi entropy in bits of |V| taken as a distribution over TF cells.
    |V| is normalized to unit mass first, so the value does not depend on scale.
    """
    if alpha == 1:
        raise ValueError("Renyi order must differ from 1")
    magnitude = _magnitude(tfr)
    total = magnitude.sum()
    if not total > 0:
        raise EmptyDistributionError("Renyi entropy of an all-zero matrix is undefined")
    p = magnitude / total
    return float(np.log2(np.sum(p**alpha)) / (1 - alpha))


def optimize_sigma(sig: SampledSignal, sigma_grid=DEFAULT_SIGMA_GRID, alpha: float = 3, *args, **kwargs):
    """
    Window width minimizing the Renyi entropy of the STFT over an ascending grid.
    Returns (sigma_opt, entropies); ties go to the smaller sigma.
    Widths whose window does not fit in the signal are skipped and get a NaN entropy.
    Extra keywords (hop, n_fft, n_bins) are passed to the STFT.
    """
    logger = kwargs.get("logger")
    sigma_grid = np.asarray(sigma_grid, dtype=float)
    if not sigma_grid.size:
        raise ValueError("Sigma grid is empty")

    curve = np.full(sigma_grid.size, np.nan)
    for i, sigma in enumerate(sigma_grid):
        try:
            family = build_window_family(sigma, sig.sample_rate_hz, 1, n_samples=len(sig))
        except WindowTooLongError as e:
            if logger:
                logger.warning("Skipping sigma=%s: %s" % (sigma, e))
            continue
        curve[i] = renyi_entropy(stft(sig, family, *args, **kwargs), alpha)

    if np.all(np.isnan(curve)):
        raise WindowTooLongError(
            "No sigma in [%s, %s] fits a signal of %d samples" % (sigma_grid.min(), sigma_grid.max(), len(sig))
        )
    sigma_opt = float(sigma_grid[int(np.nanargmin(curve))])
    if logger:
        logger.info("Optimal sigma: %s s (H=%.3f bits)" % (sigma_opt, np.nanmin(curve)))
    return sigma_opt, curve


def normalized_energy_curve(tfr, max_count: int | None = None) -> np.ndarray:
    """
    Fraction of the total energy held by the n largest coefficients, n = 1..max_count.
    Counts past the number of cells repeat the final value 1.
    """
    energy = np.sort(_magnitude(tfr).ravel() ** 2)[::-1]
    total = energy.sum()
    if not total > 0:
        raise EmptyDistributionError("Normalized energy of an all-zero matrix is undefined")
    curve = np.cumsum(energy) / total
    max_count = curve.size if max_count is None else int(max_count)
    if max_count > curve.size:
        curve = np.pad(curve, (0, max_count - curve.size), constant_values=curve[-1])
    return curve[:max_count]


def normalized_energy_axis(max_count: int, n_samples: int) -> np.ndarray:
    """Coefficient counts 1..max_count expressed as fractions of the signal length."""
    return np.arange(1, max_count + 1) / n_samples
