"""Earth mover's distance between TF columns and an ideal TF representation."""

import numpy as np
from scipy.stats import wasserstein_distance

from pyfsst.errors import EmptyDistributionError, GridMismatchError
from pyfsst.signal import IdealTF


def emd_to_ideal(
    tfr, ideal: IdealTF, gamma: float = 0.0, band_halfwidth: float | None = None, *args, **kwargs
) -> float:
    """
    Mean over frames of the 1-D Wasserstein distance (Hz) between the normalized amplitude column
    and point masses at the ideal IFs weighted by their amplitudes.
    Energy kinds (spectrogram, reassigned) are brought back to the amplitude scale first.
    With band_halfwidth, only bins within that distance of an ideal IF are kept.
    Frames whose column never exceeds gamma are skipped.
    """
    magnitude = tfr.amplitude()
    freqs = tfr.bin_freqs
    if ideal.inst_freqs.shape[1] != magnitude.shape[0]:
        raise GridMismatchError(
            "Ideal tracks have %d samples, the TF matrix has %d frames"
            % (ideal.inst_freqs.shape[1], magnitude.shape[0])
        )

    distances = []
    for t, column in enumerate(magnitude):
        inst_freqs, amplitudes = ideal.inst_freqs[:, t], ideal.amplitudes[:, t]
        if band_halfwidth is not None:
            column = np.where(np.min(np.abs(freqs[:, None] - inst_freqs[None, :]), axis=1) <= band_halfwidth, column, 0)
        if not column.max() > gamma or not amplitudes.sum() > 0:
            continue
        distances.append(wasserstein_distance(freqs, inst_freqs, column, amplitudes))

    if not distances:
        raise EmptyDistributionError("No frame holds both TF mass and an ideal component")
    if logger := kwargs.get("logger"):
        logger.debug("EMD averaged over %d of %d frames" % (len(distances), magnitude.shape[0]))
    return float(np.mean(distances))


def emd_per_mode(tfr, ideal: IdealTF, gamma: float = 0.0, *args, **kwargs) -> dict:
    """EMD of each mode on a band of half the minimum mode separation around its IF."""
    halfwidth = ideal.min_separation() / 2
    band = None if np.isinf(halfwidth) else halfwidth
    return {
        label: emd_to_ideal(tfr, ideal.mode(k), gamma, band, *args, **kwargs) for k, label in enumerate(ideal.labels)
    }
