from dataclasses import dataclass

import numpy as np

from pyfsst.errors import InvalidOrderError, KindMismatchError, MissingFieldError
from pyfsst.operators import IFEstimateField
from pyfsst.stft import TFKind, TFMatrix


@dataclass(frozen=True)
class SqueezeConfig:
    """
    gamma: threshold on |V^g|, bins at or below it are not moved
    n_out_bins: output bins over the input band, None keeps the input grid
    order: IF estimation order
    """

    gamma: float = 0.0
    n_out_bins: int | None = None
    order: int = 1

    def __post_init__(self):
        if not self.gamma >= 0:
            raise ValueError("Squeeze threshold must be nonnegative: %s" % self.gamma)
        if self.n_out_bins is not None and self.n_out_bins < 1:
            raise ValueError("Number of output bins must be at least 1: %s" % self.n_out_bins)
        if self.order not in range(1, 5):
            raise InvalidOrderError("Squeeze order must be in 1..4, got: %s" % self.order)

    def output_grid(self, tfr: TFMatrix) -> tuple[float, float, int]:
        """Returns (f0, df, n_bins) of the squeezed frequency axis."""
        if self.n_out_bins is None:
            return tfr.f0, tfr.df, tfr.n_bins
        return tfr.f0, tfr.df * tfr.n_bins / self.n_out_bins, self.n_out_bins


def _scatter(frame_idx, bin_idx, weights, n_frames: int, n_bins: int) -> np.ndarray:
    """Sums weights into a (n_frames, n_bins) grid, complex weights are split into real and imaginary parts."""
    flat = frame_idx * n_bins + bin_idx
    size = n_frames * n_bins
    out = np.bincount(flat, weights=weights.real, minlength=size)
    if np.iscomplexobj(weights):
        out = out + 1j * np.bincount(flat, weights=weights.imag, minlength=size)
    return out.reshape(n_frames, n_bins)


def squeeze(stft_g: TFMatrix, ife: IFEstimateField, cfg: SqueezeConfig, *args, **kwargs) -> TFMatrix:
    """
    Moves every coefficient with |V| > gamma and a valid estimate to the output bin nearest its IF.
    Values are densities: sum over output bins times their width equals d_eta / g*(0) times the moved sum.
    Estimates outside the output band are dropped and counted.
    """
    if stft_g.kind != TFKind.STFT:
        raise KindMismatchError("Squeezing needs an STFT matrix, got: %s" % stft_g.kind.name)
    ife.check_axes(stft_g)
    f0, df, n_bins = cfg.output_grid(stft_g)

    V = stft_g.values
    moved = ife.valid & (np.abs(V) > cfg.gamma) & np.isfinite(ife.omega_hat)
    frames, bins = np.nonzero(moved)
    target = np.rint((ife.omega_hat[frames, bins] - f0) / df).astype(np.int64)
    in_band = (target >= 0) & (target < n_bins)
    dropped = int(np.count_nonzero(~in_band))

    scale = stft_g.df / (np.conj(stft_g.window_ref.g0) * df)
    values = scale * _scatter(frames[in_band], target[in_band], V[frames, bins][in_band], stft_g.n_frames, n_bins)

    if logger := kwargs.get("logger"):
        logger.debug("Squeezed %d coefficients onto %d bins" % (in_band.sum(), n_bins))
        if dropped:
            logger.warning("Dropped %d estimates outside [%.2f, %.2f) Hz" % (dropped, f0, f0 + n_bins * df))

    return TFMatrix(
        values,
        t0=stft_g.t0,
        dt=stft_g.dt,
        f0=f0,
        df=df,
        kind=TFKind.SQUEEZED,
        sample_rate_hz=stft_g.sample_rate_hz,
        window_ref=stft_g.window_ref,
        dropped=dropped,
    )


def reassign_spectrogram(stft_g: TFMatrix, ife: IFEstimateField, *args, **kwargs) -> TFMatrix:
    """
    Moves the spectrogram mass |V|^2 of each valid bin to the cell nearest (tau_hat, omega_hat).
    Mass landing outside the grid is dropped and counted.
    """
    if ife.tau_hat is None:
        raise MissingFieldError("Reassignment needs a group delay estimate, compute the stack with V^{tg}")
    ife.check_axes(stft_g)

    moved = ife.valid & np.isfinite(ife.omega_hat) & np.isfinite(ife.tau_hat)
    frames, bins = np.nonzero(moved)
    target_frame = np.rint((ife.tau_hat[frames, bins] - stft_g.t0) / stft_g.dt).astype(np.int64)
    target_bin = np.rint((ife.omega_hat[frames, bins] - stft_g.f0) / stft_g.df).astype(np.int64)
    inside = (
        (target_frame >= 0) & (target_frame < stft_g.n_frames) & (target_bin >= 0) & (target_bin < stft_g.n_bins)
    )
    dropped = int(np.count_nonzero(~inside))

    mass = np.abs(stft_g.values[frames, bins]) ** 2
    values = _scatter(target_frame[inside], target_bin[inside], mass[inside], stft_g.n_frames, stft_g.n_bins)

    if logger := kwargs.get("logger"):
        logger.debug("Reassigned %d spectrogram cells" % inside.sum())
        if dropped:
            logger.warning("Dropped %d cells reassigned outside the grid" % dropped)
    return stft_g.with_values(values, kind=TFKind.REASSIGNED, dropped=dropped)
