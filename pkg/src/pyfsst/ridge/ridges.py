from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from pyfsst.errors import LengthMismatchError
from pyfsst.signal import IdealTF
from pyfsst.stft import TFMatrix


@dataclass(frozen=True, eq=False)
class RidgeSet:
    """
    K ridges, each defined on every frame, in decreasing energy order.
    bins has shape (K, n_frames); amplitudes holds the magnitude along each ridge.
    incomplete is set when fewer than the requested ridges could be found.
    """

    bins: np.ndarray = field(repr=False)
    energies: np.ndarray
    amplitudes: np.ndarray = field(repr=False)
    f0: float = 0.0
    df: float = 1.0
    t0: float = 0.0
    dt: float = 1.0
    requested: int = 1
    jump_penalty: int = 3
    clear_halfwidth: int = 2
    n_starts: int = 8
    seed: int = 0

    def __len__(self):
        return self.bins.shape[0]

    def __getitem__(self, k) -> np.ndarray:
        return self.bins[k]

    def __iter__(self):
        return iter(self.bins)

    @property
    def incomplete(self) -> bool:
        return len(self) < self.requested

    @property
    def n_frames(self) -> int:
        return self.bins.shape[1]

    @property
    def frame_times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n_frames)

    def freqs(self, k: int | None = None) -> np.ndarray:
        """Ridge frequencies in Hz, all ridges when k is None."""
        bins = self.bins if k is None else self.bins[k]
        return self.f0 + self.df * bins

    def pairs(self) -> set:
        """(frame, bin) pairs covered by the ridges."""
        return {(t, int(b)) for ridge in self.bins for t, b in enumerate(ridge)}


SLOPE_FRAMES = 4


def _window_argmax(row: np.ndarray, center: int, jump: int) -> int:
    """Best bin within center +- jump, staying on the center on ties."""
    lo, hi = max(center - jump, 0), min(center + jump + 1, row.size)
    window = row[lo:hi]
    best = int(np.argmax(window))
    return center if window[center - lo] == window[best] else lo + best


def _extrapolate(recent: np.ndarray, n_bins: int) -> int:
    """Next bin along the mean step of the recent path points, oldest first."""
    step = int(np.rint((recent[-1] - recent[0]) / (recent.size - 1))) if recent.size > 1 else 0
    return int(np.clip(recent[-1] + step, 0, n_bins - 1))


def _grow(work: np.ndarray, start: int, jump: int) -> np.ndarray:
    """
    Follows the local maxima forward and backward from the strongest bin of the start frame.
    Each frame is searched around the bin extrapolated from the last SLOPE_FRAMES steps,
    so ridges steeper than jump bins per frame are still followed.
    """
    n_frames, n_bins = work.shape
    path = np.empty(n_frames, dtype=np.int64)
    path[start] = int(np.argmax(work[start]))
    for t in range(start + 1, n_frames):
        recent = path[max(start, t - 1 - SLOPE_FRAMES) : t]
        path[t] = _window_argmax(work[t], _extrapolate(recent, n_bins), jump)
    for t in range(start - 1, -1, -1):
        recent = path[t + 1 : min(start, t + 1 + SLOPE_FRAMES) + 1][::-1]
        path[t] = _window_argmax(work[t], _extrapolate(recent, n_bins), jump)
    return path


def extract_ridges(
    mag,
    K: int,
    jump_penalty: int = 3,
    clear_halfwidth: int = 2,
    n_starts: int = 8,
    seed: int = 0,
    *args,
    **kwargs,
) -> RidgeSet:
    """
    Greedy ridge extraction.
    For each ridge, paths are grown from n_starts random frames, moving at most jump_penalty bins
    per frame away from the extrapolated recent slope, and the path with the largest sum of
    squared magnitudes is kept.
    A band of +- clear_halfwidth bins around it is then cleared before the next ridge.
    """
    if K < 1:
        raise ValueError("At least one ridge must be requested, got: %s" % K)
    axes = {}
    if isinstance(mag, TFMatrix):
        axes = dict(f0=mag.f0, df=mag.df, t0=mag.t0, dt=mag.dt)
        mag = mag.magnitude()
    mag = np.asarray(mag, dtype=float)
    if np.any(mag < 0):
        raise ValueError("Ridge extraction needs a nonnegative magnitude")

    work = mag.copy()
    n_frames, n_bins = work.shape
    rng = np.random.default_rng(seed)
    bin_index = np.arange(n_bins)
    ridges, energies = [], []
    for _ in range(K):
        starts = rng.choice(n_frames, size=min(n_starts, n_frames), replace=False)
        best_path, best_score = None, 0.0
        for start in starts:
            path = _grow(work, int(start), jump_penalty)
            score = float(np.sum(work[np.arange(n_frames), path] ** 2))
            if score > best_score:
                best_path, best_score = path, score
        if best_path is None:
            break
        ridges.append(best_path)
        energies.append(best_score)
        work[np.abs(bin_index[None, :] - best_path[:, None]) <= clear_halfwidth] = 0

    order = np.argsort(energies, kind="stable")[::-1]
    bins = np.array(ridges, dtype=np.int64).reshape(-1, n_frames)[order]
    logger = kwargs.get("logger")
    if len(ridges) < K and logger:
        logger.warning("Found %d of %d requested ridges" % (len(ridges), K))
    elif logger:
        logger.debug("Extracted %d ridges, energies: %s" % (len(ridges), np.asarray(energies)[order]))

    return RidgeSet(
        bins=bins,
        energies=np.asarray(energies, dtype=float)[order],
        amplitudes=mag[np.arange(n_frames)[None, :], bins],
        requested=K,
        jump_penalty=jump_penalty,
        clear_halfwidth=clear_halfwidth,
        n_starts=n_starts,
        seed=seed,
        **axes,
    )


def match_ridges(ridge_set: RidgeSet, ideal: IdealTF) -> np.ndarray:
    """
    Assigns ridges to the modes of an ideal representation by minimal mean IF distance.
    Returns, per mode, the matched ridge index or -1.
    """
    if ideal.inst_freqs.shape[1] != ridge_set.n_frames:
        raise LengthMismatchError(
            "Ideal tracks have %d samples, ridges %d frames" % (ideal.inst_freqs.shape[1], ridge_set.n_frames)
        )
    cost = np.mean(np.abs(ridge_set.freqs()[:, None, :] - ideal.inst_freqs[None, :, :]), axis=-1)
    ridge_idx, mode_idx = linear_sum_assignment(cost)
    matched = np.full(ideal.n_modes, -1, dtype=np.int64)
    matched[mode_idx] = ridge_idx
    return matched


def ridge_rms_error(ridge_freqs, inst_freq, trim: int = 0, mask=None) -> float:
    """RMS distance in Hz between a ridge and a known IF track, ignoring trim frames at both ends."""
    ridge_freqs, inst_freq = np.asarray(ridge_freqs, dtype=float), np.asarray(inst_freq, dtype=float)
    if ridge_freqs.ndim != 1 or ridge_freqs.shape != inst_freq.shape:
        raise LengthMismatchError("Ridge and IF track shapes differ: %s != %s" % (ridge_freqs.shape, inst_freq.shape))
    error = ridge_freqs - inst_freq
    keep = np.ones(error.size, dtype=bool) if mask is None else np.asarray(mask, dtype=bool).copy()
    if trim:
        keep[:trim] = keep[-trim:] = False
    return float(np.sqrt(np.mean(error[keep] ** 2)))
