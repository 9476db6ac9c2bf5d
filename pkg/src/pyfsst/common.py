"""Common constants and helpers shared by the transform modules."""

from os import environ

import numpy as np

HALF_SUPPORT_MULT = 4.0  # Gaussian tail at 4 sigma is below 1e-21 of the peak
EPS_REL = 1e-4  # Relative per-frame degeneracy threshold for operator denominators
GAMMA_REL = 1e-3  # Default threshold on |V^g|, relative to its maximum
BLOCK_FRAMES = 128  # Frames per block when building STFT stacks
DEFAULT_SIGMA_GRID = tuple(round(0.01 * i, 2) for i in range(1, 21))


def fft_workers():
    """Number of workers passed to scipy.fft, capped by SQZ_THREADS."""
    if threads := environ.get("SQZ_THREADS"):
        return max(int(threads), 1)
    return None


def frame_blocks(n_frames: int, block: int = BLOCK_FRAMES):
    """Yields slices covering range(n_frames) in blocks."""
    block = max(int(block), 1)
    for start in range(0, n_frames, block):
        yield slice(start, min(start + block, n_frames))


def frozen(array, dtype=None) -> np.ndarray:
    """Returns a read-only copy of the array."""
    out = np.array(array, dtype=dtype, copy=True)
    out.flags.writeable = False
    return out


def next_pow2(n: int) -> int:
    """Smallest power of two >= n."""
    return 1 << max(int(n) - 1, 0).bit_length()
