from .engine import default_gamma, frame_matrix, invert, inverse_column, spectrogram, stft, stft_fields
from .tfmatrix import TFKind, TFMatrix, WindowRef
from .window import Deriv, WindowFamily, build_window_family, gaussian, required_windows

__all__ = [
    "Deriv",
    "WindowFamily",
    "build_window_family",
    "gaussian",
    "required_windows",
    "TFKind",
    "TFMatrix",
    "WindowRef",
    "stft",
    "stft_fields",
    "frame_matrix",
    "inverse_column",
    "invert",
    "spectrogram",
    "default_gamma",
]
