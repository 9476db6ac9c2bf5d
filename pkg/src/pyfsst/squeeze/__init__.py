from .squeeze import SqueezeConfig, reassign_spectrogram, squeeze

__all__ = ["SqueezeConfig", "squeeze", "reassign_spectrogram"]
