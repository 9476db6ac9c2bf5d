from .reconstruct import band_mask, reconstruct_mode
from .ridges import RidgeSet, extract_ridges, match_ridges, ridge_rms_error

__all__ = ["RidgeSet", "extract_ridges", "match_ridges", "ridge_rms_error", "reconstruct_mode", "band_mask"]
