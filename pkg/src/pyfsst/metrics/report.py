from dataclasses import dataclass, field

import numpy as np


@dataclass
class EvalReport:
    """Evaluation results of one method on one signal."""

    method: str = ""
    renyi_bits: float = np.nan
    sigma_opt: float = np.nan
    normalized_energy: np.ndarray = field(default_factory=lambda: np.empty(0), repr=False)
    emd: dict = field(default_factory=dict)
    snr_out_db: dict = field(default_factory=dict)

    def __post_init__(self):
        curve = np.asarray(self.normalized_energy, dtype=float)
        if curve.size and (np.any(np.diff(curve) < 0) or curve[0] < 0 or curve[-1] > 1 + 1e-12):
            raise ValueError("Normalized energy must be nondecreasing in [0, 1]")
        if any(value < 0 for value in self.emd.values()):
            raise ValueError("EMD values must be nonnegative")
        self.normalized_energy = curve

    def __str__(self):
        parts = [self.method or "report"]
        if not np.isnan(self.sigma_opt):
            parts.append("sigma=%s" % self.sigma_opt)
        if not np.isnan(self.renyi_bits):
            parts.append("H=%.3f bits" % self.renyi_bits)
        parts += ["EMD[%s]=%.3f Hz" % item for item in self.emd.items()]
        parts += ["SNR[%s]=%.2f dB" % item for item in self.snr_out_db.items()]
        return " ".join(parts)
