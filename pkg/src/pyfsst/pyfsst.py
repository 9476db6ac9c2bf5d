from dataclasses import dataclass, field
from math import ceil
from pathlib import Path

import numpy as np
from zenlib.logging import loggify
from zenlib.util import colorize

from pyfsst.common import frame_blocks
from pyfsst.config import Method, RunConfig
from pyfsst.errors import UsageError
from pyfsst.metrics import (
    EvalReport,
    emd_per_mode,
    normalized_energy_axis,
    normalized_energy_curve,
    optimize_sigma,
)
from pyfsst.operators import IFEstimateField, build_stack, estimate
from pyfsst.reader import CSVSignalReader
from pyfsst.ridge import RidgeSet, extract_ridges, match_ridges, reconstruct_mode
from pyfsst.signal import (
    IdealTF,
    SampledSignal,
    add_noise,
    analytic,
    make_benchmark_signal,
    output_snr,
    surrogate_chirp,
)
from pyfsst.squeeze import SqueezeConfig, reassign_spectrogram, squeeze
from pyfsst.stft import TFMatrix, build_window_family, default_gamma, stft
from pyfsst.writer import CSVWriter, TFRWriter


@dataclass
class SignalBundle:
    """An input signal with whatever ground truth is known about it."""

    signal: SampledSignal
    references: dict = field(default_factory=dict)
    ideal: IdealTF | None = None
    real_source: bool = False


@dataclass
class TransformResult:
    tfr: TFMatrix
    stft_g: TFMatrix
    ife: IFEstimateField | None
    gamma: float
    method: Method

    @property
    def diagnostics(self) -> dict:
        """Dropped estimate count and the number of bins per applied order."""
        out = {"dropped": self.tfr.dropped}
        if self.ife is not None:
            out.update({"order_%d" % order: count for order, count in self.ife.order_histogram().items()})
        return out


@loggify
class PyFSST:
    """Runs the synchrosqueezing pipeline and the evaluation suite."""

    def __init__(self, config: RunConfig | None = None, *args, **kwargs):
        self.config = config or RunConfig(signal="benchmark")

    def load_signal(self) -> SignalBundle:
        """Builds or reads the input signal, converting real inputs to analytic form."""
        config = self.config
        if config.signal == "benchmark":
            f1, f2, f, ideal = make_benchmark_signal(logger=self.logger)
            bundle = SignalBundle(f, {"f1": f1, "f2": f2, "f": f}, ideal)
        elif config.signal == "surrogate":
            sig, ideal = surrogate_chirp(logger=self.logger)
            bundle = SignalBundle(sig, {"surrogate": sig}, ideal)
        elif config.input:
            sig = CSVSignalReader(config.input, logger=self.logger).signal
            bundle = SignalBundle(sig, {"input": sig})
            if sig.is_real:
                self.logger.info("Converting real input to its analytic signal")
                bundle = SignalBundle(analytic(sig), {"input": sig}, real_source=True)
        else:
            raise UsageError("No input signal configured")

        if config.pad_pow2:
            bundle = self.pad_pow2(bundle)
        return bundle

    def pad_pow2(self, bundle: SignalBundle) -> SignalBundle:
        padded = bundle.signal.pad_pow2()
        self.logger.info("Zero-padded the signal from %d to %d samples" % (len(bundle.signal), len(padded)))
        return SignalBundle(
            padded,
            {label: ref.zero_padded(len(padded)) for label, ref in bundle.references.items()},
            bundle.ideal.zero_padded(len(padded), padded.sample_rate_hz) if bundle.ideal else None,
            bundle.real_source,
        )

    def n_bins(self, sig: SampledSignal) -> int | None:
        """Bins below --fmax, None for the full [0, fs / 2) band."""
        if self.config.fmax is None:
            return None
        n_fft = self.config.n_fft or len(sig)
        return max(1, min(ceil(self.config.fmax * n_fft / sig.sample_rate_hz), n_fft // 2))

    def sigma_curve(self, sig: SampledSignal) -> tuple[float, np.ndarray]:
        """Renyi entropy over the sigma grid, on the configured STFT grid."""
        return optimize_sigma(
            sig,
            self.config.sigma_grid,
            hop=self.config.hop,
            n_fft=self.config.n_fft,
            n_bins=self.n_bins(sig),
            logger=self.logger,
        )

    def resolve_sigma(self, sig: SampledSignal) -> float:
        if self.config.sigma != "auto":
            return self.config.sigma
        return self.sigma_curve(sig)[0]

    def transform(self, sig: SampledSignal, method: Method, sigma: float) -> TransformResult:
        """
        Computes V^g, then the IF estimate block by block over frames,
        then squeezes or reassigns once on the whole grid.
        """
        config = self.config
        grid = {"hop": config.hop, "n_fft": config.n_fft, "n_bins": self.n_bins(sig)}
        family = build_window_family(
            sigma,
            sig.sample_rate_hz,
            method.stack_order,
            n_samples=len(sig),
            second_derivative=method is Method.FSST2T,
            logger=self.logger,
        )
        stft_g = stft(sig, family, **grid, logger=self.logger)
        gamma = default_gamma(stft_g, config.gamma_rel)
        self.logger.debug("[%s] sigma=%s s, gamma=%.3e, grid: %s" % (method.value, sigma, gamma, stft_g.describe()))
        if method is Method.STFT:
            return TransformResult(stft_g, stft_g, None, gamma, method)

        blocks = []
        for frames in frame_blocks(stft_g.n_frames):
            stack = build_stack(sig, family, frames=frames, **grid)
            blocks.append(estimate(stack, method.order, gamma, t_variant=method is Method.FSST2T, logger=self.logger))
        ife = IFEstimateField.concatenate(blocks)

        if method.squeezes:
            tfr = squeeze(stft_g, ife, SqueezeConfig(gamma, order=method.order), logger=self.logger)
        else:
            tfr = reassign_spectrogram(stft_g, ife, logger=self.logger)
        result = TransformResult(tfr, stft_g, ife, gamma, method)
        self.logger.info("[%s] Transformed %d samples, diagnostics: %s" % (method.value, len(sig), result.diagnostics))
        return result

    def extract_ridges(self, result: TransformResult, K: int) -> RidgeSet:
        return extract_ridges(
            result.tfr,
            K,
            jump_penalty=self.config.jump,
            clear_halfwidth=self.config.clear_halfwidth,
            n_starts=self.config.n_starts,
            seed=self.config.seed,
            logger=self.logger,
        )

    def reconstruct(self, result: TransformResult, ridges: RidgeSet, d: int, real_source: bool = False) -> list:
        """One mode estimate per ridge."""
        return [reconstruct_mode(result.tfr, ridge, d, real_source, logger=self.logger) for ridge in ridges]

    def on_frames(self, bundle: SignalBundle) -> tuple[dict, IdealTF | None]:
        """References and ideal tracks sampled on the STFT frames."""
        hop = self.config.hop
        references = {label: ref.decimated(hop) for label, ref in bundle.references.items()}
        ideal = bundle.ideal.decimated(hop) if bundle.ideal is not None else None
        return references, ideal

    def mode_snrs(self, bundle: SignalBundle, ridges: RidgeSet, modes: list) -> dict:
        """
        Output SNR per known mode, matching ridges to modes through the ideal IF tracks.
        The summed estimate is compared with the full signal when it is a known reference.
        """
        snrs = {}
        references, ideal = self.on_frames(bundle)
        if ideal is not None and ideal.n_modes <= len(modes):
            matched = match_ridges(ridges, ideal)
            for label, ridge_idx in zip(ideal.labels, matched):
                if label in references and ridge_idx >= 0:
                    snrs[label] = output_snr(references[label], modes[ridge_idx])
        total = sum(modes[1:], modes[0]) if modes else None
        for label in ("f", "input"):
            if label in references and total is not None:
                snrs[label] = output_snr(references[label], total)
        return snrs

    def d_sweep(self, bundle: SignalBundle, result: TransformResult, ridges: RidgeSet, d_values) -> dict:
        """Output SNR per mode for each band halfwidth d."""
        curves = {}
        for d in d_values:
            modes = self.reconstruct(result, ridges, d, bundle.real_source)
            for label, snr in self.mode_snrs(bundle, ridges, modes).items():
                curves.setdefault(label, []).append(snr)
        return curves

    def evaluate(self, bundle: SignalBundle, method: Method, sigma: float, snr_db: float, seed: int) -> EvalReport:
        """EMD per mode of one noisy realization."""
        noisy = add_noise(bundle.signal, snr_db, seed, logger=self.logger)
        result = self.transform(noisy, method, sigma)
        return EvalReport(
            method=method.value,
            sigma_opt=sigma,
            emd=emd_per_mode(result.tfr, self.on_frames(bundle)[1], logger=self.logger),
        )

    # Commands

    def _write_csv(self, columns: dict, name: str) -> Path:
        return CSVWriter(columns, self.config.output / name, logger=self.logger).write()

    def _prepare(self):
        bundle = self.load_signal()
        if self.config.snr is not None:
            noisy = add_noise(bundle.signal, self.config.snr, self.config.seed, logger=self.logger)
            bundle = SignalBundle(noisy, bundle.references, bundle.ideal, bundle.real_source)
        return bundle, self.resolve_sigma(bundle.signal)

    def cmd_transform(self) -> list[Path]:
        """Writes the TF matrix, an optional CSV export and the diagnostics."""
        config = self.config
        bundle, sigma = self._prepare()
        result = self.transform(bundle.signal, config.method, sigma)

        name = config.method.value
        written = [
            TFRWriter(
                result.tfr, config.output / ("%s.tfr" % name), complex_values=config.complex_output, logger=self.logger
            ).write()
        ]
        if config.csv:
            path = config.output / ("%s.csv" % name)
            written.append(CSVWriter.from_tfr(result.tfr, path, logger=self.logger).write())
        diagnostics = {"sigma": sigma, "gamma": result.gamma, **result.diagnostics}
        written.append(
            self._write_csv({key: [value] for key, value in diagnostics.items()}, "%s.diagnostics.csv" % name)
        )
        return written

    def cmd_reconstruct(self) -> list[Path]:
        """Transform, ridges, modes; then the SNR report and the optional d sweep."""
        config = self.config
        bundle, sigma = self._prepare()
        result = self.transform(bundle.signal, config.method, sigma)
        ridges = self.extract_ridges(result, config.K)
        written = [
            self._write_csv(
                {"time": ridges.frame_times, **{"ridge_%d_hz" % (k + 1): ridges.freqs(k) for k in range(len(ridges))}},
                "ridges.csv",
            )
        ]

        if config.d is not None:
            modes = self.reconstruct(result, ridges, config.d, bundle.real_source)
            for k, mode in enumerate(modes):
                path = config.output / ("mode_%d.csv" % (k + 1))
                written.append(CSVWriter.from_signal(mode, path, logger=self.logger).write())
            snrs = self.mode_snrs(bundle, ridges, modes)
            report = EvalReport(method=config.method.value, sigma_opt=sigma, snr_out_db=snrs)
            self.logger.info(colorize(str(report), "green"))
            if report.snr_out_db:
                columns = {"mode": list(snrs), "snr_db": list(snrs.values())}
                written.append(self._write_csv(columns, "report.csv"))

        if config.d_sweep is not None:
            curves = self.d_sweep(bundle, result, ridges, config.d_sweep)
            columns = {"d": list(config.d_sweep), **{"snr_%s" % label: snr for label, snr in curves.items()}}
            written.append(self._write_csv(columns, "d_sweep.csv"))
        return written

    def cmd_evaluate(self) -> list[Path]:
        """Renyi curves per noise level, normalized energy curves and EMD tables."""
        config = self.config
        bundle = self.load_signal()
        written = []

        if config.renyi:
            columns = {"sigma": config.sigma_grid}
            for snr_db in config.snr_levels:
                noisy = add_noise(bundle.signal, snr_db, config.seed, logger=self.logger)
                sigma_opt, curve = self.sigma_curve(noisy)
                self.logger.info("[SNR %s dB] Optimal sigma: %s" % (snr_db, sigma_opt))
                columns["renyi_snr_%s" % snr_db] = curve
            written.append(self._write_csv(columns, "renyi.csv"))

        if config.energy or config.emd:
            sigma = self.resolve_sigma(bundle.signal)

        if config.energy:
            n_samples = len(bundle.signal)
            references = {k: v for k, v in bundle.references.items() if k != "f"} or {"f": bundle.signal}
            columns = {"fraction": normalized_energy_axis(n_samples, n_samples)}
            for method in config.methods:
                for label, ref in references.items():
                    if bundle.real_source:
                        ref = analytic(ref)
                    tfr = self.transform(ref, method, sigma).tfr
                    columns["%s_%s" % (method.value, label)] = normalized_energy_curve(tfr, n_samples)
            written.append(self._write_csv(columns, "energy.csv"))

        if config.emd:
            rows = {"method": [], "snr_db": []}
            for method in config.methods:
                for snr_db in config.snr_levels:
                    reports = [
                        self.evaluate(bundle, method, sigma, snr_db, config.seed + i) for i in range(config.seeds)
                    ]
                    rows["method"].append(method.value)
                    rows["snr_db"].append(snr_db)
                    for label in bundle.ideal.labels:
                        rows.setdefault("emd_%s" % label, []).append(np.mean([r.emd[label] for r in reports]))
            written.append(self._write_csv(rows, "emd.csv"))
        return written

    def run(self) -> list[Path]:
        return getattr(self, "cmd_%s" % self.config.command)()
