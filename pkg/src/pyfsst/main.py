#!/usr/bin/env python3

from zenlib.util import get_kwargs

from pyfsst import PyFSST
from pyfsst.config import COMMANDS, SIGNALS, Method, RunConfig
from pyfsst.errors import PyFSSTError, UsageError


def main():
    arguments = [
        {"flags": ["command"], "choices": COMMANDS, "help": "transform, reconstruct or evaluate"},
        {"flags": ["--signal"], "choices": SIGNALS, "help": "built-in synthetic signal"},
        {"flags": ["-i", "--input"], "help": "input signal CSV, (time, value) or (time, re, im)"},
        {"flags": ["--method"], "choices": [m.value for m in Method], "help": "time-frequency method"},
        {"flags": ["--methods"], "action": "store", "help": "comma separated methods to evaluate"},
        {"flags": ["--sigma"], "action": "store", "help": "window width in seconds, or 'auto'"},
        {"flags": ["--sigma-grid"], "action": "store", "help": "sigma grid, start:step:stop", "dest": "sigma_grid"},
        {"flags": ["--gamma-rel"], "action": "store", "help": "threshold relative to max|V|", "type": float},
        {"flags": ["--K"], "action": "store", "help": "number of ridges", "type": int, "dest": "K"},
        {"flags": ["--d"], "action": "store", "help": "reconstruction band halfwidth in bins", "type": int},
        {"flags": ["--d-sweep"], "action": "store", "help": "range of d to sweep, like 0..10", "dest": "d_sweep"},
        {"flags": ["--jump"], "action": "store", "help": "max ridge jump off its slope, in bins", "type": int},
        {"flags": ["--n-starts"], "action": "store", "help": "ridge start frames", "type": int, "dest": "n_starts"},
        {"flags": ["--snr"], "action": "store", "help": "add noise at this SNR in dB", "type": float},
        {"flags": ["--snr-levels"], "action": "store", "help": "comma separated SNR levels", "dest": "snr_levels"},
        {"flags": ["--seed"], "action": "store", "help": "noise and ridge seed", "type": int},
        {"flags": ["--seeds"], "action": "store", "help": "noise realizations per level", "type": int},
        {"flags": ["--n-fft"], "action": "store", "help": "FFT length, defaults to the signal length", "type": int},
        {"flags": ["--hop"], "action": "store", "help": "frame hop in samples", "type": int},
        {"flags": ["--fmax"], "action": "store", "help": "keep bins below this frequency (Hz)", "type": float},
        {"flags": ["--pad-pow2"], "action": "store_true", "help": "zero-pad to the next power of two"},
        {"flags": ["--complex"], "action": "store_true", "help": "write complex values", "dest": "complex_output"},
        {"flags": ["--csv"], "action": "store_true", "help": "also export the matrix as CSV"},
        {"flags": ["--renyi"], "action": "store_true", "help": "Renyi entropy curves"},
        {"flags": ["--energy"], "action": "store_true", "help": "normalized energy curves"},
        {"flags": ["--emd"], "action": "store_true", "help": "Earth mover's distance table"},
        {"flags": ["-o", "--output"], "help": "output directory"},
    ]

    kwargs = get_kwargs(package=__package__, description="PyFSST", arguments=arguments, drop_default=True)
    logger = kwargs["logger"]

    try:
        config = RunConfig.from_kwargs(kwargs)
        for path in PyFSST(config=config, logger=logger).run():
            print(path)
    except UsageError as e:
        logger.critical(e)
        exit(2)
    except (PyFSSTError, OSError) as e:
        logger.critical(e)
        exit(1)


if __name__ == "__main__":
    main()
