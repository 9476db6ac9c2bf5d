from .methods import Method
from .parsers import parse_float_list, parse_grid, parse_range
from .runconfig import COMMANDS, SIGNALS, RunConfig

__all__ = ["Method", "RunConfig", "COMMANDS", "SIGNALS", "parse_float_list", "parse_grid", "parse_range"]
