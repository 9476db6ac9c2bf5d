"""Parsers for the range, grid and list arguments of the CLI."""

import numpy as np

from pyfsst.errors import UsageError


def parse_float_list(text: str) -> tuple[float, ...]:
    """'inf,5,0,-5' -> (inf, 5.0, 0.0, -5.0)"""
    try:
        values = tuple(float(item) for item in str(text).split(",") if item.strip())
    except ValueError:
        raise UsageError("Expected a comma separated list of numbers, got: %s" % text)
    if not values:
        raise UsageError("Empty list: '%s'" % text)
    return values


def parse_range(text: str) -> range:
    """'0..10' -> range(0, 11), a single integer is a one element range."""
    try:
        if ".." in str(text):
            start, stop = (int(part) for part in str(text).split(".."))
        else:
            start = stop = int(text)
    except ValueError:
        raise UsageError("Expected an integer range like 0..10, got: %s" % text)
    if stop < start or start < 0:
        raise UsageError("Invalid range: %s" % text)
    return range(start, stop + 1)


def parse_grid(text: str) -> tuple[float, ...]:
    """'0.01:0.01:0.2' (start:step:stop, inclusive) or a comma separated list."""
    if ":" not in str(text):
        return tuple(sorted(parse_float_list(text)))
    try:
        start, step, stop = (float(part) for part in str(text).split(":"))
    except ValueError:
        raise UsageError("Expected a grid like 0.01:0.01:0.2, got: %s" % text)
    if not step > 0 or stop < start:
        raise UsageError("Invalid grid: %s" % text)
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return tuple(round(start + i * step, 12) for i in range(count))
