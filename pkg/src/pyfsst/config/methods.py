from enum import Enum


class Method(Enum):
    """
    Time-frequency methods.
    The value is the CLI name.
    """

    STFT = "stft"
    RM = "rm"
    FSST = "fsst"
    FSST2 = "fsst2"
    FSST2T = "fsst2t"  # time-derivative second order operator, comparison only
    FSST3 = "fsst3"
    FSST4 = "fsst4"

    @property
    def order(self) -> int:
        """IF estimation order, 0 for the plain STFT."""
        return {"stft": 0, "rm": 1, "fsst": 1, "fsst2": 2, "fsst2t": 2, "fsst3": 3, "fsst4": 4}[self.value]

    @property
    def squeezes(self) -> bool:
        return self.value.startswith("fsst")

    @property
    def stack_order(self) -> int:
        """Order of the window family to compute, reassignment needs V^{tg}."""
        return 2 if self is Method.RM else max(self.order, 1)

    @classmethod
    def from_str(cls, name: str) -> "Method":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError("Unknown method '%s', expected one of: %s" % (name, ", ".join(m.value for m in cls)))
