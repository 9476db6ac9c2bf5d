import warnings
from dataclasses import dataclass

import numpy as np

from pyfsst.common import EPS_REL

from .jet import EtaJet


def degenerate(denominator: np.ndarray, valid: np.ndarray, eps_rel: float = EPS_REL) -> np.ndarray:
    """
    Flags bins where |D| < eps_rel * median(|D|) over the valid bins of the same frame.
    Non-finite denominators are degenerate.
    """
    magnitude = np.abs(denominator)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        reference = np.nanmedian(np.where(valid & np.isfinite(magnitude), magnitude, np.nan), axis=-1, keepdims=True)
    with np.errstate(invalid="ignore"):
        return ~np.isfinite(magnitude) | (magnitude < eps_rel * reference) | (magnitude == 0)


@dataclass(frozen=True, eq=False)
class RationalField:
    """
    numerator / denominator over the TF plane, both held as eta jets.
    provenance names the expression for logs and errors.
    """

    numerator: EtaJet
    denominator: EtaJet
    provenance: str = ""

    @classmethod
    def of(cls, jet: EtaJet, provenance: str = "") -> "RationalField":
        return cls(jet, EtaJet.constant(1.0, jet.order, jet.shape), provenance)

    @classmethod
    def ratio(cls, stack, numerator_key, denominator_key, order: int) -> "RationalField":
        """V^{numerator} / V^{denominator} with jets up to the given order."""
        numerator = EtaJet.from_stack(stack, *numerator_key, order)
        denominator = EtaJet.from_stack(stack, *denominator_key, order)
        return cls(numerator, denominator, "V%s/V%s" % (tuple(numerator_key), tuple(denominator_key)))

    @property
    def order(self) -> int:
        return min(self.numerator.order, self.denominator.order)

    def values(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.numerator.value / self.denominator.value

    def collapsed(self) -> "RationalField":
        """Divides the jets out so that the denominator is one."""
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return RationalField.of(self.numerator / self.denominator, self.provenance)

    def guarded(self, valid: np.ndarray, eps_rel: float = EPS_REL):
        """Returns (values, ok) with ok false where the denominator is degenerate."""
        ok = valid & ~degenerate(self.denominator.value, valid, eps_rel)
        values = self.values()
        ok &= np.isfinite(values)
        return np.where(ok, values, np.nan), ok

    def __truediv__(self, other: "RationalField") -> "RationalField":
        return RationalField(
            self.numerator * other.denominator,
            self.denominator * other.numerator,
            "(%s)/(%s)" % (self.provenance, other.provenance),
        )

    def __repr__(self):
        return "RationalField(%s, order=%d)" % (self.provenance, self.order)


def symbolic_eta_derivative(expr: RationalField, *args, **kwargs) -> RationalField:
    """
    d/deta of a rational field by the quotient rule on exact eta jets.
    Raises MissingFieldError when the jets hold no higher weight.
    """
    numerator, denominator = expr.numerator, expr.denominator
    with np.errstate(over="ignore", invalid="ignore"):
        out = RationalField(
            numerator.deriv() * denominator - numerator * denominator.deriv(),
            denominator * denominator,
            "d(%s)" % expr.provenance,
        )
    if logger := kwargs.get("logger"):
        logger.debug("Differentiated %s, jet order %d -> %d" % (expr.provenance, expr.order, out.order))
    return out
