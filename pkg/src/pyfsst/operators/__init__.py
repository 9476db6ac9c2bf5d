from .estimates import (
    IFEstimateField,
    back_substitute,
    estimate,
    first_order,
    modulation_chain,
    order_n,
    second_order_eta,
    second_order_t,
)
from .jet import EtaJet
from .rational import RationalField, degenerate, symbolic_eta_derivative
from .stack import StftStack, build_stack

__all__ = [
    "StftStack",
    "build_stack",
    "EtaJet",
    "RationalField",
    "degenerate",
    "symbolic_eta_derivative",
    "IFEstimateField",
    "first_order",
    "second_order_eta",
    "second_order_t",
    "order_n",
    "modulation_chain",
    "back_substitute",
    "estimate",
]
