"""
Instantaneous frequency estimates from STFT stacks.

Every estimate is Re{omega~ - sum_k q_k x_k} for some set of modulation operators q_k,
evaluated in closed form from the stack fields. Bins where a denominator degenerates
fall back to the next lower order.
"""

from dataclasses import dataclass, field

import numpy as np

from pyfsst.common import EPS_REL
from pyfsst.errors import GridMismatchError, InvalidOrderError
from pyfsst.stft import Deriv, TFMatrix

from .jet import EtaJet
from .rational import RationalField, degenerate, symbolic_eta_derivative
from .stack import StftStack

TWO_PI_I = 2j * np.pi


@dataclass(frozen=True, eq=False)
class IFEstimateField:
    """
    Per-bin IF estimate in Hz.
    order_used is 0 where invalid, otherwise the order actually applied after fallbacks.
    tau_hat is the group delay estimate (seconds) when the stack holds V^{tg}.
    q maps k to the complex modulation operator q^[k,N] at the requested order.
    """

    omega_hat: np.ndarray = field(repr=False)
    valid: np.ndarray = field(repr=False)
    order_used: np.ndarray = field(repr=False)
    order: int
    t0: float
    dt: float
    f0: float
    df: float
    tau_hat: np.ndarray | None = field(default=None, repr=False)
    q: dict = field(default_factory=dict, repr=False)

    @property
    def shape(self):
        return self.omega_hat.shape

    def same_axes(self, tfr: TFMatrix) -> bool:
        return self.shape == tfr.shape and (self.t0, self.dt, self.f0, self.df) == (tfr.t0, tfr.dt, tfr.f0, tfr.df)

    def check_axes(self, tfr: TFMatrix):
        if not self.same_axes(tfr):
            raise GridMismatchError("IF estimate grid %s does not match: %s" % (self.shape, tfr.describe()))

    def order_histogram(self) -> dict:
        """Number of bins per applied order, 0 counting invalid bins."""
        counts = np.bincount(self.order_used.ravel(), minlength=self.order + 1)
        return {order: int(count) for order, count in enumerate(counts)}

    @classmethod
    def concatenate(cls, blocks: list["IFEstimateField"]) -> "IFEstimateField":
        """Joins consecutive frame blocks."""
        first = blocks[0]
        tau_hat = None if first.tau_hat is None else np.concatenate([b.tau_hat for b in blocks])
        return cls(
            omega_hat=np.concatenate([b.omega_hat for b in blocks]),
            valid=np.concatenate([b.valid for b in blocks]),
            order_used=np.concatenate([b.order_used for b in blocks]),
            order=first.order,
            t0=first.t0,
            dt=first.dt,
            f0=first.f0,
            df=first.df,
            tau_hat=tau_hat,
            q={k: np.concatenate([b.q[k] for b in blocks]) for k in first.q},
        )


def _complex_if(stack: StftStack, gamma: float):
    """Returns (V^g, valid, omega~) with valid = |V^g| > gamma."""
    V0 = stack.V(0)
    omega_c = stack.eta[None, :] - stack.V(0, Deriv.DG) / (TWO_PI_I * V0)
    return V0, (np.abs(V0) > gamma) & np.isfinite(omega_c), omega_c


def _tau_hat(stack: StftStack, V0, valid):
    if (1, Deriv.G) not in stack:
        return None
    return np.where(valid, stack.times[:, None] + (stack.V(1) / V0).real, np.nan)


def _assemble(stack: StftStack, order: int, levels: list, valid, tau_hat=None, q=None) -> IFEstimateField:
    """
    levels[n - 1] holds (complex estimate, ok) at order n, each ok a subset of the previous one.
    Picks the highest order that is ok at every bin.
    """
    order_used = np.zeros(stack.shape, dtype=np.int8)
    omega_hat = np.full(stack.shape, np.nan)
    for n, (estimate, ok) in enumerate(levels, start=1):
        order_used[ok] = n
        omega_hat[ok] = estimate.real[ok]
    ref = stack.reference
    return IFEstimateField(
        omega_hat=omega_hat,
        valid=valid,
        order_used=order_used,
        order=order,
        t0=ref.t0,
        dt=ref.dt,
        f0=ref.f0,
        df=ref.df,
        tau_hat=tau_hat,
        q=q or {},
    )


def first_order(stack: StftStack, gamma: float, *args, **kwargs) -> IFEstimateField:
    """Re{eta - V^{g'} / (i 2 pi V^g)} where |V^g| > gamma."""
    with np.errstate(divide="ignore", invalid="ignore"):
        V0, valid, omega_c = _complex_if(stack, gamma)
        tau_hat = _tau_hat(stack, V0, valid)

    if logger := kwargs.get("logger"):
        logger.debug("First order estimate valid on %d of %d bins" % (valid.sum(), valid.size))
    return _assemble(stack, 1, [(omega_c, valid)], valid, tau_hat)


def second_order_eta(stack: StftStack, gamma: float, eps_rel: float = EPS_REL, *args, **kwargs) -> IFEstimateField:
    """
    Second order estimate with the frequency modulation operator taken along eta:
    q = ((V^g)^2 + V^g V^{tg'} - V^{g'} V^{tg}) / (i 2 pi ((V^{tg})^2 - V^g V^{t^2 g}))
    """
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        V0, valid, omega_c = _complex_if(stack, gamma)
        V1, V2 = stack.V(1), stack.V(2)
        Vd, V1d = stack.V(0, Deriv.DG), stack.V(1, Deriv.DG)

        denominator = V1 * V1 - V0 * V2
        q = (V0 * V0 + V0 * V1d - Vd * V1) / (TWO_PI_I * denominator)
        omega_2 = omega_c - q * V1 / V0
        ok = valid & ~degenerate(denominator, valid, eps_rel) & np.isfinite(omega_2)
        tau_hat = _tau_hat(stack, V0, valid)

    if logger := kwargs.get("logger"):
        logger.debug("Second order (eta) estimate applied on %d of %d valid bins" % (ok.sum(), valid.sum()))
    return _assemble(stack, 2, [(omega_c, valid), (omega_2, ok)], valid, tau_hat, {2: np.where(ok, q, np.nan)})


def second_order_t(stack: StftStack, gamma: float, eps_rel: float = EPS_REL, *args, **kwargs) -> IFEstimateField:
    """
    Second order estimate with the modulation operator taken along time:
    q = (V^{g''} V^g - (V^{g'})^2) / (i 2 pi (V^{tg} V^{g'} - V^{tg'} V^g))
    Needs g'' in the stack.
    """
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        V0, valid, omega_c = _complex_if(stack, gamma)
        V1, Vd, V1d = stack.V(1), stack.V(0, Deriv.DG), stack.V(1, Deriv.DG)
        Vdd = stack.V(0, Deriv.DDG)

        denominator = V1 * Vd - V1d * V0
        q = (Vdd * V0 - Vd * Vd) / (TWO_PI_I * denominator)
        omega_2 = omega_c - q * V1 / V0
        ok = valid & ~degenerate(denominator, valid, eps_rel) & np.isfinite(omega_2)
        tau_hat = _tau_hat(stack, V0, valid)

    if logger := kwargs.get("logger"):
        logger.debug("Second order (t) estimate applied on %d of %d valid bins" % (ok.sum(), valid.sum()))
    return _assemble(stack, 2, [(omega_c, valid), (omega_2, ok)], valid, tau_hat, {2: np.where(ok, q, np.nan)})


def modulation_chain(stack: StftStack, N: int, *args, **kwargs):
    """
    Builds the triangular system of the order-N estimate.
    x_{k,1} = V^{t^(k-1) g} / V^g, y_1 = omega~, then for j = 2..N
    D_j = d/deta x_{j,j-1}, y_j = d/deta y_{j-1} / D_j, x_{k,j} = d/deta x_{k,j-1} / D_j.
    Returns (x, y, D) as nested dicts of RationalField.
    """
    jet_order = N - 1
    V0 = EtaJet.from_stack(stack, 0, Deriv.G, jet_order)
    omega_tilde = EtaJet.variable(stack.eta[None, :], jet_order, stack.shape) - EtaJet.from_stack(
        stack, 0, Deriv.DG, jet_order
    ) / V0 / TWO_PI_I

    x = {
        k: {1: RationalField(EtaJet.from_stack(stack, k - 1, Deriv.G, jet_order), V0, "x%d,1" % k)}
        for k in range(2, N + 1)
    }
    y = {1: RationalField.of(omega_tilde, "y1")}
    D = {}
    for j in range(2, N + 1):
        D[j] = symbolic_eta_derivative(x[j][j - 1], *args, **kwargs).collapsed()
        y[j] = (symbolic_eta_derivative(y[j - 1], *args, **kwargs) / D[j]).collapsed()
        for k in range(j + 1, N + 1):
            x[k][j] = (symbolic_eta_derivative(x[k][j - 1], *args, **kwargs) / D[j]).collapsed()
    return x, y, D


def back_substitute(x: dict, y: dict, N: int, zero_operators_above: int | None = None) -> dict:
    """q_N = y_N, q_j = y_j - sum_{k > j} x_{k,j} q_k. Operators above the cut are forced to zero."""
    cut = N if zero_operators_above is None else zero_operators_above
    q = {}
    for j in range(N, 1, -1):
        if j > cut:
            q[j] = np.zeros_like(y[j])
            continue
        q[j] = y[j] - sum((x[k][j] * q[k] for k in range(j + 1, N + 1)), np.zeros_like(y[j]))
    return q


def order_n(
    stack: StftStack,
    N: int,
    gamma: float,
    eps_rel: float = EPS_REL,
    zero_operators_above: int | None = None,
    *args,
    **kwargs,
) -> IFEstimateField:
    """
    Order 3 or 4 IF estimate with fallback through the lower orders.
    All derivatives in eta are exact, from the weighted fields of the stack.
    """
    if N not in (3, 4):
        raise InvalidOrderError("Order-N estimation supports N in {3, 4}, got: %s" % N)

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        V0, valid, omega_c = _complex_if(stack, gamma)
        x_fields, y_fields, D_fields = modulation_chain(stack, N, *args, **kwargs)
        x = {k: {j: xf.values() for j, xf in row.items()} for k, row in x_fields.items()}
        y = {j: yf.values() for j, yf in y_fields.items()}

        levels = [(omega_c, valid)]
        ok = valid
        for n in range(2, N + 1):
            q = back_substitute(x, y, n, zero_operators_above)
            omega_n = omega_c - sum(q[k] * x[k][1] for k in range(2, n + 1))
            ok = ok & ~degenerate(D_fields[n].values(), valid, eps_rel) & np.isfinite(omega_n)
            levels.append((omega_n, ok))
        tau_hat = _tau_hat(stack, V0, valid)

    if logger := kwargs.get("logger"):
        logger.debug("Order %d estimate applied on %d of %d valid bins" % (N, ok.sum(), valid.sum()))
    return _assemble(stack, N, levels, valid, tau_hat, {k: np.where(ok, qk, np.nan) for k, qk in q.items()})


def estimate(stack: StftStack, order: int, gamma: float, t_variant: bool = False, *args, **kwargs) -> IFEstimateField:
    """Dispatches to the estimate of the given order."""
    match order:
        case 1:
            return first_order(stack, gamma, *args, **kwargs)
        case 2 if t_variant:
            return second_order_t(stack, gamma, *args, **kwargs)
        case 2:
            return second_order_eta(stack, gamma, *args, **kwargs)
        case 3 | 4:
            return order_n(stack, order, gamma, *args, **kwargs)
    raise InvalidOrderError("Order must be in 1..4, got: %s" % order)
