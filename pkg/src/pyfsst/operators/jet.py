"""
Truncated Taylor expansions in the frequency variable.

A jet holds c_n = f^(n)(eta) / n! for n = 0..order at every TF bin.
STFT fields have exact jets since d/deta V^{t^l h} = -i 2 pi V^{t^(l+1) h}.
"""

from math import factorial

import numpy as np

from pyfsst.errors import MissingFieldError


class EtaJet:
    __slots__ = ("coeffs",)
    __array_ufunc__ = None  # numpy defers to the reflected jet operators

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=np.complex128)

    @classmethod
    def from_stack(cls, stack, l: int, deriv: int, order: int) -> "EtaJet":
        """Jet of V^{t^l g^(deriv)}, needs the fields up to weight l + order."""
        coeffs = []
        for n in range(order + 1):
            if (l + n, deriv) not in stack:
                raise MissingFieldError(
                    "eta derivative %d of V^{t^%d g^(%d)} needs weight %d, not in the stack" % (n, l, deriv, l + n)
                )
            coeffs.append((-2j * np.pi) ** n / factorial(n) * stack.V(l + n, deriv))
        return cls(coeffs)

    @classmethod
    def variable(cls, eta, order: int, shape) -> "EtaJet":
        """The jet of eta itself: [eta, 1, 0, ...]."""
        coeffs = np.zeros((order + 1, *shape), dtype=np.complex128)
        coeffs[0] = np.broadcast_to(eta, shape)
        if order:
            coeffs[1] = 1
        return cls(coeffs)

    @classmethod
    def constant(cls, value, order: int, shape) -> "EtaJet":
        coeffs = np.zeros((order + 1, *shape), dtype=np.complex128)
        coeffs[0] = value
        return cls(coeffs)

    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def shape(self):
        return self.coeffs.shape[1:]

    @property
    def value(self) -> np.ndarray:
        return self.coeffs[0]

    def truncated(self, order: int) -> "EtaJet":
        return EtaJet(self.coeffs[: order + 1])

    def _align(self, other):
        if isinstance(other, EtaJet):
            order = min(self.order, other.order)
            return self.coeffs[: order + 1], other.coeffs[: order + 1]
        return self.coeffs, EtaJet.constant(other, self.order, self.shape).coeffs

    def __add__(self, other):
        a, b = self._align(other)
        return EtaJet(a + b)

    __radd__ = __add__

    def __neg__(self):
        return EtaJet(-self.coeffs)

    def __sub__(self, other):
        a, b = self._align(other)
        return EtaJet(a - b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if not isinstance(other, EtaJet):
            return EtaJet(self.coeffs * other)
        a, b = self._align(other)
        out = np.zeros_like(a)
        for n in range(a.shape[0]):
            for k in range(n + 1):
                out[n] += a[k] * b[n - k]
        return EtaJet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, EtaJet):
            return EtaJet(self.coeffs / other)
        a, b = self._align(other)
        out = np.zeros_like(a)
        for n in range(a.shape[0]):
            acc = a[n].copy()
            for k in range(1, n + 1):
                acc -= b[k] * out[n - k]
            out[n] = acc / b[0]
        return EtaJet(out)

    def __rtruediv__(self, other):
        return EtaJet.constant(other, self.order, self.shape) / self

    def deriv(self) -> "EtaJet":
        """d/deta, one order shorter."""
        if not self.order:
            raise MissingFieldError("Cannot differentiate an order 0 jet, a higher weight field is required")
        n = np.arange(1, self.order + 1).reshape(-1, *([1] * len(self.shape)))
        return EtaJet(n * self.coeffs[1:])

    def __repr__(self):
        return "EtaJet(order=%d, shape=%s)" % (self.order, self.shape)
