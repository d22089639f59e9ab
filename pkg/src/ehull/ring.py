"""The four-element non-unital ring E = {0, kappa, tau, zeta}.

Elements are stored in (kappa, zeta) coordinates over GF(2): ``e = a*kappa + b*zeta``
with ``tau = kappa + zeta``.  Text symbols are ``0``, ``k``, ``t``, ``z``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ehull.errors import MatrixFormatError

__all__ = [
    "RingElement",
    "ZERO",
    "KAPPA",
    "TAU",
    "ZETA",
    "ELEMENTS",
    "EVector",
    "EMatrix",
    "add",
    "mul",
    "pi",
    "scalar_action",
    "pi_vector",
    "kappa_lift",
    "zeta_lift",
    "from_symbol",
]


@dataclass(frozen=True)
class RingElement:
    a: int  # kappa coordinate
    b: int  # zeta coordinate

    def __post_init__(self) -> None:
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"coordinates must be bits, got ({self.a}, {self.b})")

    def __add__(self, other: RingElement) -> RingElement:
        return add(self, other)

    def __mul__(self, other: RingElement) -> RingElement:
        return mul(self, other)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[(self.a, self.b)]

    def __str__(self) -> str:
        return self.symbol

    def __repr__(self) -> str:
        return f"RingElement({self.symbol})"


ZERO = RingElement(0, 0)
KAPPA = RingElement(1, 0)
ZETA = RingElement(0, 1)
TAU = RingElement(1, 1)
ELEMENTS = (ZERO, KAPPA, TAU, ZETA)

_SYMBOLS = {(0, 0): "0", (1, 0): "k", (1, 1): "t", (0, 1): "z"}
_BY_SYMBOL = {s: RingElement(*ab) for ab, s in _SYMBOLS.items()}

# Multiplication table of E, row = left factor, column = right factor.
_TABLE = {
    ZERO: {ZERO: ZERO, KAPPA: ZERO, TAU: ZERO, ZETA: ZERO},
    KAPPA: {ZERO: ZERO, KAPPA: KAPPA, TAU: KAPPA, ZETA: ZERO},
    TAU: {ZERO: ZERO, KAPPA: TAU, TAU: TAU, ZETA: ZERO},
    ZETA: {ZERO: ZERO, KAPPA: ZETA, TAU: ZETA, ZETA: ZERO},
}

EVector = tuple[RingElement, ...]
EMatrix = tuple[EVector, ...]


def add(x: RingElement, y: RingElement) -> RingElement:
    return RingElement(x.a ^ y.a, x.b ^ y.b)


def mul(x: RingElement, y: RingElement) -> RingElement:
    return _TABLE[x][y]


def pi(x: RingElement) -> int:
    """Reduction modulo the maximal ideal {0, zeta}."""
    return x.a


def scalar_action(v: int, x: RingElement) -> RingElement:
    if v not in (0, 1):
        raise ValueError(f"not a bit: {v!r}")
    return x if v else ZERO


def pi_vector(v: Sequence[RingElement]) -> tuple[int, ...]:
    return tuple(e.a for e in v)


def kappa_lift(u: Sequence[int]) -> EVector:
    return tuple(KAPPA if bit else ZERO for bit in u)


def zeta_lift(u: Sequence[int]) -> EVector:
    return tuple(ZETA if bit else ZERO for bit in u)


def from_symbol(s: str) -> RingElement:
    try:
        return _BY_SYMBOL[s]
    except KeyError:
        raise MatrixFormatError(f"unknown ring symbol {s!r}; expected one of 0 k t z") from None
