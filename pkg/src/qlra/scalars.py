"""Complex and hyperbolic (split-complex) scalars.

Both fields are handled as ``x + k*y`` with ``k**2 = sigma``: ``sigma = -1``
gives the complex numbers, ``sigma = +1`` the hyperbolic numbers.  Scalars
are exposed as Python ``complex`` and :class:`HyperbolicNumber`; vectors and
matrices are float arrays with a trailing axis of length 2 holding
``(x, y)`` ("parts arrays"), so one set of array routines serves both fields.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import KindMismatch, NotInPositiveCone

__all__ = [
    "Field",
    "HyperbolicNumber",
    "PhaseKind",
    "PhaseFactor",
    "Scalar",
    "h_mul",
    "h_conj",
    "h_sq_abs",
    "h_arg",
    "h_exp",
    "h_polar",
    "cone_sum_check",
    "phase_value",
    "phase_pair_real",
    "to_parts",
    "from_parts",
    "mul",
    "conj",
    "sq_abs",
    "unit",
    "inner",
    "braket",
]


class Field(enum.Enum):
    COMPLEX = "complex"
    HYPERBOLIC = "hyperbolic"

    @property
    def sigma(self) -> float:
        """Square of the imaginary unit: -1 for ``i``, +1 for ``j``."""
        return -1.0 if self is Field.COMPLEX else 1.0

    @classmethod
    def parse(cls, value: "Field | str") -> "Field":
        if isinstance(value, Field):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown field {value!r}; expected 'complex' or 'hyperbolic'") from None


@dataclass(frozen=True)
class HyperbolicNumber:
    """Split-complex number ``x + j*y`` with ``j**2 = 1``."""

    x: float
    y: float = 0.0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HyperbolicNumber(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HyperbolicNumber(self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return HyperbolicNumber(-self.x, -self.y)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return h_mul(self, other)

    __rmul__ = __mul__

    def conjugate(self) -> "HyperbolicNumber":
        return h_conj(self)

    def sq_abs(self) -> float:
        return h_sq_abs(self)

    def __repr__(self):
        sign = "+" if self.y >= 0 or math.isnan(self.y) else "-"
        return f"({self.x!r} {sign} {abs(self.y)!r}j)"


Scalar = Union[complex, HyperbolicNumber]


def _coerce(value):
    if isinstance(value, HyperbolicNumber):
        return value
    if isinstance(value, (int, float, np.floating, np.integer)) and not isinstance(value, bool):
        return HyperbolicNumber(float(value), 0.0)
    if isinstance(value, complex):
        raise KindMismatch("cannot mix complex and hyperbolic scalars")
    return NotImplemented


def h_mul(z1: HyperbolicNumber, z2: HyperbolicNumber) -> HyperbolicNumber:
    return HyperbolicNumber(z1.x * z2.x + z1.y * z2.y, z1.x * z2.y + z2.x * z1.y)


def h_conj(z: HyperbolicNumber) -> HyperbolicNumber:
    return HyperbolicNumber(z.x, -z.y)


def h_sq_abs(z: HyperbolicNumber) -> float:
    """``x**2 - y**2``; may be zero or negative."""
    return z.x * z.x - z.y * z.y


def _require_cone(z: HyperbolicNumber) -> None:
    if not h_sq_abs(z) > 0.0:
        raise NotInPositiveCone(f"{z!r} has squared modulus {h_sq_abs(z)!r} <= 0")


def h_arg(z: HyperbolicNumber) -> float:
    """Hyperbolic argument ``artanh(y/x)`` of a positive-cone element."""
    _require_cone(z)
    return 0.5 * math.log((z.x + z.y) / (z.x - z.y))


def h_exp(theta: float) -> HyperbolicNumber:
    return HyperbolicNumber(math.cosh(theta), math.sinh(theta))


def h_polar(z: HyperbolicNumber) -> tuple[int, float, float]:
    """Return ``(eps, m, theta)`` with ``z = eps * m * h_exp(theta)``."""
    _require_cone(z)
    eps = 1 if z.x > 0 else -1
    return eps, math.sqrt(h_sq_abs(z)), h_arg(z)


def cone_sum_check(z1: HyperbolicNumber, z2: HyperbolicNumber) -> bool:
    """Whether ``z1 + z2`` stays in the positive cone, decided from polar parts.

    Equal signs always stay inside.  Opposite signs stay inside iff
    ``arccosh((m1**2 + m2**2) / (2*m1*m2)) > |theta1 - theta2|``.
    """
    e1, m1, t1 = h_polar(z1)
    e2, m2, t2 = h_polar(z2)
    if e1 * e2 == 1:
        return True
    return math.acosh((m1 * m1 + m2 * m2) / (2.0 * m1 * m2)) > abs(t1 - t2)


class PhaseKind(enum.Enum):
    TRIG = "trig"
    HYPER = "hyper"

    @property
    def field(self) -> Field:
        return Field.COMPLEX if self is PhaseKind.TRIG else Field.HYPERBOLIC


@dataclass(frozen=True)
class PhaseFactor:
    """Unit-modulus factor: ``e^{i theta}`` (TRIG) or ``eps * e^{j theta}`` (HYPER)."""

    kind: PhaseKind
    theta: float
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")
        if self.kind is PhaseKind.TRIG and self.eps != 1:
            raise ValueError("trigonometric phase factors have eps = +1")

    @classmethod
    def trig(cls, theta: float) -> "PhaseFactor":
        return cls(PhaseKind.TRIG, theta)

    @classmethod
    def hyper(cls, eps: int, theta: float) -> "PhaseFactor":
        return cls(PhaseKind.HYPER, theta, eps)

    def parts(self) -> np.ndarray:
        return self.eps * unit(self.theta, self.kind.field)

    @property
    def value(self) -> Scalar:
        return phase_value(self)


def phase_value(lam: PhaseFactor) -> Scalar:
    if lam.kind is PhaseKind.TRIG:
        return complex(math.cos(lam.theta), math.sin(lam.theta))
    return HyperbolicNumber(lam.eps * math.cosh(lam.theta), lam.eps * math.sinh(lam.theta))


def phase_pair_real(lam1: PhaseFactor, lam2: PhaseFactor) -> float:
    """``(l1*conj(l2) + l2*conj(l1)) / 2``: ``cos(d)`` or ``eps1*eps2*cosh(d)``."""
    if lam1.kind is not lam2.kind:
        raise KindMismatch(f"cannot pair {lam1.kind.value} with {lam2.kind.value} phase factor")
    d = lam1.theta - lam2.theta
    if lam1.kind is PhaseKind.TRIG:
        return math.cos(d)
    return lam1.eps * lam2.eps * math.cosh(d)


# -- parts arrays ---------------------------------------------------------


def to_parts(values, field: Field | str) -> np.ndarray:
    """Convert complex values or :class:`HyperbolicNumber` objects to a parts array."""
    field = Field.parse(field)
    arr = np.asarray(values, dtype=object if field is Field.HYPERBOLIC else complex)
    if field is Field.COMPLEX:
        return np.stack([arr.real, arr.imag], axis=-1).astype(float)
    out = np.empty(arr.shape + (2,), dtype=float)
    for idx, z in np.ndenumerate(arr):
        if isinstance(z, HyperbolicNumber):
            out[idx] = (z.x, z.y)
        elif isinstance(z, complex):
            raise KindMismatch("complex value in a hyperbolic array")
        else:
            out[idx] = (float(z), 0.0)
    return out


def from_parts(parts, field: Field | str):
    """Inverse of :func:`to_parts`; returns a complex ndarray or an object ndarray."""
    field = Field.parse(field)
    parts = np.asarray(parts, dtype=float)
    if field is Field.COMPLEX:
        return parts[..., 0] + 1j * parts[..., 1]
    out = np.empty(parts.shape[:-1], dtype=object)
    for idx in np.ndindex(out.shape):
        out[idx] = HyperbolicNumber(float(parts[idx + (0,)]), float(parts[idx + (1,)]))
    return out


def mul(a, b, field: Field | str) -> np.ndarray:
    sigma = Field.parse(field).sigma
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    x = a[..., 0] * b[..., 0] + sigma * a[..., 1] * b[..., 1]
    y = a[..., 0] * b[..., 1] + a[..., 1] * b[..., 0]
    return np.stack([x, y], axis=-1)


def conj(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a[..., 1] *= -1.0
    return a


def sq_abs(a, field: Field | str) -> np.ndarray:
    sigma = Field.parse(field).sigma
    a = np.asarray(a, dtype=float)
    return a[..., 0] ** 2 - sigma * a[..., 1] ** 2


def unit(theta, field: Field | str) -> np.ndarray:
    """``e^{i theta}`` or ``e^{j theta}`` as parts."""
    theta = np.asarray(theta, dtype=float)
    if Field.parse(field) is Field.COMPLEX:
        return np.stack([np.cos(theta), np.sin(theta)], axis=-1)
    return np.stack([np.cosh(theta), np.sinh(theta)], axis=-1)


def inner(x, y, field: Field | str) -> np.ndarray:
    """Inner product linear in the first argument: ``sum_k x_k * conj(y_k)``."""
    return mul(x, conj(y), field).sum(axis=-2)


def braket(x, y, field: Field | str) -> np.ndarray:
    """Dirac bracket ``<x|y> = sum_k conj(x_k) * y_k``."""
    return inner(y, x, field)
