"""Coefficients of interference and the formula of total probability."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .context_data import PAIR_LABELS, PAIRS, ContextData, pair_index
from .errors import DegenerateDenominator

BORDERLINE_BAND = 1e-6


class InterferenceClass(enum.Enum):
    TRIGONOMETRIC = "Trigonometric"
    HYPERBOLIC = "Hyperbolic"
    HYPER_TRIGONOMETRIC = "HyperTrigonometric"


def _weight(data: ContextData, l: int, i: int) -> float:
    return float(data.priors[i] * data.singles[l, i])


def coefficient(data: ContextData, l: int, i: int, j: int, tol: float = 0.0) -> float:
    """Normalised deviation of ``p(b_l | {a_i, a_j})`` from classical mixing.

    Symmetric in ``i`` and ``j``; raises :class:`DegenerateDenominator` when
    ``p_a[i] p(b_l|a_i) p_a[j] p(b_l|a_j) <= tol``.
    """
    if i == j:
        raise ValueError("coefficient needs two distinct a-outcomes")
    i, j = min(i, j), max(i, j)
    wi, wj = _weight(data, l, i), _weight(data, l, j)
    radicand = wi * wj
    if not radicand > tol:
        raise DegenerateDenominator(
            f"sqrt argument {radicand!r} <= {tol!r}", location=(l + 1, PAIR_LABELS[pair_index(i, j)])
        )
    mixed = (data.priors[i] + data.priors[j]) * data.pairs[l, pair_index(i, j)]
    return float((mixed - (wi + wj)) / (2.0 * math.sqrt(radicand)))


def classify(values) -> InterferenceClass:
    mags = np.abs(np.asarray(values, dtype=float))
    if np.all(mags <= 1.0):
        return InterferenceClass.TRIGONOMETRIC
    if np.all(mags > 1.0):
        return InterferenceClass.HYPERBOLIC
    return InterferenceClass.HYPER_TRIGONOMETRIC


@dataclass(frozen=True, eq=False)
class InterferenceTable:
    """``coefficients[l, c]`` for b-outcome ``l`` and pair column ``c``."""

    coefficients: np.ndarray
    kind: InterferenceClass

    def __getitem__(self, key):
        l, i, j = key
        return float(self.coefficients[l, pair_index(i, j)])

    @property
    def borderline(self) -> list:
        """Entries within :data:`BORDERLINE_BAND` of +-1, as ``(l, pair label)``."""
        near = np.abs(np.abs(self.coefficients) - 1.0) <= BORDERLINE_BAND
        return [(int(l) + 1, PAIR_LABELS[int(c)]) for l, c in zip(*np.nonzero(near))]

    def row_kind(self, l: int) -> InterferenceClass:
        return classify(self.coefficients[l])

    def format(self) -> str:
        lines = ["l    " + "  ".join(f"{'lambda_' + lab:>11}" for lab in PAIR_LABELS)]
        for l in range(3):
            lines.append(f"{l + 1:<4} " + "  ".join(f"{v:11.6f}" for v in self.coefficients[l]))
        lines.append(f"class: {self.kind.value}")
        if self.borderline:
            lines.append("borderline |lambda| ~ 1: " + ", ".join(f"({l},{c})" for l, c in self.borderline))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "class": self.kind.value,
            "coefficients": {
                lab: [float(v) for v in self.coefficients[:, c]] for c, lab in enumerate(PAIR_LABELS)
            },
            "borderline": [list(b) for b in self.borderline],
        }


def table(data: ContextData, tol: float = 0.0) -> InterferenceTable:
    coeffs = np.empty((3, 3))
    for l in range(3):
        for c, (i, j) in enumerate(PAIRS):
            coeffs[l, c] = coefficient(data, l, i, j, tol)
    return InterferenceTable(coeffs, classify(coeffs))


def classical_ftp(data: ContextData, l: int) -> float:
    """``sum_i p_a[i] p(b_l | a_i)``."""
    return float(np.dot(data.priors, data.singles[l]))


def ftp_interference(data: ContextData, tbl: InterferenceTable, l: int) -> float:
    """Total probability of ``b_l`` with the three pairwise interference terms."""
    total = classical_ftp(data, l)
    for c, (i, j) in enumerate(PAIRS):
        total += 2.0 * tbl.coefficients[l, c] * math.sqrt(_weight(data, l, i) * _weight(data, l, j))
    return float(total)
