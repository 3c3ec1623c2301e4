"""Inverse Born-rule solver.

Given admissible context data, recover per-row phases from the
interference coefficients, pick the cross-row combination that makes the
transition matrix unitary, and assemble the amplitudes.

Gauge: the first phase of every row is fixed to ``0`` with sign ``+1``, and
the state-overlap factors are set to 1.  Neither choice affects
probabilities or unitarity.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import kernels
from .context_data import PAIRS, ContextData, validate
from .errors import InfeasibleRow, InvalidData, NoMixedRow, NoUnitaryCombination
from .interference import InterferenceClass, InterferenceTable, ftp_interference, table
from .scalars import Field, PhaseFactor, PhaseKind, conj, from_parts, mul, sq_abs

DEFAULT_TOL_PHASE = 1e-8
DEFAULT_TOL_UNITARY = 1e-8
CLAMP_BAND = 1e-12


class RowSolution(NamedTuple):
    phi2: float
    phi3: float
    eps2: int
    eps3: int


def _clamp(value: float, lo: float, hi: float, what: str) -> float:
    if lo - CLAMP_BAND <= value <= hi + CLAMP_BAND:
        return min(max(value, lo), hi)
    raise InfeasibleRow(f"{what} = {float(value)!r} outside [{lo}, {hi}]")


def _row_pair_value(kind: PhaseKind, phi_i, phi_j, eps_i, eps_j) -> float:
    if kind is PhaseKind.TRIG:
        return math.cos(phi_i - phi_j)
    return eps_i * eps_j * math.cosh(phi_i - phi_j)


def _inverse(lam: float, kind: PhaseKind, what: str):
    """Principal phase and sign with ``value(phase, sign) = lam``."""
    if kind is PhaseKind.TRIG:
        return math.acos(_clamp(lam, -1.0, 1.0, what)), 1
    return math.acosh(_clamp(abs(lam), 1.0, math.inf, "|" + what + "|")), (1 if lam > 0 else -1)


def solve_row_phases(lam12: float, lam13: float, lam23: float, kind: PhaseKind,
                     tol_phase: float = DEFAULT_TOL_PHASE) -> list[RowSolution]:
    """All gauge-fixed phase assignments reproducing one row of coefficients.

    Any two coefficients of a row fix both phases up to sign; the third is
    the consistency check.  The inverse cosine of a value near +-1 is badly
    conditioned, so the coefficient closest to +-1 is the one checked rather
    than inverted.  With ``lambda_23`` checked the candidates are
    ``phi2 = +-acos(lambda_12)``, ``phi3 = +-acos(lambda_13)`` (``acosh|lambda|``
    with ``eps = sign(lambda)`` in the hyperbolic case).  Candidates are kept
    when the check holds within ``tol_phase`` and returned in lexicographic
    sign order ``(+, +), (+, -), (-, +), (-, -)`` of ``(phi2, phi3)``.
    """
    kind = PhaseKind(kind)
    lams = (lam12, lam13, lam23)
    names = ("lambda_12", "lambda_13", "lambda_23")
    inv = [_inverse(v, kind, n) for v, n in zip(lams, names)]
    # conditioning of each inverse ~ 1 / sqrt|lambda^2 - 1|
    check = min(range(3), key=lambda k: (abs(lams[k] * lams[k] - 1.0), -k))
    out = []
    for s_a, s_b in itertools.product((1, -1), repeat=2):
        if check == 2:
            phi2, phi3 = s_a * inv[0][0], s_b * inv[1][0]
            e2, e3 = inv[0][1], inv[1][1]
        elif check == 1:
            phi2, e2 = s_a * inv[0][0], inv[0][1]
            phi3, e3 = phi2 - s_b * inv[2][0], e2 * inv[2][1]
        else:
            phi3, e3 = s_a * inv[1][0], inv[1][1]
            phi2, e2 = phi3 + s_b * inv[2][0], e3 * inv[2][1]
        cand = RowSolution(phi2, phi3, e2, e3)
        if cand in out:
            continue
        got = (_row_pair_value(kind, 0.0, phi2, 1, e2), _row_pair_value(kind, 0.0, phi3, 1, e3),
               _row_pair_value(kind, phi2, phi3, e2, e3))[check]
        if abs(got - lams[check]) <= tol_phase:
            out.append(cand)
    if not out:
        raise InfeasibleRow(f"no sign choice reproduces {names[check]} = {float(lams[check])!r}")
    out.sort(key=lambda c: (c.phi2 < 0, c.phi3 < 0))
    return out


@dataclass(frozen=True, eq=False)
class PhaseSolution:
    phi: np.ndarray
    eps: np.ndarray
    kind: PhaseKind

    @classmethod
    def from_rows(cls, rows, kind: PhaseKind) -> "PhaseSolution":
        phi = np.zeros((3, 3))
        eps = np.ones((3, 3), dtype=int)
        for l, r in enumerate(rows):
            phi[l, 1:] = (r.phi2, r.phi3)
            eps[l, 1:] = (r.eps2, r.eps3)
        return cls(phi, eps, PhaseKind(kind))

    @property
    def field(self) -> Field:
        return self.kind.field

    def factor(self, l: int, i: int) -> PhaseFactor:
        return PhaseFactor(self.kind, float(self.phi[l, i]), int(self.eps[l, i]))

    def parts(self) -> np.ndarray:
        """Unit phase factors as a (3, 3, 2) parts array."""
        if self.kind is PhaseKind.TRIG:
            base = np.stack([np.cos(self.phi), np.sin(self.phi)], axis=-1)
        else:
            base = np.stack([np.cosh(self.phi), np.sinh(self.phi)], axis=-1)
        return self.eps[..., None] * base

    def coefficients(self) -> np.ndarray:
        out = np.empty((3, 3))
        for l in range(3):
            for c, (i, j) in enumerate(PAIRS):
                out[l, c] = _row_pair_value(self.kind, self.phi[l, i], self.phi[l, j],
                                            self.eps[l, i], self.eps[l, j])
        return out

    def residual(self, tbl: InterferenceTable) -> float:
        return float(np.abs(self.coefficients() - tbl.coefficients).max())


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    U: np.ndarray
    field: Field

    def values(self):
        return from_parts(self.U, self.field)


@dataclass(frozen=True, eq=False)
class AmplitudeTable:
    sub: np.ndarray
    psi_b: np.ndarray
    field: Field


@dataclass(eq=False)
class Representation:
    table: InterferenceTable
    phases: PhaseSolution
    amplitudes: AmplitudeTable
    U: TransitionMatrix
    reconstructed_b: np.ndarray
    diagnostics: dict = field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.phases.field

    def to_dict(self) -> dict:
        def parts_list(a):
            return np.asarray(a, dtype=float).tolist()

        return {
            "field": self.field.value,
            "interference": self.table.to_dict(),
            "phases": {"phi": self.phases.phi.tolist(), "eps": self.phases.eps.tolist()},
            "U": parts_list(self.U.U),
            "subamplitudes": parts_list(self.amplitudes.sub),
            "state": parts_list(self.amplitudes.psi_b),
            "reconstructed_b": [float(p) for p in self.reconstructed_b],
            "diagnostics": {k: (float(v) if isinstance(v, (float, np.floating)) else v)
                            for k, v in self.diagnostics.items()},
        }


def build_transition_matrix(data: ContextData, phases: PhaseSolution) -> TransitionMatrix:
    """``U[l, i] = sqrt(p(b_l | a_i)) * lambda(l, i)``."""
    U = np.sqrt(data.singles)[..., None] * phases.parts()
    return TransitionMatrix(U, phases.field)


def tn_residual(U: TransitionMatrix) -> float:
    """Largest ``|sum_m U[m, i] conj(U[m, k])|`` over ``i != k``."""
    worst = 0.0
    for i, k in itertools.permutations(range(3), 2):
        s = mul(U.U[:, i], conj(U.U[:, k]), U.field).sum(axis=0)
        worst = max(worst, float(np.abs(s).max()))
    return worst


def unitarity_residual(U: TransitionMatrix) -> float:
    """Max-norm of ``U^* U - I``, or the orthogonality sums if larger."""
    gram = float(kernels.gram_residual(U.U[None], U.field.sigma)[0])
    return max(gram, tn_residual(U))


def amplitudes(data: ContextData, phases: PhaseSolution) -> AmplitudeTable:
    mags = np.sqrt(data.priors[None, :] * data.singles)
    sub = mags[..., None] * phases.parts()
    return AmplitudeTable(sub, sub.sum(axis=1), phases.field)


def reconstruct_state(amps: AmplitudeTable) -> np.ndarray:
    """State coordinates in the canonical b-basis (a parts array)."""
    return np.array(amps.psi_b)


def _row_kinds(tbl: InterferenceTable) -> PhaseKind:
    kinds = []
    for l in range(3):
        rk = tbl.row_kind(l)
        if rk is InterferenceClass.HYPER_TRIGONOMETRIC:
            raise NoMixedRow("coefficients mix |lambda| <= 1 and |lambda| > 1", row=l)
        kinds.append(PhaseKind.TRIG if rk is InterferenceClass.TRIGONOMETRIC else PhaseKind.HYPER)
    if len(set(kinds)) > 1:
        labels = ", ".join(f"row {l + 1}: {k.value}" for l, k in enumerate(kinds))
        raise NoUnitaryCombination(f"rows need different scalar fields ({labels}); no single transition matrix exists")
    return kinds[0]


def represent(data: ContextData, tol_phase: float = DEFAULT_TOL_PHASE,
              tol_unitary: float = DEFAULT_TOL_UNITARY, tol_validate: float = 1e-9) -> Representation:
    """Build a quantum-like representation of ``data``.

    Raises :class:`InvalidData`, :class:`InfeasibleRow` (or its subclass
    :class:`NoMixedRow`), or :class:`NoUnitaryCombination`.
    """
    report = validate(data, tol_validate)
    if not report.passed:
        raise InvalidData(report)
    tbl = table(data)
    kind = _row_kinds(tbl)
    per_row = []
    for l in range(3):
        lam = tbl.coefficients[l]
        try:
            per_row.append(solve_row_phases(lam[0], lam[1], lam[2], kind, tol_phase))
        except InfeasibleRow as exc:
            raise InfeasibleRow(str(exc), row=l) from None

    combos = list(itertools.product(*per_row))
    candidates = [PhaseSolution.from_rows(rows, kind) for rows in combos]
    mats = np.stack([build_transition_matrix(data, ph).U for ph in candidates])
    residuals = kernels.gram_residual(mats, kind.field.sigma)
    # first minimum wins: combos are in lexicographic sign order
    best = int(np.argmin(residuals))
    if not residuals[best] <= tol_unitary:
        raise NoUnitaryCombination(
            f"best of {len(combos)} sign combinations has unitarity residual {residuals[best]:.3e} > {tol_unitary:g}"
        )
    phases = candidates[best]
    U = build_transition_matrix(data, phases)
    amps = amplitudes(data, phases)
    recon = sq_abs(amps.psi_b, phases.field)
    ftp = np.array([ftp_interference(data, tbl, l) for l in range(3)])
    diagnostics = {
        "combinations": len(combos),
        "unitarity_residual": unitarity_residual(U),
        "phase_residual": phases.residual(tbl),
        "born_vs_ftp": float(np.abs(recon - ftp).max()),
    }
    if data.b_priors is not None:
        diagnostics["born_vs_b_priors"] = float(np.abs(recon - data.b_priors).max())
    if diagnostics["born_vs_ftp"] > tol_unitary:
        raise NoUnitaryCombination(
            f"reconstructed p_b differs from the interference formula by {diagnostics['born_vs_ftp']:.3e}"
        )
    return Representation(tbl, phases, amps, U, recon, diagnostics)
