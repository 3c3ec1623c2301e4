"""Two-phase family of orthonormal a-bases and its closed-form probabilities.

Each basis vector is ``(e^{ku}, A2i e^{ks}, A3i e^{kt}) / n_i`` with ``k`` the
field unit, real signed coefficients ``A`` and the first row fixed to 1.
Three of the six free coefficients are chosen (``A23``, ``A32``, ``A33``);
orthogonality fixes the other three.  The state is
``(v1 e^{k g1}, v2 e^{k g2}, v3 e^{k g3}) / |v|``.

Closed forms are written in the ``d1 .. d13`` shorthands and are checked
against direct inner products in the test suite.  :func:`printed_pairs`
keeps the pair-conditional expressions exactly as originally typeset, three
of which do not evaluate to the probability they are labelled with;
:func:`closed_form_pairs` carries the corrected versions.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np

from .context_data import PAIR_LABELS, PAIRS, QuantumSide, born_tables, from_quantum, validate
from .errors import DegenerateDenominator, ExhaustedRejection, NonProbability, ZeroState
from .scalars import Field, unit

DEN_TOL = 1e-12


@dataclass(frozen=True)
class BasisParams:
    """Free parameters of the basis family.

    ``a23, a32, a33 > 0`` are magnitudes with signs ``eps23, eps32, eps33``;
    ``u, s, t`` are the row phases.
    """

    a23: float
    a32: float
    a33: float
    eps23: int = 1
    eps32: int = 1
    eps33: int = 1
    u: float = 0.0
    s: float = 0.0
    t: float = 0.0
    field: Field = Field.HYPERBOLIC

    def __post_init__(self):
        object.__setattr__(self, "field", Field.parse(self.field))
        for name in ("a23", "a32", "a33"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        for name in ("eps23", "eps32", "eps33"):
            if getattr(self, name) not in (1, -1):
                raise ValueError(f"{name} must be +1 or -1")

    @classmethod
    def from_signed(cls, A23, A32, A33, **kw) -> "BasisParams":
        """Build from signed products ``eps * a``."""
        return cls(abs(A23), abs(A32), abs(A33), _sign(A23), _sign(A32), _sign(A33), **kw)

    @property
    def signed(self) -> tuple[float, float, float]:
        return self.eps23 * self.a23, self.eps32 * self.a32, self.eps33 * self.a33


@dataclass(frozen=True)
class StateParams:
    v: tuple[float, float, float]
    gamma: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(float(x) for x in self.v))
        object.__setattr__(self, "gamma", tuple(float(x) for x in self.gamma))
        if len(self.v) != 3 or len(self.gamma) != 3:
            raise ValueError("v and gamma need three components")


def _sign(x: float) -> int:
    return -1 if x < 0 else 1


def _div(num: float, den: float, where) -> float:
    if not abs(den) > DEN_TOL:
        raise DegenerateDenominator(f"denominator {den!r}", location=where)
    return num / den


# -- construction ---------------------------------------------------------


def complete_orthogonal(p: BasisParams) -> tuple[float, float, float]:
    """Signed ``(A21, A31, A22)`` making the three basis vectors orthogonal."""
    A23, A32, A33 = p.signed
    den = A23 * A23 * A32 + A32 * A33 * A33 + A33
    A31 = _div(-A23 * A23 - A32 * A33 - 1.0, den, "A31")
    A21 = _div(-A23 * (A32 - A33), den, "A21")
    A22 = _div(-A32 * A33 - 1.0, A23, "A22")
    return A21, A31, A22


def signed_matrix(p: BasisParams) -> np.ndarray:
    """Real 3x3 matrix ``R[l, i]`` of signed coefficients (row 0 is all ones)."""
    A21, A31, A22 = complete_orthogonal(p)
    A23, A32, A33 = p.signed
    return np.array([[1.0, 1.0, 1.0], [A21, A22, A23], [A31, A32, A33]])


def derived_signs(p: BasisParams) -> dict:
    """Magnitudes and signs re-extracted from the solved products."""
    A21, A31, A22 = complete_orthogonal(p)
    return {
        "a21": abs(A21), "eps21": _sign(A21),
        "a31": abs(A31), "eps31": _sign(A31),
        "a22": abs(A22), "eps22": _sign(A22),
    }


def build_basis(p: BasisParams) -> np.ndarray:
    """Orthonormal a-basis as a (3, 3, 2) parts array, columns are vectors."""
    R = signed_matrix(p)
    norms = np.sqrt((R * R).sum(axis=0))
    rows = unit(np.array([p.u, p.s, p.t]), p.field)
    return (R / norms)[..., None] * rows[:, None, :]


def build_state(sp: StateParams, field: Field | str) -> np.ndarray:
    v = np.array(sp.v)
    norm2 = float(v @ v)
    if not norm2 > 0:
        raise ZeroState("state amplitudes are all zero")
    return (v / math.sqrt(norm2))[:, None] * unit(np.array(sp.gamma), field)


def quantum_side(p: BasisParams, sp: StateParams) -> QuantumSide:
    return QuantumSide(build_basis(p), build_state(sp, p.field), p.field)


# -- closed forms ---------------------------------------------------------


@dataclass(frozen=True)
class Shorthands:
    d1: float
    d2: float
    d3: float
    d4: float
    d5: float
    d6: float
    d7: float
    d8: float
    d9: float
    d10: float
    d11: float
    d12: float
    d13: float
    gamma_s12: float
    gamma_t13: float


def shorthands(p: BasisParams, sp: StateParams) -> Shorthands:
    a23, a32, a33 = p.a23, p.a32, p.a33
    e23, e32, e33 = p.eps23, p.eps32, p.eps33
    v1, v2, v3 = sp.v
    g1, g2, g3 = sp.gamma
    d5 = 1 + a32 * a33 * e32 * e33
    return Shorthands(
        d1=1 + a23**2 + a32 * a33 * e32 * e33,
        d2=a32 * (a23**2 + a33**2) * e32 + a33 * e33,
        d3=a23**2 * (a32 * e32 - a33 * e33) ** 2,
        d4=a23 * e23 * (a32 * e32 - a33 * e33),
        d5=d5,
        d6=a32 * v3 * e32,
        d7=a23 * v2 * e23,
        d8=a33 * v3 * e33,
        d9=a23**2 * a32**2 * v3**2,
        d10=(a23 * e23 + a23 * a32 * a33 * e23 * e32 * e33) ** 2,
        d11=1 + a23**2 + a33**2,
        d12=a23**2 * (1 + a32**2) + d5**2,
        d13=v1**2 + v2**2 + v3**2,
        gamma_s12=g1 - g2 + p.s - p.u,
        gamma_t13=g1 - g3 + p.t - p.u,
    )


def _cosines(p: BasisParams, h: Shorthands):
    # interference terms use cosh for j, cos for i
    f = math.cosh if p.field is Field.HYPERBOLIC else math.cos
    return f(h.gamma_s12), f(h.gamma_t13), f(h.gamma_s12 - h.gamma_t13)


def closed_form_priors(p: BasisParams, sp: StateParams) -> np.ndarray:
    h = shorthands(p, sp)
    cs, ct, cst = _cosines(p, h)
    a23, a32, a33, e23 = p.a23, p.a32, p.a33, p.eps23
    v1, v2, v3 = sp.v
    d1, d2, d3, d4, d5, d6, d7, d8 = h.d1, h.d2, h.d3, h.d4, h.d5, h.d6, h.d7, h.d8
    p1 = _div(
        d2**2 * v1**2 - 2 * d2 * (cs * d4 * v2 + ct * d1 * v3) * v1 + d3 * v2**2
        + d1 * v3 * (2 * cst * d4 * v2 + d1 * v3),
        h.d11 * h.d12 * h.d13, "p_a1")
    p2 = _div(
        (v1**2 + 2 * ct * d6 * e23**2 * v1 + a32**2 * v3**2) * a23**2
        - 2 * d5 * (cst * d6 + cs * v1) * v2 * e23 * a23 + d5**2 * v2**2,
        h.d12 * h.d13, "p_a2")
    p3 = _div(
        v1**2 + 2 * ct * d8 * v1 + a23**2 * v2**2 + a33**2 * v3**2 + 2 * d7 * (cst * d8 + cs * v1),
        h.d11 * h.d13, "p_a3")
    return np.array([p1, p2, p3])


def closed_form_singles(p: BasisParams) -> np.ndarray:
    """``S[l, i] = p(b_l | a_i)``; doubly stochastic."""
    h = shorthands(p, StateParams((1.0, 0.0, 0.0)))
    a23, a32, a33 = p.a23, p.a32, p.a33
    col2 = a32**2 + h.d5**2 / a23**2 + 1
    d11, d12 = h.d11, h.d12
    return np.array([
        [_div(h.d2**2, d11 * d12, (1, 1)), 1 / col2, 1 / d11],
        [_div(h.d3, d11 * d12, (2, 1)), h.d5**2 / d12, a23**2 / d11],
        [_div(h.d1**2, d11 * d12, (3, 1)), a32**2 / col2, a33**2 / d11],
    ])


class _PairTerms(NamedTuple):
    cs: float
    ct: float
    cst: float
    K: float
    M: float
    N3: float
    Q: float
    den12: float
    den13: float
    den23: float


def _pair_terms(p: BasisParams, sp: StateParams, h: Shorthands) -> _PairTerms:
    cs, ct, cst = _cosines(p, h)
    a23, a32, a33, e23, e32, e33 = p.a23, p.a32, p.a33, p.eps23, p.eps32, p.eps33
    v1, v2, v3 = sp.v
    d1, d2, d4, d5, d6, d7, d8, d10 = h.d1, h.d2, h.d4, h.d5, h.d6, h.d7, h.d8, h.d10
    K = (a23**2 + a33**2) * a32**2 + 2 * d5 - 1
    M = (a32**2 + 1) * a23**4 + (a33**2 + 1) * d5**2 + 2 * d10
    N3 = (2 * a32 * e32 * e33 * a33**3 + (a23**2 + 1) * a33**2
          + a32**2 * (a23**4 + (2 * a33**2 + 1) * a23**2 + a33**4))
    Q = (a32**2 * a23**4 + ((2 * a33**2 + 1) * a32**2 + a33**2) * a23**2 + a33**2
         + a32 * a33**3 * (a32 * a33 + 2 * e32 * e33))
    # d13 * (p_ai + p_aj) scaled by d11 (pair 12), d12 (pair 13), d11*d12 (pair 23)
    den12 = ((v1**2 + v3**2) * a23**2 + v2**2 + v3**2 - 2 * ct * d8 * v1
             - 2 * d7 * (cst * d8 + cs * v1) + a33**2 * (v1**2 + v2**2))
    den13 = (K * v1**2 + a23**2 * (a32**2 + 1) * v2**2 + (a23**2 + d5**2) * v3**2
             + 2 * a23 * e23 * (d5 * (cst * d6 + cs * v1) * v2 - ct * a23 * d6 * v1 * e23))
    den23 = ((a23**4 + (a32**2 + a33**2 + 2) * a23**2 + d5**2) * v1**2
             + 2 * d2 * (cs * d4 * v2 + ct * d1 * v3) * v1
             + M * v2**2 - 2 * cst * d1 * d4 * v2 * v3 + v3**2 * N3)
    return _PairTerms(cs, ct, cst, K, M, N3, Q, den12, den13, den23)


def _pairs_common(p, sp, h, T):
    """The six appendix expressions that evaluate correctly as typeset."""
    a23, a32, a33, e23, e32 = p.a23, p.a32, p.a33, p.eps23, p.eps32
    v1, v2, v3 = sp.v
    d1, d2, d3, d4, d5, d6, d7, d8 = h.d1, h.d2, h.d3, h.d4, h.d5, h.d6, h.d7, h.d8
    d11, d12 = h.d11, h.d12
    cs, ct, cst, M, Q = T.cs, T.ct, T.cst, T.M, T.Q
    out = {}
    out[0, 0] = -1 / d11 + 1 - _div(a33**2 * v2**2 + a23**2 * v3**2 - 2 * cst * d7 * d8, T.den12, (1, "12"))
    out[0, 2] = a23**2 / d12 + 1 / d11 - _div(
        d1**2 * v2**2 - 2 * cst * d1 * d4 * v3 * v2 + d3 * v3**2, T.den23, (1, "23"))
    out[1, 1] = _div(
        a23**2 * ((v1**2 + 2 * ct * d6 * v1 + a32**2 * v3**2) * d5**2
                  + 2 * (a32**2 + 1) * d7 * (cst * d6 + cs * v1) * d5
                  + a23**2 * (a32**2 + 1) ** 2 * v2**2),
        d12 * T.den13, (2, "13"))
    out[1, 2] = _div(
        M**2 * v2**2 - 2 * cst * d1 * d4 * M * v3 * v2
        + 2 * d2 * d4 * v1 * (cs * M * v2 - ct * d1 * d4 * v3)
        + d3 * (d2**2 * v1**2 + d1**2 * v3**2),
        d11 * d12 * T.den23, (2, "23"))
    out[2, 1] = _div(
        a23**2 * (a23**2 * v1**2 + d5**2 * v2**2) * a32**2
        + 2 * a23 * e23 * e32 * ((a23**2 + d5**2) * v3 * (cst * d5 * v2 - ct * a23 * v1 * e23)
                                 - cs * a23 * a32 * d5 * d7 * v1 * e23 * e32) * a32
        + (a23**2 + d5**2) ** 2 * v3**2,
        d12 * T.den13, (3, "13"))
    num33 = d12 * ((d2**2 * v1**2 - 2 * cs * d2 * d4 * v2 * v1 + d3 * v2**2) * d1**2
                   + 2 * (ct * d2 * v1 - cst * d4 * v2) * v3 * Q * d1 + v3**2 * Q**2)
    den33 = (((a32**2 + 1) * a23**2 + d5**2) ** 2 * d11 * (
        (d12 * v2**2 + d11 * (v1**2 + 2 * ct * d6 * e23**2 * v1 + a32**2 * v3**2)) * a23**2
        - 2 * d5 * d11 * (cst * d6 + cs * v1) * v2 * e23 * a23 + d5**2 * d11 * v2**2
        + 2 * ct * d8 * d12 * v1 + 2 * d7 * d12 * (cst * d8 + cs * v1)
        + d12 * (v1**2 + a33**2 * v3**2)))
    out[2, 2] = _div(num33, den33, (3, "23"))
    return out


def _to_table(entries) -> np.ndarray:
    table = np.empty((3, 3))
    for (l, c), v in entries.items():
        table[l, c] = v
    return table


def closed_form_pairs(p: BasisParams, sp: StateParams) -> np.ndarray:
    """``P[l, c] = p(b_l | {a_k, a_j})`` for pair columns 12, 13, 23."""
    h = shorthands(p, sp)
    T = _pair_terms(p, sp, h)
    out = _pairs_common(p, sp, h, T)
    a23, a33, e23 = p.a23, p.a33, p.eps23
    v1, v2, v3 = sp.v
    d5, d6, d7, d8, d9, d11, d12 = h.d5, h.d6, h.d7, h.d8, h.d9, h.d11, h.d12
    cs, ct, cst, K = T.cs, T.ct, T.cst, T.K
    out[0, 1] = _div(
        2 * K * v1 * e23 * (cs * d5 * v2 - ct * a23 * d6 * e23) * a23
        - 2 * cst * d5 * d6 * v2 * e23 * a23**3 + (d9 + d5**2 * v2**2) * a23**2 + K**2 * v1**2,
        d12 * T.den13, (1, "13"))
    out[1, 0] = _div(
        (v1**2 + 2 * ct * d8 * e23**2 * v1 + a33**2 * v3**2) * a23**2
        - 2 * (a33**2 + 1) * (cst * d8 + cs * v1) * v2 * e23 * a23 + (a33**2 + 1) ** 2 * v2**2,
        d11 * T.den12, (2, "12"))
    out[2, 0] = _div(
        a33**2 * (v1**2 + d7**2) + 2 * cs * a33**2 * d7 * v1 + (1 + a23**2) ** 2 * v3**2
        - 2 * (1 + a23**2) * d8 * (ct * v1 + cst * d7),
        d11 * T.den12, (3, "12"))
    return _to_table(out)


def printed_pairs(p: BasisParams, sp: StateParams) -> np.ndarray:
    """Pair conditionals exactly as typeset, including the three faulty entries."""
    h = shorthands(p, sp)
    T = _pair_terms(p, sp, h)
    out = _pairs_common(p, sp, h, T)
    a23, a33, e23 = p.a23, p.a33, p.eps23
    v1, v2, v3 = sp.v
    d5, d6, d7, d8, d9, d11, d12 = h.d5, h.d6, h.d7, h.d8, h.d9, h.d11, h.d12
    cs, ct, cst, K = T.cs, T.ct, T.cst, T.K
    out[0, 1] = _div(
        2 * K * v1 * e23 * (cs * d5 * v2 - ct * a23 * d6 * e23) * a23
        - 2 * cst * d5 * d6 * v2 * e23 * a23**3 + (d9**2 + d5**2 * v2**2) * a23**2 + K**2 * v1**2,
        d12 * T.den13, (1, "13"))
    # typeset denominator can cancel to zero; report it rather than raise
    den = (d11 * ((v1**2 + v3**2) * a23**2 + v2**2 + v3**2 - 2 * ct * d8 * v1)
           - d11 * (2 * d7 * (cst * d8 + cs * v1) + a33**2 * (v1**2 + v2**2)))
    num = ((v1**2 + 2 * ct * d8 * e23**2 * v1 + a33**2 * v3**2) * a23**2
           - 2 * (a33**2 + 1) * (cst * d8 + cs * v1) * v2 * e23 * a23 + (a33**2 + 1) ** 2 * v2**2)
    out[1, 0] = num / den if den != 0.0 else math.copysign(math.inf, num)
    out[2, 0] = out[2, 1]
    return _to_table(out)


def appendix_discrepancies(p: BasisParams, sp: StateParams, rtol: float = 1e-9) -> list:
    """Pair entries whose typeset expression disagrees with the direct value.

    Returns ``(l, pair label, printed, direct)`` tuples, 1-based ``l``.
    """
    direct = direct_tables(p, sp)[3]
    printed = printed_pairs(p, sp)
    bad = []
    for l in range(3):
        for c in range(3):
            if not abs(printed[l, c] - direct[l, c]) <= rtol * abs(direct[l, c]):
                bad.append((l + 1, PAIR_LABELS[c], float(printed[l, c]), float(direct[l, c])))
    return bad


def direct_tables(p: BasisParams, sp: StateParams):
    """``(priors, b_priors, singles, pairs)`` from inner products, unchecked."""
    priors, b_priors, singles, pair_num = born_tables(quantum_side(p, sp))
    pairs = np.empty((3, 3))
    for c, (k, j) in enumerate(PAIRS):
        pairs[:, c] = pair_num[:, c] / (priors[k] + priors[j])
    return priors, b_priors, singles, pairs


# -- worked example -------------------------------------------------------

EXAMPLE_PUBLISHED = {
    "p_a1": 0.045837,
    "p_a2": 0.937356,
    "p_a3": 0.016807,
    "p_b1_a12": 0.206349,
    "p_b1_a13": 0.887593,
    "p_b1_a23": 0.075727,
    "p_b2_a12": 0.650559,
    "p_b2_a13": 0.111601,
    "p_b2_a23": 0.580032,
    "p_b3_a12": 0.143091,
    "p_b3_a13": 0.000805,
    "p_b3_a23": 0.344240,
}
EXAMPLE_TOL = 1e-6


def example_params(t: float = 0.0) -> tuple[BasisParams, StateParams]:
    """The worked instance; every probability is independent of ``t``."""
    basis = BasisParams.from_signed(2.0, 2.0, 3.0, u=0.3, s=t, t=t, field=Field.HYPERBOLIC)
    state = StateParams((-2.0, 3.0, -2.0), (0.0, t, t))
    return basis, state


@dataclass
class ExampleRow:
    name: str
    published: float
    computed: float

    @property
    def diff(self) -> float:
        return abs(self.computed - self.published)

    @property
    def ok(self) -> bool:
        return self.diff <= EXAMPLE_TOL


@dataclass
class ExampleReport:
    rows: list
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def format(self) -> str:
        lines = [f"{'quantity':<10} {'published':>10} {'computed':>10} {'|diff|':>10}"]
        for r in self.rows:
            lines.append(f"{r.name:<10} {r.published:10.6f} {r.computed:10.6f} {r.diff:10.2e}  {'ok' if r.ok else 'MISMATCH'}")
        for k, v in self.extras.items():
            lines.append(f"{k}: {v}")
        lines.append(f"verdict: {'all matched' if self.passed else 'mismatch'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "tolerance": EXAMPLE_TOL,
            "rows": [dict(asdict(r), diff=r.diff, ok=r.ok) for r in self.rows],
            "extras": self.extras,
        }


def reproduce_example(t: float = 0.0):
    """Rebuild the worked instance and compare with the published values."""
    bp, sp = example_params(t)
    q = quantum_side(bp, sp)
    data = from_quantum(q)
    computed = list(data.priors) + [data.pairs[l, c] for l in range(3) for c in range(3)]
    rows = [ExampleRow(name, pub, float(val)) for (name, pub), val in zip(EXAMPLE_PUBLISHED.items(), computed)]
    A21, A31, A22 = complete_orthogonal(bp)
    extras = {
        "priors_sum": float(data.priors.sum()),
        "A21": A21,
        "A31": A31,
        "A22": A22,
        "orthonormality_residual": q.residuals()["orthonormality"],
        "printed_appendix_discrepancies": [f"p_b{l}_a{c}" for l, c, _, _ in appendix_discrepancies(bp, sp)],
    }
    return data, q, ExampleReport(rows, extras)


# -- random instances -----------------------------------------------------


@dataclass(frozen=True)
class Ranges:
    magnitude: tuple[float, float] = (0.2, 5.0)
    phase: tuple[float, float] = (-1.5, 1.5)
    v: tuple[float, float] = (-5.0, 5.0)
    v_gap: float = 0.1

    def __post_init__(self):
        lo, hi = self.magnitude
        if not 0 < lo <= hi:
            raise ValueError("magnitude range must lie in (0, a_max]")
        if self.phase[0] > self.phase[1]:
            raise ValueError("empty phase range")
        if not (self.v[0] < -self.v_gap or self.v[1] > self.v_gap):
            raise ValueError("v range lies entirely inside the excluded gap")


class RandomInstance(NamedTuple):
    basis: BasisParams
    state: StateParams
    attempts: int
    seed: int


def instance_seed(seed: int, index: int) -> int:
    """Independent per-instance seed so sweeps are reproducible instance by instance."""
    return int(np.random.SeedSequence([int(seed), int(index)]).generate_state(1)[0])


def _draw_v(rng, ranges: Ranges) -> float:
    lo, hi = ranges.v
    while True:
        x = rng.uniform(lo, hi)
        if abs(x) >= ranges.v_gap:
            return float(x)


def _draw(rng, ranges: Ranges, field: Field) -> tuple[BasisParams, StateParams]:
    mags = rng.uniform(*ranges.magnitude, size=3)
    signs = rng.choice((-1, 1), size=3)
    u, s, t = rng.uniform(*ranges.phase, size=3)
    bp = BasisParams(*(float(m) for m in mags), *(int(e) for e in signs),
                     u=float(u), s=float(s), t=float(t), field=field)
    v = tuple(_draw_v(rng, ranges) for _ in range(3))
    gamma = tuple(float(g) for g in rng.uniform(*ranges.phase, size=3))
    return bp, StateParams(v, gamma)


def admissible(bp: BasisParams, sp: StateParams, tol: float = 1e-9) -> bool:
    """Whether the instance generates valid context data."""
    try:
        data = from_quantum(quantum_side(bp, sp), tol)
    except (DegenerateDenominator, NonProbability, ZeroState):
        return False
    return validate(data, tol).passed


def random_instance(seed: int, ranges: Ranges = Ranges(), field: Field | str = Field.HYPERBOLIC,
                    max_attempts: int = 100_000) -> RandomInstance:
    """Deterministic rejection sample of an admissible basis/state pair."""
    field = Field.parse(field)
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        bp, sp = _draw(rng, ranges, field)
        if admissible(bp, sp):
            return RandomInstance(bp, sp, attempt, int(seed))
    raise ExhaustedRejection(f"no admissible instance in {max_attempts} attempts (seed {seed})")
