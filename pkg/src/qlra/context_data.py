"""Statistical data for two trichotomous observables ``a`` and ``b``.

Indices are 0-based in the API (``alpha_1`` is index 0).  Pair-conditional
columns follow :data:`PAIRS`; files label them ``"12"``, ``"13"``, ``"23"``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import kernels
from .errors import DegenerateDenominator, NonProbability, ParseError, SchemaError
from .scalars import Field, braket, sq_abs, to_parts

PAIRS = ((0, 1), (0, 2), (1, 2))
PAIR_LABELS = ("12", "13", "23")
DEFAULT_TOL = 1e-9


def pair_index(i: int, j: int) -> int:
    """Column of the unordered pair ``{i, j}`` in a pairs table."""
    key = (min(i, j), max(i, j))
    try:
        return PAIRS.index(key)
    except ValueError:
        raise ValueError(f"no pair column for ({i}, {j})") from None


@dataclass(frozen=True, eq=False)
class ContextData:
    priors: np.ndarray
    singles: np.ndarray
    pairs: np.ndarray
    b_priors: Optional[np.ndarray] = None

    def __post_init__(self):
        for name, shape in (("priors", (3,)), ("singles", (3, 3)), ("pairs", (3, 3))):
            arr = np.array(getattr(self, name), dtype=float)
            if arr.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.b_priors is not None:
            arr = np.array(self.b_priors, dtype=float)
            if arr.shape != (3,):
                raise ValueError(f"b_priors must have shape (3,), got {arr.shape}")
            arr.setflags(write=False)
            object.__setattr__(self, "b_priors", arr)

    def __eq__(self, other):
        if not isinstance(other, ContextData):
            return NotImplemented
        same_b = (self.b_priors is None and other.b_priors is None) or (
            self.b_priors is not None
            and other.b_priors is not None
            and np.array_equal(self.b_priors, other.b_priors)
        )
        return (
            same_b
            and np.array_equal(self.priors, other.priors)
            and np.array_equal(self.singles, other.singles)
            and np.array_equal(self.pairs, other.pairs)
        )

    def pair(self, l: int, i: int, j: int) -> float:
        return float(self.pairs[l, pair_index(i, j)])

    def replace(self, **changes) -> "ContextData":
        values = dict(priors=self.priors, singles=self.singles, pairs=self.pairs, b_priors=self.b_priors)
        values.update(changes)
        return ContextData(**values)

    def to_dict(self) -> dict:
        out = {
            "priors": [float(p) for p in self.priors],
            "singles": [[float(p) for p in row] for row in self.singles],
            "pairs": {lab: [float(p) for p in self.pairs[:, c]] for c, lab in enumerate(PAIR_LABELS)},
        }
        if self.b_priors is not None:
            out["b_priors"] = [float(p) for p in self.b_priors]
        return out

    @classmethod
    def from_dict(cls, doc) -> "ContextData":
        if not isinstance(doc, dict):
            raise SchemaError("top level must be a mapping")
        for key in ("priors", "singles", "pairs"):
            if key not in doc:
                raise SchemaError("missing required field", field=key)
        unknown = set(doc) - {"priors", "singles", "pairs", "b_priors"}
        if unknown:
            raise SchemaError(f"unknown fields {sorted(unknown)}")
        priors = _vector(doc["priors"], "priors")
        singles = _matrix(doc["singles"], "singles")
        raw_pairs = doc["pairs"]
        if not isinstance(raw_pairs, dict):
            raise SchemaError("pairs must be a mapping from pair label to a 3-array", field="pairs")
        pairs = np.full((3, 3), np.nan)
        seen = set()
        for key, column in raw_pairs.items():
            c = _pair_key(key)
            if c in seen:
                raise SchemaError(f"pair {PAIR_LABELS[c]} given twice", field=f"pairs.{key}")
            seen.add(c)
            pairs[:, c] = _vector(column, f"pairs.{key}")
        missing = [PAIR_LABELS[c] for c in range(3) if c not in seen]
        if missing:
            raise SchemaError(f"missing pair columns {missing}", field="pairs")
        b_priors = None
        if doc.get("b_priors") is not None:
            b_priors = _vector(doc["b_priors"], "b_priors")
        return cls(priors, singles, pairs, b_priors)


def _number(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"expected a number, got {value!r}", field=name)
    return float(value)


def _vector(value, name):
    if not isinstance(value, list) or len(value) != 3:
        raise SchemaError("expected an array of 3 numbers", field=name)
    return np.array([_number(v, f"{name}[{k}]") for k, v in enumerate(value)])


def _matrix(value, name):
    if not isinstance(value, list) or len(value) != 3:
        raise SchemaError("expected a 3x3 array", field=name)
    return np.array([_vector(row, f"{name}[{k}]") for k, row in enumerate(value)])


def _pair_key(key) -> int:
    text = str(key).strip()
    if len(text) != 2 or not text.isdigit():
        raise SchemaError(f"bad pair label {key!r}", field=f"pairs.{key}")
    i, j = int(text[0]) - 1, int(text[1]) - 1
    if i == j or not (0 <= i < 3 and 0 <= j < 3):
        raise SchemaError(f"bad pair label {key!r}", field=f"pairs.{key}")
    return pair_index(i, j)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """One constraint.  Interval checks report a signed margin as residual
    (negative inside the interval); equality checks report ``|lhs - rhs|``."""

    constraint: str
    residual: float
    tolerance: float
    passed: bool


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"{'ok  ' if c.passed else 'FAIL'} {c.constraint:<28} residual={c.residual:.3e} tol={c.tolerance:.1e}")
        lines.append(f"verdict: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"constraint": c.constraint, "residual": c.residual, "tolerance": c.tolerance, "passed": c.passed}
                for c in self.checks
            ],
        }


def validate(data: ContextData, tol: float = DEFAULT_TOL) -> ValidationReport:
    """Check probability ranges and normalisations; failures are reported, not raised.

    Probabilities must satisfy ``tol < p < 1 - tol``; sums must be within
    ``tol`` of 1.
    """
    report = ValidationReport()
    add = report.checks.append

    def interval(name, p):
        p = float(p)
        margin = max(tol - p, p - (1.0 - tol)) if math.isfinite(p) else math.inf
        add(Check(name, margin, tol, margin < 0.0))

    def total(name, values):
        r = abs(float(np.sum(values)) - 1.0)
        r = r if math.isfinite(r) else math.inf
        add(Check(name, r, tol, r <= tol))

    for i, p in enumerate(data.priors):
        interval(f"priors[{i + 1}] in (0,1)", p)
    total("priors sum to 1", data.priors)
    for l in range(3):
        for i in range(3):
            interval(f"singles[{l + 1},{i + 1}] in (0,1)", data.singles[l, i])
    for i in range(3):
        total(f"singles column {i + 1} sums to 1", data.singles[:, i])
    for l in range(3):
        total(f"singles row {l + 1} sums to 1", data.singles[l, :])
    for c, lab in enumerate(PAIR_LABELS):
        for l in range(3):
            interval(f"pairs[{l + 1},{lab}] in (0,1)", data.pairs[l, c])
        total(f"pairs {lab} sum to 1", data.pairs[:, c])
    if data.b_priors is not None:
        for l, p in enumerate(data.b_priors):
            interval(f"b_priors[{l + 1}] in (0,1)", p)
        total("b_priors sum to 1", data.b_priors)
    return report


# -- quantum side ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuantumSide:
    """An a-basis (columns, in canonical b-basis coordinates) and a state.

    ``basis[l, i]`` and ``state[l]`` are parts arrays (trailing ``(x, y)``).
    """

    basis: np.ndarray
    state: np.ndarray
    field: Field

    def __post_init__(self):
        object.__setattr__(self, "field", Field.parse(self.field))
        basis = np.array(self.basis, dtype=float)
        state = np.array(self.state, dtype=float)
        if basis.shape != (3, 3, 2) or state.shape != (3, 2):
            raise ValueError(f"expected basis (3,3,2) and state (3,2), got {basis.shape} and {state.shape}")
        basis.setflags(write=False)
        state.setflags(write=False)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "state", state)

    @classmethod
    def from_values(cls, basis, state, field) -> "QuantumSide":
        """Build from complex numbers or :class:`HyperbolicNumber` objects."""
        return cls(to_parts(basis, field), to_parts(state, field), field)

    def gram(self) -> np.ndarray:
        """``G[i, k] = <e_i|e_k>`` as parts."""
        cols = np.swapaxes(self.basis, 0, 1)
        return np.stack([np.stack([braket(cols[i], cols[k], self.field) for k in range(3)]) for i in range(3)])

    def residuals(self) -> dict:
        g = self.gram()
        g[[0, 1, 2], [0, 1, 2], 0] -= 1.0
        return {
            "state_norm": abs(float(sq_abs(self.state, self.field).sum()) - 1.0),
            "orthonormality": float(np.abs(g).max()),
        }

    def is_valid(self, tol: float = 1e-10) -> bool:
        return all(r <= tol for r in self.residuals().values())


def born_tables(q: QuantumSide):
    """Raw ``(priors, b_priors, singles, pair_num)`` for one quantum side."""
    out = kernels.born_tables(q.basis[None], q.state[None], q.field.sigma)
    return tuple(a[0] for a in out)


def from_quantum(q: QuantumSide, tol: float = DEFAULT_TOL) -> ContextData:
    """Born-rule probabilities generated by a basis and a state.

    Raises :class:`NonProbability` when a value lands outside ``(0, 1)``
    (with margin ``tol``), which the hyperbolic field allows, and
    :class:`DegenerateDenominator` when a pair has vanishing total prior.
    Values are never clamped.
    """
    priors, b_priors, singles, pair_num = born_tables(q)

    def check(name, values):
        for idx, p in np.ndenumerate(values):
            if not (tol < p < 1.0 - tol):
                label = ",".join(str(k + 1) for k in idx)
                raise NonProbability(f"{name}[{label}] = {p!r} is not a probability")

    check("priors", priors)
    check("b_priors", b_priors)
    check("singles", singles)
    pairs = np.empty((3, 3))
    for c, (k, j) in enumerate(PAIRS):
        den = priors[k] + priors[j]
        if den <= tol:
            raise DegenerateDenominator(f"p_a[{k + 1}] + p_a[{j + 1}] = {den!r}", location=PAIR_LABELS[c])
        pairs[:, c] = pair_num[:, c] / den
    check("pairs", pairs)
    return ContextData(priors, singles, pairs, b_priors)


# -- files ----------------------------------------------------------------


def dumps(data: ContextData) -> str:
    return json.dumps(data.to_dict(), indent=2) + "\n"


def loads(text: str) -> ContextData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return ContextData.from_dict(doc)


def save(data: ContextData, path) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")


def load(path) -> ContextData:
    return loads(Path(path).read_text(encoding="utf-8"))
