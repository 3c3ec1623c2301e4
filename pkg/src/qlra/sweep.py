"""Randomised sweeps over the basis family and the closed-form oracle check.

Direct probabilities for all instances go through one batched kernel call;
records keep instance order so results do not depend on evaluation order.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from . import kernels
from .basis_family import (
    Ranges,
    build_basis,
    build_state,
    closed_form_pairs,
    closed_form_priors,
    closed_form_singles,
    instance_seed,
    random_instance,
)
from .context_data import PAIRS, ContextData
from .errors import QLRAError
from .interference import InterferenceClass, table as interference_table
from .representation import represent
from .scalars import Field

ORACLE_RTOL = 1e-9
BORN_TOL = 1e-8
UNITARY_TOL = 1e-10


def _direct_batch(instances, field: Field):
    bases = np.stack([build_basis(ri.basis) for ri in instances])
    states = np.stack([build_state(ri.state, field) for ri in instances])
    priors, b_priors, singles, pair_num = kernels.born_tables(bases, states, field.sigma)
    pairs = np.empty_like(pair_num)
    for c, (k, j) in enumerate(PAIRS):
        pairs[:, :, c] = pair_num[:, :, c] / (priors[:, k] + priors[:, j])[:, None]
    gram = kernels.gram_residual(bases, field.sigma)
    return priors, b_priors, singles, pairs, gram


def _rel(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float((np.abs(a - b) / np.abs(b)).max())


@dataclass
class SweepRecord:
    index: int
    seed: int
    field: str
    attempts: int
    a23: float
    a32: float
    a33: float
    eps23: int
    eps32: int
    eps33: int
    u: float
    s: float
    t: float
    v: tuple
    gamma: tuple
    priors: list
    b_priors: list
    pairs: list
    interference_class: str = ""
    admissible: bool = False
    error: str = ""
    oracle_rel: float = float("nan")
    basis_gram: float = float("nan")
    unitarity: float = float("nan")
    born: float = float("nan")

    def flat(self) -> dict:
        row = {k: v for k, v in asdict(self).items() if k not in ("v", "gamma", "priors", "b_priors", "pairs")}
        for n, x in enumerate(self.v, 1):
            row[f"v{n}"] = x
        for n, x in enumerate(self.gamma, 1):
            row[f"gamma{n}"] = x
        for n, x in enumerate(self.priors, 1):
            row[f"p_a{n}"] = x
        for n, x in enumerate(self.b_priors, 1):
            row[f"p_b{n}"] = x
        for l in range(3):
            for c, lab in enumerate(("12", "13", "23")):
                row[f"p_b{l + 1}_a{lab}"] = self.pairs[l][c]
        return row


@dataclass
class SweepResult:
    field: str
    seed: int
    records: list
    stats: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        rows = [r.flat() for r in self.records]
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["index"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"field": self.field, "seed": self.seed, "stats": self.stats,
               "records": [asdict(r) for r in self.records]}
        return json.dumps(doc, indent=2, allow_nan=True) + "\n"


def evaluate(count: int, seed: int, field: Field | str = Field.HYPERBOLIC, ranges: Ranges = Ranges(),
             max_attempts: int = 100_000) -> SweepResult:
    """Draw ``count`` admissible instances and run the oracle and solver on each."""
    if count < 1:
        raise ValueError("count must be at least 1")
    field = Field.parse(field)
    instances = [random_instance(instance_seed(seed, k), ranges, field, max_attempts) for k in range(count)]
    priors, b_priors, singles, pairs, gram = _direct_batch(instances, field)
    expected = InterferenceClass.TRIGONOMETRIC if field is Field.COMPLEX else InterferenceClass.HYPERBOLIC
    records = []
    for k, ri in enumerate(instances):
        bp, sp = ri.basis, ri.state
        rec = SweepRecord(
            k, ri.seed, field.value, ri.attempts, bp.a23, bp.a32, bp.a33, bp.eps23, bp.eps32, bp.eps33,
            bp.u, bp.s, bp.t, sp.v, sp.gamma,
            priors[k].tolist(), b_priors[k].tolist(), pairs[k].tolist(),
        )
        rec.basis_gram = float(gram[k])
        try:
            rec.oracle_rel = max(
                _rel(closed_form_priors(bp, sp), priors[k]),
                _rel(closed_form_singles(bp), singles[k]),
                _rel(closed_form_pairs(bp, sp), pairs[k]),
            )
        except QLRAError as exc:
            rec.error = f"closed form: {exc}"
        data = ContextData(priors[k], singles[k], pairs[k], b_priors[k])
        try:
            rep = represent(data)
        except QLRAError as exc:
            rec.error = rec.error or f"{type(exc).__name__}: {exc}"
            try:
                rec.interference_class = interference_table(data).kind.value
            except QLRAError:
                pass
        else:
            rec.interference_class = rep.table.kind.value
            rec.admissible = True
            rec.unitarity = float(rep.diagnostics["unitarity_residual"])
            rec.born = float(rep.diagnostics["born_vs_b_priors"])
        records.append(rec)
    attempts = sum(r.attempts for r in records)

    def worst(name):
        vals = [getattr(r, name) for r in records if np.isfinite(getattr(r, name))]
        return max(vals) if vals else float("nan")

    classes = {c.value: sum(r.interference_class == c.value for r in records) for c in InterferenceClass}
    stats = {
        "count": count,
        "draws": attempts,
        "acceptance_rate": count / attempts,
        "expected_class": expected.value,
        "classes": classes,
        "admissible": sum(r.admissible for r in records),
        "max_oracle_rel": worst("oracle_rel"),
        "max_basis_gram": worst("basis_gram"),
        "max_unitarity": worst("unitarity"),
        "max_born": worst("born"),
    }
    return SweepResult(field.value, int(seed), records, stats)


def first_failure(result: SweepResult):
    """First record breaking an oracle, unitarity or round-trip tolerance, or ``None``."""
    expected = result.stats["expected_class"]
    for r in result.records:
        ok = (
            not r.error
            and r.admissible
            and r.interference_class == expected
            and r.oracle_rel <= ORACLE_RTOL
            and r.basis_gram <= UNITARY_TOL
            and r.unitarity <= UNITARY_TOL
            and r.born <= BORN_TOL
        )
        if not ok:
            return r
    return None
