"""Exhaustive subspace enumeration and MS censuses at desk scale.

Subspaces of F_q^d are enumerated through reduced-echelon pivot patterns
and free-entry assignments, so each subspace appears exactly once and the
per-dimension totals are the Gaussian binomial coefficients.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceeded
from .fields import FieldSpec
from .matrices import ExactMatrix, rref_vectors
from .mscore import (
    MS_PROPER,
    NOT_MS,
    find_idempotent,
    is_maximal_ms,
    ms_by_definition,
    ms_by_idempotent_criterion,
    trace_zero_space,
)
from .subspaces import MatSubspace, span_of

SCHEMA_VERSION = 1


def gaussian_binomial(d: int, k: int, q: int) -> int:
    """The number of k-dimensional subspaces of F_q^d."""
    if k < 0 or k > d:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(field: FieldSpec, d: int, k: int,
                        budget: int = 10_000_000):
    """All k-dimensional subspaces of F_q^d as canonical (rows, pivots).

    Enumerates pivot-column patterns and the free entries of the reduced
    echelon form; every subspace is yielded exactly once.
    """
    q = field.order
    total = gaussian_binomial(d, k, q)
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces exceed budget {budget}")
    z, o = field.zero(), field.one()
    scalars = list(field.elements())
    if k == 0:
        yield (), ()
        return
    for pivots in itertools.combinations(range(d), k):
        free = [
            (i, j)
            for i in range(k)
            for j in range(d)
            if j > pivots[i] and j not in pivots
        ]
        for values in itertools.product(scalars, repeat=len(free)):
            rows = [[z] * d for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = o
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows), tuple(pivots)


def enumerate_mat_subspaces(field: FieldSpec, n: int, k: int,
                            budget: int = 10_000_000):
    """All k-dimensional subspaces of M_n(F_q)."""
    for rows, pivots in enumerate_subspaces(field, n * n, k, budget):
        yield MatSubspace(field, n, rows, pivots)


def all_mat_subspaces(field: FieldSpec, n: int, budget: int = 10_000_000,
                      proper_only: bool = False):
    top = n * n if proper_only else n * n + 1
    for k in range(top):
        yield from enumerate_mat_subspaces(field, n, k, budget)


# ---------------------------------------------------------------------------


@dataclass
class CensusReport:
    field: FieldSpec
    n: int
    kind: str
    per_dim_subspaces: dict = dc_field(default_factory=dict)
    per_dim_ms: dict = dc_field(default_factory=dict)
    per_dim_maximal: dict = dc_field(default_factory=dict)
    disagreements: list = dc_field(default_factory=list)
    oracle_agreement: bool = True
    extras: list = dc_field(default_factory=list)
    misses: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def to_json(self):
        from .literals import field_to_json, subspace_to_json

        return {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "field": field_to_json(self.field),
            "n": self.n,
            "subspaces_per_dim": {str(k): v for k, v in sorted(self.per_dim_subspaces.items())},
            "ms_per_dim": {str(k): v for k, v in sorted(self.per_dim_ms.items())},
            "maximal_per_dim": {str(k): v for k, v in sorted(self.per_dim_maximal.items())},
            "oracle_agreement": self.oracle_agreement,
            "disagreements": [subspace_to_json(s) for s in self.disagreements],
            "extras": [subspace_to_json(s) for s in self.extras],
            "misses": [subspace_to_json(s) for s in self.misses],
            "details": self.details,
        }


def oracle_compare(n: int, field: FieldSpec, budget: int = 10_000_000) -> CensusReport:
    """Run both MS deciders on every proper subspace and record disagreements."""
    report = CensusReport(field, n, "oracle-compare")
    for S in all_mat_subspaces(field, n, budget, proper_only=True):
        report.per_dim_subspaces[S.dim] = report.per_dim_subspaces.get(S.dim, 0) + 1
        by_def = ms_by_definition(S)
        by_idem = ms_by_idempotent_criterion(S)
        if by_def.is_ms != by_idem.is_ms:
            report.disagreements.append(S)
        if by_idem.status == MS_PROPER:
            report.per_dim_ms[S.dim] = report.per_dim_ms.get(S.dim, 0) + 1
    report.oracle_agreement = not report.disagreements
    report.details["proper_subspaces"] = sum(report.per_dim_subspaces.values())
    return report


def hyperplane_census(n: int, field: FieldSpec, budget: int = 10_000_000):
    """Which codimension-1 subspaces of M_n are MSs; returns (count, list)."""
    hits = []
    total = 0
    for S in enumerate_mat_subspaces(field, n, n * n - 1, budget):
        total += 1
        if ms_by_idempotent_criterion(S, budget).status == MS_PROPER:
            hits.append(S)
    return total, hits


def ms_census(n: int, field: FieldSpec, budget: int = 10_000_000,
              compare_classification: bool = False) -> CensusReport:
    """MS / maximal-MS tallies over every subspace of M_n(F_q)."""
    report = CensusReport(field, n, "ms-census")
    ms_list = []
    maximal = []
    for S in all_mat_subspaces(field, n, budget):
        report.per_dim_subspaces[S.dim] = report.per_dim_subspaces.get(S.dim, 0) + 1
        verdict = ms_by_idempotent_criterion(S, budget)
        if verdict.status != MS_PROPER:
            continue
        report.per_dim_ms[S.dim] = report.per_dim_ms.get(S.dim, 0) + 1
        ms_list.append(S)
        if is_maximal_ms(S, budget).is_maximal:
            report.per_dim_maximal[S.dim] = report.per_dim_maximal.get(S.dim, 0) + 1
            maximal.append(S)
    report.details["ms_total"] = len(ms_list)
    report.details["maximal_total"] = len(maximal)
    if compare_classification and n == 2:
        from .classify2 import predicted_maximal_families

        predicted = predicted_maximal_families(field, 2)
        predicted_set = {p.subspace for p in predicted}
        census_set = set(maximal)
        report.extras = sorted(
            (S for S in census_set - predicted_set),
            key=lambda s: (s.dim, [e.val for row in s.rows for e in row].__repr__()),
        )
        report.misses = [
            p.subspace for p in predicted
            if not p.closure_dependent and p.subspace not in census_set
        ]
        report.details["predicted_total"] = len(predicted_set)
        report.details["predicted_by_kind"] = {}
        for p in predicted:
            kind = p.kind
            d = report.details["predicted_by_kind"]
            d[kind] = d.get(kind, 0) + 1
        report.details["closure_dependent_status"] = {
            "maximal": sum(1 for p in predicted
                           if p.closure_dependent and p.subspace in census_set),
            "not_maximal": sum(1 for p in predicted
                               if p.closure_dependent and p.subspace not in census_set),
        }
    report.details["maximal_subspaces"] = maximal
    return report


# ---------------------------------------------------------------------------
# sampled contrapositive of the low-codimension theorem


def random_subspace(field: FieldSpec, n: int, dim: int, rng: random.Random) -> MatSubspace:
    """A random dim-dimensional subspace of M_n (echelonized random spans)."""
    scalars = list(field.elements())
    while True:
        gens = [
            ExactMatrix(field, n, n, [rng.choice(scalars) for _ in range(n * n)])
            for _ in range(dim)
        ]
        S = span_of(gens, field=field, n=n)
        if S.dim == dim:
            return S


def debondt_sample(samples: int, seed: int, field: FieldSpec = None,
                   n: int = 3, codim: int = 2,
                   budget: int = 10_000_000) -> dict:
    """Sampled contrapositive check: random codim-2 subspaces of M_3(F_5)
    not inside the trace-zero hyperplane must contain a nonzero idempotent."""
    if field is None:
        field = FieldSpec(5)
    rng = random.Random(seed)
    H = trace_zero_space(n, field)
    dim = n * n - codim
    found = 0
    skipped = 0
    failures = []
    for _ in range(samples):
        while True:
            S = random_subspace(field, n, dim, rng)
            if not all(H.contains(b) for b in S.basis):
                break
            skipped += 1  # hypothesis requires V not inside H; resample
        e = find_idempotent(S, budget)
        if e is None:
            failures.append(S)
        else:
            found += 1
    return {
        "schema": SCHEMA_VERSION,
        "samples": samples,
        "seed": seed,
        "with_idempotent": found,
        "resampled_inside_H": skipped,
        "counterexamples": failures,
    }
