"""Mathieu-Zhao verdicts for subspaces of M_n(F) over finite fields.

Two independent deciders are provided and cross-checked by the census:

* the idempotent criterion (a proper subspace is an MS iff it contains no
  nonzero idempotent), decided by exhaustive scan;
* a literal brute-force check of the defining eventual-membership
  property, using power tails to make "for all m >= N" finite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BudgetExceeded, UnsupportedField
from .fields import FieldSpec
from .matrices import ExactMatrix, power_tail
from .subspaces import MatSubspace, span_of, trace_orthogonal

DEFAULT_BUDGET = 10_000_000

MS_PROPER = "MS_Proper"
MS_FULL = "MS_FullAlgebra"
NOT_MS = "NotMS"


@dataclass(frozen=True)
class MsVerdict:
    status: str
    witness: ExactMatrix = None
    method: str = "IdempotentScan"
    evidence: dict = None

    @property
    def is_ms(self) -> bool:
        return self.status in (MS_PROPER, MS_FULL)


@dataclass(frozen=True)
class MaximalityVerdict:
    is_maximal: bool
    evidence: tuple = ()
    reason: str = ""


# ---------------------------------------------------------------------------
# idempotent scanning


def _scan_prime_numpy(S: MatSubspace, chunk: int = 1 << 15):
    """Exhaustive idempotent scan over a prime field, vectorized.

    Coefficient tuples are enumerated in lexicographic order with the
    first basis coefficient most significant, matching the generic path,
    so the returned witness is deterministic.
    """
    p = S.field.characteristic
    d = S.dim
    n = S.n
    basis = np.array([[e.val for e in row] for row in S.rows], dtype=np.int64)
    total = p ** d
    weights = np.array([p ** (d - 1 - i) for i in range(d)], dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (idx[:, None] // weights[None, :]) % p
        E = (coeffs @ basis) % p
        Em = E.reshape(-1, n, n)
        sq = np.einsum("nij,njk->nik", Em, Em) % p
        ok = np.all(sq == Em, axis=(1, 2)) & np.any(Em != 0, axis=(1, 2))
        hits = np.nonzero(ok)[0]
        if hits.size:
            e = Em[hits[0]]
            return ExactMatrix(S.field, n, n,
                               [int(x) for x in e.reshape(-1)])
    return None


def _scan_generic(S: MatSubspace):
    for e in S.elements():
        if not e.is_zero() and e * e == e:
            return e
    return None


def find_idempotent(S: MatSubspace, budget: int = DEFAULT_BUDGET):
    """Some nonzero idempotent of S, or None; exhaustive over q^dim tuples."""
    field = S.field
    if not field.is_finite:
        raise UnsupportedField("idempotent scan needs a finite field")
    if field.order ** S.dim > budget:
        raise BudgetExceeded(
            f"{field.order}^{S.dim} elements exceed budget {budget}")
    if S.dim == 0:
        return None
    if field.extension_degree == 1:
        return _scan_prime_numpy(S)
    return _scan_generic(S)


def ms_by_idempotent_criterion(S: MatSubspace,
                               budget: int = DEFAULT_BUDGET) -> MsVerdict:
    """MS verdict by idempotent-freeness; the full algebra is an ideal."""
    if S.is_full:
        return MsVerdict(MS_FULL, method="IdempotentScan")
    e = find_idempotent(S, budget)
    if e is None:
        return MsVerdict(MS_PROPER, method="IdempotentScan")
    return MsVerdict(NOT_MS, witness=e, method="IdempotentScan")


# ---------------------------------------------------------------------------
# the definition, checked literally


def _qualifies(S: MatSubspace, a: ExactMatrix):
    """If every power of a lies in S, return its power tail, else None."""
    tail = power_tail(a)
    # exponents 1 .. preperiod+period-1 cover all distinct powers
    cur = a
    for _ in range(tail.preperiod + tail.period - 1):
        if not S.contains(cur):
            return None
        cur = cur * a
    return tail

def _all_matrices(field: FieldSpec, n: int):
    scalars = list(field.elements())
    for entries in itertools.product(scalars, repeat=n * n):
        yield ExactMatrix(field, n, n, entries)


def ms_by_definition(S: MatSubspace, element_budget: int = DEFAULT_BUDGET,
                     pair_budget: int = DEFAULT_BUDGET) -> MsVerdict:
    """Literal brute force over the defining property.

    For each a whose powers all stay in S, the products b a^m c must land
    in S for all large m; since powers are eventually periodic this holds
    iff it holds for every m in one full cycle.  b and c range over the
    whole algebra.  When the cycle of a is {0} every product is 0, which
    is in S, so the pair loop is skipped.
    """
    field = S.field
    if not field.is_finite:
        raise UnsupportedField("the brute-force checker needs a finite field")
    q = field.order
    n = S.n
    if q ** S.dim > element_budget:
        raise BudgetExceeded("too many subspace elements")
    if q ** (2 * n * n) > pair_budget:
        raise BudgetExceeded("too many (b, c) pairs")
    if S.is_full:
        return MsVerdict(MS_FULL, method="DefinitionBruteForce")
    for a in S.elements():
        tail = _qualifies(S, a)
        if tail is None:
            continue
        cycle = [(tail.preperiod + i, m) for i, m in enumerate(tail.cycle)]
        if all(m.is_zero() for _, m in cycle):
            continue  # b 0 c = 0 lies in every subspace
        for b in _all_matrices(field, n):
            for c in _all_matrices(field, n):
                for exp, am in cycle:
                    if not S.contains(b * am * c):
                        return MsVerdict(
                            NOT_MS,
                            method="DefinitionBruteForce",
                            evidence={"a": a, "b": b, "c": c, "m": exp},
                        )
    return MsVerdict(MS_PROPER, method="DefinitionBruteForce")


# ---------------------------------------------------------------------------


def trace_zero_space(n: int, field: FieldSpec) -> MatSubspace:
    """H = I_n^perp, the trace-zero matrices."""
    return trace_orthogonal(span_of([ExactMatrix.identity(field, n)]))


def is_maximal_ms(S: MatSubspace, budget: int = DEFAULT_BUDGET) -> MaximalityVerdict:
    """Maximal among proper MSs: every one-step extension fails to be one."""
    from .subspaces import extension_directions, subspace_sum

    verdict = ms_by_idempotent_criterion(S, budget)
    if verdict.status != MS_PROPER:
        return MaximalityVerdict(False, reason=f"not a proper MS ({verdict.status})")
    evidence = []
    for w in extension_directions(S):
        ext = subspace_sum(S, span_of([w]))
        if ext.is_full:
            evidence.append((w, "extension is full algebra"))
            continue
        e = find_idempotent(ext, budget)
        if e is None:
            return MaximalityVerdict(
                False, evidence=tuple(evidence),
                reason="idempotent-free proper extension exists",
            )
        evidence.append((w, e))
    return MaximalityVerdict(True, evidence=tuple(evidence))
