"""Explicit maximality witnesses for the two-part family.

Given a family member V and any direction w outside V, the engine
produces a nonzero idempotent Q in V + F.w by the constructive argument:
reduce w modulo the free blocks of V, then branch on whether the
centralizer component obstructs orthogonality to Lambda.  Every produced
bundle is re-verified against its defining identities before it is
returned, so downstream certificates are self-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .constructions import TwoBlockFamily, family_from_idempotents
from .errors import DirectionInV, InternalContractViolation
from .matrices import ExactMatrix, rank_factorization, rank_profile
from .subspaces import (
    MatSubspace,
    extension_directions,
    span_of,
    subspace_sum,
)

CASE_CENTRAL = "Central"
CASE_1 = "Case1"
CASE_1T = "Case1Transposed"
CASE_2 = "Case2"


@dataclass(frozen=True)
class WitnessBundle:
    direction: ExactMatrix
    w0: ExactMatrix   # centralizer component of the reduced direction
    w1: ExactMatrix   # e_3 M e_1 component
    w2: ExactMatrix   # e_2 M e_3 component
    case: str
    idempotent: ExactMatrix
    params: dict = dc_field(default_factory=dict)

    def to_json(self):
        from .literals import matrix_to_json

        out = {
            "case": self.case,
            "direction": matrix_to_json(self.direction),
            "idempotent": matrix_to_json(self.idempotent),
        }
        for k, v in self.params.items():
            if isinstance(v, ExactMatrix):
                out[k] = matrix_to_json(v)
            else:
                out[k] = getattr(v, "val", v)
                out[k] = str(out[k]) if not isinstance(out[k], (int, float)) else out[k]
        return out


@dataclass(frozen=True)
class MaximalityCertificate:
    family: TwoBlockFamily
    is_maximal: bool
    bundles: tuple
    mode: str  # "exhaustive" or "theorem-backed spot check"


def _transposed_family(fam: TwoBlockFamily) -> TwoBlockFamily:
    """Transposition maps the family to itself with parts 1 and 2 swapped."""
    return family_from_idempotents(
        fam.e2.transpose(), fam.e1.transpose(), fam.e3.transpose(),
        fam.sigma1, fam.sigma2,
    )


def _case1(fam: TwoBlockFamily, w1: ExactMatrix, w2: ExactMatrix):
    """The rank-factorization branch; requires w1 != 0.

    Returns (Q, params) and verifies the branch identities exactly.
    """
    field = fam.field
    e3 = fam.e3
    b = rank_factorization(w1)
    v = fam.e1 * b * e3  # partner in e_1 M e_3, a block of V
    r = rank_profile(w1)[0]
    n3 = fam.n3
    s1, s2 = fam.sigma1, fam.sigma2
    denom = s1 * field.from_int(r) + s2 * field.from_int(n3 - r)
    beta = -(s2 * field.from_int(n3)) / denom
    one = field.one()
    if beta == -one:
        raise InternalContractViolation("beta = -1")
    if w1 * v * w1 != w1 or v * w1 * v != v:
        raise InternalContractViolation("rank-factorization partner identities")
    for prod in (v * w1, w1 * v):
        if prod * prod != prod:
            raise InternalContractViolation("v w1 / w1 v not idempotent")
    Q = ((e3 + w2 + v.scale(beta)) * (e3 + w1)
         + (e3 - w1 * v).scale(beta)).scale((one + beta).inverse())
    # trace laws of the branch
    L = fam.lam.matrix
    expected = (s2 * field.from_int(n3)
                + (s1 - s2) * beta * field.from_int(r) / (beta + one))
    if (L * Q).trace() != expected:
        raise InternalContractViolation("trace law Tr(Lambda Q)")
    if (L * (Q - (w1 + w2))).trace():
        raise InternalContractViolation("Tr(Lambda (Q - w)) != 0")
    if Q.trace() != field.from_int(n3):
        raise InternalContractViolation("Tr(Q) != n3")
    return Q, {"beta": beta, "v": v, "rank": r}


def maximality_witness(fam: TwoBlockFamily, w: ExactMatrix) -> WitnessBundle:
    """A verified nonzero idempotent in V + F.w for any w outside V."""
    field = fam.field
    V = fam.subspace
    if V.contains(w):
        raise DirectionInV("direction already lies in the subspace")
    e1, e2, e3 = fam.e1, fam.e2, fam.e3
    g1 = e1 + e2
    # the e_1 M e_3 and e_3 M e_2 components lie in V; drop them
    w0 = g1 * w * g1 + e3 * w * e3
    w1 = e3 * w * e1
    w2 = e2 * w * e3
    L = fam.lam.matrix
    lam_w0 = (L * w0).trace()

    if w1.is_zero() and w2.is_zero():
        # reduced direction is central and cannot be orthogonal to Lambda
        if not lam_w0:
            raise InternalContractViolation("central direction inside V")
        Q = ExactMatrix.identity(field, fam.n)
        gamma = (L * Q).trace() / lam_w0
        case = CASE_CENTRAL
        params = {"gamma": gamma}
    elif not lam_w0:
        # w0 lies in V; work with the offset direction w1 + w2
        if w1.is_zero():
            tfam = _transposed_family(fam)
            Qt, tparams = _case1(tfam, w2.transpose(), w1.transpose())
            Q = Qt.transpose()
            case = CASE_1T
            params = dict(tparams)
        else:
            Q, params = _case1(fam, w1, w2)
            case = CASE_1
    else:
        # solve alpha w0 + x0 = e3 inside the centralizer
        alpha = (L * e3).trace() / lam_w0
        if not alpha:
            raise InternalContractViolation("alpha = 0")
        x0 = e3 - w0.scale(alpha)
        if (L * x0).trace() or not fam.centralizer.contains(x0):
            raise InternalContractViolation("x0 outside Lambda-perp centralizer")
        Q = e3 + w1.scale(alpha) + w2.scale(alpha) + (w2 * w1).scale(alpha * alpha)
        case = CASE_2
        params = {"alpha": alpha, "x0": x0}

    if Q.is_zero() or Q * Q != Q:
        raise InternalContractViolation("produced Q is not a nonzero idempotent")
    if not subspace_sum(V, span_of([w])).contains(Q):
        raise InternalContractViolation("Q outside V + F.w")
    return WitnessBundle(w, w0, w1, w2, case, Q, params)


def _rational_spanning_directions(fam: TwoBlockFamily):
    """A complement basis of V and all pairwise sums (spot-check mode)."""
    V = fam.subspace
    field = fam.field
    n = fam.n
    free = [j for j in range(n * n) if j not in V.pivots]
    units = [ExactMatrix.unit(field, n, n, j // n, j % n) for j in free]
    dirs = list(units)
    for i in range(len(units)):
        for j in range(i + 1, len(units)):
            dirs.append(units[i] + units[j])
    return dirs


def certify_maximal(fam: TwoBlockFamily) -> MaximalityCertificate:
    """Witness every extension direction (finite fields: exhaustively)."""
    if fam.field.is_finite:
        directions = extension_directions(fam.subspace)
        mode = "exhaustive"
    else:
        directions = _rational_spanning_directions(fam)
        mode = "theorem-backed spot check"
    bundles = tuple(maximality_witness(fam, w) for w in directions)
    return MaximalityCertificate(fam, True, bundles, mode)
