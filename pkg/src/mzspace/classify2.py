"""Classification machinery for M_2(F): predicted maximal families,
invertibility/spectrum checks and the base-change demonstration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .constructions import build_cor26
from .errors import (
    ExcludedParameter,
    NotAnMS,
    NotNilpotent,
    ParameterViolation,
    SquareParameter,
    UnsupportedField,
)
from .fields import FieldSpec, Scalar
from .matrices import ExactMatrix, rank_profile
from .mscore import MS_PROPER, ms_by_idempotent_criterion, trace_zero_space
from .subspaces import MatSubspace, span_of

KIND_TRACE_ZERO = "TraceZeroHyperplane"
KIND_SPLIT_DIAG = "SplitDiagonalPlusNilpotent"
KIND_UNIPOTENT = "UnipotentLine"
KIND_CHAR2_PLANE = "Char2PlaneInH"


# ---------------------------------------------------------------------------
# eigenvalue helpers (2x2, over the given field only)


def char_poly_roots(a: ExactMatrix):
    """Roots in the base field of x^2 - Tr(a) x + det(a) (finite fields)."""
    field = a.field
    t = a.trace()
    d = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    return [x for x in field.elements() if x * x - t * x + d == field.zero()]


def splits_with_distinct_roots(a: ExactMatrix) -> bool:
    return len(char_poly_roots(a)) == 2


# ---------------------------------------------------------------------------
# Lemma-style property report


@dataclass(frozen=True)
class InvertibilityReport:
    invertibility_holds: bool
    invertibility_violations: tuple
    distinct_split_spectra: bool
    spectrum_violations: tuple
    applicable: bool  # the spectrum clause applies only in dimension 2


def lemma31_check(V: MatSubspace, verdict=None) -> InvertibilityReport:
    """Check trace-nonzero elements of an MS of M_2 for invertibility.

    Part one (asserted over any field): every a in V with Tr(a) != 0 is
    invertible.  Part two (reported only; closure-dependent): in
    dimension 2, whether every such a has two distinct eigenvalues in the
    base field.
    """
    if V.n != 2:
        raise UnsupportedField("this check is specific to M_2")
    if verdict is None:
        verdict = ms_by_idempotent_criterion(V)
    if not verdict.is_ms or verdict.status != MS_PROPER:
        raise NotAnMS("the subspace is not a proper MS")
    inv_viol = []
    spec_viol = []
    for a in V.elements():
        if not a.trace():
            continue
        if rank_profile(a)[0] != 2:
            inv_viol.append(a)
        if V.dim == 2 and not splits_with_distinct_roots(a):
            spec_viol.append(a)
    return InvertibilityReport(
        invertibility_holds=not inv_viol,
        invertibility_violations=tuple(inv_viol),
        distinct_split_spectra=not spec_viol,
        spectrum_violations=tuple(spec_viol),
        applicable=V.dim == 2,
    )


# ---------------------------------------------------------------------------
# family builders


def build_cor32_family(lam1, lam2, g: ExactMatrix) -> MatSubspace:
    """The conjugated split-diagonal plane g {diag(l1 s, l2 s) + t E12} g^-1."""
    field = g.field
    lam1 = field.scalar(lam1)
    lam2 = field.scalar(lam2)
    if not lam1 or not lam2:
        raise ParameterViolation("eigenvalue parameters must be nonzero")
    if lam1 == lam2:
        raise ParameterViolation("eigenvalue parameters must be distinct")
    if not (lam1 + lam2):
        raise ParameterViolation("eigenvalue parameters must not sum to zero")
    if rank_profile(g)[0] != 2:
        raise ParameterViolation("conjugator must be invertible")
    ginv = _inverse2(g)
    e1 = g * ExactMatrix.unit(field, 2, 2, 0, 0) * ginv
    e2 = g * ExactMatrix.unit(field, 2, 2, 1, 1) * ginv
    top = g * ExactMatrix.unit(field, 2, 2, 0, 1) * ginv  # spans e1 M e2
    return span_of([e1.scale(lam1) + e2.scale(lam2), top])


def _inverse2(g: ExactMatrix) -> ExactMatrix:
    d = g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]
    dinv = d.inverse()
    return ExactMatrix(g.field, 2, 2,
                       (g[1, 1] * dinv, -g[0, 1] * dinv,
                        -g[1, 0] * dinv, g[0, 0] * dinv))


def build_cor34_family(c: ExactMatrix) -> MatSubspace:
    """The line F(I_2 + c) for a nonzero square-zero c."""
    if c.is_zero() or not (c * c).is_zero():
        raise NotNilpotent("parameter must be nonzero with c^2 = 0")
    return span_of([ExactMatrix.identity(c.field, c.nrows) + c])


# ---------------------------------------------------------------------------
# predicted maximal families


@dataclass(frozen=True)
class PredictedFamily:
    kind: str
    subspace: MatSubspace
    closure_dependent: bool = False


def _gl2(field: FieldSpec):
    for entries in itertools.product(list(field.elements()), repeat=4):
        g = ExactMatrix(field, 2, 2, entries)
        if g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]:
            yield g


def _admissible_lambda_pairs(field: FieldSpec):
    nonzero = [x for x in field.elements() if x]
    for l1, l2 in itertools.product(nonzero, repeat=2):
        if l1 != l2 and (l1 + l2):
            yield l1, l2


def _cor32_planes(field: FieldSpec):
    seen = {}
    for l1, l2 in _admissible_lambda_pairs(field):
        for g in _gl2(field):
            V = build_cor32_family(l1, l2, g)
            seen.setdefault(V, None)
    return list(seen)


def predicted_maximal_families(field: FieldSpec, n: int = 2):
    """The classified maximal-MS candidates of M_2 over a finite field.

    Characteristic != 2: the trace-zero hyperplane, all split-diagonal
    planes, and all unipotent lines (the latter flagged closure-dependent).
    Characteristic 2: all planes inside H avoiding I_2, plus the
    split-diagonal planes (empty over F_2 and F_3 for lack of admissible
    eigenvalue pairs).
    """
    if n != 2:
        raise UnsupportedField("classification is for n = 2 only")
    if not field.is_finite:
        raise UnsupportedField("family enumeration needs a finite field")
    out = []
    if field.characteristic != 2:
        out.append(PredictedFamily(KIND_TRACE_ZERO, trace_zero_space(2, field)))
        for V in _cor32_planes(field):
            out.append(PredictedFamily(KIND_SPLIT_DIAG, V))
        seen = set()
        for entries in itertools.product(list(field.elements()), repeat=4):
            c = ExactMatrix(field, 2, 2, entries)
            if not c.is_zero() and (c * c).is_zero():
                V = build_cor34_family(c)
                if V not in seen:
                    seen.add(V)
                    out.append(PredictedFamily(KIND_UNIPOTENT, V,
                                               closure_dependent=True))
    else:
        H = trace_zero_space(2, field)
        I2 = ExactMatrix.identity(field, 2)
        from .census import enumerate_mat_subspaces

        for V in enumerate_mat_subspaces(field, 2, 2):
            if all(H.contains(b) for b in V.basis) and not V.contains(I2):
                out.append(PredictedFamily(KIND_CHAR2_PLANE, V))
        for V in _cor32_planes(field):
            out.append(PredictedFamily(KIND_SPLIT_DIAG, V))
    return out


# ---------------------------------------------------------------------------
# base-change demonstration


@dataclass(frozen=True)
class BaseChangeDemo:
    base_field: FieldSpec
    s: Scalar
    a: ExactMatrix
    b: ExactMatrix
    subspace: MatSubspace
    base_is_ms: bool
    base_is_maximal: bool
    extension_field: FieldSpec
    extended_subspace: MatSubspace
    idempotent: ExactMatrix


def basechange_demo(K: FieldSpec, s) -> BaseChangeDemo:
    """An MS of M_2(K) that stops being one over K(sqrt(s)).

    V = span{diag(1, s), antidiag(1, 1)} has only invertible nonzero
    elements when s is a nonsquare, so it is an idempotent-free maximal
    MS; adjoining sqrt(s) produces the explicit idempotent
    (1+s)^-1 (a + sqrt(s) b) inside the extended span.
    """
    s = K.scalar(s)
    one = K.one()
    if not s or s == one or s == -one:
        raise ExcludedParameter("s must avoid 0, 1 and -1")
    if s.is_square():
        raise SquareParameter("s is a square in the base field")
    a = ExactMatrix.diagonal(K, [one, s])
    b = ExactMatrix(K, 2, 2, (K.zero(), one, one, K.zero()))
    V = span_of([a, b])

    # det(x a + y b) = s x^2 - y^2, nonzero for (x, y) != 0 as s is a nonsquare
    if K.is_finite:
        base_is_ms = all(
            m.is_zero() or rank_profile(m)[0] == 2 for m in V.elements()
        )
    else:
        base_is_ms = True  # certified by the nonsquare determinant argument
    # maximal: any strictly larger proper MS would have dimension 3, i.e. be
    # the trace-zero hyperplane, but Tr(a) = 1 + s != 0 keeps V outside it
    base_is_maximal = base_is_ms and bool(a.trace())

    if K.extension_degree != 1:
        raise UnsupportedField("base field must be a prime field or Q")
    if K.characteristic:
        L = FieldSpec(K.characteristic, 2, (-s.val % K.characteristic, 0, 1))
    else:
        L = FieldSpec(0, 2, (-s.val, Fraction(0), Fraction(1)))
    sqrt_s = L.generator()
    aL = ExactMatrix(L, 2, 2, [L.scalar(e.val) for e in a.entries])
    bL = ExactMatrix(L, 2, 2, [L.scalar(e.val) for e in b.entries])
    U = span_of([aL, bL])
    c = (aL + bL.scale(sqrt_s)).scale((L.one() + L.scalar(s.val)).inverse())
    if c * c != c or c.is_zero() or not U.contains(c):
        raise UnsupportedField("internal error building the extension idempotent")
    return BaseChangeDemo(K, s, a, b, V, base_is_ms, base_is_maximal,
                          L, U, c)
