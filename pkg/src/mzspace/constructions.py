"""Idempotent frames, weight projections and the structural MS certifier.

A split torus generated by an orthogonal idempotent frame decomposes
M_n(F) into blocks e_i M_n e_j; grouping the frame into parts with
injective rational f-values selects a "positive triangular half" of the
block decomposition.  The certifier verifies the three hypotheses under
which a subspace is an MS with no idempotent scan:

  (i)  the integer-tuple sigma condition (no nonzero tuple of per-part
       block ranks pairs to zero against the part coefficients),
  (ii) V and pi_0(V) orthogonal to Lambda,
  (iii) products of positive-weight components of V vanish.

Builders for the lower-triangular family, its one-step extension, the
two-part family and its rank-r specialization live here; the maximality
witness engine for the two-part family is in :mod:`mzspace.maximality`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadBlocks,
    HypothesisFailed,
    InvalidPart,
    ProductZero,
    RankOutOfRange,
    SigmaConditionFailed,
)
from .fields import FieldSpec, Scalar
from .matrices import ExactMatrix, rank_profile
from .subspaces import MatSubspace, intersect, span_of, subspace_sum, trace_orthogonal


@dataclass(frozen=True)
class IdempotentFrame:
    """Orthogonal idempotents e_1..e_t summing to the identity."""

    idempotents: tuple

    def __post_init__(self):
        es = self.idempotents
        if not es:
            raise InvalidPart("frame needs at least one idempotent")
        n = es[0].nrows
        field = es[0].field
        for e in es:
            if e * e != e:
                raise InvalidPart("frame member is not idempotent")
        for i, a in enumerate(es):
            for j, b in enumerate(es):
                if i != j and not (a * b).is_zero():
                    raise InvalidPart("frame members are not orthogonal")
        total = ExactMatrix.zeros(field, n)
        for e in es:
            total = total + e
        if total != ExactMatrix.identity(field, n):
            raise InvalidPart("frame does not sum to the identity")

    @property
    def field(self) -> FieldSpec:
        return self.idempotents[0].field

    @property
    def n(self) -> int:
        return self.idempotents[0].nrows

    @property
    def size(self) -> int:
        return len(self.idempotents)

    @property
    def ranks(self) -> tuple:
        return tuple(rank_profile(e)[0] for e in self.idempotents)


def standard_frame(field: FieldSpec, ranks) -> IdempotentFrame:
    """Coordinate-block diagonal idempotents with the given ranks."""
    n = sum(ranks)
    es = []
    offset = 0
    for r in ranks:
        e = ExactMatrix.zeros(field, n)
        for i in range(offset, offset + r):
            e = e + ExactMatrix.unit(field, n, n, i, i)
        es.append(e)
        offset += r
    return IdempotentFrame(tuple(es))


@dataclass(frozen=True)
class GroupedFrame:
    """A frame with its indices partitioned and a rational f-value per part.

    Weights are ordered part pairs (P, Q) with f-value f(P) - f(Q); the
    injectivity of the f-values guarantees all nonzero weights have
    nonzero f-value.
    """

    frame: IdempotentFrame
    parts: tuple  # tuple of tuples of frame indices
    f_values: tuple  # one Fraction per part

    def __post_init__(self):
        idx = sorted(i for part in self.parts for i in part)
        if idx != list(range(self.frame.size)):
            raise InvalidPart("parts must partition the frame indices")
        fv = tuple(Fraction(v) for v in self.f_values)
        if len(fv) != len(self.parts):
            raise InvalidPart("need one f-value per part")
        if len(set(fv)) != len(fv):
            raise InvalidPart("f-values must be pairwise distinct")
        object.__setattr__(self, "f_values", fv)
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def part_idempotent(self, p: int) -> ExactMatrix:
        if not 0 <= p < len(self.parts):
            raise InvalidPart(f"no part {p}")
        out = ExactMatrix.zeros(self.frame.field, self.frame.n)
        for i in self.parts[p]:
            out = out + self.frame.idempotents[i]
        return out

    def part_rank(self, p: int) -> int:
        ranks = self.frame.ranks
        return sum(ranks[i] for i in self.parts[p])

    def positive_weights(self):
        """Ordered part pairs (P, Q) with f(P) > f(Q)."""
        return [
            (p, q)
            for p in range(self.num_parts)
            for q in range(self.num_parts)
            if self.f_values[p] > self.f_values[q]
        ]


def single_part(frame: IdempotentFrame) -> GroupedFrame:
    return GroupedFrame(frame, (tuple(range(frame.size)),), (Fraction(1),))


def singleton_parts(frame: IdempotentFrame) -> GroupedFrame:
    """One part per frame idempotent, f-values 1..t."""
    return GroupedFrame(
        frame,
        tuple((i,) for i in range(frame.size)),
        tuple(Fraction(i + 1) for i in range(frame.size)),
    )


@dataclass(frozen=True)
class LambdaSpec:
    """Per-part coefficients and the matrix Lambda = sum sigma_P e_P."""

    grouped: GroupedFrame
    sigmas: tuple

    def __post_init__(self):
        field = self.grouped.frame.field
        object.__setattr__(
            self, "sigmas", tuple(field.scalar(s) for s in self.sigmas)
        )
        if len(self.sigmas) != self.grouped.num_parts:
            raise InvalidPart("need one sigma per part")

    @property
    def matrix(self) -> ExactMatrix:
        out = ExactMatrix.zeros(self.grouped.frame.field, self.grouped.frame.n)
        for p, s in enumerate(self.sigmas):
            out = out + self.grouped.part_idempotent(p).scale(s)
        return out


# ---------------------------------------------------------------------------
# projections


def weight_project(a: ExactMatrix, g: GroupedFrame, from_part: int,
                   to_part: int) -> ExactMatrix:
    """The (from_part, to_part) block e_P a e_Q of a."""
    return g.part_idempotent(from_part) * a * g.part_idempotent(to_part)


def pi0(a: ExactMatrix, g: GroupedFrame) -> ExactMatrix:
    """The centralizer component: sum of the diagonal blocks e_P a e_P."""
    out = ExactMatrix.zeros(a.field, a.nrows)
    for p in range(g.num_parts):
        out = out + weight_project(a, g, p, p)
    return out


def centralizer_subspace(g: GroupedFrame) -> MatSubspace:
    """Z(T', M_n): the span of the diagonal blocks of the grouped frame."""
    field = g.frame.field
    n = g.frame.n
    gens = []
    for i in range(n):
        for j in range(n):
            u = pi0(ExactMatrix.unit(field, n, n, i, j), g)
            if not u.is_zero():
                gens.append(u)
    return span_of(gens, field=field, n=n)


def block_subspace(g: GroupedFrame, from_part: int, to_part: int) -> MatSubspace:
    """e_P M_n e_Q as a subspace."""
    field = g.frame.field
    n = g.frame.n
    eP = g.part_idempotent(from_part)
    eQ = g.part_idempotent(to_part)
    gens = []
    for i in range(n):
        for j in range(n):
            u = eP * ExactMatrix.unit(field, n, n, i, j) * eQ
            if not u.is_zero():
                gens.append(u)
    return span_of(gens, field=field, n=n)


# ---------------------------------------------------------------------------
# sigma condition and the certificate


def check_sigma_condition(sigmas, ranks, field: FieldSpec):
    """Sum sigma_i k_i != 0 in F for all nonzero integer tuples 0<=k_i<=n_i.

    Raises SigmaConditionFailed with the offending tuple.  This is the
    finite reduction of "Tr(Lambda e) != 0 for all nonzero idempotents e
    of the block-diagonal centralizer": such an idempotent has per-block
    trace k_i . 1_F with k_i the block rank.
    """
    sigmas = [field.scalar(s) for s in sigmas]
    for ks in itertools.product(*(range(r + 1) for r in ranks)):
        if not any(ks):
            continue
        total = field.zero()
        for s, k in zip(sigmas, ks):
            total = total + s * field.from_int(k)
        if not total:
            raise SigmaConditionFailed(ks)


@dataclass(frozen=True)
class Thm21Certificate:
    """Verified hypotheses; validity implies the subspace is an MS."""

    subspace: MatSubspace
    grouped: GroupedFrame
    lam: LambdaSpec
    sigma_ranges: tuple  # per-part rank bounds the sigma check covered
    positive_weights: tuple
    basis_pairs_checked: int

    def to_json(self):
        return {
            "valid": True,
            "sigma_ranges": list(self.sigma_ranges),
            "positive_weights": [list(w) for w in self.positive_weights],
            "basis_pairs_checked": self.basis_pairs_checked,
        }


def thm21_certify(V: MatSubspace, g: GroupedFrame, lam: LambdaSpec) -> Thm21Certificate:
    """Certify V is an MS via the weight-space hypotheses.

    Raises HypothesisFailed naming the broken hypothesis and a witness.
    """
    field = V.field
    ranks = tuple(g.part_rank(p) for p in range(g.num_parts))
    try:
        check_sigma_condition(lam.sigmas, ranks, field)
    except SigmaConditionFailed as exc:
        raise HypothesisFailed("sigma", exc.tuple) from exc
    L = lam.matrix
    for b in V.basis:
        if (L * b).trace():
            raise HypothesisFailed("containment", b,
                                   "V is not orthogonal to Lambda")
        if (L * pi0(b, g)).trace():
            raise HypothesisFailed("pi0-containment", b,
                                   "pi_0(V) is not orthogonal to Lambda")
    pos = g.positive_weights()
    pairs = 0
    for (p, q) in pos:
        for (p2, q2) in pos:
            for v in V.basis:
                left = weight_project(v, g, p, q)
                if left.is_zero():
                    continue
                for v2 in V.basis:
                    right = weight_project(v2, g, q2, p2)  # the -omega' block
                    pairs += 1
                    if not (left * right).is_zero():
                        raise HypothesisFailed(
                            "product-vanishing", ((p, q), (p2, q2), v, v2))
    return Thm21Certificate(V, g, lam, ranks, tuple(pos), pairs)


# ---------------------------------------------------------------------------
# builders


def build_example22(ranks, sigmas, field: FieldSpec):
    """Lower-triangular block family: (M_0 cap Lambda^perp) + strict lower blocks.

    Returns (V, grouped frame, LambdaSpec).  Codimension is
    1 + sum_{i<j} n_i n_j.
    """
    ranks = tuple(int(r) for r in ranks)
    check_sigma_condition(sigmas, ranks, field)
    frame = standard_frame(field, ranks)
    g = singleton_parts(frame)
    lam = LambdaSpec(g, tuple(sigmas))
    V = intersect(centralizer_subspace(g), trace_orthogonal(span_of([lam.matrix])))
    for i in range(g.num_parts):
        for j in range(g.num_parts):
            if g.f_values[i] > g.f_values[j]:
                V = subspace_sum(V, block_subspace(g, i, j))
    return V, g, lam


@dataclass(frozen=True)
class Example23Extension:
    """One-step extension U = F(u+w) + V of a lower-triangular family."""

    base: MatSubspace
    u: ExactMatrix
    w: ExactMatrix
    subspace: MatSubspace
    e1_u_e3_vanishes: bool


def build_example23_extension(base_V: MatSubspace, g: GroupedFrame,
                              u: ExactMatrix, w: ExactMatrix) -> Example23Extension:
    """Extend a t>=3 lower-triangular family by the line F(u + w).

    u must lie in e_1 M e_2 and w in e_2 M e_3 with u w != 0; the result
    strictly contains the base and stays idempotent-free.
    """
    if g.num_parts < 3:
        raise BadBlocks("extension requires at least three parts")
    if weight_project(u, g, 0, 1) != u or u.is_zero():
        raise BadBlocks("u must be a nonzero element of e_1 M_n e_2")
    if weight_project(w, g, 1, 2) != w or w.is_zero():
        raise BadBlocks("w must be a nonzero element of e_2 M_n e_3")
    if (u * w).is_zero():
        raise ProductZero("u w = 0")
    U = subspace_sum(base_V, span_of([u + w]))
    e1 = g.part_idempotent(0)
    e3 = g.part_idempotent(2)
    vanishes = all((e1 * b * e3).is_zero() for b in U.basis)
    return Example23Extension(base_V, u, w, U, vanishes)


@dataclass(frozen=True)
class TwoBlockFamily:
    """The two-part family: (Z(T') cap Lambda^perp) + e_1 M e_3 + e_3 M e_2.

    Carries everything the maximality witness engine needs: the raw
    three-idempotent frame, the grouping {1,2} | {3}, the coefficients and
    the subspace itself.
    """

    e1: ExactMatrix
    e2: ExactMatrix
    e3: ExactMatrix
    sigma1: Scalar
    sigma2: Scalar
    subspace: MatSubspace
    grouped: GroupedFrame
    lam: LambdaSpec

    @property
    def field(self) -> FieldSpec:
        return self.e1.field

    @property
    def n(self) -> int:
        return self.e1.nrows

    @property
    def n3(self) -> int:
        return rank_profile(self.e3)[0]

    @property
    def centralizer(self) -> MatSubspace:
        return centralizer_subspace(self.grouped)


def family_from_idempotents(e1: ExactMatrix, e2: ExactMatrix, e3: ExactMatrix,
                            sigma1, sigma2) -> TwoBlockFamily:
    """Assemble the two-part family from an arbitrary orthogonal triple."""
    field = e1.field
    sigma1 = field.scalar(sigma1)
    sigma2 = field.scalar(sigma2)
    if sigma1 == sigma2:
        raise SigmaConditionFailed(None, "sigma_1 = sigma_2")
    frame = IdempotentFrame(tuple(e for e in (e1, e2, e3)))
    n12 = rank_profile(e1)[0] + rank_profile(e2)[0]
    n3 = rank_profile(e3)[0]
    check_sigma_condition((sigma1, sigma2), (n12, n3), field)
    # group parts {1,2} and {3}; zero idempotents keep their slot
    g = GroupedFrame(frame, ((0, 1), (2,)), (Fraction(1), Fraction(3)))
    lam = LambdaSpec(g, (sigma1, sigma2))
    Z = centralizer_subspace(g)
    V = intersect(Z, trace_orthogonal(span_of([lam.matrix])))
    n = e1.nrows
    for (a, b) in ((e1, e3), (e3, e2)):
        gens = []
        for i in range(n):
            for j in range(n):
                u = a * ExactMatrix.unit(field, n, n, i, j) * b
                if not u.is_zero():
                    gens.append(u)
        if gens:
            V = subspace_sum(V, span_of(gens, field=field, n=n))
    return TwoBlockFamily(e1, e2, e3, sigma1, sigma2, V, g, lam)


def build_example24(n1: int, n2: int, n3: int, sigma1, sigma2,
                    field: FieldSpec) -> TwoBlockFamily:
    """The standard-frame two-part family of codimension (n1+n2) n3 + 1."""
    frame = standard_frame(field, (n1, n2, n3))
    e1, e2, e3 = frame.idempotents
    return family_from_idempotents(e1, e2, e3, sigma1, sigma2)


def build_cor26(n: int, r: int, sigma1, sigma2, field: FieldSpec) -> TwoBlockFamily:
    """Rank-r specialization: codimension r n - r^2 + 1, the n2 = 0 collapse."""
    if not 0 < r < n:
        raise RankOutOfRange(f"need 0 < r < n, got r={r}, n={n}")
    return build_example24(r, 0, n - r, sigma1, sigma2, field)


def cor26_complement_form(n: int, r: int, sigma1, sigma2,
                          field: FieldSpec) -> MatSubspace:
    """The same subspace as the orthogonal complement of the displayed span."""
    if not 0 < r < n:
        raise RankOutOfRange(f"need 0 < r < n, got r={r}, n={n}")
    frame = standard_frame(field, (r, n - r))
    e1, e2 = frame.idempotents
    gens = [e1.scale(field.scalar(sigma1)) + e2.scale(field.scalar(sigma2))]
    for i in range(n):
        for j in range(n):
            u = e1 * ExactMatrix.unit(field, n, n, i, j) * e2
            if not u.is_zero():
                gens.append(u)
    return trace_orthogonal(span_of(gens))
