"""Subspaces of M_n(F) in canonical reduced-echelon basis form.

Matrices are vectorized row-major; the canonical basis of a subspace is
the RREF of the stacked vectorizations, so equal subspaces compare equal
structurally.  The trace pairing <b, c> = Tr(bc) supplies orthogonal
complements.
"""

from __future__ import annotations

import itertools

from .errors import (
    ImproperSubspace,
    MixedFields,
    ShapeMismatch,
    UnsupportedField,
)
from .fields import FieldSpec
from .matrices import ExactMatrix, nullspace_vectors, rref_vectors


class MatSubspace:
    """A subspace of n x n matrices with a canonical RREF basis."""

    __slots__ = ("field", "n", "rows", "pivots")

    def __init__(self, field: FieldSpec, n: int, rows, pivots):
        # internal: rows are already reduced; use span_of to construct
        self.field = field
        self.n = n
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return self.n * self.n

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def basis(self):
        """Canonical basis as matrices."""
        return tuple(
            ExactMatrix(self.field, self.n, self.n, row) for row in self.rows
        )

    # -- membership -----------------------------------------------------

    def _residual(self, vec):
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                for j in range(len(vec)):
                    vec[j] = vec[j] - c * row[j]
        return vec

    def contains(self, a: ExactMatrix) -> bool:
        if a.field != self.field or a.nrows != self.n or a.ncols != self.n:
            raise ShapeMismatch("matrix does not match the subspace ambient")
        return not any(self._residual(a.entries))

    def coordinates(self, a: ExactMatrix):
        """Coordinates of a in the canonical basis, or None if a is outside."""
        vec = list(a.entries)
        coords = []
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            coords.append(c)
            if c:
                for j in range(len(vec)):
                    vec[j] = vec[j] - c * row[j]
        if any(vec):
            return None
        return coords

    # -- enumeration ------------------------------------------------------

    def elements(self):
        """All matrices in the subspace (finite field only)."""
        if not self.field.is_finite:
            raise UnsupportedField("cannot enumerate over an infinite field")
        scalars = list(self.field.elements())
        basis = self.basis
        if not basis:
            yield ExactMatrix.zeros(self.field, self.n)
            return
        for coeffs in itertools.product(scalars, repeat=self.dim):
            m = ExactMatrix.zeros(self.field, self.n)
            for c, b in zip(coeffs, basis):
                if c:
                    m = m + b.scale(c)
            yield m

    def __eq__(self, other):
        return (isinstance(other, MatSubspace)
                and self.field == other.field
                and self.n == other.n
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.n, self.rows))

    def __repr__(self):
        return f"MatSubspace(n={self.n}, dim={self.dim}, field={self.field!r})"

    # convenience wrappers
    def sum(self, other: "MatSubspace") -> "MatSubspace":
        return subspace_sum(self, other)

    def intersect(self, other: "MatSubspace") -> "MatSubspace":
        return intersect(self, other)

    def orthogonal(self) -> "MatSubspace":
        return trace_orthogonal(self)


# ---------------------------------------------------------------------------


def span_of(mats, *, field: FieldSpec = None, n: int = None) -> MatSubspace:
    """Canonical subspace spanned by the given n x n matrices."""
    mats = list(mats)
    if mats:
        first = mats[0]
        field = first.field if field is None else field
        n = first.nrows if n is None else n
    if field is None or n is None:
        raise ValueError("empty span needs explicit field and n")
    for m in mats:
        if m.field != field:
            raise MixedFields("generators over different fields")
        if m.nrows != n or m.ncols != n:
            raise ShapeMismatch("generators must be square of the same size")
    rows, pivots = rref_vectors([m.entries for m in mats], field)
    return MatSubspace(field, n, rows, pivots)


def full_algebra(field: FieldSpec, n: int) -> MatSubspace:
    return span_of(
        [ExactMatrix.unit(field, n, n, i, j) for i in range(n) for j in range(n)]
    )


def zero_subspace(field: FieldSpec, n: int) -> MatSubspace:
    return span_of([], field=field, n=n)


def subspace_sum(S: MatSubspace, T: MatSubspace) -> MatSubspace:
    if S.field != T.field:
        raise MixedFields("subspaces over different fields")
    if S.n != T.n:
        raise ShapeMismatch("subspaces of different matrix sizes")
    rows, pivots = rref_vectors(list(S.rows) + list(T.rows), S.field)
    return MatSubspace(S.field, S.n, rows, pivots)


def intersect(S: MatSubspace, T: MatSubspace) -> MatSubspace:
    """Intersection via the kernel of the stacked-basis relation matrix."""
    if S.field != T.field:
        raise MixedFields("subspaces over different fields")
    if S.n != T.n:
        raise ShapeMismatch("subspaces of different matrix sizes")
    field = S.field
    if S.dim == 0 or T.dim == 0:
        return zero_subspace(field, S.n)
    # coefficient vectors (u, v) with u.B_S + v.B_T = 0 give u.B_S in S cap T
    stacked = list(S.rows) + list(T.rows)
    cols = [tuple(row[j] for row in stacked) for j in range(S.ambient_dim)]
    rows, pivots = rref_vectors(cols, field)
    kernel = nullspace_vectors(rows, pivots, len(stacked), field)
    gens = []
    for coeffs in kernel:
        vec = [field.zero()] * S.ambient_dim
        for c, brow in zip(coeffs[:S.dim], S.rows):
            if c:
                for j in range(S.ambient_dim):
                    vec[j] = vec[j] + c * brow[j]
        gens.append(ExactMatrix(field, S.n, S.n, tuple(vec)))
    return span_of(gens, field=field, n=S.n)


def trace_orthogonal(S: MatSubspace) -> MatSubspace:
    """{b : Tr(b x) = 0 for all x in S} under the trace pairing.

    Tr(b x) is the dot product of vec(b) with vec(x^T), so the complement
    is the nullspace of the transposed-basis matrix.
    """
    field = S.field
    n = S.n
    if S.dim == 0:
        return full_algebra(field, n)
    constraint_rows = [b.transpose().entries for b in S.basis]
    rows, pivots = rref_vectors(constraint_rows, field)
    basis_vecs = nullspace_vectors(rows, pivots, n * n, field)
    return span_of(
        [ExactMatrix(field, n, n, v) for v in basis_vecs], field=field, n=n
    )


def extension_directions(S: MatSubspace):
    """One representative per line of M_n/S (finite field, S proper).

    Representatives are supported on the non-pivot coordinates of S's
    canonical basis and normalized to leading coefficient 1, so the
    subspaces S + F.w are pairwise distinct and exhaust all one-step
    extensions of S.
    """
    if not S.field.is_finite:
        raise UnsupportedField("direction enumeration needs a finite field")
    if S.is_full:
        raise ImproperSubspace("the full algebra has no extensions")
    field = S.field
    n = S.n
    free = [j for j in range(S.ambient_dim) if j not in S.pivots]
    units = [ExactMatrix.unit(field, n, n, j // n, j % n) for j in free]
    scalars = list(field.elements())
    c = len(free)
    for lead in range(c):
        for tail in itertools.product(scalars, repeat=c - lead - 1):
            w = units[lead]
            for coeff, u in zip(tail, units[lead + 1:]):
                if coeff:
                    w = w + u.scale(coeff)
            yield w
