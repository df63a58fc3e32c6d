"""Dense exact matrices: arithmetic, RREF, power tails, rank factorization."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MixedFields, ShapeMismatch, UnsupportedField
from .fields import FieldSpec, Scalar


class ExactMatrix:
    """Immutable m x k matrix of Scalars over one FieldSpec."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, entries):
        entries = tuple(field.scalar(e) for e in entries)
        if len(entries) != nrows * ncols:
            raise ShapeMismatch(
                f"{nrows}x{ncols} matrix needs {nrows * ncols} entries, "
                f"got {len(entries)}"
            )
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        m = len(rows)
        k = len(rows[0]) if rows else 0
        if any(len(r) != k for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(field, m, k, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, k: int = None) -> "ExactMatrix":
        k = m if k is None else k
        z = field.zero()
        return cls(field, m, k, (z,) * (m * k))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, field: FieldSpec, m: int, k: int, i: int, j: int) -> "ExactMatrix":
        """The matrix unit E_ij of size m x k."""
        z, o = field.zero(), field.one()
        return cls(field, m, k, tuple(
            o if (r, c) == (i, j) else z for r in range(m) for c in range(k)
        ))

    @classmethod
    def diagonal(cls, field: FieldSpec, diag) -> "ExactMatrix":
        diag = [field.scalar(d) for d in diag]
        n = len(diag)
        z = field.zero()
        return cls(field, n, n, tuple(
            diag[i] if i == j else z for i in range(n) for j in range(n)
        ))

    # -- access ----------------------------------------------------------

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise MixedFields("matrices over different fields")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("shapes differ")
        return ExactMatrix(self.field, self.nrows, self.ncols,
                           tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.nrows, self.ncols,
                           tuple(-a for a in self.entries))

    def scale(self, c) -> "ExactMatrix":
        c = self.field.scalar(c)
        return ExactMatrix(self.field, self.nrows, self.ncols,
                           tuple(c * a for a in self.entries))

    def __mul__(self, other):
        if isinstance(other, Scalar) or not isinstance(other, ExactMatrix):
            return self.scale(other)
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by "
                f"{other.nrows}x{other.ncols}")
        z = self.field.zero()
        out = []
        orows = other.rows()
        for i in range(self.nrows):
            srow = self.row(i)
            acc = [z] * other.ncols
            for t, c in enumerate(srow):
                if not c:
                    continue
                orow = orows[t]
                for j in range(other.ncols):
                    if orow[j]:
                        acc[j] = acc[j] + c * orow[j]
            out.extend(acc)
        return ExactMatrix(self.field, self.nrows, other.ncols, tuple(out))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> "ExactMatrix":
        if not self.is_square:
            raise ShapeMismatch("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative matrix powers unsupported")
        out = ExactMatrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.ncols, self.nrows, tuple(
            self[i, j] for j in range(self.ncols) for i in range(self.nrows)
        ))

    def trace(self) -> Scalar:
        if not self.is_square:
            raise ShapeMismatch("trace of a non-square matrix")
        t = self.field.zero()
        for i in range(self.nrows):
            t = t + self[i, i]
        return t

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix)
                and self.field == other.field
                and self.nrows == other.nrows
                and self.ncols == other.ncols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self):
        rows = [[repr(e.val) for e in self.row(i)] for i in range(self.nrows)]
        return "ExactMatrix([" + "; ".join(", ".join(r) for r in rows) + "])"


# ---------------------------------------------------------------------------
# row reduction


def rref_vectors(vectors, field: FieldSpec):
    """Reduced row echelon form of a list of coordinate tuples.

    Returns (rows, pivots): the nonzero reduced rows (tuples of Scalars,
    strictly increasing pivot columns) and the pivot column indices.
    """
    rows = [list(field.scalar(e) for e in v) for v in vectors]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [inv * e for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def rank_profile(a: ExactMatrix):
    """(rank, rref, pivot columns) of a, preserving the row space exactly."""
    rows, pivots = rref_vectors([a.row(i) for i in range(a.nrows)], a.field)
    z = a.field.zero()
    padded = list(rows) + [(z,) * a.ncols] * (a.nrows - len(rows))
    rref = ExactMatrix(a.field, a.nrows, a.ncols,
                       tuple(e for row in padded for e in row))
    return len(pivots), rref, pivots


def nullspace_vectors(rows, pivots, ncols, field: FieldSpec):
    """Basis of {x : R x = 0} for reduced rows R; one vector per free column."""
    z, o = field.zero(), field.one()
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = [z] * ncols
        v[j] = o
        for i, p in enumerate(pivots):
            v[p] = -rows[i][j]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# power tails


@dataclass(frozen=True)
class PowerTail:
    """Eventual periodicity of the power sequence a, a^2, a^3, ...

    a^(m + period) = a^m for all m >= preperiod, with both parameters
    minimal.  ``cycle`` holds a^preperiod, ..., a^(preperiod + period - 1).
    """

    preperiod: int
    period: int
    cycle: tuple


def power_tail(a: ExactMatrix) -> PowerTail:
    """Cycle structure of the powers of a square matrix over a finite field."""
    if not a.is_square:
        raise ShapeMismatch("power tail of a non-square matrix")
    if not a.field.is_finite:
        raise UnsupportedField("power sequences need a finite field")
    seen = {}
    seq = []
    cur = a
    m = 1
    while True:
        if cur in seen:
            mu = seen[cur]
            lam = m - mu
            return PowerTail(mu, lam, tuple(seq[mu - 1:mu - 1 + lam]))
        seen[cur] = m
        seq.append(cur)
        cur = cur * a
        m += 1


# ---------------------------------------------------------------------------
# rank factorization


def rank_factorization(a: ExactMatrix) -> ExactMatrix:
    """A reflexive generalized inverse b of a.

    Satisfies a b a = a, b a b = b, (ab)^2 = ab, (ba)^2 = ba and
    rank(ab) = rank(ba) = rank(a).  Built from a full-rank factorization
    a = C R with C the pivot columns of a and R the nonzero RREF rows.
    """
    field = a.field
    r, rref, pivots = rank_profile(a)
    if r == 0:
        return ExactMatrix.zeros(field, a.ncols, a.nrows)
    # C: m x r pivot columns of a; R: r x k nonzero rref rows
    C = ExactMatrix(field, a.nrows, r,
                    tuple(a[i, p] for i in range(a.nrows) for p in pivots))
    R = ExactMatrix(field, r, a.ncols,
                    tuple(rref[i, j] for i in range(r) for j in range(a.ncols)))
    # left inverse of C: row-reduce [C | I] and read off the transform rows
    z, o = field.zero(), field.one()
    aug = []
    for i in range(a.nrows):
        aug.append(tuple(C[i, j] for j in range(r))
                   + tuple(o if t == i else z for t in range(a.nrows)))
    rows, augpiv = rref_vectors(aug, field)
    L = ExactMatrix(field, r, a.nrows,
                    tuple(rows[i][r + j] for i in range(r) for j in range(a.nrows)))
    # right inverse of R: select the pivot columns
    S = ExactMatrix(field, a.ncols, r, tuple(
        o if (i in pivots and pivots.index(i) == j) else z
        for i in range(a.ncols) for j in range(r)
    ))
    return S * L
