"""Exact scalar arithmetic: prime fields F_p, small extensions GF(p^k), rationals.

A field is described by a :class:`FieldSpec` and its elements are
:class:`Scalar` values.  Representations are canonical on construction so
that equality is structural:

* prime field      -- an integer residue in [0, p)
* extension field  -- a length-k tuple of base-field coefficients
                      (low degree first), reduced modulo the modulus
* rationals        -- a reduced ``fractions.Fraction``

Extension moduli are supplied by the caller as monic coefficient lists
(low degree first) and validated for irreducibility by exhaustive factor
search; only small degrees (<= 4) are supported, which covers every
quadratic adjunction the library needs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt

from .errors import MixedFields, UnsupportedField, ZeroInverse


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def is_rational_square(x: Fraction) -> bool:
    """True iff x is the square of a rational number."""
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


# ---------------------------------------------------------------------------
# polynomial helpers over a coefficient ring given by (add, mul, inv, zero, one)
# polynomials are tuples, low degree first, with no trailing zeros


def _ptrim(a):
    i = len(a)
    while i > 0 and not a[i - 1]:
        i -= 1
    return tuple(a[:i])


class _BaseOps:
    """Coefficient arithmetic for polynomials over F_p or Q."""

    def __init__(self, p: int):
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def inv(self, a):
        if not a:
            raise ZeroInverse("zero has no inverse")
        return pow(a, -1, self.p) if self.p else 1 / a

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)


def _padd(ops, a, b):
    n = max(len(a), len(b))
    a = a + (ops.zero(),) * (n - len(a))
    b = b + (ops.zero(),) * (n - len(b))
    return _ptrim(tuple(ops.add(x, y) for x, y in zip(a, b)))


def _psub(ops, a, b):
    n = max(len(a), len(b))
    a = a + (ops.zero(),) * (n - len(a))
    b = b + (ops.zero(),) * (n - len(b))
    return _ptrim(tuple(ops.sub(x, y) for x, y in zip(a, b)))


def _pmul(ops, a, b):
    if not a or not b:
        return ()
    out = [ops.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = ops.add(out[i + j], ops.mul(x, y))
    return _ptrim(out)


def _pdivmod(ops, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [ops.zero()] * max(0, len(a) - len(b) + 1)
    binv = ops.inv(b[-1])
    while len(a) >= len(b) and _ptrim(a):
        a = list(_ptrim(a))
        if len(a) < len(b):
            break
        c = ops.mul(a[-1], binv)
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = ops.sub(a[d + i], ops.mul(c, y))
        a = list(_ptrim(a))
    return _ptrim(q), _ptrim(a)


def _pmod(ops, a, b):
    return _pdivmod(ops, a, b)[1]


def _pinv_mod(ops, a, m):
    """Inverse of a modulo m via extended Euclid; a, m coprime."""
    r0, r1 = m, _pmod(ops, a, m)
    s0, s1 = (), (ops.one(),)
    while r1:
        q, r = _pdivmod(ops, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(ops, s0, _pmul(ops, q, s1))
    if len(r0) != 1:
        raise ZeroInverse("element is not invertible modulo the modulus")
    c = ops.inv(r0[0])
    return _ptrim(tuple(ops.mul(c, x) for x in s0))


def _irreducible(ops, modulus, p: int) -> bool:
    """Exhaustive factor search for monic modulus of degree <= 4."""
    k = len(modulus) - 1
    if p == 0:
        # only quadratics are supported over Q: irreducible iff the
        # discriminant is not a rational square
        if k != 2:
            raise UnsupportedField(
                "characteristic-0 extensions are supported only in degree 2"
            )
        b, c = modulus[1], modulus[0]
        return not is_rational_square(Fraction(b) ** 2 - 4 * Fraction(c))
    if k > 4:
        raise UnsupportedField("extension degree > 4 is not supported")
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            cand = tuple(tail) + (1,)  # monic degree-d candidate
            if not _pmod(ops, modulus, cand):
                return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """An exact field: F_p, GF(p^k) via a monic irreducible modulus, or Q.

    characteristic 0 with extension_degree 1 is the rationals;
    characteristic 0 with degree 2 is a quadratic extension Q[t]/(modulus),
    used by the base-change demonstration.
    """

    characteristic: int
    extension_degree: int = 1
    modulus: tuple = None

    def __post_init__(self):
        p, k = self.characteristic, self.extension_degree
        if p < 0 or (p != 0 and not _is_prime(p)):
            raise UnsupportedField(f"characteristic must be 0 or prime, got {p}")
        if k < 1:
            raise UnsupportedField("extension degree must be positive")
        if k == 1:
            if self.modulus is not None:
                raise UnsupportedField("modulus given for a degree-1 field")
            return
        if self.modulus is None:
            raise UnsupportedField("extension field needs a modulus")
        ops = _BaseOps(p)
        mod = tuple(
            (int(c) % p) if p else Fraction(c) for c in self.modulus
        )
        if len(mod) != k + 1 or mod[-1] != ops.one():
            raise UnsupportedField("modulus must be monic of degree k")
        object.__setattr__(self, "modulus", mod)
        if not _irreducible(ops, mod, p):
            raise UnsupportedField(f"modulus {mod} is reducible")

    # -- basic queries ------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise UnsupportedField("infinite field has no order")
        return self.characteristic ** self.extension_degree

    def _ops(self):
        return _BaseOps(self.characteristic)

    # -- element constructors -----------------------------------------

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, coefficient list or Scalar into this field."""
        p, k = self.characteristic, self.extension_degree
        if isinstance(value, Scalar):
            if value.field != self:
                raise MixedFields("scalar belongs to a different field")
            return value
        if k == 1:
            if p:
                if isinstance(value, str):
                    value = Fraction(value)
                if isinstance(value, Fraction):
                    return Scalar(
                        self, value.numerator * pow(value.denominator, -1, p) % p
                    )
                return Scalar(self, int(value) % p)
            return Scalar(self, Fraction(value))
        if isinstance(value, (list, tuple)):
            ops = self._ops()
            coeffs = tuple(
                (int(c) % p) if p else Fraction(c) for c in value
            )
            coeffs = _pmod(ops, _ptrim(coeffs), self.modulus)
            return Scalar(self, coeffs + (ops.zero(),) * (k - len(coeffs)))
        # embed the base field
        base = (int(value) % p) if p else Fraction(value)
        ops = self._ops()
        return Scalar(self, (base,) + (ops.zero(),) * (k - 1))

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def from_int(self, m: int) -> "Scalar":
        """The image of the integer m under Z -> F."""
        return self.scalar(m)

    def generator(self) -> "Scalar":
        """The adjoined root t of the modulus (extension fields only)."""
        if self.extension_degree == 1:
            raise UnsupportedField("prime field / rationals have no generator")
        return self.scalar([0, 1])

    # -- enumeration (finite fields) ----------------------------------

    def elements(self):
        """All field elements in canonical order (finite fields only)."""
        if not self.is_finite:
            raise UnsupportedField("cannot enumerate an infinite field")
        for i in range(self.order):
            yield self.element_from_index(i)

    def element_from_index(self, i: int) -> "Scalar":
        """The i-th element in canonical order, 0 <= i < order.

        Prime fields order residues 0..p-1; extensions order coefficient
        tuples with the constant coefficient least significant.
        """
        p, k = self.characteristic, self.extension_degree
        if k == 1:
            return Scalar(self, i % p)
        digits = []
        for _ in range(k):
            digits.append(i % p)
            i //= p
        return Scalar(self, tuple(digits))

    def __repr__(self):
        if self.characteristic == 0 and self.extension_degree == 1:
            return "Q"
        if self.extension_degree == 1:
            return f"F_{self.characteristic}"
        if self.characteristic == 0:
            return f"Q[t]/{list(self.modulus)}"
        return f"GF({self.characteristic}^{self.extension_degree})"


class Scalar:
    """An element of a FieldSpec, canonical on construction."""

    __slots__ = ("field", "val")

    def __init__(self, field: FieldSpec, val):
        self.field = field
        self.val = val

    # -- helpers -------------------------------------------------------

    def _check(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return self.field.scalar(other)
        if other.field != self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")
        return other

    def __bool__(self):
        if isinstance(self.val, tuple):
            return any(self.val)
        return bool(self.val)

    def is_zero(self) -> bool:
        return not self

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        f = self.field
        p, k = f.characteristic, f.extension_degree
        if k == 1:
            return Scalar(f, (self.val + other.val) % p if p else self.val + other.val)
        ops = f._ops()
        return Scalar(f, tuple(ops.add(a, b) for a, b in zip(self.val, other.val)))

    def __neg__(self):
        f = self.field
        p, k = f.characteristic, f.extension_degree
        if k == 1:
            return Scalar(f, (-self.val) % p if p else -self.val)
        ops = f._ops()
        return Scalar(f, tuple(ops.sub(ops.zero(), a) for a in self.val))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        p, k = f.characteristic, f.extension_degree
        if k == 1:
            return Scalar(f, (self.val * other.val) % p if p else self.val * other.val)
        ops = f._ops()
        prod = _pmod(ops, _pmul(ops, _ptrim(self.val), _ptrim(other.val)), f.modulus)
        return Scalar(f, prod + (ops.zero(),) * (k - len(prod)))

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroInverse("cannot invert zero")
        f = self.field
        p, k = f.characteristic, f.extension_degree
        if k == 1:
            return Scalar(f, pow(self.val, -1, p) if p else 1 / self.val)
        ops = f._ops()
        inv = _pinv_mod(ops, _ptrim(self.val), f.modulus)
        return Scalar(f, inv + (ops.zero(),) * (k - len(inv)))

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = self.field.scalar(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.field == other.field and self.val == other.val

    def __hash__(self):
        return hash((self.field, self.val))

    def __repr__(self):
        return f"Scalar({self.val!r})"

    def is_square(self) -> bool:
        """True iff this element is a square in its field."""
        f = self.field
        if f.is_finite:
            return any(x * x == self for x in f.elements())
        if f.extension_degree != 1:
            raise UnsupportedField("square test unsupported in Q extensions")
        return is_rational_square(self.val)
