import random
from fractions import Fraction

import pytest

from mzspace import (
    ExactMatrix,
    FieldSpec,
    power_tail,
    rank_factorization,
    rank_profile,
    rref_vectors,
)
from mzspace.errors import ShapeMismatch, UnsupportedField

F5 = FieldSpec(5)
Q = FieldSpec(0)


def _mat(field, rows):
    return ExactMatrix.from_rows(field, [[field.scalar(v) for v in r] for r in rows])


def test_arithmetic():
    a = _mat(F5, [[1, 2], [3, 4]])
    b = _mat(F5, [[0, 1], [1, 0]])
    assert a + b == _mat(F5, [[1, 3], [4, 4]])
    assert a * b == _mat(F5, [[2, 1], [4, 3]])
    assert a - a == ExactMatrix.zeros(F5, 2, 2)
    assert a.transpose() == _mat(F5, [[1, 3], [2, 4]])
    assert a.trace() == F5.scalar(0)
    assert (a ** 2) == a * a
    with pytest.raises(ShapeMismatch):
        a * ExactMatrix.zeros(F5, 3, 3)


def test_rank_profile():
    a = _mat(Q, [[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    rank, rr, pivots = rank_profile(a)
    assert rank == 2
    assert tuple(pivots) == (0, 2)
    assert rr.row(0) == (Q.one(), Q.scalar(2), Q.zero())


def test_rref_idempotence():
    rows = [(F5.scalar(2), F5.scalar(4)), (F5.scalar(1), F5.scalar(2))]
    reduced, pivots = rref_vectors(rows, F5)
    assert tuple(pivots) == (0,)
    again, _ = rref_vectors(reduced, F5)
    assert tuple(again) == tuple(reduced)


def test_power_tail_nilpotent():
    e12 = ExactMatrix.unit(FieldSpec(2), 2, 2, 0, 1)
    tail = power_tail(e12)
    assert (tail.preperiod, tail.period) == (2, 1)
    assert tail.cycle[0].is_zero()


def test_power_tail_invertible_diag():
    d = ExactMatrix.diagonal(F5, [F5.one(), F5.scalar(2)])
    tail = power_tail(d)
    assert (tail.preperiod, tail.period) == (1, 4)


def test_power_tail_rejects_char0():
    with pytest.raises(UnsupportedField):
        power_tail(ExactMatrix.identity(Q, 2))


def _random_matrix(field, nrows, ncols, rng):
    if field.is_finite:
        pick = lambda: field.element_from_index(rng.randrange(field.order))
    else:
        pick = lambda: field.scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return ExactMatrix(field, nrows, ncols, [pick() for _ in range(nrows * ncols)])


@pytest.mark.parametrize("field", [F5, Q], ids=["F5", "Q"])
def test_rank_factorization_properties(field):
    rng = random.Random(20240 + field.characteristic)
    for _ in range(150):
        m = rng.randint(1, 6)
        k = rng.randint(1, 6)
        a = _random_matrix(field, m, k, rng)
        b = rank_factorization(a)
        assert a * b * a == a
        assert b * a * b == b
        ab, ba = a * b, b * a
        assert ab * ab == ab
        assert ba * ba == ba
        assert rank_profile(ab)[0] == rank_profile(a)[0]


def test_rank_factorization_zero():
    z = ExactMatrix.zeros(Q, 3, 2)
    b = rank_factorization(z)
    assert b.nrows == 2 and b.ncols == 3 and b.is_zero()
