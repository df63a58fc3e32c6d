import pytest

from mzspace import (
    ExactMatrix,
    FieldSpec,
    basechange_demo,
    build_cor32_family,
    build_cor34_family,
    char_poly_roots,
    find_idempotent,
    is_maximal_ms,
    lemma31_check,
    ms_by_idempotent_criterion,
    predicted_maximal_families,
    span_of,
    splits_with_distinct_roots,
    trace_zero_space,
)
from mzspace.classify2 import (
    KIND_CHAR2_PLANE,
    KIND_SPLIT_DIAG,
    KIND_TRACE_ZERO,
    KIND_UNIPOTENT,
)
from mzspace.errors import (
    ExcludedParameter,
    NotAnMS,
    NotNilpotent,
    ParameterViolation,
    SquareParameter,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F5 = FieldSpec(5)


def _m(field, rows):
    return ExactMatrix.from_rows(field, [[field.scalar(v) for v in r] for r in rows])


def test_char_poly_roots():
    a = _m(F5, [[1, 0], [0, 2]])
    assert sorted(r.val for r in char_poly_roots(a)) == [1, 2]
    assert splits_with_distinct_roots(a)
    rot = _m(F5, [[0, 1], [2, 0]])  # x^2 - 2 has no root mod 5
    assert list(char_poly_roots(rot)) == []
    assert not splits_with_distinct_roots(rot)


def test_lemma31_invertibility():
    # det(x diag(1,2) + y antidiag(1,1)) = 2x^2 - y^2, nonzero as 2 is a nonsquare
    V = span_of([_m(F5, [[1, 0], [0, 2]]), _m(F5, [[0, 1], [1, 0]])])
    rep = lemma31_check(V)
    assert rep.invertibility_holds
    assert rep.applicable
    # some trace-nonzero elements have irreducible characteristic polynomial
    assert not rep.distinct_split_spectra
    with pytest.raises(NotAnMS):
        lemma31_check(span_of([_m(F5, [[1, 0], [0, 0]])]))


def test_cor32_family():
    g = ExactMatrix.identity(F5, 2)
    V = build_cor32_family(F5.scalar(1), F5.scalar(2), g)
    assert V.dim == 2
    assert ms_by_idempotent_criterion(V).is_ms
    assert is_maximal_ms(V).is_maximal
    with pytest.raises(ParameterViolation):
        build_cor32_family(F5.scalar(1), F5.scalar(1), g)  # equal parameters
    with pytest.raises(ParameterViolation):
        build_cor32_family(F5.scalar(1), F5.scalar(4), g)  # lam1 + lam2 = 0


def test_cor34_family():
    c = ExactMatrix.unit(F3, 2, 2, 0, 1)
    V = build_cor34_family(c)
    assert V.dim == 1
    assert ms_by_idempotent_criterion(V).is_ms
    # over F_3 the line F(I + c) extends inside H, so it is not maximal
    assert not is_maximal_ms(V).is_maximal
    with pytest.raises(NotNilpotent):
        build_cor34_family(ExactMatrix.identity(F3, 2))


def test_predicted_families_f5():
    fams = predicted_maximal_families(F5)
    by_kind = {}
    for p in fams:
        by_kind.setdefault(p.kind, []).append(p)
    assert len(by_kind[KIND_TRACE_ZERO]) == 1
    assert by_kind[KIND_TRACE_ZERO][0].subspace == trace_zero_space(2, F5)
    assert len(by_kind[KIND_SPLIT_DIAG]) == 12
    assert len(by_kind[KIND_UNIPOTENT]) == 24
    assert all(p.closure_dependent for p in by_kind[KIND_UNIPOTENT])
    assert KIND_CHAR2_PLANE not in by_kind
    # all distinct and all certified MSs
    spaces = [p.subspace for p in fams]
    assert len(set(spaces)) == len(spaces)
    assert all(ms_by_idempotent_criterion(S).is_ms for S in spaces)


def test_predicted_families_f2():
    fams = predicted_maximal_families(F2)
    by_kind = {}
    for p in fams:
        by_kind.setdefault(p.kind, []).append(p)
    assert len(by_kind[KIND_CHAR2_PLANE]) == 4
    assert KIND_TRACE_ZERO not in by_kind  # H contains idempotents in char 2
    for p in by_kind[KIND_CHAR2_PLANE]:
        assert p.subspace.dim == 2
        assert trace_zero_space(2, F2).contains(p.subspace.basis[0])
        assert ms_by_idempotent_criterion(p.subspace).is_ms


def test_basechange_demo_f5():
    demo = basechange_demo(F5, 2)
    assert demo.base_is_ms and demo.base_is_maximal
    assert find_idempotent(demo.subspace) is None
    c = demo.idempotent
    assert c * c == c and not c.is_zero()
    assert demo.extended_subspace.contains(c)
    L = demo.extension_field
    assert L.characteristic == 5 and L.order == 25


def test_basechange_demo_rationals():
    demo = basechange_demo(FieldSpec(0), 2)
    c = demo.idempotent
    assert c * c == c and not c.is_zero()
    assert demo.extended_subspace.contains(c)


def test_basechange_parameter_guards():
    # over F_5 every square is 0, 1 or 4 = -1, all excluded earlier; use F_13
    with pytest.raises(SquareParameter):
        basechange_demo(FieldSpec(13), 3)
    with pytest.raises(ExcludedParameter):
        basechange_demo(F5, 0)
    with pytest.raises(ExcludedParameter):
        basechange_demo(F5, 1)
