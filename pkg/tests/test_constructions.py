from fractions import Fraction

import pytest

from mzspace import (
    ExactMatrix,
    FieldSpec,
    build_cor26,
    build_example22,
    build_example23_extension,
    build_example24,
    centralizer_subspace,
    check_sigma_condition,
    cor26_complement_form,
    find_idempotent,
    ms_by_idempotent_criterion,
    pi0,
    singleton_parts,
    single_part,
    span_of,
    standard_frame,
    thm21_certify,
    trace_orthogonal,
    weight_project,
)
from mzspace.errors import (
    BadBlocks,
    HypothesisFailed,
    ProductZero,
    RankOutOfRange,
    SigmaConditionFailed,
)

F5 = FieldSpec(5)
F7 = FieldSpec(7)


def test_standard_frame():
    frame = standard_frame(F5, (1, 2))
    e1, e2 = frame.idempotents
    assert e1 + e2 == ExactMatrix.identity(F5, 3)
    assert (e1 * e2).is_zero() and e1 * e1 == e1 and e2 * e2 == e2


def test_weight_projection_decomposes():
    frame = standard_frame(F7, (1, 1, 1))
    g = singleton_parts(frame)
    a = ExactMatrix.from_rows(
        F7, [[F7.scalar(v) for v in row] for row in [[1, 2, 3], [4, 5, 6], [0, 1, 2]]]
    )
    total = None
    for i in range(3):
        for j in range(3):
            piece = weight_project(a, g, i, j)
            total = piece if total is None else total + piece
    assert total == a
    assert pi0(a, g) == ExactMatrix.diagonal(F7, [F7.one(), F7.scalar(5), F7.scalar(2)])


def test_centralizer_block_dims():
    frame = standard_frame(F5, (1, 2))
    assert centralizer_subspace(singleton_parts(frame)).dim == 1 + 4
    assert centralizer_subspace(single_part(frame)).dim == 9


def test_sigma_condition():
    check_sigma_condition([F7.one(), F7.scalar(2), F7.scalar(3)], (1, 1, 1), F7)
    # sigma = (1, 6) with ranks (1, 1) dies at k = (1, 1) over F_7
    with pytest.raises(SigmaConditionFailed) as exc:
        check_sigma_condition([F7.one(), F7.scalar(6)], (1, 1), F7)
    assert tuple(exc.value.tuple) == (1, 1)


def test_example22_f7_is_certified_ms():
    V, g, lam = build_example22((1, 1, 1), (1, 2, 3), F7)
    cert = thm21_certify(V, g, lam)
    assert cert.basis_pairs_checked > 0
    assert V.dim == 5  # 2 diagonal directions inside Lambda-perp + 3 lower blocks
    assert find_idempotent(V) is None
    assert ms_by_idempotent_criterion(V).is_ms


def test_build_rejects_bad_sigma():
    with pytest.raises(SigmaConditionFailed):
        build_example22((1, 1), (1, 6), F7)
    # the certifier wraps the same failure with the hypothesis name
    V, g, lam = build_example22((1, 1, 1), (1, 2, 3), F7)
    from mzspace.constructions import LambdaSpec
    bad = LambdaSpec(g, (F7.one(), F7.scalar(6), F7.scalar(3)))
    with pytest.raises(HypothesisFailed) as exc:
        thm21_certify(V, g, bad)
    assert exc.value.hypothesis == "sigma"


def test_certify_rejects_escaping_subspace():
    V, g, lam = build_example22((1, 1, 1), (1, 2, 3), F7)
    W = V.sum(span_of([ExactMatrix.unit(F7, 3, 3, 0, 1)]))  # an upper block
    with pytest.raises(HypothesisFailed):
        thm21_certify(W, g, lam)


def test_example23_extension():
    V, g, lam = build_example22((1, 1, 1), (1, 2, 3), F7)
    u = ExactMatrix.unit(F7, 3, 3, 0, 1)  # e_1 M e_2
    w = ExactMatrix.unit(F7, 3, 3, 1, 2)  # e_2 M e_3
    ext = build_example23_extension(V, g, u, w)
    assert ext.subspace.dim == V.dim + 1
    assert all(ext.subspace.contains(b) for b in V.basis)
    assert ext.e1_u_e3_vanishes
    assert find_idempotent(ext.subspace) is None
    # so the t=3 member was not maximal
    with pytest.raises(BadBlocks):
        build_example23_extension(V, g, w, u)  # blocks swapped


def test_example23_rejects_zero_product():
    # with a rank-2 middle block u and w can multiply to zero
    F11 = FieldSpec(11)
    V, g, lam = build_example22((1, 2, 1), (1, 2, 3), F11)
    u = ExactMatrix.unit(F11, 4, 4, 0, 1)
    w = ExactMatrix.unit(F11, 4, 4, 2, 3)
    with pytest.raises(ProductZero):
        build_example23_extension(V, g, u, w)


def test_example24_and_cor26_shapes():
    fam = build_example24(1, 1, 1, 1, 2, F7)
    cert = thm21_certify(fam.subspace, fam.grouped, fam.lam)
    assert fam.subspace.codim == 3
    fam2 = build_cor26(2, 1, 1, 2, F5)
    assert fam2.subspace.codim == 2
    assert fam2.n3 == 1
    with pytest.raises(RankOutOfRange):
        build_cor26(2, 0, 1, 2, F5)
    with pytest.raises(RankOutOfRange):
        build_cor26(2, 2, 1, 2, F5)


def test_cor26_complement_form_matches():
    # independently-built orthogonal-complement description of the same space
    assert cor26_complement_form(2, 1, 1, 2, F5) == build_cor26(2, 1, 1, 2, F5).subspace
    assert cor26_complement_form(3, 1, 1, 2, F7) == build_cor26(3, 1, 1, 2, F7).subspace


def test_rational_family():
    Q = FieldSpec(0)
    fam = build_cor26(2, 1, Fraction(1), Fraction(2), Q)
    cert = thm21_certify(fam.subspace, fam.grouped, fam.lam)
    assert fam.subspace.codim == 2
