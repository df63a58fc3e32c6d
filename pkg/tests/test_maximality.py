from fractions import Fraction

import pytest

from mzspace import (
    ExactMatrix,
    FieldSpec,
    build_cor26,
    build_example24,
    certify_maximal,
    extension_directions,
    is_maximal_ms,
    maximality_witness,
    span_of,
    subspace_sum,
)
from mzspace.errors import DirectionInV
from mzspace.maximality import CASE_1, CASE_1T, CASE_2, CASE_CENTRAL

F5 = FieldSpec(5)
F7 = FieldSpec(7)


def _m(field, rows):
    return ExactMatrix.from_rows(field, [[field.scalar(v) for v in r] for r in rows])


@pytest.fixture(scope="module")
def fam25():
    return build_cor26(2, 1, 1, 2, F5)


def test_case1_frozen_values(fam25):
    # direction E21 lands in Case 1 with beta = 3 and the idempotent below
    w = ExactMatrix.unit(F5, 2, 2, 1, 0)
    bundle = maximality_witness(fam25, w)
    assert bundle.case == CASE_1
    assert bundle.params["beta"] == F5.scalar(3)
    q = bundle.idempotent
    assert q == _m(F5, [[2, 2], [4, 4]])
    assert q * q == q


def test_central_frozen_values(fam25):
    # direction E22 has zero off-blocks: central branch, gamma = 4
    w = ExactMatrix.unit(F5, 2, 2, 1, 1)
    bundle = maximality_witness(fam25, w)
    assert bundle.case == CASE_CENTRAL
    assert bundle.params["gamma"] == F5.scalar(4)
    q = bundle.idempotent
    assert q * q == q and not q.is_zero()


def test_bundle_idempotent_extends(fam25):
    # every witness idempotent lives in V + Fw but not in V
    for w in extension_directions(fam25.subspace):
        bundle = maximality_witness(fam25, w)
        q = bundle.idempotent
        assert q * q == q and not q.is_zero()
        bigger = subspace_sum(fam25.subspace, span_of([w]))
        assert bigger.contains(q)
        assert not fam25.subspace.contains(q)


def test_direction_inside_v_rejected(fam25):
    with pytest.raises(DirectionInV):
        maximality_witness(fam25, fam25.subspace.basis[0])


def test_certify_maximal_agrees_with_bruteforce(fam25):
    cert = certify_maximal(fam25)
    assert cert.is_maximal and cert.mode == "exhaustive"
    assert len(cert.bundles) == 6
    assert is_maximal_ms(fam25.subspace).is_maximal


def test_example24_f7_all_cases_exercised():
    fam = build_example24(1, 1, 1, 1, 2, F7)
    cert = certify_maximal(fam)
    assert cert.is_maximal
    assert len(cert.bundles) == 57  # (7^3 - 1) / 6 lines in the codim-3 quotient
    cases = {b.case for b in cert.bundles}
    assert cases == {CASE_CENTRAL, CASE_1, CASE_1T, CASE_2}


def test_case2_frozen_values():
    # w = E22 + E21 over the 2x2 family: alpha = 1, Q = E22 + E21
    fam = build_cor26(2, 1, 1, 2, F5)
    w = _m(F5, [[0, 0], [1, 1]])
    bundle = maximality_witness(fam, w)
    assert bundle.case == CASE_2
    assert bundle.params["alpha"] == F5.one()
    assert bundle.idempotent == _m(F5, [[0, 0], [1, 1]])


def test_rational_family_spot_check():
    Q = FieldSpec(0)
    fam = build_cor26(2, 1, Fraction(1), Fraction(2), Q)
    cert = certify_maximal(fam)
    assert cert.is_maximal
    assert cert.mode != "exhaustive"
    for b in cert.bundles:
        q = b.idempotent
        assert q * q == q and not q.is_zero()
