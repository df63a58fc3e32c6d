"""JSON literals for fields, matrices, subspaces and verdicts.

Matrix literal:   {"p": int, "k": int, "modulus": [ints]?, "rows": [[..],..]}
Scalar literal:   integer (prime field), "num/den" string (rationals),
                  or coefficient list (extension field).
Subspace literal: {"field": field-literal, "n": int, "basis": [matrix,..]};
                  emitted bases are always canonical.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigError
from .fields import FieldSpec, Scalar
from .matrices import ExactMatrix
from .mscore import MaximalityVerdict, MsVerdict
from .subspaces import MatSubspace, span_of


def field_to_json(field: FieldSpec) -> dict:
    out = {"p": field.characteristic, "k": field.extension_degree}
    if field.modulus is not None:
        out["modulus"] = [_scalar_base_json(c) for c in field.modulus]
    return out


def _scalar_base_json(c):
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return int(c)


def field_from_json(data: dict) -> FieldSpec:
    try:
        p = int(data["p"])
        k = int(data.get("k", 1))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad field literal: {data!r}") from exc
    modulus = data.get("modulus")
    if modulus is not None:
        modulus = tuple(Fraction(c) if p == 0 else int(c) for c in modulus)
    return FieldSpec(p, k, modulus)


def scalar_to_json(x: Scalar):
    if isinstance(x.val, tuple):
        return [_scalar_base_json(c) for c in x.val]
    return _scalar_base_json(x.val)


def matrix_to_json(a: ExactMatrix) -> dict:
    out = field_to_json(a.field)
    out["rows"] = [[scalar_to_json(e) for e in a.row(i)] for i in range(a.nrows)]
    return out


def matrix_from_json(data: dict, field: FieldSpec = None) -> ExactMatrix:
    if field is None:
        field = field_from_json(data)
    rows = data.get("rows")
    if not isinstance(rows, list) or not rows:
        raise ConfigError(f"matrix literal needs nonempty rows: {data!r}")
    try:
        return ExactMatrix.from_rows(field, [[field.scalar(e) for e in r] for r in rows])
    except Exception as exc:
        raise ConfigError(f"bad matrix literal: {exc}") from exc


def subspace_to_json(S: MatSubspace) -> dict:
    return {
        "field": field_to_json(S.field),
        "n": S.n,
        "basis": [matrix_to_json(b) for b in S.basis],
    }


def subspace_from_json(data: dict) -> MatSubspace:
    try:
        field = field_from_json(data["field"])
        n = int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad subspace literal: {data!r}") from exc
    basis = [matrix_from_json(m, field) for m in data.get("basis", [])]
    for b in basis:
        if b.nrows != n or b.ncols != n:
            raise ConfigError("basis matrix shape does not match n")
    return span_of(basis, field=field, n=n)


def verdict_to_json(v: MsVerdict) -> dict:
    out = {"status": v.status, "method": v.method}
    if v.witness is not None:
        out["witness"] = matrix_to_json(v.witness)
    if v.evidence:
        out["evidence"] = {
            k: (matrix_to_json(val) if isinstance(val, ExactMatrix) else val)
            for k, val in v.evidence.items()
        }
    return out


def maximality_to_json(v: MaximalityVerdict) -> dict:
    evidence = []
    for w, outcome in v.evidence:
        item = {"direction": matrix_to_json(w)}
        if isinstance(outcome, ExactMatrix):
            item["idempotent"] = matrix_to_json(outcome)
        else:
            item["note"] = outcome
        evidence.append(item)
    return {"is_maximal": v.is_maximal, "reason": v.reason, "evidence": evidence}
