"""Algebra file format and report serialization.

Algebra files are UTF-8 JSON with sparse integer-indexed structure
triples and scalar *strings*, so exact rationals survive round-trips
losslessly; no floating point appears in any interface.  Loading
re-validates the schema, index bounds, the field spec and the unit
axiom before an Algebra is returned.

All serializers are deterministic: identical inputs (and seeds) give
byte-identical output.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .algebra import Algebra, Element, UnitAxiomError
from .analysis import (AnalysisReport, CommutatorLawsReport, HypothesisStatus,
                       ViolationWitness)
from .fields import FieldSpec, Scalar
from .forge import ForgeResult, Frame
from .linalg import Matrix, Subspace

__all__ = [
    "AlgebraFileError",
    "algebra_from_dict",
    "algebra_to_dict",
    "analysis_report_to_dict",
    "analysis_report_to_text",
    "forge_result_to_dict",
    "forge_result_to_json",
    "forge_result_to_text",
    "load_algebra",
    "save_algebra",
    "witness_to_dict",
]

SCHEMA_VERSION = 1


class AlgebraFileError(ValueError):
    """Malformed algebra file: parse error or schema violation."""


# -- algebra files -----------------------------------------------------------


def _field_to_dict(field: FieldSpec) -> dict:
    if field.is_rational:
        return {"kind": "rational"}
    return {"kind": "prime", "p": field.p}


def _field_from_dict(d, where: str) -> FieldSpec:
    if not isinstance(d, dict) or "kind" not in d:
        raise AlgebraFileError(f"{where}: field must be an object with a 'kind'")
    kind = d["kind"]
    try:
        if kind == "rational":
            return FieldSpec.rational()
        if kind == "prime":
            return FieldSpec.prime(d.get("p"))
    except ValueError as e:
        raise AlgebraFileError(f"{where}: {e}") from e
    raise AlgebraFileError(f"{where}: unknown field kind {kind!r}")


def algebra_to_dict(A: Algebra) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "name": A.name,
        "field": _field_to_dict(A.field),
        "dimension": A.dim,
        "basis": list(A.labels),
        "unit": [A.field.render(c) for c in A.unit],
        "structure": [[i, j, k, A.field.render(c)] for (i, j, k, c) in A.structure],
    }


def algebra_from_dict(data, where: str = "algebra") -> Algebra:
    if not isinstance(data, dict):
        raise AlgebraFileError(f"{where}: top level must be an object")
    for key in ("name", "field", "dimension", "basis", "unit", "structure"):
        if key not in data:
            raise AlgebraFileError(f"{where}: missing key {key!r}")
    field = _field_from_dict(data["field"], where)
    dim = data["dimension"]
    if not isinstance(dim, int) or dim < 1:
        raise AlgebraFileError(f"{where}: dimension must be a positive integer")
    basis = data["basis"]
    if not isinstance(basis, list) or len(basis) != dim:
        raise AlgebraFileError(f"{where}: basis must list {dim} labels")
    unit_raw = data["unit"]
    if not isinstance(unit_raw, list) or len(unit_raw) != dim:
        raise AlgebraFileError(f"{where}: unit must list {dim} scalar strings")
    structure: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    if not isinstance(data["structure"], list):
        raise AlgebraFileError(f"{where}: structure must be a list of entries")
    for pos, entry in enumerate(data["structure"]):
        if (not isinstance(entry, list) or len(entry) != 4
                or not all(isinstance(x, int) for x in entry[:3])
                or not isinstance(entry[3], str)):
            raise AlgebraFileError(
                f"{where}: structure entry {pos} must be [i, j, k, scalar-string]")
        i, j, k, text = entry
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise AlgebraFileError(
                f"{where}: structure entry {pos} has an index out of range")
        try:
            coeff = field.parse(text)
        except ValueError as e:
            raise AlgebraFileError(f"{where}: structure entry {pos}: {e}") from e
        structure.setdefault((i, j), []).append((k, coeff))
    try:
        unit = [field.parse(t) if isinstance(t, str) else t for t in unit_raw]
    except ValueError as e:
        raise AlgebraFileError(f"{where}: unit: {e}") from e
    try:
        return Algebra(str(data["name"]), field, dim, [str(b) for b in basis],
                       unit, structure)
    except UnitAxiomError:
        raise
    except ValueError as e:
        raise AlgebraFileError(f"{where}: {e}") from e


def load_algebra(path: Union[str, Path]) -> Algebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"cannot read {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e
    return algebra_from_dict(data, where=str(path))


def save_algebra(A: Algebra, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(A), indent=2) + "\n",
                          encoding="utf-8")


# -- report serialization ------------------------------------------------------


def _vec(A: Algebra, x: Element) -> list[str]:
    return [A.field.render(c) for c in x]


def _matrix(A: Algebra, m: Matrix) -> list[list[str]]:
    return [[A.field.render(c) for c in row] for row in m.entries]


def _subspace(A: Algebra, s: Subspace) -> dict:
    return {"dim": s.dim, "basis": [_vec(A, r) for r in s.basis_rows]}


def witness_to_dict(A: Algebra, w: ViolationWitness) -> dict:
    product = A.mul(w.left, w.right)
    return {
        "kind": w.kind,
        "left": _vec(A, w.left),
        "left_pretty": A.format_element(w.left),
        "right": _vec(A, w.right),
        "right_pretty": A.format_element(w.right),
        "product": _vec(A, product),
        "product_is_zero": not any(product),
        "provenance": w.provenance,
    }


def _hypothesis_to_dict(A: Algebra, h: HypothesisStatus) -> dict:
    out = {"status": "holds (sampled)" if h.holds else "violated",
           "candidates_tested": h.sampled}
    if h.witness is not None:
        out["witness"] = witness_to_dict(A, h.witness)
    return out


def frame_to_dict(A: Algebra, f: Frame) -> dict:
    return {
        "size": f.size,
        "elements": [_vec(A, u) for u in f.elements],
        "elements_pretty": [A.format_element(u) for u in f.elements],
        "squares": [A.field.render(g) for g in f.squares],
        "log": list(f.log),
    }


def forge_result_to_dict(A: Algebra, r: ForgeResult) -> dict:
    out = {
        "schema": f"forge-result/{SCHEMA_VERSION}",
        "algebra": r.algebra_name,
        "seed": r.seed,
        "classification": r.classification,
        "frame": frame_to_dict(A, r.frame) if r.frame else None,
        "witness": witness_to_dict(A, r.witness) if r.witness else None,
        "change_of_basis": _matrix(A, r.change_of_basis) if r.change_of_basis else None,
        "norm_diagonal": ([A.field.render(c) for c in r.norm_diagonal]
                          if r.norm_diagonal else None),
        "positive_definite": r.positive_definite,
        "division_verdict": r.division_verdict,
        "audit": list(r.audit),
    }
    return out


def forge_result_to_json(A: Algebra, r: ForgeResult) -> str:
    return json.dumps(forge_result_to_dict(A, r), indent=2) + "\n"


def forge_result_to_text(A: Algebra, r: ForgeResult) -> str:
    lines = [f"algebra:        {r.algebra_name}",
             f"classification: {r.classification}"]
    if r.frame is not None:
        lines.append("frame:")
        for u, g in zip(r.frame.elements, r.frame.squares):
            lines.append(f"  {A.format_element(u)}   (square {g})")
    if r.norm_diagonal is not None:
        diag = ", ".join(str(c) for c in r.norm_diagonal)
        lines.append(f"norm diagonal:  ({diag})")
        lines.append(f"verdict:        {r.division_verdict}")
    if r.witness is not None:
        w = r.witness
        lines.append(f"witness [{w.kind}]:")
        lines.append(f"  left:  {A.format_element(w.left)}")
        lines.append(f"  right: {A.format_element(w.right)}")
        lines.append(f"  product: {A.format_element(A.mul(w.left, w.right))}")
        lines.append(f"  via: {w.provenance}")
    lines.append("audit:")
    lines.extend(f"  {step}" for step in r.audit)
    return "\n".join(lines) + "\n"


def analysis_report_to_dict(A: Algebra, rep: AnalysisReport) -> dict:
    out = {
        "schema": f"analysis-report/{SCHEMA_VERSION}",
        "algebra": rep.algebra_name,
        "dimension": rep.dim,
        "commutative": rep.is_commutative,
        "associative": rep.is_associative,
        "alternative": rep.is_alternative,
        "nucleus": _subspace(A, rep.nucleus),
        "center": _subspace(A, rep.center),
        "hypothesis_i": _hypothesis_to_dict(A, rep.hypothesis_i),
        "hypothesis_iib": _hypothesis_to_dict(A, rep.hypothesis_iib),
        "notes": list(rep.notes),
    }
    if rep.alternativity_witness is not None:
        aw = rep.alternativity_witness
        out["alternativity_witness"] = {
            "side": aw.side,
            "x": _vec(A, aw.x),
            "y": _vec(A, aw.y),
            "associator": _vec(A, aw.value),
            "basis_triple": list(aw.triple),
        }
    return out


def analysis_report_to_text(A: Algebra, rep: AnalysisReport) -> str:
    yn = lambda b: "yes" if b else "no"
    lines = [
        f"algebra:     {rep.algebra_name} (dim {rep.dim})",
        f"commutative: {yn(rep.is_commutative)}",
        f"associative: {yn(rep.is_associative)}",
        f"alternative: {yn(rep.is_alternative)}",
        f"nucleus dim: {rep.nucleus.dim}",
        f"center dim:  {rep.center.dim}",
        f"hypothesis (i), no nonzero commutator divides zero: "
        f"{'violated' if not rep.hypothesis_i.holds else rep.hypothesis_i.detail}",
        f"hypothesis (ii)(b), commutator squares central: "
        f"{'violated' if not rep.hypothesis_iib.holds else rep.hypothesis_iib.detail}",
    ]
    for h, tag in ((rep.hypothesis_i, "i"), (rep.hypothesis_iib, "ii(b)")):
        if h.witness is not None:
            w = h.witness
            lines.append(f"witness ({tag}) [{w.kind}]: "
                         f"left {A.format_element(w.left)}; "
                         f"right {A.format_element(w.right)}; {w.provenance}")
    if rep.alternativity_witness is not None:
        aw = rep.alternativity_witness
        lines.append(f"alternativity fails: ({aw.side} side) basis triple "
                     f"{aw.triple}, x = {A.format_element(aw.x)}, "
                     f"y = {A.format_element(aw.y)}")
    lines.extend(f"note: {n}" for n in rep.notes)
    return "\n".join(lines) + "\n"


def laws_report_to_dict(A: Algebra, rep: CommutatorLawsReport) -> dict:
    return {
        "applicable": rep.applicable,
        "reason": rep.reason,
        "trials": rep.trials,
        "checked": rep.checked,
        "failures": [{"law": f.law, "x": _vec(A, f.x), "y": _vec(A, f.y),
                      "detail": f.detail} for f in rep.failures],
        "zero_divisor_commutators": [witness_to_dict(A, w)
                                     for w in rep.zero_divisor_commutators],
        "passed": rep.passed,
    }


def fuzz_report_to_dict(A: Algebra, rep) -> dict:
    def suite(s):
        if s is None:
            return None
        return {"name": s.name, "checks": s.checks, "failures": list(s.failures),
                "skipped": s.skipped, "passed": s.passed}

    return {
        "schema": f"fuzz-report/{SCHEMA_VERSION}",
        "algebra": rep.algebra_name,
        "trials": rep.trials,
        "seed": rep.seed,
        "commutator_laws": laws_report_to_dict(A, rep.laws),
        "forge_classification": rep.forge_result.classification,
        "forge_witness": (witness_to_dict(A, rep.forge_result.witness)
                          if rep.forge_result.witness else None),
        "triple_identities": suite(rep.triple_suite),
        "norm_multiplicativity": suite(rep.norm_suite),
        "violation_found": rep.violation_found,
    }


def fuzz_report_to_text(A: Algebra, rep) -> str:
    lines = [f"algebra: {rep.algebra_name} (trials {rep.trials}, seed {rep.seed})"]
    laws = rep.laws
    if laws.applicable:
        status = "pass" if laws.passed else "FAIL"
        lines.append(f"commutator laws: {status} "
                     f"({laws.checked} trials, {len(laws.failures)} failures)")
        lines.extend(f"  failure [{f.law}]: {f.detail}" for f in laws.failures)
        for w in laws.zero_divisor_commutators:
            lines.append(f"  sampled zero-divisor commutator: "
                         f"{A.format_element(w.left)}")
    else:
        lines.append(f"commutator laws: skipped ({laws.reason})")
    lines.append(f"forge classification: {rep.forge_result.classification}")
    if rep.forge_result.witness is not None:
        w = rep.forge_result.witness
        lines.append(f"  witness [{w.kind}]: left {A.format_element(w.left)}; "
                     f"right {A.format_element(w.right)}")
    for s in (rep.triple_suite, rep.norm_suite):
        if s is None:
            continue
        if s.skipped:
            lines.append(f"{s.name}: skipped ({s.skipped})")
        else:
            status = "pass" if s.passed else "FAIL"
            lines.append(f"{s.name}: {status} ({s.checks} checks, "
                         f"{len(s.failures)} failures)")
            lines.extend(f"  {f}" for f in s.failures)
    lines.append("violation found" if rep.violation_found else "all suites clean")
    return "\n".join(lines) + "\n"
