"""Deterministic JSON codec for every artifact the toolkit writes.

Rationals are always strings ("p/q" or "p"); field contexts are named
``q``, ``qsqrt:<d>``, ``poly:q`` or ``poly:qsqrt:<d>``.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import ValidationError

from signrank.core.errors import SerializationError
from signrank.core.models import IncidenceDocument
from signrank.exactfield import FieldContext, Polynomial, QuadraticNumber
from signrank.exactfield.rational import format_rational, parse_rational
from signrank.exactlinalg import ExactMatrix, MinrankWitness, SignPattern
from signrank.incidence import IncidenceStructure
from signrank.rationalizer import (
    EntryReport,
    NeedsRefinement,
    RatioMatrix,
    RationalizationCertificate,
    Window,
)
from signrank.realizer import FrameOutcome, RealizabilityCertificate, Realization, StepKind, TraceStep, Verdict

Json = Union[Dict[str, Any], List[Any], str, int, bool, None]


def dumps(document: Json) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"invalid JSON: {exc}") from exc


def write_json(path: Path, document: Json) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(document), encoding="utf-8")
    return path


def read_json(path: Path) -> Any:
    try:
        return loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise SerializationError(f"cannot read {path}: {exc}") from exc


def _require(document: Any, *keys: str) -> Dict[str, Any]:
    if not isinstance(document, dict):
        raise SerializationError(f"expected an object, got {type(document).__name__}")
    missing = [k for k in keys if k not in document]
    if missing:
        raise SerializationError(f"missing keys {missing}")
    return document


# -- scalars and polynomials -------------------------------------------------------

def encode_rational(x: Any) -> str:
    return format_rational(x)


def decode_rational(text: Any) -> Any:
    if not isinstance(text, str):
        raise SerializationError(f"rationals are strings, got {text!r}")
    return parse_rational(text)


def encode_quadratic(x: QuadraticNumber) -> Dict[str, Any]:
    return {"a": format_rational(x.a), "b": format_rational(x.b), "d": x.d}


def decode_quadratic(document: Any) -> QuadraticNumber:
    doc = _require(document, "a", "b", "d")
    try:
        return QuadraticNumber(decode_rational(doc["a"]), decode_rational(doc["b"]), int(doc["d"]))
    except (TypeError, ValueError) as exc:
        raise SerializationError(f"bad quadratic number {document!r}: {exc}") from exc


def encode_scalar(x: Any, context: FieldContext) -> Any:
    x = context.coerce(x)
    if context.kind == "Q":
        return encode_rational(x)
    if context.kind == "QuadSqrt":
        return encode_quadratic(x)
    return [encode_scalar(c, context.base) for c in x.coeffs]


def decode_scalar(document: Any, context: FieldContext) -> Any:
    if context.kind == "Q":
        return decode_rational(document)
    if context.kind == "QuadSqrt":
        if isinstance(document, str):
            return context.coerce(decode_rational(document))
        value = decode_quadratic(document)
        if value.d != context.d:
            raise SerializationError(f"{value} does not belong to {context}")
        return value
    if isinstance(document, dict):
        return decode_polynomial(document).lift(context.base)
    if not isinstance(document, list):
        raise SerializationError(f"polynomial entries are coefficient lists, got {document!r}")
    return Polynomial.of((decode_scalar(c, context.base) for c in document), context.base)


def encode_polynomial(p: Polynomial) -> Dict[str, Any]:
    return {"base": p.base.name, "coeffs": [encode_scalar(c, p.base) for c in p.coeffs]}


def decode_polynomial(document: Any) -> Polynomial:
    doc = _require(document, "base", "coeffs")
    base = FieldContext.parse(doc["base"])
    if base.kind == "PolyOver" or not isinstance(doc["coeffs"], list):
        raise SerializationError(f"bad polynomial {document!r}")
    return Polynomial.of((decode_scalar(c, base) for c in doc["coeffs"]), base)


# -- matrices and patterns ------------------------------------------------------------

def encode_matrix(m: ExactMatrix) -> Dict[str, Any]:
    return {
        "context": m.context.name,
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[encode_scalar(x, m.context) for x in row] for row in m.entries],
    }


def decode_matrix(document: Any) -> ExactMatrix:
    doc = _require(document, "context", "entries")
    context = FieldContext.parse(doc["context"])
    rows = doc["entries"]
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise SerializationError("matrix entries must be a list of rows")
    matrix = ExactMatrix.from_rows([[decode_scalar(x, context) for x in row] for row in rows], context)
    if (doc.get("rows", matrix.rows), doc.get("cols", matrix.cols)) != matrix.shape:
        raise SerializationError(f"declared shape does not match {matrix.shape}")
    return matrix


def encode_pattern(p: SignPattern) -> List[str]:
    return p.to_strings()


def decode_pattern(document: Any) -> SignPattern:
    if isinstance(document, dict) and "pattern" in document:
        document = document["pattern"]
    if not isinstance(document, list) or not all(isinstance(row, str) for row in document):
        raise SerializationError("sign patterns are lists of strings over '+-0'")
    return SignPattern.from_strings(document)


def decode_ratio_matrix(document: Any) -> RatioMatrix:
    """Polynomial-matrix JSON with an optional ``denominators`` grid of the same shape."""
    doc = _require(document, "context")
    if "numerators" not in doc and "entries" not in doc:
        raise SerializationError("expected 'entries' or 'numerators'")
    numerators = decode_matrix({"context": doc["context"], "entries": doc.get("numerators", doc.get("entries"))})
    if numerators.context.kind != "PolyOver":
        raise SerializationError(f"expected a polynomial context, got {numerators.context.name}")
    if "denominators" not in doc:
        return RatioMatrix.from_polynomials(numerators)
    denominators = decode_matrix({"context": doc["context"], "entries": doc["denominators"]})
    if denominators.shape != numerators.shape:
        raise SerializationError("numerator and denominator grids differ in shape")
    return RatioMatrix(
        numerators.context.base,
        tuple(tuple(zip(a, b)) for a, b in zip(numerators.entries, denominators.entries)),
    )


def encode_witness(w: MinrankWitness) -> Dict[str, Any]:
    return {"pattern": encode_pattern(w.pattern), "witness": encode_matrix(w.witness), "rank": w.rank}


def decode_witness(document: Any) -> MinrankWitness:
    doc = _require(document, "pattern", "witness", "rank")
    try:
        rank = int(doc["rank"])
    except (TypeError, ValueError) as exc:
        raise SerializationError(f"bad witness rank {doc['rank']!r}") from exc
    return MinrankWitness(decode_pattern(doc["pattern"]), decode_matrix(doc["witness"]), rank)


# -- incidence and realizations -----------------------------------------------------

def encode_structure(s: IncidenceStructure) -> Dict[str, Any]:
    return {"points": list(s.points), "lines": [list(line) for line in s.lines]}


def decode_structure(document: Any) -> IncidenceStructure:
    try:
        parsed = IncidenceDocument.model_validate(document)
    except ValidationError as exc:
        raise SerializationError(f"bad incidence document: {exc}") from exc
    return IncidenceStructure.from_lines(parsed.points, parsed.lines)


def encode_realization(r: Realization) -> Dict[str, Any]:
    return {
        "field": r.field.name,
        "points": {label: [encode_scalar(x, r.field) for x in triple] for label, triple in r.point_coords.items()},
        "lines": [[encode_scalar(x, r.field) for x in r.line_coeffs[i]] for i in sorted(r.line_coeffs)],
    }


def decode_realization(document: Any) -> Realization:
    doc = _require(document, "field", "points", "lines")
    field = FieldContext.parse(doc["field"])

    def triple(values: List[Any]) -> tuple:
        return tuple(decode_scalar(x, field) for x in values)

    return Realization(
        field,
        {label: triple(values) for label, values in doc["points"].items()},
        {index: triple(values) for index, values in enumerate(doc["lines"])},
    )


def encode_certificate(c: RealizabilityCertificate) -> Dict[str, Any]:
    document = {
        "verdict": c.verdict.value,
        "field": c.field.name,
        "frame": list(c.frame),
        "trace": [
            {
                "step": step.step,
                "kind": step.kind.value,
                "target": step.target,
                "source": list(step.source),
                "result": [encode_polynomial(p) for p in step.result],
            }
            for step in c.trace
        ],
        "constraints": [encode_polynomial(p) for p in c.constraints],
        "side_conditions": [encode_polynomial(p) for p in c.side_conditions],
        "evidence": c.evidence,
        "reason": c.reason,
        "frames_tried": [
            {"frame": list(o.frame), "verdict": o.verdict.value, "reason": o.reason} for o in c.frames_tried
        ],
    }
    if c.witness is not None:
        document["witness"] = encode_realization(c.witness)
    return document


def decode_certificate(document: Any) -> RealizabilityCertificate:
    doc = _require(document, "verdict", "field", "frame")
    try:
        return RealizabilityCertificate(
            verdict=Verdict(doc["verdict"]),
            field=FieldContext.parse(doc["field"]),
            frame=tuple(doc["frame"]),
            trace=tuple(
                TraceStep(
                    int(step["step"]),
                    StepKind(step["kind"]),
                    step["target"],
                    tuple(step["source"]),
                    tuple(decode_polynomial(p) for p in step["result"]),
                )
                for step in doc.get("trace", [])
            ),
            constraints=tuple(decode_polynomial(p) for p in doc.get("constraints", [])),
            side_conditions=tuple(decode_polynomial(p) for p in doc.get("side_conditions", [])),
            witness=decode_realization(doc["witness"]) if doc.get("witness") else None,
            evidence=doc.get("evidence", ""),
            reason=doc.get("reason", ""),
            frames_tried=tuple(
                FrameOutcome(tuple(o["frame"]), Verdict(o["verdict"]), o.get("reason", ""))
                for o in doc.get("frames_tried", [])
            ),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializationError(f"bad certificate: {exc}") from exc


# -- rationalization ----------------------------------------------------------------

def encode_window(w: Window) -> Dict[str, str]:
    return {"lo": encode_rational(w.lo), "hi": encode_rational(w.hi)}


def decode_window(document: Any) -> Window:
    doc = _require(document, "lo", "hi")
    try:
        return Window(decode_rational(doc["lo"]), decode_rational(doc["hi"]))
    except ValueError as exc:
        raise SerializationError(str(exc)) from exc


def encode_rationalization(c: RationalizationCertificate) -> Dict[str, Any]:
    return {
        "beta": encode_rational(c.beta),
        "window": encode_window(c.window),
        "per_entry": [
            {"entry": [e.row, e.col], "root_count_in_window": e.root_count, "sign_at_beta": e.sign_at_beta}
            for e in c.per_entry
        ],
        "rank_before": c.rank_before,
        "rank_after": c.rank_after,
    }


def decode_rationalization(document: Any) -> RationalizationCertificate:
    doc = _require(document, "beta", "window", "per_entry", "rank_before", "rank_after")
    try:
        return RationalizationCertificate(
            beta=decode_rational(doc["beta"]),
            window=decode_window(doc["window"]),
            per_entry=tuple(
                EntryReport(
                    int(e["entry"][0]), int(e["entry"][1]), int(e["root_count_in_window"]), int(e["sign_at_beta"])
                )
                for e in doc["per_entry"]
            ),
            rank_before=int(doc["rank_before"]),
            rank_after=int(doc["rank_after"]),
        )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise SerializationError(f"bad rationalization certificate: {exc}") from exc


def encode_refinement(n: NeedsRefinement) -> Dict[str, Any]:
    return {
        "status": "NeedsRefinement",
        "window": encode_window(n.window),
        "entries": [list(entry) for entry in n.entries],
        "reason": n.reason,
    }
