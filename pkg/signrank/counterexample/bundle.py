"""The nine-point counterexample: realization → D, C, E = DC → B → A."""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from signrank.core.config import settings
from signrank.core.errors import NoAvoidingLineFound, SignRankError
from signrank.core.models import VerificationReport
from signrank.exactfield import QQ, FieldContext
from signrank.exactlinalg import (
    ExactMatrix,
    Fill,
    MinrankWitness,
    Sign,
    SignPattern,
    block_assemble,
    rank,
    sgn,
    verify_witness,
)
from signrank.incidence import IncidenceStructure, incidence_matrix, perles_structure
from signrank.realizer import (
    RealizabilityCertificate,
    Realization,
    Verdict,
    coordinatize,
    cross,
    dot,
    recheck_certificate,
    validate_realization,
)

logger = logging.getLogger(__name__)

PATTERN_NAMES = ("D", "C", "E", "B", "A")


@dataclass(frozen=True)
class CounterexampleBundle:
    structure: IncidenceStructure
    realization: Realization
    D: ExactMatrix
    C: ExactMatrix
    E: ExactMatrix
    B: ExactMatrix
    A: ExactMatrix
    patterns: Dict[str, SignPattern]
    nonrealizability: RealizabilityCertificate

    @property
    def field(self) -> FieldContext:
        return self.realization.field


# -- affine normalization ----------------------------------------------------------

def _first_nonzero_one(triple: Sequence[Any], field: FieldContext) -> Tuple[Any, ...]:
    lead = next(x for x in triple if not field.is_zero(x))
    return tuple(x / lead for x in triple)


def _avoiding_line(points: List[Tuple[Any, ...]], field: FieldContext, bound: int) -> Tuple[int, int, int]:
    """Smallest-norm integer line (first nonzero coefficient positive) missing every point."""
    for norm in range(1, bound + 1):
        for line in product(range(-norm, norm + 1), repeat=3):
            if max(abs(c) for c in line) != norm or next(c for c in line if c) < 0:
                continue
            if all(not field.is_zero(dot(line, p)) for p in points):
                return line
    raise NoAvoidingLineFound(f"no integer line of max-norm <= {bound} avoids all points")


def normalize_affine(r: Realization, bound: Optional[int] = None) -> Realization:
    """Move every point off the line at infinity and scale points to z = 1.

    Points map by p' = T·p where T's last row is an avoiding line; lines map
    contragrediently (ℓ' = ℓ·T⁻¹) and are scaled to first nonzero coefficient 1.
    """
    field = r.field
    labels = list(r.point_coords)
    points = [r.point(label) for label in labels]
    if all(not field.is_zero(p[2]) for p in points):
        new_points = {label: p for label, p in zip(labels, points)}
        new_lines = dict(r.line_coeffs)
    else:
        line = _avoiding_line(points, field, bound or settings.avoiding_line_bound)
        k = next(k for k in (2, 1, 0) if line[k] != 0)
        units = [tuple(int(i == j) for j in range(3)) for i in range(3) if i != k]
        rows = (units[0], units[1], line)
        det = dot(rows[0], cross(rows[1], rows[2]))
        inverse_columns = (cross(rows[1], rows[2]), cross(rows[2], rows[0]), cross(rows[0], rows[1]))
        new_points = {label: tuple(dot(row, p) for row in rows) for label, p in zip(labels, points)}
        new_lines = {
            index: tuple(dot(coeffs, column) * field.coerce(1) / det for column in inverse_columns)
            for index, coeffs in r.line_coeffs.items()
        }
        logger.debug("sent line %s to infinity", line)
    return Realization(
        field,
        {label: tuple(x / p[2] for x in p) for label, p in new_points.items()},
        {index: _first_nonzero_one(coeffs, field) for index, coeffs in new_lines.items()},
    )


# -- construction ----------------------------------------------------------------

def sign_pattern_suite(b: CounterexampleBundle) -> Dict[str, SignPattern]:
    return {name: sgn(getattr(b, name)) for name in PATTERN_NAMES}


def assemble_matrices(s: IncidenceStructure, r: Realization) -> Dict[str, ExactMatrix]:
    """D rows are line coefficients, C columns are affine points (x, y, 1)."""
    field = r.field
    D = ExactMatrix.from_rows([r.line(i) for i in range(len(s.lines))], field)
    C = ExactMatrix.from_rows([[r.point(label)[k] for label in s.points] for k in range(3)], field)
    E = D @ C
    B = block_assemble([[Fill.IDENTITY, C], [D, E]])
    A = block_assemble([[Fill.ZERO, B], [B.T, Fill.ZERO]])
    return {"D": D, "C": C, "E": E, "B": B, "A": A}


def construct_bundle(d: Optional[int] = None) -> CounterexampleBundle:
    """Realize the nine-point configuration over ℚ(√d), build every matrix and
    attach the ℚ certificate. Nothing is verified here."""
    structure = perles_structure()
    field = FieldContext.quadratic(d or settings.default_field_d)
    certificate = coordinatize(structure, field)
    if certificate.verdict is not Verdict.REALIZABLE:
        raise SignRankError(f"nine-point configuration not realized over {field}: {certificate.reason}")
    realization = normalize_affine(certificate.witness)
    matrices = assemble_matrices(structure, realization)
    rational = coordinatize(structure, QQ)
    logger.debug("bundle over %s assembled; rational verdict %s", field, rational.verdict.value)
    return CounterexampleBundle(
        structure=structure,
        realization=realization,
        patterns={name: sgn(m) for name, m in matrices.items()},
        nonrealizability=rational,
        **matrices,
    )


def build_bundle(d: Optional[int] = None) -> CounterexampleBundle:
    """construct_bundle followed by verify_bundle; raises if any check fails."""
    bundle = construct_bundle(d)
    report = verify_bundle(bundle)
    if not report.passed:
        names = ", ".join(check.name for check in report.failed())
        raise SignRankError(f"bundle invariants failed: {names}")
    return bundle


# -- verification --------------------------------------------------------------------

def verify_bundle(b: CounterexampleBundle) -> VerificationReport:
    """Recompute every invariant; failures are report entries, never exceptions."""
    report = VerificationReport()
    s, r, field = b.structure, b.realization, b.field

    report.add("realization", validate_realization(s, r), f"{len(s.lines)}×{len(s.points)} incidences over {field}")
    lines_match = b.D.shape == (len(s.lines), 3) and all(b.D.row(i) == r.line(i) for i in range(len(s.lines)))
    report.add("D rows are line coefficients", lines_match, f"D is {b.D.rows}×{b.D.cols}")
    points_match = b.C.shape == (3, len(s.points)) and all(
        b.C.column(j) == r.point(label) for j, label in enumerate(s.points)
    )
    report.add("C columns are points", points_match, f"C is {b.C.rows}×{b.C.cols}")
    report.add("third row of C is all ones", all(x == 1 for x in b.C.row(2)), "")

    product_ok = b.D.cols == b.C.rows and b.D @ b.C == b.E
    report.add("E = DC", product_ok, f"{b.E.rows * b.E.cols} entries compared exactly")

    zeros = {(i, j) for i in range(b.E.rows) for j in range(b.E.cols) if field.is_zero(b.E[i, j])}
    incident = set(incidence_matrix(s).incident_positions())
    report.add("zero pattern of E", zeros == incident, f"{len(zeros)} zeros, {len(incident)} incidences")

    expected_B = block_assemble([[Fill.IDENTITY, b.C], [b.D, b.E]])
    report.add("B = [[I, C], [D, E]]", b.B == expected_B, f"B is {b.B.rows}×{b.B.cols}")
    rank_B = rank(b.B)
    report.add("rank(B) = 3", rank_B == 3, f"rank(B) = {rank_B}")
    expected_A = block_assemble([[Fill.ZERO, b.B], [b.B.T, Fill.ZERO]])
    report.add("A = [[0, B], [Bᵀ, 0]]", b.A == expected_A, f"A is {b.A.rows}×{b.A.cols}")
    rank_A = rank(b.A)
    report.add("rank(A) = 6", rank_A == 6, f"rank(A) = {rank_A}")
    report.add("A symmetric", b.A.is_symmetric(), "")

    recomputed = {name: sgn(getattr(b, name)) for name in PATTERN_NAMES}
    report.add("sign patterns", recomputed == b.patterns, ", ".join(PATTERN_NAMES))
    report.add("sgn(A) symmetric", recomputed["A"].is_symmetric(), "")
    report.add(
        "sgn(C) third row all plus",
        all(x is Sign.PLUS for x in recomputed["C"].entries[2]),
        recomputed["C"].to_strings()[2],
    )
    report.add(
        "B is a rank-3 member of its sign class",
        verify_witness(MinrankWitness(recomputed["B"], b.B, 3)),
        f"over {field}",
    )

    certificate = b.nonrealizability
    rechecked = certificate.field == QQ and certificate.verdict is Verdict.NON_REALIZABLE
    rechecked = rechecked and recheck_certificate(certificate, s)
    report.add(
        "no rational realization",
        rechecked,
        f"{certificate.verdict.value} over {certificate.field}, frame {''.join(certificate.frame)}, "
        + "constraints: " + "; ".join(str(p) for p in certificate.constraints),
    )

    report.summary = {
        "field": field.name,
        "rank_B": rank_B,
        "rank_A": rank_A,
        "zero_count_E": len(zeros),
        "incidences": len(incident),
        "mr_upper_bound_sgn_A": rank_A,
        "mr_upper_bound_sgn_B": rank_B,
        "rational_verdict": certificate.verdict.value,
    }
    return report
