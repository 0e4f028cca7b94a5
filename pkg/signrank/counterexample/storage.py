"""Bundle directory layout: one JSON file per artifact plus the figure."""

import logging
from pathlib import Path
from typing import List, Optional

from signrank import serialization as codec
from signrank.core.errors import SerializationError
from signrank.core.models import VerificationReport
from signrank.counterexample.bundle import PATTERN_NAMES, CounterexampleBundle
from signrank.incidence import bipartite_graph

logger = logging.getLogger(__name__)

BUNDLE_FILES = (
    "incidence.json",
    "realization.json",
    "D.json",
    "C.json",
    "E.json",
    "B.json",
    "A.json",
    "patterns.json",
    "certificate_q.json",
    "graph.json",
    "report.json",
)
FIGURE_FILE = "figure.svg"


def write_report(report: VerificationReport, out_dir: Path) -> Path:
    return codec.write_json(Path(out_dir) / "report.json", report.model_dump(mode="json"))


def write_bundle(bundle: CounterexampleBundle, out_dir: Path, report: Optional[VerificationReport] = None) -> List[Path]:
    """Write every JSON artifact; report.json only when a report is given."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    graph = bipartite_graph(bundle.patterns["A"])
    documents = {
        "incidence.json": codec.encode_structure(bundle.structure),
        "realization.json": codec.encode_realization(bundle.realization),
        "patterns.json": {name: codec.encode_pattern(bundle.patterns[name]) for name in PATTERN_NAMES},
        "certificate_q.json": codec.encode_certificate(bundle.nonrealizability),
        "graph.json": {**graph.to_document(), "edge_list": graph.to_text()},
    }
    for name in PATTERN_NAMES:
        documents[f"{name}.json"] = codec.encode_matrix(getattr(bundle, name))
    written = [codec.write_json(out / filename, document) for filename, document in sorted(documents.items())]
    if report is not None:
        written.append(write_report(report, out))
    logger.debug("wrote %d bundle files to %s", len(written), out)
    return written


def load_bundle(bundle_dir: Path) -> CounterexampleBundle:
    """Reload a bundle written by write_bundle (report.json is not needed)."""
    root = Path(bundle_dir)
    if not root.is_dir():
        raise SerializationError(f"{root} is not a bundle directory")
    patterns = codec.read_json(root / "patterns.json")
    if not isinstance(patterns, dict):
        raise SerializationError("patterns.json must map matrix names to patterns")
    matrices = {name: codec.decode_matrix(codec.read_json(root / f"{name}.json")) for name in PATTERN_NAMES}
    return CounterexampleBundle(
        structure=codec.decode_structure(codec.read_json(root / "incidence.json")),
        realization=codec.decode_realization(codec.read_json(root / "realization.json")),
        patterns={name: codec.decode_pattern(patterns.get(name)) for name in PATTERN_NAMES},
        nonrealizability=codec.decode_certificate(codec.read_json(root / "certificate_q.json")),
        **matrices,
    )
