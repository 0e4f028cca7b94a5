"""Incidence structures, the classical catalog and graph export."""

from signrank.incidence.catalog import (
    CATALOG,
    by_name,
    catalog_names,
    complete_quadrilateral,
    fano,
    non_fano,
    pappus,
    perles_structure,
    triangle,
)
from signrank.incidence.graph import BipartiteGraph, bipartite_graph
from signrank.incidence.structure import (
    Incidence,
    IncidenceMatrix,
    IncidenceStructure,
    incidence_matrix,
)

__all__ = [
    "CATALOG",
    "by_name",
    "catalog_names",
    "complete_quadrilateral",
    "fano",
    "non_fano",
    "pappus",
    "perles_structure",
    "triangle",
    "BipartiteGraph",
    "bipartite_graph",
    "Incidence",
    "IncidenceMatrix",
    "IncidenceStructure",
    "incidence_matrix",
]
