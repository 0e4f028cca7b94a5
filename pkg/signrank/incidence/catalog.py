"""Named classical configurations, including the nine-point configuration."""

from typing import Callable, Dict, List

from signrank.incidence.structure import IncidenceStructure

PERLES_LINES = ["ABEF", "ADG", "AHI", "BCH", "BGI", "CEG", "CFI", "DEI", "DFH"]


def _build(points: str, lines: List[str]) -> IncidenceStructure:
    return IncidenceStructure.from_lines(list(points), [list(line) for line in lines])


def perles_structure() -> IncidenceStructure:
    """Nine points A..I on nine lines, in the fixed listed order."""
    return _build("ABCDEFGHI", PERLES_LINES)


def triangle() -> IncidenceStructure:
    return _build("ABC", ["AB", "BC", "AC"])


def complete_quadrilateral() -> IncidenceStructure:
    # four lines in general position and their six meeting points
    return _build("ABCDEF", ["ABC", "ADE", "BDF", "CEF"])


def non_fano() -> IncidenceStructure:
    """Quadrangle ABCD with its three diagonal points E, F, G."""
    return _build("ABCDEFG", ["ABE", "CDE", "ACF", "BDF", "ADG", "BCG"])


def fano() -> IncidenceStructure:
    """The non-Fano configuration with its diagonal points made collinear."""
    return _build("ABCDEFG", ["ABE", "CDE", "ACF", "BDF", "ADG", "BCG", "EFG"])


def pappus() -> IncidenceStructure:
    return _build("ABCDEFGHI", ["ABC", "DEF", "AEG", "BDG", "AFH", "CDH", "BFI", "CEI", "GHI"])


CATALOG: Dict[str, Callable[[], IncidenceStructure]] = {
    "perles": perles_structure,
    "triangle": triangle,
    "complete-quadrilateral": complete_quadrilateral,
    "fano": fano,
    "non-fano": non_fano,
    "pappus": pappus,
}


def catalog_names() -> List[str]:
    return sorted(CATALOG)


def by_name(name: str) -> IncidenceStructure:
    try:
        return CATALOG[name.strip().lower()]()
    except KeyError:
        raise KeyError(f"unknown structure {name!r}; choose from {', '.join(catalog_names())}") from None
