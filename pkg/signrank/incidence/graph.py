"""Bipartite graph of a symmetric block pattern [[0, P], [Pᵀ, 0]]."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from signrank.core.errors import ShapeError
from signrank.exactlinalg.patterns import Sign, SignPattern


@dataclass(frozen=True)
class BipartiteGraph:
    """Left vertices L1..Lm (rows of P), right vertices R1..Rn (columns of P)."""
    left: Tuple[str, ...]
    right: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.left) + len(self.right)

    def to_document(self) -> Dict[str, Any]:
        return {
            "left": list(self.left),
            "right": list(self.right),
            "edges": [list(edge) for edge in self.edges],
        }

    def to_text(self) -> str:
        """One "L_i R_j" edge per line."""
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def bipartite_graph(pattern: SignPattern, left_size: Optional[int] = None) -> BipartiteGraph:
    """Edge (Li, Rj) iff P[i][j] is nonzero.

    ``left_size`` defaults to half the order, which is the split of every
    pattern built as [[0, P], [Pᵀ, 0]] with square P.
    """
    n = pattern.rows
    if n != pattern.cols:
        raise ShapeError(f"pattern is {pattern.rows}×{pattern.cols}, not square")
    m = n // 2 if left_size is None else left_size
    if not 0 < m < n:
        raise ShapeError(f"left block size {m} does not split order {n}")
    if left_size is None and n % 2:
        raise ShapeError(f"odd order {n} needs an explicit left block size")
    for i in range(n):
        for j in range(n):
            same_side = (i < m) == (j < m)
            if same_side and pattern[i, j] is not Sign.ZERO:
                raise ShapeError(f"entry ({i + 1}, {j + 1}) lies in a diagonal block but is nonzero")
            if pattern[i, j] is not pattern[j, i]:
                raise ShapeError(f"pattern is not symmetric at ({i + 1}, {j + 1})")
    left = tuple(f"L{i + 1}" for i in range(m))
    right = tuple(f"R{j + 1}" for j in range(n - m))
    edges: List[Tuple[str, str]] = [
        (left[i], right[j])
        for i in range(m)
        for j in range(n - m)
        if pattern[i, m + j] is not Sign.ZERO
    ]
    return BipartiteGraph(left, right, tuple(edges))
