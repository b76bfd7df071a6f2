"""
Excepciones comunes de la librería
"""
from __future__ import annotations

from typing import List, Optional, TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from utils.matrix import RatMatrix


class MatrixError(ValueError):
    """Error base: dimensiones incompatibles, listas vacías, matrices no cuadradas..."""


class NonSymmetricError(MatrixError):
    pass


class ZeroColumnError(MatrixError):
    def __init__(self, column: int):
        self.column = column
        super().__init__(f"zero column {column}")


class RankDeficientError(MatrixError):
    def __init__(self, rank: int, rows: int):
        self.rank = rank
        self.rows = rows
        super().__init__(f"rank deficient: rank {rank} < {rows} rows")


class EnumerationLimitError(MatrixError):
    pass


class ConnectivityMismatchError(MatrixError):
    """
    Las componentes leídas de la RREF del laplaciano no coinciden con las del patrón de ceros.

    Guarda ambas lecturas para poder informar del hallazgo sin repararlo.
    """

    def __init__(self, rref: "RatMatrix", rref_sets: List[List[int]], zero_pattern: List[List[int]],
                 message: Optional[str] = None):
        self.rref = rref
        self.rref_sets = rref_sets
        self.zero_pattern = zero_pattern
        super().__init__(
            message or f"laplacian rref components {rref_sets} != zero-pattern components {zero_pattern}"
        )


class MatrixParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, token: str = ""):
        self.line = line
        self.column = column
        self.token = token
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")
