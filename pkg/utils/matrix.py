"""
Aritmética exacta de matrices densas: enteros de precisión arbitraria (int de Python)
y racionales (fractions.Fraction), más utilidades de permutaciones.

Convención de índices: el almacenamiento interno es 0-based, pero todo índice que
entra o sale por la interfaz pública (particiones, permutaciones, submatrices) es 1-based.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from utils.errors import MatrixError, NonSymmetricError


class IntMatrix:
    """Matriz densa e inmutable de enteros de precisión arbitraria."""

    __slots__ = ('rows', 'cols', '_data')

    def __init__(self, entries: Iterable[Iterable[int]]):
        data = tuple(tuple(_as_int(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise MatrixError("a matrix needs at least one row and one column")
        width = len(data[0])
        for i, row in enumerate(data, 1):
            if len(row) != width:
                raise MatrixError(f"row {i} has {len(row)} entries, expected {width}")
        self.rows: int = len(data)
        self.cols: int = width
        self._data: Tuple[Tuple[int, ...], ...] = data

    # Acceso -------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self._data[i]

    def col(self, j: int) -> Tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self._data)

    def to_lists(self) -> List[List[int]]:
        return [list(r) for r in self._data]

    # Predicados ---------------------------------------------------------
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._data[i][j] == self._data[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    # Operadores ---------------------------------------------------------
    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return multiply(self, other)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * x for x in r] for r in self._data])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()})"


class RatMatrix:
    """Matriz densa e inmutable de racionales exactos (siempre en términos mínimos)."""

    __slots__ = ('rows', 'cols', '_data')

    def __init__(self, entries: Iterable[Iterable[Union[int, Fraction]]]):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise MatrixError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise MatrixError("ragged rational matrix")
        self.rows: int = len(data)
        self.cols: int = width
        self._data: Tuple[Tuple[Fraction, ...], ...] = data

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._data[i]

    def col(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def __iter__(self) -> Iterator[Tuple[Fraction, ...]]:
        return iter(self._data)

    def to_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self._data]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._data for x in r)

    def to_int_matrix(self) -> IntMatrix:
        if not self.is_integral():
            raise MatrixError("rational matrix has non-integral entries")
        return IntMatrix([[x.numerator for x in r] for r in self._data])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMatrix):
            other = RatMatrix(other)
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"RatMatrix({[[str(x) for x in r] for r in self._data]})"


class Permutation:
    """
    Permutación de columnas sobre {1..n}.

    Se interpreta como la matriz Q con Q·e_j = e_{mapping(j)}, de modo que la columna j
    de A·Q es la columna mapping(j) de A.
    """

    __slots__ = ('mapping',)

    def __init__(self, mapping: Iterable[int]):
        m = tuple(_as_int(x) for x in mapping)
        if not m:
            raise MatrixError("empty permutation")
        if sorted(m) != list(range(1, len(m) + 1)):
            raise MatrixError(f"not a bijection on 1..{len(m)}: {list(m)}")
        self.mapping: Tuple[int, ...] = m

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.mapping)

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.mapping, 1))

    def matrix(self) -> IntMatrix:
        n = len(self.mapping)
        q = [[0] * n for _ in range(n)]
        for j, v in enumerate(self.mapping):
            q[v - 1][j] = 1
        return IntMatrix(q)

    def to_list(self) -> List[int]:
        return list(self.mapping)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(self.mapping)

    def __repr__(self) -> str:
        return f"Permutation({list(self.mapping)})"


def _as_int(x: object) -> int:
    # numpy.int64 se registra como Integral; bool, float y Fraction se rechazan
    if isinstance(x, bool) or not isinstance(x, numbers.Integral):
        raise MatrixError(f"not an integer entry: {x!r}")
    return int(x)


###########################################
# CONSTRUCTORES
###########################################

def identity(n: int) -> IntMatrix:
    return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zeros(m: int, n: int) -> IntMatrix:
    return IntMatrix([[0] * n for _ in range(m)])


def matrix_of(q: Permutation) -> IntMatrix:
    return q.matrix()


###########################################
# OPERACIONES BÁSICAS
###########################################

def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """
    Producto exacto a·b

    Raises:
        MatrixError: si a.cols != b.rows
    """
    if a.cols != b.rows:
        raise MatrixError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    bt = [b.col(j) for j in range(b.cols)]
    return IntMatrix([[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a])


def transpose(a: IntMatrix) -> IntMatrix:
    return IntMatrix([a.col(j) for j in range(a.cols)])


def gram(h: IntMatrix) -> IntMatrix:
    """h⊤·h: simétrica, semidefinida positiva; la diagonal suma los cuadrados de cada columna."""
    return multiply(transpose(h), h)


def determinant(a: IntMatrix) -> int:
    """
    Determinante exacto por eliminación de Bareiss (sin fracciones, división exacta)

    Args:
        a: Matriz cuadrada

    Returns:
        int: det(a)
    """
    if not a.is_square():
        raise MatrixError(f"determinant of a non-square {a.rows}x{a.cols} matrix")
    m = a.to_lists()
    n = a.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(a: IntMatrix) -> bool:
    return a.is_square() and determinant(a) in (1, -1)


def direct_sum(blocks: Sequence[IntMatrix]) -> IntMatrix:
    """Matriz diagonal por bloques con los bloques en el orden dado y ceros fuera."""
    if not blocks:
        raise MatrixError("direct sum of an empty list")
    total_cols = sum(b.cols for b in blocks)
    out: List[List[int]] = []
    offset = 0
    for b in blocks:
        for r in b:
            out.append([0] * offset + list(r) + [0] * (total_cols - offset - b.cols))
        offset += b.cols
    return IntMatrix(out)


def apply_column_permutation(a: IntMatrix, q: Permutation) -> IntMatrix:
    """A·Q sin construir Q: la columna j del resultado es la columna q(j) de A."""
    if len(q) != a.cols:
        raise MatrixError(f"permutation of length {len(q)} for {a.cols} columns")
    idx = [v - 1 for v in q.mapping]
    return IntMatrix([[r[j] for j in idx] for r in a])


def permute_rows(a: IntMatrix, r: Permutation) -> IntMatrix:
    """R⊤·A: la fila i del resultado es la fila r(i) de A."""
    if len(r) != a.rows:
        raise MatrixError(f"permutation of length {len(r)} for {a.rows} rows")
    return IntMatrix([a.row(v - 1) for v in r.mapping])


def submatrix(a: IntMatrix, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
    """Extrae la submatriz de las filas y columnas dadas (índices 1-based, en ese orden)."""
    for i in rows:
        if not 1 <= i <= a.rows:
            raise MatrixError(f"row index {i} out of range 1..{a.rows}")
    for j in cols:
        if not 1 <= j <= a.cols:
            raise MatrixError(f"column index {j} out of range 1..{a.cols}")
    return IntMatrix([[a[i - 1, j - 1] for j in cols] for i in rows])


def zero_columns(a: IntMatrix) -> List[int]:
    return [j + 1 for j in range(a.cols) if all(x == 0 for x in a.col(j))]


def nonzero_rows(a: IntMatrix) -> List[int]:
    return [i + 1 for i in range(a.rows) if any(a.row(i))]


def drop_zero_rows(a: IntMatrix) -> IntMatrix:
    keep = nonzero_rows(a)
    if not keep:
        raise MatrixError("every row is zero")
    return IntMatrix([a.row(i - 1) for i in keep])


def require_symmetric(b: IntMatrix) -> None:
    if not b.is_symmetric():
        raise NonSymmetricError(f"matrix {b.rows}x{b.cols} is not symmetric")


###########################################
# ELIMINACIÓN RACIONAL EXACTA
###########################################

def rref_with_pivots(m: Union[IntMatrix, RatMatrix]) -> Tuple[RatMatrix, List[int]]:
    """
    Forma escalonada reducida por filas sobre los racionales

    Pivote = primera fila no nula de la columna; la fila pivote se normaliza a 1
    y se anula el resto de la columna.

    Returns:
        Tuple[RatMatrix, List[int]]: (RREF, columnas pivote 1-based)
    """
    rows, cols = m.shape
    work = [[Fraction(x) for x in r] for r in m]
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(rows):
            f = work[i][c]
            if i != r and f != 0:
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c + 1)
        r += 1
    return RatMatrix(work), pivots


def rref(m: Union[IntMatrix, RatMatrix]) -> RatMatrix:
    return rref_with_pivots(m)[0]


def rank(m: Union[IntMatrix, RatMatrix]) -> int:
    return len(rref_with_pivots(m)[1])


def inverse(a: IntMatrix) -> IntMatrix:
    """
    Inversa exacta de una matriz unimodular (Gauss-Jordan sobre [a | I])

    Raises:
        MatrixError: si a no es cuadrada, es singular o su inversa no es entera
    """
    if not a.is_square():
        raise MatrixError("inverse of a non-square matrix")
    n = a.rows
    augmented = IntMatrix([list(a.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)])
    reduced, pivots = rref_with_pivots(augmented)
    if pivots[:n] != list(range(1, n + 1)):
        raise MatrixError("singular matrix has no inverse")
    inv = RatMatrix([r[n:] for r in reduced])
    if not inv.is_integral():
        raise MatrixError("inverse is not integral (matrix is not unimodular)")
    return inv.to_int_matrix()
