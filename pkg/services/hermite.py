"""
Forma normal de Hermite (HNF) por filas con testigo unimodular.

A = P·H con P unimodular y H en HNF:
  (a) escalonada por filas, con columnas pivote j_1 < ... < j_r
  (b) pivotes positivos y entradas por encima de cada pivote en [0, pivote)
  (c) las últimas m - r filas son nulas
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

from utils.errors import MatrixError
from utils.matrix import IntMatrix, identity, is_unimodular, multiply

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HnfResult:
    """
    Resultado de hermite_normal_form

    Attributes:
        h: Forma normal de Hermite (única)
        p: Testigo unimodular m×m con A = p·h (no es único si rank < m)
        p_inverse: Transformación acumulada de filas, p_inverse·A = h
        pivot_cols: Columnas pivote (1-based, estrictamente crecientes)
        rank: Número de filas no nulas de h
    """
    h: IntMatrix
    p: IntMatrix
    p_inverse: IntMatrix
    pivot_cols: Tuple[int, ...]
    rank: int


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Devuelve (g, x, y) con g = x·a + y·b = gcd(a, b) > 0; a y b no ambos nulos."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


class _RowReducer:
    """
    Aplica operaciones elementales de fila a H y U (U·A = H) y la inversa
    de cada una, como operación de columna, a P (A = P·H).
    """

    def __init__(self, a: IntMatrix):
        self.h = a.to_lists()
        self.u = identity(a.rows).to_lists()
        self.p = identity(a.rows).to_lists()

    def swap(self, i: int, k: int) -> None:
        self.h[i], self.h[k] = self.h[k], self.h[i]
        self.u[i], self.u[k] = self.u[k], self.u[i]
        for row in self.p:
            row[i], row[k] = row[k], row[i]

    def negate(self, i: int) -> None:
        self.h[i] = [-x for x in self.h[i]]
        self.u[i] = [-x for x in self.u[i]]
        for row in self.p:
            row[i] = -row[i]

    def add(self, i: int, k: int, c: int) -> None:
        """fila_i += c·fila_k"""
        self.h[i] = [x + c * y for x, y in zip(self.h[i], self.h[k])]
        self.u[i] = [x + c * y for x, y in zip(self.u[i], self.u[k])]
        for row in self.p:
            row[k] -= c * row[i]

    def combine(self, i: int, k: int, x: int, y: int, a_g: int, b_g: int) -> None:
        """(fila_i, fila_k) <- [[x, y], [-b_g, a_g]]·(fila_i, fila_k); determinante 1."""
        for mat in (self.h, self.u):
            ri, rk = mat[i], mat[k]
            mat[i] = [x * s + y * t for s, t in zip(ri, rk)]
            mat[k] = [-b_g * s + a_g * t for s, t in zip(ri, rk)]
        for row in self.p:
            ci, ck = row[i], row[k]
            row[i] = a_g * ci + b_g * ck
            row[k] = -y * ci + x * ck


def hermite_normal_form(a: IntMatrix) -> HnfResult:
    """
    Calcula la HNF por filas y un testigo unimodular P con A = P·H

    Recorre las columnas de izquierda a derecha; en la columna de trabajo combina
    la fila pivote con cada fila inferior mediante el paso de Euclides extendido,
    deja el gcd en la fila pivote, lo hace positivo y reduce las filas superiores
    a [0, pivote) con división entera (resto no negativo).

    Args:
        a: Matriz entera cualquiera

    Returns:
        HnfResult: H, P, P⁻¹, columnas pivote y rango
    """
    m, n = a.shape
    red = _RowReducer(a)
    h = red.h
    pivots: List[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        for k in range(row + 1, m):
            b = h[k][col]
            if b == 0:
                continue
            piv = h[row][col]
            if piv == 0:
                red.swap(row, k)
            elif b % piv == 0:
                red.add(k, row, -(b // piv))
            else:
                g, x, y = _xgcd(piv, b)
                red.combine(row, k, x, y, piv // g, b // g)
        if h[row][col] == 0:
            continue
        if h[row][col] < 0:
            red.negate(row)
        pv = h[row][col]
        for k in range(row):
            q = h[k][col] // pv
            if q:
                red.add(k, row, -q)
        pivots.append(col + 1)
        row += 1

    result = HnfResult(
        h=IntMatrix(red.h),
        p=IntMatrix(red.p),
        p_inverse=IntMatrix(red.u),
        pivot_cols=tuple(pivots),
        rank=len(pivots),
    )
    logger.debug("HNF %dx%d: rank %d, pivots %s", m, n, result.rank, list(result.pivot_cols))
    return result


def hnf_pivots(h: IntMatrix) -> Tuple[bool, List[int]]:
    """
    Comprueba las condiciones (a), (b), (c) de la HNF con pivotes positivos

    Returns:
        Tuple[bool, List[int]]: (es_hnf, columnas pivote 1-based encontradas)
    """
    pivots: List[int] = []
    seen_zero_row = False
    for row in h:
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            seen_zero_row = True
            continue
        # (c) ninguna fila no nula por debajo de una nula; (a) pivotes estrictamente a la derecha
        if seen_zero_row or (pivots and lead <= pivots[-1]) or row[lead] <= 0:
            return False, [c + 1 for c in pivots]
        pivots.append(lead)

    # (b) entradas por encima de cada pivote en [0, pivote)
    for i, c in enumerate(pivots):
        pv = h[i, c]
        if any(not 0 <= h[k, c] < pv for k in range(i)):
            return False, [c + 1 for c in pivots]
    return True, [c + 1 for c in pivots]


def is_hnf(h: IntMatrix) -> bool:
    return hnf_pivots(h)[0]


def is_hnf_witness(a: IntMatrix, h: IntMatrix, p: IntMatrix) -> bool:
    """True si p·h = a, p es unimodular y h está en HNF (h es entonces HNF(a) por unicidad)."""
    if p.cols != h.rows or p.rows != a.rows or h.shape != a.shape:
        return False
    return is_unimodular(p) and is_hnf(h) and multiply(p, h) == a


def strip_zero_rows(res: HnfResult) -> IntMatrix:
    """Las primeras `rank` filas de H: la matriz r×n de rango completo por filas."""
    if res.rank == 0:
        raise MatrixError("hermite normal form has no nonzero rows")
    return IntMatrix([res.h.row(i) for i in range(res.rank)])
