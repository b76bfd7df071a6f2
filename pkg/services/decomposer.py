"""
Descomposición de matrices enteras vía la forma normal de Hermite.

A (r×n, rango r, sin columnas nulas) es descomponible, es decir P⁻¹·A·Q es suma directa
de al menos dos bloques con P unimodular y Q de permutación, si y solo si la matriz
de Gram HNF(A)⊤·HNF(A) es reducible.

hnf_decomposition ejecuta el algoritmo completo:
  1. H = HNF(A), P_0 con P_0⁻¹·A = H
  2. B = H⊤·H
  3. L = D - B con D la diagonal de sumas de filas de B
  4-6. componentes de G_B -> Q concatenando, por componente, sus columnas en orden creciente
  7. P_1 con P_1⁻¹·(H·Q) = HNF(H·Q)
  8. P = P_0·P_1
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from config.settings import BRUTE_FORCE_MAX_COLS, BRUTE_FORCE_MAX_ROWS, STRICT_CROSS_CHECK
from services.connectivity import ComponentPartition, cross_check, is_reducible
from services.hermite import HnfResult, hermite_normal_form, hnf_pivots
from utils.errors import EnumerationLimitError, MatrixError, RankDeficientError, ZeroColumnError
from utils.helpers import complement, format_partition, lex_subsets
from utils.matrix import (
    IntMatrix,
    Permutation,
    apply_column_permutation,
    direct_sum,
    drop_zero_rows,
    gram,
    multiply,
    submatrix,
    zero_columns,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """
    Resultado de hnf_decomposition: P⁻¹·A·Q = H_1 ⊕ ... ⊕ H_t con cada H_i en HNF

    Attributes:
        p: Unimodular m×m
        q: Permutación de columnas de longitud n
        blocks: Bloques en HNF, ordenados por el menor índice de columna que contienen
        row_partition: Filas de HNF(A) (1-based) asignadas a cada bloque por su columna pivote
        column_partition: Columnas de A por componente conexa
        decomposable: True si hay al menos dos bloques
        p_inverse: P⁻¹
        h: HNF(A)
        pivot_cols: Columnas pivote de HNF(A)
        rank: Rango de A
        findings: Hallazgos del contraste RREF / patrón de ceros (normalmente vacío)
    """
    p: IntMatrix
    q: Permutation
    blocks: Tuple[IntMatrix, ...]
    row_partition: Tuple[Tuple[int, ...], ...]
    column_partition: ComponentPartition
    decomposable: bool
    p_inverse: Optional[IntMatrix] = None
    h: Optional[IntMatrix] = None
    pivot_cols: Tuple[int, ...] = ()
    rank: int = 0
    findings: Tuple[str, ...] = field(default_factory=tuple)


###########################################
# VALIDACIÓN DE ENTRADA
###########################################

def _validate(a: IntMatrix, strip_zero_rows: bool = False) -> Tuple[IntMatrix, HnfResult]:
    """
    Columnas nulas primero, después rango completo por filas a partir de la propia HNF

    Raises:
        ZeroColumnError: primera columna nula (1-based)
        RankDeficientError: rango < número de filas
    """
    zero = zero_columns(a)
    if zero:
        raise ZeroColumnError(zero[0])
    if strip_zero_rows:
        a = drop_zero_rows(a)
    res = hermite_normal_form(a)
    if res.rank < a.rows:
        raise RankDeficientError(res.rank, a.rows)
    return a, res


def is_decomposable(a: IntMatrix) -> bool:
    """A es descomponible si y solo si HNF(A)⊤·HNF(A) es reducible."""
    _, res = _validate(a)
    return is_reducible(gram(res.h))


###########################################
# ALGORITMO HNF-DECOMPOSITION
###########################################

def hnf_decomposition(a: IntMatrix, strip_zero_rows: bool = False,
                      strict: Optional[bool] = None) -> Decomposition:
    """
    Calcula P, Q y los bloques en HNF con P⁻¹·A·Q = H_1 ⊕ ... ⊕ H_t

    Args:
        a: Matriz r×n de rango r sin columnas nulas
        strip_zero_rows: Elimina filas nulas antes de validar
        strict: Si True, un desacuerdo RREF / patrón de ceros se lanza como error;
            por defecto DECOMP_STRICT_CROSS_CHECK

    Returns:
        Decomposition

    Raises:
        ZeroColumnError, RankDeficientError, ConnectivityMismatchError (solo en modo estricto)
    """
    strict = STRICT_CROSS_CHECK if strict is None else strict
    a, res0 = _validate(a, strip_zero_rows)
    h = res0.h
    n = a.cols

    # Pasos 2-5: el patrón de ceros decide; la lectura RREF del laplaciano se contrasta
    partition, mismatch = cross_check(gram(h))
    findings: List[str] = []
    if mismatch is not None:
        if strict:
            raise mismatch
        finding = (
            f"laplacian rref components {format_partition(mismatch.rref_sets)} "
            f"disagree with zero-pattern components {format_partition(mismatch.zero_pattern)}"
        )
        logger.warning("Hallazgo de conectividad en matriz %dx%d: %s", a.rows, n, finding)
        findings.append(finding)

    # Paso 6
    q = partition.order()

    # Paso 7: HNF(H·Q) es la suma directa de las HNF de los bloques
    if q.is_identity():
        res1_h, p1, p1_inv = h, None, None
    else:
        res1 = hermite_normal_form(apply_column_permutation(h, q))
        res1_h, p1, p1_inv = res1.h, res1.p, res1.p_inverse

    # Paso 8
    p = res0.p if p1 is None else multiply(res0.p, p1)
    p_inverse = res0.p_inverse if p1_inv is None else multiply(p1_inv, res0.p_inverse)

    # Filas asignadas a la componente que contiene su columna pivote
    owner = {v: k for k, comp in enumerate(partition) for v in comp}
    rows_by_block: List[List[int]] = [[] for _ in range(len(partition))]
    for i, c in enumerate(res0.pivot_cols, 1):
        rows_by_block[owner[c]].append(i)

    blocks: List[IntMatrix] = []
    row_offset = col_offset = 0
    for comp, rows in zip(partition, rows_by_block):
        r_k, n_k = len(rows), len(comp)
        blocks.append(submatrix(
            res1_h,
            range(row_offset + 1, row_offset + r_k + 1),
            range(col_offset + 1, col_offset + n_k + 1),
        ))
        row_offset += r_k
        col_offset += n_k
    if direct_sum(blocks) != res1_h:
        raise MatrixError("HNF(HQ) is not the direct sum of the component blocks")

    logger.info(
        "Descomposición %dx%d: %d bloque(s), columnas %s",
        a.rows, n, len(blocks), format_partition(partition.to_lists()),
    )
    return Decomposition(
        p=p,
        q=q,
        blocks=tuple(blocks),
        row_partition=tuple(tuple(r) for r in rows_by_block),
        column_partition=partition,
        decomposable=len(blocks) >= 2,
        p_inverse=p_inverse,
        h=h,
        pivot_cols=res0.pivot_cols,
        rank=res0.rank,
        findings=tuple(findings),
    )


def permutation_form(h: IntMatrix) -> Tuple[Permutation, Permutation, List[IntMatrix]]:
    """
    Descomposición solo con permutaciones de una HNF de rango completo: R⊤·H·Q = H_1 ⊕ ... ⊕ H_t

    Las filas se agrupan por la componente de su columna pivote conservando su orden,
    así que cada bloque sigue en HNF.

    Returns:
        Tuple: (R de filas, Q de columnas, bloques)
    """
    ok, pivots = hnf_pivots(h)
    if not ok:
        raise MatrixError("permutation form needs a matrix in hermite normal form")
    if len(pivots) < h.rows:
        raise RankDeficientError(len(pivots), h.rows)
    zero = zero_columns(h)
    if zero:
        raise ZeroColumnError(zero[0])
    partition, _ = cross_check(gram(h))
    owner = {v: k for k, comp in enumerate(partition) for v in comp}
    rows_by_block: List[List[int]] = [[] for _ in range(len(partition))]
    for i, c in enumerate(pivots, 1):
        rows_by_block[owner[c]].append(i)
    r = Permutation(i for rows in rows_by_block for i in rows)
    q = partition.order()
    blocks = [submatrix(h, rows, comp) for rows, comp in zip(rows_by_block, partition)]
    return r, q, blocks


def theorem_agrees(a: IntMatrix) -> bool:
    """is_reducible(gram(HNF(A))) coincide con que el algoritmo devuelva al menos dos bloques."""
    _, res = _validate(a)
    return is_reducible(gram(res.h)) == (len(hnf_decomposition(a).blocks) >= 2)


###########################################
# ORÁCULOS POR FUERZA BRUTA
###########################################

def _rows_supporting(h: IntMatrix, cols) -> set:
    return {i + 1 for i in range(h.rows) for j in cols if h[i, j - 1] != 0}


def decomposable_brute_force(h: IntMatrix) -> Optional[Tuple[List[int], List[int]]]:
    """
    Oráculo por definición (forma por permutaciones): busca S columnas y T filas,
    ambos propios y no vacíos, con h[T, S̄] = 0 y h[T̄, S] = 0

    Para un S dado la condición h[T̄, S] = 0 obliga a T ⊇ filas que tocan S, y h[T, S̄] = 0
    obliga a T ∩ filas que tocan S̄ = ∅; sin filas nulas el único candidato es
    T = filas que tocan S.

    Returns:
        Optional[Tuple[List[int], List[int]]]: (T, S) 1-based, primer S en orden lexicográfico
    """
    m, n = h.shape
    if m > BRUTE_FORCE_MAX_ROWS or n > BRUTE_FORCE_MAX_COLS:
        raise EnumerationLimitError(
            f"{m}x{n} exceeds the enumeration limit {BRUTE_FORCE_MAX_ROWS}x{BRUTE_FORCE_MAX_COLS}"
        )
    for s in lex_subsets(n):
        if len(s) == n:
            continue
        rest = complement(s, n)
        t = _rows_supporting(h, s)
        if not t or len(t) == m:
            continue
        if t & _rows_supporting(h, rest):
            continue
        return sorted(t), list(s)
    return None


def decomposability_equivalence_check(a: IntMatrix) -> bool:
    """
    True si el criterio de Gram y el oráculo por enumeración coinciden sobre HNF(A)
    """
    _, res = _validate(a)
    by_theorem = is_reducible(gram(res.h))
    by_oracle = decomposable_brute_force(res.h) is not None
    if by_theorem != by_oracle:
        logger.error("Teorema y oráculo discrepan para %s: %s vs %s", a.to_lists(), by_theorem, by_oracle)
    return by_theorem == by_oracle
