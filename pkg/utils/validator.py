"""
Verificador de descomposiciones: comprueba el contrato algebraico completo de una
Decomposition contra la matriz de origen y devuelve los motivos de cada fallo.
"""
from __future__ import annotations

from typing import List, Tuple, TYPE_CHECKING

from services.hermite import is_hnf
from utils.helpers import is_partition
from utils.matrix import (
    IntMatrix,
    apply_column_permutation,
    direct_sum,
    identity,
    inverse,
    is_unimodular,
    matrix_of,
    multiply,
)

if TYPE_CHECKING:  # pragma: no cover
    from services.decomposer import Decomposition


def verify_decomposition(a: IntMatrix, d: "Decomposition") -> Tuple[bool, List[str]]:
    """
    Valida P⁻¹·A·Q = H_1 ⊕ ... ⊕ H_t y el resto de invariantes

    Returns:
        Tuple[bool, List[str]]: (es_válida, lista_de_motivos)
    """
    reasons: List[str] = []
    m, n = a.shape

    # Forma
    if d.p.shape != (m, m):
        reasons.append(f"P has shape {d.p.rows}x{d.p.cols}, expected {m}x{m}")
    if len(d.q) != n:
        reasons.append(f"Q has length {len(d.q)}, expected {n}")
    if not d.blocks:
        reasons.append("no blocks")
    if reasons:
        return False, reasons

    p_inv = inverse(d.p) if is_unimodular(d.p) else None
    if p_inv is None:
        reasons.append("not unimodular")

    for k, block in enumerate(d.blocks, 1):
        if not is_hnf(block):
            reasons.append(f"block {k} not in HNF")

    block_rows = sum(b.rows for b in d.blocks)
    block_cols = sum(b.cols for b in d.blocks)
    if block_rows != m or block_cols != n:
        reasons.append(f"block extents {block_rows}x{block_cols} do not match {m}x{n}")
    elif p_inv is not None:
        if multiply(multiply(p_inv, a), matrix_of(d.q)) != direct_sum(list(d.blocks)):
            reasons.append("product mismatch")
    elif multiply(d.p, direct_sum(list(d.blocks))) != apply_column_permutation(a, d.q):
        # sin P⁻¹ entera se compara P·(H_1 ⊕ ... ⊕ H_t) con A·Q
        reasons.append("product mismatch")

    # Particiones coherentes con los bloques
    cols = d.column_partition.to_lists()
    if (len(cols) != len(d.blocks)
            or [len(c) for c in cols] != [b.cols for b in d.blocks]
            or [v for c in cols for v in c] != list(d.q.mapping)
            or not is_partition(cols, n)):
        reasons.append("column partition inconsistent")

    rows = [list(r) for r in d.row_partition]
    if (len(rows) != len(d.blocks)
            or [len(r) for r in rows] != [b.rows for b in d.blocks]
            or not is_partition(rows, m)):
        reasons.append("row partition inconsistent")

    if d.decomposable != (len(d.blocks) >= 2):
        reasons.append("decomposable flag inconsistent")

    if d.p_inverse is not None:
        if p_inv is not None:
            mismatch = d.p_inverse != p_inv
        else:
            mismatch = d.p_inverse.shape != (m, m) or multiply(d.p, d.p_inverse) != identity(m)
        if mismatch:
            reasons.append("P_inverse mismatch")

    return len(reasons) == 0, reasons
