"""
Generadores aleatorios reproducibles (numpy.random.Generator) de instancias de prueba:
matrices de rango completo, unimodulares, permutaciones, bloques HNF indescomponibles
y grafos de pesos no negativos.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from services.decomposer import is_decomposable
from services.hermite import hermite_normal_form
from utils.matrix import (
    IntMatrix,
    Permutation,
    apply_column_permutation,
    direct_sum,
    identity,
    multiply,
    rank,
    zero_columns,
)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_matrix(rng: np.random.Generator, m: int, n: int, lo: int = -3, hi: int = 3) -> IntMatrix:
    return IntMatrix(rng.integers(lo, hi + 1, size=(m, n)).tolist())


def random_full_rank(rng: np.random.Generator, max_rows: int = 3, max_cols: int = 6,
                     lo: int = -3, hi: int = 3, max_tries: int = 1000) -> IntMatrix:
    """Matriz m×n (m <= max_rows, m <= n <= max_cols) de rango m y sin columnas nulas."""
    for _ in range(max_tries):
        m = int(rng.integers(1, max_rows + 1))
        n = int(rng.integers(m, max_cols + 1))
        a = random_matrix(rng, m, n, lo, hi)
        if not zero_columns(a) and rank(a) == m:
            return a
    raise RuntimeError("could not draw a full-row-rank matrix")


def random_unimodular(rng: np.random.Generator, m: int, max_ops: int = 20) -> IntMatrix:
    """Producto de como mucho max_ops operaciones elementales enteras de fila."""
    u = identity(m).to_lists()
    for _ in range(int(rng.integers(0, max_ops + 1))):
        kind = int(rng.integers(0, 3)) if m > 1 else 2
        if kind == 0:
            i, k = (int(x) for x in rng.choice(m, size=2, replace=False))
            c = int(rng.choice([-2, -1, 1, 2]))
            u[i] = [x + c * y for x, y in zip(u[i], u[k])]
        elif kind == 1:
            i, k = (int(x) for x in rng.choice(m, size=2, replace=False))
            u[i], u[k] = u[k], u[i]
        else:
            i = int(rng.integers(0, m))
            u[i] = [-x for x in u[i]]
    return IntMatrix(u)


def random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return Permutation((rng.permutation(n) + 1).tolist())


def random_interleaving(rng: np.random.Generator, sizes: Sequence[int]) -> Permutation:
    """
    Permutación que entremezcla bloques de columnas consecutivas conservando
    el orden relativo de las columnas dentro de cada bloque.
    """
    labels = np.repeat(np.arange(len(sizes)), sizes)
    rng.shuffle(labels)
    offsets = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    used = [0] * len(sizes)
    mapping: List[int] = []
    for b in labels.tolist():
        mapping.append(int(offsets[b]) + used[b] + 1)
        used[b] += 1
    return Permutation(mapping)


def random_indecomposable_hnf(rng: np.random.Generator, max_rows: int = 2, max_cols: int = 3,
                              lo: int = -3, hi: int = 3, max_tries: int = 1000) -> IntMatrix:
    """Bloque en HNF, de rango completo, sin columnas nulas e indescomponible."""
    for _ in range(max_tries):
        a = random_full_rank(rng, max_rows, max_cols, lo, hi)
        h = hermite_normal_form(a).h
        if not is_decomposable(h):
            return h
    raise RuntimeError("could not draw an indecomposable HNF block")


@dataclass(frozen=True)
class RoundTripInstance:
    """A = U·(H_1 ⊕ ... ⊕ H_t)·Q_0"""
    a: IntMatrix
    blocks: List[IntMatrix]
    u: IntMatrix
    q0: Permutation


def random_round_trip(rng: np.random.Generator, max_blocks: int = 4,
                      order_preserving: bool = True) -> RoundTripInstance:
    t = int(rng.integers(1, max_blocks + 1))
    blocks = [random_indecomposable_hnf(rng) for _ in range(t)]
    ds = direct_sum(blocks)
    u = random_unimodular(rng, ds.rows)
    if order_preserving:
        q0 = random_interleaving(rng, [b.cols for b in blocks])
    else:
        q0 = random_permutation(rng, ds.cols)
    a = apply_column_permutation(multiply(u, ds), q0)
    return RoundTripInstance(a=a, blocks=blocks, u=u, q0=q0)


def random_nonnegative_graph(rng: np.random.Generator, n: int, edge_prob: float = 0.3,
                             max_weight: int = 5) -> IntMatrix:
    """Matriz de adyacencia simétrica con pesos positivos en las aristas y lazos no negativos."""
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = int(rng.integers(0, max_weight + 1))
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                w = int(rng.integers(1, max_weight + 1))
                b[i][j] = b[j][i] = w
    return IntMatrix(b)
