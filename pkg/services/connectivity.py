"""
Grafo ponderado de una matriz simétrica, su laplaciano y sus componentes conexas.

Dos lecturas independientes de la conectividad:
  - patrón de ceros: unión-búsqueda sobre las aristas {i, j} con b_ij != 0, i != j (autoritativa)
  - RREF del laplaciano: la componente del vértice j no pivote es {j} ∪ supp(v_j)
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from config.settings import REDUCIBILITY_MAX_VERTICES
from utils.errors import ConnectivityMismatchError, EnumerationLimitError
from utils.helpers import complement, is_partition, lex_subsets
from utils.matrix import (
    IntMatrix,
    Permutation,
    RatMatrix,
    apply_column_permutation,
    permute_rows,
    rank,
    require_symmetric,
    rref_with_pivots,
    submatrix,
)
from utils.matrix import rref as _rref

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedGraph:
    """Grafo G_B: el peso de la arista {v_i, v_j} es b_ij. La diagonal son lazos sin efecto."""
    adjacency: IntMatrix

    def __post_init__(self) -> None:
        require_symmetric(self.adjacency)

    @property
    def n(self) -> int:
        return self.adjacency.rows


@dataclass(frozen=True)
class ComponentPartition:
    """Partición ordenada de {1..n}: cada lista creciente, listas ordenadas por su mínimo."""
    components: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "ComponentPartition":
        canon = sorted((tuple(sorted(s)) for s in sets), key=lambda c: c[0])
        return cls(tuple(canon))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def to_lists(self) -> List[List[int]]:
        return [list(c) for c in self.components]

    def order(self) -> Permutation:
        """Vértices componente a componente (la permutación Q de la forma reducida)."""
        return Permutation(v for c in self.components for v in c)


GraphLike = Union[WeightedGraph, IntMatrix]


def _as_graph(g: GraphLike) -> WeightedGraph:
    return g if isinstance(g, WeightedGraph) else WeightedGraph(g)


class UnionFind:
    """Unión-búsqueda con compresión de caminos y unión por rango (índices 0-based)."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.weight = [0] * n
        self.size = n

    def find(self, x: int) -> int:
        i = x
        while i != self.parent[i]:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, x: int, y: int) -> None:
        i = self.find(x)
        j = self.find(y)
        if i == j:
            return
        if self.weight[i] < self.weight[j]:
            self.parent[i] = j
        elif self.weight[i] > self.weight[j]:
            self.parent[j] = i
        else:
            self.parent[j] = i
            self.weight[i] += 1
        self.size -= 1

    def groups(self) -> List[List[int]]:
        out = {}
        for v in range(len(self.parent)):
            out.setdefault(self.find(v), []).append(v + 1)
        return list(out.values())


###########################################
# LAPLACIANO
###########################################

def degrees(g: GraphLike) -> List[int]:
    """d_i = Σ_j b_ij (suma completa de la fila, diagonal incluida)."""
    b = _as_graph(g).adjacency
    return [sum(r) for r in b]


def laplacian(g: GraphLike) -> IntMatrix:
    """L = D - B. Las filas suman cero y los lazos de la diagonal se cancelan."""
    graph = _as_graph(g)
    b = graph.adjacency
    d = degrees(graph)
    return IntMatrix([
        [(d[i] if i == j else 0) - b[i, j] for j in range(graph.n)]
        for i in range(graph.n)
    ])


def rref(m: Union[IntMatrix, RatMatrix]) -> RatMatrix:
    return _rref(m)


###########################################
# COMPONENTES
###########################################

def components_via_zero_pattern(g: GraphLike) -> ComponentPartition:
    graph = _as_graph(g)
    b = graph.adjacency
    uf = UnionFind(graph.n)
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            if b[i, j] != 0:
                uf.union(i, j)
    return ComponentPartition.from_sets(uf.groups())


def rref_component_sets(r: RatMatrix, pivots: Sequence[int]) -> List[List[int]]:
    """
    Lee los conjuntos {j} ∪ supp(v_j) de las columnas no pivote de una RREF

    Una entrada no nula en la fila i corresponde al vértice que es columna pivote de la fila i.

    Args:
        r: RREF del laplaciano
        pivots: Columnas pivote 1-based (una por fila no nula)

    Returns:
        List[List[int]]: Conjuntos 1-based en orden de columna no pivote
    """
    pivot_set = set(pivots)
    sets: List[List[int]] = []
    for j in range(1, r.cols + 1):
        if j in pivot_set:
            continue
        support = {pivots[i] for i in range(len(pivots)) if r[i, j - 1] != 0}
        sets.append(sorted({j} | support))
    return sets


def components_via_rref(g: GraphLike) -> ComponentPartition:
    """
    Componentes leídas de la RREF del laplaciano

    Raises:
        ConnectivityMismatchError: si los conjuntos leídos no forman una partición de {1..n}
            (el rango del laplaciano no es n - t, posible con pesos negativos)
    """
    graph = _as_graph(g)
    r, pivots = rref_with_pivots(laplacian(graph))
    sets = rref_component_sets(r, pivots)
    if not is_partition(sets, graph.n):
        raise ConnectivityMismatchError(r, sets, components_via_zero_pattern(graph).to_lists())
    return ComponentPartition.from_sets(sets)


def cross_check(g: GraphLike) -> Tuple[ComponentPartition, Optional[ConnectivityMismatchError]]:
    """
    Ejecuta ambos métodos; el patrón de ceros manda

    Returns:
        Tuple: (partición autoritativa, error estructurado si la lectura RREF discrepa o None)
    """
    graph = _as_graph(g)
    authoritative = components_via_zero_pattern(graph)
    try:
        via_rref = components_via_rref(graph)
    except ConnectivityMismatchError as e:
        return authoritative, e
    if via_rref != authoritative:
        r = rref(laplacian(graph))
        return authoritative, ConnectivityMismatchError(r, via_rref.to_lists(), authoritative.to_lists())
    return authoritative, None


def is_reducible(b: IntMatrix) -> bool:
    require_symmetric(b)
    return len(components_via_zero_pattern(b)) >= 2


def laplacian_rank_law_holds(g: GraphLike) -> bool:
    """rank(L) == n - t con t el número de componentes del patrón de ceros."""
    graph = _as_graph(g)
    return rank(laplacian(graph)) == graph.n - len(components_via_zero_pattern(graph))


def reduced_form(b: IntMatrix) -> Tuple[Permutation, IntMatrix, List[IntMatrix]]:
    """
    Reordena una matriz simétrica en bloques cuadrados: Q⊤BQ = B_1 ⊕ ... ⊕ B_t

    Returns:
        Tuple: (Q, Q⊤BQ, bloques B_k por componente)
    """
    partition = components_via_zero_pattern(b)
    q = partition.order()
    permuted = apply_column_permutation(permute_rows(b, q), q)
    blocks = [submatrix(b, comp, comp) for comp in partition]
    return q, permuted, blocks


def reducibility_witness_brute_force(b: IntMatrix) -> Optional[List[int]]:
    """
    Oráculo por definición: primer S ⊂ {1..n} propio y no vacío (orden lexicográfico)
    con b_ij = 0 para todo i ∈ S, j ∉ S

    Returns:
        Optional[List[int]]: S 1-based o None si B es irreducible
    """
    require_symmetric(b)
    n = b.rows
    if n > REDUCIBILITY_MAX_VERTICES:
        raise EnumerationLimitError(f"{n} vertices exceed the enumeration limit {REDUCIBILITY_MAX_VERTICES}")
    for s in lex_subsets(n):
        if len(s) == n:
            continue
        outside = complement(s, n)
        if all(b[i - 1, j - 1] == 0 for i in s for j in outside):
            return list(s)
    return None
