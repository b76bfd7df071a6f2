"""
Funciones auxiliares para enumeraciones, particiones y formato de salida
"""

import logging
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple


def lex_subsets(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Enumera los subconjuntos no vacíos de {1..n} en orden lexicográfico de tuplas ordenadas

    (1,), (1, 2), (1, 2, 3), ..., (1, 3), ..., (2,), ...

    Args:
        n: Tamaño del conjunto base

    Returns:
        Iterator[Tuple[int, ...]]: Subconjuntos como tuplas crecientes (incluye el total)
    """
    def _walk(prefix: Tuple[int, ...], start: int) -> Iterator[Tuple[int, ...]]:
        for v in range(start, n + 1):
            current = prefix + (v,)
            yield current
            yield from _walk(current, v + 1)

    return _walk((), 1)


def complement(subset: Iterable[int], n: int) -> List[int]:
    inside = set(subset)
    return [v for v in range(1, n + 1) if v not in inside]


def is_partition(sets: Sequence[Sequence[int]], n: int) -> bool:
    """True si los conjuntos son disjuntos dos a dos y su unión es {1..n}."""
    flat = [v for s in sets for v in s]
    return len(flat) == n and set(flat) == set(range(1, n + 1))


def format_partition(sets: Sequence[Sequence[int]]) -> str:
    """{1,3,4}/{2,5}"""
    return "/".join("{" + ",".join(str(v) for v in s) + "}" for s in sets)


def log_processing_stats(stats: Dict[str, int], label: str = "batch") -> None:
    """
    Registra estadísticas de procesamiento
    """
    logging.info(f"Estadísticas de {label}:")
    for key, value in stats.items():
        logging.info(f"- {key}: {value}")
