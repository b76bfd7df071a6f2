"""
Autocomprobación reproducible: vectores dorados de los ejemplos resueltos y,
opcionalmente, instancias aleatorias de ida y vuelta con semilla fija.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from services.connectivity import (
    components_via_rref,
    components_via_zero_pattern,
    is_reducible,
    laplacian,
    reduced_form,
    reducibility_witness_brute_force,
    rref,
)
from services.decomposer import (
    decomposability_equivalence_check,
    decomposable_brute_force,
    hnf_decomposition,
    is_decomposable,
    permutation_form,
)
from services.generators import make_rng, random_round_trip
from services.hermite import hermite_normal_form, is_hnf_witness
from utils.matrix import IntMatrix, RatMatrix, apply_column_permutation, gram, permute_rows
from utils.validator import verify_decomposition

logger = logging.getLogger(__name__)

WORKED_A = IntMatrix([[2, -4, 2, 5, -6], [2, -2, 2, 5, -3], [0, -2, 1, 2, -3]])
WORKED_H = IntMatrix([[2, 0, 0, 1, 0], [0, 2, 0, 0, 3], [0, 0, 1, 2, 0]])
WORKED_P = IntMatrix([[1, -2, 2], [1, -1, 2], [0, -1, 1]])
WORKED_P_INVERSE = IntMatrix([[1, 0, -2], [-1, 1, 0], [-1, 1, 1]])
WORKED_B = IntMatrix([
    [4, 0, 0, 2, 0],
    [0, 4, 0, 0, 6],
    [0, 0, 1, 2, 0],
    [2, 0, 2, 5, 0],
    [0, 6, 0, 0, 9],
])
WORKED_L = IntMatrix([
    [2, 0, 0, -2, 0],
    [0, 6, 0, 0, -6],
    [0, 0, 2, -2, 0],
    [-2, 0, -2, 4, 0],
    [0, -6, 0, 0, 6],
])
WORKED_R = RatMatrix([
    [1, 0, 0, -1, 0],
    [0, 1, 0, 0, -1],
    [0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
])
WORKED_COMPONENTS = [[1, 3, 4], [2, 5]]
WORKED_BLOCKS = [IntMatrix([[2, 0, 1], [0, 1, 2]]), IntMatrix([[2, 3]])]
WORKED_PERMUTED_H = IntMatrix([[2, 0, 1, 0, 0], [0, 1, 2, 0, 0], [0, 0, 0, 2, 3]])
WORKED_REDUCED_B = IntMatrix([
    [4, 0, 2, 0, 0],
    [0, 1, 2, 0, 0],
    [2, 2, 5, 0, 0],
    [0, 0, 0, 4, 6],
    [0, 0, 0, 6, 9],
])


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _golden_checks() -> List[Tuple[str, Callable[[], bool]]]:
    def hnf() -> bool:
        res = hermite_normal_form(WORKED_A)
        return (res.h == WORKED_H and res.pivot_cols == (1, 2, 3)
                and is_hnf_witness(WORKED_A, res.h, res.p)
                and is_hnf_witness(WORKED_A, WORKED_H, WORKED_P))

    def gram_matrix() -> bool:
        return gram(WORKED_H) == WORKED_B

    def laplacian_matrix() -> bool:
        return laplacian(WORKED_B) == WORKED_L

    def laplacian_rref() -> bool:
        return rref(WORKED_L) == WORKED_R

    def components() -> bool:
        return (components_via_rref(WORKED_B).to_lists() == WORKED_COMPONENTS
                and components_via_zero_pattern(WORKED_B).to_lists() == WORKED_COMPONENTS)

    def reducibility() -> bool:
        q, permuted, _ = reduced_form(WORKED_B)
        return (is_reducible(WORKED_B) and permuted == WORKED_REDUCED_B
                and reducibility_witness_brute_force(WORKED_B) == [1, 3, 4])

    def decomposition() -> bool:
        d = hnf_decomposition(WORKED_A)
        ok, _ = verify_decomposition(WORKED_A, d)
        return (ok and d.decomposable and list(d.blocks) == WORKED_BLOCKS
                and d.column_partition.to_lists() == WORKED_COMPONENTS)

    def permutation_only() -> bool:
        r, q, blocks = permutation_form(WORKED_H)
        return (apply_column_permutation(permute_rows(WORKED_H, r), q) == WORKED_PERMUTED_H
                and blocks == WORKED_BLOCKS)

    def oracles() -> bool:
        return (is_decomposable(WORKED_A)
                and decomposable_brute_force(WORKED_H) == ([1, 3], [1, 3, 4])
                and decomposability_equivalence_check(WORKED_A))

    def indecomposable() -> bool:
        one_one = IntMatrix([[1, 1]])
        d = hnf_decomposition(one_one)
        return (not is_decomposable(one_one) and not d.decomposable
                and d.q.is_identity() and list(d.blocks) == [one_one])

    return [
        ("golden hnf", hnf),
        ("golden gram", gram_matrix),
        ("golden laplacian", laplacian_matrix),
        ("golden laplacian rref", laplacian_rref),
        ("golden components", components),
        ("golden reducibility", reducibility),
        ("golden decomposition", decomposition),
        ("golden permutation form", permutation_only),
        ("golden oracles", oracles),
        ("indecomposable [[1,1]]", indecomposable),
    ]


def _round_trip_check(seed: int, index: int, rng) -> CheckResult:
    inst = random_round_trip(rng)
    name = f"round trip seed={seed} #{index}"
    d = hnf_decomposition(inst.a)
    ok, reasons = verify_decomposition(inst.a, d)
    if not ok:
        return CheckResult(name, False, "; ".join(reasons))
    recovered = Counter(d.blocks)
    expected = Counter(inst.blocks)
    if recovered != expected:
        return CheckResult(name, False, f"recovered {len(d.blocks)} blocks, expected {len(inst.blocks)}")
    return CheckResult(name, True)


def run_selftest(seed: Optional[int] = None, samples: int = 0) -> List[CheckResult]:
    """
    Ejecuta los vectores dorados y `samples` instancias aleatorias con la semilla dada

    Returns:
        List[CheckResult]: un resultado por comprobación, en orden fijo
    """
    results: List[CheckResult] = []
    for name, check in _golden_checks():
        try:
            results.append(CheckResult(name, bool(check())))
        except Exception as e:  # una comprobación rota no detiene el resto
            logger.error("Comprobación %s lanzó %s: %s", name, type(e).__name__, e)
            results.append(CheckResult(name, False, f"{type(e).__name__}: {e}"))

    if samples > 0:
        seed = 0 if seed is None else seed
        rng = make_rng(seed)
        for k in range(1, samples + 1):
            try:
                results.append(_round_trip_check(seed, k, rng))
            except Exception as e:
                results.append(CheckResult(f"round trip seed={seed} #{k}", False, f"{type(e).__name__}: {e}"))
    return results
