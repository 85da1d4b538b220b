"""Planned evaluation cross-checked against the brute-force and einsum routes."""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs
from .evaluate import OracleTooLarge, brute_force_eval, einsum_eval
from .experiment import mix_seed
from .plan import compile_plan, execute_with_scale
from .tensor import random_curvature, standard_symplectic

REL_TOLERANCE = 1e-10
DEFAULT_TENSORS = 20
ORACLE_SEED = 20240601


@dataclass(frozen=True)
class OracleResult:
    graph: str
    n: int
    route: str  # "brute-force", "einsum" or "vanishing"
    n_tensors: int
    max_rel_error: float

    @property
    def ok(self) -> bool:
        return self.max_rel_error < REL_TOLERANCE

    def __str__(self):
        flag = "PASS" if self.ok else "FAIL"
        return (
            f"{flag}  {self.graph:<7} n={self.n}  {self.route:<11} "
            f"{self.n_tensors} tensors  max rel err {self.max_rel_error:.2e}"
        )


def planned_with_scale(graph, omega, eps) -> tuple[complex, float]:
    return execute_with_scale(compile_plan(graph), omega.data, eps.matrix)


def relative_error(planned: complex, reference: complex, scale: float) -> float:
    """``|planned - reference|`` over ``max(|reference|, scale)``.

    ``scale`` is the total magnitude of the summed matching terms, so a
    structurally zero invariant is judged against the size of its summands
    rather than against zero.
    """
    denom = max(abs(reference), scale)
    return abs(planned - reference) / denom if denom else abs(planned - reference)


def compare(graph, n: int, route: str, n_tensors: int = DEFAULT_TENSORS, seed: int = ORACLE_SEED) -> OracleResult:
    eps = standard_symplectic(n)
    worst = 0.0
    for i in range(n_tensors):
        omega = random_curvature(n, mix_seed(seed, i))
        planned, scale = planned_with_scale(graph, omega, eps)
        if route == "brute-force":
            ref = brute_force_eval(graph, omega, eps)
        elif route == "einsum":
            ref = einsum_eval(graph, omega, eps)
        elif route == "vanishing":
            ref = 0j
        else:
            raise ValueError(f"unknown route {route!r}")
        worst = max(worst, relative_error(planned, ref, scale))
    return OracleResult(graph.name, n, route, n_tensors, worst)


def theta3_oracle(n_tensors: int = DEFAULT_TENSORS, seed: int = ORACLE_SEED) -> list[OracleResult]:
    """Brute force at n=3 if the guard allows it; otherwise the n=2 vanishing
    check plus brute force at n=1 and the einsum route at n=3.
    """
    g = graphs.THETA3
    try:
        return [compare(g, 3, "brute-force", n_tensors, seed)]
    except OracleTooLarge:
        pass
    return [
        compare(g, 2, "vanishing", n_tensors, seed),
        compare(g, 1, "brute-force", n_tensors, seed),
        compare(g, 3, "einsum", n_tensors, seed),
    ]


def oracle_check(n_tensors: int = DEFAULT_TENSORS, seed: int = ORACLE_SEED) -> list[OracleResult]:
    results = [
        compare(g, n, "brute-force", n_tensors, seed)
        for g in (graphs.THETA, graphs.THETA2, graphs.CUBIC)
        for n in (1, 2)
    ]
    return results + theta3_oracle(n_tensors, seed)
