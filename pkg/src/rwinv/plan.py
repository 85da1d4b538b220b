"""Greedy pairwise contraction schedules for :class:`ContractionGraph`.

A plan is a list of steps over registers. Register 0 holds the curvature
tensor; every copy in the graph starts there. Each step either contracts two
registers along all edges they share or traces edges internal to one
register. Steps are keyed structurally, so an intermediate that appears
twice (the Psi block, for instance) is computed once and referenced again.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .graphs import ContractionGraph, GraphError, Slot
from .tensor import signed_matchings

LEAF_KEY = ("omega",)
DEFAULT_RANK_CAP = 6


@dataclass(frozen=True)
class Step:
    out: int
    left: int
    right: int | None  # None: trace within ``left``
    pairs: tuple  # (axis_left, axis_right, transposed) or (axis_u, axis_v) for traces
    key: tuple
    rank: int


@dataclass(frozen=True)
class ContractionPlan:
    graph: ContractionGraph
    steps: tuple[Step, ...]
    result: int
    free_axes: tuple[int, ...]
    peak_rank: int
    rank_cap: int
    # Non-empty when the open network would exceed ``rank_cap``: each matching
    # term is then planned as its own closed network.
    terms: tuple[ContractionPlan, ...] = field(default=())

    @property
    def distributed(self) -> bool:
        return bool(self.terms)

    @property
    def n_steps(self) -> int:
        """Contraction steps plus one for the final matching expansion, if any."""
        if self.terms:
            return max(t.n_steps for t in self.terms) + 1
        return len(self.steps) + (1 if self.graph.free_group else 0)

    @property
    def keys(self) -> list[tuple]:
        return [s.key for s in self.steps]


def _tiebreak(edges):
    return min(tuple(sorted(e)) for e in edges)


def _greedy(graph: ContractionGraph):
    # operand: (register, labels); labels[i] is the slot carried by axis i
    operands: list[tuple[int, list[Slot]]] = [
        (0, [(t, s) for s in range(4)]) for t in range(graph.n_tensors)
    ]
    keys = {0: LEAF_KEY}
    registry = {LEAF_KEY: 0}
    steps: list[Step] = []
    remaining = list(graph.edges)
    peak = 4 if graph.n_tensors else 0

    while remaining:
        owner = {}
        for i, (_, labels) in enumerate(operands):
            for s in labels:
                owner[s] = i
        groups: dict[tuple[int, int], list] = {}
        for e in remaining:
            i, j = owner[e[0]], owner[e[1]]
            groups.setdefault((min(i, j), max(i, j)), []).append(e)
        best = None
        for (i, j), edges in groups.items():
            ri, rj = len(operands[i][1]), len(operands[j][1])
            rank = ri - 2 * len(edges) if i == j else ri + rj - 2 * len(edges)
            cand = (rank, _tiebreak(edges), i, j, edges)
            if best is None or cand[:2] < best[:2]:
                best = cand
        rank, _, i, j, edges = best
        reg_i, lab_i = operands[i]
        if i == j:
            pairs = tuple(sorted((lab_i.index(u), lab_i.index(v)) for u, v in edges))
            used = {s for e in edges for s in e}
            labels = [s for s in lab_i if s not in used]
            key = ("t", keys[reg_i], pairs)
            right = None
        else:
            reg_j, lab_j = operands[j]
            pairs = []
            for u, v in edges:
                if u in lab_i:
                    pairs.append((lab_i.index(u), lab_j.index(v), False))
                else:
                    pairs.append((lab_i.index(v), lab_j.index(u), True))
            pairs = tuple(sorted(pairs))
            used = {s for e in edges for s in e}
            labels = [s for s in lab_i if s not in used] + [s for s in lab_j if s not in used]
            key = ("c", keys[reg_i], keys[reg_j], pairs)
            right = reg_j
        if key in registry:
            out = registry[key]
        else:
            out = len(keys)
            keys[out] = key
            registry[key] = out
            steps.append(Step(out, reg_i, right, pairs, key, rank))
        peak = max(peak, rank)
        remaining = [e for e in remaining if e not in edges]
        merged = (out, labels)
        if i == j:
            operands[i] = merged
        else:
            operands[i] = merged
            del operands[j]

    if len(operands) != 1:
        raise GraphError(f"{graph.name}: graph is disconnected ({len(operands)} components)")
    result, labels = operands[0]
    free_axes = tuple(labels.index(s) for s in graph.free_group)
    if len(labels) != len(graph.free_group):
        raise GraphError(f"{graph.name}: open slots {labels} do not match the free group")
    return tuple(steps), result, free_axes, peak


@lru_cache(maxsize=None)
def compile_plan(graph: ContractionGraph, rank_cap: int = DEFAULT_RANK_CAP) -> ContractionPlan:
    """Greedy schedule: always take the contraction with the smallest output rank,
    ties broken by the lexicographically smallest slot involved.
    """
    graph.validate()
    steps, result, free_axes, peak = _greedy(graph)
    if peak <= rank_cap:
        return ContractionPlan(graph, steps, result, free_axes, peak, rank_cap)
    terms = tuple(compile_plan(g, rank_cap) for g in graph.matching_terms())
    worst = max(t.peak_rank for t in terms)
    if worst > rank_cap:
        raise GraphError(
            f"{graph.name}: no schedule within rank cap {rank_cap} (needs {worst})"
        )
    return ContractionPlan(graph, (), -1, (), worst, rank_cap, terms)


def pair_contract(a: np.ndarray, b: np.ndarray, pairs, m: np.ndarray) -> np.ndarray:
    """Contract ``a`` and ``b`` along ``(axis_a, axis_b, transposed)`` pairs through eps."""
    for ax, _, transposed in pairs:
        a = np.moveaxis(np.tensordot(a, m.T if transposed else m, axes=([ax], [0])), -1, ax)
    return np.tensordot(a, b, axes=([p[0] for p in pairs], [p[1] for p in pairs]))


def trace_pairs(t: np.ndarray, pairs, m: np.ndarray) -> np.ndarray:
    """Contract axis pairs ``(u, v)`` of ``t`` with ``eps^{uv}``; remaining axes keep order."""
    labels = list(range(t.ndim))
    for u, v in pairs:
        t = np.tensordot(t, m, axes=([labels.index(u), labels.index(v)], [0, 1]))
        labels = [x for x in labels if x not in (u, v)]
    return t


def run_steps(plan: ContractionPlan, omega: np.ndarray, m: np.ndarray, cache=None) -> np.ndarray:
    registers = {0: omega}
    for step in plan.steps:
        if cache is not None and step.key in cache:
            registers[step.out] = cache[step.key]
            continue
        if step.right is None:
            value = trace_pairs(registers[step.left], step.pairs, m)
        else:
            value = pair_contract(registers[step.left], registers[step.right], step.pairs, m)
        registers[step.out] = value
        if cache is not None:
            cache[step.key] = value
    return registers[plan.result]


def execute_with_scale(plan: ContractionPlan, omega: np.ndarray, m: np.ndarray, cache=None):
    """``(value, scale)`` where ``scale`` sums the magnitudes of the matching terms
    that were added up; it bounds the size of accumulated rounding error.
    """
    if plan.terms:
        parts = [execute_with_scale(t, omega, m, cache) for t in plan.terms]
        return complex(sum(v for v, _ in parts)), sum(s for _, s in parts)
    t = run_steps(plan, omega, m, cache)
    g = plan.graph
    if not g.free_group:
        value = complex(g.sign * t)
        return value, abs(value)
    total, scale = 0j, 0.0
    for sign, pairs in signed_matchings(g.k):
        axis_pairs = [(plan.free_axes[p], plan.free_axes[q]) for p, q in pairs]
        term = complex(trace_pairs(t, axis_pairs, m))
        total += sign * term
        scale += abs(term)
    return g.sign * total, scale


def execute(plan: ContractionPlan, omega: np.ndarray, m: np.ndarray, cache=None) -> complex:
    """Evaluate a compiled plan; ``cache`` may be shared across plans for the same tensor."""
    return execute_with_scale(plan, omega, m, cache)[0]
