"""Graph invariants of a curvature tensor: planned evaluation and a
brute-force nested-sum oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graphs
from .graphs import ContractionGraph
from .plan import LEAF_KEY, compile_plan, execute_with_scale, pair_contract, run_steps, trace_pairs
from .tensor import SymplecticForm, SymTensor4, matching_epsilon, signed_matchings, standard_symplectic

IMAG_TOLERANCE = 1e-10
ORACLE_LIMIT = 10**9
_PSI_PAIRS = ((0, 0, False), (1, 1, False))
PSI_KEY = ("c", LEAF_KEY, LEAF_KEY, _PSI_PAIRS)


class NonRealValueError(ArithmeticError):
    pass


class OracleTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class GraphValue:
    value: complex
    graph: str
    n: int

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag_residue(self) -> float:
        return abs(self.value.imag)


def _resolve(omega, eps) -> tuple[np.ndarray, SymplecticForm]:
    data = omega.data if isinstance(omega, SymTensor4) else np.asarray(omega)
    n = data.shape[0] // 2
    if eps is None:
        eps = standard_symplectic(n)
    if data.shape != (2 * eps.n,) * data.ndim:
        raise ValueError(f"dimension mismatch: tensor shape {data.shape}, form n={eps.n}")
    return data, eps


def check_real(value: complex, name: str, scale: float = 0.0) -> None:
    """Reject ``|Im| > 1e-10 (1 + max(|Re|, scale))``.

    ``scale`` is the magnitude of the summed terms; it matters when large
    terms cancel, as for ``Theta_k`` with ``k > n``.
    """
    if abs(value.imag) > IMAG_TOLERANCE * (1 + max(abs(value.real), scale)):
        raise NonRealValueError(
            f"non-real {name} on real input: imaginary part {value.imag:.3e}"
        )


def psi(omega, eps: SymplecticForm | None = None, cache=None) -> np.ndarray:
    """``Psi_{IJKL} = Om_{ABIJ} Om_{CDKL} eps^{AC} eps^{BD}``."""
    data, eps = _resolve(omega, eps)
    if cache is not None and PSI_KEY in cache:
        return cache[PSI_KEY]
    out = pair_contract(data, data, _PSI_PAIRS, eps.matrix)
    if cache is not None:
        cache[PSI_KEY] = out
    return out


def eval_graph(
    graph: ContractionGraph,
    omega,
    eps: SymplecticForm | None = None,
    *,
    real: bool = True,
    cache: dict | None = None,
) -> GraphValue:
    """Evaluate a closed graph invariant through its compiled plan.

    With ``real=True`` the input is taken to be tau-real and a non-negligible
    imaginary part raises :class:`NonRealValueError`; the returned value then
    carries the exact complex result so residues can be inspected.
    """
    data, eps = _resolve(omega, eps)
    value, scale = execute_with_scale(compile_plan(graph), data, eps.matrix, cache)
    if real:
        check_real(value, graph.name, scale)
    return GraphValue(value, graph.name, eps.n)


def eval_theta(omega, eps=None, **kw) -> GraphValue:
    return eval_graph(graphs.THETA, omega, eps, **kw)


def eval_theta2(omega, eps=None, **kw) -> GraphValue:
    return eval_graph(graphs.THETA2, omega, eps, **kw)


def eval_theta3(omega, eps=None, **kw) -> GraphValue:
    return eval_graph(graphs.THETA3, omega, eps, **kw)


def eval_theta_k(omega, k: int, eps=None, **kw) -> GraphValue:
    return eval_graph(graphs.theta_k_graph(k), omega, eps, **kw)


def eval_cubic(omega, eps=None, **kw) -> GraphValue:
    return eval_graph(graphs.CUBIC, omega, eps, **kw)


def eval_theta2_terms(omega, eps=None, cache=None) -> tuple[complex, complex, complex]:
    """The three matching terms of Theta_2, in the order
    ``eps^{IJ}eps^{KL}``, ``eps^{IK}eps^{LJ}``, ``eps^{IL}eps^{JK}``.
    """
    data, eps = _resolve(omega, eps)
    plan = compile_plan(graphs.THETA2)
    w = run_steps(plan, data, eps.matrix, cache)
    out = []
    for sign, pairs in signed_matchings(2):
        axis_pairs = [(plan.free_axes[p], plan.free_axes[q]) for p, q in pairs]
        out.append(complex(sign * trace_pairs(w, axis_pairs, eps.matrix)))
    return tuple(out)


# -- brute-force oracle -------------------------------------------------------


def _oracle_sum(data, n_tensors, pair_slots, free_slots, eps, chunk=1 << 16):
    """Nested sum over all index assignments.

    Each eps pair ranges over the nonzero entries of eps; each free slot over
    all ``2n`` values. Returns an array over the free slots (scalar if none).
    """
    d = data.shape[0]
    rows, cols, vals = eps.support
    nnz = len(vals)
    n_pairs, n_free = len(pair_slots), len(free_slots)
    total = nnz**n_pairs * d**n_free
    if total > ORACLE_LIMIT:
        raise OracleTooLarge(f"oracle too large: {total} assignments > {ORACLE_LIMIT}")
    flat = data.reshape(-1)
    out = np.zeros(d**n_free, dtype=complex)
    inner = nnz**n_pairs
    for start in range(0, total, chunk):
        t = np.arange(start, min(start + chunk, total), dtype=np.int64)
        free_code, r = np.divmod(t, inner)
        idx = np.empty((n_tensors * 4, len(t)), dtype=np.int64)
        weight = np.ones(len(t))
        for u, v in pair_slots:
            r, digit = np.divmod(r, nnz)
            idx[u] = rows[digit]
            idx[v] = cols[digit]
            weight = weight * vals[digit]
        code = free_code
        for s in reversed(free_slots):
            code, idx[s] = np.divmod(code, d)
        prod = weight.astype(complex)
        for c in range(n_tensors):
            f = ((idx[4 * c] * d + idx[4 * c + 1]) * d + idx[4 * c + 2]) * d + idx[4 * c + 3]
            prod = prod * flat[f]
        out += np.bincount(free_code, weights=prod.real, minlength=len(out)) + 1j * np.bincount(
            free_code, weights=prod.imag, minlength=len(out)
        )
    return out.reshape((d,) * n_free) if n_free else out[0]


def _slot_id(s):
    return 4 * s[0] + s[1]


def brute_force_eval(graph: ContractionGraph, omega, eps=None, *, close: bool = True):
    """Evaluate ``graph`` as one flat nested sum, no intermediate tensors.

    With ``close=False`` the free group is left open and the result is the
    array indexed by the free slots in ``free_group`` order.
    """
    data, eps = _resolve(omega, eps)
    edges = [(_slot_id(u), _slot_id(v)) for u, v in graph.edges]
    if not close or not graph.free_group:
        free = [_slot_id(s) for s in graph.free_group]
        return graph.sign * _oracle_sum(data, graph.n_tensors, edges, free, eps)
    nnz = len(eps.support[2])
    size = nnz ** (len(edges) + graph.k)
    if size > ORACLE_LIMIT:
        raise OracleTooLarge(f"oracle too large: {size} assignments > {ORACLE_LIMIT}")
    total = 0j
    for sign, pairs in signed_matchings(graph.k):
        extra = [(_slot_id(graph.free_group[p]), _slot_id(graph.free_group[q])) for p, q in pairs]
        total += sign * _oracle_sum(data, graph.n_tensors, edges + extra, [], eps)
    return complex(graph.sign * total)


def einsum_eval(graph: ContractionGraph, omega, eps=None) -> complex:
    """Single ``numpy.einsum`` over the whole network, the closing matching
    epsilon materialized as a dense array. Independent of the planner.
    """
    data, eps = _resolve(omega, eps)
    operands: list = []
    for c in range(graph.n_tensors):
        operands += [data, [4 * c + p for p in range(4)]]
    for u, v in graph.edges:
        operands += [eps.matrix, [_slot_id(u), _slot_id(v)]]
    if graph.free_group:
        dense = matching_epsilon(eps, graph.k).to_array()
        operands += [dense, [_slot_id(s) for s in graph.free_group]]
    value = np.einsum(*operands, [], optimize="greedy")
    return complex(graph.sign * value)
