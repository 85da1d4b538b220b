"""Rozansky-Witten curvature contractions and exact characteristic-number relations."""

from .tensor import (
    MatchingEpsilon,
    QuaternionicStructure,
    SymplecticForm,
    SymTensor4,
    contract_pair,
    matching_epsilon,
    random_curvature,
    reality_project,
    standard_quaternionic,
    standard_symplectic,
    symmetrize4,
)
from .evaluate import (
    GraphValue,
    brute_force_eval,
    eval_cubic,
    eval_graph,
    eval_theta,
    eval_theta2,
    eval_theta2_terms,
    eval_theta3,
    eval_theta_k,
    psi,
)
from .plan import compile_plan

__version__ = "0.1.0"

__all__ = [
    "compile_plan",
    "MatchingEpsilon",
    "QuaternionicStructure",
    "SymplecticForm",
    "SymTensor4",
    "contract_pair",
    "matching_epsilon",
    "random_curvature",
    "reality_project",
    "standard_quaternionic",
    "standard_symplectic",
    "symmetrize4",
    "GraphValue",
    "brute_force_eval",
    "eval_cubic",
    "eval_graph",
    "eval_theta",
    "eval_theta2",
    "eval_theta2_terms",
    "eval_theta3",
    "eval_theta_k",
    "psi",
]
