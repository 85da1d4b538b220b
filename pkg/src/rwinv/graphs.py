"""Edge-pairing descriptions of the curvature contraction invariants.

Every tensor copy is the same rank-4 curvature tensor. A slot is a
``(copy, position)`` pair; an edge ``(u, v)`` stands for ``eps^{uv}`` with
``u`` carrying the first (row) index. Slots listed in ``free_group`` are
closed, in that order, by the matching epsilon of size ``len(free_group)/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .tensor import signed_matchings

Slot = tuple[int, int]
Edge = tuple[Slot, Slot]

# Overall sign for the cyclic Theta_k pattern is CYCLIC_ORIENTATION**(k+1).
# -1 reproduces the tabulated Theta_2 and Theta_3 contractions; +1 is the
# unsigned alternative.
CYCLIC_ORIENTATION = -1


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class ContractionGraph:
    name: str
    n_tensors: int
    edges: tuple[Edge, ...]
    free_group: tuple[Slot, ...] = ()
    sign: int = 1

    def __post_init__(self):
        self.validate()

    @cached_property
    def tensor_slots(self) -> tuple[Slot, ...]:
        return tuple((t, s) for t in range(self.n_tensors) for s in range(4))

    @property
    def k(self) -> int:
        """Size of the closing matching epsilon."""
        return len(self.free_group) // 2

    def validate(self) -> None:
        seen: dict[Slot, int] = {}
        for u, v in self.edges:
            for s in (u, v):
                seen[s] = seen.get(s, 0) + 1
        for s in self.free_group:
            seen[s] = seen.get(s, 0) + 1
        valid = set(self.tensor_slots)
        for s, count in seen.items():
            if s not in valid:
                raise GraphError(f"{self.name}: slot {s} does not exist")
            if count > 1:
                raise GraphError(f"{self.name}: slot {s} is used {count} times")
        for s in self.tensor_slots:
            if s not in seen:
                raise GraphError(f"{self.name}: slot {s} is not used")
        if len(self.free_group) % 2:
            raise GraphError(f"{self.name}: odd number of free slots")
        if self.sign not in (1, -1):
            raise GraphError(f"{self.name}: sign must be +1 or -1")

    def closed(self, sign: int, pairs, name: str | None = None) -> ContractionGraph:
        """Close the free group with one signed matching (pairs index into ``free_group``)."""
        extra = tuple((self.free_group[p], self.free_group[q]) for p, q in pairs)
        return ContractionGraph(
            name or f"{self.name}|{pairs}",
            self.n_tensors,
            self.edges + extra,
            (),
            self.sign * sign,
        )

    def matching_terms(self) -> list[ContractionGraph]:
        """One closed graph per term of the matching-epsilon expansion."""
        if not self.free_group:
            return [self]
        return [
            self.closed(sign, pairs, f"{self.name}[{i}]")
            for i, (sign, pairs) in enumerate(signed_matchings(self.k))
        ]


# Psi block m uses copies 2m, 2m+1: Psi_{A I B J} = Om_{ab A I} Om_{cd B J} eps^{ac} eps^{bd}.
def _psi_edges(m: int) -> tuple[Edge, ...]:
    return (((2 * m, 0), (2 * m + 1, 0)), ((2 * m, 1), (2 * m + 1, 1)))


def _A(m):
    return (2 * m, 2)


def _I(m):
    return (2 * m, 3)


def _B(m):
    return (2 * m + 1, 2)


def _J(m):
    return (2 * m + 1, 3)


def _free(k):
    return tuple(s for m in range(k) for s in (_I(m), _J(m)))


def psi_graph() -> ContractionGraph:
    """The two-vertex block with open legs ``(I, J, K, L)``."""
    return ContractionGraph("psi", 2, _psi_edges(0), ((0, 2), (0, 3), (1, 2), (1, 3)))


def theta_graph() -> ContractionGraph:
    # Psi_{IJKL} eps^{IK} eps^{JL}
    return ContractionGraph("theta", 2, _psi_edges(0) + ((_A(0), _B(0)),), _free(1))


def theta2_graph() -> ContractionGraph:
    # Psi_{AIBJ} Psi_{CKDL} eps^{AC} eps^{DB} eps^{IJKL}
    edges = _psi_edges(0) + _psi_edges(1) + ((_A(0), _A(1)), (_B(1), _B(0)))
    return ContractionGraph("theta2", 4, edges, _free(2))


def theta3_graph() -> ContractionGraph:
    # Psi_{AIBJ} Psi_{CKDL} Psi_{EMFP} eps^{AD} eps^{CF} eps^{EB} eps^{IJKLMP}
    edges = (
        _psi_edges(0)
        + _psi_edges(1)
        + _psi_edges(2)
        + ((_A(0), _B(1)), (_A(1), _B(2)), (_A(2), _B(0)))
    )
    return ContractionGraph("theta3", 6, edges, _free(3))


def cyclic_theta_graph(k: int) -> ContractionGraph:
    """Cycle of ``k`` Psi blocks joined by ``eps^{A_m B_{m+1}}``."""
    if k < 1:
        raise GraphError("k must be at least 1")
    edges = sum((_psi_edges(m) for m in range(k)), ())
    edges += tuple((_A(m), _B((m + 1) % k)) for m in range(k))
    return ContractionGraph(
        f"theta{k}" if k > 1 else "theta", 2 * k, edges, _free(k), CYCLIC_ORIENTATION ** (k + 1)
    )


def theta_k_graph(k: int) -> ContractionGraph:
    named = {1: theta_graph, 2: theta2_graph, 3: theta3_graph}
    return named[k]() if k in named else cyclic_theta_graph(k)


def cubic_graph() -> ContractionGraph:
    # Om_{ABCD} Om_{EFGH} Om_{IJKL} eps^{AE} eps^{BF} eps^{CI} eps^{DJ} eps^{GK} eps^{HL}
    edges = (
        ((0, 0), (1, 0)),
        ((0, 1), (1, 1)),
        ((0, 2), (2, 0)),
        ((0, 3), (2, 1)),
        ((1, 2), (2, 2)),
        ((1, 3), (2, 3)),
    )
    return ContractionGraph("cubic", 3, edges)


THETA = theta_graph()
THETA2 = theta2_graph()
THETA3 = theta3_graph()
CUBIC = cubic_graph()
PSI = psi_graph()
