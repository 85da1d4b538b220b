"""Dense tensors over C^{2n}: the symplectic form, its antisymmetric
extensions, total symmetrization and the quaternionic reality map.

Tensors are plain numpy arrays of shape ``(2n,) * rank``. Index values are
0-based here even though the usual mathematical convention is 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array)
    array.setflags(write=False)
    return array


def check_dim(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"half-dimension must be a positive integer, got {n!r}")
    return int(n)


@dataclass(frozen=True)
class SymplecticForm:
    """Standard skew form on C^{2n}: ``matrix[i, n+i] = 1``, ``matrix[n+i, i] = -1``."""

    n: int
    matrix: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return 2 * self.n

    @cached_property
    def support(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Nonzero entries as ``(rows, cols, values)``."""
        rows, cols = np.nonzero(self.matrix)
        return rows, cols, self.matrix[rows, cols]


@dataclass(frozen=True)
class QuaternionicStructure:
    """Real matrix with square ``-1``; the standard one is ``-epsilon``."""

    n: int
    matrix: np.ndarray = field(repr=False)

    @cached_property
    def signed_permutation(self) -> tuple[np.ndarray, np.ndarray]:
        """For every column ``a``, the unique row ``e`` with ``J[e, a] != 0`` and its value."""
        m = self.matrix
        nonzero = m != 0
        if not np.all(nonzero.sum(axis=0) == 1) or not np.all(np.abs(m[nonzero]) == 1):
            raise ValueError("quaternionic structure must be a signed permutation matrix")
        rows = np.argmax(nonzero, axis=0)
        return rows, m[rows, np.arange(m.shape[1])]


def standard_symplectic(n: int) -> SymplecticForm:
    n = check_dim(n)
    m = np.zeros((2 * n, 2 * n))
    i = np.arange(n)
    m[i, n + i] = 1.0
    m[n + i, i] = -1.0
    return SymplecticForm(n, _frozen(m))


def standard_quaternionic(n: int) -> QuaternionicStructure:
    n = check_dim(n)
    m = np.zeros((2 * n, 2 * n))
    i = np.arange(n)
    m[n + i, i] = 1.0
    m[i, n + i] = -1.0
    return QuaternionicStructure(n, _frozen(m))


def permutation_parity(perm) -> int:
    """Sign (+1/-1) of a permutation given as a sequence of distinct sortable items."""
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def perfect_matchings(items):
    """Yield every perfect matching of ``items`` as a list of pairs.

    Pairs keep the relative order of ``items`` and are listed by first element,
    so for sorted input each pair is ascending and the pairs are sorted.
    """
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1 :]
        for matching in perfect_matchings(rest):
            yield [(first, items[i])] + matching


def signed_matchings(k: int) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """The ``(2k-1)!!`` perfect matchings of ``0..2k-1`` with their permutation signs."""
    out = []
    for matching in perfect_matchings(range(2 * k)):
        flat = [i for pair in matching for i in pair]
        out.append((permutation_parity(flat), tuple(matching)))
    return tuple(out)


@dataclass(frozen=True)
class MatchingEpsilon:
    """The totally antisymmetric ``2k``-index form built from products of epsilon.

    Never stored as an array; :meth:`value` sums over the signed matchings.
    """

    eps: SymplecticForm = field(repr=False)
    k: int

    @property
    def n(self) -> int:
        return self.eps.n

    @cached_property
    def matchings(self):
        return signed_matchings(self.k)

    def value(self, indices) -> float:
        if len(indices) != 2 * self.k:
            raise ValueError(f"expected {2 * self.k} indices, got {len(indices)}")
        m = self.eps.matrix
        total = 0.0
        for sign, pairs in self.matchings:
            term = float(sign)
            for a, b in pairs:
                term *= m[indices[a], indices[b]]
                if term == 0.0:
                    break
            total += term
        return total

    __call__ = value

    def to_array(self) -> np.ndarray:
        """Dense ``(2n,)**2k`` array; only for tests and small sizes."""
        d = self.eps.size
        out = np.zeros((d,) * (2 * self.k))
        for idx in itertools.product(range(d), repeat=2 * self.k):
            out[idx] = self.value(idx)
        return out


def matching_epsilon(eps: SymplecticForm, k: int) -> MatchingEpsilon:
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return MatchingEpsilon(eps, int(k))


@dataclass(frozen=True)
class SymTensor4:
    """Totally symmetric rank-4 tensor, read-only."""

    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.data.ndim != 4 or len(set(self.data.shape)) != 1 or self.data.shape[0] % 2:
            raise ValueError(f"expected shape (2n,)*4, got {self.data.shape}")
        if not np.all(np.isfinite(self.data)):
            raise ValueError("tensor entries must be finite")
        if self.data.flags.writeable:
            object.__setattr__(self, "data", _frozen(self.data))

    @property
    def n(self) -> int:
        return self.data.shape[0] // 2

    def __mul__(self, c) -> SymTensor4:
        return SymTensor4(self.data * c)

    __rmul__ = __mul__


def _canonical_positions(d: int) -> np.ndarray:
    """Flat position of the sorted multi-index for every entry of a ``(d,)*4`` array."""
    idx = np.indices((d,) * 4).reshape(4, -1)
    return np.ravel_multi_index(tuple(np.sort(idx, axis=0)), (d,) * 4)


def symmetrize4(raw: np.ndarray) -> SymTensor4:
    """Average over the 24 slot permutations.

    Every permutation of a multi-index reads the value stored at its sorted
    representative, so symmetry holds bitwise rather than up to rounding.
    """
    raw = np.asarray(raw)
    if raw.ndim != 4:
        raise ValueError(f"rank mismatch: expected rank 4, got rank {raw.ndim}")
    d = raw.shape[0]
    if raw.shape != (d,) * 4:
        raise ValueError(f"rank-4 tensor must be cubical, got shape {raw.shape}")
    canon = _canonical_positions(d)
    if np.array_equal(raw.reshape(-1)[canon], raw.reshape(-1)):
        # already symmetric: averaging equal values need not round-trip exactly
        return SymTensor4(raw.copy())
    total = sum(np.transpose(raw, p) for p in itertools.permutations(range(4)))
    avg = total / 24
    return SymTensor4(avg.reshape(-1)[canon].reshape(raw.shape))


def apply_tau(data: np.ndarray, J: QuaternionicStructure) -> np.ndarray:
    """``(tau R)_{ABCD} = conj(R_{EFGH}) J[E,A] J[F,B] J[G,C] J[H,D]`` for any rank.

    J is a signed permutation, so this is an index gather plus sign flips
    and is exact in floating point.
    """
    data = np.asarray(data)
    if any(s != 2 * J.n for s in data.shape):
        raise ValueError(f"dimension mismatch: tensor shape {data.shape} vs 2n={2 * J.n}")
    rows, signs = J.signed_permutation
    out = np.conj(data)[np.ix_(*([rows] * data.ndim))]
    sign = np.ones(())
    for axis in range(data.ndim):
        shape = [1] * data.ndim
        shape[axis] = -1
        sign = sign * signs.reshape(shape)
    return out * sign


def reality_project(R: SymTensor4, J: QuaternionicStructure) -> SymTensor4:
    """``Omega = R + tau(R)``; the result is fixed by tau exactly."""
    if R.n != J.n:
        raise ValueError(f"dimension mismatch: tensor n={R.n}, structure n={J.n}")
    return SymTensor4(R.data + apply_tau(R.data, J))


def is_tau_real(omega: SymTensor4, J: QuaternionicStructure | None = None) -> bool:
    J = J or standard_quaternionic(omega.n)
    return bool(np.array_equal(apply_tau(omega.data, J), omega.data))


def random_curvature(n: int, seed: int, entry_range: float = 1.0) -> SymTensor4:
    """Random tau-real curvature-type tensor.

    Real and imaginary parts are i.i.d. uniform on ``[-entry_range, entry_range]``
    (PCG64 seeded with ``seed``), then symmetrized and reality-projected.
    """
    n = check_dim(n)
    if not entry_range > 0:
        raise ValueError(f"entry range must be positive, got {entry_range!r}")
    rng = np.random.Generator(np.random.PCG64(int(seed) & 0xFFFFFFFFFFFFFFFF))
    shape = (2 * n,) * 4
    raw = rng.uniform(-entry_range, entry_range, shape) + 1j * rng.uniform(
        -entry_range, entry_range, shape
    )
    return reality_project(symmetrize4(raw), standard_quaternionic(n))


def _eps_matrix(eps) -> np.ndarray:
    return eps.matrix if isinstance(eps, SymplecticForm) else np.asarray(eps)


def apply_eps(a: np.ndarray, axis: int, eps, transpose: bool = False) -> np.ndarray:
    """Replace index ``A`` on ``axis`` by ``B`` via ``sum_A a(..A..) eps[A, B]``."""
    m = _eps_matrix(eps)
    if transpose:
        m = m.T
    return np.moveaxis(np.tensordot(a, m, axes=([axis], [0])), -1, axis)


def contract_pair(a: np.ndarray, slot_a: int, b: np.ndarray, slot_b: int, eps) -> np.ndarray:
    """``sum_{A,B} a(..A..) b(..B..) eps^{AB}``; free indices of ``a`` then of ``b``."""
    a = np.asarray(a)
    b = np.asarray(b)
    for t, s, name in ((a, slot_a, "a"), (b, slot_b, "b")):
        if not -t.ndim <= s < t.ndim or t.ndim == 0:
            raise IndexError(f"invalid slot {s} for rank-{t.ndim} tensor {name}")
    m = _eps_matrix(eps)
    if a.shape[slot_a] != m.shape[0] or b.shape[slot_b] != m.shape[0]:
        raise ValueError("dimension mismatch between tensors and symplectic form")
    left = np.tensordot(a, m, axes=([slot_a], [0]))
    return np.tensordot(left, b, axes=([-1], [slot_b]))
