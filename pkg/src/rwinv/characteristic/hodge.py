"""Hodge diamonds of irreducible hyperkaehler manifolds and their chi_y coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


class DiamondError(ValueError):
    pass


@dataclass(frozen=True)
class HodgeDiamond:
    """``h[p][q]`` is h^{p,q} for a hyperkaehler manifold of complex dimension ``2*dim_n``."""

    dim_n: int
    h: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(tuple(int(v) for v in row) for row in self.h))
        self.validate()

    @property
    def size(self) -> int:
        return 2 * self.dim_n

    def validate(self) -> None:
        n, d, h = self.dim_n, self.size, self.h
        if n < 1:
            raise DiamondError(f"dim_n must be positive, got {n}")
        if len(h) != d + 1 or any(len(row) != d + 1 for row in h):
            raise DiamondError(f"diamond must be {d + 1}x{d + 1}")
        if any(v < 0 for row in h for v in row):
            raise DiamondError("Hodge numbers must be non-negative")
        for p in range(d + 1):
            for q in range(d + 1):
                if h[p][q] != h[q][p]:
                    raise DiamondError(
                        f"Hodge symmetry violated: h^{p},{q}={h[p][q]} != h^{q},{p}={h[q][p]}"
                    )
                if h[p][q] != h[d - p][d - q]:
                    raise DiamondError(
                        f"Serre symmetry violated: h^{p},{q}={h[p][q]} != "
                        f"h^{d - p},{d - q}={h[d - p][d - q]}"
                    )
        if h[0][0] != 1:
            raise DiamondError(f"h^0,0 must be 1, got {h[0][0]}")
        if h[2][0] != 1:
            raise DiamondError(f"irreducibility requires h^2,0 = 1, got {h[2][0]}")
        chi0 = sum((-1) ** q * h[0][q] for q in range(d + 1))
        if chi0 != n + 1:
            raise DiamondError(f"chi(O_M) must be n+1 = {n + 1} for an irreducible diamond, got {chi0}")

    @classmethod
    def from_json(cls, source) -> HodgeDiamond:
        """Parse ``{"dim_n": int, "h": [[int, ...], ...]}`` from a path, string or dict."""
        if isinstance(source, dict):
            data = source
        elif isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
            data = json.loads(Path(source).read_text())
        else:
            data = json.loads(source)
        try:
            return cls(int(data["dim_n"]), data["h"])
        except (KeyError, TypeError) as exc:
            raise DiamondError(f"malformed diamond JSON: {exc}") from exc

    def to_json(self) -> dict:
        return {"dim_n": self.dim_n, "h": [list(row) for row in self.h]}

    def betti(self, k: int) -> int:
        return sum(self.h[p][k - p] for p in range(self.size + 1) if 0 <= k - p <= self.size)

    def euler(self) -> int:
        return sum((-1) ** k * self.betti(k) for k in range(2 * self.size + 1))


@dataclass(frozen=True)
class ChiVector:
    dim_n: int
    chi: tuple[int, ...]

    def __post_init__(self):
        if len(self.chi) != 2 * self.dim_n + 1:
            raise ValueError(f"expected {2 * self.dim_n + 1} coefficients, got {len(self.chi)}")
        if tuple(self.chi) != tuple(reversed(self.chi)):
            raise ValueError(f"chi_y coefficients must be palindromic: {self.chi}")


def chi_from_hodge(diamond: HodgeDiamond) -> ChiVector:
    """``chi^p = sum_q (-1)^q h^{p,q}``."""
    d = diamond.size
    chi = tuple(sum((-1) ** q * diamond.h[p][q] for q in range(d + 1)) for p in range(d + 1))
    return ChiVector(diamond.dim_n, chi)


def diamond_from_rows(dim_n: int, rows) -> HodgeDiamond:
    """Build a diamond from its displayed rows, top row ``h^{0,0}`` first.

    Row ``k`` lists ``h^{k,0}, h^{k-1,1}, ..., h^{0,k}`` for ``k <= 2n`` and
    ``h^{2n,k-2n}, ..., h^{k-2n,2n}`` below the middle.
    """
    d = 2 * dim_n
    h = [[0] * (d + 1) for _ in range(d + 1)]
    for k, row in enumerate(rows):
        ps = [p for p in range(d, -1, -1) if 0 <= k - p <= d]
        if len(row) != len(ps):
            raise DiamondError(f"row {k} should have {len(ps)} entries, got {len(row)}")
        for p, v in zip(ps, row):
            h[p][k - p] = v
    return HodgeDiamond(dim_n, h)


K3_DIAMOND = diamond_from_rows(1, [[1], [0, 0], [1, 20, 1], [0, 0], [1]])

OG6_DIAMOND = diamond_from_rows(
    3,
    [
        [1],
        [0, 0],
        [1, 6, 1],
        [0, 0, 0, 0],
        [1, 12, 173, 12, 1],
        [0, 0, 0, 0, 0, 0],
        [1, 6, 173, 1144, 173, 6, 1],
        [0, 0, 0, 0, 0, 0],
        [1, 12, 173, 12, 1],
        [0, 0, 0, 0],
        [1, 6, 1],
        [0, 0],
        [1],
    ],
)
