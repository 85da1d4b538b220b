"""Betti-number and invariant bounds in complex dimensions four and six.

The dimension-six bounds assume ``b_{Theta Theta_2} < 0``; the dimension-four
ones use the extremal Betti pairs of the known feasible set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial, floor, gcd

from .formulas import (
    LEMMA_SIX_VALUE,
    RW_FORMULAS,
    BettiData,
    chern_from_betti_dim4,
    ahat_sqrt_integral,
    rw_from_betti_dim4,
)

F = Fraction

# Extremal (b2, b3) corners in dimension four.
GUAN_MAX_B2 = BettiData(23, 0)
GUAN_MAX_B3 = BettiData(3, 68)
MIN_B2_DIM6 = 3


def lattice_step(coeffs) -> Fraction:
    """Generator of the subgroup ``{sum a_i x_i : x_i integer}`` of Q."""
    den = reduce(lambda a, b: a * b // gcd(a, b), (F(c).denominator for c in coeffs), 1)
    num = reduce(gcd, (int(F(c) * den) for c in coeffs))
    return F(abs(num), den)


def _b2_plus_4_bound(b_theta3) -> Fraction:
    """``3 b / (b - 2^12 3^4)``, the bound on ``b2 + 4`` given ``b_{Theta^3} = b``."""
    b = F(b_theta3)
    return 3 * b / (b - LEMMA_SIX_VALUE)


def min_admissible_theta3(step: Fraction | None = None) -> Fraction:
    """Smallest multiple of the value lattice strictly above 2^12 3^4."""
    step = step or lattice_step(RW_FORMULAS[3]["Theta^3"])
    return (floor(F(LEMMA_SIX_VALUE) / step) + 1) * step


def b2_bound_dim6(step: Fraction | None = None) -> int:
    """Largest ``b2`` compatible with the smallest admissible ``b_{Theta^3}``."""
    return floor(_b2_plus_4_bound(min_admissible_theta3(step))) - 4


def theta3_upper_bound_dim6(min_b2: int = MIN_B2_DIM6) -> tuple[Fraction, Fraction]:
    """``(max b_{Theta^3}, max A-hat root)`` from ``b2 >= min_b2``.

    Solves ``min_b2 + 4 <= 3 b / (b - B)`` for ``b``.
    """
    m = min_b2 + 4
    b = F(m * LEMMA_SIX_VALUE, m - 3)
    return b, b / (48**3 * factorial(3))


def jiang_theta3_bound() -> Fraction:
    """``b_{Theta^3}`` bound from ``A-hat root < 1`` and the ``1/967680`` lattice."""
    return F(48**3 * factorial(3)) * F(967679, 967680)


def jiang_b2_bound() -> int:
    """``b2`` bound from Jiang's estimate and ``b_{Theta Theta_2} <= -step``."""
    step = lattice_step(RW_FORMULAS[3]["ThetaTheta_2"])
    return floor(jiang_theta3_bound() / step) - 4


@dataclass(frozen=True)
class Bound:
    label: str
    value: object
    relation: str  # "<=", ">=" or "range"

    def __str__(self):
        if self.relation == "range":
            lo, hi = self.value
            return f"{lo} <= {self.label} <= {hi}"
        return f"{self.label} {self.relation} {self.value}"


def bounds_dim4() -> list[Bound]:
    hi_b2, hi_b3 = rw_from_betti_dim4(GUAN_MAX_B2), rw_from_betti_dim4(GUAN_MAX_B3)
    ahat_lo = ahat_sqrt_integral(chern_from_betti_dim4(GUAN_MAX_B2))
    ahat_hi = ahat_sqrt_integral(chern_from_betti_dim4(GUAN_MAX_B3))
    return [
        Bound("b_Theta_2", hi_b2["Theta_2"], "<="),
        Bound("b_Theta^2", (hi_b2["Theta^2"], hi_b3["Theta^2"]), "range"),
        Bound("Ahat^(1/2)", (ahat_lo, ahat_hi), "range"),
    ]


def bounds_dim6() -> list[Bound]:
    b2 = b2_bound_dim6()
    theta3_max, ahat_max = theta3_upper_bound_dim6()
    return [
        Bound("b2", b2, "<="),
        Bound("b2 + 4", b2 + 4, "<="),
        Bound("b_Theta^3", min_admissible_theta3(), ">="),
        Bound("b_Theta^3", theta3_max, "<="),
        Bound("Ahat^(1/2)", ahat_max, "<="),
        Bound("b_Theta^3 (Jiang)", jiang_theta3_bound(), "<="),
        Bound("b2 (Jiang)", jiang_b2_bound(), "<="),
    ]
