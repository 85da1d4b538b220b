"""Exact relations between Rozansky-Witten invariants, Chern numbers and Betti numbers.

All arithmetic uses :class:`fractions.Fraction`; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .hodge import ChiVector

F = Fraction

CHERN_LABELS = {
    1: ("c2",),
    2: ("c2^2", "c4"),
    3: ("c2^3", "c2c4", "c6"),
}

RW_LABELS = {
    1: ("Theta",),
    2: ("Theta^2", "Theta_2"),
    3: ("Theta^3", "ThetaTheta_2", "Theta_3"),
    4: ("Theta^4", "Theta^2Theta_2", "Theta_2^2", "ThetaTheta_3", "Theta_4", "Xi"),
}

# Degree-2n part of the square root of the A-hat class, as coefficients of CHERN_LABELS[n].
AHAT_SQRT = {
    1: (F(1, 24),),
    2: (F(7, 5760), F(-4, 5760)),
    3: (F(31, 967680), F(-44, 967680), F(16, 967680)),
}

# Rozansky-Witten invariants as linear forms in the Chern numbers.
RW_FORMULAS = {
    1: {"Theta": (F(2),)},
    2: {
        "Theta^2": (F(4, 5) * 7, F(4, 5) * -4),
        "Theta_2": (F(-4, 5), F(-4, 5) * -2),
    },
    3: {
        "Theta^3": tuple(F(24, 35) * c for c in (31, -44, 16)),
        "ThetaTheta_2": tuple(F(-8, 35) * c for c in (11, -26, 12)),
        "Theta_3": tuple(F(8, 35) * c for c in (1, -3, 3)),
    },
}

# chi^0, chi^1, chi^2 -> (c2^3, c2c4, c6) in complex dimension six
CHI_TO_CHERN_DIM6 = (
    (7272, -184, -8),
    (1368, -208, -8),
    (36, -16, 4),
)

# chi(O_M) = n + 1 and b_{Theta^3} + 3 b_{Theta Theta_2} = 2^10 3^4 chi(O_M)
LEMMA_SIX_FACTOR = 2**10 * 3**4
LEMMA_SIX_VALUE = LEMMA_SIX_FACTOR * 4


class DimensionError(ValueError):
    pass


def theta_power_label(n: int) -> str:
    return "Theta" if n == 1 else f"Theta^{n}"


def theta_mixed_label(n: int, k: int) -> str:
    """Label of Theta^{n-k} Theta_k."""
    rest = n - k
    head = "" if rest == 0 else ("Theta" if rest == 1 else f"Theta^{rest}")
    return f"{head}Theta_{k}"


@dataclass(frozen=True)
class ChernData:
    dim_n: int
    numbers: dict

    def __post_init__(self):
        if self.dim_n not in CHERN_LABELS:
            raise DimensionError(f"no Chern monomial set for dim_n={self.dim_n}")
        want = set(CHERN_LABELS[self.dim_n])
        if set(self.numbers) != want:
            raise ValueError(f"dim_n={self.dim_n} needs exactly {sorted(want)}, got {sorted(self.numbers)}")
        object.__setattr__(self, "numbers", {k: F(v) for k, v in self.numbers.items()})

    @classmethod
    def of(cls, dim_n: int, *values) -> ChernData:
        return cls(dim_n, dict(zip(CHERN_LABELS[dim_n], values)))

    def vector(self) -> tuple[Fraction, ...]:
        return tuple(self.numbers[k] for k in CHERN_LABELS[self.dim_n])


@dataclass(frozen=True)
class BettiData:
    b2: int
    b3: int

    def __post_init__(self):
        if self.b2 < 0 or self.b3 < 0:
            raise ValueError("Betti numbers must be non-negative")


@dataclass(frozen=True)
class RWValues:
    dim_n: int
    values: dict

    def __post_init__(self):
        allowed = set(RW_LABELS.get(self.dim_n, ()))
        bad = set(self.values) - allowed
        if bad:
            raise ValueError(f"invalid labels for dim_n={self.dim_n}: {sorted(bad)}")
        object.__setattr__(self, "values", {k: F(v) for k, v in self.values.items()})

    def __getitem__(self, label: str) -> Fraction:
        return self.values[label]


def _dot(coeffs, vector) -> Fraction:
    return sum((F(a) * F(b) for a, b in zip(coeffs, vector)), F(0))


def chern_from_chi_dim6(chi: ChiVector) -> ChernData:
    if chi.dim_n != 3:
        raise DimensionError(f"chi_y inversion is only available in dim_n=3, got {chi.dim_n}")
    head = chi.chi[:3]
    return ChernData.of(3, *(_dot(row, head) for row in CHI_TO_CHERN_DIM6))


def chern_from_betti_dim4(b: BettiData) -> ChernData:
    return ChernData.of(2, 736 + 4 * b.b2 - b.b3, 48 + 12 * b.b2 - 3 * b.b3)


def rw_from_chern(c: ChernData) -> RWValues:
    if c.dim_n not in RW_FORMULAS:
        raise DimensionError("no closed Chern formula in dim >= 8")
    v = c.vector()
    return RWValues(c.dim_n, {label: _dot(coeffs, v) for label, coeffs in RW_FORMULAS[c.dim_n].items()})


def rw_from_betti_dim4(b: BettiData) -> RWValues:
    return RWValues(
        2,
        {
            "Theta^2": F(3968 - 16 * b.b2 + 4 * b.b3),
            "Theta_2": F(-512 + 16 * b.b2 - 4 * b.b3),
        },
    )


def ahat_sqrt_integral(c: ChernData) -> Fraction:
    if c.dim_n not in AHAT_SQRT:
        raise DimensionError(f"A-hat square root not tabulated for dim_n={c.dim_n}")
    return _dot(AHAT_SQRT[c.dim_n], c.vector())


def b_theta_n_from_ahat(ahat: Fraction, dim_n: int) -> Fraction:
    return F(ahat) * 48**dim_n * factorial(dim_n)


def lemma_six_check(rw: RWValues) -> Fraction:
    """``b_{Theta^3} + 3 b_{Theta Theta_2}``; equals 2^12 3^4 on every irreducible example."""
    if rw.dim_n != 3:
        raise DimensionError("the Theta^3 + 3 ThetaTheta_2 identity applies to dim_n=3 only")
    return rw["Theta^3"] + 3 * rw["ThetaTheta_2"]


def theta_theta2_relation(b_theta3) -> Fraction:
    """``b_{Theta Theta_2} = 2^12 3^3 - b_{Theta^3}/3``."""
    return F(2**12 * 3**3) - F(b_theta3) / 3


def b2_inequality_margin(dim_n: int, b_theta_n, b_mixed, b2: int) -> Fraction:
    """``b_{Theta^n} + (b2 + 2n - 2) b_{Theta^{n-2} Theta_2}``; non-negative by the b2 inequality."""
    return F(b_theta_n) + (b2 + 2 * dim_n - 2) * F(b_mixed)


def fujiki_q_constants(lam, b2: int, dim_n: int) -> tuple[Fraction, Fraction]:
    """``(lambda_q, lambda_{q^2})`` from the Fujiki constant and b2."""
    if dim_n < 2:
        raise DimensionError("lambda_{q^2} needs dim_n >= 2")
    lam = F(lam)
    a, b = b2 + 2 * dim_n - 2, b2 + 2 * dim_n - 4
    return lam * F(a, 2 * dim_n - 1), lam * F(a * b, (2 * dim_n - 1) * (2 * dim_n - 3))


# -- Todd class in degree four ------------------------------------------------

TD4 = (F(3, 720), F(-1, 720))  # coefficients of (c2^2, c4)
TD_HALF_4 = AHAT_SQRT[2]  # (td^{1/2})_4 agrees with the A-hat root when c1 = 0
TD_HALF_2 = AHAT_SQRT[1][0]  # (td^{1/2})_2 = c2/24


def todd4_identity_check(td4=TD4, half4=TD_HALF_4, half2=TD_HALF_2) -> bool:
    """``td_4 = 2 (td^{1/2})_4 + (td^{1/2})_2^2`` coefficientwise, and
    ``7c2^2 - 4c4 = 5c2^2 + (2c2^2 - 4c4)`` with the last term being ``s_4``.
    """
    rhs = (2 * F(half4[0]) + F(half2) ** 2, 2 * F(half4[1]))
    if tuple(map(F, td4)) != rhs:
        return False
    seven_four = tuple(F(c) * 5760 for c in half4)
    s4 = power_sum_classes(4)[4]
    rest = (seven_four[0] - s4.get((2, 2), 0), seven_four[1] - s4.get((4,), 0))
    return rest == (F(5), F(0))


def power_sum_classes(degree: int) -> dict[int, dict[tuple, Fraction]]:
    """``s_k = k! ch_k`` as polynomials in Chern classes, via Newton's identities.

    Odd Chern classes are set to zero. A polynomial is a dict from sorted
    tuples of Chern-class subscripts (``(2, 2)`` for c2^2) to coefficients.
    """

    def c(k):
        return {(k,): F(1)} if k % 2 == 0 and k > 0 else {}

    def mul(p, q):
        out = {}
        for m1, a in p.items():
            for m2, b in q.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, F(0)) + a * b
        return {m: v for m, v in out.items() if v}

    def add(p, q, scale=F(1)):
        out = dict(p)
        for m, v in q.items():
            out[m] = out.get(m, F(0)) + scale * v
        return {m: v for m, v in out.items() if v}

    s: dict[int, dict] = {}
    for k in range(1, degree + 1):
        # s_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i s_{k-i} + (-1)^{k-1} k c_k
        acc = {m: (-1) ** (k - 1) * k * v for m, v in c(k).items()}
        for i in range(1, k):
            acc = add(acc, mul(c(i), s[k - i]), F((-1) ** (i - 1)))
        s[k] = acc
    return s


def s_class_consistency() -> bool:
    """Check ``s2 = -2c2``, ``s4 = 2c2^2 - 4c4`` and their match with the dim-4 formulas:
    ``b_{Theta^2} + 2 b_{Theta_2} = s2^2`` and ``(5/2) b_{Theta_2} = -s4``.
    """
    s = power_sum_classes(4)
    if s[2] != {(2,): F(-2)} or s[4] != {(2, 2): F(2), (4,): F(-4)}:
        return False
    th2, mixed = RW_FORMULAS[2]["Theta^2"], RW_FORMULAS[2]["Theta_2"]
    s2_squared = (F(4), F(0))
    minus_s4 = (-s[4][(2, 2)], -s[4][(4,)])
    lhs1 = tuple(a + 2 * b for a, b in zip(th2, mixed))
    lhs2 = tuple(F(5, 2) * b for b in mixed)
    return lhs1 == s2_squared and lhs2 == minus_s4
