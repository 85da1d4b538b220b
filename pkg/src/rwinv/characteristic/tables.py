"""Golden Rozansky-Witten values of the known hyperkaehler examples and a
verifier that regenerates them through every available exact route.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .formulas import (
    LEMMA_SIX_VALUE,
    RW_LABELS,
    BettiData,
    ChernData,
    ahat_sqrt_integral,
    b2_inequality_margin,
    b_theta_n_from_ahat,
    chern_from_betti_dim4,
    chern_from_chi_dim6,
    lemma_six_check,
    rw_from_betti_dim4,
    rw_from_chern,
    theta_mixed_label,
    theta_power_label,
    theta_theta2_relation,
    RWValues,
)
from .hodge import OG6_DIAMOND, ChiVector, chi_from_hodge

F = Fraction


@dataclass(frozen=True)
class Example:
    name: str
    dim_n: int
    rw: RWValues
    b2: int | None = None
    betti: BettiData | None = None
    chern: ChernData | None = None
    chi: ChiVector | None = None
    provenance: str = ""


def _rw(dim_n, *values):
    return RWValues(dim_n, dict(zip(RW_LABELS[dim_n], values)))


# chi_y coefficients of the Hilbert cube of a K3 surface
S3_CHI = ChiVector(3, (4, -64, 508, -2048, 508, -64, 4))

GOLDEN: dict[str, Example] = {
    e.name: e
    for e in (
        Example("K3", 1, _rw(1, 48), b2=22, chern=ChernData.of(1, 24),
                provenance="c2 = chi_top = 24"),
        Example("S^[2]", 2, _rw(2, 3600, -144), b2=23, betti=BettiData(23, 0),
                provenance="b2/b3 side data; (23, 0) is the extremal Betti corner"),
        Example("K_2(A)", 2, _rw(2, 3888, -432), b2=7, betti=BettiData(7, 8),
                provenance="b2/b3 side data, cross-validated against the table via the affine Betti formulas"),
        Example("S^[3]", 3, _rw(3, 373248, -13824, 512), b2=23,
                chern=ChernData.of(3, 36800, 14720, 3200), chi=S3_CHI,
                provenance="Chern numbers obtained by inverting the three dimension-6 formulas at the table values"),
        Example("K_3(A)", 3, _rw(3, 442368, -36864, 2560), b2=7,
                chern=ChernData.of(3, 30208, 6784, 448),
                provenance="Chern numbers obtained by inverting the three dimension-6 formulas at the table values"),
        Example("OG6", 3, _rw(3, 442368, -36864, 3072), b2=8, chi=chi_from_hodge(OG6_DIAMOND),
                provenance="Chern numbers derived from the Hodge diamond"),
        Example("S^[4]", 4, _rw(4, 49787136, -1693440, 57600, 56448, -1824, 348),
                provenance="golden data only; no Chern formula in dimension 8"),
        Example("K_4(A)", 4, _rw(4, 64800000, -4320000, 288000, 240000, -12000, -1500),
                provenance="golden data only; no Chern formula in dimension 8"),
    )
}


@dataclass(frozen=True)
class Check:
    example: str
    quantity: str
    expected: object
    computed: object
    relation: str = "=="

    @property
    def ok(self) -> bool:
        e, c = self.expected, self.computed
        if self.relation == "<":
            return c < e
        if self.relation == ">":
            return c > e
        if self.relation == ">=":
            return c >= e
        return c == e


@dataclass
class TableReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, *args, **kw) -> None:
        self.checks.append(Check(*args, **kw))

    @property
    def mismatches(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        w = max(len(c.example) for c in self.checks)
        q = max(len(c.quantity) for c in self.checks)
        lines = []
        for c in self.checks:
            rel = "" if c.relation == "==" else f"{c.relation} "
            lines.append(
                f"{'PASS' if c.ok else 'FAIL'}  {c.example:<{w}}  {c.quantity:<{q}}  "
                f"expected {rel}{_fmt(c.expected)}  computed {_fmt(c.computed)}"
            )
        lines.append(f"{len(self.checks) - len(self.mismatches)}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "n_checks": len(self.checks),
            "n_mismatches": len(self.mismatches),
            "checks": [
                {
                    "example": c.example,
                    "quantity": c.quantity,
                    "relation": c.relation,
                    "expected": _fmt(c.expected),
                    "computed": _fmt(c.computed),
                    "ok": c.ok,
                }
                for c in self.checks
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(map(str, v)) + ")"
    return str(v)


def _sign_checks(report: TableReport, ex: Example) -> None:
    n = ex.dim_n
    report.add(ex.name, f"sign {theta_power_label(n)}", 0, ex.rw[theta_power_label(n)], ">")
    for k in range(2, n + 1):
        label = theta_mixed_label(n, k)
        report.add(ex.name, f"sign {label}", 0, ex.rw[label], "<" if k % 2 == 0 else ">")


def verify_known_tables() -> TableReport:
    """Regenerate every golden entry reachable by a formula and check the
    conjectured signs, the dimension-6 identities and the b2 inequality.

    Xi is deliberately left out of the sign checks, as is Theta_2^2, which is
    not of the form Theta^{n-k} Theta_k.
    """
    report = TableReport()
    for ex in GOLDEN.values():
        n = ex.dim_n
        routes = []
        if ex.betti is not None:
            routes.append(("betti", rw_from_betti_dim4(ex.betti)))
            chern = chern_from_betti_dim4(ex.betti)
            routes.append(("betti->chern", rw_from_chern(chern)))
        else:
            chern = ex.chern
        if ex.chi is not None:
            from_chi = chern_from_chi_dim6(ex.chi)
            if ex.chern is not None:
                report.add(ex.name, "chi -> chern", ex.chern.vector(), from_chi.vector())
            chern = from_chi
            routes.append(("chi->chern", rw_from_chern(from_chi)))
        if ex.chern is not None:
            routes.append(("chern", rw_from_chern(ex.chern)))
        for route, computed in routes:
            for label, value in computed.values.items():
                report.add(ex.name, f"{label} [{route}]", ex.rw[label], value)
        if chern is not None:
            top = b_theta_n_from_ahat(ahat_sqrt_integral(chern), n)
            report.add(ex.name, f"{theta_power_label(n)} [A-hat]", ex.rw[theta_power_label(n)], top)

        _sign_checks(report, ex)

        if n == 3:
            report.add(ex.name, "Theta^3 + 3 ThetaTheta_2", F(LEMMA_SIX_VALUE), lemma_six_check(ex.rw))
            report.add(ex.name, "ThetaTheta_2 relation", ex.rw["ThetaTheta_2"],
                       theta_theta2_relation(ex.rw["Theta^3"]))
        if n >= 2 and ex.b2 is not None:
            margin = b2_inequality_margin(n, ex.rw[theta_power_label(n)],
                                          ex.rw[theta_mixed_label(n, 2)], ex.b2)
            report.add(ex.name, "b2 inequality margin", 0, margin, ">=")
    return report
