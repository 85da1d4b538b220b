"""Seeded Monte Carlo sign experiment over random tau-real curvature tensors.

Trial ``i`` of a run with master seed ``s`` draws its tensor from
``numpy.random.Generator(PCG64(mix_seed(s, i)))``, so every record depends
only on ``(s, i, config)`` and never on how trials are scheduled.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import graphs
from .evaluate import eval_graph, eval_theta2_terms
from .tensor import check_dim, random_curvature, standard_symplectic

MASK64 = 0xFFFFFFFFFFFFFFFF
ZERO_THRESHOLD = 1e-12
DEFAULT_TRIALS = 500

GRAPHS = {
    "theta": graphs.THETA,
    "theta2": graphs.THETA2,
    "theta3": graphs.THETA3,
    "theta4": graphs.theta_k_graph(4),
    "cubic": graphs.CUBIC,
}
TERM_NAMES = ("theta2_term_ij_kl", "theta2_term_ik_lj", "theta2_term_il_jk")
ALL_GRAPHS = (*GRAPHS, "theta2_terms")
DEFAULT_GRAPHS = ("theta", "theta2", "theta3")

# graph name -> (k, expected sign); checked only when k <= dim_n
SIGN_RULES = {"theta": (1, 1), "theta2": (2, -1), "theta3": (3, 1), "theta4": (4, -1)}


def mix_seed(master_seed: int, index: int) -> int:
    """SplitMix64 finalizer applied to ``master_seed XOR index``.

    ``z = (x + 0x9E3779B97F4A7C15) mod 2^64``, then
    ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9``,
    ``z ^= z >> 27; z *= 0x94D049BB133111EB``, ``z ^= z >> 31``,
    every product reduced mod 2^64.
    """
    z = ((master_seed ^ index) + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class TrialError(RuntimeError):
    def __init__(self, index: int, cause: BaseException):
        super().__init__(f"trial {index}: {type(cause).__name__}: {cause}")
        self.index = index
        self.cause = cause


@dataclass(frozen=True)
class ExperimentConfig:
    dim_n: int
    trials: int = DEFAULT_TRIALS
    master_seed: int = 0
    entry_range: float = 1.0
    graphs: tuple[str, ...] = DEFAULT_GRAPHS
    output_path: str | None = None

    def __post_init__(self):
        check_dim(self.dim_n)
        if self.trials < 0:
            raise ValueError(f"trials must be non-negative, got {self.trials}")
        if not self.entry_range > 0:
            raise ValueError(f"entry range must be positive, got {self.entry_range}")
        object.__setattr__(self, "graphs", tuple(dict.fromkeys(self.graphs)))
        if not self.graphs:
            raise ValueError("at least one graph is required")
        unknown = [g for g in self.graphs if g not in ALL_GRAPHS]
        if unknown:
            raise ValueError(f"unknown graphs {unknown}; choose from {list(ALL_GRAPHS)}")
        object.__setattr__(self, "master_seed", int(self.master_seed) & MASK64)


@dataclass(frozen=True)
class TrialRecord:
    trial_index: int
    trial_seed: int
    dim_n: int
    values: dict
    imag_residues: dict
    wall_time: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        return {
            "trial": self.trial_index,
            "seed": str(self.trial_seed),
            "dim_n": self.dim_n,
            "values": self.values,
            "imag_residues": self.imag_residues,
            "wall_time_s": self.wall_time,
        }

    @classmethod
    def from_json(cls, obj: dict) -> TrialRecord:
        return cls(
            int(obj["trial"]),
            int(obj["seed"]),
            int(obj["dim_n"]),
            {k: float(v) for k, v in obj["values"].items()},
            {k: float(v) for k, v in obj["imag_residues"].items()},
            float(obj.get("wall_time_s", 0.0)),
        )


def run_trial(config: ExperimentConfig, index: int) -> TrialRecord:
    start = time.perf_counter()
    seed = mix_seed(config.master_seed, index)
    try:
        omega = random_curvature(config.dim_n, seed, config.entry_range)
        eps = standard_symplectic(config.dim_n)
        cache: dict = {}
        values, residues = {}, {}
        for name in config.graphs:
            if name == "theta2_terms":
                for term, v in zip(TERM_NAMES, eval_theta2_terms(omega, eps, cache)):
                    values[term], residues[term] = v.real, abs(v.imag)
                continue
            gv = eval_graph(GRAPHS[name], omega, eps, cache=cache)
            values[name], residues[name] = gv.real, gv.imag_residue
    except Exception as exc:
        raise TrialError(index, exc) from exc
    return TrialRecord(index, seed, config.dim_n, values, residues, time.perf_counter() - start)


def resolve_threads(threads: int | None = None) -> int:
    env = os.environ.get("RW_THREADS")
    if env:
        threads = int(env)
    return max(1, threads or 1)


def run_trials(config: ExperimentConfig, threads: int | None = None) -> list[TrialRecord]:
    """Run all trials; output is ordered by trial index and independent of ``threads``."""
    threads = resolve_threads(threads)
    indices = range(config.trials)
    if threads == 1 or config.trials < 2:
        return [run_trial(config, i) for i in indices]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda i: run_trial(config, i), indices))


@dataclass
class GraphStats:
    count_positive: int = 0
    count_negative: int = 0
    count_zero: int = 0
    min: float = math.inf
    max: float = -math.inf
    mean: float = 0.0

    def sign_of(self) -> int | None:
        """The common sign of all observed values, or None if mixed or zero."""
        total = self.count_positive + self.count_negative + self.count_zero
        if total and self.count_positive == total:
            return 1
        if total and self.count_negative == total:
            return -1
        return None


@dataclass
class SignSummary:
    n_records: int
    per_graph: dict[str, GraphStats]
    violations: dict[str, int] = field(default_factory=dict)

    @property
    def has_violation(self) -> bool:
        return any(self.violations.values())

    def to_json(self) -> dict:
        def clean(x):
            return None if math.isinf(x) else x

        return {
            "n_records": self.n_records,
            "graphs": {
                name: {**asdict(s), "min": clean(s.min), "max": clean(s.max)}
                for name, s in self.per_graph.items()
            },
            "violations": self.violations,
        }


def classify(value: float) -> int:
    if abs(value) <= ZERO_THRESHOLD:
        return 0
    return 1 if value > 0 else -1


def summarize(records: list[TrialRecord]) -> SignSummary:
    """Per-graph sign counts and extrema, plus conjectured-sign violations.

    A graph ``theta_k`` is checked only when ``k <= dim_n`` (above that it
    vanishes identically); its expected sign is ``(-1)^(k+1)`` and a value
    within the zero threshold counts as a violation.
    """
    stats: dict[str, GraphStats] = {}
    sums: dict[str, float] = {}
    violations: dict[str, int] = {}
    for rec in records:
        for name, v in rec.values.items():
            s = stats.setdefault(name, GraphStats())
            c = classify(v)
            if c > 0:
                s.count_positive += 1
            elif c < 0:
                s.count_negative += 1
            else:
                s.count_zero += 1
            s.min, s.max = min(s.min, v), max(s.max, v)
            sums[name] = sums.get(name, 0.0) + v
            rule = SIGN_RULES.get(name)
            if rule is not None and rule[0] <= rec.dim_n:
                violations.setdefault(name, 0)
                if c != rule[1]:
                    violations[name] += 1
    for name, s in stats.items():
        count = s.count_positive + s.count_negative + s.count_zero
        s.mean = sums[name] / count
    return SignSummary(len(records), stats, violations)


def write_jsonl(records: list[TrialRecord], path, summary: SignSummary | None = None) -> None:
    """One JSON object per trial; a final ``{"summary": ...}`` line when there are trials."""
    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json()) + "\n")
        if summary is not None and records:
            fh.write(json.dumps({"summary": summary.to_json()}) + "\n")


def read_jsonl(path) -> list[TrialRecord]:
    out = []
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        if "summary" in obj:
            continue
        out.append(TrialRecord.from_json(obj))
    return out
