"""Monte-Carlo critical-point fraction and the chi benchmark harness."""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .curvature import gauss_bonnet_report
from .fastchi import fast_euler
from .generators import FamilySpec, generate
from .graph import CensusBudgetExceeded, Graph, clique_census
from .morse import index_report, random_morse

BENCH_COLUMNS = ("family", "n", "p_or_param", "seed", "method", "chi", "wall_time_us")
METHODS = ("cliques", "gaussbonnet", "hopf", "fast")


@dataclass
class ExperimentResult:
    trials: int
    critical: int
    sampled: int
    trial_seeds: list[tuple[int, int]] = field(default_factory=list)
    per_trial: list[Fraction] = field(default_factory=list)

    @property
    def critical_fraction(self) -> Fraction:
        return Fraction(self.critical, self.sampled) if self.sampled else Fraction(0)

    @property
    def half_width(self) -> float:
        """95% normal-approximation half-width from the per-trial fractions.

        Vertices of one graph are not independent, so the spread is taken over
        trials rather than over pooled vertices.
        """
        if self.trials < 2:
            return 0.0
        sd = statistics.stdev(float(x) for x in self.per_trial)
        return 1.96 * sd / math.sqrt(self.trials)


def mc_critical(n: int, p: float, trials: int, seed) -> ExperimentResult:
    """Pooled fraction of critical vertices over random (graph, Morse function) pairs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    master = random.Random(seed)
    res = ExperimentResult(trials, 0, 0)
    for _ in range(trials):
        gs, fs = master.getrandbits(63), master.getrandbits(63)
        G = generate(FamilySpec("erdos_renyi", (n,), p, gs), check=False)
        c = sum(index_report(G, random_morse(G, fs)).critical)
        res.critical += c
        res.sampled += n
        res.trial_seeds.append((gs, fs))
        res.per_trial.append(Fraction(c, n) if n else Fraction(0))
    return res


def run_method(G: Graph, method: str, seed=0, budget: int | None = None) -> int | None:
    """chi of ``G`` by ``method``; ``None`` if the census ran out of budget."""
    if method == "cliques":
        try:
            return clique_census(G, budget).euler
        except CensusBudgetExceeded:
            return None
    if method == "gaussbonnet":
        total = gauss_bonnet_report(G, verify=False).total
        return int(total) if total.denominator == 1 else total
    if method == "hopf":
        return index_report(G, random_morse(G, seed)).index_sum
    if method == "fast":
        return fast_euler(G)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def bench(
    specs: Iterable[FamilySpec],
    methods: Sequence[str] = METHODS,
    budget: int | None = None,
    morse_seed=0,
) -> list[dict]:
    """One row per (instance, method). A census over budget leaves ``chi`` empty."""
    rows = []
    for spec in specs:
        G = generate(spec)
        n = G.order
        if spec.name == "erdos_renyi":
            param = repr(spec.p)
        else:
            param = "x".join(map(str, spec.params))
        for method in methods:
            t0 = time.perf_counter()
            chi = run_method(G, method, morse_seed, budget)
            dt = (time.perf_counter() - t0) * 1e6
            rows.append(
                {
                    "family": spec.name,
                    "n": n,
                    "p_or_param": param,
                    "seed": "" if spec.seed is None else spec.seed,
                    "method": method,
                    "chi": "" if chi is None else chi,
                    "wall_time_us": f"{dt:.0f}",
                }
            )
    return rows


def disagreements(rows: Sequence[dict]) -> list[tuple]:
    """Instances whose completed methods report different chi values."""
    groups: dict[tuple, set] = {}
    for r in rows:
        if r["chi"] == "":
            continue
        key = (r["family"], r["n"], r["p_or_param"], r["seed"])
        groups.setdefault(key, set()).add(r["chi"])
    return [k for k, vals in groups.items() if len(vals) > 1]
