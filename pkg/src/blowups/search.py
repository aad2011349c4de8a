"""Exhaustive census of weighted blowups by index.

Candidates are enumerated one representative per permutation class (weights
nondecreasing) since the classification flags are permutation invariant.
Work is partitioned by index V, which is embarrassingly parallel; results are
merged in V order so the output is identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterator

from .classifier import classify, is_canonical_fast, is_terminal_fast
from .exactgeom import Rat, WeightVector

VERDICTS = ("terminal", "canonical", "eps-lt", "eps-lc")


class BudgetExceeded(RuntimeError):
    """Projected candidate count is above the census budget."""


@dataclass(frozen=True)
class CensusQuery:
    d: int
    v_max: int
    v_min: int = 1
    eps: Fraction = Fraction(1)
    verdict: str = "terminal"
    min_weight: int | None = None
    budget: int = 10**8

    def __post_init__(self) -> None:
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.d < 2:
            raise ValueError("dimension must be at least 2")
        if not 1 <= self.v_min <= self.v_max:
            raise ValueError(f"empty index range [{self.v_min}, {self.v_max}]")
        if not 0 < self.eps <= 1:
            raise ValueError(f"eps must be in (0, 1], got {self.eps}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")
        if self.verdict in ("terminal", "canonical") and self.eps != 1:
            raise ValueError(f"verdict {self.verdict!r} means eps = 1")
        if self.min_weight is not None and self.min_weight < 1:
            raise ValueError("min_weight threshold must be >= 1")


@dataclass
class Histogram:
    """Counts of the smallest weight over a population of blowups."""

    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, key: int, amount: int = 1) -> None:
        if key < 1:
            raise ValueError("histogram keys are weights, hence >= 1")
        self.counts[key] = self.counts.get(key, 0) + amount

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


@dataclass(frozen=True)
class CensusHit:
    V: int
    weights: tuple[int, ...]
    n_min: int


@dataclass
class CensusResult:
    histogram: Histogram
    hits: list[CensusHit]


def enumerate_blowups(d: int, V: int) -> Iterator[WeightVector]:
    """Primitive nondecreasing positive weight vectors with index V, in lex order."""
    if d < 2 or V < 1:
        raise ValueError("need d >= 2 and V >= 1")

    def parts(prefix: tuple[int, ...], remaining: int, slots: int, lo: int):
        if slots == 1:
            if remaining >= lo:
                yield prefix + (remaining,)
            return
        for v in range(lo, remaining // slots + 1):
            yield from parts(prefix + (v,), remaining - v, slots - 1, v)

    for tup in parts((), V + 1, d, 1):
        if gcd(*tup) == 1:
            yield WeightVector(tup)


@lru_cache(maxsize=None)
def _partition_row(m_max: int, parts: int) -> tuple[int, ...]:
    # p(j, k) = p(j-1, k-1) + p(j-k, k), filled iteratively row by row
    prev = (1,) + (0,) * m_max
    for k in range(1, parts + 1):
        cur = [0] * (m_max + 1)
        for j in range(k, m_max + 1):
            cur[j] = prev[j - 1] + cur[j - k]
        prev = tuple(cur)
    return prev


def partition_count(m: int, parts: int) -> int:
    """Number of partitions of m into exactly `parts` positive parts."""
    if parts == 0:
        return 1 if m == 0 else 0
    if m < parts:
        return 0
    return _partition_row(m, parts)[m]


def projected_candidates(q: CensusQuery) -> int:
    row = _partition_row(q.v_max + 1, q.d)
    return sum(row[V + 1] for V in range(q.v_min, q.v_max + 1))


def _predicate(q: CensusQuery) -> Callable[[WeightVector], bool]:
    want_terminal = q.verdict in ("terminal", "eps-lt")
    if q.eps == 1:
        return is_terminal_fast if want_terminal else is_canonical_fast
    if want_terminal:
        return lambda w: classify(w, q.eps).eps_log_terminal
    return lambda w: classify(w, q.eps).eps_log_canonical


def _census_block(args: tuple[CensusQuery, int]) -> tuple[int, dict[int, int], list[CensusHit]]:
    q, V = args
    passes = _predicate(q)
    counts: dict[int, int] = {}
    hits: list[CensusHit] = []
    for w in enumerate_blowups(q.d, V):
        if passes(w):
            m = w.n_min
            counts[m] = counts.get(m, 0) + 1
            if q.min_weight is None or m >= q.min_weight:
                hits.append(CensusHit(V, w.n, m))
    return V, counts, hits


def run_census(q: CensusQuery, workers: int = 1) -> CensusResult:
    """Classify every candidate in the index range and aggregate smallest weights.

    The hit list contains every passing vector meeting the min-weight filter,
    sorted by (V, lex).  Output is bit-identical for any worker count.
    """
    # closed-form pre-check for absurd ranges, where even counting exactly
    # would be slow: p_d(V+1) >= floor((V+3-d)/2), so the cumulative count
    # grows at least quadratically in v_max
    if q.v_max > 10**6:
        lo = max(q.v_min, q.d)
        span = q.v_max - lo + 1
        lower = ((lo + q.v_max) * span // 2 + (2 - q.d) * span) // 2
        if span > 0 and lower > q.budget:
            raise BudgetExceeded(
                f"at least {lower} candidates exceed budget {q.budget}"
            )
    projected = projected_candidates(q)
    if projected > q.budget:
        raise BudgetExceeded(
            f"projected {projected} candidates exceed budget {q.budget}"
        )
    tasks = [(q, V) for V in range(q.v_min, q.v_max + 1)]
    if workers <= 1:
        blocks = [_census_block(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_census_block, tasks, chunksize=1))
    hist = Histogram()
    hits: list[CensusHit] = []
    for _, counts, block_hits in blocks:  # blocks arrive in V order
        for key, c in sorted(counts.items()):
            hist.add(key, c)
        hits.extend(block_hits)
    return CensusResult(hist, hits)


@dataclass(frozen=True)
class FamilySlotReport:
    value: int
    status: str  # "ok" or "imprimitive"
    weights: tuple[int, ...] | None
    eps_log_terminal: bool | None
    eps_log_canonical: bool | None
    n_min: int | None


def verify_family(
    template: tuple[int | None, ...],
    slot_values: Iterator[int],
    eps: Rat | int = 1,
) -> list[FamilySlotReport]:
    """Classify a one-parameter family of weight vectors.

    `template` holds positive weights with exactly one free slot (None).
    Imprimitive fills are flagged and skipped, not fatal.
    """
    eps = Fraction(eps)
    slots = [i for i, v in enumerate(template) if v is None]
    if len(slots) != 1:
        raise ValueError("template must have exactly one free slot")
    if any(v is not None and v < 1 for v in template):
        raise ValueError("fixed template weights must be positive")
    slot = slots[0]
    rows: list[FamilySlotReport] = []
    for value in slot_values:
        if value < 1:
            raise ValueError(f"slot value {value} is not positive")
        filled = tuple(value if i == slot else v for i, v in enumerate(template))
        if gcd(*filled) != 1:
            rows.append(FamilySlotReport(value, "imprimitive", None, None, None, None))
            continue
        w = WeightVector(filled)
        if eps == 1:
            terminal = is_terminal_fast(w)
            canonical = terminal or is_canonical_fast(w)
        else:
            verdict = classify(w, eps)
            terminal = verdict.eps_log_terminal
            canonical = verdict.eps_log_canonical
        rows.append(
            FamilySlotReport(value, "ok", filled, terminal, canonical, w.n_min)
        )
    return rows
