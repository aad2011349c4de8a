"""Blowup extraction from the classified sporadic empty 4-simplices.

Each record is a pair (V, b) with V the normalised volume and b five residues
mod V summing to 0: b/V are barycentric coordinates of a generator of the
simplex's lattice over Z^4.  A record yields up to five blowups, one per
entry of b that is a unit mod V, by scaling that entry to -1 and keeping the
remaining residues when they add up to V + 1.

The published classification has 2641 records and yields 4620 blowups when
counted per (record, apex) pair; that counting convention is used for the
histogram, with a deduplicated count (by index and sorted weights) reported
alongside.  Three records are embedded as fixtures so everything here is
testable without the external file.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from pathlib import Path

from .exactgeom import WeightVector
from .search import Histogram


class DatasetFormatError(ValueError):
    """A dataset line could not be parsed; carries the line number."""


class DatasetIntegrityError(ValueError):
    """A parsed record violates the residue-sum invariant."""


@dataclass(frozen=True)
class SporadicRecord:
    V: int
    b: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "b", b)
        if self.V < 1:
            raise ValueError("volume must be positive")
        if len(b) != 5:
            raise ValueError("need exactly five residues")
        if any(not 0 <= x < self.V for x in b):
            raise ValueError(f"residues {b} not reduced mod {self.V}")
        if sum(b) % self.V != 0:
            raise DatasetIntegrityError(
                f"record (V={self.V}, b={b}): residue sum {sum(b)} "
                f"is not divisible by {self.V}"
            )


# Known records: the smallest-weight maximiser (V=245), the largest-volume
# simplex (V=419, two blowups) and the V=37 member of the infinite family.
EMBEDDED_RECORDS: tuple[SporadicRecord, ...] = (
    SporadicRecord(245, (32, 41, 71, 102, 244)),
    SporadicRecord(419, (20, 57, 133, 210, 418)),
    SporadicRecord(37, (6, 10, 15, 7, 36)),
)


def parse_dataset(path: str | Path, strict: bool = False) -> list[SporadicRecord]:
    """Read records, one per line: V followed by five residues.

    Liberal mode accepts comma or whitespace separators, '#' comment lines and
    unreduced residues (they are reduced mod V).  Strict mode pins one
    normalisation: exactly six whitespace-separated fields, residues already
    in [0, V), no comments or blank lines.
    """
    records: list[SporadicRecord] = []
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not strict and (not line or line.startswith("#")):
            continue
        if strict:
            fields = line.split()
        else:
            fields = line.replace(",", " ").split()
        if len(fields) != 6:
            raise DatasetFormatError(
                f"line {lineno}: expected 6 fields, got {len(fields)}: {raw!r}"
            )
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise DatasetFormatError(
                f"line {lineno}: non-integer field in {raw!r}"
            ) from None
        V = values[0]
        if V < 1:
            raise DatasetFormatError(f"line {lineno}: volume {V} not positive")
        b = values[1:]
        if strict:
            if any(not 0 <= x < V for x in b):
                raise DatasetFormatError(
                    f"line {lineno}: residues {b} not reduced mod {V}"
                )
        else:
            b = [x % V for x in b]
        try:
            records.append(SporadicRecord(V, tuple(b)))
        except DatasetIntegrityError as exc:
            raise DatasetIntegrityError(f"line {lineno}: {exc}") from None
    return records


def blowups_from_record(r: SporadicRecord) -> list[tuple[int, WeightVector]]:
    """Blowups of a record, one per apex entry that is a unit mod V.

    Returns (apex, weights) pairs with apex 1-based.  Duplicates arising from
    record symmetries are retained; deduplicate at histogram level if needed.
    """
    V = r.V
    if V == 1:
        return []
    out: list[tuple[int, WeightVector]] = []
    for apex in range(1, 6):
        bl = r.b[apex - 1]
        if gcd(bl, V) != 1:
            continue
        unit = (-pow(bl, -1, V)) % V
        w = tuple((x * unit) % V for i, x in enumerate(r.b) if i != apex - 1)
        if sum(w) != V + 1:
            continue
        if min(w) < 1 or gcd(*w) != 1:
            raise DatasetIntegrityError(
                f"record (V={V}, b={r.b}) apex {apex}: residues {w} sum to "
                "V+1 but are not positive primitive weights"
            )
        out.append((apex, WeightVector(w)))
    return out


def record_from_weights(n: WeightVector) -> SporadicRecord:
    """Record whose apex-5 extraction returns exactly the given 4 weights."""
    if n.d != 4:
        raise ValueError("records encode 4-simplices; need 4 weights")
    if not n.all_positive():
        raise ValueError("weights must be positive")
    return SporadicRecord(n.V, (*n.n, n.V - 1))


def sporadic_histogram(records) -> Histogram:
    """Smallest-weight counts over all (record, apex) blowups."""
    hist = Histogram()
    for r in records:
        for _, w in blowups_from_record(r):
            hist.add(w.n_min)
    return hist


def sporadic_report(records) -> dict:
    """Histogram plus totals, the deduplicated count and the argmax record."""
    records = list(records)
    hist = Histogram()
    seen: set[tuple[int, tuple[int, ...]]] = set()
    best: tuple[int, SporadicRecord, WeightVector] | None = None
    for r in records:
        for _, w in blowups_from_record(r):
            hist.add(w.n_min)
            seen.add((r.V, tuple(sorted(w.n))))
            if best is None or w.n_min > best[0]:
                best = (w.n_min, r, w)
    report = {
        "records": len(records),
        "blowups_total": hist.total,
        "blowups_distinct": len(seen),
        "histogram": {str(k): v for k, v in hist.items()},
    }
    if best is not None:
        report["max_n_min"] = {
            "n_min": best[0],
            "record": {"V": best[1].V, "b": list(best[1].b)},
            "weights": list(best[2].n),
        }
    return report
