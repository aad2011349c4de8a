"""The 46 one-parameter families of hollow 4-simplices and their weight bounds.

Each family is labelled by a zero-sum quintuple of affine-dependence
coefficients.  The 29 primitive families Q1-Q29 are constant in the index V;
the 17 non-primitive families N1-N17 add a correction vector V*r (with r of
denominator 2, 3, 4 or 6), written `+/- V*r` for N7-N17, where the sign
applies to the whole correction vector at once.

A blowup is extracted from a family instance at index V by distinguishing an
apex entry: if that entry is a unit mod V, scale the quintuple so the apex
becomes -1, drop it, and keep the residues of the remaining four entries in
[0, V-1]; they are blowup weights precisely when they add up to V + 1 (the
result is then validated to be positive and primitive).

A note on the ratio criterion (`check_ratio_lemma`): the underlying
one-dimensional bound caps the smallest weight of every blowup in the family,
and that is the reading implemented here; a stronger largest-weight phrasing
is sometimes attached to this criterion in the literature but is not what the
bound proves.  Similarly, `bound_subset` returns the modulus s itself as the
bound; sharper family-specific refinements (s - 1 for one known family) are
not generalised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .exactgeom import WeightVector


class DivisibilityError(ValueError):
    """The index V is incompatible with the family's correction denominators."""


@dataclass(frozen=True)
class Quintuple:
    """One family row: zero-sum base, per-V correction, optional joint sign."""

    label: str
    base: tuple[int, int, int, int, int]
    modifier: tuple[Fraction, ...]  # the '+' resolution; all zero for Q rows
    signed: bool  # True when the correction carries a +/- choice (N7-N17)

    @property
    def index(self) -> int:
        """Order of the family's group over its primitive part (1 for Q rows)."""
        return lcm(*(r.denominator for r in self.modifier))


def _q(label: str, base: tuple[int, ...]) -> Quintuple:
    return Quintuple(label, base, (Fraction(0),) * 5, False)


def _n(label: str, base, nums, den, signed) -> Quintuple:
    return Quintuple(label, base, tuple(Fraction(v, den) for v in nums), signed)


_TABLE: tuple[Quintuple, ...] = (
    _q("Q1", (9, 1, -2, -3, -5)),
    _q("Q2", (9, 2, -1, -4, -6)),
    _q("Q3", (12, 3, -4, -5, -6)),
    _q("Q4", (12, 2, -3, -4, -7)),
    _q("Q5", (9, 4, -2, -3, -8)),
    _q("Q6", (12, 1, -2, -3, -8)),
    _q("Q7", (12, 3, -1, -6, -8)),
    _q("Q8", (15, 4, -5, -6, -8)),
    _q("Q9", (12, 2, -1, -4, -9)),
    _q("Q10", (10, 6, -2, -5, -9)),
    _q("Q11", (15, 1, -2, -5, -9)),
    _q("Q12", (12, 5, -3, -4, -10)),
    _q("Q13", (15, 2, -3, -4, -10)),
    _q("Q14", (12, 1, -3, -4, -6)),
    _q("Q15", (14, 1, -3, -5, -7)),
    _q("Q16", (14, 3, -1, -7, -9)),
    _q("Q17", (15, 7, -3, -5, -14)),
    _q("Q18", (15, 1, -3, -5, -8)),
    _q("Q19", (15, 2, -1, -6, -10)),
    _q("Q20", (15, 4, -2, -5, -12)),
    _q("Q21", (18, 1, -4, -6, -9)),
    _q("Q22", (18, 2, -5, -6, -9)),
    _q("Q23", (18, 4, -1, -9, -12)),
    _q("Q24", (20, 1, -4, -7, -10)),
    _q("Q25", (20, 1, -3, -8, -10)),
    _q("Q26", (20, 3, -4, -9, -10)),
    _q("Q27", (20, 3, -1, -10, -12)),
    _q("Q28", (24, 1, -5, -8, -12)),
    _q("Q29", (30, 1, -6, -10, -15)),
    _n("N1", (6, 1, -2, -2, -3), (1, 0, 0, 1, 0), 2, False),
    _n("N2", (4, 3, -1, -2, -4), (0, 0, 0, 1, 1), 2, False),
    _n("N3", (8, 1, -2, -3, -4), (0, 0, 1, 0, 1), 2, False),
    _n("N4", (6, 3, -1, -2, -6), (1, 0, 0, 1, 0), 2, False),
    _n("N5", (8, 3, -1, -4, -6), (0, 0, 0, 1, 1), 2, False),
    _n("N6", (12, 1, -3, -4, -6), (0, 0, 0, 1, 1), 2, False),
    _n("N7", (3, 1, -1, -1, -2), (0, 0, 1, 2, 0), 3, True),
    _n("N8", (3, 2, -1, -1, -3), (0, 0, 0, 2, 1), 3, True),
    _n("N9", (3, 2, -1, -2, -2), (0, 0, 0, 1, 2), 3, True),
    _n("N10", (4, 2, -1, -1, -4), (1, 0, 0, 2, 0), 3, True),
    _n("N11", (6, 1, -2, -2, -3), (0, 0, 0, 2, 1), 3, True),
    _n("N12", (6, 1, -1, -2, -4), (0, 0, 2, 0, 1), 3, True),
    _n("N13", (4, 3, -1, -2, -4), (0, 0, 2, 0, 1), 3, True),
    _n("N14", (6, 3, -1, -2, -6), (0, 1, 0, 1, 1), 3, True),
    _n("N15", (3, 2, -1, -1, -3), (1, 0, 0, 1, 2), 4, True),
    _n("N16", (6, 1, -1, -3, -3), (0, 1, 0, 1, 2), 4, True),
    _n("N17", (3, 1, -1, -1, -2), (0, 1, 0, 1, 4), 6, True),
)

_BY_LABEL = {q.label: q for q in _TABLE}

APICES = (1, 2, 3, 4, 5)


def quintuple_table() -> tuple[Quintuple, ...]:
    """The 29 primitive and 17 non-primitive family rows."""
    return _TABLE


def get_quintuple(label: str) -> Quintuple:
    try:
        return _BY_LABEL[label]
    except KeyError:
        raise KeyError(f"unknown quintuple label {label!r}") from None


def sign_choices(q: Quintuple) -> tuple[int, ...]:
    """The correction signs to try for a row: (+1,) unless the row carries +/-."""
    return (1, -1) if q.signed else (1,)


def instantiate(label: str, V: int, sign: int = 1) -> tuple[int, ...]:
    """Evaluate base + sign*V*modifier; entries must come out integral."""
    q = get_quintuple(label)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if sign == -1 and not q.signed and q.index > 1:
        raise ValueError(f"{label} has a fixed correction sign")
    if V < 1:
        raise ValueError("index V must be positive")
    entries = []
    for b, r in zip(q.base, q.modifier):
        value = b + sign * V * r
        if value.denominator != 1:
            raise DivisibilityError(
                f"{label} needs V divisible by {r.denominator}, got V={V}"
            )
        entries.append(int(value))
    return tuple(entries)


def blowup_from_quintuple(
    label: str, apex: int, V: int, sign: int = 1
) -> WeightVector | None:
    """Extract the blowup of index V determined by a family row and apex.

    `apex` is the 1-based position of the entry that plays the origin role.
    Returns None when the apex entry is not a unit mod V or when the residue
    sum / positivity / primitivity checks fail; absence is a value here.
    """
    if apex not in APICES:
        raise ValueError(f"apex must be in {APICES}")
    a = instantiate(label, V, sign)
    al = a[apex - 1] % V
    if V == 1 or gcd(al, V) != 1:
        return None
    unit = (-pow(al, -1, V)) % V
    w = tuple((ai * unit) % V for i, ai in enumerate(a) if i != apex - 1)
    if sum(w) != V + 1:
        return None
    if min(w) < 1 or gcd(*w) != 1:
        return None
    return WeightVector(w)


def bound_dim1(
    label: str, apex: int, V: int | None = None, sign: int = 1
) -> Fraction:
    """Smallest-weight bound max_i(-q_i / q_apex) over the non-apex entries.

    The bound depends only on the line spanned by the base quintuple, so the
    base entries are used for every row; when V is given, the instantiated
    apex entry is additionally required to be nonzero (the line must not be
    parallel to the coordinate-sum hyperplane after deleting the apex).
    """
    if apex not in APICES:
        raise ValueError(f"apex must be in {APICES}")
    q = get_quintuple(label)
    a0 = q.base[apex - 1]
    if V is not None and instantiate(label, V, sign)[apex - 1] == 0:
        raise ValueError(f"{label} apex {apex} entry vanishes at V={V}")
    if a0 == 0:
        raise ValueError(f"{label} apex {apex} entry is zero")
    return max(
        Fraction(-b, a0) for i, b in enumerate(q.base) if i != apex - 1
    )


def bound_subset(point, J, s: int) -> int | None:
    """Congruence bound on a subset of weights.

    `point` is a generating point in any integer-translate representation
    (entries exact rationals), `J` a proper nonempty set of 1-based coordinate
    positions and `s` a positive integer.  If sum_{i in J} p_i - s * sum_i p_i
    is an integer then sum_{i in J} n_i <= s for the blowup weights n (unless
    every weight off J vanishes), and s is returned; otherwise None.
    """
    coords = tuple(Fraction(v) for v in point)
    J = sorted(set(J))
    if not J or len(J) >= len(coords) or not all(1 <= j <= len(coords) for j in J):
        raise ValueError(f"J must be a proper nonempty subset of 1..{len(coords)}")
    if s < 1:
        raise ValueError("s must be a positive integer")
    value = sum(coords[j - 1] for j in J) - s * sum(coords)
    return s if value.denominator == 1 else None


def check_ratio_lemma(label: str) -> bool:
    """True when max(-q_1/q_3, -q_5/q_2) < 7 on the (sorted) base entries.

    Rows passing this test only produce blowups with smallest weight at most
    6, whichever entry serves as apex.  N rows are evaluated on their base.
    """
    b = get_quintuple(label).base
    return max(Fraction(-b[0], b[2]), Fraction(-b[4], b[1])) < 7


def table_csv() -> str:
    """Audit export: label, base entries, correction numerators, denominator."""
    lines = ["label,q1,q2,q3,q4,q5,r1,r2,r3,r4,r5,den"]
    for q in _TABLE:
        den = q.index
        nums = [r.numerator * (den // r.denominator) for r in q.modifier]
        lines.append(
            ",".join([q.label, *map(str, q.base), *map(str, nums), str(den)])
        )
    return "\n".join(lines) + "\n"
