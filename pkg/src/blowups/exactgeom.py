"""Exact lattice geometry for shrunk standard simplices.

Everything here is computed over exact rationals (`fractions.Fraction` on top
of Python's arbitrary-precision integers), so membership predicates are exact
and integer overflow cannot occur.  The central objects are:

* a primitive weight vector n with index V = sum(n) - 1,
* its generating point p = n/V, which generates the cyclic lattice
  Z^d + Z*p of order V over Z^d,
* the simplex obtained by shrinking the standard simplex
  Conv(0, e_1, ..., e_d) towards p by a factor eps in (0, 1].

The module enumerates lattice points of Z^d + Z*p inside the shrunk simplex
coset by coset (O(V * 2^d) candidates, independent of eps), and provides an
independent brute-force scan of the integer points of eps * Conv(e_1, ...,
e_d, n) in the original coordinates; the affine change of coordinates mapping
one picture to the other is `to_integer_lattice`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Sequence

Rat = Fraction


class MembershipClass(Enum):
    """Position of a point relative to a closed simplex."""

    OUTSIDE = "outside"
    INTERIOR = "interior"
    BOUNDARY_NONVERTEX = "boundary"
    VERTEX = "vertex"


class OracleCapExceeded(RuntimeError):
    """The brute-force box scan was asked for an index above its cap."""


@dataclass(frozen=True)
class WeightVector:
    """Primitive vector of nonnegative integer weights.

    The index V = sum(n) - 1 must be at least 1.  Zero entries are allowed at
    this level; operations that need a genuine blowup reject them separately.
    """

    n: tuple[int, ...]

    def __post_init__(self) -> None:
        n = tuple(int(v) for v in self.n)
        object.__setattr__(self, "n", n)
        if len(n) < 2:
            raise ValueError("need at least two weights")
        if any(v < 0 for v in n):
            raise ValueError(f"negative weight in {n}")
        if sum(n) < 2:
            raise ValueError(f"index of {n} would be {sum(n) - 1} < 1")
        if gcd(*n) != 1:
            raise ValueError(f"weights {n} are not primitive")

    @property
    def d(self) -> int:
        return len(self.n)

    @property
    def V(self) -> int:
        return sum(self.n) - 1

    @property
    def n_min(self) -> int:
        return min(self.n)

    def all_positive(self) -> bool:
        return all(v > 0 for v in self.n)

    def sorted(self) -> "WeightVector":
        return WeightVector(tuple(sorted(self.n)))


@dataclass(frozen=True)
class GeneratingPoint:
    """The point p = n/V whose coset lattice Z^d + Z*p has order V over Z^d."""

    weights: WeightVector

    @property
    def d(self) -> int:
        return self.weights.d

    @property
    def V(self) -> int:
        return self.weights.V

    @property
    def p(self) -> tuple[Fraction, ...]:
        V = self.V
        return tuple(Fraction(v, V) for v in self.weights.n)


@dataclass(frozen=True)
class ShrunkSimplex:
    """The standard simplex shrunk towards p by a rational factor eps.

    Vertices: the apex (1-eps)*p and, per axis i, p + eps*(e_i - p).
    eps = 1 reproduces the standard simplex Conv(0, e_1, ..., e_d).
    """

    point: GeneratingPoint
    eps: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        eps = Fraction(self.eps)
        object.__setattr__(self, "eps", eps)
        if not 0 < eps <= 1:
            raise ValueError(f"eps must be a rational in (0, 1], got {eps}")

    @property
    def d(self) -> int:
        return self.point.d

    @property
    def V(self) -> int:
        return self.point.V

    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        """Apex first, then the d axis vertices."""
        p = self.point.p
        apex = tuple((1 - self.eps) * pi for pi in p)
        axis = [
            tuple(apex[j] + (self.eps if j == i else 0) for j in range(self.d))
            for i in range(self.d)
        ]
        return (apex, *axis)


@dataclass(frozen=True)
class LatticeWitness:
    """A point k*p + z of the coset lattice, with its membership class.

    `z` is the integer translate applied to the fractional representative of
    k*p in [0,1)^d, so `point` is congruent to k*p modulo Z^d.
    """

    k: int
    z: tuple[int, ...]
    point: tuple[Fraction, ...]
    membership: MembershipClass


def frac_point(n: WeightVector, k: int) -> tuple[Fraction, ...]:
    """Fractional parts of k*n/V: the canonical coset representative in [0,1)^d."""
    V = n.V
    if not 1 <= k <= V - 1:
        raise ValueError(f"k={k} outside [1, {V - 1}]")
    return tuple(Fraction((k * v) % V, V) for v in n.n)


def classify_point(x: Sequence[Rat | int], s: ShrunkSimplex) -> MembershipClass:
    """Classify x against s using exact barycentric coordinates."""
    if len(x) != s.d:
        raise ValueError(f"point has dimension {len(x)}, simplex has {s.d}")
    e = s.eps
    p = s.point.p
    y = [(Fraction(xi) - (1 - e) * pi) / e for xi, pi in zip(x, p)]
    coords = [1 - sum(y), *y]
    return _barycentric_class(coords, 1)


def _barycentric_class(coords: Sequence, total) -> MembershipClass:
    # coords are the d+1 barycentric coordinates scaled so they sum to `total`
    if any(c < 0 for c in coords):
        return MembershipClass.OUTSIDE
    if any(c == total for c in coords):
        return MembershipClass.VERTEX
    if all(c > 0 for c in coords):
        return MembershipClass.INTERIOR
    return MembershipClass.BOUNDARY_NONVERTEX


def _translate_range(num: int, den: int, span: int) -> range:
    """Integers z with num/den <= z <= (num + span)/den, for den > 0."""
    return range(-((-num) // den), (num + span) // den + 1)


def lattice_points_in_shrunk_simplex(
    s: ShrunkSimplex, mode: str = "closed"
) -> list[LatticeWitness]:
    """All points of Z^d + Z*p in the open interior or the closed simplex.

    For each residue k in [0, V-1] the fractional representative of k*p is
    translated per axis by the at most two integers that land the coordinate
    inside [(1-eps)*p_i, (1-eps)*p_i + eps].  Witnesses come out ordered by
    (k, z) with z lexicographic, which downstream code relies on.
    """
    if mode not in ("open", "closed"):
        raise ValueError(f"mode must be 'open' or 'closed', got {mode!r}")
    n = s.point.weights.n
    V, d = s.V, s.d
    a, b = s.eps.numerator, s.eps.denominator
    scale = a * V
    den = b * V
    out: list[LatticeWitness] = []
    for k in range(V):
        fr = [(k * ni) % V for ni in n]
        axes = []
        for j in range(d):
            # lower bound minus fractional part: ((b-a)*n_j - b*f_j) / (b*V)
            r = _translate_range((b - a) * n[j] - b * fr[j], den, scale)
            if not r:
                break
            axes.append(r)
        else:
            for z in itertools.product(*axes):
                ybar = [
                    b * (fj + V * zj) - (b - a) * nj
                    for fj, zj, nj in zip(fr, z, n)
                ]
                cls = _barycentric_class([scale - sum(ybar), *ybar], scale)
                if cls is MembershipClass.OUTSIDE:
                    continue
                if mode == "open" and cls is not MembershipClass.INTERIOR:
                    continue
                point = tuple(
                    Fraction(fj + V * zj, V) for fj, zj in zip(fr, z)
                )
                out.append(LatticeWitness(k, tuple(z), point, cls))
    return out


def brute_force_lattice_points(
    n: WeightVector, eps: Rat | int = 1, cap: int = 60
) -> list[tuple[tuple[int, ...], MembershipClass]]:
    """Integer points of the closed simplex eps * Conv(e_1, ..., e_d, n).

    Scans the integer bounding box and tests exact barycentric membership in
    the original coordinates; this is the independent oracle for the coset
    enumeration above.  Cost grows like eps^d * V, hence the index cap.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError(f"eps must be a rational in (0, 1], got {eps}")
    V, d = n.V, n.d
    if V > cap:
        raise OracleCapExceeded(f"index {V} exceeds the oracle cap {cap}")
    a, b = eps.numerator, eps.denominator
    scale = a * V
    his = [(a * max(1, ni)) // b for ni in n.n]
    found = []
    for x in itertools.product(*(range(h + 1) for h in his)):
        mu = b * sum(x) - a
        if mu < 0:
            continue
        lam = [b * V * xj - mu * nj for xj, nj in zip(x, n.n)]
        cls = _barycentric_class([*lam, mu], scale)
        if cls is not MembershipClass.OUTSIDE:
            found.append((x, cls))
    return found


def to_integer_lattice(
    x: Sequence[Rat | int], n: WeightVector
) -> tuple[Fraction, ...]:
    """Affine map fixing each e_i and sending the generating point to 0.

    Carries Z^d + Z*p bijectively onto Z^d and the shrunk simplex onto
    eps * Conv(e_1, ..., e_d, n); the origin goes to n.
    """
    t = 1 - sum(Fraction(v) for v in x)
    return tuple(Fraction(v) + t * ni for v, ni in zip(x, n.n))
