"""Terminal / canonical tests for weighted blowups of affine space.

A blowup with positive primitive weights n is eps-log terminal exactly when
the shrunk simplex is empty with respect to the coset lattice Z^d + Z*p
(p = n/V), and eps-log canonical exactly when it is hollow.  `classify` runs
the geometric test; `is_terminal_fast` and `is_canonical_fast` are eps = 1
shortcuts on fractional-part sums whose agreement with `classify` is enforced
by the test suite before any caller is allowed to rely on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactgeom import (
    GeneratingPoint,
    LatticeWitness,
    MembershipClass,
    Rat,
    ShrunkSimplex,
    WeightVector,
    lattice_points_in_shrunk_simplex,
)


class ZeroWeightError(ValueError):
    """A zero weight is a degenerate blowup and is refused, not classified."""


@dataclass(frozen=True)
class SingularityClass:
    """Verdict of `classify`, with a refuting lattice point when one exists.

    An interior witness refutes eps-log canonical; a boundary (non-vertex)
    witness refutes eps-log terminal only.  The witness is None exactly when
    both flags are true.
    """

    eps: Fraction
    eps_log_terminal: bool
    eps_log_canonical: bool
    witness: LatticeWitness | None = None

    def __post_init__(self) -> None:
        if self.eps_log_terminal and not self.eps_log_canonical:
            raise ValueError("terminal implies canonical")


def _require_positive(n: WeightVector) -> None:
    if not n.all_positive():
        raise ZeroWeightError(f"weights {n.n} contain a zero entry")


def classify(n: WeightVector, eps: Rat | int = 1) -> SingularityClass:
    """Decide eps-log terminal / eps-log canonical for the blowup with weights n.

    Terminal means the shrunk simplex meets the coset lattice only in
    vertices; canonical means only in its boundary.  The witness choice is
    deterministic: smallest k, then lexicographically smallest translate.
    """
    _require_positive(n)
    eps = Fraction(eps)
    simplex = ShrunkSimplex(GeneratingPoint(n), eps)
    interior: LatticeWitness | None = None
    boundary: LatticeWitness | None = None
    for w in lattice_points_in_shrunk_simplex(simplex, "closed"):
        if w.membership is MembershipClass.INTERIOR:
            interior = w
            break  # witnesses arrive in (k, z) order; first hit is minimal
        if w.membership is MembershipClass.BOUNDARY_NONVERTEX and boundary is None:
            boundary = w
    canonical = interior is None
    terminal = canonical and boundary is None
    witness = interior if not canonical else (boundary if not terminal else None)
    return SingularityClass(eps, terminal, canonical, witness)


def is_terminal_fast(n: WeightVector) -> bool:
    """Terminality via fractional-part sums: sum_i {k*n_i/V} > 1 for all k.

    Integer form: sum_i (k*n_i mod V) > V for every k in [1, V-1].
    """
    _require_positive(n)
    V = n.V
    w = n.n
    for k in range(1, V):
        if sum((k * ni) % V for ni in w) <= V:
            return False
    return True


def is_canonical_fast(n: WeightVector) -> bool:
    """Canonicity shortcut at eps = 1.

    A residue class k can only put a lattice point in the open simplex when
    its fractional representative has all coordinates nonzero and coordinate
    sum below 1; a zero coordinate parks the whole class on the boundary.
    Hence: canonical iff for every k, some k*n_i vanishes mod V or
    sum_i (k*n_i mod V) >= V.
    """
    _require_positive(n)
    V = n.V
    w = n.n
    for k in range(1, V):
        res = [(k * ni) % V for ni in w]
        if 0 not in res and sum(res) < V:
            return False
    return True


def kawakita_form(n: WeightVector) -> bool:
    """Dimension-3 terminality normal form: weights (1, a, b) with gcd(a, b) = 1."""
    if n.d != 3:
        raise ValueError(f"normal form is for 3 weights, got {n.d}")
    _require_positive(n)
    a, b, c = sorted(n.n)
    return a == 1 and gcd(b, c) == 1
