from __future__ import annotations

from math import gcd

from hypothesis import assume, strategies as st

from blowups import WeightVector


@st.composite
def weight_vectors(draw, min_d=2, max_d=5, max_index=40):
    """Primitive positive weight vectors with bounded index."""
    d = draw(st.integers(min_d, max_d))
    vals = draw(st.lists(st.integers(1, max_index), min_size=d, max_size=d))
    g = gcd(*vals)
    vals = tuple(v // g for v in vals)
    assume(2 <= sum(vals) <= max_index + 1)
    return WeightVector(vals)


EPSILONS = ("1", "1/2", "1/3")
