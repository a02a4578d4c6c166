import itertools
import random

import pytest

from ncresidue.clifford import (
    DIM,
    CliffordElement,
    CliffordIndexError,
    clifford_from_generator,
)
from ncresidue.scalars import GaussianRational

GENS = [(k, i) for k in ("c", "cbar") for i in range(1, DIM + 1)]


def gen(kind, i):
    return clifford_from_generator(kind, i)


@pytest.mark.parametrize("a,b", list(itertools.product(GENS, repeat=2)))
def test_anticommutation_exhaustive(a, b):
    x, y = gen(*a), gen(*b)
    anti = x * y + y * x
    if a == b:
        square = -1 if a[0] == "c" else 1
        assert anti == CliffordElement.scalar(2 * square)
    else:
        assert anti.is_zero()


def test_trace_of_identity():
    assert CliffordElement.identity().trace() == GaussianRational(8)


def _random_element(rng: random.Random, n_terms: int = 4) -> CliffordElement:
    out = CliffordElement()
    for _ in range(n_terms):
        word = CliffordElement.identity()
        for _ in range(rng.randint(0, 4)):
            word = word * gen(*rng.choice(GENS))
        out = out + word * GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5))
    return out


def test_trace_cyclicity_random_pairs():
    rng = random.Random(7)
    for _ in range(10_000):
        a, b = _random_element(rng, 2), _random_element(rng, 2)
        assert (a * b).trace() == (b * a).trace()


def test_bar_trace_sums():
    # off-diagonal pairs trace to zero, the diagonal to 8 each
    off = sum(((gen("cbar", s) * gen("cbar", t)).trace() for s in range(1, 7) for t in range(1, 7) if s != t),
              GaussianRational(0))
    diag = sum(((gen("cbar", t) * gen("cbar", t)).trace() for t in range(1, 7)), GaussianRational(0))
    assert off == GaussianRational(0)
    assert diag == GaussianRational(48)


def test_mixed_traces():
    n = DIM
    for k in range(1, 7):
        assert (gen("cbar", n) * gen("cbar", k)).trace() == GaussianRational(0)
        assert (gen("cbar", n) * gen("cbar", k) * gen("cbar", n) * gen("cbar", k)).trace() == GaussianRational(-8)
        for l in range(1, 7):
            assert (gen("cbar", n) * gen("cbar", k) * gen("c", n) * gen("c", l)).trace() == GaussianRational(0)


def test_index_out_of_range():
    with pytest.raises(CliffordIndexError):
        gen("c", 8)
    with pytest.raises(CliffordIndexError):
        gen("cbar", 0)
