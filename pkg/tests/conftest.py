from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from ncresidue.pipeline import compute_all
from ncresidue.report import build_report
from ncresidue.ratfunc import PoleLimitedRational
from ncresidue.scalars import GaussianRational

settings.register_profile("default", max_examples=50, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def all_results():
    """Every case under the default reading and route, computed once."""
    return compute_all()


@pytest.fixture(scope="session")
def full_doc():
    return build_report()


def rand_gauss(rng: random.Random, span: int = 9) -> GaussianRational:
    return GaussianRational(Fraction(rng.randint(-span, span), rng.randint(1, 5)),
                            Fraction(rng.randint(-span, span), rng.randint(1, 5)))


def rand_rational(rng: random.Random, *, max_pole: int = 7, max_deg: int = 12,
                  gap: int = 1) -> PoleLimitedRational:
    """Random ``N/((x-i)^p (x+i)^q)`` with ``deg N <= p + q - gap``."""
    while True:
        p, q = rng.randint(0, max_pole), rng.randint(0, max_pole)
        top = min(max_deg, p + q - gap)
        if top < 0:
            continue
        deg = rng.randint(0, top)
        f = PoleLimitedRational([rand_gauss(rng) for _ in range(deg + 1)], p, q)
        if not f.is_zero():
            return f
