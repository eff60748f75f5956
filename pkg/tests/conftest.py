from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wittbialg import Q, Tensor, WittElement, tensor_of
from wittbialg.scalars import AlgebraConfig
from wittbialg.sampling import Sampler

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# desk-scale rationals: |numerator| <= 3, denominator <= 2
small_q = st.builds(lambda p, q: Q(p, q), st.integers(-3, 3), st.integers(1, 2))
ranks = st.integers(1, 3)


def points(n):
    return st.tuples(*[small_q] * n)


def torus_vectors(n):
    return points(n).filter(any)


def elements(n, max_terms=2):
    return st.dictionaries(points(n), torus_vectors(n), min_size=1, max_size=max_terms).map(
        lambda d: WittElement(n, d)
    )


def tensors(n, arity, max_terms=2):
    term = st.tuples(small_q.filter(bool), st.lists(elements(n, 1), min_size=arity, max_size=arity))

    def build(terms):
        out = Tensor.zero(n, arity)
        for c, fs in terms:
            out = out + c * tensor_of(*fs)
        return out

    return st.lists(term, min_size=1, max_size=max_terms).map(build)


def alternating(n):
    return st.tuples(elements(n, 1), elements(n, 1)).map(
        lambda ab: tensor_of(*ab) - tensor_of(ab[1], ab[0])
    )


@st.composite
def rank_and(draw, *makers):
    n = draw(ranks)
    return (n,) + tuple(draw(m(n)) for m in makers)


@pytest.fixture
def sampler():
    return lambda n, seed=0: Sampler(AlgebraConfig(n, seed=seed))


def F(*xs):
    return tuple(Q(Fraction(x)) if isinstance(x, str) else Q(x) for x in xs)
