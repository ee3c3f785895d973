import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from srfrob import MonomialIdeal  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def squarefree_ideals(draw, min_n=1, max_n=5, proper=True):
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    masks = draw(st.lists(st.integers(1, full), min_size=1, max_size=6))
    return MonomialIdeal.from_supports(n, masks)


@st.composite
def monomial_ideals(draw, n=None, max_n=4, max_exp=4, max_gens=4):
    n = n or draw(st.integers(1, max_n))
    gens = draw(
        st.lists(st.tuples(*[st.integers(0, max_exp)] * n), min_size=1, max_size=max_gens)
    )
    return MonomialIdeal(n, gens)
