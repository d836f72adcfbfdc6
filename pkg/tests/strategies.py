from hypothesis import strategies as st

from markov_quiver.core import GENERATORS, Triple

BIG = 10**50


def triples(lo=-BIG, hi=BIG):
    return st.builds(Triple, st.integers(lo, hi), st.integers(lo, hi), st.integers(lo, hi))


def small_triples(lo=0, hi=30):
    return triples(lo, hi)


words = st.lists(st.sampled_from(GENERATORS), max_size=30).map(tuple)
