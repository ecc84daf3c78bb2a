import hypothesis.strategies as st
from hypothesis import settings

from bicyclic.core import Element, Variant

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ints = st.integers(min_value=-40, max_value=40)
elements = st.builds(Element, ints, ints)
variants_ = st.builds(Variant, st.integers(-6, 6), st.integers(-6, 6))
big_ints = st.integers(min_value=-(10**30), max_value=10**30)
big_elements = st.builds(Element, big_ints, big_ints)
